#include <gtest/gtest.h>

#include <json.hpp>

#include "cli_cases.hpp"

using namespace alia::test;
using nlohmann::json;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("alia_cli_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += a + " ";
  return s;
}

json run_json(const std::vector<std::string>& args, int expected) {
  CliRun r = run_cli(args);
  EXPECT_EQ(r.exit_code, expected) << joined(args) << "\n" << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, ExitStatusTable) {
  auto tmp = temp_dir("table");
  for (const auto& c : cli_cases(tmp)) {
    CliRun r = run_cli(c.args);
    EXPECT_EQ(r.exit_code, c.exit_code) << joined(c.args) << "\n" << r.err;
    if (c.exit_code == 2) EXPECT_FALSE(r.err.empty()) << joined(c.args);
  }
}

TEST(Cli, Deterministic) {
  auto tmp = temp_dir("det");
  std::vector<CliCase> cases = cli_cases(tmp);
  std::vector<std::string> first;
  for (const auto& c : cases) first.push_back(run_cli(c.args).out);
  std::string dgolden = slurp((tmp / "double_golden.json").string());
  for (std::size_t i = 0; i < cases.size(); ++i)
    EXPECT_EQ(run_cli(cases[i].args).out, first[i]) << joined(cases[i].args);
  EXPECT_EQ(slurp((tmp / "double_golden.json").string()), dgolden);
}

TEST(Cli, CheckAliaReports) {
  json ok = run_json({"check-alia", fixture("golden_algebra.json")}, 0);
  EXPECT_EQ(ok["verb"], "check-alia");
  EXPECT_EQ(ok["passed"], true);
  json bad = run_json({"check-alia", fixture("failing.json")}, 1);
  EXPECT_EQ(bad["passed"], false);
  EXPECT_EQ(bad["report"]["identities"]["symmetric-jacobi"], 6);
  auto first = bad["report"]["violations"][0];
  EXPECT_EQ(first["identity"], "symmetric-jacobi");
  EXPECT_EQ(first["indices"], json::array({1, 2, 3}));
}

TEST(Cli, ReflectAndDerive) {
  json r = run_json({"reflect", fixture("swap_reflection.json")}, 0);
  EXPECT_EQ(r["order"], 2);
  EXPECT_EQ(r["l_R"], "x1 - x2");
  EXPECT_EQ(r["delta_R"], json::array({"1", "-1", "0"}));
  json z = run_json({"reflect", fixture("zeta3_reflection.json")}, 0);
  EXPECT_EQ(z["order"], 3);
  EXPECT_EQ(z["omega"], "[0,1;3]");
  json bad = run_json({"reflect", fixture("rank2_reflection.json")}, 1);
  EXPECT_EQ(bad["reason"], "rank(I - R) = 2, not 1");
  json d = run_json({"derive", fixture("swap_reflection.json"), "--poly", "x2^4"}, 0);
  EXPECT_EQ(d["D(f)"], "-x1^3 - x1^2*x2 - x1*x2^2 - x2^3");
  EXPECT_EQ(d["reconstruction"], true);
  json b = run_json({"poly-bracket", fixture("swap_reflection.json"), "--f", "x1", "--g", "x2"}, 0);
  EXPECT_EQ(b["bracket"], "-2*x1");
}

TEST(Cli, DoubleThenManin) {
  auto tmp = temp_dir("double");
  std::string out = (tmp / "d.json").string();
  // With --output the report goes to the file and stdout stays empty.
  CliRun r = run_cli({"double", fixture("golden_bialgebra.json"), "--output", out});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  json doc = json::parse(slurp(out));
  EXPECT_EQ(doc["dim"], 6);
  EXPECT_EQ(doc["split"], 3);
  json m = run_json({"check-manin", out}, 0);
  EXPECT_EQ(m["passed"], true);
}

TEST(Cli, ErrorsNameFileAndPosition) {
  auto tmp = temp_dir("err");
  std::string broken = (tmp / "b.json").string();
  std::ofstream(broken) << "{\"dim\": 2,,}";
  CliRun r = run_cli({"check-alia", broken});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("b.json"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("position"), std::string::npos) << r.err;
  CliRun p = run_cli({"derive", fixture("swap_reflection.json"), "--poly", "x1 +* x2"});
  EXPECT_EQ(p.exit_code, 2);
  EXPECT_NE(p.err.find("position 4"), std::string::npos) << p.err;
}
