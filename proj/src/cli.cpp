#include "alia/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "alia/error.hpp"
#include "alia/io.hpp"

namespace alia::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::string field_text;
  std::string output;
  std::string side = "left";
  std::string variant = "theorem";
  std::string triple;
  std::string equiv;
  std::string poly_f, poly_g, poly_h;
  std::vector<std::string> generators;
  unsigned max_order = default_max_order;
  bool adjoint = false, dual = false, tensor = false, frobenius = false;
};

// Outcome of a verb: the report document and whether it counts as a pass.
struct Outcome {
  Json doc;
  bool passed = true;
};

std::optional<FieldSpec> override_field(const Options& o) {
  if (o.field_text.empty()) return std::nullopt;
  try {
    return FieldSpec::parse(o.field_text);
  } catch (const Error& e) {
    throw FormatError(std::string("--field: ") + e.what());
  }
}

struct Loaded {
  Json doc;
  FieldSpec field;
};

Loaded load(const std::string& path, const Options& o) {
  Json doc = io::load_file(path);
  return {doc, io::field_from(doc, override_field(o))};
}

// Document errors are reported with the file they came from.
template <class F>
auto from_file(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  } catch (const ShapeError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Side parse_side(const std::string& s) { return s == "right" ? Side::right : Side::left; }

MultiPoly parse_flag_poly(const std::string& flag, const std::string& text, std::size_t nvars,
                          const FieldSpec& field) {
  try {
    return parse_poly(text, nvars, field);
  } catch (const ParseError& e) {
    throw ParseError(flag + ": " + e.what(), e.position());
  }
}

Json algebra_doc(const AlgebraSC& a) {
  Json out;
  io::algebra_to_json(a, out);
  return out;
}

// ---- verbs -------------------------------------------------------------

Outcome check_alia_verb(const Options& o) {
  auto in = load(o.input, o);
  AlgebraSC a = from_file(o.input, [&] { return io::algebra_from_json(in.doc, in.field); });
  CheckReport r = check_alia(a, parse_side(o.side));
  return {Json{{"side", o.side}, {"report", io::report_to_json(r)}}, r.passed()};
}

Outcome classify_verb(const Options& o) {
  auto in = load(o.input, o);
  AlgebraSC a = from_file(o.input, [&] { return io::algebra_from_json(in.doc, in.field); });
  AlgebraFlags f = classify(a);
  Json doc{{"flags",
            {{"is_left_alia", f.is_left_alia},
             {"is_right_alia", f.is_right_alia},
             {"is_skew", f.is_skew},
             {"is_symmetric", f.is_symmetric},
             {"is_lie", f.is_lie},
             {"is_anti_pre_lie", f.is_anti_pre_lie}}}};
  bool passed = true;
  if (!o.triple.empty()) {
    TripleVariant v = o.triple == "half" ? TripleVariant::half_bracket : TripleVariant::alia;
    LieTripleResult t = lie_triple_from_alia(a, v);
    Json entries = Json::array();
    const std::size_t n = t.triple.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vector val = t.triple.product(i, j, k);
          if (!is_zero(val))
            entries.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", io::vector_to_json(val)}});
        }
    doc["lie_triple"] = {{"variant", o.triple}, {"products", entries},
                         {"report", io::report_to_json(t.report)}};
    passed = t.report.passed();
  }
  return {doc, passed};
}

Outcome check_rep_verb(const Options& o) {
  auto in = load(o.input, o);
  Side side = parse_side(o.side);
  Json doc{{"side", o.side}};
  if (o.adjoint) {
    AlgebraSC a = from_file(o.input, [&] { return io::algebra_from_json(in.doc, in.field); });
    Representation rep = adjoint_rep(a);
    Json rep_doc;
    io::representation_to_json(rep, rep_doc);
    CheckReport r = check_representation(rep);
    doc["adjoint"] = rep_doc;
    doc["report"] = io::report_to_json(r);
    return {doc, r.passed()};
  }
  Representation rep =
      from_file(o.input, [&] { return io::representation_from_json(in.doc, in.field); });
  if (!o.equiv.empty()) {
    auto in2 = load(o.equiv, o);
    Representation rep2 =
        from_file(o.equiv, [&] { return io::representation_from_json(in2.doc, in2.field); });
    Matrix phi = from_file(o.equiv, [&] {
      if (!in2.doc.contains("phi")) throw FormatError("missing key \"phi\"");
      return io::matrix_from_json(in2.doc["phi"], in2.field, rep2.module_dim(), rep.module_dim(), "phi");
    });
    CheckReport r = check_equivalence(rep, rep2, phi);
    doc["report"] = io::report_to_json(r);
    return {doc, r.passed()};
  }
  if (o.dual) {
    Representation d = dual_rep(rep, side);
    Json rep_doc;
    io::representation_to_json(d, rep_doc);
    CheckReport r = check_representation(d, side);
    doc["dual"] = rep_doc;
    doc["report"] = io::report_to_json(r);
    return {doc, r.passed()};
  }
  CheckReport r = check_representation(rep, side);
  doc["report"] = io::report_to_json(r);
  return {doc, r.passed()};
}

Outcome semidirect_verb(const Options& o) {
  auto in = load(o.input, o);
  Representation rep =
      from_file(o.input, [&] { return io::representation_from_json(in.doc, in.field); });
  AlgebraSC s = semidirect_product(rep.algebra(), rep);
  CheckReport rep_report = check_representation(rep);
  CheckReport alia_report = check_alia(s);
  Json doc{{"semidirect", algebra_doc(s)},
           {"representation_report", io::report_to_json(rep_report)},
           {"semidirect_report", io::report_to_json(alia_report)}};
  return {doc, alia_report.passed()};
}

Outcome matched_pair_verb(const Options& o) {
  auto in = load(o.input, o);
  MatchedPairData mp = from_file(o.input, [&] { return io::matched_pair_from_json(in.doc, in.field); });
  CheckReport r = check_matched_pair(mp);
  AlgebraSC sum = matched_pair_sum(mp);
  Json doc{{"report", io::report_to_json(r)}, {"sum", algebra_doc(sum)},
           {"sum_report", io::report_to_json(check_alia(sum))}};
  return {doc, r.passed()};
}

Outcome check_quadratic_verb(const Options& o) {
  auto in = load(o.input, o);
  AlgebraSC a = from_file(o.input, [&] { return io::algebra_from_json(in.doc, in.field); });
  if (o.tensor) {
    Tensor2 t = from_file(o.input, [&] {
      if (!in.doc.contains("tensor")) throw FormatError("missing key \"tensor\"");
      return Tensor2(io::matrix_from_json(in.doc["tensor"], in.field, a.dim(), a.dim(), "tensor"));
    });
    CheckReport r = tensor_invariance(a, t);
    return {Json{{"report", io::report_to_json(r)}, {"tensor_symmetric", t.is_symmetric()}},
            r.passed()};
  }
  BilinearForm b = from_file(o.input, [&] { return io::form_from_json(in.doc, in.field, a.dim()); });
  CheckReport r = check_quadratic(a, b);
  Json doc{{"report", io::report_to_json(r)}, {"flat", io::matrix_to_json(flat_map(b))}};
  if (r.passed("form-nondegenerate")) {
    Tensor2 t = btilde(b);
    CheckReport tr = tensor_invariance(a, t);
    doc["btilde"] = io::matrix_to_json(t.entries());
    doc["btilde_symmetric"] = t.is_symmetric();
    doc["btilde_report"] = io::report_to_json(tr);
  }
  return {doc, r.passed()};
}

Outcome frobenius_bracket_verb(const Options& o) {
  auto in = load(o.input, o);
  AlgebraSC assoc = from_file(o.input, [&] { return io::algebra_from_json(in.doc, in.field); });
  const std::size_t n = assoc.dim();
  auto matrix_key = [&](const char* key) {
    return from_file(o.input, [&] {
      if (!in.doc.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
      return io::matrix_from_json(in.doc[key], in.field, n, n, key);
    });
  };
  Matrix f = matrix_key("f");
  if (in.doc.contains("g")) {
    AlgebraSC s = special_left_alia(assoc, f, matrix_key("g"));
    CheckReport r = check_alia(s);
    return {Json{{"bracket", algebra_doc(s)}, {"report", io::report_to_json(r)}}, r.passed()};
  }
  BilinearForm b = from_file(o.input, [&] { return io::form_from_json(in.doc, in.field, n); });
  FrobeniusBracket fb = quadratic_from_frobenius(assoc, b, f);
  CheckReport r = check_quadratic(fb.bracket, b);
  r.merge(check_alia(fb.bracket));
  return {Json{{"bracket", algebra_doc(fb.bracket)},
               {"f_hat", io::matrix_to_json(fb.f_hat)},
               {"report", io::report_to_json(r)}},
          r.passed()};
}

Outcome check_coalgebra_verb(const Options& o) {
  auto in = load(o.input, o);
  Comultiplication delta = from_file(o.input, [&] {
    std::size_t n = in.doc.value("dim", std::size_t{0});
    return io::delta_from_json(in.doc, in.field, n);
  });
  CheckReport r = check_coalgebra(delta);
  return {Json{{"dual_algebra", algebra_doc(dual_algebra_from_delta(delta))},
               {"report", io::report_to_json(r)}},
          r.passed()};
}

Outcome check_bialgebra_verb(const Options& o) {
  auto in = load(o.input, o);
  AlgebraSC a = from_file(o.input, [&] { return io::algebra_from_json(in.doc, in.field); });
  Comultiplication delta =
      from_file(o.input, [&] { return io::delta_from_json(in.doc, in.field, a.dim()); });
  CheckReport r = check_bialgebra(a, delta);
  return {Json{{"report", io::report_to_json(r)}}, r.passed()};
}

Outcome double_verb(const Options& o) {
  auto in = load(o.input, o);
  ManinTripleData mt;
  if (o.frobenius) {
    mt = from_file(o.input, [&] {
      AlgebraSC d = io::algebra_from_json(in.doc, in.field);
      if (!in.doc.contains("split") || !in.doc["split"].is_number_unsigned())
        throw FormatError("\"split\" must be a nonnegative integer");
      std::size_t n = in.doc["split"].get<std::size_t>();
      if (!in.doc.contains("P") || !in.doc.contains("Qstar"))
        throw FormatError("missing key \"P\" or \"Qstar\"");
      Matrix p = io::matrix_from_json(in.doc["P"], in.field, n, n, "P");
      Matrix q = io::matrix_from_json(in.doc["Qstar"], in.field, n, n, "Qstar");
      return frobenius_double(d, n, p, q);
    });
  } else {
    AlgebraSC a = from_file(o.input, [&] { return io::algebra_from_json(in.doc, in.field); });
    Comultiplication delta =
        from_file(o.input, [&] { return io::delta_from_json(in.doc, in.field, a.dim()); });
    mt = double_construct(a, delta);
  }
  Json doc;
  io::manin_to_json(mt, doc);
  return {doc, true};
}

Outcome check_manin_verb(const Options& o) {
  auto in = load(o.input, o);
  ManinTripleData mt = from_file(o.input, [&] { return io::manin_from_json(in.doc, in.field); });
  CheckReport r = check_manin_triple(mt);
  return {Json{{"report", io::report_to_json(r)}}, r.passed()};
}

Json reflection_json(const ReflectionResult& res) {
  Json doc{{"is_pseudo_reflection", res.is_reflection}, {"reason", res.reason}};
  if (res.data) {
    doc["l_R"] = io::poly_to_json(res.data->l_r);
    doc["delta_R"] = io::vector_to_json(res.data->delta_r);
    doc["order"] = res.data->order;
    doc["omega"] = res.data->omega.to_string();
  }
  return doc;
}

LinearAuto load_auto(const std::string& path, const Options& o) {
  auto in = load(path, o);
  return from_file(path, [&] { return io::reflection_from_json(in.doc, in.field); });
}

// Loads a reflection and requires it to be a pseudo-reflection.
std::pair<LinearAuto, ReflectionData> load_reflection(const Options& o) {
  LinearAuto r = load_auto(o.input, o);
  ReflectionResult res = is_pseudo_reflection(r, o.max_order);
  if (!res.is_reflection) throw DomainError("not a pseudo-reflection: " + res.reason);
  return {r, *res.data};
}

Outcome reflect_verb(const Options& o) {
  LinearAuto r = load_auto(o.input, o);
  if (o.dual) r = dual_auto(r);
  ReflectionResult res = is_pseudo_reflection(r, o.max_order);
  Json doc = reflection_json(res);
  if (o.dual) doc["matrix"] = io::matrix_to_json(r.matrix());
  return {doc, res.is_reflection};
}

Outcome derive_verb(const Options& o) {
  auto [r, rd] = load_reflection(o);
  MultiPoly f = parse_flag_poly("--poly", o.poly_f, r.nvars(), r.field());
  MultiPoly d = twisted_derivation(rd, r, f);
  MultiPoly rf = apply_auto(r, f);
  bool reconstructs = rf + d * rd.l_r == f;
  return {Json{{"f", io::poly_to_json(f)},
               {"R(f)", io::poly_to_json(rf)},
               {"D(f)", io::poly_to_json(d)},
               {"l_R", io::poly_to_json(rd.l_r)},
               {"reconstruction", reconstructs}},
          reconstructs};
}

Outcome poly_bracket_verb(const Options& o) {
  auto [r, rd] = load_reflection(o);
  BracketVariant v = o.variant == "intro" ? BracketVariant::intro : BracketVariant::theorem;
  MultiPoly f = parse_flag_poly("--f", o.poly_f, r.nvars(), r.field());
  MultiPoly g = parse_flag_poly("--g", o.poly_g, r.nvars(), r.field());
  Json doc{{"variant", o.variant}, {"f", io::poly_to_json(f)}, {"g", io::poly_to_json(g)}};
  if (!o.poly_h.empty()) {
    MultiPoly h = parse_flag_poly("--h", o.poly_h, r.nvars(), r.field());
    doc["h"] = io::poly_to_json(h);
    doc["triple"] = io::poly_to_json(poly_lie_triple(rd, r, f, g, h, v));
  } else {
    doc["bracket"] = io::poly_to_json(poly_alia_bracket(rd, r, f, g, v));
  }
  return {doc, true};
}

Outcome invariant_verb(const Options& o) {
  std::vector<std::string> paths{o.input};
  paths.insert(paths.end(), o.generators.begin(), o.generators.end());
  std::vector<LinearAuto> gens;
  for (const auto& p : paths) gens.push_back(load_auto(p, o));
  for (const auto& g : gens)
    if (g.nvars() != gens.front().nvars() || !(g.field() == gens.front().field()))
      throw FormatError("generators must share nvars and field");
  MultiPoly f = parse_flag_poly("--poly", o.poly_f, gens.front().nvars(), gens.front().field());
  Json images = Json::array();
  for (const auto& g : gens) images.push_back(io::poly_to_json(apply_auto(g, f)));
  bool inv = invariance_check(f, gens);
  return {Json{{"f", io::poly_to_json(f)}, {"images", images}, {"invariant", inv}}, inv};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for left-Alia algebras"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1, 1);
  Options o;
  std::map<CLI::App*, std::function<Outcome(const Options&)>> verbs;

  auto verb = [&](const std::string& name, const std::string& help,
                  std::function<Outcome(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "input document")->required();
    sub->add_option("--field", o.field_text, "rational | cyclotomic:<m>");
    sub->add_option("--output", o.output, "write the report here instead of stdout");
    verbs[sub] = std::move(fn);
    return sub;
  };
  const std::vector<std::string> sides{"left", "right"};

  auto* c = verb("check-alia", "symmetric Jacobi identity", check_alia_verb);
  c->add_option("--side", o.side)->check(CLI::IsMember(sides));
  c = verb("classify", "skew/symmetric/Lie/anti-pre-Lie flags", classify_verb);
  c->add_option("--lie-triple", o.triple, "also build the Lie triple system")
      ->check(CLI::IsMember({"alia", "half"}));
  c = verb("check-rep", "representation axioms", check_rep_verb);
  c->add_option("--side", o.side)->check(CLI::IsMember(sides));
  c->add_flag("--adjoint", o.adjoint, "input is an algebra; build its adjoint representation");
  c->add_flag("--dual", o.dual, "build and check the dual representation");
  c->add_option("--equiv", o.equiv, "second representation with a \"phi\" key");
  verb("semidirect", "semidirect product by a representation", semidirect_verb);
  verb("check-matched-pair", "matched pair axioms and the sum algebra", matched_pair_verb);
  c = verb("check-quadratic", "invariant symmetric nondegenerate form", check_quadratic_verb);
  c->add_flag("--tensor", o.tensor, "check the \"tensor\" key for invariance instead");
  verb("frobenius-bracket", "bracket from a Frobenius algebra (or special bracket with \"g\")",
       frobenius_bracket_verb);
  verb("check-coalgebra", "coalgebra identity and the dual algebra", check_coalgebra_verb);
  verb("check-bialgebra", "bialgebra compatibility", check_bialgebra_verb);
  c = verb("double", "double construction on A + A*", double_verb);
  c->add_flag("--frobenius", o.frobenius, "input is a commutative associative double with P, Qstar");
  verb("check-manin", "Manin triple axioms", check_manin_verb);
  c = verb("reflect", "pseudo-reflection detection", reflect_verb);
  c->add_option("--max-order", o.max_order)->check(CLI::Range(1u, 100000u));
  c->add_flag("--dual", o.dual, "use the inverse-transpose action");
  c = verb("derive", "twisted derivation of a polynomial", derive_verb);
  c->add_option("--poly", o.poly_f)->required();
  c->add_option("--max-order", o.max_order)->check(CLI::Range(1u, 100000u));
  c = verb("poly-bracket", "polynomial bracket (or triple with --h)", poly_bracket_verb);
  c->add_option("--f", o.poly_f)->required();
  c->add_option("--g", o.poly_g)->required();
  c->add_option("--h", o.poly_h);
  c->add_option("--variant", o.variant)->check(CLI::IsMember({"theorem", "intro"}));
  c->add_option("--max-order", o.max_order)->check(CLI::Range(1u, 100000u));
  c = verb("invariant", "invariance under automorphisms", invariant_verb);
  c->add_option("--poly", o.poly_f)->required();
  c->add_option("--generator", o.generators, "additional automorphism documents");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Outcome outcome;
  try {
    outcome = verbs.at(chosen)(o);
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const DomainError& e) {
    outcome.doc = Json{{"error", e.what()}};
    outcome.passed = false;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return exit_usage;
  }
  outcome.doc["verb"] = chosen->get_name();
  outcome.doc["passed"] = outcome.passed;
  std::string text = outcome.doc.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.output << "\n";
      return exit_usage;
    }
    file << text;
  }
  return outcome.passed ? exit_pass : exit_fail;
}

}  // namespace alia::cli
