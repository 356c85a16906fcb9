#include "alia/io.hpp"

#include <fstream>
#include <sstream>

#include "alia/error.hpp"

namespace alia::io {

namespace {

const Json& require(const Json& doc, const char* key, const std::string& ctx) {
  if (!doc.is_object()) throw FormatError(ctx + ": expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(ctx + ": missing key \"" + key + "\"");
  return *it;
}

std::size_t size_value(const Json& v, const std::string& ctx) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw FormatError(ctx + ": expected a nonnegative integer");
  // Dense n^3 storage; anything larger is not a desk-scale input.
  if (v.get<long long>() > 256) throw FormatError(ctx + ": value exceeds 256");
  return v.get<std::size_t>();
}

// 1-based index in [1, bound], returned 0-based.
std::size_t index_value(const Json& v, std::size_t bound, const std::string& ctx) {
  if (!v.is_number_integer()) throw FormatError(ctx + ": expected an integer index");
  long long i = v.get<long long>();
  if (i < 1 || static_cast<unsigned long long>(i) > bound)
    throw FormatError(ctx + ": index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(bound));
  return static_cast<std::size_t>(i - 1);
}

Scalar scalar_value(const Json& v, const FieldSpec& field, const std::string& ctx) {
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>(), field);
    } catch (const Error& e) {
      throw FormatError(ctx + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Scalar(Rational(v.get<long>()), field);
  throw FormatError(ctx + ": expected a scalar string");
}

std::vector<Matrix> family_from_json(const Json& doc, const FieldSpec& field, std::size_t count,
                                     std::size_t size, const std::string& what) {
  if (!doc.is_array() || doc.size() != count)
    throw FormatError(what + ": expected a list of " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(matrix_from_json(doc[i], field, size, size, what + "[" + std::to_string(i + 1) + "]"));
  return out;
}

Json family_to_json(const std::vector<Matrix>& family) {
  Json out = Json::array();
  for (const auto& m : family) out.push_back(matrix_to_json(m));
  return out;
}

}  // namespace

Json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    std::size_t pos = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(path + ": invalid JSON", pos);
  }
}

FieldSpec field_from(const Json& doc, const std::optional<FieldSpec>& override_field) {
  if (override_field) return *override_field;
  if (!doc.is_object() || !doc.contains("field")) return FieldSpec::rational();
  const Json& f = doc["field"];
  const Json& kind_value = require(f, "kind", "field");
  if (!kind_value.is_string()) throw FormatError("field: \"kind\" must be a string");
  const std::string kind = kind_value.get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "cyclotomic") {
    std::size_t m = size_value(require(f, "order", "field"), "field.order");
    if (m < 1 || m > 1000) throw FormatError("field.order must lie in 1..1000");
    return FieldSpec::cyclotomic(static_cast<unsigned>(m));
  }
  throw FormatError("field: unknown kind \"" + kind + "\"");
}

Json field_to_json(const FieldSpec& field) {
  if (field.is_rational()) return Json{{"kind", "rational"}};
  return Json{{"kind", "cyclotomic"}, {"order", field.order()}};
}

AlgebraSC algebra_from_json(const Json& doc, const FieldSpec& field) {
  const std::size_t n = size_value(require(doc, "dim", "algebra"), "algebra.dim");
  AlgebraSC a(n, field);
  if (!doc.contains("bracket")) return a;
  const Json& entries = doc["bracket"];
  if (!entries.is_array()) throw FormatError("algebra.bracket: expected a list");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string ctx = "algebra.bracket[" + std::to_string(e + 1) + "]";
    const Json& entry = entries[e];
    std::size_t i = index_value(require(entry, "i", ctx), n, ctx + ".i");
    std::size_t j = index_value(require(entry, "j", ctx), n, ctx + ".j");
    const Json& coeffs = require(entry, "coeffs", ctx);
    if (!coeffs.is_object()) throw FormatError(ctx + ".coeffs: expected an object");
    for (const auto& [key, value] : coeffs.items()) {
      std::size_t t;
      try {
        t = index_value(Json(std::stoll(key)), n, ctx + ".coeffs");
      } catch (const std::logic_error&) {
        throw FormatError(ctx + ".coeffs: key \"" + key + "\" is not an index");
      }
      a.set_coeff(i, j, t, a.coeff(i, j, t) + scalar_value(value, field, ctx + ".coeffs"));
    }
  }
  return a;
}

void algebra_to_json(const AlgebraSC& a, Json& out) {
  out["field"] = field_to_json(a.field());
  out["dim"] = a.dim();
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Json coeffs = Json::object();
      for (std::size_t t = 0; t < a.dim(); ++t)
        if (!a.coeff(i, j, t).is_zero()) coeffs[std::to_string(t + 1)] = a.coeff(i, j, t).to_string();
      if (!coeffs.empty()) entries.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  out["bracket"] = entries;
}

Matrix matrix_from_json(const Json& doc, const FieldSpec& field, std::size_t rows,
                        std::size_t cols, const std::string& what) {
  if (!doc.is_array() || doc.size() != rows)
    throw FormatError(what + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!doc[i].is_array() || doc[i].size() != cols)
      throw FormatError(what + ": row " + std::to_string(i + 1) + " must have " +
                        std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar_value(doc[i][j], field, what);
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Representation representation_from_json(const Json& doc, const FieldSpec& field) {
  AlgebraSC a = algebra_from_json(doc, field);
  std::size_t m = size_value(require(doc, "module_dim", "representation"), "module_dim");
  auto l = family_from_json(require(doc, "l", "representation"), field, a.dim(), m, "l");
  auto r = family_from_json(require(doc, "r", "representation"), field, a.dim(), m, "r");
  return Representation(std::move(a), m, std::move(l), std::move(r));
}

void representation_to_json(const Representation& rep, Json& out) {
  algebra_to_json(rep.algebra(), out);
  out["module_dim"] = rep.module_dim();
  out["l"] = family_to_json(rep.l());
  out["r"] = family_to_json(rep.r());
}

BilinearForm form_from_json(const Json& doc, const FieldSpec& field, std::size_t dim) {
  return BilinearForm(matrix_from_json(require(doc, "gram", "form"), field, dim, dim, "gram"));
}

Comultiplication delta_from_json(const Json& doc, const FieldSpec& field, std::size_t dim) {
  Comultiplication delta(dim, field);
  const Json& entries = require(doc, "delta", "bialgebra");
  if (!entries.is_array()) throw FormatError("delta: expected a list");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string ctx = "delta[" + std::to_string(e + 1) + "]";
    std::size_t i = index_value(require(entries[e], "i", ctx), dim, ctx + ".i");
    const Json& terms = require(entries[e], "terms", ctx);
    if (!terms.is_array()) throw FormatError(ctx + ".terms: expected a list");
    for (const auto& t : terms) {
      std::size_t j = index_value(require(t, "j", ctx), dim, ctx + ".j");
      std::size_t k = index_value(require(t, "k", ctx), dim, ctx + ".k");
      delta.set_coeff(i, j, k, delta.coeff(i, j, k) + scalar_value(require(t, "c", ctx), field, ctx + ".c"));
    }
  }
  return delta;
}

Json delta_to_json(const Comultiplication& delta) {
  Json out = Json::array();
  const std::size_t n = delta.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Json terms = Json::array();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!delta.coeff(i, j, k).is_zero())
          terms.push_back(Json{{"j", j + 1}, {"k", k + 1}, {"c", delta.coeff(i, j, k).to_string()}});
    if (!terms.empty()) out.push_back(Json{{"i", i + 1}, {"terms", terms}});
  }
  return out;
}

MatchedPairData matched_pair_from_json(const Json& doc, const FieldSpec& field) {
  AlgebraSC a = algebra_from_json(require(doc, "A", "matched pair"), field);
  AlgebraSC b = algebra_from_json(require(doc, "B", "matched pair"), field);
  const std::size_t n = a.dim(), m = b.dim();
  auto la = family_from_json(require(doc, "lA", "matched pair"), field, n, m, "lA");
  auto ra = family_from_json(require(doc, "rA", "matched pair"), field, n, m, "rA");
  auto lb = family_from_json(require(doc, "lB", "matched pair"), field, m, n, "lB");
  auto rb = family_from_json(require(doc, "rB", "matched pair"), field, m, n, "rB");
  return MatchedPairData(std::move(a), std::move(b), std::move(la), std::move(ra), std::move(lb),
                         std::move(rb));
}

ManinTripleData manin_from_json(const Json& doc, const FieldSpec& field) {
  AlgebraSC d = algebra_from_json(doc, field);
  std::size_t split = size_value(require(doc, "split", "manin triple"), "split");
  if (d.dim() != 2 * split) throw FormatError("manin triple: dim must equal 2 * split");
  BilinearForm form = form_from_json(doc, field, d.dim());
  return ManinTripleData{std::move(d), split, std::move(form)};
}

void manin_to_json(const ManinTripleData& mt, Json& out) {
  algebra_to_json(mt.double_algebra, out);
  out["split"] = mt.split;
  out["gram"] = matrix_to_json(mt.form.gram());
}

LinearAuto reflection_from_json(const Json& doc, const FieldSpec& field) {
  std::size_t n = size_value(require(doc, "nvars", "reflection"), "nvars");
  Matrix m = matrix_from_json(require(doc, "matrix", "reflection"), field, n, n, "matrix");
  std::optional<unsigned> hint;
  if (doc.contains("order_hint")) {
    std::size_t h = size_value(doc["order_hint"], "order_hint");
    if (h == 0) throw FormatError("order_hint must be positive");
    hint = static_cast<unsigned>(h);
  }
  return LinearAuto(std::move(m), hint);
}

Json report_to_json(const CheckReport& report) {
  Json out;
  out["name"] = report.name();
  out["passed"] = report.passed();
  out["violation_count"] = report.violation_count();
  Json identities = Json::object();
  for (const auto& id : report.checked()) identities[id] = report.count(id);
  out["identities"] = identities;
  Json witnesses = Json::array();
  for (const auto& v : report.violations()) {
    Json idx = Json::array();
    for (auto i : v.indices) idx.push_back(i + 1);
    witnesses.push_back(Json{{"identity", v.identity}, {"indices", idx}, {"residual", vector_to_json(v.residual)}});
  }
  out["violations"] = witnesses;
  return out;
}

Json poly_to_json(const MultiPoly& p) { return p.to_string(); }

}  // namespace alia::io
