#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alia/bialgebra.hpp"
#include "alia/quadratic.hpp"
#include "alia/reflection.hpp"
#include "alia/representation.hpp"

namespace alia::io {

/// Object keys are kept sorted, so dumps are deterministic.
using Json = nlohmann::json;

/// Reads and parses a JSON file. Syntax errors become ParseError with the
/// byte offset; unreadable files become FormatError.
Json load_file(const std::string& path);

/// `{"kind": "rational"}` or `{"kind": "cyclotomic", "order": m}`. A missing
/// "field" key means Q. `override_field` wins over the document.
FieldSpec field_from(const Json& doc, const std::optional<FieldSpec>& override_field);
Json field_to_json(const FieldSpec& field);

/// Indices in documents are 1-based.
/// {"dim": n, "bracket": [{"i": 1, "j": 2, "coeffs": {"1": "1/2", ...}}, ...]}
AlgebraSC algebra_from_json(const Json& doc, const FieldSpec& field);
/// Writes "field", "dim" and "bracket" into `out`.
void algebra_to_json(const AlgebraSC& a, Json& out);

/// [[scalar-string, ...], ...]
Matrix matrix_from_json(const Json& doc, const FieldSpec& field, std::size_t rows,
                        std::size_t cols, const std::string& what);
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);

/// Algebra document plus "module_dim", "l", "r" (one matrix per basis element).
Representation representation_from_json(const Json& doc, const FieldSpec& field);
void representation_to_json(const Representation& rep, Json& out);

/// "gram" key.
BilinearForm form_from_json(const Json& doc, const FieldSpec& field, std::size_t dim);

/// "delta": [{"i": 1, "terms": [{"j": 1, "k": 1, "c": "1"}]}]
Comultiplication delta_from_json(const Json& doc, const FieldSpec& field, std::size_t dim);
Json delta_to_json(const Comultiplication& delta);

/// {"A": algebra, "B": algebra, "lA", "rA", "lB", "rB"}
MatchedPairData matched_pair_from_json(const Json& doc, const FieldSpec& field);

/// Algebra document plus "gram" and "split".
ManinTripleData manin_from_json(const Json& doc, const FieldSpec& field);
void manin_to_json(const ManinTripleData& mt, Json& out);

/// {"nvars": n, "matrix": [...], optional "order_hint": m}
LinearAuto reflection_from_json(const Json& doc, const FieldSpec& field);

Json report_to_json(const CheckReport& report);
Json poly_to_json(const MultiPoly& p);

}  // namespace alia::io
