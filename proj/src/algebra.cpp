#include "alia/algebra.hpp"

#include <string>

#include "alia/error.hpp"

namespace alia {

namespace {

void require_dim(const AlgebraSC& a, const Vector& v) {
  if (v.size() != a.dim())
    throw ShapeError("vector of length " + std::to_string(v.size()) +
                     " used with an algebra of dimension " + std::to_string(a.dim()));
}

Vector e(const AlgebraSC& a, std::size_t i) { return basis_vector(a.dim(), i, a.field()); }

// Calls fn(i, j, l) over all basis triples in lexicographic order.
template <typename Fn>
void for_triples(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) fn(i, j, l);
}

void record(CheckReport& report, const std::string& identity,
            std::vector<std::size_t> indices, Vector residual) {
  if (!is_zero(residual)) report.add(Violation{identity, std::move(indices), std::move(residual)});
}

}  // namespace

AlgebraSC::AlgebraSC(std::size_t dim, const FieldSpec& field)
    : dim_(dim), field_(field), data_(dim * dim * dim, Scalar::zero(field)) {}

void AlgebraSC::set_coeff(std::size_t i, std::size_t j, std::size_t t, const Scalar& value) {
  if (i >= dim_ || j >= dim_ || t >= dim_) throw ShapeError("structure constant index out of range");
  if (!(value.field() == field_))
    throw DomainError("structure constant " + value.to_string() + " is not in " +
                      field_.to_string());
  data_[(i * dim_ + j) * dim_ + t] = value;
}

Vector AlgebraSC::product(std::size_t i, std::size_t j) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

void AlgebraSC::set_product(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_) throw ShapeError("product vector has the wrong length");
  for (std::size_t t = 0; t < dim_; ++t) set_coeff(i, j, t, value[t]);
}

Vector bracket(const AlgebraSC& a, const Vector& x, const Vector& y) {
  require_dim(a, x);
  require_dim(a, y);
  const std::size_t n = a.dim();
  Vector out = zero_vector(n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t t = 0; t < n; ++t) {
        const Scalar& c = a.coeff(i, j, t);
        if (!c.is_zero()) out[t] += w * c;
      }
    }
  }
  return out;
}

AlgebraSC opposite(const AlgebraSC& a) {
  AlgebraSC out(a.dim(), a.field());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.set_product(i, j, a.product(j, i));
  return out;
}

Matrix left_multiplication(const AlgebraSC& a, const Vector& x) {
  require_dim(a, x);
  Matrix m(a.dim(), a.dim(), a.field());
  for (std::size_t col = 0; col < a.dim(); ++col) {
    Vector v = bracket(a, x, e(a, col));
    for (std::size_t row = 0; row < a.dim(); ++row) m(row, col) = v[row];
  }
  return m;
}

Matrix right_multiplication(const AlgebraSC& a, const Vector& x) {
  require_dim(a, x);
  Matrix m(a.dim(), a.dim(), a.field());
  for (std::size_t col = 0; col < a.dim(); ++col) {
    Vector v = bracket(a, e(a, col), x);
    for (std::size_t row = 0; row < a.dim(); ++row) m(row, col) = v[row];
  }
  return m;
}

Matrix left_multiplication(const AlgebraSC& a, std::size_t i) {
  return left_multiplication(a, e(a, i));
}

Matrix right_multiplication(const AlgebraSC& a, std::size_t i) {
  return right_multiplication(a, e(a, i));
}

CheckReport check_alia_direct(const AlgebraSC& a, std::size_t cap) {
  CheckReport report("left-alia", cap);
  const std::string id = "symmetric-jacobi";
  report.mark_checked(id);
  auto b = [&](const Vector& x, const Vector& y) { return bracket(a, x, y); };
  for_triples(a.dim(), [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector x = e(a, i), y = e(a, j), z = e(a, l);
    Vector lhs = b(b(x, y), z) + b(b(y, z), x) + b(b(z, x), y);
    Vector rhs = b(b(y, x), z) + b(b(z, y), x) + b(b(x, z), y);
    record(report, id, {i, j, l}, lhs - rhs);
  });
  return report;
}

CheckReport check_alia_structural(const AlgebraSC& a, std::size_t cap) {
  CheckReport report("left-alia", cap);
  const std::string id = "symmetric-jacobi-structural";
  report.mark_checked(id);
  const std::size_t n = a.dim();
  auto C = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
    return a.coeff(i, j, k);
  };
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector residual = zero_vector(n, a.field());
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t k = 0; k < n; ++k) {
        residual[m] += (C(i, j, k) - C(j, i, k)) * C(k, l, m) +
                       (C(j, l, k) - C(l, j, k)) * C(k, i, m) +
                       (C(l, i, k) - C(i, l, k)) * C(k, j, m);
      }
    }
    record(report, id, {i, j, l}, std::move(residual));
  });
  return report;
}

CheckReport check_right_alia_direct(const AlgebraSC& a, std::size_t cap) {
  CheckReport report("right-alia", cap);
  const std::string id = "right-alia";
  report.mark_checked(id);
  auto b = [&](const Vector& x, const Vector& y) { return bracket(a, x, y); };
  for_triples(a.dim(), [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector x = e(a, i), y = e(a, j), z = e(a, l);
    Vector lhs = b(x, b(y, z)) + b(y, b(z, x)) + b(z, b(x, y));
    Vector rhs = b(x, b(z, y)) + b(y, b(x, z)) + b(z, b(y, x));
    record(report, id, {i, j, l}, lhs - rhs);
  });
  return report;
}

CheckReport check_alia(const AlgebraSC& a, Side side, std::size_t cap) {
  if (side == Side::right) {
    CheckReport via_opposite = check_alia(opposite(a), Side::left, cap);
    CheckReport direct = check_right_alia_direct(a, cap);
    if (via_opposite.passed() != direct.passed())
      throw ConsistencyError("right-Alia check: opposite-algebra and direct forms disagree");
    direct.mark_checked("symmetric-jacobi");
    direct.mark_checked("symmetric-jacobi-structural");
    return direct;
  }
  CheckReport direct = check_alia_direct(a, cap);
  CheckReport structural = check_alia_structural(a, cap);
  if (direct.passed() != structural.passed() ||
      direct.violation_count() != structural.violation_count())
    throw ConsistencyError("symmetric Jacobi: direct expansion and structure-constant form disagree");
  direct.mark_checked("symmetric-jacobi-structural");
  return direct;
}

CheckReport check_jacobi(const AlgebraSC& a, std::size_t cap) {
  CheckReport report("jacobi", cap);
  const std::string id = "jacobi";
  report.mark_checked(id);
  auto b = [&](const Vector& x, const Vector& y) { return bracket(a, x, y); };
  for_triples(a.dim(), [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector x = e(a, i), y = e(a, j), z = e(a, l);
    record(report, id, {i, j, l}, b(b(x, y), z) + b(b(y, z), x) + b(b(z, x), y));
  });
  return report;
}

CheckReport check_commutative(const AlgebraSC& a, std::size_t cap) {
  CheckReport report("commutativity", cap);
  const std::string id = "commutativity";
  report.mark_checked(id);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      record(report, id, {i, j}, a.product(i, j) - a.product(j, i));
  return report;
}

CheckReport check_associative(const AlgebraSC& a, std::size_t cap) {
  CheckReport report("associativity", cap);
  const std::string id = "associativity";
  report.mark_checked(id);
  auto b = [&](const Vector& x, const Vector& y) { return bracket(a, x, y); };
  for_triples(a.dim(), [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector x = e(a, i), y = e(a, j), z = e(a, l);
    record(report, id, {i, j, l}, b(b(x, y), z) - b(x, b(y, z)));
  });
  return report;
}

CheckReport check_anti_pre_lie(const AlgebraSC& a, std::size_t cap) {
  CheckReport report("anti-pre-lie", cap);
  const std::string first = "anti-pre-lie-left";
  const std::string second = "anti-pre-lie-commutator";
  report.mark_checked(first);
  report.mark_checked(second);
  auto mul = [&](const Vector& x, const Vector& y) { return bracket(a, x, y); };
  auto comm = [&](const Vector& x, const Vector& y) { return mul(x, y) - mul(y, x); };
  for_triples(a.dim(), [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector x = e(a, i), y = e(a, j), z = e(a, l);
    record(report, first, {i, j, l}, mul(x, mul(y, z)) - mul(y, mul(x, z)) - mul(comm(y, x), z));
  });
  for_triples(a.dim(), [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector x = e(a, i), y = e(a, j), z = e(a, l);
    record(report, second, {i, j, l},
           mul(comm(x, y), z) + mul(comm(y, z), x) + mul(comm(z, x), y));
  });
  return report;
}

CheckReport check_anti_pre_lie_condition(const AlgebraSC& a, std::size_t cap) {
  CheckReport report("anti-pre-lie-condition", cap);
  const std::string id = "anti-pre-lie-condition";
  report.mark_checked(id);
  auto b = [&](const Vector& x, const Vector& y) { return bracket(a, x, y); };
  for_triples(a.dim(), [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector x = e(a, i), y = e(a, j), z = e(a, l);
    Vector lhs = b(x, b(y, z)) - b(y, b(x, z));
    Vector rhs = b(b(y, x), z) - b(b(x, y), z);
    record(report, id, {i, j, l}, lhs - rhs);
  });
  return report;
}

AlgebraFlags classify(const AlgebraSC& a) {
  AlgebraFlags flags;
  flags.is_left_alia = check_alia(a, Side::left).passed();
  flags.is_right_alia = check_alia(a, Side::right).passed();
  flags.is_skew = true;
  flags.is_symmetric = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      Vector ij = a.product(i, j), ji = a.product(j, i);
      if (!is_zero(ij + ji)) flags.is_skew = false;
      if (!is_zero(ij - ji)) flags.is_symmetric = false;
    }
  flags.is_lie = flags.is_skew && check_jacobi(a).passed();
  flags.is_anti_pre_lie = check_anti_pre_lie(a).passed();

  const bool via_condition = flags.is_left_alia && check_anti_pre_lie_condition(a).passed();
  if (via_condition != flags.is_anti_pre_lie)
    throw ConsistencyError("anti-pre-Lie: defining identities and left-Alia condition disagree");
  return flags;
}

AlgebraSC special_left_alia(const AlgebraSC& assoc, const Matrix& f, const Matrix& g) {
  const std::size_t n = assoc.dim();
  if (f.rows() != n || f.cols() != n || g.rows() != n || g.cols() != n)
    throw ShapeError("special_left_alia: f and g must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  if (!check_commutative(assoc).passed())
    throw DomainError("special_left_alia: product is not commutative");
  if (!check_associative(assoc).passed())
    throw DomainError("special_left_alia: product is not associative");
  AlgebraSC out(n, assoc.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.set_product(i, j, bracket(assoc, e(assoc, i), f.column(j)) + g * assoc.product(i, j));
  return out;
}

TrilinearSC::TrilinearSC(std::size_t dim, const FieldSpec& field)
    : dim_(dim), field_(field), data_(dim * dim * dim * dim, Scalar::zero(field)) {}

void TrilinearSC::set_coeff(std::size_t i, std::size_t j, std::size_t k, std::size_t t,
                            const Scalar& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_ || t >= dim_)
    throw ShapeError("trilinear index out of range");
  data_[((i * dim_ + j) * dim_ + k) * dim_ + t] = value;
}

Vector TrilinearSC::product(std::size_t i, std::size_t j, std::size_t k) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(((i * dim_ + j) * dim_ + k) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

bool TrilinearSC::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Vector trilinear(const TrilinearSC& t, const Vector& x, const Vector& y, const Vector& z) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n || z.size() != n)
    throw ShapeError("trilinear: argument length mismatch");
  Vector out = zero_vector(n, t.field());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        Scalar w = x[i] * y[j] * z[k];
        for (std::size_t s = 0; s < n; ++s) {
          const Scalar& c = t.coeff(i, j, k, s);
          if (!c.is_zero()) out[s] += w * c;
        }
      }
    }
  }
  return out;
}

CheckReport check_lie_triple(const TrilinearSC& t, std::size_t cap) {
  CheckReport report("lie-triple-system", cap);
  const std::string alt = "lts-alternating", cyc = "lts-cyclic", fj = "lts-fundamental";
  report.mark_checked(alt);
  report.mark_checked(cyc);
  report.mark_checked(fj);
  const std::size_t n = t.dim();
  auto e_ = [&](std::size_t i) { return basis_vector(n, i, t.field()); };
  auto tri = [&](const Vector& x, const Vector& y, const Vector& z) { return trilinear(t, x, y, z); };

  // [x,x,z] = 0 for all x is equivalent to [x,y,z] + [y,x,z] = 0 in characteristic 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        record(report, alt, {i, j, k}, t.product(i, j, k) + t.product(j, i, k));
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    record(report, cyc, {i, j, k}, t.product(i, j, k) + t.product(j, k, i) + t.product(k, i, j));
  });
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for_triples(n, [&](std::size_t x, std::size_t y, std::size_t z) {
        Vector A = e_(a), B = e_(b), X = e_(x), Y = e_(y), Z = e_(z);
        Vector lhs = tri(A, B, tri(X, Y, Z));
        Vector rhs = tri(tri(A, B, X), Y, Z) + tri(X, tri(A, B, Y), Z) + tri(X, Y, tri(A, B, Z));
        record(report, fj, {a, b, x, y, z}, lhs - rhs);
      });
  return report;
}

LieTripleResult lie_triple_from_alia(const AlgebraSC& a, TripleVariant variant, std::size_t cap) {
  if (!check_alia(a, Side::left).passed())
    throw DomainError("lie_triple_from_alia: input is not a left-Alia algebra");
  const std::size_t n = a.dim();
  const Scalar scale = variant == TripleVariant::half_bracket
                           ? Scalar(Rational(1, 2), a.field())
                           : Scalar::one(a.field());
  TrilinearSC t(n, a.field());
  for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    Vector comm = a.product(i, j) - a.product(j, i);
    Vector v = scale * bracket(a, comm, e(a, k));
    for (std::size_t s = 0; s < n; ++s) t.set_coeff(i, j, k, s, v[s]);
  });
  CheckReport report = check_lie_triple(t, cap);
  return {std::move(t), std::move(report)};
}

}  // namespace alia
