#include "alia/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "alia/error.hpp"

namespace alia {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Quotient and remainder of a by a nonzero b.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    Rational c = a[k] / lead;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(q);
  trim(a);
  return {q, a};
}

QPoly to_qpoly(const std::vector<Integer>& p) {
  QPoly out(p.begin(), p.end());
  trim(out);
  return out;
}

std::vector<Integer> divide_exact(const std::vector<Integer>& a,
                                  const std::vector<Integer>& b) {
  auto [q, r] = divmod(to_qpoly(a), to_qpoly(b));
  if (!r.empty()) throw ConsistencyError("cyclotomic divide-out left a remainder");
  std::vector<Integer> out;
  out.reserve(q.size());
  for (const auto& c : q) {
    if (c.get_den() != 1)
      throw ConsistencyError("cyclotomic divide-out produced a fraction");
    out.emplace_back(c.get_num());
  }
  return out;
}

std::string trim_ws(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Parses [sign]digits[/digits] occupying the whole of `s`.
Rational parse_rational(const std::string& s, std::size_t offset) {
  std::size_t i = 0;
  std::string num;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') num.push_back('-');
    ++i;
  }
  std::size_t digits_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num.push_back(s[i++]);
  if (i == digits_begin) throw ParseError("expected digits in scalar '" + s + "'", offset + i);
  Integer den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    std::size_t den_begin = i;
    std::string d;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) d.push_back(s[i++]);
    if (i == den_begin) throw ParseError("expected denominator in scalar '" + s + "'", offset + i);
    den = Integer(d);
    if (den == 0) throw ParseError("zero denominator in scalar '" + s + "'", offset + den_begin);
  }
  if (i != s.size()) throw ParseError("unexpected character in scalar '" + s + "'", offset + i);
  Rational out(Integer(num), den);
  out.canonicalize();
  return out;
}

}  // namespace

// mpq_class built from (p, q) is not reduced and may carry a zero denominator.
void checked_canonicalize(Rational& r) {
  if (r.get_den() == 0) throw DomainError("rational with zero denominator");
  r.canonicalize();
}

std::vector<Integer> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw DomainError("cyclotomic order must be positive");
  // t^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<Integer> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

FieldSpec::FieldSpec() : FieldSpec(rational()) {}

FieldSpec::FieldSpec(Kind kind, unsigned order,
                     std::shared_ptr<const std::vector<Integer>> modulus)
    : kind_(kind), order_(order), modulus_(std::move(modulus)) {}

FieldSpec FieldSpec::rational() {
  static const auto t = std::make_shared<const std::vector<Integer>>(
      std::vector<Integer>{0, 1});
  return FieldSpec(Kind::rational, 1, t);
}

FieldSpec FieldSpec::cyclotomic(unsigned order) {
  if (order < 1) throw DomainError("cyclotomic order must be >= 1");
  return FieldSpec(Kind::cyclotomic, order,
                   std::make_shared<const std::vector<Integer>>(
                       cyclotomic_polynomial(order)));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s = trim_ws(text);
  if (s == "rational") return rational();
  const std::string prefix = "cyclotomic:";
  if (s.rfind(prefix, 0) == 0) {
    std::string rest = s.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad cyclotomic order in field '" + s + "'", prefix.size());
    unsigned long m = std::stoul(rest);
    if (m < 1 || m > 10000) throw ParseError("cyclotomic order out of range", prefix.size());
    return cyclotomic(static_cast<unsigned>(m));
  }
  throw ParseError("unknown field '" + s + "'", 0);
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "rational";
  return "cyclotomic:" + std::to_string(order_);
}

Scalar::Scalar() : coeffs_{Rational(0)} {}

Scalar::Scalar(const Rational& value) : coeffs_{value} { checked_canonicalize(coeffs_[0]); }

Scalar::Scalar(long value) : coeffs_{Rational(value)} {}

Scalar::Scalar(const Rational& value, const FieldSpec& field)
    : field_(field), coeffs_(field.degree(), Rational(0)) {
  coeffs_[0] = value;
  checked_canonicalize(coeffs_[0]);
}

Scalar Scalar::zero(const FieldSpec& field) { return Scalar(Rational(0), field); }

Scalar Scalar::one(const FieldSpec& field) { return Scalar(Rational(1), field); }

Scalar Scalar::from_coefficients(std::vector<Rational> coeffs, const FieldSpec& field) {
  Scalar out = zero(field);
  out.coeffs_ = std::move(coeffs);
  for (auto& c : out.coeffs_) checked_canonicalize(c);
  if (field.is_rational()) {
    if (out.coeffs_.size() > 1) {
      for (std::size_t i = 1; i < out.coeffs_.size(); ++i)
        if (out.coeffs_[i] != 0)
          throw DomainError("higher coefficients are not allowed over Q");
    }
    out.coeffs_.resize(1);
    return out;
  }
  out.reduce();
  return out;
}

void Scalar::reduce() {
  for (auto& c : coeffs_) c.canonicalize();
  const std::size_t d = field_.degree();
  if (field_.is_rational()) {
    coeffs_.resize(1);
    return;
  }
  if (coeffs_.size() > d) {
    coeffs_ = divmod(std::move(coeffs_), to_qpoly(field_.modulus())).second;
  }
  coeffs_.resize(d, Rational(0));
}

void Scalar::require_same_field(const Scalar& other, const char* op) const {
  if (!(field_ == other.field_))
    throw DomainError(std::string("mixed fields in ") + op + ": " +
                      field_.to_string() + " vs " + other.field_.to_string());
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational_value() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

const Rational& Scalar::rational_value() const {
  if (!is_rational_value()) throw DomainError("scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (field_.is_rational()) return Scalar(1 / coeffs_[0], field_);
  QPoly r0 = to_qpoly(field_.modulus());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_m is irreducible.
  if (r0.size() != 1) throw ConsistencyError("cyclotomic inverse: gcd is not constant");
  Rational inv_c = 1 / r0[0];
  for (auto& c : s0) c *= inv_c;
  return from_coefficients(std::move(s0), field_);
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Scalar Scalar::embed(const FieldSpec& target) const {
  if (field_ == target) return *this;
  if (!is_rational_value())
    throw DomainError("cannot embed " + to_string() + " into " + target.to_string());
  return Scalar(coeffs_[0], target);
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return coeffs_[0].get_str();
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += coeffs_[i].get_str();
  }
  out += ";" + std::to_string(field_.order()) + "]";
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other, "addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other, "subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other, "multiplication");
  if (field_.is_rational()) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  const std::size_t d = coeffs_.size();
  QPoly prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other, "division");
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b, "comparison");
  return a.coeffs_ == b.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar primitive_root(unsigned m) {
  if (m < 2) throw DomainError("primitive_root requires m >= 2");
  return Scalar::from_coefficients({Rational(0), Rational(1)}, FieldSpec::cyclotomic(m));
}

unsigned multiplicative_order(const Scalar& s, unsigned bound) {
  if (s.is_zero()) return 0;
  Scalar p = s;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= s;
  }
  return 0;
}

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  std::string s = trim_ws(text);
  if (s.empty()) throw ParseError("empty scalar", 0);
  if (s.front() != '[') return Scalar(parse_rational(s, 0), field);

  std::size_t semi = s.find(';');
  if (semi == std::string::npos || s.back() != ']')
    throw ParseError("cyclotomic scalar must look like [c0,...;m]", s.size());
  std::string order_text = trim_ws(std::string_view(s).substr(semi + 1, s.size() - semi - 2));
  if (order_text.empty() || order_text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad cyclotomic order in '" + s + "'", semi + 1);
  unsigned long m = std::stoul(order_text);
  if (field.is_rational() || field.order() != m)
    throw DomainError("scalar " + s + " does not belong to field " + field.to_string());

  std::vector<Rational> coeffs;
  std::size_t start = 1;
  while (start <= semi) {
    std::size_t comma = s.find(',', start);
    std::size_t end = (comma == std::string::npos || comma > semi) ? semi : comma;
    std::string entry = trim_ws(std::string_view(s).substr(start, end - start));
    if (entry.empty()) throw ParseError("empty coefficient in '" + s + "'", start);
    coeffs.push_back(parse_rational(entry, start));
    start = end + 1;
  }
  return Scalar::from_coefficients(std::move(coeffs), field);
}

}  // namespace alia
