#include "alia/poly.hpp"

#include <limits>

#include "alia/error.hpp"

namespace alia {

namespace {

std::uint64_t degree_of(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t s = std::uint64_t{a[i]} + b[i];
    if (s > std::numeric_limits<std::uint32_t>::max())
      throw DomainError("exponent overflow in polynomial product");
    out[i] = static_cast<std::uint32_t>(s);
  }
  return out;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents sub_exponents(const Exponents& b, const Exponents& a) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

std::string monomial_string(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  // Same degree: a < b when b is larger in lex order with x1 most significant.
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

MultiPoly::MultiPoly(std::size_t nvars, const FieldSpec& field) : nvars_(nvars), field_(field) {}

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
  MultiPoly p(nvars, c.field());
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index, const FieldSpec& field) {
  if (index >= nvars) throw ShapeError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(e, Scalar::one(field));
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const Scalar& c) {
  MultiPoly p(exps.size(), c.field());
  p.add_term(exps, c);
  return p;
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(degree_of(terms_.rbegin()->first));
}

std::pair<Exponents, Scalar> MultiPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::add_term(const Exponents& exps, const Scalar& c) {
  if (exps.size() != nvars_) throw ShapeError("monomial has the wrong number of variables");
  if (!(c.field() == field_)) throw DomainError("polynomial coefficient field mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar MultiPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void MultiPoly::require_compatible(const MultiPoly& other, const char* op) const {
  if (nvars_ != other.nvars_)
    throw ShapeError(std::string(op) + ": polynomials have different numbers of variables");
  if (!(field_ == other.field_)) throw DomainError(std::string(op) + ": field mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_, field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_compatible(other, "polynomial +");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_compatible(other, "polynomial -");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b, "polynomial *");
  MultiPoly out(a.nvars_, a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  return out;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& a) {
  if (!(c.field() == a.field_)) throw DomainError("polynomial scaling: field mismatch");
  MultiPoly out(a.nvars_, a.field_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : a.terms_) out.terms_.emplace(e, c * x);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b, "polynomial ==");
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(nvars_, Scalar::one(field_));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<MultiPoly, MultiPoly> MultiPoly::divide(const MultiPoly& divisor) const {
  require_compatible(divisor, "polynomial division");
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  auto [lead_e, lead_c] = divisor.leading_term();
  Scalar lead_inv = lead_c.inverse();
  MultiPoly q(nvars_, field_), r(nvars_, field_), p = *this;
  while (!p.is_zero()) {
    auto [e, c] = p.leading_term();
    if (divides(lead_e, e)) {
      MultiPoly t = monomial(sub_exponents(e, lead_e), c * lead_inv);
      q += t;
      p -= t * divisor;
    } else {
      r.add_term(e, c);
      p.terms_.erase(e);
    }
  }
  return {std::move(q), std::move(r)};
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(e);
    Scalar mag = c;
    bool negative = false;
    if (c.is_rational_value() && c.rational_value() < 0) {
      negative = true;
      mag = -c;
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += mag.to_string();
    else if (mag.is_one())
      out += mono;
    else
      out += mag.to_string() + "*" + mono;
  }
  return out;
}

}  // namespace alia
