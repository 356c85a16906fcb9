#include <cctype>
#include <limits>

#include "alia/error.hpp"
#include "alia/poly.hpp"

namespace alia {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view src, std::size_t nvars, const FieldSpec& field)
      : src_(src), nvars_(nvars), field_(field) {}

  MultiPoly parse() {
    MultiPoly out(nvars_, field_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      MultiPoly t = term();
      out += negative ? -t : t;
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      negative = c == '-';
      ++pos_;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  MultiPoly term() {
    Scalar coeff = Scalar::one(field_);
    Exponents exps(nvars_, 0);
    factor(coeff, exps);
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(coeff, exps);
    }
    return MultiPoly::monomial(exps, coeff);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(src_.substr(start, pos_ - start));
  }

  std::uint64_t small_number(std::size_t start, const std::string& text) {
    if (text.size() > 10) throw ParseError("exponent or index too large", start);
    std::uint64_t v = std::stoull(text);
    if (v > std::numeric_limits<std::uint32_t>::max())
      throw ParseError("exponent or index too large", start);
    return v;
  }

  void factor(Scalar& coeff, Exponents& exps) {
    skip_ws();
    if (at_end()) throw ParseError("expected a coefficient or variable", pos_);
    std::size_t start = pos_;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = digits();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        text += '/' + digits();
      }
      coeff *= scalar_literal(text, start);
    } else if (c == '[') {
      std::size_t close = src_.find(']', pos_);
      if (close == std::string_view::npos) throw ParseError("unterminated '['", start);
      pos_ = close + 1;
      coeff *= scalar_literal(std::string(src_.substr(start, pos_ - start)), start);
    } else if (c == 'x') {
      ++pos_;
      std::size_t idx_pos = pos_;
      std::uint64_t index = small_number(idx_pos, digits());
      if (index == 0 || index > nvars_)
        throw ParseError("variable x" + std::to_string(index) + " out of range (nvars = " +
                             std::to_string(nvars_) + ")",
                         start);
      std::uint64_t e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        std::size_t exp_pos = pos_;
        e = small_number(exp_pos, digits());
      }
      std::uint64_t total = std::uint64_t{exps[index - 1]} + e;
      if (total > std::numeric_limits<std::uint32_t>::max())
        throw ParseError("exponent too large", start);
      exps[index - 1] = static_cast<std::uint32_t>(total);
    } else {
      throw ParseError(std::string("unexpected '") + c + "'", start);
    }
  }

  Scalar scalar_literal(const std::string& text, std::size_t start) {
    try {
      return parse_scalar(text, field_);
    } catch (const ParseError& e) {
      throw ParseError("bad coefficient '" + text + "'", start + e.position());
    } catch (const Error& e) {
      throw ParseError(std::string(e.what()), start);
    }
  }

  std::string_view src_;
  std::size_t nvars_;
  FieldSpec field_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view src, std::size_t nvars, const FieldSpec& field) {
  return PolyParser(src, nvars, field).parse();
}

}  // namespace alia
