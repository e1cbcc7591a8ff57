#include "beadcalc/laurent.hpp"

#include <cctype>

#include "beadcalc/error.hpp"

namespace beadcalc {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly out;
    skip();
    bool first = true;
    while (i_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += term(sign);
      skip();
      first = false;
    }
    if (first) fail("empty polynomial");
    return out;
  }

 private:
  LaurentPoly term(int sign) {
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_coeff = true;
      std::size_t end = i_;
      skip();
      if (peek() == '/') {
        ++i_;
        skip();
        Rational den = number();
        if (den == 0) fail("zero denominator");
        coeff /= den;
        end = i_;
        skip();
      }
      if (peek() == '*') {
        ++i_;
        skip();
        if (peek() != 'b') fail("expected 'b' after '*'");
      } else if (peek() == 'b' && i_ != end) {
        fail("expected '*' between coefficient and 'b'");
      }
    }
    long long exponent = 0;
    if (peek() == 'b') {
      ++i_;
      skip();
      exponent = 1;
      if (peek() == '^') {
        ++i_;
        skip();
        exponent = signed_exponent();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 'b'");
    }
    return LaurentPoly::monomial(coeff * sign, exponent);
  }

  long long signed_exponent() {
    bool paren = peek() == '(';
    if (paren) {
      ++i_;
      skip();
    }
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++i_;
      skip();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > (1LL << 40)) fail("exponent too large");
      ++i_;
    }
    skip();
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++i_;
    }
    return sign * value;
  }

  Rational number() {
    std::size_t start = i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    return Rational(Integer(std::string(s_.substr(start, i_ - start))));
  }

  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw Error(ErrorKind::Malformed, std::string("bead '") + std::string(s_) + "': " + what);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::monomial(const Rational& c, long long exponent) {
  LaurentPoly p;
  p.add(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) { return Parser(text).parse(); }

bool LaurentPoly::is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(-k, c);
  return out;
}

void LaurentPoly::add(long long exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add(ka + kb, ca * cb);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long long k = it->first;
    Rational c = it->second;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    std::string mono = k == 1 ? "b" : "b^" + std::to_string(k);
    if (k == 0) {
      out += beadcalc::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += beadcalc::to_string(c) + "*" + mono;
    }
    first = false;
  }
  return out;
}

}  // namespace beadcalc
