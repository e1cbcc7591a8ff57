#pragma once

// Q[b, b^-1] with the bar involution b -> b^-1.

#include <map>
#include <string>
#include <string_view>

#include "beadcalc/rational.hpp"

namespace beadcalc {

class LaurentPoly {
 public:
  using Terms = std::map<long long, Rational>;

  LaurentPoly() = default;
  static LaurentPoly constant(const Rational& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Rational& c, long long exponent);
  static LaurentPoly one() { return constant(1); }

  // Syntax: sums of terms such as "2*b^3", "-b^-1", "1/2", "3b", "b^(-2)".
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;

  LaurentPoly bar() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Descending exponents, e.g. "2*b^3 - b^-1 + 1/2"; "0" for zero.
  std::string to_string() const;

 private:
  void add(long long exponent, const Rational& c);
  Terms terms_;
};

}  // namespace beadcalc
