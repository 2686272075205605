#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sheafstab/rational.hpp"

namespace sheafstab {

// Univariate polynomial in the twist variable m, with exact rational
// coefficients. Trailing zero coefficients are always trimmed, so the zero
// polynomial is the empty coefficient list and its degree is reported as
// an explicit "no degree" sentinel rather than 0.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> ascending_coeffs);
  explicit UniPoly(std::vector<Rational> ascending_coeffs);

  static UniPoly constant(Rational c);
  static UniPoly monomial(Rational coeff, std::size_t power);
  static UniPoly variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }

  // nullopt for the zero polynomial.
  std::optional<int> degree() const;

  // Coefficient of m^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;

  // Leading coefficient; throws domain_error on the zero polynomial.
  Rational leading() const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  UniPoly& operator/=(const Rational& s);  // throws domain_error on zero divisor

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator/(UniPoly a, const Rational& s) { return a /= s; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  // Exact evaluation by the Horner recurrence.
  Rational operator()(const Rational& x) const;

  std::string str(std::string_view var = "m") const;

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

 private:
  void trim();

  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies m^i
};

// The eventual total order on polynomials: compares values for all
// sufficiently large arguments, i.e. by the sign of the leading coefficient
// of the difference.
std::strong_ordering eventually_compare(const UniPoly& p, const UniPoly& q);

}  // namespace sheafstab
