#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fsb/numeric.hpp"

namespace fsb::series {

/// Univariate polynomial in t with exact rational coefficients, stored low
/// degree first. The coefficient vector never ends in a zero; the zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// 1 - j t
  static Polynomial one_minus(long j);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^k; zero past the degree.
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Keeps the terms of degree < n.
  Polynomial truncated(int n) const;
  /// t^r P(1/t); requires r >= degree().
  Polynomial reflected(int r) const;

  bool has_integer_coefficients() const;
  /// Integer coefficients low degree first; throws if any is fractional.
  std::vector<Integer> integer_coeffs() const;

  /// "1 - 4*t + 3*t^2"
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned e);

}  // namespace fsb::series
