#pragma once

#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsb/numeric.hpp"
#include "fsb/polynomial.hpp"

namespace fsb::series {

/// N(t) / prod_j (1 - j t)^{e_j}, kept in lowest terms. Every generating
/// function in this library has its poles at reciprocals of positive
/// integers, so the denominator is stored in factored form.
class RationalFunction {
 public:
  using Factors = std::map<long, int>;  // j -> multiplicity, j >= 1, e >= 1

  RationalFunction() = default;
  RationalFunction(Polynomial numerator, Factors denominator);
  static RationalFunction polynomial(Polynomial p) { return RationalFunction(std::move(p), {}); }

  const Polynomial& numerator() const { return num_; }
  const Factors& factors() const { return den_; }
  Polynomial denominator() const;
  bool is_zero() const { return num_.is_zero(); }

  /// First n coefficients of the power series at t = 0.
  std::vector<Rational> expand(int n) const;

  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const Rational& c) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// "(2*t) / ((1 - t)(1 - 3t))", or just the numerator when there are no poles.
  std::string to_string() const;

 private:
  void reduce();
  Polynomial num_;
  Factors den_;
};

/// Reciprocals j of the poles 1/j, in increasing order.
std::set<long> pole_set(const RationalFunction& r);

/// Limit of a_n / j^n for the coefficient sequence of r. This is the
/// coefficient of 1/(1 - j t) in the partial fraction expansion; the analytic
/// residue at t = 1/j is -limit/j.
struct LimitResidue {
  long j = 0;
  bool converges = false;
  Rational limit = 0;      // valid when converges
  int order = 0;           // order of the pole at 1/j
  Rational leading = 0;    // coefficient of (1 - j t)^{-order}
  long dominant_j = 0;     // largest pole reciprocal, 0 if none
  std::string describe() const;
};

LimitResidue residue_at(const RationalFunction& r, long j);

struct FitOptions {
  int pole_bound = 1;          // candidate poles 1/j for 1 <= j <= pole_bound
  int mult_bound = 1;          // multiplicity cap per pole
  int extra_numerator_degree = 0;  // numerator degree <= deg(denominator) + this
  int verify_terms = 5;        // equations beyond the unknowns that must also hold
};

class FitError : public std::runtime_error {
 public:
  enum class Kind { kInsufficientTerms, kNoFit };
  FitError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Finds the rational function with denominator prod_{j<=m} (1 - j t)^{e_j},
/// e_j <= mult_bound, whose expansion reproduces every given term. Candidate
/// denominators are tried by increasing degree, then lexicographically in
/// (e_1, ..., e_m); the first one whose numerator is determined with at least
/// verify_terms equations to spare and satisfies them all wins.
RationalFunction fit_rational(std::span<const Rational> terms, const FitOptions& options);
RationalFunction fit_rational(std::span<const Integer> terms, const FitOptions& options);

}  // namespace fsb::series
