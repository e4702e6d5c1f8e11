#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "fsb/polynomial.hpp"
#include "fsb/series.hpp"

using namespace fsb;
using namespace fsb::series;

namespace {

std::vector<Integer> sequence(int n, const std::function<Integer(int)>& f) {
  std::vector<Integer> v;
  for (int k = 0; k < n; ++k) v.push_back(f(k));
  return v;
}

Integer ipow(long b, int e) { return power(Integer(b), static_cast<unsigned>(e)); }

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  Polynomial p{1, -4, 3};
  CHECK(p == Polynomial::one_minus(1) * Polynomial::one_minus(3));
  CHECK(p.to_string() == "1 - 4*t + 3*t^2");
  CHECK(p.degree() == 2);
  CHECK(Polynomial{}.degree() == -1);
  CHECK(Polynomial{0, 0}.is_zero());
  auto [q, r] = p.divmod(Polynomial::one_minus(3));
  CHECK(q == Polynomial::one_minus(1));
  CHECK(r.is_zero());
  CHECK(p.reflected(2) == Polynomial{3, -4, 1});
  CHECK(p(Rational(1, 3)) == 0);
  CHECK(pow(Polynomial{1, 1}, 3) == Polynomial{1, 3, 3, 1});
}

TEST_CASE("rational function reduces and expands") {
  RationalFunction r(Polynomial{1, -1}, {{1, 2}, {3, 1}});
  CHECK(r.factors() == RationalFunction::Factors{{1, 1}, {3, 1}});
  // 1/((1-t)(1-3t)) has coefficients (3^{n+1}-1)/2.
  auto a = r.expand(8);
  for (int n = 0; n < 8; ++n) CHECK(a[static_cast<std::size_t>(n)] == Rational((ipow(3, n + 1) - 1) / 2));
  CHECK(r.to_string() == "(1) / ((1 - t)(1 - 3t))");
  CHECK(RationalFunction(Polynomial{}, {{2, 3}}).factors().empty());
}

TEST_CASE("fit: geometric difference 3^n - 1") {
  auto terms = sequence(12, [](int n) -> Integer { return ipow(3, n) - 1; });
  FitOptions o;
  o.pole_bound = 3;
  auto r = fit_rational(std::span<const Integer>(terms), o);
  // Oracle: 1/(1-3t) - 1/(1-t) = 2t/((1-t)(1-3t)).
  RationalFunction expected(Polynomial{0, 2}, {{1, 1}, {3, 1}});
  CHECK(r == expected);
  RationalFunction split = RationalFunction(Polynomial{1}, {{3, 1}}) - RationalFunction(Polynomial{1}, {{1, 1}});
  CHECK(r == split);
  CHECK(pole_set(r) == std::set<long>{1, 3});
}

TEST_CASE("fit: zero sequence and failures") {
  std::vector<Integer> zeros(10, 0);
  CHECK(fit_rational(std::span<const Integer>(zeros), FitOptions{}).is_zero());

  auto fast = sequence(12, [](int n) -> Integer { return ipow(5, n); });
  FitOptions o;
  o.pole_bound = 3;
  try {
    fit_rational(std::span<const Integer>(fast), o);
    FAIL("expected no fit");
  } catch (const FitError& e) {
    CHECK(e.kind() == FitError::Kind::kNoFit);
  }
  std::vector<Integer> few(fast.begin(), fast.begin() + 6);
  try {
    fit_rational(std::span<const Integer>(few), o);
    FAIL("expected insufficient terms");
  } catch (const FitError& e) {
    CHECK(e.kind() == FitError::Kind::kInsufficientTerms);
  }
}

TEST_CASE("fit: D1 dimension series closed form") {
  // (3^n - 1)/2 - n^2, compared against the four-term partial fraction form.
  auto terms = sequence(13, [](int n) -> Integer { return (ipow(3, n) - 1) / 2 - n * n; });
  FitOptions o;
  o.pole_bound = 3;
  o.mult_bound = 3;
  auto r = fit_rational(std::span<const Integer>(terms), o);
  RationalFunction expected = RationalFunction(Polynomial::constant(Rational(1, 2)), {{3, 1}}) -
                              RationalFunction(Polynomial::constant(Rational(1, 2)), {{1, 1}}) -
                              RationalFunction(Polynomial{0, 1}, {{1, 2}}) -
                              RationalFunction(Polynomial{0, 0, 2}, {{1, 3}});
  CHECK(r == expected);
  CHECK(pole_set(r) == std::set<long>{1, 3});
  auto res = residue_at(r, 3);
  CHECK(res.converges);
  CHECK(res.limit == Rational(1, 2));
  auto res1 = residue_at(r, 1);
  CHECK_FALSE(res1.converges);
}

TEST_CASE("residue: limit form and invariance under smaller poles") {
  RationalFunction geo(Polynomial{1}, {{1, 1}});
  CHECK(residue_at(geo, 1).limit == 1);
  CHECK(residue_at(geo, 1).converges);
  RationalFunction r(Polynomial{2, 1}, {{5, 1}});
  const Rational base = residue_at(r, 5).limit;
  // lim a_n / 5^n computed from the expansion directly.
  auto a = r.expand(40);
  Rational ratio = a[39] / Rational(ipow(5, 39));
  CHECK(ratio == base);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    RationalFunction noise(Polynomial{static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 5)},
                           {{1 + static_cast<long>(rng() % 4), 1 + static_cast<int>(rng() % 3)}});
    CHECK(residue_at(r + noise, 5).limit == base);
  }
  RationalFunction double_pole(Polynomial{1}, {{3, 2}});
  CHECK_FALSE(residue_at(double_pole, 3).converges);
  CHECK(residue_at(double_pole, 3).order == 2);
  CHECK_FALSE(residue_at(double_pole, 1).converges);
  CHECK(residue_at(RationalFunction::polynomial(Polynomial{1, 1}), 2).limit == 0);
}

TEST_CASE("fit reproduces held-out terms") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    RationalFunction r(Polynomial{static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4, 1},
                       {{1, 1 + static_cast<int>(rng() % 2)}, {2, static_cast<int>(rng() % 2)}, {3, 1}});
    auto terms = r.expand(20);
    FitOptions o;
    o.pole_bound = 3;
    o.mult_bound = 2;
    o.extra_numerator_degree = 1;
    auto fit = fit_rational(std::span<const Rational>(terms), o);
    CHECK(fit.expand(30) == r.expand(30));
  }
}
