#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "fsb/errors.hpp"
#include "fsb/kl.hpp"

using namespace fsb;
using namespace fsb::kl;
using arr::ArrIsoType;
using arr::Kind;
using series::Polynomial;

namespace {

// KL polynomial of the whole lattice, computed interval by interval from the
// geometric lattice of flats: no isomorphism types, no census.
Polynomial lattice_kl(int n, Kind kind) {
  const auto L = arr::mobius_oracle(n, kind);
  const std::size_t N = L.flats.size();
  // mu[f][g] for f <= g; flats are sorted by rank so f <= g implies f index <= g index.
  std::vector<std::vector<long>> mu(N, std::vector<long>(N, 0));
  for (std::size_t f = 0; f < N; ++f) {
    mu[f][f] = 1;
    for (std::size_t g = f + 1; g < N; ++g) {
      if (!L.leq(f, g) || f == g) continue;
      long s = 0;
      for (std::size_t h = f; h < g; ++h)
        if (L.leq(f, h) && L.leq(h, g)) s += mu[f][h];
      mu[f][g] = -s;
    }
  }
  auto chi = [&](std::size_t f, std::size_t g) {
    std::vector<Rational> c(static_cast<std::size_t>(L.rank[g] - L.rank[f]) + 1);
    for (std::size_t h = f; h <= g; ++h)
      if (L.leq(f, h) && L.leq(h, g)) c[static_cast<std::size_t>(L.rank[g] - L.rank[h])] += mu[f][h];
    return Polynomial(c);
  };
  const std::size_t top = N - 1;
  std::vector<Polynomial> P(N);
  for (std::size_t f = N; f-- > 0;) {
    const int r = L.rank[top] - L.rank[f];
    if (r == 0) {
      P[f] = Polynomial{1};
      continue;
    }
    Polynomial rest;
    for (std::size_t g = f + 1; g < N; ++g)
      if (L.leq(f, g)) rest += chi(f, g) * P[g];
    P[f] = -rest.truncated((r + 1) / 2);
  }
  return P[0];
}

Integer total(const std::vector<CensusRow>& rows) {
  Integer s = 0;
  for (const auto& r : rows) s += r.count;
  return s;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("small types") {
  KLEngine kl;
  CHECK(kl.kl_poly(ArrIsoType()) == Polynomial{1});
  CHECK(kl.kl_poly(ArrIsoType::B(1)) == Polynomial{1});
  CHECK(kl.kl_poly(ArrIsoType::B(2)) == Polynomial{1});
  CHECK(kl.kl_poly(ArrIsoType::B(3)) == Polynomial{1, 4});
  CHECK(kl.dim_D(1, 2, Kind::B) == 0);
  CHECK(kl.dim_D(1, 3, Kind::B) == 4);
  for (int n = 0; n <= 9; ++n) CHECK(kl.dim_D(0, n, Kind::B) == 1);
  // Braid arrangement on 4 points: 1 + t.
  CHECK(kl.kl_poly(ArrIsoType::A(4)) == Polynomial{1, 1});
}

TEST_CASE("degree-one coefficients of B_n") {
  KLEngine kl;
  for (int n = 1; n <= 7; ++n) {
    const Integer expected = (power(3, static_cast<unsigned>(n)) - 1) / 2 - n * n;
    CHECK(kl.kl_poly(ArrIsoType::B(n)).coeff(1) == (n < 3 ? Integer(0) : expected));
  }
}

TEST_CASE("agreement with the lattice-of-flats recursion") {
  KLEngine kl;
  for (int n = 1; n <= 5; ++n) {
    CHECK(kl.kl_poly(ArrIsoType::B(n)) == lattice_kl(n, Kind::B));
    CHECK(kl.kl_poly(ArrIsoType::A(n)) == lattice_kl(n, Kind::A));
  }
}

TEST_CASE("regression values for B_6 .. B_8") {
  KLEngine kl;
  CHECK(kl.kl_poly(ArrIsoType::B(6)) == Polynomial{1, 328, 4000});
  CHECK(kl.kl_poly(ArrIsoType::B(7)) == Polynomial{1, 1044, 42000, 47040});
  CHECK(kl.kl_poly(ArrIsoType::B(8)) == Polynomial{1, 3216, 363328, 1626240});
}

TEST_CASE("census") {
  auto b2 = flat_type_census(2, Kind::B);
  CHECK(total(b2) == 6);
  // Rank one: two coordinate lines (B1) and two diagonals (A1), four flats.
  CHECK(b2.size() == 4);
  Integer rank_one = 0;
  for (const auto& row : b2) {
    if (row.localization.empty()) CHECK((row.contraction == ArrIsoType::B(2) && row.count == 1));
    if (row.contraction.empty()) CHECK((row.localization == ArrIsoType::B(2) && row.count == 1));
    if (row.localization.rank() == 1) rank_one += row.count;
  }
  CHECK(rank_one == 4);
  CHECK(flat_type_census(1, Kind::B).size() == 2);
  Integer dim_one = 0;
  for (const auto& row : flat_type_census(3, Kind::B))
    if (row.contraction == ArrIsoType::B(1)) dim_one += row.count;
  CHECK(dim_one == 13);
  for (int n = 0; n <= 6; ++n) {
    CHECK(flat_type_census(n, Kind::B) == brute_census(n, Kind::B));
    CHECK(total(flat_type_census(n, Kind::B)) == arr::flats_B(n).size());
  }
  for (int n = 1; n <= 7; ++n) CHECK(flat_type_census(n, Kind::A) == brute_census(n, Kind::A));
  // A product's census has the product of the factor totals.
  auto prod = census_of(ArrIsoType(2, {3, 2}));
  CHECK(total(prod) == 6 * 5 * 2);
}

TEST_CASE("multiplicativity") {
  KLEngine kl;
  for (const auto& t : {ArrIsoType(2, {3}), ArrIsoType(3, {2, 2}), ArrIsoType(0, {4, 3}), ArrIsoType(3, {4}), ArrIsoType(0, {5, 2})}) {
    const auto direct = kl.kl_poly_direct(t);
    CHECK(direct == kl.kl_poly(t));
  }
  CHECK(kl.kl_poly(ArrIsoType(4, {4})) == kl.kl_poly(ArrIsoType::B(4)) * kl.kl_poly(ArrIsoType::A(4)));
}

TEST_CASE("degree bound, constant term, vanishing") {
  KLEngine kl;
  for (int n = 0; n <= 10; ++n) kl.kl_poly(ArrIsoType::B(n));
  for (const auto& [key, p] : kl.table()) {
    const auto t = ArrIsoType::parse(key);
    CHECK(p.coeff(0) == 1);
    CHECK(2 * p.degree() < std::max(t.rank(), 1));
    CHECK(p.has_integer_coefficients());
  }
  for (int n = 0; n <= 10; ++n)
    for (int i = 0; i <= 5; ++i) {
      const bool may_be_nonzero = n > 2 * i || (n == 0 && i == 0);
      if (!may_be_nonzero) CHECK(kl.dim_D(i, n, Kind::B) == 0);
    }
}

TEST_CASE("convention guard") {
  CHECK_THROWS_AS(KLEngine(Convention::kSwapped), ConventionError);
  KLEngine unchecked(Convention::kSwapped, false);
  CHECK_THROWS_AS(unchecked.validate_convention(), ConventionError);
  CHECK_NOTHROW(KLEngine(Convention::kStandard));
}

TEST_CASE("cache round trip") {
  const auto path = temp_path("fsb_kl_cache_test.json");
  KLEngine a;
  for (int n = 0; n <= 9; ++n) a.kl_poly(ArrIsoType::B(n));
  a.store(path);
  KLEngine b(Convention::kStandard, false);
  b.load(path);
  CHECK(a.table() == b.table());
  CHECK(b.derivation_count() == 0);

  // Warm start: only B_10 itself, plus braid types not seen before, is derived.
  b.kl_poly(ArrIsoType::B(10));
  for (const auto& key : b.derived_types()) CHECK((key == "B10" || key.front() == 'A'));
  CHECK(b.derived_types().size() >= 1);

  KLEngine swapped(Convention::kSwapped, false);
  CHECK_THROWS_AS(swapped.load(path), CacheError);

  nlohmann::json j;
  std::ifstream(path) >> j;
  j["version"] = "other";
  const auto bad = temp_path("fsb_kl_cache_bad.json");
  std::ofstream(bad) << j.dump();
  CHECK_THROWS_AS(b.load(bad), CacheError);
  j["version"] = KLEngine::kCacheVersion;
  j["entries"]["B3"] = {"1", "5", "7"};
  std::ofstream(bad) << j.dump();
  CHECK_THROWS_AS(b.load(bad), CacheError);
  CHECK_THROWS_AS(b.load(temp_path("fsb_no_such_cache.json")), CacheError);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}

TEST_CASE("concurrent readers") {
  KLEngine kl;
  const auto expected = kl.kl_poly(ArrIsoType::B(8));
  std::vector<std::thread> threads;
  std::vector<int> ok(4, 0);
  for (int k = 0; k < 4; ++k)
    threads.emplace_back([&, k] { ok[static_cast<std::size_t>(k)] = kl.kl_poly(ArrIsoType::B(8 - k % 2)) == kl.kl_poly(ArrIsoType::B(8 - k % 2)); });
  for (auto& t : threads) t.join();
  for (int v : ok) CHECK(v == 1);
  CHECK(kl.kl_poly(ArrIsoType::B(8)) == expected);
}
