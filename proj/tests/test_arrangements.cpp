#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "fsb/arrangements.hpp"
#include "fsb/errors.hpp"

using namespace fsb;
using namespace fsb::arr;
using series::Polynomial;

namespace {

// Signed coordinate vector of x_x - x_y with x_0 = 0 and x_{-k} = -x_k.
std::vector<long> difference(int n, int x, int y) {
  std::vector<long> v(static_cast<std::size_t>(n), 0);
  if (x) v[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  if (y) v[static_cast<std::size_t>(std::abs(y) - 1)] -= y > 0 ? 1 : -1;
  return v;
}

bool parallel(const std::vector<long>& a, const std::vector<long>& b) {
  bool same = true, opposite = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    same = same && a[k] == b[k];
    opposite = opposite && a[k] == -b[k];
  }
  return same || opposite;
}

}  // namespace

TEST_CASE("isomorphism types") {
  ArrIsoType t(3, {1, 2, 3, 1});
  CHECK(t.alpha == std::vector<int>{3, 2});
  CHECK(t.rank() == 3 + 2 + 1);
  CHECK(t.canonical() == "B3*A2*A1");
  CHECK(ArrIsoType::parse("B3*A2*A1") == t);
  CHECK(ArrIsoType::parse("A1*B3*A2") == t);
  CHECK(ArrIsoType().canonical() == "B0");
  CHECK(ArrIsoType::A(3).canonical() == "A2");
  CHECK(ArrIsoType::parse("B0").empty());
  CHECK_THROWS(ArrIsoType::parse("C2"));
  CHECK_THROWS(ArrIsoType::parse("B2*B1"));
  CHECK_THROWS_AS(parse_kind("D"), std::invalid_argument);
  CHECK(parse_kind("B") == Kind::B);
}

TEST_CASE("flat counts") {
  CHECK(flats_B(1).size() == 2);
  CHECK(flats_B(2).size() == 6);
  long dim1 = 0;
  for (const auto& f : flats_B(3)) dim1 += f.dimension() == 1;
  CHECK(dim1 == 13);
  CHECK_THROWS_AS(flats_B(9), ResourceError);
  CHECK(flats_A(4).size() == 15);  // Bell number
}

TEST_CASE("flats correspond to orbit classes of morphisms") {
  for (int n = 0; n <= 5; ++n) {
    auto flats = flats_B(n);
    std::set<FlatDescriptor> from_morphisms;
    std::size_t classes = 0;
    for (int d = 0; d <= n; ++d)
      for (const auto& phi : orbit_classes(n, d)) {
        ++classes;
        auto f = flat_of(phi);
        CHECK(morphism_of(f) == phi);
        CHECK(contraction_type(f) == ArrIsoType::B(d));
        from_morphisms.insert(f);
      }
    CHECK(classes == flats.size());
    CHECK(from_morphisms == std::set<FlatDescriptor>(flats.begin(), flats.end()));
    // Any morphism, not just a representative, cuts out a flat of its class.
    for (int d = 0; d <= std::min(n, 2); ++d)
      for (const auto& phi : enumerate_hom(n, d)) CHECK(flat_of(phi) == flat_of(canonical_representative(phi)));
  }
}

TEST_CASE("contraction and localization types") {
  FlatDescriptor bottom = flats_B(3).front();
  for (const auto& f : flats_B(3))
    if (f.zero_block.empty() && f.blocks.size() == 3) bottom = f;
  CHECK(contraction_type(bottom) == ArrIsoType::B(3));
  CHECK(localization_type(bottom).empty());
  FlatDescriptor top{Kind::B, 3, {1, 2, 3}, {}};
  CHECK(contraction_type(top) == ArrIsoType::B(0));
  CHECK(localization_type(top) == ArrIsoType::B(3));
  FlatDescriptor mid{Kind::B, 3, {3}, {{1, 2}}};
  CHECK(contraction_type(mid) == ArrIsoType::B(1));
  CHECK(localization_type(mid) == ArrIsoType(1, {2}));
  for (int n = 0; n <= 6; ++n)
    for (const auto& f : flats_B(n)) CHECK(contraction_type(f).rank() + localization_type(f).rank() == n);
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(ArrIsoType::B(2)) == Polynomial{3, -4, 1});
  CHECK(char_poly(ArrIsoType::A(3)) == Polynomial{2, -3, 1});
  CHECK(char_poly(ArrIsoType()) == Polynomial{1});
  ArrIsoType x(2, {3}), y(0, {2, 2});
  CHECK(char_poly(x * y) == char_poly(x) * char_poly(y));
  auto b1 = mobius_oracle(1, Kind::B);
  CHECK(b1.mu == std::vector<Integer>{1, -1});
  CHECK(b1.char_poly() == Polynomial{-1, 1});
  CHECK(mobius_oracle(2, Kind::A).char_poly() == Polynomial{-1, 1});
  for (int n = 1; n <= 5; ++n) {
    CHECK(mobius_oracle(n, Kind::B).char_poly() == char_poly(ArrIsoType::B(n)));
    CHECK(mobius_oracle(n, Kind::A).char_poly() == char_poly(ArrIsoType::A(n)));
  }
  CHECK_THROWS_AS(mobius_oracle(7, Kind::B), ResourceError);
}

TEST_CASE("combinatorial flats agree with the geometric lattice") {
  for (int n = 0; n <= 5; ++n) {
    auto lattice = mobius_oracle(n, Kind::B);
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < lattice.flats.size(); ++i) index[lattice.flats[i]] = i;
    auto flats = flats_B(n);
    CHECK(flats.size() == lattice.flats.size());
    for (const auto& f : flats) {
      const auto mask = contained_hyperplanes(f);
      REQUIRE(index.count(mask));
      const std::size_t fi = index[mask];
      CHECK(lattice.rank[fi] == f.rank());
      // Localization: the interval below F.
      std::vector<Rational> loc(static_cast<std::size_t>(f.rank()) + 1);
      for (std::size_t g = 0; g < lattice.flats.size(); ++g)
        if (lattice.leq(g, fi)) loc[static_cast<std::size_t>(f.rank() - lattice.rank[g])] += lattice.mu[g];
      CHECK(Polynomial(loc) == char_poly(localization_type(f)));
      // Contraction: the interval above F, with its own Möbius function.
      std::map<std::size_t, Integer> mu_from;
      std::vector<Rational> con(static_cast<std::size_t>(n - f.rank()) + 1);
      for (std::size_t g = 0; g < lattice.flats.size(); ++g) {
        if (!lattice.leq(fi, g)) continue;
        Integer m = g == fi ? Integer(1) : Integer(0);
        if (g != fi)
          for (auto& [h, mh] : mu_from)
            if (lattice.leq(h, g) && h != g) m -= mh;
        mu_from[g] = m;
        con[static_cast<std::size_t>(n - lattice.rank[g])] += m;
      }
      CHECK(Polynomial(con) == char_poly(contraction_type(f)));
    }
  }
  for (int n = 1; n <= 5; ++n) {
    auto lattice = mobius_oracle(n, Kind::A);
    std::set<std::uint64_t> masks(lattice.flats.begin(), lattice.flats.end());
    auto flats = flats_A(n);
    CHECK(flats.size() == masks.size());
    for (const auto& f : flats) CHECK(masks.count(contained_hyperplanes(f)));
  }
}

TEST_CASE("hyperplane indexing") {
  CHECK(b_hyperplanes(2).size() == 4);
  for (int n = 1; n <= 5; ++n) {
    auto hs = b_hyperplanes(n);
    CHECK(static_cast<int>(hs.size()) == n * n);
    for (std::size_t k = 0; k < hs.size(); ++k) CHECK(b_hyperplane_index(n, hs[k].e, hs[k].f) == static_cast<int>(k));
    for (int x = -n; x <= n; ++x)
      for (int y = -n; y <= n; ++y) {
        const int idx = b_hyperplane_index(n, x, y);
        if (x == y) {
          CHECK(idx == -1);
          continue;
        }
        REQUIRE(idx >= 0);
        auto d = difference(n, x, y);
        // J_{e,-e} is the coordinate hyperplane x_e = 0, with normal 2 e_e.
        if (x == -y)
          for (auto& c : d) c /= 2;
        CHECK(parallel(normal(hs[static_cast<std::size_t>(idx)], n), d));
      }
    auto as = a_hyperplanes(n);
    for (std::size_t k = 0; k < as.size(); ++k) CHECK(a_hyperplane_index(n, as[k].f, as[k].e) == static_cast<int>(k));
  }
}

TEST_CASE("Orlik-Solomon Poincare polynomials") {
  CHECK(os_hilbert(ArrIsoType::B(2)) == Polynomial{1, 4, 3});
  CHECK(os_hilbert(ArrIsoType()) == Polynomial{1});
  for (int n = 0; n <= 10; ++n) {
    auto p = os_hilbert(ArrIsoType::B(n));
    CHECK(p.coeff(1) == n * n);
    CHECK(p.degree() == n);
    for (int k = 0; k <= n; ++k) CHECK(p.coeff(k) > 0);
  }
  auto q = os_hilbert(ArrIsoType(2, {3, 2}));
  CHECK(q == os_hilbert(ArrIsoType::B(2)) * os_hilbert(ArrIsoType::A(3)) * os_hilbert(ArrIsoType::A(2)));
}
