#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fsb/arrangements.hpp"
#include "fsb/errors.hpp"
#include "fsb/rep.hpp"

using namespace fsb;
using namespace fsb::rep;

namespace {

Bipartition bp(std::vector<int> l, std::vector<int> m) { return {Partition(std::move(l)), Partition(std::move(m))}; }

}  // namespace

TEST_CASE("partitions and hook lengths") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(0).size() == 1);
  CHECK(bipartitions_of(3).size() == 10);
  CHECK(hook_dimension(Partition({3, 2})) == 5);
  CHECK(hook_dimension(Partition()) == 1);
  CHECK(Partition({1, 3, 0, 2}).to_string() == "[3,2,1]");
  // Σ (f^λ)² = n!
  for (int n = 0; n <= 7; ++n) {
    Integer s = 0;
    for (const auto& p : partitions_of(n)) s += hook_dimension(p) * hook_dimension(p);
    CHECK(s == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("class tables") {
  for (int n = 0; n <= 5; ++n) {
    const auto& t = class_table(Group::W, n);
    Rational total = 0;
    for (const auto& z : t.centralizer) total += Rational(1) / Rational(z);
    CHECK(total == 1);  // class sizes sum to |W_n|
    for (std::size_t k = 0; k < t.classes.size(); ++k) CHECK(class_of(t.representative(k)) == k);
  }
  // Class sizes agree with a census of all group elements.
  const auto& t3 = class_table(Group::W, 3);
  std::vector<long> census(t3.classes.size(), 0);
  for (const auto& w : SignedPerm::all(3)) ++census[class_of(w)];
  for (std::size_t k = 0; k < census.size(); ++k) CHECK(Integer(census[k]) * t3.centralizer[k] == t3.order);
  CHECK_THROWS_AS(class_table(Group::W, 8), ResourceError);
}

TEST_CASE("S_n characters") {
  for (int n = 1; n <= 6; ++n) {
    auto parts = partitions_of(n);
    for (const auto& a : parts) {
      auto ca = irr_character(a);
      CHECK(ca.dimension() == hook_dimension(a));
      for (const auto& b : parts) CHECK(inner(ca, irr_character(b)) == (a == b ? 1 : 0));
    }
  }
  // Sign character of S_3 at a transposition.
  auto sgn = irr_character(Partition({1, 1, 1}));
  CHECK(sgn.values[class_table(Group::S, 3).index_of({Partition({2, 1}), {}})] == -1);
}

TEST_CASE("W_n characters: orthonormality and dimensions") {
  for (int n = 0; n <= 5; ++n) {
    auto labels = bipartitions_of(n);
    std::vector<ClassFunction> chars;
    for (const auto& b : labels) chars.push_back(irr_character(b));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const Integer dim = binomial(static_cast<unsigned>(n), static_cast<unsigned>(labels[i].lambda.size())) *
                          hook_dimension(labels[i].lambda) * hook_dimension(labels[i].mu);
      CHECK(chars[i].dimension() == dim);
      for (std::size_t j = 0; j < labels.size(); ++j) CHECK(inner(chars[i], chars[j]) == (i == j ? 1 : 0));
    }
  }
  CHECK(irr_character(bp({4}, {})) == trivial_character(Group::W, 4));
  CHECK(irr_character(bp({}, {1, 1, 1})).dimension() == 1);
}

TEST_CASE("W_n characters: column orthogonality") {
  for (int n = 1; n <= 4; ++n) {
    const auto& t = class_table(Group::W, n);
    std::vector<ClassFunction> chars;
    for (const auto& b : bipartitions_of(n)) chars.push_back(irr_character(b));
    for (std::size_t a = 0; a < t.classes.size(); ++a)
      for (std::size_t c = 0; c < t.classes.size(); ++c) {
        Rational s = 0;
        for (const auto& ch : chars) s += ch.values[a] * ch.values[c];
        CHECK(s == (a == c ? Rational(t.centralizer[a]) : Rational(0)));
      }
  }
}

TEST_CASE("W_n characters: Murnaghan-Nakayama agrees with induction") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& b : bipartitions_of(n)) CHECK(irr_character(b) == irr_character_by_induction(b));
}

TEST_CASE("W_n characters: brute-force traces of sign characters") {
  // (∅,[n]) is w -> (-1)^{#negative cycles}; check on every element of W_3.
  const auto ch = irr_character(bp({}, {3}));
  for (const auto& w : SignedPerm::all(3)) {
    const auto [pos, neg] = w.signed_cycle_type();
    CHECK(ch.values[class_of(w)] == (neg.size() % 2 ? -1 : 1));
  }
  // ([1^n],∅) is the sign of the underlying permutation.
  const auto sg = irr_character(bp({1, 1, 1}, {}));
  for (const auto& w : SignedPerm::all(3)) {
    const auto [pos, neg] = w.signed_cycle_type();
    int parity = 0;
    for (int c : pos) parity += c - 1;
    for (int c : neg) parity += c - 1;
    CHECK(sg.values[class_of(w)] == (parity % 2 ? -1 : 1));
  }
}

TEST_CASE("decomposition") {
  auto triv = decompose(trivial_character(Group::W, 3));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].label == bp({3}, {}));
  CHECK(triv[0].multiplicity == 1);
  for (const auto& c : decompose(regular_character(Group::W, 2))) CHECK(irr_character(c.label).dimension() == c.multiplicity);
  CHECK(decompose(regular_character(Group::W, 2)).size() == 5);
  auto hyp = perm_character_hyperplanes(2);
  CHECK(hyp.dimension() == 4);
  Integer dim = 0;
  for (const auto& c : decompose(hyp)) {
    CHECK(c.multiplicity > 0);
    dim += c.multiplicity * irr_character(c.label).dimension().get_num();
  }
  CHECK(dim == 4);
  // Random nonnegative combinations round-trip.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Constituent> parts;
    for (const auto& b : bipartitions_of(4))
      if (int m = coin(rng)) parts.push_back({b, m});
    CHECK(reconstruct(Group::W, 4, decompose(reconstruct(Group::W, 4, parts))) == reconstruct(Group::W, 4, parts));
    auto back = decompose(reconstruct(Group::W, 4, parts));
    CHECK(back.size() == parts.size());
  }
  ClassFunction half = Rational(1, 2) * trivial_character(Group::W, 2);
  CHECK_THROWS_AS(decompose(half), std::invalid_argument);
}

TEST_CASE("permutation characters on flats") {
  CHECK(perm_character_flats(3, 0) == trivial_character(Group::W, 3));
  CHECK(perm_character_flats(2, 1).dimension() == 4);
  CHECK(perm_character_flats(3, 1).dimension() == 13);
  // Value at w equals the number of flats fixed by w, from explicit flats.
  const auto& t = class_table(Group::W, 3);
  const auto ch = perm_character_flats(3, 1);
  for (std::size_t k = 0; k < t.classes.size(); ++k) {
    const auto w = t.representative(k);
    long fixed = 0;
    for (const auto& phi : orbit_classes(3, 1)) {
      auto f = arr::flat_of(phi);
      fixed += arr::flat_of(act(w, phi)) == f;
    }
    CHECK(ch.values[k] == fixed);
  }
}

TEST_CASE("induced characters") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= std::min(n, 2); ++d)
      for (const auto& phi : projective_orbit_representatives(n, d))
        CHECK(induced_from_stabilizer(phi) == induced_from_stabilizer_brute(phi));
  CHECK(induced_from_stabilizer(BMorphism::to_point(4)) == trivial_character(Group::W, 4));
  CHECK(induced_from_stabilizer(BMorphism::identity(3)) == regular_character(Group::W, 3));
  // Frobenius: the dimension is the index of the stabilizer.
  BMorphism phi(4, 2, {0, 1, -2, 1});
  CHECK(induced_from_stabilizer(phi).dimension() == Rational(hyperoctahedral_order(4)) / Rational(stabilizer_order(phi)));
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 2; ++d) CHECK(projective_character(n, d).dimension() == hom_count(n, d));
}

TEST_CASE("length bounds") {
  auto r0 = length_bound_report(0, 4);
  REQUIRE(r0.constituents.size() == 1);
  CHECK(r0.constituents[0].label == bp({4}, {}));
  CHECK(verify_length_bounds(1, 4));
  CHECK(verify_length_bounds(2, 5));
  CHECK(verify_length_bounds(1, 6));
}

TEST_CASE("the degree-one virtual character") {
  CHECK(d1_virtual_character(3).dimension() == 4);
  CHECK(d1_virtual_character(4).dimension() == 24);
  for (int n = 3; n <= 6; ++n) {
    const auto ch = d1_virtual_character(n);
    CHECK(ch.dimension() == (power(3, static_cast<unsigned>(n)) - 1) / 2 - n * n);
    for (const auto& c : decompose(ch)) {
      CHECK(c.multiplicity > 0);
      CHECK(c.label.mu.length() <= 1);
      CHECK(c.label.lambda.length() <= 2);
    }
  }
  for (int n = 1; n <= 2; ++n) CHECK(decompose(d1_virtual_character(n)).empty());
}

TEST_CASE("closed-form multiplicity table") {
  CHECK_FALSE(c_lambda_formula(Partition(), 3).has_value());
  CHECK(c_lambda_formula(Partition({3}), 3) == Integer(0));
  CHECK(c_lambda_formula(Partition({2, 1}), 3) == Integer(0));
  CHECK(c_lambda_formula(Partition({1}), 3) == Integer(0));
  CHECK(c_lambda_formula(Partition({2}), 4) == Integer(1));
  CHECK(c_lambda_formula(Partition({2}), 5) == Integer(2));
  for (int n = 3; n <= 6; ++n) {
    auto rep = c_lambda_report(n);
    CHECK(rep.total_dimension == (power(3, static_cast<unsigned>(n)) - 1) / 2 - n * n);
    CHECK(rep.outside_shape.empty());
    Integer computed = 0;
    for (const auto& row : rep.rows)
      computed += row.computed * binomial(static_cast<unsigned>(n), static_cast<unsigned>(row.lambda.size())) *
                  hook_dimension(row.lambda);
    CHECK(computed == rep.total_dimension);
  }
}

TEST_CASE("character table export") {
  const auto csv = character_table_csv(Group::W, 2);
  CHECK(csv.rfind("irreducible,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 5);
}
