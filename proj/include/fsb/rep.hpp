#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fsb/core.hpp"
#include "fsb/numeric.hpp"

namespace fsb::rep {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Sorts descending and drops zeros.
  Partition(std::vector<int> p);
  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return i < length() ? parts[static_cast<std::size_t>(i)] : 0; }
  /// "[3,1]"; "[]" for the empty partition.
  std::string to_string() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n, lexicographically decreasing ([n] first).
std::vector<Partition> partitions_of(int n);
/// ∏ m_i! i^{m_i}: centralizer order of a permutation of this cycle type.
Integer z_value(const Partition& p);
/// Number of standard tableaux, by the hook-length formula.
Integer hook_dimension(const Partition& p);

struct Bipartition {
  Partition lambda;
  Partition mu;
  int size() const { return lambda.size() + mu.size(); }
  /// "([2,1],[1])"
  std::string to_string() const;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

std::vector<Bipartition> bipartitions_of(int n);

enum class Group { S, W };

/// Conjugacy classes of S_n (partitions) or W_n (bipartitions: cycle types
/// of positive cycles, negative cycles), with centralizer orders.
struct ClassTable {
  Group group;
  int n;
  std::vector<Bipartition> classes;  // S_n classes use lambda only
  std::vector<Integer> centralizer;
  Integer order;

  std::size_t index_of(const Bipartition& c) const;
  std::string label(std::size_t k) const;
  /// A group element in class k (W_n: a signed permutation; S_n: unsigned).
  SignedPerm representative(std::size_t k) const;
};

/// Cached; n <= 7 (ResourceError beyond).
const ClassTable& class_table(Group g, int n);

struct ClassFunction {
  Group group;
  int n;
  std::vector<Rational> values;

  /// Value at the identity class.
  Rational dimension() const;
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b);
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b);
  friend ClassFunction operator*(const Rational& c, ClassFunction a);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// Σ_c f(c) g(c) / z_c (characters here are real).
Rational inner(const ClassFunction& f, const ClassFunction& g);

/// Class of a signed permutation in the W table.
std::size_t class_of(const SignedPerm& w);

/// Irreducible character of S_n by Murnaghan-Nakayama.
ClassFunction irr_character(const Partition& lambda);
/// Irreducible character of W_n, n = |λ|+|μ|, by the signed Murnaghan-Nakayama
/// rule: a negative cycle removed from μ contributes an extra sign. ([n],∅) is
/// trivial, (∅,[n]) is the character w -> (-1)^{#negative cycles}.
ClassFunction irr_character(const Bipartition& b);
/// The same character, induced from V_λ ⊠ (V_μ ⊗ ε) on W_{|λ|} × W_{|μ|}.
ClassFunction irr_character_by_induction(const Bipartition& b);
ClassFunction trivial_character(Group g, int n);
ClassFunction regular_character(Group g, int n);

struct Constituent {
  Bipartition label;  // S_n constituents use lambda only
  Integer multiplicity;
};
/// Nonzero multiplicities, in class-table label order. Throws
/// std::invalid_argument if some multiplicity is not an integer.
std::vector<Constituent> decompose(const ClassFunction& ch);
ClassFunction reconstruct(Group g, int n, const std::vector<Constituent>& parts);

/// w -> number of flats with contraction B_d (W_d-orbits of morphisms to
/// [-d,d]) fixed by w.
ClassFunction perm_character_flats(int n, int d);
/// Permutation character on the n² hyperplanes.
ClassFunction perm_character_hyperplanes(int n);
/// Ind from the stabilizer W_φ ≅ W_{|φ^-1(0)|} × ∏ S_{b_k} of the trivial
/// character; w -> #{ψ in the W_n-orbit of φ : ψ∘w = ψ}, by a DP over cycles.
ClassFunction induced_from_stabilizer(const BMorphism& phi);
/// The same by enumerating the orbit (n <= 5).
ClassFunction induced_from_stabilizer_brute(const BMorphism& phi);
/// Character of k Hom([-n,n],[-d,d]): Σ over W_n-orbit representatives.
ClassFunction projective_character(int n, int d);
/// One morphism per W_n-orbit of surjections [-n,n] -> [-d,d] (one per
/// fiber-size vector (z, b_1, ..., b_d)).
std::vector<BMorphism> projective_orbit_representatives(int n, int d);

struct LengthBoundReport {
  int n = 0;
  int d = 0;
  std::vector<Constituent> constituents;
  std::vector<Bipartition> violations;  // ℓ(λ) > d+1 or ℓ(μ) > d
  bool holds() const { return violations.empty(); }
};
LengthBoundReport length_bound_report(int d, int n);
bool verify_length_bounds(int d, int n);

/// Flats of dimension 1 minus hyperplanes, as a virtual character of W_n.
ClassFunction d1_virtual_character(int n);

/// One row per λ with |λ| <= n, ℓ(λ) <= 2: the multiplicity of V_{λ,[n-|λ|]}
/// in d1_virtual_character(n) and the three-case closed form for it.
struct CLambdaRow {
  Partition lambda;
  Integer computed;
  std::optional<Integer> formula;  // absent for λ = ∅ (λ_1 undefined)
  bool agrees() const { return formula && *formula == computed; }
};
struct CLambdaReport {
  int n = 0;
  Integer total_dimension;
  std::vector<CLambdaRow> rows;
  /// Constituents whose μ is not a single row or whose λ has length > 2.
  std::vector<Constituent> outside_shape;
  Integer formula_dimension;  // Σ c_λ dim V_{λ,[n-|λ|]} over rows with a formula
};
/// ⌊λ_1/2⌋ - 1, ⌊λ_1/2⌋, ⌊λ_1/2⌋ + 1 by the three cases; nullopt for λ = ∅.
std::optional<Integer> c_lambda_formula(const Partition& lambda, int n);
CLambdaReport c_lambda_report(int n);

/// CSV with a header row of class labels.
std::string character_table_csv(Group g, int n);

}  // namespace fsb::rep
