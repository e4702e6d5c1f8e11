#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fsb/core.hpp"
#include "fsb/numeric.hpp"
#include "fsb/polynomial.hpp"

namespace fsb::arr {

enum class Kind { A, B };

/// "A" or "B". Type D is refused: its flats are not closed under contraction.
Kind parse_kind(const std::string& s);
std::string to_string(Kind k);

/// Isomorphism type B_b × ∏ 𝒜_{E_i}, |E_i| = a_i. Factors with a_i = 1 are
/// empty arrangements and are dropped; the rest are kept in descending order.
struct ArrIsoType {
  int b = 0;
  std::vector<int> alpha;

  ArrIsoType() = default;
  ArrIsoType(int b, std::vector<int> alpha);
  static ArrIsoType B(int b) { return ArrIsoType(b, {}); }
  /// The braid arrangement on a set of the given size.
  static ArrIsoType A(int size) { return ArrIsoType(0, {size}); }

  /// b + Σ (a_i - 1)
  int rank() const;
  bool empty() const { return b == 0 && alpha.empty(); }

  /// "B3*A2*A1": the B factor by its rank, A factors by Coxeter rank a_i - 1.
  /// "B0" is the empty type.
  std::string canonical() const;
  /// Inverse of canonical(); also accepts factors in any order.
  static ArrIsoType parse(const std::string& text);

  friend ArrIsoType operator*(const ArrIsoType& x, const ArrIsoType& y);
  friend auto operator<=>(const ArrIsoType&, const ArrIsoType&) = default;
};

/// A flat of the type A or B Coxeter arrangement on n coordinates: the zero
/// block (type B only) and blocks of signed coordinates that are equal up to
/// the recorded signs. Each block starts with its smallest coordinate, positive;
/// blocks are ordered by that coordinate. Type A blocks carry no signs.
struct FlatDescriptor {
  Kind kind = Kind::B;
  int n = 0;
  std::vector<int> zero_block;
  std::vector<std::vector<int>> blocks;

  int dimension() const { return static_cast<int>(blocks.size()) - (kind == Kind::A ? 1 : 0); }
  /// Rank in the lattice of flats (codimension in the essential space).
  int rank() const;
  std::string to_string() const;

  friend auto operator<=>(const FlatDescriptor&, const FlatDescriptor&) = default;
};

/// All flats of B_n; throws ResourceError if n exceeds max_n.
std::vector<FlatDescriptor> flats_B(int n, int max_n = 8);
/// All flats of the braid arrangement on [n] (set partitions).
std::vector<FlatDescriptor> flats_A(int n, int max_n = 9);

/// The flat cut out by phi: zero block phi^-1(0), blocks the fibers over
/// the positive target elements.
FlatDescriptor flat_of(const BMorphism& phi);
/// Canonical OS_B morphism whose flat is f (inverse of flat_of on orbit representatives).
BMorphism morphism_of(const FlatDescriptor& f);

/// Type of the arrangement restricted to the flat.
ArrIsoType contraction_type(const FlatDescriptor& f);
/// Type of the arrangement of hyperplanes containing the flat.
ArrIsoType localization_type(const FlatDescriptor& f);

/// ∏_{k<=b} (t - (2k-1)) · ∏_i ∏_{k<a_i} (t - k)
series::Polynomial char_poly(const ArrIsoType& type);
/// Poincaré polynomial (-t)^r χ(-1/t).
series::Polynomial os_hilbert(const ArrIsoType& type);

/// Hyperplane x_e = x_f of the type B arrangement, with signed indices and
/// x_0 = 0, x_{-k} = -x_k. Stored normalized: J_{e,0}, or J_{e,f} / J_{e,-f}
/// with 0 < e < |f|.
struct Hyperplane {
  int e = 0;
  int f = 0;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

/// J_{1,0}..J_{n,0}, then J_{e,f} for e<f lexicographically, then J_{e,-f}.
std::vector<Hyperplane> b_hyperplanes(int n);
/// H_{e,f} for e<f lexicographically.
std::vector<Hyperplane> a_hyperplanes(int n);
/// Index in b_hyperplanes(n) of the hyperplane x_x = x_y; -1 when x == y.
int b_hyperplane_index(int n, int x, int y);
/// Index in a_hyperplanes(n) of H_{x,y}; -1 when x == y.
int a_hyperplane_index(int n, int x, int y);
/// Integer normal vector in Q^n.
std::vector<long> normal(const Hyperplane& h, int n);

/// Bitmask over hyperplane indices of the hyperplanes containing the flat.
std::uint64_t contained_hyperplanes(const FlatDescriptor& f);

/// Lattice of flats computed from hyperplane normals by exact rank closure.
struct GeometricLatticeSlice {
  Kind kind;
  int n;
  int total_rank;
  std::vector<std::uint64_t> flats;  // hyperplane sets, sorted by (rank, mask)
  std::vector<int> rank;
  std::vector<Integer> mu;           // μ(bottom, F)

  bool leq(std::size_t i, std::size_t j) const { return (flats[i] & ~flats[j]) == 0; }
  /// Σ_F μ(bottom,F) t^{total_rank - rank F}
  series::Polynomial char_poly() const;
  /// Number of flats of each rank.
  std::vector<long> flat_counts_by_rank() const;
};

/// Throws ResourceError for n > 6.
GeometricLatticeSlice mobius_oracle(int n, Kind kind);

}  // namespace fsb::arr
