#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "fsb/arrangements.hpp"
#include "fsb/core.hpp"
#include "fsb/linalg.hpp"

namespace fsb::os {

/// Orlik-Solomon algebra of a central arrangement given by integer normals,
/// with its no-broken-circuit basis under the order of the hyperplane list.
class OSAlgebraModel {
 public:
  /// Builds NBC bases through degree max_degree (all degrees when negative).
  OSAlgebraModel(std::vector<std::vector<long>> normals, int ambient_dim, int max_degree = -1);

  int num_hyperplanes() const { return static_cast<int>(normals_.size()); }
  int ambient_dim() const { return dim_; }
  int rank() const { return rank_; }
  int max_degree() const { return max_degree_; }

  /// NBC sets of size k, each sorted increasingly; lexicographic order.
  const std::vector<std::vector<int>>& basis(int k) const;
  std::size_t dim(int k) const { return basis(k).size(); }
  std::vector<std::size_t> graded_dims() const;
  std::optional<std::size_t> basis_index(const std::vector<int>& nbc_set) const;

  bool dependent(const std::vector<int>& hyperplanes) const;
  bool is_nbc(const std::vector<int>& sorted) const;

  using Memo = std::map<std::vector<int>, std::vector<Rational>>;
  /// Coordinates of u_{h_1} ... u_{h_k} (in the order given) in the degree-k basis.
  std::vector<Rational> normal_form(const std::vector<int>& monomial, Memo* memo = nullptr) const;
  /// ∂u_D = Σ_i (-1)^i ∏_{j != i} u_{h_j}, reduced to normal form.
  std::vector<Rational> boundary(const std::vector<int>& d) const;

 private:
  std::vector<Rational> sorted_normal_form(const std::vector<int>& sorted, Memo& memo) const;
  /// A subset T of the sorted independent set s and a hyperplane h < min T with
  /// T ∪ {h} a circuit, if s contains a broken circuit.
  std::optional<std::pair<std::vector<int>, int>> broken_circuit(const std::vector<int>& s) const;
  bool in_span(const std::vector<int>& set, int h) const;

  int dim_;
  int rank_;
  int max_degree_;
  std::vector<std::vector<long>> normals_;
  std::vector<std::vector<std::vector<int>>> basis_;
  std::vector<std::map<std::vector<int>, std::size_t>> index_;
};

/// Cached models of the Coxeter arrangements, hyperplanes ordered as in
/// arr::b_hyperplanes / arr::a_hyperplanes. Bounds: n <= 6 (B), n <= 7 (A).
std::shared_ptr<const OSAlgebraModel> build_os(int n, arr::Kind kind, int max_degree = -1);

/// Degree-i linear map between OS algebras, as a matrix in NBC bases
/// (rows index the codomain basis). A dual map is the transpose between the
/// dual spaces, with dual bases.
struct GradedMap {
  std::shared_ptr<const OSAlgebraModel> source;
  std::shared_ptr<const OSAlgebraModel> target;
  int degree = 0;
  bool dual = false;
  Matrix matrix;
};

/// S^i of the source arrangement to S^i of the contraction to phi's flat,
/// identified with the target arrangement: u_{J_ef} -> u_{J_phi(e)phi(f)}, or 0
/// when phi(e) = phi(f).
GradedMap restriction_map(const BMorphism& phi, int i);
GradedMap restriction_map(const ASurjection& phi, int i);
GradedMap dual_map(const GradedMap& m);

/// Degree-1 dual basis vector v_{xy}: 1 on u_{J_xy}, 0 on the other hyperplanes.
std::vector<Rational> dual_generator(int n, int x, int y);

struct SpanReport {
  std::size_t dual_dim = 0;
  std::size_t span_rank = 0;
  std::size_t maps_used = 0;
  bool spans() const { return span_rank == dual_dim; }
};

/// Rank of the span of pullbacks into (S^i)^*[-n,n] along all morphisms to
/// [-m,m], m <= m_bound (one per W_m-orbit; post-composition by W_m only
/// changes the pullback by an automorphism of the target).
SpanReport spanning_report(int i, int n, int m_bound);
/// Same for ((S^1)^*)^{⊗i}, pullbacks acting factorwise.
SpanReport tensor_spanning_report(int i, int n, int m_bound);
bool spanning_check(int i, int n, int m_bound);

/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace fsb::os
