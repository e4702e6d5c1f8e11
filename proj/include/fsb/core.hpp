#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "fsb/numeric.hpp"

namespace fsb {

/// Equivariant surjection [-n,n] -> [-d,d]. Only the images of 1..n are
/// stored; phi(-i) = -phi(i) and phi(0) = 0 follow from the representation.
class BMorphism {
 public:
  /// Throws ShapeError if an image is out of range or some target orbit is missed.
  BMorphism(int source_n, int target_d, std::vector<int> images);
  static BMorphism identity(int n);
  /// The unique morphism [-n,n] -> [0,0].
  static BMorphism to_point(int n);

  int source() const { return n_; }
  int target() const { return d_; }
  const std::vector<int>& images() const { return images_; }
  /// phi(i) for i in [-n,n].
  int operator()(int i) const;

  /// Number of positive i with phi(i) = 0.
  int zero_fiber() const;
  /// Number of positive i with |phi(i)| = k, k >= 1.
  int fiber_size(int k) const;

  std::string to_string() const;

  friend auto operator<=>(const BMorphism&, const BMorphism&) = default;

 private:
  int n_;
  int d_;
  std::vector<int> images_;
};

/// Surjection [n] -> [m] (type A), images 1-based.
class ASurjection {
 public:
  ASurjection(int source_n, int target_m, std::vector<int> images);
  static ASurjection identity(int n);

  int source() const { return n_; }
  int target() const { return m_; }
  const std::vector<int>& images() const { return images_; }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  friend auto operator<=>(const ASurjection&, const ASurjection&) = default;

 private:
  int n_;
  int m_;
  std::vector<int> images_;
};

/// Element of the hyperoctahedral group W_n, acting on [-n,n].
class SignedPerm {
 public:
  /// images[i-1] = w(i); throws ShapeError unless |images| is a permutation of [n].
  explicit SignedPerm(std::vector<int> images);
  static SignedPerm identity(int n);
  /// All 2^n n! elements in lexicographic order of images; n <= 8.
  static std::vector<SignedPerm> all(int n);

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int i) const;

  SignedPerm inverse() const;
  /// (positive cycle lengths, negative cycle lengths), each sorted descending.
  std::pair<std::vector<int>, std::vector<int>> signed_cycle_type() const;

  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> images_;
};

/// a ∘ b
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
/// psi ∘ phi; throws ShapeError unless phi's target is psi's source.
BMorphism compose(const BMorphism& psi, const BMorphism& phi);
ASurjection compose(const ASurjection& psi, const ASurjection& phi);

/// Every morphism [-n,n] -> [-d,d] in lexicographic order of images.
/// Throws ResourceError past 5e7 candidate maps.
std::vector<BMorphism> enumerate_hom(int n, int d);
std::vector<ASurjection> enumerate_surjections(int n, int m);

/// |Hom([-n,n],[-d,d])| by inclusion-exclusion over missed target orbits.
Integer hom_count(int n, int d);
/// |W_n| = 2^n n!
Integer hyperoctahedral_order(int n);

/// Representative of phi's orbit under post-composition by W_d: orbits of the
/// target are relabeled in order of first appearance, first appearance positive.
BMorphism canonical_representative(const BMorphism& phi);
/// Canonical representatives of all W_d-orbits, in lexicographic order.
std::vector<BMorphism> orbit_classes(int n, int d);

/// phi ∘ w (a right action of W_n).
BMorphism act(const SignedPerm& w, const BMorphism& phi);
/// |{w : phi ∘ w = phi}| = 2^z z! prod_k b_k!
Integer stabilizer_order(const BMorphism& phi);

}  // namespace fsb
