#include "fsb/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "fsb/errors.hpp"

namespace fsb {

namespace {

constexpr double kMaxEnumerated = 5e7;

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
  return os.str();
}

}  // namespace

BMorphism::BMorphism(int source_n, int target_d, std::vector<int> images)
    : n_(source_n), d_(target_d), images_(std::move(images)) {
  if (n_ < 0 || d_ < 0) throw ShapeError("object sizes must be nonnegative");
  if (static_cast<int>(images_.size()) != n_)
    throw ShapeError("expected " + std::to_string(n_) + " images, got " + std::to_string(images_.size()));
  std::vector<char> hit(static_cast<std::size_t>(d_) + 1, 0);
  for (int x : images_) {
    if (std::abs(x) > d_) throw ShapeError("image " + std::to_string(x) + " outside [-d,d]");
    hit[static_cast<std::size_t>(std::abs(x))] = 1;
  }
  for (int k = 1; k <= d_; ++k)
    if (!hit[static_cast<std::size_t>(k)]) throw ShapeError("not surjective: orbit " + std::to_string(k) + " missed");
}

BMorphism BMorphism::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  return BMorphism(n, n, std::move(im));
}

BMorphism BMorphism::to_point(int n) { return BMorphism(n, 0, std::vector<int>(static_cast<std::size_t>(n), 0)); }

int BMorphism::operator()(int i) const {
  if (std::abs(i) > n_) throw ShapeError("argument outside [-n,n]");
  if (i == 0) return 0;
  const int v = images_[static_cast<std::size_t>(std::abs(i) - 1)];
  return i > 0 ? v : -v;
}

int BMorphism::zero_fiber() const { return static_cast<int>(std::count(images_.begin(), images_.end(), 0)); }

int BMorphism::fiber_size(int k) const {
  return static_cast<int>(std::count_if(images_.begin(), images_.end(), [k](int x) { return std::abs(x) == k; }));
}

std::string BMorphism::to_string() const {
  return "[-" + std::to_string(n_) + "," + std::to_string(n_) + "]->[-" + std::to_string(d_) + "," +
         std::to_string(d_) + "] (" + join(images_) + ")";
}

ASurjection::ASurjection(int source_n, int target_m, std::vector<int> images)
    : n_(source_n), m_(target_m), images_(std::move(images)) {
  if (n_ < 1 || m_ < 1) throw ShapeError("type A objects are nonempty");
  if (static_cast<int>(images_.size()) != n_) throw ShapeError("image count does not match source size");
  std::vector<char> hit(static_cast<std::size_t>(m_) + 1, 0);
  for (int x : images_) {
    if (x < 1 || x > m_) throw ShapeError("image " + std::to_string(x) + " outside [m]");
    hit[static_cast<std::size_t>(x)] = 1;
  }
  for (int k = 1; k <= m_; ++k)
    if (!hit[static_cast<std::size_t>(k)]) throw ShapeError("not surjective");
}

ASurjection ASurjection::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  return ASurjection(n, n, std::move(im));
}

SignedPerm::SignedPerm(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : images_) {
    const int a = std::abs(x);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) throw ShapeError("not a signed permutation");
    seen[static_cast<std::size_t>(a)] = 1;
  }
}

SignedPerm SignedPerm::identity(int n) { return SignedPerm(BMorphism::identity(n).images()); }

std::vector<SignedPerm> SignedPerm::all(int n) {
  if (n < 0 || n > 8) throw ResourceError("W_n enumeration limited to n <= 8");
  std::vector<SignedPerm> out;
  std::vector<int> im(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      out.emplace_back(im);
      return;
    }
    for (int v = -n; v <= n; ++v) {
      if (v == 0 || used[static_cast<std::size_t>(std::abs(v))]) continue;
      used[static_cast<std::size_t>(std::abs(v))] = 1;
      im[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1);
      used[static_cast<std::size_t>(std::abs(v))] = 0;
    }
  };
  rec(0);
  return out;
}

int SignedPerm::operator()(int i) const {
  if (i == 0) return 0;
  const int v = images_[static_cast<std::size_t>(std::abs(i) - 1)];
  return i > 0 ? v : -v;
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) {
    const int v = images_[static_cast<std::size_t>(i - 1)];
    inv[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
  }
  return SignedPerm(std::move(inv));
}

std::pair<std::vector<int>, std::vector<int>> SignedPerm::signed_cycle_type() const {
  std::vector<int> pos, neg;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    int len = 0;
    int sign = 1;
    int i = start;
    do {
      seen[static_cast<std::size_t>(i - 1)] = 1;
      const int v = images_[static_cast<std::size_t>(i - 1)];
      if (v < 0) sign = -sign;
      i = std::abs(v);
      ++len;
    } while (i != start);
    (sign > 0 ? pos : neg).push_back(len);
  }
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  return {pos, neg};
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.size() != b.size()) throw ShapeError("signed permutations of different sizes");
  std::vector<int> im(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) im[static_cast<std::size_t>(i - 1)] = a(b(i));
  return SignedPerm(std::move(im));
}

BMorphism compose(const BMorphism& psi, const BMorphism& phi) {
  if (phi.target() != psi.source())
    throw ShapeError("cannot compose: target [-" + std::to_string(phi.target()) + "," + std::to_string(phi.target()) +
                     "] is not source [-" + std::to_string(psi.source()) + "," + std::to_string(psi.source()) + "]");
  std::vector<int> im(phi.images().size());
  for (int i = 1; i <= phi.source(); ++i) im[static_cast<std::size_t>(i - 1)] = psi(phi(i));
  return BMorphism(phi.source(), psi.target(), std::move(im));
}

ASurjection compose(const ASurjection& psi, const ASurjection& phi) {
  if (phi.target() != psi.source()) throw ShapeError("cannot compose type A surjections");
  std::vector<int> im(phi.images().size());
  for (int i = 1; i <= phi.source(); ++i) im[static_cast<std::size_t>(i - 1)] = psi(phi(i));
  return ASurjection(phi.source(), psi.target(), std::move(im));
}

std::vector<BMorphism> enumerate_hom(int n, int d) {
  if (n < 0 || d < 0) throw ShapeError("object sizes must be nonnegative");
  if (d > n) return {};
  const double total = std::pow(2.0 * d + 1, n);
  if (total > kMaxEnumerated) throw ResourceError("enumerate_hom(" + std::to_string(n) + "," + std::to_string(d) + ") too large");
  std::vector<BMorphism> out;
  std::vector<int> im(static_cast<std::size_t>(n), -d);
  std::vector<int> hits(static_cast<std::size_t>(d) + 1, 0);
  // Odometer over {-d..d}^n; the last position varies fastest.
  std::function<void(int, int)> rec = [&](int pos, int covered) {
    if (d - covered > n - pos) return;
    if (pos == n) {
      out.emplace_back(n, d, im);
      return;
    }
    for (int v = -d; v <= d; ++v) {
      im[static_cast<std::size_t>(pos)] = v;
      const std::size_t a = static_cast<std::size_t>(std::abs(v));
      const bool fresh = a > 0 && hits[a] == 0;
      ++hits[a];
      rec(pos + 1, covered + (fresh ? 1 : 0));
      --hits[a];
    }
  };
  rec(0, 0);
  return out;
}

std::vector<ASurjection> enumerate_surjections(int n, int m) {
  if (n < 1 || m < 1) throw ShapeError("type A objects are nonempty");
  if (m > n) return {};
  if (std::pow(double(m), n) > kMaxEnumerated) throw ResourceError("enumerate_surjections too large");
  std::vector<ASurjection> out;
  std::vector<int> im(static_cast<std::size_t>(n));
  std::vector<int> hits(static_cast<std::size_t>(m) + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int covered) {
    if (m - covered > n - pos) return;
    if (pos == n) {
      out.emplace_back(n, m, im);
      return;
    }
    for (int v = 1; v <= m; ++v) {
      im[static_cast<std::size_t>(pos)] = v;
      const bool fresh = hits[static_cast<std::size_t>(v)]++ == 0;
      rec(pos + 1, covered + (fresh ? 1 : 0));
      --hits[static_cast<std::size_t>(v)];
    }
  };
  rec(0, 0);
  return out;
}

Integer hom_count(int n, int d) {
  if (n < 0 || d < 0) throw ShapeError("object sizes must be nonnegative");
  Integer total = 0;
  for (int j = 0; j <= d; ++j) {
    Integer term = binomial(static_cast<unsigned>(d), static_cast<unsigned>(j)) *
                   power(Integer(2 * (d - j) + 1), static_cast<unsigned>(n));
    if (j % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

Integer hyperoctahedral_order(int n) {
  return power(Integer(2), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
}

BMorphism canonical_representative(const BMorphism& phi) {
  std::vector<int> label(static_cast<std::size_t>(phi.target()) + 1, 0);  // signed new label per old orbit
  int next = 0;
  std::vector<int> im(phi.images().size());
  for (std::size_t i = 0; i < im.size(); ++i) {
    const int x = phi.images()[i];
    if (x == 0) continue;
    int& l = label[static_cast<std::size_t>(std::abs(x))];
    if (l == 0) l = x > 0 ? ++next : -++next;
    im[i] = x > 0 ? l : -l;
  }
  return BMorphism(phi.source(), phi.target(), std::move(im));
}

std::vector<BMorphism> orbit_classes(int n, int d) {
  if (n < 0 || d < 0) throw ShapeError("object sizes must be nonnegative");
  std::vector<BMorphism> out;
  if (d > n) return out;
  std::vector<int> im(static_cast<std::size_t>(n));
  // Restricted-growth strings: each position is 0, ±(an orbit already seen),
  // or the next orbit label with positive sign. Values visited in increasing order.
  std::function<void(int, int)> rec = [&](int pos, int seen) {
    if (d - seen > n - pos) return;
    if (pos == n) {
      out.emplace_back(n, d, im);
      return;
    }
    for (int v = -seen; v <= seen + 1 && v <= d; ++v) {
      im[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v == seen + 1 ? seen + 1 : seen);
    }
  };
  rec(0, 0);
  return out;
}

BMorphism act(const SignedPerm& w, const BMorphism& phi) {
  if (w.size() != phi.source()) throw ShapeError("signed permutation size does not match the source");
  std::vector<int> im(phi.images().size());
  for (int i = 1; i <= phi.source(); ++i) im[static_cast<std::size_t>(i - 1)] = phi(w(i));
  return BMorphism(phi.source(), phi.target(), std::move(im));
}

Integer stabilizer_order(const BMorphism& phi) {
  const int z = phi.zero_fiber();
  Integer out = hyperoctahedral_order(z);
  for (int k = 1; k <= phi.target(); ++k) out *= factorial(static_cast<unsigned>(phi.fiber_size(k)));
  return out;
}

}  // namespace fsb
