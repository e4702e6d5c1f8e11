#include "fsb/os_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "fsb/errors.hpp"

namespace fsb::os {

namespace {

// Integer row echelon form; rows are kept primitive (gcd 1), so entries stay
// small for the 0/±1 normals of Coxeter arrangements.
class IntSpan {
 public:
  explicit IntSpan(int dim) : dim_(static_cast<std::size_t>(dim)) {}

  std::size_t rank() const { return rows_.size(); }

  bool add(std::vector<long> v) {
    reduce(v);
    const auto p = pivot(v);
    if (p == dim_) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(std::vector<long> v) const {
    reduce(v);
    return pivot(v) == dim_;
  }

 private:
  std::size_t pivot(const std::vector<long>& v) const {
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    return p;
  }

  void reduce(std::vector<long>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (v[p] == 0) continue;
      const long a = rows_[k][p];
      const long b = v[p];
      long g = 0;
      for (std::size_t j = 0; j < dim_; ++j) {
        v[j] = a * v[j] - b * rows_[k][j];
        g = std::gcd(g, v[j]);
      }
      if (g > 1)
        for (auto& x : v) x /= g;
    }
  }

  std::size_t dim_;
  std::vector<std::vector<long>> rows_;
  std::vector<std::size_t> pivots_;
};

// Sign of the permutation sorting seq; 0 if seq has a repeated entry.
int sort_with_sign(std::vector<int>& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  return sign;
}

void axpy(std::vector<Rational>& y, const Rational& a, const std::vector<Rational>& x) {
  for (std::size_t k = 0; k < y.size(); ++k)
    if (x[k] != 0) y[k] += a * x[k];
}

}  // namespace

OSAlgebraModel::OSAlgebraModel(std::vector<std::vector<long>> normals, int ambient_dim, int max_degree)
    : dim_(ambient_dim), normals_(std::move(normals)) {
  if (num_hyperplanes() > 64) throw ResourceError("OS model limited to 64 hyperplanes");
  for (const auto& v : normals_)
    if (static_cast<int>(v.size()) != dim_) throw ShapeError("normal vector has the wrong dimension");
  IntSpan all(dim_);
  for (const auto& v : normals_) all.add(v);
  rank_ = static_cast<int>(all.rank());
  max_degree_ = max_degree < 0 ? rank_ : std::min(max_degree, rank_);

  // NBC sets are closed under taking suffixes; grow them by prepending a
  // smaller hyperplane h and keep the result if h is independent of the rest
  // and no hyperplane below h lies in the new span.
  basis_.assign(static_cast<std::size_t>(max_degree_) + 1, {});
  basis_[0].push_back({});
  for (int k = 1; k <= max_degree_; ++k) {
    auto& out = basis_[static_cast<std::size_t>(k)];
    for (const auto& t : basis_[static_cast<std::size_t>(k - 1)]) {
      const int top = t.empty() ? num_hyperplanes() : t.front();
      IntSpan base(dim_);
      for (int x : t) base.add(normals_[static_cast<std::size_t>(x)]);
      for (int h = 0; h < top; ++h) {
        IntSpan grown = base;
        if (!grown.add(normals_[static_cast<std::size_t>(h)])) continue;
        bool nbc = true;
        for (int g = 0; g < h && nbc; ++g)
          if (grown.contains(normals_[static_cast<std::size_t>(g)])) nbc = false;
        if (!nbc) continue;
        std::vector<int> s{h};
        s.insert(s.end(), t.begin(), t.end());
        out.push_back(std::move(s));
      }
    }
    std::sort(out.begin(), out.end());
  }
  index_.resize(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t j = 0; j < basis_[k].size(); ++j) index_[k][basis_[k][j]] = j;
}

const std::vector<std::vector<int>>& OSAlgebraModel::basis(int k) const {
  if (k < 0 || k > max_degree_) {
    if (k > rank_ || k < 0) {
      static const std::vector<std::vector<int>> none;
      return none;
    }
    throw ResourceError("degree " + std::to_string(k) + " was not built (max degree " + std::to_string(max_degree_) + ")");
  }
  return basis_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> OSAlgebraModel::graded_dims() const {
  std::vector<std::size_t> d;
  for (const auto& b : basis_) d.push_back(b.size());
  return d;
}

std::optional<std::size_t> OSAlgebraModel::basis_index(const std::vector<int>& nbc_set) const {
  const std::size_t k = nbc_set.size();
  if (k >= index_.size()) return std::nullopt;
  auto it = index_[k].find(nbc_set);
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

bool OSAlgebraModel::dependent(const std::vector<int>& hyperplanes) const {
  IntSpan s(dim_);
  for (int h : hyperplanes)
    if (!s.add(normals_.at(static_cast<std::size_t>(h)))) return true;
  return false;
}

bool OSAlgebraModel::in_span(const std::vector<int>& set, int h) const {
  IntSpan s(dim_);
  for (int x : set) s.add(normals_[static_cast<std::size_t>(x)]);
  return s.contains(normals_[static_cast<std::size_t>(h)]);
}

bool OSAlgebraModel::is_nbc(const std::vector<int>& sorted) const {
  if (dependent(sorted)) return false;
  return !broken_circuit(sorted).has_value();
}

std::optional<std::pair<std::vector<int>, int>> OSAlgebraModel::broken_circuit(const std::vector<int>& s) const {
  for (std::size_t j = 0; j < s.size(); ++j) {
    const std::vector<int> suffix(s.begin() + static_cast<long>(j), s.end());
    for (int h = 0; h < s[j]; ++h) {
      if (!in_span(suffix, h)) continue;
      // The suffix is independent, so h has a unique expansion; its support T
      // is the set of elements that cannot be dropped.
      std::vector<int> support;
      for (std::size_t k = 0; k < suffix.size(); ++k) {
        std::vector<int> rest = suffix;
        rest.erase(rest.begin() + static_cast<long>(k));
        if (!in_span(rest, h)) support.push_back(suffix[k]);
      }
      return std::pair{support, h};
    }
  }
  return std::nullopt;
}

std::vector<Rational> OSAlgebraModel::normal_form(const std::vector<int>& monomial, Memo* memo) const {
  const int k = static_cast<int>(monomial.size());
  std::vector<Rational> zero(dim(k));
  for (int h : monomial)
    if (h < 0 || h >= num_hyperplanes()) throw ShapeError("hyperplane index out of range");
  std::vector<int> s = monomial;
  const int sign = sort_with_sign(s);
  if (sign == 0) return zero;
  Memo local;
  auto v = sorted_normal_form(s, memo ? *memo : local);
  if (sign < 0)
    for (auto& x : v) x = -x;
  return v;
}

std::vector<Rational> OSAlgebraModel::sorted_normal_form(const std::vector<int>& s, Memo& memo) const {
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  std::vector<Rational> out(dim(static_cast<int>(s.size())));
  if (auto idx = basis_index(s)) {
    out[*idx] = 1;
  } else if (!dependent(s)) {
    auto bc = broken_circuit(s);
    if (!bc) throw InternalError("independent non-basis set without a broken circuit");
    const auto& [t, h] = *bc;
    // u_S = ε u_T u_{S\T}; with C = {h} ∪ T sorted as c_0 = h < c_1 < ...,
    // u_T = u_{C\c_0} = -Σ_{k>=1} (-1)^k u_{C\c_k}.
    std::vector<int> rest;
    std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(rest));
    std::vector<int> order = t;
    order.insert(order.end(), rest.begin(), rest.end());
    const int eps = sort_with_sign(order);  // order now equals s
    for (std::size_t k = 0; k < t.size(); ++k) {
      // C \ c_{k+1}: h followed by T without its k-th element.
      std::vector<int> term{h};
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != k) term.push_back(t[j]);
      term.insert(term.end(), rest.begin(), rest.end());
      const int sg = sort_with_sign(term);
      if (sg == 0 || dependent(term)) continue;
      const int coeff = -eps * ((k + 1) % 2 ? -1 : 1) * sg;
      axpy(out, Rational(coeff), sorted_normal_form(term, memo));
    }
  }
  memo.emplace(s, out);
  return out;
}

std::vector<Rational> OSAlgebraModel::boundary(const std::vector<int>& d) const {
  const int k = static_cast<int>(d.size());
  std::vector<Rational> out(k > 0 ? dim(k - 1) : 0);
  Memo memo;
  for (int i = 0; i < k; ++i) {
    std::vector<int> rest;
    for (int j = 0; j < k; ++j)
      if (j != i) rest.push_back(d[static_cast<std::size_t>(j)]);
    // (-1)^i with i counted from 1.
    axpy(out, Rational((i + 1) % 2 ? -1 : 1), normal_form(rest, &memo));
  }
  return out;
}

std::shared_ptr<const OSAlgebraModel> build_os(int n, arr::Kind kind, int max_degree) {
  const int bound = kind == arr::Kind::B ? 6 : 7;
  if (n < 0 || (kind == arr::Kind::A && n < 1)) throw ShapeError("invalid arrangement size");
  if (n > bound) throw ResourceError("explicit OS models limited to n <= " + std::to_string(bound));
  static std::mutex mu;
  static std::map<std::tuple<int, arr::Kind, int>, std::shared_ptr<const OSAlgebraModel>> cache;
  const int rank = kind == arr::Kind::B ? n : n - 1;
  const int deg = max_degree < 0 ? rank : std::min(max_degree, rank);
  const auto key = std::tuple{n, kind, deg};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    // A model built to a higher degree serves lower-degree requests too.
    for (int d = deg + 1; d <= rank; ++d)
      if (auto it = cache.find(std::tuple{n, kind, d}); it != cache.end()) return it->second;
  }
  std::vector<std::vector<long>> normals;
  for (const auto& h : kind == arr::Kind::B ? arr::b_hyperplanes(n) : arr::a_hyperplanes(n))
    normals.push_back(arr::normal(h, n));
  auto model = std::make_shared<const OSAlgebraModel>(std::move(normals), n, deg);
  std::lock_guard lock(mu);
  return cache.emplace(key, model).first->second;
}

namespace {

GradedMap restriction_from_images(std::shared_ptr<const OSAlgebraModel> src, std::shared_ptr<const OSAlgebraModel> dst,
                                  const std::vector<int>& image, int i) {
  const auto& sb = src->basis(i);
  Matrix m(dst->dim(i), sb.size());
  OSAlgebraModel::Memo memo;
  for (std::size_t c = 0; c < sb.size(); ++c) {
    std::vector<int> mono;
    bool zero = false;
    for (int h : sb[c]) {
      const int g = image[static_cast<std::size_t>(h)];
      if (g < 0) {
        zero = true;
        break;
      }
      mono.push_back(g);
    }
    if (zero) continue;
    auto v = dst->normal_form(mono, &memo);
    for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
  }
  return GradedMap{std::move(src), std::move(dst), i, false, std::move(m)};
}

}  // namespace

GradedMap restriction_map(const BMorphism& phi, int i) {
  auto src = build_os(phi.source(), arr::Kind::B, i);
  auto dst = build_os(phi.target(), arr::Kind::B, i);
  std::vector<int> image;
  for (const auto& h : arr::b_hyperplanes(phi.source()))
    image.push_back(arr::b_hyperplane_index(phi.target(), phi(h.e), phi(h.f)));
  return restriction_from_images(std::move(src), std::move(dst), image, i);
}

GradedMap restriction_map(const ASurjection& phi, int i) {
  auto src = build_os(phi.source(), arr::Kind::A, i);
  auto dst = build_os(phi.target(), arr::Kind::A, i);
  std::vector<int> image;
  for (const auto& h : arr::a_hyperplanes(phi.source()))
    image.push_back(arr::a_hyperplane_index(phi.target(), phi(h.e), phi(h.f)));
  return restriction_from_images(std::move(src), std::move(dst), image, i);
}

GradedMap dual_map(const GradedMap& m) {
  return GradedMap{m.target, m.source, m.degree, !m.dual, m.matrix.transposed()};
}

std::vector<Rational> dual_generator(int n, int x, int y) {
  const int idx = arr::b_hyperplane_index(n, x, y);
  if (idx < 0) throw ShapeError("v_{xy} needs x != y");
  std::vector<Rational> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(idx)] = 1;
  return v;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

namespace {

template <class RowsOf>
SpanReport span_of_pullbacks(std::size_t dual_dim, int n, int m_bound, RowsOf rows_of) {
  SpanReport rep;
  rep.dual_dim = dual_dim;
  RowSpace space(dual_dim);
  for (int m = 0; m <= std::min(m_bound, n) && !space.full(); ++m)
    for (const auto& phi : orbit_classes(n, m)) {
      ++rep.maps_used;
      // Pullback images are the columns of the dual matrix, i.e. the rows of
      // the restriction matrix.
      const Matrix r = rows_of(phi);
      for (std::size_t k = 0; k < r.rows() && !space.full(); ++k) space.add(r.row(k));
      if (space.full()) break;
    }
  rep.span_rank = space.rank();
  return rep;
}

}  // namespace

SpanReport spanning_report(int i, int n, int m_bound) {
  if (i < 0) throw ShapeError("negative degree");
  const auto model = build_os(n, arr::Kind::B, i);
  return span_of_pullbacks(model->dim(i), n, m_bound, [&](const BMorphism& phi) { return restriction_map(phi, i).matrix; });
}

SpanReport tensor_spanning_report(int i, int n, int m_bound) {
  if (i < 1) throw ShapeError("tensor degree must be positive");
  const std::size_t d1 = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::size_t dual_dim = 1;
  for (int k = 0; k < i; ++k) dual_dim *= d1;
  return span_of_pullbacks(dual_dim, n, m_bound, [&](const BMorphism& phi) {
    const Matrix r1 = restriction_map(phi, 1).matrix;
    Matrix r = r1;
    for (int k = 1; k < i; ++k) r = kron(r, r1);
    return r;
  });
}

bool spanning_check(int i, int n, int m_bound) { return spanning_report(i, n, m_bound).spans(); }

}  // namespace fsb::os
