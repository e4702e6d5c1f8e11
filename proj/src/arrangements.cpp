#include "fsb/arrangements.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "fsb/errors.hpp"
#include "fsb/linalg.hpp"

namespace fsb::arr {

Kind parse_kind(const std::string& s) {
  if (s == "A" || s == "a") return Kind::A;
  if (s == "B" || s == "b") return Kind::B;
  if (s == "D" || s == "d")
    throw std::invalid_argument("type D is not supported: its flats are not closed under contraction");
  throw std::invalid_argument("unknown arrangement type '" + s + "' (expected A or B)");
}

std::string to_string(Kind k) { return k == Kind::A ? "A" : "B"; }

ArrIsoType::ArrIsoType(int b_, std::vector<int> alpha_) : b(b_) {
  if (b < 0) throw ShapeError("negative B rank");
  for (int a : alpha_) {
    if (a < 1) throw ShapeError("A factor sizes must be positive");
    if (a > 1) alpha.push_back(a);
  }
  std::sort(alpha.rbegin(), alpha.rend());
}

int ArrIsoType::rank() const {
  int r = b;
  for (int a : alpha) r += a - 1;
  return r;
}

std::string ArrIsoType::canonical() const {
  std::string s;
  if (b > 0 || alpha.empty()) s = "B" + std::to_string(b);
  for (int a : alpha) s += (s.empty() ? "" : "*") + std::string("A") + std::to_string(a - 1);
  return s;
}

ArrIsoType ArrIsoType::parse(const std::string& text) {
  int b = 0;
  bool saw_b = false;
  std::vector<int> alpha;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    if (tok.size() < 2 || (tok[0] != 'A' && tok[0] != 'B') ||
        tok.find_first_not_of("0123456789", 1) != std::string::npos)
      throw std::invalid_argument("malformed arrangement type '" + text + "'");
    const int v = std::stoi(tok.substr(1));
    if (tok[0] == 'B') {
      if (saw_b) throw std::invalid_argument("more than one B factor in '" + text + "'");
      saw_b = true;
      b = v;
    } else {
      alpha.push_back(v + 1);
    }
  }
  if (!saw_b && alpha.empty()) throw std::invalid_argument("empty arrangement type string");
  return ArrIsoType(b, std::move(alpha));
}

ArrIsoType operator*(const ArrIsoType& x, const ArrIsoType& y) {
  if (x.b > 0 && y.b > 0) {
    // B_b × B_c is not of the form B × ∏A; never produced by contraction or localization.
    throw ShapeError("product of two nonempty B factors is outside the supported family");
  }
  std::vector<int> a = x.alpha;
  a.insert(a.end(), y.alpha.begin(), y.alpha.end());
  return ArrIsoType(x.b + y.b, std::move(a));
}

int FlatDescriptor::rank() const { return n - static_cast<int>(blocks.size()); }

std::string FlatDescriptor::to_string() const {
  std::ostringstream os;
  os << "{";
  if (kind == Kind::B) {
    os << "0:";
    for (int z : zero_block) os << " " << z;
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (kind == Kind::B || k > 0) os << " |";
    for (int x : blocks[k]) os << " " << x;
  }
  os << " }";
  return os.str();
}

namespace {

void check_bound(int n, int max_n, const char* what) {
  if (n < 0) throw ShapeError("negative size");
  if (n > max_n)
    throw ResourceError(std::string(what) + "(" + std::to_string(n) + ") exceeds the configured bound " + std::to_string(max_n));
}

}  // namespace

std::vector<FlatDescriptor> flats_B(int n, int max_n) {
  check_bound(n, max_n, "flats_B");
  std::vector<FlatDescriptor> out;
  FlatDescriptor cur{Kind::B, n, {}, {}};
  // Coordinate i goes to the zero block, joins an existing block with either
  // sign, or opens a new block (positive, as its smallest member).
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    cur.zero_block.push_back(i);
    rec(i + 1);
    cur.zero_block.pop_back();
    for (std::size_t k = 0; k < cur.blocks.size(); ++k)
      for (int s : {-1, 1}) {
        cur.blocks[k].push_back(s * i);
        rec(i + 1);
        cur.blocks[k].pop_back();
      }
    cur.blocks.push_back({i});
    rec(i + 1);
    cur.blocks.pop_back();
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FlatDescriptor> flats_A(int n, int max_n) {
  check_bound(n, max_n, "flats_A");
  if (n < 1) throw ShapeError("type A arrangements need n >= 1");
  std::vector<FlatDescriptor> out;
  FlatDescriptor cur{Kind::A, n, {}, {}};
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = 0; k < cur.blocks.size(); ++k) {
      cur.blocks[k].push_back(i);
      rec(i + 1);
      cur.blocks[k].pop_back();
    }
    cur.blocks.push_back({i});
    rec(i + 1);
    cur.blocks.pop_back();
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

FlatDescriptor flat_of(const BMorphism& phi) {
  FlatDescriptor f{Kind::B, phi.source(), {}, {}};
  const std::size_t d = static_cast<std::size_t>(phi.target());
  std::vector<std::vector<int>> fibers(d + 1);
  std::vector<int> orient(d + 1, 0);  // sign of the fiber's first member
  for (int i = 1; i <= phi.source(); ++i) {
    const int x = phi(i);
    if (x == 0) {
      f.zero_block.push_back(i);
      continue;
    }
    const std::size_t k = static_cast<std::size_t>(std::abs(x));
    if (orient[k] == 0) orient[k] = x > 0 ? 1 : -1;
    fibers[k].push_back((x > 0 ? 1 : -1) * orient[k] * i);
  }
  for (std::size_t k = 1; k <= d; ++k)
    if (!fibers[k].empty()) f.blocks.push_back(fibers[k]);
  std::sort(f.blocks.begin(), f.blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return f;
}

BMorphism morphism_of(const FlatDescriptor& f) {
  if (f.kind != Kind::B) throw ShapeError("morphism_of needs a type B flat");
  std::vector<int> im(static_cast<std::size_t>(f.n), 0);
  for (std::size_t k = 0; k < f.blocks.size(); ++k)
    for (int x : f.blocks[k]) im[static_cast<std::size_t>(std::abs(x) - 1)] = (x > 0 ? 1 : -1) * static_cast<int>(k + 1);
  return BMorphism(f.n, static_cast<int>(f.blocks.size()), std::move(im));
}

ArrIsoType contraction_type(const FlatDescriptor& f) {
  if (f.kind == Kind::B) return ArrIsoType::B(static_cast<int>(f.blocks.size()));
  return ArrIsoType::A(static_cast<int>(f.blocks.size()));
}

ArrIsoType localization_type(const FlatDescriptor& f) {
  std::vector<int> sizes;
  for (const auto& block : f.blocks) sizes.push_back(static_cast<int>(block.size()));
  return ArrIsoType(f.kind == Kind::B ? static_cast<int>(f.zero_block.size()) : 0, std::move(sizes));
}

series::Polynomial char_poly(const ArrIsoType& type) {
  series::Polynomial p = series::Polynomial::constant(1);
  for (int k = 1; k <= type.b; ++k) p *= series::Polynomial{-(2L * k - 1), 1};
  for (int a : type.alpha)
    for (int k = 1; k < a; ++k) p *= series::Polynomial{-static_cast<long>(k), 1};
  return p;
}

series::Polynomial os_hilbert(const ArrIsoType& type) {
  // (-t)^r χ(-1/t): the coefficient of t^k is (-1)^k times that of t^{r-k} in χ.
  const series::Polynomial chi = char_poly(type);
  const int r = type.rank();
  std::vector<Rational> out(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) out[static_cast<std::size_t>(k)] = (k % 2 ? -1 : 1) * chi.coeff(r - k);
  return series::Polynomial(std::move(out));
}

std::vector<Hyperplane> b_hyperplanes(int n) {
  std::vector<Hyperplane> hs;
  for (int e = 1; e <= n; ++e) hs.push_back({e, 0});
  for (int e = 1; e <= n; ++e)
    for (int f = e + 1; f <= n; ++f) hs.push_back({e, f});
  for (int e = 1; e <= n; ++e)
    for (int f = e + 1; f <= n; ++f) hs.push_back({e, -f});
  return hs;
}

std::vector<Hyperplane> a_hyperplanes(int n) {
  std::vector<Hyperplane> hs;
  for (int e = 1; e <= n; ++e)
    for (int f = e + 1; f <= n; ++f) hs.push_back({e, f});
  return hs;
}

namespace {

// Position of the pair e<f in lexicographic order among pairs from [n].
int pair_rank(int n, int e, int f) { return (e - 1) * n - (e - 1) * e / 2 + (f - e - 1); }

}  // namespace

int b_hyperplane_index(int n, int x, int y) {
  if (std::abs(x) > n || std::abs(y) > n) throw ShapeError("hyperplane index out of range");
  if (x == y) return -1;
  if (x == -y || y == 0) return std::abs(x) - 1;
  if (x == 0) return std::abs(y) - 1;
  if (std::abs(x) > std::abs(y)) std::swap(x, y);
  if (x < 0) {
    x = -x;
    y = -y;
  }
  const int pairs = n * (n - 1) / 2;
  return n + (y > 0 ? 0 : pairs) + pair_rank(n, x, std::abs(y));
}

int a_hyperplane_index(int n, int x, int y) {
  if (x < 1 || y < 1 || x > n || y > n) throw ShapeError("hyperplane index out of range");
  if (x == y) return -1;
  if (x > y) std::swap(x, y);
  return pair_rank(n, x, y);
}

std::vector<long> normal(const Hyperplane& h, int n) {
  std::vector<long> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(h.e - 1)] = 1;
  if (h.f != 0) v[static_cast<std::size_t>(std::abs(h.f) - 1)] = h.f > 0 ? -1 : 1;
  return v;
}

std::uint64_t contained_hyperplanes(const FlatDescriptor& f) {
  std::uint64_t mask = 0;
  auto set = [&](int idx) {
    if (idx >= 0) mask |= std::uint64_t{1} << idx;
  };
  if (f.kind == Kind::A) {
    for (const auto& block : f.blocks)
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j) set(a_hyperplane_index(f.n, block[i], block[j]));
    return mask;
  }
  for (std::size_t i = 0; i < f.zero_block.size(); ++i) {
    set(b_hyperplane_index(f.n, f.zero_block[i], 0));
    for (std::size_t j = i + 1; j < f.zero_block.size(); ++j) {
      set(b_hyperplane_index(f.n, f.zero_block[i], f.zero_block[j]));
      set(b_hyperplane_index(f.n, f.zero_block[i], -f.zero_block[j]));
    }
  }
  // x_|a| sign(a) = x_|b| sign(b) on a block is the hyperplane x_a = x_b in signed indices.
  for (const auto& block : f.blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) set(b_hyperplane_index(f.n, block[i], block[j]));
  return mask;
}

series::Polynomial GeometricLatticeSlice::char_poly() const {
  std::vector<Rational> c(static_cast<std::size_t>(total_rank) + 1);
  for (std::size_t i = 0; i < flats.size(); ++i) c[static_cast<std::size_t>(total_rank - rank[i])] += mu[i];
  return series::Polynomial(std::move(c));
}

std::vector<long> GeometricLatticeSlice::flat_counts_by_rank() const {
  std::vector<long> c(static_cast<std::size_t>(total_rank) + 1, 0);
  for (int r : rank) ++c[static_cast<std::size_t>(r)];
  return c;
}

GeometricLatticeSlice mobius_oracle(int n, Kind kind) {
  check_bound(n, 6, "mobius_oracle");
  if (kind == Kind::A && n < 1) throw ShapeError("type A arrangements need n >= 1");
  const auto hs = kind == Kind::B ? b_hyperplanes(n) : a_hyperplanes(n);
  std::vector<std::vector<Rational>> normals;
  for (const auto& h : hs) {
    auto v = normal(h, n);
    normals.emplace_back(v.begin(), v.end());
  }
  auto span_of = [&](std::uint64_t mask) {
    RowSpace rs(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < hs.size(); ++k)
      if (mask >> k & 1) rs.add(normals[k]);
    return rs;
  };
  auto closure = [&](std::uint64_t mask) {
    RowSpace rs = span_of(mask);
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < hs.size(); ++k)
      if (rs.contains(normals[k])) out |= std::uint64_t{1} << k;
    return std::pair{out, static_cast<int>(rs.rank())};
  };

  std::map<std::uint64_t, int> found{{0, 0}};
  std::vector<std::uint64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t f : frontier)
      for (std::size_t k = 0; k < hs.size(); ++k) {
        if (f >> k & 1) continue;
        auto [g, r] = closure(f | std::uint64_t{1} << k);
        if (found.emplace(g, r).second) next.push_back(g);
      }
    frontier.swap(next);
  }

  GeometricLatticeSlice s{kind, n, kind == Kind::B ? n : n - 1, {}, {}, {}};
  std::vector<std::pair<int, std::uint64_t>> order;
  for (auto [mask, r] : found) order.emplace_back(r, mask);
  std::sort(order.begin(), order.end());
  for (auto [r, mask] : order) {
    s.flats.push_back(mask);
    s.rank.push_back(r);
  }
  s.mu.resize(s.flats.size());
  for (std::size_t j = 0; j < s.flats.size(); ++j) {
    if (j == 0) {
      s.mu[0] = 1;
      continue;
    }
    Integer acc = 0;
    for (std::size_t i = 0; i < j; ++i)
      if (s.rank[i] < s.rank[j] && s.leq(i, j)) acc += s.mu[i];
    s.mu[j] = -acc;
  }
  return s;
}

}  // namespace fsb::arr
