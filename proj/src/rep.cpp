#include "fsb/rep.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fsb/errors.hpp"
#include "fsb/kernels.hpp"

namespace fsb::rep {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 0) throw ShapeError("negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

std::string Bipartition::to_string() const { return "(" + lambda.to_string() + "," + mu.to_string() + ")"; }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int m, int max_part) {
    if (m == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(m, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(m - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

Integer z_value(const Partition& p) {
  std::map<int, unsigned> mult;
  for (int x : p.parts) ++mult[x];
  Integer z = 1;
  for (auto [part, m] : mult) z *= factorial(m) * power(part, m);
  return z;
}

Integer hook_dimension(const Partition& p) {
  Integer hooks = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int below = 0;
      while (p[i + below + 1] > j) ++below;
      hooks *= p[i] - j + below;
    }
  return factorial(static_cast<unsigned>(p.size())) / hooks;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a)
    for (const auto& l : partitions_of(a))
      for (const auto& m : partitions_of(n - a)) out.push_back({l, m});
  return out;
}

namespace {

// Shapes obtained by removing an r-rim hook, with sign (-1)^{height}.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int r) {
  const int len = lambda.length();
  std::vector<int> beta;
  for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + (len - 1 - i));
  std::vector<std::pair<Partition, int>> out;
  for (int b : beta) {
    const int to = b - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int c : beta) between += c > to && c < b;
    std::vector<int> nb;
    for (int c : beta) nb.push_back(c == b ? to : c);
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) parts.push_back(nb[static_cast<std::size_t>(i)] - (len - 1 - i));
    out.emplace_back(Partition(parts), between % 2 ? -1 : 1);
  }
  return out;
}

// Memoized on (shape, remaining cycles).
Integer mn_s(const Partition& lambda, const std::vector<int>& rho, std::size_t from,
             std::map<std::pair<Partition, std::size_t>, Integer>& memo) {
  if (from == rho.size()) return lambda.parts.empty() ? 1 : 0;
  const auto key = std::pair{lambda, from};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer v = 0;
  for (const auto& [smaller, sign] : remove_rim_hooks(lambda, rho[from])) v += sign * mn_s(smaller, rho, from + 1, memo);
  memo.emplace(key, v);
  return v;
}

Integer s_character_value(const Partition& lambda, const Partition& rho) {
  std::map<std::pair<Partition, std::size_t>, Integer> memo;
  return mn_s(lambda, rho.parts, 0, memo);
}

struct SignedCycle {
  int length;
  int sign;
};

Integer mn_w(const Partition& lambda, const Partition& mu, const std::vector<SignedCycle>& cycles, std::size_t from,
             std::map<std::tuple<Partition, Partition, std::size_t>, Integer>& memo) {
  if (from == cycles.size()) return lambda.parts.empty() && mu.parts.empty() ? 1 : 0;
  const auto key = std::tuple{lambda, mu, from};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const auto [r, eps] = cycles[from];
  Integer v = 0;
  for (const auto& [smaller, sign] : remove_rim_hooks(lambda, r)) v += sign * mn_w(smaller, mu, cycles, from + 1, memo);
  for (const auto& [smaller, sign] : remove_rim_hooks(mu, r)) v += eps * sign * mn_w(lambda, smaller, cycles, from + 1, memo);
  memo.emplace(key, v);
  return v;
}

std::vector<SignedCycle> cycles_of(const Bipartition& cls) {
  std::vector<SignedCycle> c;
  for (int p : cls.lambda.parts) c.push_back({p, 1});
  for (int p : cls.mu.parts) c.push_back({p, -1});
  std::sort(c.begin(), c.end(), [](auto a, auto b) { return a.length > b.length; });
  return c;
}

Integer w_centralizer(const Bipartition& cls) {
  return z_value(cls.lambda) * z_value(cls.mu) * power(2, static_cast<unsigned>(cls.lambda.length() + cls.mu.length()));
}

ClassTable make_table(Group g, int n) {
  ClassTable t{g, n, {}, {}, 0};
  if (g == Group::S) {
    for (const auto& p : partitions_of(n)) {
      t.classes.push_back({p, {}});
      t.centralizer.push_back(z_value(p));
    }
    t.order = factorial(static_cast<unsigned>(n));
  } else {
    t.classes = bipartitions_of(n);
    for (const auto& c : t.classes) t.centralizer.push_back(w_centralizer(c));
    t.order = hyperoctahedral_order(n);
  }
  return t;
}

void check_same(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group || a.n != b.n || a.values.size() != b.values.size())
    throw ShapeError("class functions on different groups");
}

}  // namespace

std::size_t ClassTable::index_of(const Bipartition& c) const {
  auto it = std::find(classes.begin(), classes.end(), c);
  if (it == classes.end()) throw ShapeError("no class " + c.to_string() + " in this table");
  return static_cast<std::size_t>(it - classes.begin());
}

std::string ClassTable::label(std::size_t k) const {
  return group == Group::S ? classes.at(k).lambda.to_string() : classes.at(k).to_string();
}

SignedPerm ClassTable::representative(std::size_t k) const {
  std::vector<int> images(static_cast<std::size_t>(n));
  int start = 1;
  auto place = [&](int len, bool negative) {
    for (int i = 0; i < len; ++i) {
      const int from = start + i;
      const int to = i + 1 < len ? from + 1 : start;
      images[static_cast<std::size_t>(from - 1)] = (i + 1 == len && negative) ? -to : to;
    }
    start += len;
  };
  for (int p : classes.at(k).lambda.parts) place(p, false);
  for (int p : classes.at(k).mu.parts) place(p, true);
  return SignedPerm(images);
}

const ClassTable& class_table(Group g, int n) {
  if (n < 0) throw ShapeError("negative size");
  if (n > 7) throw ResourceError("character tables limited to n <= 7");
  static std::mutex mu;
  static std::map<std::pair<Group, int>, std::unique_ptr<ClassTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{g, n}];
  if (!slot) slot = std::make_unique<ClassTable>(make_table(g, n));
  return *slot;
}

Rational ClassFunction::dimension() const {
  const auto& t = class_table(group, n);
  const Bipartition id{Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), {}};
  return values.at(t.index_of(id));
}

ClassFunction operator+(ClassFunction a, const ClassFunction& b) {
  check_same(a, b);
  for (std::size_t k = 0; k < a.values.size(); ++k) a.values[k] += b.values[k];
  return a;
}

ClassFunction operator-(ClassFunction a, const ClassFunction& b) {
  check_same(a, b);
  for (std::size_t k = 0; k < a.values.size(); ++k) a.values[k] -= b.values[k];
  return a;
}

ClassFunction operator*(const Rational& c, ClassFunction a) {
  for (auto& v : a.values) v *= c;
  return a;
}

Rational inner(const ClassFunction& f, const ClassFunction& g) {
  check_same(f, g);
  const auto& t = class_table(f.group, f.n);
  Rational s = 0;
  for (std::size_t k = 0; k < f.values.size(); ++k) s += f.values[k] * g.values[k] / Rational(t.centralizer[k]);
  return s;
}

std::size_t class_of(const SignedPerm& w) {
  auto [pos, neg] = w.signed_cycle_type();
  return class_table(Group::W, w.size()).index_of({Partition(pos), Partition(neg)});
}

ClassFunction irr_character(const Partition& lambda) {
  const int n = lambda.size();
  const auto& t = class_table(Group::S, n);
  ClassFunction ch{Group::S, n, {}};
  for (const auto& c : t.classes) ch.values.emplace_back(s_character_value(lambda, c.lambda));
  return ch;
}

ClassFunction irr_character(const Bipartition& b) {
  const int n = b.size();
  const auto& t = class_table(Group::W, n);
  ClassFunction ch{Group::W, n, {}};
  for (const auto& c : t.classes) {
    std::map<std::tuple<Partition, Partition, std::size_t>, Integer> memo;
    ch.values.emplace_back(mn_w(b.lambda, b.mu, cycles_of(c), 0, memo));
  }
  return ch;
}

ClassFunction irr_character_by_induction(const Bipartition& b) {
  const int n = b.size();
  const int a = b.lambda.size();
  const auto& t = class_table(Group::W, n);
  ClassFunction ch{Group::W, n, {}};
  for (std::size_t k = 0; k < t.classes.size(); ++k) {
    // Distinct (length, sign) cycle kinds with multiplicities; a class of the
    // subgroup takes some of each kind into the first factor.
    std::map<std::pair<int, int>, int> kinds;
    for (const auto& cyc : cycles_of(t.classes[k])) ++kinds[{cyc.length, cyc.sign}];
    std::vector<std::pair<std::pair<int, int>, int>> kv(kinds.begin(), kinds.end());
    Rational sum = 0;
    std::vector<int> take(kv.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
      if (used > a) return;
      if (i == kv.size()) {
        if (used != a) return;
        std::vector<int> p1, n1, p2, n2;
        for (std::size_t j = 0; j < kv.size(); ++j) {
          const auto [len, sign] = kv[j].first;
          for (int c = 0; c < kv[j].second; ++c) (c < take[j] ? (sign > 0 ? p1 : n1) : (sign > 0 ? p2 : n2)).push_back(len);
        }
        std::vector<int> all1 = p1, all2 = p2;
        all1.insert(all1.end(), n1.begin(), n1.end());
        all2.insert(all2.end(), n2.begin(), n2.end());
        const Integer v1 = s_character_value(b.lambda, Partition(all1));
        const Integer v2 = s_character_value(b.mu, Partition(all2)) * (n2.size() % 2 ? -1 : 1);
        const Integer z1 = w_centralizer({Partition(p1), Partition(n1)});
        const Integer z2 = w_centralizer({Partition(p2), Partition(n2)});
        sum += Rational(v1 * v2) / Rational(z1 * z2);
        return;
      }
      const int len = kv[i].first.first;
      for (int c = 0; c <= kv[i].second; ++c) {
        take[i] = c;
        rec(i + 1, used + c * len);
      }
      take[i] = 0;
    };
    rec(0, 0);
    ch.values.push_back(sum * Rational(t.centralizer[k]));
  }
  return ch;
}

ClassFunction trivial_character(Group g, int n) {
  const auto& t = class_table(g, n);
  return ClassFunction{g, n, std::vector<Rational>(t.classes.size(), Rational(1))};
}

ClassFunction regular_character(Group g, int n) {
  const auto& t = class_table(g, n);
  ClassFunction ch{g, n, std::vector<Rational>(t.classes.size())};
  const Bipartition id{Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), {}};
  ch.values[t.index_of(id)] = t.order;
  return ch;
}

std::vector<Constituent> decompose(const ClassFunction& ch) {
  const auto& t = class_table(ch.group, ch.n);
  std::vector<Constituent> out;
  auto take = [&](const Bipartition& label, const ClassFunction& irr) {
    const Rational m = inner(ch, irr);
    if (!is_integer(m))
      throw std::invalid_argument("multiplicity " + to_string(m) + " of " + label.to_string() + " is not an integer");
    if (m != 0) out.push_back({label, m.get_num()});
  };
  if (ch.group == Group::S) {
    for (const auto& c : t.classes) take(c, irr_character(c.lambda));
  } else {
    for (const auto& b : bipartitions_of(ch.n)) take(b, irr_character(b));
  }
  return out;
}

ClassFunction reconstruct(Group g, int n, const std::vector<Constituent>& parts) {
  ClassFunction ch{g, n, std::vector<Rational>(class_table(g, n).classes.size())};
  for (const auto& p : parts)
    ch = ch + Rational(p.multiplicity) * (g == Group::S ? irr_character(p.label.lambda) : irr_character(p.label));
  return ch;
}

ClassFunction perm_character_flats(int n, int d) {
  const auto& t = class_table(Group::W, n);
  std::vector<SignedPerm> reps;
  for (std::size_t k = 0; k < t.classes.size(); ++k) reps.push_back(t.representative(k));
  const auto counts = kernels::parallel::fixed_orbit_counts(n, d, reps);
  ClassFunction ch{Group::W, n, {}};
  for (long c : counts) ch.values.emplace_back(c);
  return ch;
}

ClassFunction perm_character_hyperplanes(int n) {
  if (n < 1) throw ShapeError("no hyperplanes for n = 0");
  // Hyperplanes are the flats of dimension n-1.
  return perm_character_flats(n, n - 1);
}

namespace {

std::vector<int> fiber_profile(const BMorphism& phi) {
  std::vector<int> prof{phi.zero_fiber()};
  for (int k = 1; k <= phi.target(); ++k) prof.push_back(phi.fiber_size(k));
  return prof;
}

}  // namespace

ClassFunction induced_from_stabilizer(const BMorphism& phi) {
  const int n = phi.source();
  const auto& t = class_table(Group::W, n);
  const auto target = fiber_profile(phi);
  ClassFunction ch{Group::W, n, {}};
  for (const auto& cls : t.classes) {
    const auto cycles = cycles_of(cls);
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
    // Ways to send the remaining cycles onto the remaining fiber capacities.
    std::function<Integer(std::size_t, std::vector<int>&)> ways = [&](std::size_t i, std::vector<int>& rem) -> Integer {
      if (i == cycles.size()) return std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; }) ? 1 : 0;
      const auto key = std::pair{i, rem};
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      const auto [r, sign] = cycles[i];
      Integer v = 0;
      // A negative cycle can only go to 0; a positive one goes to 0 or, with
      // either sign, to some k > 0.
      for (std::size_t k = 0; k < rem.size(); ++k) {
        if (rem[k] < r || (k > 0 && sign < 0)) continue;
        rem[k] -= r;
        v += (k == 0 ? 1 : 2) * ways(i + 1, rem);
        rem[k] += r;
      }
      memo.emplace(key, v);
      return v;
    };
    auto rem = target;
    ch.values.emplace_back(ways(0, rem));
  }
  return ch;
}

ClassFunction induced_from_stabilizer_brute(const BMorphism& phi) {
  const int n = phi.source();
  if (n > 5) throw ResourceError("brute-force induction limited to n <= 5");
  const auto& t = class_table(Group::W, n);
  const auto prof = fiber_profile(phi);
  std::vector<BMorphism> orbit;
  for (const auto& psi : enumerate_hom(n, phi.target()))
    if (fiber_profile(psi) == prof) orbit.push_back(psi);
  ClassFunction ch{Group::W, n, {}};
  for (std::size_t k = 0; k < t.classes.size(); ++k) {
    const auto w = t.representative(k);
    long fixed = 0;
    for (const auto& psi : orbit) fixed += act(w, psi) == psi;
    ch.values.emplace_back(fixed);
  }
  return ch;
}

std::vector<BMorphism> projective_orbit_representatives(int n, int d) {
  std::vector<BMorphism> out;
  std::vector<int> sizes(static_cast<std::size_t>(d) + 1, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == d) {
      sizes[static_cast<std::size_t>(d)] = left;
      if (d > 0 && left < 1) return;
      std::vector<int> images;
      for (int j = 0; j <= d; ++j) images.insert(images.end(), static_cast<std::size_t>(sizes[static_cast<std::size_t>(j)]), j);
      out.emplace_back(n, d, images);
      return;
    }
    for (int s = k == 0 ? 0 : 1; s <= left; ++s) {
      sizes[static_cast<std::size_t>(k)] = s;
      rec(k + 1, left - s);
    }
  };
  if (d == 0)
    out.push_back(BMorphism::to_point(n));
  else
    rec(0, n);
  return out;
}

ClassFunction projective_character(int n, int d) {
  ClassFunction ch{Group::W, n, std::vector<Rational>(class_table(Group::W, n).classes.size())};
  for (const auto& phi : projective_orbit_representatives(n, d)) ch = ch + induced_from_stabilizer(phi);
  return ch;
}

LengthBoundReport length_bound_report(int d, int n) {
  LengthBoundReport r{n, d, decompose(projective_character(n, d)), {}};
  for (const auto& c : r.constituents)
    if (c.label.lambda.length() > d + 1 || c.label.mu.length() > d) r.violations.push_back(c.label);
  return r;
}

bool verify_length_bounds(int d, int n) { return length_bound_report(d, n).holds(); }

ClassFunction d1_virtual_character(int n) {
  if (n < 1) throw ShapeError("d1_virtual_character needs n >= 1");
  return perm_character_flats(n, 1) - perm_character_hyperplanes(n);
}

std::optional<Integer> c_lambda_formula(const Partition& lambda, int n) {
  if (lambda.parts.empty()) return std::nullopt;
  const long half = lambda[0] / 2;
  auto is = [&](std::vector<int> parts) {
    for (int p : parts)
      if (p <= 0) return false;
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) return false;
    return lambda.parts == parts;
  };
  if (is({n}) || is({n - 1, 1})) return Integer(half - 1);
  if (is({n - 2, 2}) || is({n - 2})) return Integer(half);
  return Integer(half + 1);
}

CLambdaReport c_lambda_report(int n) {
  const auto ch = d1_virtual_character(n);
  CLambdaReport rep;
  rep.n = n;
  rep.total_dimension = ch.dimension().get_num();
  rep.formula_dimension = 0;
  const auto parts = decompose(ch);
  auto mult_of = [&](const Bipartition& b) -> Integer {
    for (const auto& c : parts)
      if (c.label == b) return c.multiplicity;
    return 0;
  };
  for (int size = 0; size <= n; ++size)
    for (const auto& lambda : partitions_of(size)) {
      if (lambda.length() > 2) continue;
      const Bipartition b{lambda, Partition({n - size})};
      CLambdaRow row{lambda, mult_of(b), c_lambda_formula(lambda, n)};
      if (row.formula) {
        const Integer dim = binomial(static_cast<unsigned>(n), static_cast<unsigned>(size)) * hook_dimension(lambda) *
                            hook_dimension(b.mu);
        rep.formula_dimension += *row.formula * dim;
      }
      rep.rows.push_back(row);
    }
  for (const auto& c : parts)
    if (c.label.mu.length() > 1 || c.label.lambda.length() > 2) rep.outside_shape.push_back(c);
  return rep;
}

std::string character_table_csv(Group g, int n) {
  const auto& t = class_table(g, n);
  std::ostringstream out;
  out << "irreducible";
  for (std::size_t k = 0; k < t.classes.size(); ++k) out << ",\"" << t.label(k) << '"';
  out << "\ncentralizer";
  for (const auto& z : t.centralizer) out << ',' << z.get_str();
  out << '\n';
  auto row = [&](const std::string& label, const ClassFunction& ch) {
    out << '"' << label << '"';
    for (const auto& v : ch.values) out << ',' << to_string(v);
    out << '\n';
  };
  if (g == Group::S) {
    for (const auto& c : t.classes) row(c.lambda.to_string(), irr_character(c.lambda));
  } else {
    for (const auto& b : bipartitions_of(n)) row(b.to_string(), irr_character(b));
  }
  return out.str();
}

}  // namespace fsb::rep
