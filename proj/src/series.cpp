#include "fsb/series.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace fsb::series {

RationalFunction::RationalFunction(Polynomial numerator, Factors denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->first < 1) throw std::invalid_argument("pole reciprocal must be a positive integer");
    if (it->second < 0) throw std::invalid_argument("negative pole multiplicity");
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    const Rational root(1, it->first);
    while (it->second > 0 && num_(root) == 0) {
      num_ = num_.divmod(Polynomial::one_minus(it->first)).first;
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

Polynomial RationalFunction::denominator() const {
  Polynomial q = Polynomial::constant(1);
  for (auto [j, e] : den_) q *= pow(Polynomial::one_minus(j), static_cast<unsigned>(e));
  return q;
}

std::vector<Rational> RationalFunction::expand(int n) const {
  const Polynomial q = denominator();
  std::vector<Rational> a(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) {
    Rational v = num_.coeff(k);
    for (int i = 1; i <= std::min(k, q.degree()); ++i) v -= q.coeff(i) * a[static_cast<std::size_t>(k - i)];
    a[static_cast<std::size_t>(k)] = v;  // q(0) == 1
  }
  return a;
}

namespace {

RationalFunction combine(const RationalFunction& a, const RationalFunction& b, int sign) {
  RationalFunction::Factors common = a.factors();
  for (auto [j, e] : b.factors()) common[j] = std::max(common[j], e);
  auto scale = [&](const RationalFunction& r) {
    Polynomial s = r.numerator();
    for (auto [j, e] : common) {
      auto it = r.factors().find(j);
      const int have = it == r.factors().end() ? 0 : it->second;
      s *= pow(Polynomial::one_minus(j), static_cast<unsigned>(e - have));
    }
    return s;
  };
  Polynomial n = scale(a);
  if (sign > 0)
    n += scale(b);
  else
    n -= scale(b);
  return RationalFunction(std::move(n), std::move(common));
}

}  // namespace

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const { return combine(*this, rhs, +1); }
RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const { return combine(*this, rhs, -1); }

RationalFunction RationalFunction::operator*(const Rational& c) const { return RationalFunction(num_ * c, den_); }

std::string RationalFunction::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ") / (";
  for (auto [j, e] : den_) {
    os << "(1 - " << (j == 1 ? std::string() : std::to_string(j)) << "t)";
    if (e > 1) os << "^" << e;
  }
  os << ")";
  return os.str();
}

std::set<long> pole_set(const RationalFunction& r) {
  std::set<long> out;
  for (auto [j, e] : r.factors()) out.insert(j);
  return out;
}

std::string LimitResidue::describe() const {
  std::ostringstream os;
  if (converges) {
    os << "lim a_n/" << j << "^n = " << fsb::to_string(limit);
  } else if (dominant_j > j) {
    os << "limit diverges: pole at 1/" << dominant_j << " dominates 1/" << j;
  } else {
    os << "limit diverges: pole at 1/" << j << " has order " << order << " (leading coefficient "
       << fsb::to_string(leading) << ")";
  }
  return os.str();
}

LimitResidue residue_at(const RationalFunction& r, long j) {
  if (j < 1) throw std::invalid_argument("residue_at needs a positive pole reciprocal");
  LimitResidue out;
  out.j = j;
  out.dominant_j = r.factors().empty() ? 0 : r.factors().rbegin()->first;
  auto it = r.factors().find(j);
  out.order = it == r.factors().end() ? 0 : it->second;
  if (out.order > 0) {
    const Rational at(1, j);
    Rational rest = 1;
    for (auto [jj, e] : r.factors()) {
      if (jj == j) continue;
      Rational f = 1 - Rational(jj) * at;
      for (int k = 0; k < e; ++k) rest *= f;
    }
    out.leading = r.numerator()(at) / rest;
  }
  if (out.dominant_j > j) return out;
  if (out.order == 0) {
    out.converges = true;
    out.limit = 0;
  } else if (out.order == 1) {
    out.converges = true;
    out.limit = out.leading;
  }
  return out;
}

namespace {

// Calls visit(e) for each e in {0..bound}^m with sum(e) == total, in
// lexicographically increasing order. Stops early when visit returns true.
bool for_each_composition(int m, int bound, int total, std::vector<int>& e, int pos,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  if (pos == m) return total == 0 && visit(e);
  const int rest_capacity = bound * (m - pos - 1);
  for (int v = std::max(0, total - rest_capacity); v <= std::min(bound, total); ++v) {
    e[static_cast<std::size_t>(pos)] = v;
    if (for_each_composition(m, bound, total - v, e, pos + 1, visit)) return true;
  }
  return false;
}

}  // namespace

RationalFunction fit_rational(std::span<const Rational> terms, const FitOptions& options) {
  if (options.pole_bound < 0 || options.mult_bound < 0 || options.extra_numerator_degree < 0 ||
      options.verify_terms < 0)
    throw std::invalid_argument("fit options must be nonnegative");
  const int n = static_cast<int>(terms.size());
  const int m = options.pole_bound;
  const int bound = m == 0 ? 0 : options.mult_bound;

  bool skipped = false;
  std::optional<RationalFunction> found;
  std::vector<int> e(static_cast<std::size_t>(m));
  for (int total = 0; total <= m * bound && !found; ++total) {
    const int unknowns = total + options.extra_numerator_degree + 1;
    if (n - unknowns < options.verify_terms) {
      skipped = true;
      break;
    }
    for_each_composition(m, bound, total, e, 0, [&](const std::vector<int>& mult) {
      RationalFunction::Factors f;
      Polynomial q = Polynomial::constant(1);
      for (int j = 1; j <= m; ++j) {
        const int ej = mult[static_cast<std::size_t>(j - 1)];
        if (ej == 0) continue;
        f[j] = ej;
        q *= pow(Polynomial::one_minus(j), static_cast<unsigned>(ej));
      }
      // Coefficients of (sum a_k t^k) * q below t^n.
      std::vector<Rational> b(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        Rational v = 0;
        for (int i = 0; i <= std::min(k, q.degree()); ++i) v += q.coeff(i) * terms[static_cast<std::size_t>(k - i)];
        if (k >= unknowns && v != 0) return false;
        b[static_cast<std::size_t>(k)] = v;
      }
      b.resize(static_cast<std::size_t>(std::min(unknowns, n)));
      found = RationalFunction(Polynomial(std::move(b)), std::move(f));
      return true;
    });
  }
  if (found) return *found;
  if (skipped)
    throw FitError(FitError::Kind::kInsufficientTerms,
                   "insufficient terms: " + std::to_string(n) + " terms cannot determine every candidate with pole bound " +
                       std::to_string(m) + " and multiplicity bound " + std::to_string(bound));
  throw FitError(FitError::Kind::kNoFit, "no fit: no candidate denominator reproduces all " + std::to_string(n) + " terms");
}

RationalFunction fit_rational(std::span<const Integer> terms, const FitOptions& options) {
  std::vector<Rational> q(terms.begin(), terms.end());
  return fit_rational(std::span<const Rational>(q), options);
}

}  // namespace fsb::series
