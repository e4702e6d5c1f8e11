#include "fsb/verify.hpp"

#include <chrono>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fsb/arrangements.hpp"
#include "fsb/core.hpp"
#include "fsb/errors.hpp"
#include "fsb/kernels.hpp"
#include "fsb/os_algebra.hpp"
#include "fsb/rep.hpp"
#include "fsb/series.hpp"
#include "fsb/words.hpp"

namespace fsb::verify {

using arr::ArrIsoType;
using arr::Kind;
using series::FitError;
using series::FitOptions;
using series::Polynomial;
using series::RationalFunction;

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kInsufficient: return "INSUFFICIENT";
    case Status::kInfo: return "INFO";
  }
  return "?";
}

Status combine(const std::vector<Check>& checks) {
  bool insufficient = false;
  for (const auto& c : checks) {
    if (c.status == Status::kFail) return Status::kFail;
    insufficient = insufficient || c.status == Status::kInsufficient;
  }
  return insufficient ? Status::kInsufficient : Status::kPass;
}

namespace {

Check pass_if(bool ok, std::string name, std::string detail = {}) {
  return {std::move(name), ok ? Status::kPass : Status::kFail, std::move(detail)};
}

Check info(std::string name, std::string detail) { return {std::move(name), Status::kInfo, std::move(detail)}; }

template <class T>
std::string str(const T& x) {
  std::ostringstream o;
  o << x;
  return o.str();
}

std::string str(const Rational& q) { return fsb::to_string(q); }

class Context {
 public:
  explicit Context(const Options& o) : options_(o) {
    if (!o.engine) owned_ = std::make_unique<kl::KLEngine>();
  }
  kl::KLEngine& kl() { return options_.engine ? *options_.engine : *owned_; }
  int max_n(int fallback) const { return options_.max_n >= 0 ? options_.max_n : fallback; }
  int d() const { return options_.d; }
  void progress(const std::string& msg) const {
    if (options_.progress) options_.progress(msg);
  }

 private:
  const Options& options_;
  std::unique_ptr<kl::KLEngine> owned_;
};

Report timed(std::string id, std::string title, const std::function<std::vector<Check>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Report r{std::move(id), std::move(title), Status::kPass, {}, 0};
  try {
    r.checks = body();
  } catch (const std::exception& e) {
    r.checks.push_back({"exception", Status::kFail, e.what()});
  }
  r.status = combine(r.checks);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---- flats and morphisms ----

std::vector<Check> flat_dictionary(int max_total, int max_line) {
  std::vector<Check> out;
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= max_total; ++n) {
    std::size_t classes = 0;
    for (int d = 0; d <= n; ++d) classes += orbit_classes(n, d).size();
    const std::size_t flats = arr::flats_B(n).size();
    ok = ok && classes == flats;
    detail += "n=" + std::to_string(n) + ":" + std::to_string(classes) + "/" + std::to_string(flats) + " ";
  }
  out.push_back(pass_if(ok, "orbit classes = flats, n<=" + std::to_string(max_total), detail));
  ok = true;
  detail.clear();
  for (int n = 0; n <= max_line; ++n) {
    const Integer expected = (power(3, static_cast<unsigned>(n)) - 1) / 2;
    const auto got = orbit_classes(n, 1).size();
    ok = ok && Integer(static_cast<unsigned long>(got)) == expected;
    detail += std::to_string(got) + " ";
  }
  out.push_back(pass_if(ok, "|orbit_classes(n,1)| = (3^n-1)/2, n<=" + std::to_string(max_line), detail));
  return out;
}

// ---- Orlik-Solomon ----

std::vector<Check> os_dimensions(int max_deg1, int max_full) {
  std::vector<Check> out;
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= max_deg1; ++n) {
    const auto d = os::build_os(n, Kind::B, 1)->dim(1);
    ok = ok && d == static_cast<std::size_t>(n * n);
    detail += std::to_string(d) + " ";
  }
  out.push_back(pass_if(ok, "dim S^1_B[-n,n] = n^2 (NBC), n<=" + std::to_string(max_deg1), detail));
  ok = true;
  detail.clear();
  for (int n = 0; n <= max_full; ++n) {
    const auto dims = os::build_os(n, Kind::B)->graded_dims();
    const auto p = arr::os_hilbert(ArrIsoType::B(n));
    for (int k = 0; k <= n; ++k) ok = ok && p.coeff(k) == dims[static_cast<std::size_t>(k)];
    detail += "n=" + std::to_string(n) + ":" + p.to_string() + "; ";
  }
  out.push_back(pass_if(ok, "graded NBC dims = (-t)^r chi(-1/t), n<=" + std::to_string(max_full), detail));
  return out;
}

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (v[c] != 0) out[r] += m(r, c) * v[c];
  return out;
}

std::vector<Rational> sum(std::initializer_list<std::vector<Rational>> parts, std::initializer_list<int> signs) {
  std::vector<Rational> out(parts.begin()->size());
  auto s = signs.begin();
  for (const auto& p : parts) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += *s * p[k];
    ++s;
  }
  return out;
}

std::vector<Rational> tensor(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

// "v_{3,-3} + v_{4,-4} + v_{3,4}" for a degree-one dual vector on [-n,n].
std::string describe_dual(int n, const std::vector<Rational>& v) {
  const auto hs = arr::b_hyperplanes(n);
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const int f = hs[k].f == 0 ? -hs[k].e : hs[k].f;
    const std::string coeff = v[k] == 1 ? "" : v[k] == -1 ? "-" : str(v[k]) + " ";
    s += (s.empty() ? "" : " + ") + coeff + "v_{" + std::to_string(hs[k].e) + "," + std::to_string(f) + "}";
  }
  return s.empty() ? "0" : s;
}

std::vector<Check> psi_identity(int i, bool tensor_form) {
  const int top = 2 * i, low = 2 * i - 1;
  std::vector<int> fixed;
  for (int k = 1; k <= 2 * i - 2; ++k) fixed.push_back(k);
  auto make = [&](int img_low, int img_top) {
    auto images = fixed;
    images.push_back(img_low);
    images.push_back(img_top);
    return BMorphism(top, low, images);
  };
  const BMorphism psi[3] = {make(-low, low), make(0, low), make(low, 0)};
  auto v = [&](int x, int y) { return os::dual_generator(top, x, y); };
  // Printed expansions of psi_k^*(v_{2i-1,1-2i}) and the claimed alternating sum.
  const std::vector<Rational> printed[3] = {
      sum({v(low, -low), v(top, -top), v(low, top)}, {1, 1, 1}),
      sum({v(low, -low), v(low, -top), v(low, top)}, {1, 1, 1}),
      sum({v(top, -top), v(low, -top), v(low, top)}, {1, 1, 1}),
  };
  const auto claimed_sum = v(low, top);
  const auto target = os::dual_generator(low, low, -low);

  std::vector<Check> out;
  std::vector<Rational> actual[3];
  const std::string tag = "i=" + std::to_string(i) + (tensor_form ? " (tensor)" : "");
  for (int k = 0; k < 3; ++k) {
    const Matrix r = os::restriction_map(psi[k], 1).matrix;
    actual[k] = mat_vec(os::dual_map(os::restriction_map(psi[k], 1)).matrix, target);
    if (tensor_form) {
      // ψ^*(v_{12} ⊗ v) in ((S^1)^*)^{⊗2}, against v_{12} ⊗ (printed expansion).
      const auto v12 = os::dual_generator(low, 1, 2);
      const auto pulled = mat_vec(os::kron(r, r).transposed(), tensor(v12, target));
      const auto expected = tensor(os::dual_generator(top, 1, 2), printed[k]);
      out.push_back(pass_if(pulled == expected, tag + " psi" + std::to_string(k + 1) + "^*(v_{12} (x) v) = v_{12} (x) printed",
                            "computed factor: " + describe_dual(top, actual[k])));
    } else {
      out.push_back(pass_if(actual[k] == printed[k], tag + " psi" + std::to_string(k + 1) + "^* expansion",
                            "computed " + describe_dual(top, actual[k]) + "; printed " + describe_dual(top, printed[k])));
    }
  }
  const auto alt = sum({actual[0], actual[1], actual[2]}, {1, -1, 1});
  if (tensor_form) {
    const auto v12 = os::dual_generator(top, 1, 2);
    out.push_back(pass_if(tensor(v12, alt) == tensor(v12, claimed_sum), tag + " alternating sum = v_{12} (x) v_{" +
                                                                            std::to_string(low) + "," + std::to_string(top) + "}",
                          "computed v_{12} (x) (" + describe_dual(top, alt) + ")"));
  } else {
    out.push_back(pass_if(alt == claimed_sum, tag + " psi1^* - psi2^* + psi3^* = v_{" + std::to_string(low) + "," + std::to_string(top) + "}",
                          "computed " + describe_dual(top, alt)));
  }
  return out;
}

std::vector<Check> spanning_checks(int max_n, bool with_tensor) {
  std::vector<Check> out;
  for (int n = 2; n <= std::min(max_n, 4); ++n) {
    const auto r = os::spanning_report(1, n, 1);
    out.push_back(pass_if(r.spans(), "pullbacks from m<=1 span (S^1)^*[-" + std::to_string(n) + "," + std::to_string(n) + "]",
                          "rank " + std::to_string(r.span_rank) + "/" + std::to_string(r.dual_dim)));
  }
  if (max_n >= 4) {
    const auto r = os::spanning_report(2, 4, 3);
    out.push_back(pass_if(r.spans(), "pullbacks from m<=3 span (S^2)^*[-4,4]",
                          "rank " + std::to_string(r.span_rank) + "/" + std::to_string(r.dual_dim)));
    if (with_tensor) {
      const auto t = os::tensor_spanning_report(2, 4, 3);
      out.push_back(pass_if(t.spans(), "pullbacks from m<=3 span ((S^1)^*)^(x)2[-4,4]",
                            "rank " + std::to_string(t.span_rank) + "/" + std::to_string(t.dual_dim)));
    }
  }
  return out;
}

// ---- KL ----

std::vector<Check> kl_values(Context& ctx, int max_n, int max_i) {
  std::vector<Check> out;
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= max_n; ++n) {
    ctx.progress("KL polynomial of B" + std::to_string(n));
    const Integer expected = (power(3, static_cast<unsigned>(n)) - 1) / 2 - n * n;
    const Integer got = ctx.kl().dim_D(1, n, Kind::B);
    ok = ok && got == expected;
    detail += got.get_str() + " ";
  }
  out.push_back(pass_if(ok, "t-coefficient of P(B_n) = (3^n-1)/2 - n^2, n<=" + std::to_string(max_n), detail));
  ok = true;
  for (int n = 0; n < 3; ++n) ok = ok && ctx.kl().dim_D(1, n, Kind::B) == 0;
  out.push_back(pass_if(ok, "dim D^1_B[-n,n] = 0 for n<3"));
  ok = true;
  detail.clear();
  for (int n = 0; n <= max_n; ++n)
    for (int i = 0; i <= max_i; ++i) {
      if (n > 2 * i || (n == 0 && i == 0)) continue;
      const Integer v = ctx.kl().dim_D(i, n, Kind::B);
      if (v != 0) {
        ok = false;
        detail += "(n=" + std::to_string(n) + ",i=" + std::to_string(i) + ")=" + v.get_str() + " ";
      }
    }
  out.push_back(pass_if(ok, "dim D^i_B[-n,n] = 0 unless n>2i, n<=" + std::to_string(max_n) + ", i<=" + std::to_string(max_i), detail));
  return out;
}

std::vector<Check> degree_one_series(Context& ctx) {
  std::vector<Check> out;
  std::vector<Integer> terms;
  bool ok = true;
  for (int n = 0; n <= 12; ++n) {
    terms.push_back(ctx.kl().dim_D(1, n, Kind::B));
    if (n <= 8) ok = ok && terms.back() == (power(3, static_cast<unsigned>(n)) - 1) / 2 - n * n;
  }
  out.push_back(pass_if(ok, "recursion agrees with (3^n-1)/2 - n^2 for n<=8"));
  const RationalFunction printed = RationalFunction(Polynomial{1}, {{3, 1}}) * Rational(1, 2) -
                                   RationalFunction(Polynomial{1}, {{1, 1}}) * Rational(1, 2) -
                                   RationalFunction(Polynomial{0, 1}, {{1, 2}}) - RationalFunction(Polynomial{0, 0, 2}, {{1, 3}});
  const auto fit = series::fit_rational(terms, FitOptions{3, 3, 0, 5});
  out.push_back(pass_if(fit == printed, "fit of dim D^1_B[-n,n], n<=12, equals the displayed function", fit.to_string()));
  const auto poles = series::pole_set(fit);
  out.push_back(pass_if(poles == std::set<long>{1, 3}, "pole set = {1,3}"));
  const auto res = series::residue_at(fit, 3);
  const Rational expected = Rational(ctx.kl().dim_D(0, 1, Kind::B)) / Rational(hyperoctahedral_order(1));
  out.push_back(pass_if(res.converges && res.limit == expected && expected == Rational(1, 2),
                        "limit-residue at 3 = dim D^0_B[-1,1]/|W_1| = 1/2", res.describe()));
  return out;
}

std::vector<Check> degree_two_residue(Context& ctx) {
  std::vector<Check> out;
  std::vector<Integer> terms;
  for (int n = 0; n <= 20; ++n) {
    ctx.progress("dim D^2_B[-" + std::to_string(n) + "," + std::to_string(n) + "]");
    terms.push_back(ctx.kl().dim_D(2, n, Kind::B));
  }
  std::string seq;
  for (const auto& t : terms) seq += t.get_str() + " ";
  out.push_back(info("dim D^2_B[-n,n], n=0..20", seq));
  const std::vector<Integer> literal_terms(terms.begin(), terms.begin() + 15);
  const Rational expected = Rational(ctx.kl().dim_D(1, 3, Kind::B)) / Rational(hyperoctahedral_order(3));
  const bool expected_ok = expected == Rational(1, 12);
  // Literal statement: pole bound 5, multiplicity bound 4, residue at j = 3.
  try {
    const auto fit = series::fit_rational(literal_terms, FitOptions{5, 4, 0, 5});
    const auto res = series::residue_at(fit, 3);
    out.push_back(pass_if(res.converges && res.limit == expected, "literal: limit-residue at 3 (n<=14, pole bound 5, mult 4) = 1/12",
                          fit.to_string() + "; " + res.describe()));
  } catch (const FitError& e) {
    out.push_back({"literal: limit-residue at 3 (n<=14, pole bound 5, mult 4) = 1/12",
                   e.kind() == FitError::Kind::kInsufficientTerms ? Status::kInsufficient : Status::kFail, e.what()});
  }
  // The normalization at i = 2 needs j = 7; fit with room for it.
  try {
    const auto fit = series::fit_rational(terms, FitOptions{7, 5, 0, 5});
    const auto res = series::residue_at(fit, 7);
    out.push_back(pass_if(expected_ok && res.converges && res.limit == expected && series::pole_set(fit).count(3) == 1,
                          "companion: limit-residue at 7 (n<=20, pole bound 7, mult 5) = dim D^1_B[-3,3]/|W_3| = 1/12",
                          fit.to_string() + "; " + res.describe()));
  } catch (const FitError& e) {
    out.push_back({"companion: limit-residue at 7 (n<=20) = 1/12", Status::kFail, e.what()});
  }
  return out;
}

// ---- projectives and length bounds ----

std::vector<Check> projective_checks(int max_n, int only_d) {
  std::vector<Check> out;
  for (int d = 0; d <= 2; ++d) {
    if (only_d >= 0 && d != only_d) continue;
    std::vector<Integer> terms;
    for (int n = 0; n <= 24; ++n) terms.push_back(hom_count(n, d));
    const auto fit = series::fit_rational(terms, FitOptions{2 * d + 1, 1, 0, 5});
    bool poles_ok = true;
    for (long j : series::pole_set(fit)) poles_ok = poles_ok && j <= 2 * d + 1;
    const auto res = series::residue_at(fit, 2 * d + 1);
    out.push_back(pass_if(poles_ok, "d=" + std::to_string(d) + ": poles of H(P_[-d,d]) within {1..2d+1}", fit.to_string()));
    out.push_back(pass_if(res.converges && res.limit == 1, "d=" + std::to_string(d) + ": limit-residue at 2d+1 = 1", res.describe()));
    bool bounds = true;
    std::string viol;
    for (int n = d; n <= max_n; ++n) {
      const auto rep = rep::length_bound_report(d, n);
      bounds = bounds && rep.holds();
      for (const auto& b : rep.violations) viol += "n=" + std::to_string(n) + " " + b.to_string() + " ";
    }
    out.push_back(pass_if(bounds, "d=" + std::to_string(d) + ": constituents of P_[-d,d][-n,n] have l(lambda)<=d+1, l(mu)<=d, n<=" +
                                      std::to_string(max_n),
                          viol));
  }
  return out;
}

// ---- ordered category and words ----

std::vector<Check> groebner_checks(Context& ctx, int max_n) {
  using namespace words;
  std::vector<Check> out;
  {
    long pairs = 0, bad = 0;
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= n; ++m)
        for (int d = 0; d <= m; ++d)
          for (const auto& f : enumerate_osb(n, m))
            for (const auto& g : enumerate_osb(m, d)) {
              ++pairs;
              try {
                bad += !osb_compose(classify(g), classify(f)).valid();
              } catch (const InternalError&) {
                ++bad;
              }
            }
    out.push_back(pass_if(bad == 0, "OS_B composition closed, n<=3",
                          std::to_string(pairs) + " composable pairs, " + std::to_string(bad) + " failures"));
  }
  {
    std::mt19937 rng(17);
    auto random_word = [&](int n, int max_len) {
      std::vector<int> l(rng() % static_cast<unsigned>(max_len + 1));
      for (auto& x : l) x = static_cast<int>(rng() % static_cast<unsigned>(2 * n + 1)) - n;
      return Word(n, l);
    };
    long bad = 0;
    const long triples = 20000;
    for (long t = 0; t < triples; ++t) {
      Word a = random_word(2, 4);
      Word b = a;
      for (unsigned k = 0; k < rng() % 3; ++k)
        b.letters.insert(b.letters.begin() + static_cast<long>(rng() % (b.size() + 1)), static_cast<int>(rng() % 5) - 2);
      Word c = t % 2 ? random_word(2, 8) : b;
      if (t % 2 == 0)
        for (unsigned k = 0; k < rng() % 3; ++k)
          c.letters.insert(c.letters.begin() + static_cast<long>(rng() % (c.size() + 1)), static_cast<int>(rng() % 5) - 2);
      bad += !word_leq(a, a);
      if (word_leq(a, b) && word_leq(b, c)) bad += !word_leq(a, c);
      if (word_leq(a, b) && word_leq(b, a)) bad += !(a == b);
    }
    out.push_back(pass_if(bad == 0, "word order reflexive, antisymmetric, transitive",
                          std::to_string(triples) + " random triples, " + std::to_string(bad) + " violations"));
  }
  for (auto cov : {Coverage::kAllOrbits, Coverage::kFreeOrbits}) {
    ctx.progress(std::string("iota order check, ") + (cov == Coverage::kAllOrbits ? "literal" : "free-orbit") + " order");
    long pairs = 0, mismatched = 0, image_bad = 0;
    for (int m = 0; m <= 2; ++m) {
      std::vector<BMorphism> all;
      for (int n = 0; n <= max_n; ++n)
        for (const auto& p : enumerate_osb(n, m)) all.push_back(p);
      for (const auto& a : all)
        for (const auto& b : all) {
          ++pairs;
          mismatched += morphism_leq(a, b) != word_leq(iota(a), iota(b), cov);
        }
      std::vector<int> chain;
      for (int k = 1; k <= m; ++k) chain.push_back(k);
      const auto aut = principal_ideal_automaton(Word(m, chain), cov);
      for (int n = 0; n <= max_n; ++n) {
        const auto image = enumerate_osb(n, m);
        bool ok = aut.count_by_length(n)[static_cast<std::size_t>(n)] == Integer(static_cast<unsigned long>(image.size()));
        for (const auto& p : image) ok = ok && aut.accepts(iota(p));
        image_bad += !ok;
      }
    }
    const std::string detail = std::to_string(mismatched) + " of " + std::to_string(pairs) + " pairs disagree; image differs from I_{1..m} in " +
                               std::to_string(image_bad) + " (m,n) cells";
    if (cov == Coverage::kAllOrbits)
      out.push_back(pass_if(mismatched == 0 && image_bad == 0, "iota is an order embedding onto I_{1..m}, m<=2, n<=" + std::to_string(max_n), detail));
    else
      out.push_back(info("companion: same check with the letter 0 exempt from first-occurrence coverage", detail));
  }
  {
    std::vector<Word> gens = {Word(1, {1}), Word(2, {1, 2}), Word(2, {0, 1}), Word(2, {2, -2, 0}), Word(1, {1, -1, 0}), Word(2, {}),
                              Word(3, {1, 2, 3}), Word(2, {1, 1, -2})};
    long bad = 0;
    for (const auto& w : gens) {
      const auto aut = words::principal_ideal_automaton(w);
      const auto by_aut = aut.count_by_length(6);
      const auto brute = kernels::parallel::ideal_member_counts(w, 6);
      for (std::size_t l = 0; l < brute.size(); ++l) bad += by_aut[l] != brute[l];
    }
    out.push_back(pass_if(bad == 0, "ideal automaton counts = brute enumeration, lengths<=6",
                          std::to_string(gens.size()) + " generators, " + std::to_string(bad) + " mismatches"));
  }
  {
    std::mt19937 rng(29);
    long bad = 0, total = 0;
    for (int m = 1; m <= 3; ++m)
      for (int t = 0; t < 15; ++t) {
        std::vector<int> l(1 + rng() % 5);
        for (auto& x : l) x = static_cast<int>(rng() % static_cast<unsigned>(2 * m + 1)) - m;
        const auto r = ideal_series(principal_ideal_automaton(Word(m, l)));
        ++total;
        for (long j : series::pole_set(r)) bad += j > 2 * m + 1;
      }
    out.push_back(pass_if(bad == 0, "ideal_series poles within {1..2m+1}",
                          std::to_string(total) + " principal ideals, " + std::to_string(bad) + " poles out of range"));
  }
  return out;
}

// ---- degree-one equivariant example ----

std::vector<Check> degree_one_equivariant(int max_n) {
  std::vector<Check> out;
  for (int n = 3; n <= max_n; ++n) {
    const auto ch = rep::d1_virtual_character(n);
    const Integer expected = (power(3, static_cast<unsigned>(n)) - 1) / 2 - n * n;
    const auto parts = rep::decompose(ch);
    bool nonneg = true, bounds = true;
    std::string text;
    for (const auto& c : parts) {
      nonneg = nonneg && c.multiplicity > 0;
      bounds = bounds && c.label.lambda.length() <= 2 && c.label.mu.length() <= 1;
      text += c.multiplicity.get_str() + "x" + c.label.to_string() + " ";
    }
    out.push_back(pass_if(ch.dimension() == expected, "n=" + std::to_string(n) + ": dimension (3^n-1)/2 - n^2", str(ch.dimension())));
    out.push_back(pass_if(nonneg, "n=" + std::to_string(n) + ": multiplicities nonnegative", text));
    out.push_back(pass_if(bounds, "n=" + std::to_string(n) + ": constituents satisfy l(lambda)<=2, l(mu)<=1"));
    const auto rep = rep::c_lambda_report(n);
    std::string table;
    int disagree = 0;
    for (const auto& row : rep.rows) {
      table += row.lambda.to_string() + ":" + row.computed.get_str() + "/" + (row.formula ? row.formula->get_str() : "undefined") + " ";
      disagree += row.formula && !row.agrees();
    }
    out.push_back(info("n=" + std::to_string(n) + ": c_lambda computed/closed form",
                       table + "| " + std::to_string(disagree) + " rows differ; closed form totals " + rep.formula_dimension.get_str() +
                           " vs dimension " + rep.total_dimension.get_str() + "; lambda=[] has no closed-form value"));
  }
  return out;
}

}  // namespace

Report run_criterion(int k, const Options& options) {
  Context ctx(options);
  switch (k) {
    case 1:
      return timed("criterion-1", "flat/morphism dictionary", [&] { return flat_dictionary(5, 6); });
    case 2:
      return timed("criterion-2", "Orlik-Solomon dimensions", [&] { return os_dimensions(6, 5); });
    case 3:
      return timed("criterion-3", "psi-identity for the collapsing maps", [&] {
        auto out = psi_identity(1, false);
        for (auto& c : psi_identity(2, false)) out.push_back(c);
        for (auto& c : psi_identity(2, true)) out.push_back(c);
        // Spanning is what the identity is used for; reported alongside.
        for (auto& c : spanning_checks(4, true)) out.push_back(info("companion: " + c.name + " " + to_string(c.status), c.detail));
        return out;
      });
    case 4:
      return timed("criterion-4", "KL coefficients and vanishing", [&] { return kl_values(ctx, 8, 3); });
    case 5:
      return timed("criterion-5", "Hilbert series of D^1_B", [&] { return degree_one_series(ctx); });
    case 6:
      return timed("criterion-6", "smallness of principal projectives", [&] { return projective_checks(6, -1); });
    case 7:
      return timed("criterion-7", "Groebner machinery", [&] { return groebner_checks(ctx, 4); });
    case 8: {
      auto r = timed("criterion-8", "residue of H(D^2_B)", [&] { return degree_two_residue(ctx); });
      // The criterion sanctions "insufficient terms" for the literal fit; it
      // passes when that is what happens and the j = 7 companion holds.
      bool literal_ok = false, companion_ok = false, failed = false;
      for (const auto& c : r.checks) {
        if (c.name.rfind("literal", 0) == 0) literal_ok = c.status == Status::kInsufficient || c.status == Status::kPass;
        if (c.name.rfind("companion", 0) == 0) companion_ok = c.status == Status::kPass;
        failed = failed || c.status == Status::kFail;
      }
      r.status = !failed && literal_ok && companion_ok ? Status::kPass : Status::kFail;
      return r;
    }
    case 9:
      return timed("criterion-9", "equivariant degree-one example", [&] { return degree_one_equivariant(6); });
    default:
      throw std::invalid_argument("criteria are numbered 1.." + std::to_string(kNumCriteria));
  }
}

std::vector<std::string> suite_names() { return {"b-small", "klb", "osb", "groebner"}; }

std::vector<Report> run_suite(const std::string& suite, const Options& options) {
  Context ctx(options);
  std::vector<Report> out;
  if (suite == "b-small") {
    const int n = std::min(ctx.max_n(6), 7);
    out.push_back(timed("b-small/flats", "flat/morphism dictionary", [&] { return flat_dictionary(std::min(n, 5), n); }));
    out.push_back(timed("b-small/projectives", "poles, limit-residues and length bounds", [&] { return projective_checks(n, ctx.d()); }));
  } else if (suite == "klb") {
    const int n = ctx.max_n(8);
    out.push_back(timed("klb/values", "KL coefficients and vanishing", [&] { return kl_values(ctx, n, 3); }));
    out.push_back(timed("klb/degree-one", "Hilbert series of D^1_B", [&] { return degree_one_series(ctx); }));
    out.push_back(run_criterion(8, Options{options.max_n, options.d, &ctx.kl(), options.progress}));
    out.back().id = "klb/degree-two";
  } else if (suite == "osb") {
    const int n = std::min(ctx.max_n(5), 6);
    out.push_back(timed("osb/dimensions", "Orlik-Solomon dimensions", [&] { return os_dimensions(n, std::min(n, 5)); }));
    out.push_back(timed("osb/spanning", "pullbacks span the duals", [&] { return spanning_checks(n, n >= 4); }));
  } else if (suite == "groebner") {
    const int n = std::min(ctx.max_n(4), 4);
    out.push_back(timed("groebner", "Groebner machinery", [&] { return groebner_checks(ctx, n); }));
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "' (expected b-small, klb, osb or groebner)");
  }
  return out;
}

}  // namespace fsb::verify
