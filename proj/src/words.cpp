#include "fsb/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "fsb/errors.hpp"
#include "fsb/linalg.hpp"

namespace fsb::words {

Word::Word(int n, std::vector<int> ls) : alphabet_n(n), letters(std::move(ls)) {
  if (n < 0) throw ShapeError("alphabet size must be nonnegative");
  for (int x : letters)
    if (std::abs(x) > n) throw ShapeError("letter " + std::to_string(x) + " outside [-n,n]");
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters.size(); ++k) os << (k ? " " : "") << letters[k];
  return os.str();
}

Word parse_word(int alphabet_n, const std::string& text) {
  std::istringstream is(text);
  std::vector<int> ls;
  int x;
  while (is >> x) ls.push_back(x);
  if (!is.eof()) throw std::invalid_argument("malformed word: " + text);
  return Word(alphabet_n, std::move(ls));
}

bool word_leq(const Word& w, const Word& v, Coverage coverage) {
  if (w.alphabet_n != v.alphabet_n) throw ShapeError("words over different alphabets");
  const std::size_t m = w.size();
  const std::size_t n = v.size();
  if (m > n) return false;
  // Positions of v that the embedding must use.
  std::vector<char> must(n, 0);
  std::vector<char> seen(static_cast<std::size_t>(v.alphabet_n) + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t o = static_cast<std::size_t>(std::abs(v.letters[j]));
    if (!seen[o]) {
      seen[o] = 1;
      must[j] = !(o == 0 && coverage == Coverage::kFreeOrbits);
    }
  }
  // ok[i][j]: w[i..] embeds in v[j..] using every forced position >= j.
  std::vector<std::vector<char>> ok(m + 1, std::vector<char>(n + 1, 0));
  ok[m][n] = 1;
  for (std::size_t j = n; j-- > 0;) ok[m][j] = ok[m][j + 1] && !must[j];
  for (std::size_t i = m; i-- > 0;)
    for (std::size_t j = n; j-- > 0;) {
      bool r = !must[j] && ok[i][j + 1];
      if (!r && w.letters[i] == v.letters[j]) r = ok[i + 1][j + 1];
      ok[i][j] = r;
    }
  return ok[0][0];
}

OSBMorphism classify(const BMorphism& phi) {
  // init of each positive fiber: the element of smallest absolute value in
  // phi^-1(e) ∪ phi^-1(-e), with its sign.
  const int d = phi.target();
  std::vector<int> init(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 1; i <= phi.source(); ++i) {
    const int x = phi(i);
    if (x == 0) continue;
    int& slot = init[static_cast<std::size_t>(std::abs(x))];
    if (slot == 0) slot = x > 0 ? i : -i;  // i is the smallest |.| hitting this orbit
  }
  OSBMorphism out{phi, true, true};
  for (int e = 1; e <= d; ++e) {
    if (init[static_cast<std::size_t>(e)] < 0) out.first_in_fiber = false;
    if (e > 1 && std::abs(init[static_cast<std::size_t>(e - 1)]) >= std::abs(init[static_cast<std::size_t>(e)]))
      out.inits_increase = false;
  }
  return out;
}

bool is_osb_morphism(const BMorphism& phi) { return classify(phi).valid(); }

OSBMorphism osb_compose(const OSBMorphism& psi, const OSBMorphism& phi) {
  if (!psi.valid() || !phi.valid()) throw ShapeError("osb_compose needs OS_B morphisms");
  OSBMorphism out = classify(compose(psi.map, phi.map));
  if (!out.valid()) throw InternalError("OS_B composite violates the first-occurrence conditions: " + out.map.to_string());
  return out;
}

std::vector<BMorphism> enumerate_osb(int n, int m) {
  std::vector<BMorphism> out;
  for (auto& phi : enumerate_hom(n, m))
    if (is_osb_morphism(phi)) out.push_back(std::move(phi));
  return out;
}

Word iota(const BMorphism& phi) { return Word(phi.target(), phi.images()); }

bool morphism_leq(const BMorphism& phi, const BMorphism& phi_prime) {
  if (phi.target() != phi_prime.target()) throw ShapeError("morphisms with different targets are incomparable");
  for (const auto& psi : enumerate_osb(phi_prime.source(), phi.source()))
    if (compose(phi, psi) == phi_prime) return true;
  return false;
}

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

bool iota_less(const BMorphism& a, const BMorphism& b) { return length_lex_less(iota(a), iota(b)); }

Lift lift_order(const BMorphism& phi) {
  const int n = phi.source();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return std::abs(phi(a)) < std::abs(phi(b)); });
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    w[static_cast<std::size_t>(k)] = phi(src) < 0 ? -src : src;
  }
  SignedPerm relabeling(std::move(w));
  OSBMorphism lifted = classify(act(relabeling, phi));
  if (!lifted.valid()) throw InternalError("order lift failed for " + phi.to_string());
  return {std::move(relabeling), std::move(lifted)};
}

IdealAutomaton::IdealAutomaton(int alphabet_n, int num_states, int start, std::vector<std::vector<int>> transitions,
                               std::vector<bool> accepting)
    : n_(alphabet_n), start_(start), delta_(std::move(transitions)), accepting_(std::move(accepting)) {
  const std::size_t letters = static_cast<std::size_t>(2 * n_ + 1);
  if (num_states < 1 || static_cast<int>(delta_.size()) != num_states ||
      static_cast<int>(accepting_.size()) != num_states || start < 0 || start >= num_states)
    throw ShapeError("inconsistent automaton shape");
  for (const auto& row : delta_) {
    if (row.size() != letters) throw ShapeError("transition row has the wrong alphabet size");
    for (int s : row)
      if (s < 0 || s >= num_states) throw ShapeError("transition to a nonexistent state");
  }
}

bool IdealAutomaton::accepts(const Word& w) const {
  if (w.alphabet_n != n_) throw ShapeError("word over a different alphabet");
  int s = start_;
  for (int x : w.letters) s = next(s, x);
  return accepting(s);
}

std::vector<Integer> IdealAutomaton::count_by_length(int max_length) const {
  std::vector<Integer> out;
  std::vector<Integer> ways(static_cast<std::size_t>(num_states()), 0);
  ways[static_cast<std::size_t>(start_)] = 1;
  for (int len = 0; len <= max_length; ++len) {
    Integer acc = 0;
    for (int s = 0; s < num_states(); ++s)
      if (accepting(s)) acc += ways[static_cast<std::size_t>(s)];
    out.push_back(acc);
    std::vector<Integer> nxt(ways.size(), 0);
    for (int s = 0; s < num_states(); ++s) {
      if (ways[static_cast<std::size_t>(s)] == 0) continue;
      for (int x = -n_; x <= n_; ++x) nxt[static_cast<std::size_t>(next(s, x))] += ways[static_cast<std::size_t>(s)];
    }
    ways.swap(nxt);
  }
  return out;
}

std::string IdealAutomaton::to_table() const {
  std::ostringstream os;
  os << "alphabet [-" << n_ << "," << n_ << "], " << num_states() << " states, start " << start_ << "\n";
  for (int s = 0; s < num_states(); ++s)
    for (int x = -n_; x <= n_; ++x)
      os << s << (accepting(s) ? "*" : "") << " " << x << " -> " << next(s, x) << (accepting(next(s, x)) ? "*" : "") << "\n";
  return os.str();
}

std::string IdealAutomaton::to_dot() const {
  std::ostringstream os;
  os << "digraph ideal {\n  rankdir=LR;\n";
  for (int s = 0; s < num_states(); ++s)
    os << "  q" << s << " [shape=" << (accepting(s) ? "doublecircle" : "circle") << "];\n";
  os << "  start [shape=point];\n  start -> q" << start_ << ";\n";
  for (int s = 0; s < num_states(); ++s) {
    // Group letters sharing a target into one edge.
    for (int t = 0; t < num_states(); ++t) {
      std::string label;
      for (int x = -n_; x <= n_; ++x)
        if (next(s, x) == t) label += (label.empty() ? "" : ",") + std::to_string(x);
      if (!label.empty()) os << "  q" << s << " -> q" << t << " [label=\"" << label << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

IdealAutomaton principal_ideal_automaton(const Word& w, Coverage coverage) {
  const int n = w.alphabet_n;
  const int len = static_cast<int>(w.size());
  const int dead = len + 1;
  const std::size_t letters = static_cast<std::size_t>(2 * n + 1);
  std::vector<std::vector<int>> delta(static_cast<std::size_t>(len + 2), std::vector<int>(letters, dead));
  std::vector<char> pool(letters, 0);  // P_k as a letter mask
  if (coverage == Coverage::kFreeOrbits) pool[static_cast<std::size_t>(n)] = 1;
  for (int k = 0; k <= len; ++k) {
    for (int x = -n; x <= n; ++x)
      if (pool[static_cast<std::size_t>(x + n)]) delta[static_cast<std::size_t>(k)][static_cast<std::size_t>(x + n)] = k;
    if (k < len) {
      const int e = w.letters[static_cast<std::size_t>(k)];
      delta[static_cast<std::size_t>(k)][static_cast<std::size_t>(e + n)] = k + 1;
      pool[static_cast<std::size_t>(e + n)] = 1;
      pool[static_cast<std::size_t>(-e + n)] = 1;
    }
  }
  std::vector<bool> accepting(static_cast<std::size_t>(len + 2), false);
  accepting[static_cast<std::size_t>(len)] = true;
  return IdealAutomaton(n, len + 2, 0, std::move(delta), std::move(accepting));
}

IdealAutomaton empty_language_automaton(int alphabet_n) {
  return IdealAutomaton(alphabet_n, 1, 0, {std::vector<int>(static_cast<std::size_t>(2 * alphabet_n + 1), 0)}, {false});
}

series::RationalFunction ideal_series(const IdealAutomaton& aut) {
  const std::size_t s = static_cast<std::size_t>(aut.num_states());
  Matrix a(s, s);
  for (int q = 0; q < aut.num_states(); ++q)
    for (int x = -aut.alphabet_n(); x <= aut.alphabet_n(); ++x) a(static_cast<std::size_t>(q), static_cast<std::size_t>(aut.next(q, x))) += 1;

  // Faddeev-LeVerrier: characteristic polynomial coefficients c_k of lambda^k.
  std::vector<Rational> c(s + 1);
  c[s] = 1;
  Matrix mk(s, s);
  for (std::size_t k = 1; k <= s; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < s; ++i) next(i, i) += c[s - k + 1];
    mk = std::move(next);
    Matrix am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < s; ++i) tr += am(i, i);
    c[s - k] = -tr / Rational(static_cast<long>(k));
  }
  // det(I - tA) = t^s p(1/t): coefficient of t^i is c_{s-i}.
  std::vector<Rational> dcoef(s + 1);
  for (std::size_t i = 0; i <= s; ++i) dcoef[i] = c[s - i];
  series::Polynomial den(std::move(dcoef));

  auto counts = aut.count_by_length(static_cast<int>(s));
  std::vector<Rational> cq(counts.begin(), counts.end());
  series::Polynomial num = (series::Polynomial(std::move(cq)) * den).truncated(static_cast<int>(s));

  series::RationalFunction::Factors factors;
  const long max_j = 2L * aut.alphabet_n() + 1;
  for (long j = 1; j <= max_j; ++j) {
    while (den.degree() > 0 && den(Rational(1, j)) == 0) {
      den = den.divmod(series::Polynomial::one_minus(j)).first;
      ++factors[j];
    }
  }
  if (den != series::Polynomial::constant(1))
    throw InternalError("transfer matrix has a non-integer eigenvalue: leftover factor " + den.to_string());
  return series::RationalFunction(std::move(num), std::move(factors));
}

std::set<Word> minimal_elements(const std::set<Word>& s, int max_length, Coverage coverage) {
  std::vector<Word> cand;
  for (const auto& w : s)
    if (static_cast<int>(w.size()) <= max_length) cand.push_back(w);
  std::set<Word> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cand.size() && minimal; ++j)
      if (i != j && cand[j] != cand[i] && word_leq(cand[j], cand[i], coverage)) minimal = false;
    if (minimal) out.insert(cand[i]);
  }
  return out;
}

}  // namespace fsb::words
