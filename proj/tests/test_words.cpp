#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <random>

#include "fsb/errors.hpp"
#include "fsb/words.hpp"

using namespace fsb;
using namespace fsb::words;

namespace {

// Direct reading of the definition: try every strictly increasing theta.
bool leq_by_subsets(const Word& w, const Word& v, Coverage cov) {
  const int m = static_cast<int>(w.size());
  const int n = static_cast<int>(v.size());
  if (m > n) return false;
  std::vector<int> theta(static_cast<std::size_t>(m));
  std::function<bool(int, int)> rec = [&](int i, int from) -> bool {
    if (i == m) {
      for (int j = 0; j < n; ++j) {
        const int fj = v.letters[static_cast<std::size_t>(j)];
        if (fj == 0 && cov == Coverage::kFreeOrbits) continue;
        bool covered = false;
        for (int k = 0; k < m && !covered; ++k) {
          const int p = theta[static_cast<std::size_t>(k)];
          if (p <= j && std::abs(v.letters[static_cast<std::size_t>(p)]) == std::abs(fj)) covered = true;
        }
        if (!covered) return false;
      }
      return true;
    }
    for (int p = from; p < n; ++p) {
      if (v.letters[static_cast<std::size_t>(p)] != w.letters[static_cast<std::size_t>(i)]) continue;
      theta[static_cast<std::size_t>(i)] = p;
      if (rec(i + 1, p + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

std::vector<Word> all_words(int n, int len) {
  std::vector<Word> out;
  std::vector<int> ls(static_cast<std::size_t>(len), -n);
  while (true) {
    out.emplace_back(n, ls);
    int k = len - 1;
    while (k >= 0 && ls[static_cast<std::size_t>(k)] == n) ls[static_cast<std::size_t>(k--)] = -n;
    if (k < 0) break;
    ++ls[static_cast<std::size_t>(k)];
  }
  return out;
}

Word random_word(std::mt19937& rng, int n, int max_len) {
  std::vector<int> ls(rng() % static_cast<unsigned>(max_len + 1));
  for (auto& x : ls) x = static_cast<int>(rng() % static_cast<unsigned>(2 * n + 1)) - n;
  return Word(n, ls);
}

}  // namespace

TEST_CASE("first-occurrence conditions") {
  CHECK(is_osb_morphism(BMorphism(2, 1, {1, 1})));
  CHECK_FALSE(is_osb_morphism(BMorphism(2, 1, {-1, 1})));
  for (int n = 0; n <= 4; ++n) CHECK(is_osb_morphism(BMorphism::identity(n)));
  auto bad_order = classify(BMorphism(2, 2, {2, 1}));
  CHECK(bad_order.first_in_fiber);
  CHECK_FALSE(bad_order.inits_increase);
  // OS_B morphisms out of [-n,n] are exactly the orbit representatives.
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) CHECK(enumerate_osb(n, m) == orbit_classes(n, m));
}

TEST_CASE("OS_B composition closes") {
  auto a = classify(BMorphism(3, 2, {1, 1, 2}));
  auto b = classify(BMorphism(2, 1, {1, 1}));
  auto c = osb_compose(b, a);
  CHECK(c.map.images() == std::vector<int>{1, 1, 1});
  CHECK(c.valid());
  auto id = classify(BMorphism::identity(3));
  CHECK(osb_compose(a, id).map == a.map);
  CHECK(osb_compose(classify(BMorphism::identity(2)), a).map == a.map);
  CHECK_THROWS_AS(osb_compose(b, classify(BMorphism(2, 1, {-1, 1}))), ShapeError);
  long pairs = 0;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= n; ++m)
      for (int d = 0; d <= m; ++d)
        for (const auto& f : enumerate_osb(n, m))
          for (const auto& g : enumerate_osb(m, d)) {
            CHECK(osb_compose(classify(g), classify(f)).valid());
            ++pairs;
          }
  CHECK(pairs > 0);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int m = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const int d = static_cast<int>(rng() % static_cast<unsigned>(m + 1));
    auto fs = enumerate_osb(n, m);
    auto gs = enumerate_osb(m, d);
    CHECK(osb_compose(classify(gs[rng() % gs.size()]), classify(fs[rng() % fs.size()])).valid());
  }
}

TEST_CASE("word order: definition examples and subset oracle") {
  CHECK(word_leq(parse_word(1, "1"), parse_word(1, "1 1")));
  CHECK_FALSE(word_leq(parse_word(2, "1"), parse_word(2, "2 1")));
  CHECK(word_leq(Word(2, {}), Word(2, {})));
  CHECK_FALSE(word_leq(Word(1, {}), parse_word(1, "0")));
  CHECK(word_leq(Word(1, {}), parse_word(1, "0"), Coverage::kFreeOrbits));
  CHECK_THROWS_AS(parse_word(1, "2"), ShapeError);
  for (auto cov : {Coverage::kAllOrbits, Coverage::kFreeOrbits})
    for (int lw = 0; lw <= 3; ++lw)
      for (int lv = 0; lv <= 4; ++lv)
        for (const auto& w : all_words(1, lw))
          for (const auto& v : all_words(1, lv)) CHECK(word_leq(w, v, cov) == leq_by_subsets(w, v, cov));
}

TEST_CASE("word order is a partial order") {
  std::mt19937 rng(17);
  for (auto cov : {Coverage::kAllOrbits, Coverage::kFreeOrbits}) {
    for (int trial = 0; trial < 20000; ++trial) {
      // Bias toward comparable triples by building supersequences.
      Word a = random_word(rng, 2, 4);
      Word b = a;
      for (int k = 0; k < static_cast<int>(rng() % 3); ++k)
        b.letters.insert(b.letters.begin() + static_cast<long>(rng() % (b.size() + 1)), static_cast<int>(rng() % 5) - 2);
      Word c = b;
      for (int k = 0; k < static_cast<int>(rng() % 3); ++k)
        c.letters.insert(c.letters.begin() + static_cast<long>(rng() % (c.size() + 1)), static_cast<int>(rng() % 5) - 2);
      if (trial % 2) c = random_word(rng, 2, 8);
      CHECK(word_leq(a, a, cov));
      if (word_leq(a, b, cov) && word_leq(b, c, cov)) CHECK(word_leq(a, c, cov));
      if (word_leq(a, b, cov) && word_leq(b, a, cov)) CHECK(a == b);
    }
  }
}

TEST_CASE("iota and the morphism order") {
  CHECK(iota(BMorphism::identity(2)) == parse_word(2, "1 2"));
  CHECK(iota(BMorphism(2, 1, {1, 1})) == parse_word(1, "1 1"));
  // With the letter 0 exempt from first-occurrence coverage, iota is an order
  // embedding and its image is I_{1..m}.
  for (int m = 0; m <= 2; ++m) {
    std::vector<BMorphism> all;
    for (int n = 0; n <= 4; ++n)
      for (const auto& p : enumerate_osb(n, m)) all.push_back(p);
    for (const auto& a : all)
      for (const auto& b : all) CHECK(morphism_leq(a, b) == word_leq(iota(a), iota(b), Coverage::kFreeOrbits));
    std::vector<int> chain;
    for (int k = 1; k <= m; ++k) chain.push_back(k);
    auto aut = principal_ideal_automaton(Word(m, chain), Coverage::kFreeOrbits);
    for (int n = 0; n <= 4; ++n) {
      auto image = enumerate_osb(n, m);
      CHECK(aut.count_by_length(n)[static_cast<std::size_t>(n)] == Integer(static_cast<unsigned long>(image.size())));
      for (const auto& p : image) CHECK(aut.accepts(iota(p)));
    }
  }
  // Under the literal order the fixed point is an orbit to cover, and the
  // embedding breaks: the identity on [0,0] lies below [-1,1] -> [0,0].
  const auto lo = BMorphism::identity(0);
  const auto hi = BMorphism::to_point(1);
  CHECK(morphism_leq(lo, hi));
  CHECK_FALSE(word_leq(iota(lo), iota(hi)));
  auto literal = principal_ideal_automaton(parse_word(1, "1"));
  CHECK_FALSE(literal.accepts(iota(BMorphism(2, 1, {1, 0}))));
}

TEST_CASE("length-lex comparator") {
  CHECK(length_lex_less(parse_word(2, "2"), parse_word(2, "1 1")));
  CHECK(length_lex_less(parse_word(2, "-1 2"), parse_word(2, "1 1")));
  CHECK(iota_less(BMorphism(2, 1, {1, 0}), BMorphism(2, 1, {1, 1})));
}

TEST_CASE("order lift") {
  auto lift = lift_order(BMorphism(2, 1, {-1, 1}));
  CHECK(lift.lifted.map.images() == std::vector<int>{1, 1});
  CHECK(lift.lifted.valid());
  auto trivial = lift_order(BMorphism::identity(3));
  CHECK(trivial.relabeling == SignedPerm::identity(3));
  for (int n = 0; n <= 4; ++n)
    for (int d = 0; d <= std::min(n, 2); ++d) {
      auto group = SignedPerm::all(n);
      for (const auto& phi : enumerate_hom(n, d)) {
        bool some = false;
        for (const auto& w : group)
          if (is_osb_morphism(act(w, phi))) {
            some = true;
            break;
          }
        CHECK(some);
        auto l = lift_order(phi);
        CHECK(act(l.relabeling, phi) == l.lifted.map);
        CHECK(l.lifted.valid());
        CHECK(std::is_sorted(l.lifted.map.images().begin(), l.lifted.map.images().end()));
      }
    }
}

TEST_CASE("principal ideal automata against brute enumeration") {
  auto one = principal_ideal_automaton(parse_word(1, "1"));
  auto counts = one.count_by_length(6);
  CHECK(counts[0] == 0);
  for (int l = 1; l <= 6; ++l) CHECK(counts[static_cast<std::size_t>(l)] == power(2, static_cast<unsigned>(l - 1)));
  CHECK(one.accepts(parse_word(1, "1")));
  CHECK(one.num_states() <= 3);

  std::mt19937 rng(23);
  std::vector<Word> gens = {parse_word(2, "1 2"), parse_word(2, "1"), parse_word(2, "0 1"), parse_word(2, "2 -2 0"),
                            parse_word(1, "1 -1 0"), Word(2, {})};
  for (int k = 0; k < 6; ++k) gens.push_back(random_word(rng, 2, 3));
  for (auto cov : {Coverage::kAllOrbits, Coverage::kFreeOrbits})
    for (const auto& w : gens) {
      auto aut = principal_ideal_automaton(w, cov);
      CHECK(aut.accepts(w));
      CHECK(aut.num_states() <= static_cast<int>(w.size()) + 2);
      auto c = aut.count_by_length(6);
      for (int l = 0; l <= 6; ++l) {
        long brute = 0;
        for (const auto& v : all_words(w.alphabet_n, l)) {
          const bool in = word_leq(w, v, cov);
          CHECK(aut.accepts(v) == in);
          brute += in;
        }
        CHECK(c[static_cast<std::size_t>(l)] == brute);
      }
    }
}

TEST_CASE("ideal series") {
  using series::Polynomial;
  using series::RationalFunction;
  CHECK(ideal_series(principal_ideal_automaton(parse_word(1, "1"))) == RationalFunction(Polynomial{0, 1}, {{2, 1}}));
  CHECK(ideal_series(principal_ideal_automaton(parse_word(2, "1 2"))) ==
        RationalFunction(Polynomial{0, 0, 1}, {{2, 1}, {4, 1}}));
  CHECK(ideal_series(empty_language_automaton(2)).is_zero());
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    Word w = random_word(rng, m, 5);
    for (auto cov : {Coverage::kAllOrbits, Coverage::kFreeOrbits}) {
      auto aut = principal_ideal_automaton(w, cov);
      auto r = ideal_series(aut);
      for (long j : series::pole_set(r)) CHECK(j <= 2 * m + 1);
      auto counts = aut.count_by_length(12);
      auto expanded = r.expand(13);
      for (std::size_t k = 0; k < counts.size(); ++k) CHECK(expanded[k] == Rational(counts[k]));
    }
  }
}

TEST_CASE("minimal elements") {
  std::set<Word> one{parse_word(2, "1 2 2")};
  CHECK(minimal_elements(one, 8) == one);
  std::set<Word> pair{parse_word(1, "1 1"), parse_word(1, "1")};
  CHECK(minimal_elements(pair, 8) == std::set<Word>{parse_word(1, "1")});

  std::mt19937 rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    std::set<Word> s;
    for (int k = 0; k < 5; ++k) s.insert(random_word(rng, 2, 4));
    auto mins = minimal_elements(s, 8);
    for (const auto& a : mins)
      for (const auto& b : mins)
        if (a != b) CHECK_FALSE(word_leq(a, b));
    // Every member of the length-bounded closure dominates a minimal element.
    for (int l = 0; l <= 6; ++l)
      for (const auto& v : all_words(2, l)) {
        bool in_closure = false;
        for (const auto& g : s) in_closure = in_closure || word_leq(g, v);
        if (!in_closure) continue;
        bool dominated = false;
        for (const auto& mnl : mins) dominated = dominated || word_leq(mnl, v);
        CHECK(dominated);
      }
  }
}
