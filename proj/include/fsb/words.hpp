#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "fsb/core.hpp"
#include "fsb/numeric.hpp"
#include "fsb/series.hpp"

namespace fsb::words {

/// Finite word over the alphabet [-n,n].
struct Word {
  int alphabet_n = 0;
  std::vector<int> letters;

  Word() = default;
  /// Throws ShapeError on a letter outside [-n,n].
  Word(int alphabet_n, std::vector<int> letters);

  std::size_t size() const { return letters.size(); }
  /// Letters separated by spaces; the empty word prints as "".
  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Parses "1 -2 0" into a word over [-n,n].
Word parse_word(int alphabet_n, const std::string& text);

/// Which orbits must have their first occurrence selected by the embedding.
/// kAllOrbits treats the fixed point {0} as an orbit like any other; this is
/// the default everywhere. kFreeOrbits exempts the letter 0.
enum class Coverage { kAllOrbits, kFreeOrbits };

/// w <= v: w embeds in v as a subword whose positions include the first
/// occurrence of every (covered) orbit of v. O(|w| |v|).
bool word_leq(const Word& w, const Word& v, Coverage coverage = Coverage::kAllOrbits);

/// An FS_B morphism with the two first-occurrence conditions evaluated.
struct OSBMorphism {
  BMorphism map;
  bool first_in_fiber;   // (i): init phi^-1(e) lies in phi^-1(e) for every e > 0
  bool inits_increase;   // (ii): e < f implies init phi^-1(e) < init phi^-1(f)
  bool valid() const { return first_in_fiber && inits_increase; }
};

/// Evaluates (i) and (ii) directly from the preimage sets.
OSBMorphism classify(const BMorphism& phi);
bool is_osb_morphism(const BMorphism& phi);

/// psi ∘ phi for OS_B morphisms. Throws ShapeError if an input is not in
/// OS_B and InternalError if the composite fails (i) or (ii).
OSBMorphism osb_compose(const OSBMorphism& psi, const OSBMorphism& phi);

/// All OS_B morphisms [-n,n] -> [-m,m], lexicographic.
std::vector<BMorphism> enumerate_osb(int n, int m);

/// The word phi(1) ... phi(n) over the target alphabet.
Word iota(const BMorphism& phi);

/// phi <= phi' among OS_B morphisms with a common target: phi' = phi ∘ psi
/// for some OS_B morphism psi. Decided by searching all candidate psi.
bool morphism_leq(const BMorphism& phi, const BMorphism& phi_prime);

/// Length first, then lexicographic on letters.
bool length_lex_less(const Word& a, const Word& b);
/// length_lex_less pulled back along iota.
bool iota_less(const BMorphism& a, const BMorphism& b);

struct Lift {
  SignedPerm relabeling;  // w with phi ∘ w in OS_B
  OSBMorphism lifted;     // phi ∘ w, weakly order preserving
};

/// Relabels the source so that phi becomes weakly order preserving: the
/// lifted images are the sorted absolute values of phi's images.
Lift lift_order(const BMorphism& phi);

/// Deterministic automaton over [-n,n] with an explicit dead state.
class IdealAutomaton {
 public:
  IdealAutomaton(int alphabet_n, int num_states, int start, std::vector<std::vector<int>> transitions,
                 std::vector<bool> accepting);

  int alphabet_n() const { return n_; }
  int num_states() const { return static_cast<int>(accepting_.size()); }
  int start() const { return start_; }
  int next(int state, int letter) const { return delta_[static_cast<std::size_t>(state)][static_cast<std::size_t>(letter + n_)]; }
  bool accepting(int state) const { return accepting_[static_cast<std::size_t>(state)]; }

  bool accepts(const Word& w) const;
  /// Number of accepted words of each length 0..max_length.
  std::vector<Integer> count_by_length(int max_length) const;

  /// "state letter -> state" lines, accepting states marked with '*'.
  std::string to_table() const;
  std::string to_dot() const;

 private:
  int n_;
  int start_;
  std::vector<std::vector<int>> delta_;
  std::vector<bool> accepting_;
};

/// Chain automaton for e1 P1* e2 P2* ... en Pn*, P_k = {±e_1..±e_k}
/// (plus the letter 0 under kFreeOrbits, where 0* may also precede e1).
/// States: 0..n prefix positions, n+1 dead.
IdealAutomaton principal_ideal_automaton(const Word& w, Coverage coverage = Coverage::kAllOrbits);
IdealAutomaton empty_language_automaton(int alphabet_n);

/// Sum over lengths of accepted-word counts as an exact rational function.
/// The denominator det(I - tA) of the transfer matrix is factored into
/// (1 - jt) terms; throws InternalError if an eigenvalue is not an integer.
series::RationalFunction ideal_series(const IdealAutomaton& aut);

/// Minimal elements of the upward closure of s among words of length <= max_length.
std::set<Word> minimal_elements(const std::set<Word>& s, int max_length, Coverage coverage = Coverage::kAllOrbits);

}  // namespace fsb::words
