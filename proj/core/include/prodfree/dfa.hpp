// Complete deterministic automata over an Alphabet, used as exact carriers for
// infinite (regular) word sets. The language of a Dfa is the set of NONEMPTY
// words whose run ends in an accepting state; whether the start state accepts
// matters only through words that re-enter it.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "prodfree/layered_set.hpp"
#include "prodfree/numeric.hpp"
#include "prodfree/words.hpp"

namespace prodfree {

using State = std::uint32_t;

inline constexpr std::size_t kDefaultStateCap = 100'000;

class Dfa {
 public:
  /// `delta` is row-major: delta[s * q + symbol]. Throws on out-of-range ids.
  Dfa(Alphabet alphabet, std::size_t num_states, State start, std::vector<bool> accepting,
      std::vector<State> delta);

  static Dfa empty(const Alphabet& alphabet);
  /// Every nonempty word.
  static Dfa universal(const Alphabet& alphabet);
  /// Exactly the given finite set of words.
  static Dfa from_words(const Alphabet& alphabet, std::span<const Word> words);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return accepting_.size(); }
  State start() const { return start_; }
  bool accepting(State s) const { return accepting_[s]; }
  State next(State s, std::size_t symbol) const { return delta_[s * alphabet_.size() + symbol]; }

  State run(std::span<const std::uint8_t> indices) const;
  bool accepts(const Word& w) const;

  /// Structural equality (same numbering). Canonical after minimize().
  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.alphabet_ == b.alphabet_ && a.start_ == b.start_ &&
           a.accepting_ == b.accepting_ && a.delta_ == b.delta_;
  }

 private:
  Alphabet alphabet_;
  State start_;
  std::vector<bool> accepting_;
  std::vector<State> delta_;
};

/// Minimal complete automaton for the same nonempty-word language, with states
/// numbered in breadth-first order from the start (symbols in alphabet order).
/// Two automata accept the same language iff their minimizations are equal.
Dfa minimize(const Dfa& d);

/// True iff a bijection between reachable states preserves start, acceptance
/// and transitions.
bool isomorphic(const Dfa& a, const Dfa& b);

bool equivalent(const Dfa& a, const Dfa& b);

Dfa dfa_union(const Dfa& a, const Dfa& b);
Dfa dfa_intersect(const Dfa& a, const Dfa& b);
Dfa dfa_difference(const Dfa& a, const Dfa& b);
/// Complement relative to the nonempty words.
Dfa dfa_complement(const Dfa& a);

/// {w1.w2 : w1 in L(a), w2 in L(b)}. Throws BudgetExceeded if the subset
/// construction needs more than `state_cap` states.
Dfa dfa_concat(const Dfa& a, const Dfa& b, std::size_t state_cap = kDefaultStateCap);

/// L(d) restricted to words of length exactly n.
Dfa dfa_length_slice(const Dfa& d, std::size_t n);

/// Every word of length n.
Dfa dfa_layer(const Alphabet& alphabet, std::size_t n);

/// Shortest accepted word (least in alphabet order among shortest), if any.
std::optional<Word> shortest_word(const Dfa& d);
inline bool dfa_is_empty(const Dfa& d) { return !shortest_word(d).has_value(); }

struct LayerCount {
  std::size_t n = 0;
  BigInt count;
  BigInt total;
};

/// Number of accepted words of length n (transfer-matrix iteration).
LayerCount dfa_layer_count(const Dfa& d, std::size_t n);
/// Layer counts for n = 1..horizon in one pass.
std::vector<LayerCount> dfa_layer_counts(const Dfa& d, std::size_t horizon);

/// |S(n; ls)| for S = L(d): accepted words of length n with no prefix of
/// length l in L(d) for any l in ls. Counted directly, without building automata.
BigInt dfa_refined_count(const Dfa& d, std::size_t n, std::span<const std::size_t> ls);

/// S(n; ls) as an automaton, via slices, concatenation and difference.
Dfa prefix_excluded(const Dfa& d, std::size_t n, std::span<const std::size_t> ls,
                    std::size_t state_cap = kDefaultStateCap);

/// L(d) intersected with F_<=(horizon), materialized.
LayeredSet dfa_truncate(const Dfa& d, std::size_t horizon,
                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Line-oriented text format:
///   alphabet: ab / states: 2 / start: 0 / accept: 1 / trans: 0 a 1 ...
/// Every (state, symbol) transition must appear exactly once.
Dfa read_dfa(std::istream& in);
void write_dfa(std::ostream& out, const Dfa& d);

}  // namespace prodfree
