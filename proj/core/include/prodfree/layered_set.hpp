// Explicit word sets truncated at a horizon N: one membership bitset per
// length, indexed by rank. Layers that were never written to are absent and
// read as empty.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "prodfree/numeric.hpp"
#include "prodfree/words.hpp"

namespace prodfree {

inline constexpr std::size_t kDefaultExplicitHorizon = 16;

class LayeredSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  LayeredSet(Alphabet alphabet, std::size_t horizon);

  /// Throws std::invalid_argument if a word is longer than the horizon.
  static LayeredSet from_words(const Alphabet& alphabet, std::span<const Word> words,
                               std::size_t horizon);
  /// Every word of length 1..horizon.
  static LayeredSet full(const Alphabet& alphabet, std::size_t horizon);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t horizon() const { return layers_.size(); }

  bool contains(std::size_t n, std::uint64_t r) const;
  bool contains(const Word& w) const;
  void insert(std::size_t n, std::uint64_t r);
  void insert(const Word& w);
  void erase(std::size_t n, std::uint64_t r);

  /// |S(n)|; zero for n beyond the horizon.
  std::uint64_t count(std::size_t n) const;
  std::uint64_t size() const;
  bool empty() const { return size() == 0; }

  /// True if layer n has storage (it may still hold no words).
  bool materialized(std::size_t n) const;
  /// Ranks of members of layer n in increasing order.
  std::vector<std::uint64_t> members(std::size_t n) const;

  template <class F>
  void for_each_member(std::size_t n, F&& f) const {
    if (!materialized(n)) return;
    const Bits& bits = layers_[n - 1];
    for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) f(std::uint64_t{i});
  }

  /// All members in shortlex order.
  std::vector<Word> words() const;

  /// Same words, new horizon. Shrinking drops longer words.
  LayeredSet with_horizon(std::size_t horizon) const;

  /// Semantic equality (absent layers equal empty ones).
  friend bool operator==(const LayeredSet& a, const LayeredSet& b);

  friend LayeredSet set_union(const LayeredSet& a, const LayeredSet& b);
  friend LayeredSet set_intersection(const LayeredSet& a, const LayeredSet& b);
  friend LayeredSet set_difference(const LayeredSet& a, const LayeredSet& b);
  /// Complement within F_<=(horizon).
  friend LayeredSet set_complement(const LayeredSet& a);

 private:
  Bits& layer_for_write(std::size_t n);
  void check_compatible(const LayeredSet& other) const;

  Alphabet alphabet_;
  std::vector<Bits> layers_;  // size 0 == absent
};

/// {w1.w2 : w1 in a, w2 in b, |w1| + |w2| <= cap}.
LayeredSet minkowski_product(const LayeredSet& a, const LayeredSet& b, std::size_t cap);

/// S(n; ls) = S(n) minus every word with a prefix in S(l) for some l in ls.
/// `ls` must be strictly increasing with every entry in [1, n). The result
/// has horizon n and only layer n populated.
LayeredSet prefix_excluded(const LayeredSet& s, std::size_t n, std::span<const std::size_t> ls);

/// Throws std::invalid_argument unless ls is strictly increasing, positive and below n.
void validate_lsequence(std::size_t n, std::span<const std::size_t> ls);

WordList to_word_list(const LayeredSet& s);
LayeredSet from_word_list(const WordList& list);

}  // namespace prodfree
