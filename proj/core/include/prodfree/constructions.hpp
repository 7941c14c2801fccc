// Named word sets: odd-occurrence sets, the ball-density pathology, the
// asymmetric (X, Y, Z) triple, and seeded random product-free fixtures.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "prodfree/dfa.hpp"
#include "prodfree/layered_set.hpp"
#include "prodfree/numeric.hpp"

namespace prodfree {

/// Nonempty subset of the alphabet, as symbol indices.
class GammaSpec {
 public:
  GammaSpec(const Alphabet& alphabet, std::string_view symbols);
  GammaSpec(const Alphabet& alphabet, std::vector<std::uint8_t> indices);

  const Alphabet& alphabet() const { return alphabet_; }
  bool contains(std::size_t symbol) const { return member_[symbol]; }
  std::string str() const;

 private:
  Alphabet alphabet_;
  std::vector<bool> member_;
};

/// Words in which symbols from gamma occur an odd number of times in total.
Dfa odd_occurrence(const GammaSpec& gamma);

/// Words whose lengths lie in some (2^n, 2^n + c] with n >= c, up to `horizon`.
/// Requires q >= 2, c >= 2 and horizon >= 2^c + c.
LayeredSet counting_pathology(const Alphabet& alphabet, std::size_t c, std::size_t horizon);

/// Lengths included by counting_pathology, ascending.
std::vector<std::size_t> pathology_lengths(std::size_t c, std::size_t horizon);

struct AsymmetricTriple {
  std::size_t n = 0;
  Rational epsilon;
  LayeredSet w;      // the first floor(phi q^n) words of F(n)
  Rational w_density;
  bool within_gap = false;  // | |W|/q^n - phi | < eps/3
  Dfa x;  // words with a prefix in W (W itself included)
  Dfa y;  // words with a suffix in W (W itself included)
  Dfa z;  // complement of X.Y
};

/// floor(phi * q^n), computed with integer comparisons only.
BigInt floor_phi_times(const BigInt& value);

/// Throws std::invalid_argument if |W| / q^n does not exceed phi - eps.
AsymmetricTriple asymmetric_triple(const Alphabet& alphabet, std::size_t n, const Rational& epsilon,
                                   std::size_t state_cap = kDefaultStateCap);

enum class GreedyOrder {
  uniform,           // all of F_<=(N) in one seeded shuffle
  odd_lengths_first  // odd-length words (shuffled), then even-length words (shuffled)
};

struct GreedySchedule {
  GreedyOrder order = GreedyOrder::uniform;
  /// Chance that an admissible word is actually inserted; 1 gives maximal sets.
  Rational insert_probability{1};
};

/// Deterministic in (alphabet, horizon, seed, schedule). The result is
/// product-free within F_<=(N) and therefore product-free in F.
LayeredSet greedy_random_productfree(const Alphabet& alphabet, std::size_t horizon,
                                     std::uint64_t seed, const GreedySchedule& schedule = {});

/// Would inserting (n, r) into s create a triple x.y = z inside the horizon?
bool insertion_conflicts(const LayeredSet& s, std::size_t n, std::uint64_t r);

}  // namespace prodfree
