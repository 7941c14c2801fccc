// Deciding product-freeness: no x, y, z in S (not necessarily distinct)
// with x.y = z.

#pragma once

#include <optional>
#include <vector>

#include "prodfree/density.hpp"
#include "prodfree/dfa.hpp"
#include "prodfree/layered_set.hpp"

namespace prodfree {

struct WitnessTriple {
  Word x;
  Word y;
  Word z;
};

/// Treats F_<=(N) as the universe: products longer than the horizon are not
/// constrained. Returns the witness minimizing (|z|, rank(z), |x|).
std::optional<WitnessTriple> check_explicit(const LayeredSet& s);

/// Exact over all lengths: tests (L.L) intersect L for emptiness. The witness
/// has a shortest z and the shortest x among its factorizations.
std::optional<WitnessTriple> check_regular(const Dfa& d, std::size_t state_cap = kDefaultStateCap);

/// d(m) d(n) + d(m + n) for 1 <= m <= n, m + n <= H.
struct PairwiseRow {
  std::size_t m = 0;
  std::size_t n = 0;
  Rational lhs;
  bool violated = false;  // lhs > 1
};

std::vector<PairwiseRow> pairwise_inequality(const DensityProfile& p);
std::vector<PairwiseRow> pairwise_inequality(const LayeredSet& s, std::size_t horizon);
std::vector<PairwiseRow> pairwise_inequality(const Dfa& d, std::size_t horizon);

}  // namespace prodfree
