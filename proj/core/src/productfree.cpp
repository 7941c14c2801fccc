#include "prodfree/productfree.hpp"

#include <stdexcept>

namespace prodfree {

std::optional<WitnessTriple> check_explicit(const LayeredSet& s) {
  const std::uint64_t q = s.alphabet().size();
  const std::size_t horizon = s.horizon();
  for (std::size_t len = 2; len <= horizon; ++len) {
    if (s.count(len) == 0) continue;
    std::vector<std::size_t> splits;
    for (std::size_t m = 1; m < len; ++m) {
      if (s.count(m) > 0 && s.count(len - m) > 0) splits.push_back(m);
    }
    if (splits.empty()) continue;
    std::vector<std::uint64_t> divisors;
    for (auto m : splits) divisors.push_back(checked_pow(q, len - m));
    std::optional<WitnessTriple> found;
    s.for_each_member(len, [&](std::uint64_t z) {
      if (found) return;
      for (std::size_t i = 0; i < splits.size(); ++i) {
        const std::size_t m = splits[i];
        const std::uint64_t div = divisors[i];
        std::uint64_t x = z / div, y = z % div;
        if (s.contains(m, x) && s.contains(len - m, y)) {
          found = WitnessTriple{unrank(s.alphabet(), m, x), unrank(s.alphabet(), len - m, y),
                                unrank(s.alphabet(), len, z)};
          return;
        }
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<WitnessTriple> check_regular(const Dfa& d, std::size_t state_cap) {
  Dfa products = dfa_concat(d, d, state_cap);
  auto z = shortest_word(dfa_intersect(products, d));
  if (!z) return std::nullopt;
  for (std::size_t m = 1; m < z->size(); ++m) {
    Word x = z->slice(0, m);
    Word y = z->slice(m, z->size() - m);
    if (d.accepts(x) && d.accepts(y)) return WitnessTriple{x, y, *z};
  }
  throw std::logic_error("product automaton accepted a word with no factorization");
}

std::vector<PairwiseRow> pairwise_inequality(const DensityProfile& p) {
  std::vector<PairwiseRow> rows;
  for (std::size_t m = 1; 2 * m <= p.horizon(); ++m) {
    for (std::size_t n = m; m + n <= p.horizon(); ++n) {
      Rational lhs = p.at(m) * p.at(n) + p.at(m + n);
      bool violated = lhs > 1;
      rows.push_back(PairwiseRow{m, n, std::move(lhs), violated});
    }
  }
  return rows;
}

std::vector<PairwiseRow> pairwise_inequality(const LayeredSet& s, std::size_t horizon) {
  return pairwise_inequality(profile(s, horizon));
}

std::vector<PairwiseRow> pairwise_inequality(const Dfa& d, std::size_t horizon) {
  return pairwise_inequality(profile(d, horizon));
}

}  // namespace prodfree
