#include "prodfree/constructions.hpp"

#include <random>
#include <stdexcept>

namespace prodfree {

GammaSpec::GammaSpec(const Alphabet& alphabet, std::string_view symbols)
    : alphabet_(alphabet), member_(alphabet.size(), false) {
  if (symbols.empty()) throw std::invalid_argument("gamma must be nonempty");
  for (char c : symbols) {
    auto idx = alphabet.index_of(c);
    if (!idx) throw std::invalid_argument(std::string("gamma symbol '") + c + "' not in alphabet");
    member_[*idx] = true;
  }
}

GammaSpec::GammaSpec(const Alphabet& alphabet, std::vector<std::uint8_t> indices)
    : alphabet_(alphabet), member_(alphabet.size(), false) {
  if (indices.empty()) throw std::invalid_argument("gamma must be nonempty");
  for (auto i : indices) {
    if (i >= alphabet.size()) throw std::invalid_argument("gamma index out of range");
    member_[i] = true;
  }
}

std::string GammaSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(alphabet_.symbol(i));
  }
  return out;
}

Dfa odd_occurrence(const GammaSpec& gamma) {
  const std::size_t q = gamma.alphabet().size();
  std::vector<State> delta(2 * q);
  for (State parity = 0; parity < 2; ++parity) {
    for (std::size_t c = 0; c < q; ++c) {
      delta[parity * q + c] = gamma.contains(c) ? 1 - parity : parity;
    }
  }
  return Dfa(gamma.alphabet(), 2, 0, {false, true}, std::move(delta));
}

std::vector<std::size_t> pathology_lengths(std::size_t c, std::size_t horizon) {
  std::vector<std::size_t> out;
  for (std::size_t n = c; n < 63; ++n) {
    const std::size_t base = std::size_t{1} << n;
    if (base >= horizon) break;
    for (std::size_t len = base + 1; len <= base + c && len <= horizon; ++len) out.push_back(len);
  }
  return out;
}

LayeredSet counting_pathology(const Alphabet& alphabet, std::size_t c, std::size_t horizon) {
  if (alphabet.size() < 2) throw std::invalid_argument("the pathology needs at least two symbols");
  if (c < 2) throw std::invalid_argument("c must be at least 2");
  if (c >= 32 || horizon < (std::size_t{1} << c) + c) {
    throw std::invalid_argument("horizon must be at least 2^c + c");
  }
  LayeredSet s(alphabet, horizon);
  for (auto len : pathology_lengths(c, horizon)) {
    const std::uint64_t size = layer_size(alphabet.size(), len);
    for (std::uint64_t r = 0; r < size; ++r) s.insert(len, r);
  }
  return s;
}

BigInt floor_phi_times(const BigInt& value) {
  // largest s with s <= phi * v  <=>  (2s + v)^2 <= 5 v^2
  if (value <= 0) return 0;
  const BigInt bound = 5 * value * value;
  BigInt lo = 0, hi = value;
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    BigInt t = 2 * mid + value;
    if (t * t <= bound) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

AsymmetricTriple asymmetric_triple(const Alphabet& alphabet, std::size_t n, const Rational& epsilon,
                                   std::size_t state_cap) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  const std::uint64_t layer = layer_size(alphabet.size(), n);
  const BigInt count = floor_phi_times(BigInt(layer));
  const Rational density(count, BigInt(layer));
  const Surd5 gap = phi() - Surd5(density);  // positive: density < phi
  if (count == 0 || Surd5(density) <= phi() - Surd5(epsilon)) {
    throw std::invalid_argument("no W of density floor(phi q^n)/q^n exceeds phi - eps at n=" +
                                std::to_string(n));
  }

  std::vector<Word> w_words;
  const std::uint64_t size = count.convert_to<std::uint64_t>();
  for (std::uint64_t r = 0; r < size; ++r) w_words.push_back(unrank(alphabet, n, r));

  AsymmetricTriple t{n,
                     epsilon,
                     LayeredSet::from_words(alphabet, w_words, n),
                     density,
                     gap < Surd5(epsilon / 3),
                     Dfa::empty(alphabet),
                     Dfa::empty(alphabet),
                     Dfa::empty(alphabet)};
  const Dfa w = Dfa::from_words(alphabet, w_words);
  const Dfa all = Dfa::universal(alphabet);
  t.x = dfa_union(dfa_concat(w, all, state_cap), w);
  t.y = dfa_union(dfa_concat(all, w, state_cap), w);
  t.z = dfa_complement(dfa_concat(t.x, t.y, state_cap));
  return t;
}

namespace {

// Uniform draw in [0, bound) by rejection sampling.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[draw_below(rng, i)]);
  }
}

bool draw_probability(std::mt19937_64& rng, const Rational& p) {
  if (p >= 1) return true;
  if (p <= 0) return false;
  // uniform in [0, 2^53) compared against p * 2^53
  const BigInt scale = BigInt(1) << 53;
  const BigInt v = rng() >> 11;
  return Rational(v) < p * Rational(scale);
}

}  // namespace

bool insertion_conflicts(const LayeredSet& s, std::size_t n, std::uint64_t r) {
  const std::uint64_t q = s.alphabet().size();
  const std::size_t horizon = s.horizon();
  // membership with the candidate included
  auto in = [&](std::size_t len, std::uint64_t rank) {
    return (len == n && rank == r) || s.contains(len, rank);
  };
  // w = x . y
  for (std::size_t m = 1; m < n; ++m) {
    const std::uint64_t div = checked_pow(q, n - m);
    if (in(m, r / div) && in(n - m, r % div)) return true;
  }
  // w . y = z and x . w = z
  for (std::size_t m = 1; m + n <= horizon; ++m) {
    if (s.count(n + m) == 0) continue;
    const std::uint64_t ysize = checked_pow(q, m);
    const std::uint64_t shift_w = checked_pow(q, n);
    for (std::uint64_t y = 0; y < ysize; ++y) {
      if (!in(m, y)) continue;
      if (in(n + m, r * ysize + y)) return true;
      if (in(n + m, y * shift_w + r)) return true;
    }
  }
  return false;
}

LayeredSet greedy_random_productfree(const Alphabet& alphabet, std::size_t horizon,
                                     std::uint64_t seed, const GreedySchedule& schedule) {
  if (schedule.insert_probability < 0 || schedule.insert_probability > 1) {
    throw std::invalid_argument("insert probability must lie in [0, 1]");
  }
  LayeredSet s(alphabet, horizon);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::uint64_t>> odd, even;
  for (std::size_t n = 1; n <= horizon; ++n) {
    const std::uint64_t size = layer_size(alphabet.size(), n);
    auto& bucket = (schedule.order == GreedyOrder::odd_lengths_first && n % 2 == 0) ? even : odd;
    for (std::uint64_t r = 0; r < size; ++r) bucket.emplace_back(n, r);
  }
  shuffle(odd, rng);
  shuffle(even, rng);
  odd.insert(odd.end(), even.begin(), even.end());
  for (const auto& [n, r] : odd) {
    if (insertion_conflicts(s, n, r)) continue;
    if (!draw_probability(rng, schedule.insert_probability)) continue;
    s.insert(n, r);
  }
  return s;
}

}  // namespace prodfree
