#include "prodfree/layered_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace prodfree {

LayeredSet::LayeredSet(Alphabet alphabet, std::size_t horizon)
    : alphabet_(std::move(alphabet)), layers_(horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be at least 1");
}

LayeredSet LayeredSet::from_words(const Alphabet& alphabet, std::span<const Word> words,
                                  std::size_t horizon) {
  LayeredSet s(alphabet, horizon);
  for (const auto& w : words) {
    if (w.size() > horizon) {
      throw std::invalid_argument("word '" + w.str() + "' is longer than horizon " +
                                  std::to_string(horizon));
    }
    s.insert(w);
  }
  return s;
}

LayeredSet LayeredSet::full(const Alphabet& alphabet, std::size_t horizon) {
  LayeredSet s(alphabet, horizon);
  for (std::size_t n = 1; n <= horizon; ++n) s.layer_for_write(n).set();
  return s;
}

bool LayeredSet::materialized(std::size_t n) const {
  return n >= 1 && n <= layers_.size() && layers_[n - 1].size() != 0;
}

bool LayeredSet::contains(std::size_t n, std::uint64_t r) const {
  if (!materialized(n)) return false;
  const Bits& bits = layers_[n - 1];
  return r < bits.size() && bits.test(r);
}

bool LayeredSet::contains(const Word& w) const {
  if (!(w.alphabet() == alphabet_)) throw std::invalid_argument("alphabet mismatch");
  if (!materialized(w.size())) return false;
  return contains(w.size(), rank(w));
}

LayeredSet::Bits& LayeredSet::layer_for_write(std::size_t n) {
  if (n == 0 || n > layers_.size()) {
    throw std::out_of_range("length " + std::to_string(n) + " is outside horizon " +
                            std::to_string(layers_.size()));
  }
  Bits& bits = layers_[n - 1];
  if (bits.size() == 0) bits.resize(layer_size(alphabet_.size(), n));
  return bits;
}

void LayeredSet::insert(std::size_t n, std::uint64_t r) {
  Bits& bits = layer_for_write(n);
  if (r >= bits.size()) throw std::out_of_range("rank out of range");
  bits.set(r);
}

void LayeredSet::insert(const Word& w) {
  if (!(w.alphabet() == alphabet_)) throw std::invalid_argument("alphabet mismatch");
  insert(w.size(), rank(w));
}

void LayeredSet::erase(std::size_t n, std::uint64_t r) {
  if (materialized(n) && r < layers_[n - 1].size()) layers_[n - 1].reset(r);
}

std::uint64_t LayeredSet::count(std::size_t n) const {
  return materialized(n) ? layers_[n - 1].count() : 0;
}

std::uint64_t LayeredSet::size() const {
  std::uint64_t total = 0;
  for (const auto& bits : layers_) total += bits.count();
  return total;
}

std::vector<std::uint64_t> LayeredSet::members(std::size_t n) const {
  std::vector<std::uint64_t> out;
  for_each_member(n, [&](std::uint64_t r) { out.push_back(r); });
  return out;
}

std::vector<Word> LayeredSet::words() const {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= horizon(); ++n) {
    for_each_member(n, [&](std::uint64_t r) { out.push_back(unrank(alphabet_, n, r)); });
  }
  return out;
}

LayeredSet LayeredSet::with_horizon(std::size_t h) const {
  LayeredSet out(alphabet_, h);
  for (std::size_t n = 1; n <= std::min(h, horizon()); ++n) out.layers_[n - 1] = layers_[n - 1];
  return out;
}

bool operator==(const LayeredSet& a, const LayeredSet& b) {
  if (!(a.alphabet_ == b.alphabet_) || a.horizon() != b.horizon()) return false;
  for (std::size_t n = 1; n <= a.horizon(); ++n) {
    bool ma = a.materialized(n), mb = b.materialized(n);
    if (ma && mb) {
      if (a.layers_[n - 1] != b.layers_[n - 1]) return false;
    } else if (a.count(n) != 0 || b.count(n) != 0) {
      return false;
    }
  }
  return true;
}

void LayeredSet::check_compatible(const LayeredSet& other) const {
  if (!(alphabet_ == other.alphabet_)) throw std::invalid_argument("alphabet mismatch");
  if (horizon() != other.horizon()) throw std::invalid_argument("horizon mismatch");
}

LayeredSet set_union(const LayeredSet& a, const LayeredSet& b) {
  a.check_compatible(b);
  LayeredSet out = a;
  for (std::size_t n = 1; n <= a.horizon(); ++n) {
    if (b.materialized(n)) out.layer_for_write(n) |= b.layers_[n - 1];
  }
  return out;
}

LayeredSet set_intersection(const LayeredSet& a, const LayeredSet& b) {
  a.check_compatible(b);
  LayeredSet out(a.alphabet_, a.horizon());
  for (std::size_t n = 1; n <= a.horizon(); ++n) {
    if (a.materialized(n) && b.materialized(n)) {
      out.layers_[n - 1] = a.layers_[n - 1] & b.layers_[n - 1];
    }
  }
  return out;
}

LayeredSet set_difference(const LayeredSet& a, const LayeredSet& b) {
  a.check_compatible(b);
  LayeredSet out = a;
  for (std::size_t n = 1; n <= a.horizon(); ++n) {
    if (a.materialized(n) && b.materialized(n)) out.layers_[n - 1] -= b.layers_[n - 1];
  }
  return out;
}

LayeredSet set_complement(const LayeredSet& a) {
  LayeredSet out(a.alphabet_, a.horizon());
  for (std::size_t n = 1; n <= a.horizon(); ++n) {
    auto& bits = out.layer_for_write(n);
    if (a.materialized(n)) {
      bits = ~a.layers_[n - 1];
    } else {
      bits.set();
    }
  }
  return out;
}

LayeredSet minkowski_product(const LayeredSet& a, const LayeredSet& b, std::size_t cap) {
  if (!(a.alphabet() == b.alphabet())) throw std::invalid_argument("alphabet mismatch");
  LayeredSet out(a.alphabet(), cap);
  const std::uint64_t q = a.alphabet().size();
  for (std::size_t m = 1; m < cap && m <= a.horizon(); ++m) {
    if (a.count(m) == 0) continue;
    for (std::size_t n = 1; m + n <= cap && n <= b.horizon(); ++n) {
      if (b.count(n) == 0) continue;
      const std::uint64_t shift = checked_pow(q, n);
      a.for_each_member(m, [&](std::uint64_t x) {
        b.for_each_member(n, [&](std::uint64_t y) { out.insert(m + n, x * shift + y); });
      });
    }
  }
  return out;
}

void validate_lsequence(std::size_t n, std::span<const std::size_t> ls) {
  std::size_t prev = 0;
  for (auto l : ls) {
    if (l <= prev) throw std::invalid_argument("l-sequence must be strictly increasing and positive");
    if (l >= n) throw std::invalid_argument("l-sequence entries must be below n");
    prev = l;
  }
}

LayeredSet prefix_excluded(const LayeredSet& s, std::size_t n, std::span<const std::size_t> ls) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > s.horizon()) {
    throw std::out_of_range("length " + std::to_string(n) + " is beyond horizon " +
                            std::to_string(s.horizon()));
  }
  validate_lsequence(n, ls);
  LayeredSet out(s.alphabet(), n);
  const std::uint64_t q = s.alphabet().size();
  std::vector<std::pair<std::size_t, std::uint64_t>> divisors;
  for (auto l : ls) {
    if (s.count(l) > 0) divisors.emplace_back(l, checked_pow(q, n - l));
  }
  s.for_each_member(n, [&](std::uint64_t r) {
    for (const auto& [l, div] : divisors) {
      if (s.contains(l, r / div)) return;
    }
    out.insert(n, r);
  });
  return out;
}

WordList to_word_list(const LayeredSet& s) {
  return WordList{s.alphabet(), s.horizon(), s.words()};
}

LayeredSet from_word_list(const WordList& list) {
  std::size_t horizon = 1;
  if (list.horizon) {
    horizon = *list.horizon;
  } else {
    for (const auto& w : list.words) horizon = std::max(horizon, w.size());
  }
  return LayeredSet::from_words(list.alphabet, list.words, horizon);
}

}  // namespace prodfree
