// Brute-force reference implementations over plain strings. They share no
// code with the library beyond the rational type.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "prodfree/numeric.hpp"

namespace oracle {

using StringSet = std::set<std::string>;

inline std::vector<std::string> all_strings(const std::string& alphabet, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : alphabet) next.push_back(s + c);
    out.swap(next);
  }
  return out;
}

inline std::vector<std::string> ball(const std::string& alphabet, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t len = 1; len <= n; ++len) {
    auto layer = all_strings(alphabet, len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline bool product_free(const StringSet& s) {
  for (const auto& x : s)
    for (const auto& y : s)
      if (s.count(x + y)) return false;
  return true;
}

inline std::uint64_t layer_count(const StringSet& s, std::size_t n) {
  std::uint64_t c = 0;
  for (const auto& w : s) c += w.size() == n;
  return c;
}

inline prodfree::Rational density(const StringSet& s, std::size_t n, std::size_t q) {
  return prodfree::Rational(prodfree::BigInt(layer_count(s, n)), prodfree::big_pow(q, n));
}

inline prodfree::Rational refined_density(const StringSet& s, std::size_t n,
                                          const std::vector<std::size_t>& ls, std::size_t q) {
  std::uint64_t c = 0;
  for (const auto& w : s) {
    if (w.size() != n) continue;
    bool excluded = false;
    for (auto l : ls) excluded = excluded || s.count(w.substr(0, l));
    c += !excluded;
  }
  return prodfree::Rational(prodfree::BigInt(c), prodfree::big_pow(q, n));
}

inline prodfree::Rational mean_objective(const StringSet& s, std::size_t q, std::size_t horizon) {
  prodfree::Rational total = 0;
  for (std::size_t n = 1; n <= horizon; ++n) total += density(s, n, q);
  return total / horizon;
}

/// Maximum mean layer density over all product-free subsets of the ball.
inline prodfree::Rational max_productfree(const std::string& alphabet, std::size_t horizon) {
  const auto items = ball(alphabet, horizon);
  prodfree::Rational best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
    StringSet s;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask >> i & 1) s.insert(items[i]);
    if (!product_free(s)) continue;
    auto v = mean_objective(s, alphabet.size(), horizon);
    if (v > best) best = v;
  }
  return best;
}

}  // namespace oracle
