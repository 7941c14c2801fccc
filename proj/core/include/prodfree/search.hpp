// Exact maximum-density product-free subsets of the ball F_<=(N), where the
// ball is the whole universe (products longer than N are unconstrained).

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prodfree/layered_set.hpp"
#include "prodfree/numeric.hpp"

namespace prodfree {

enum class Objective {
  mean,   // sum_n d(n) / N
  total,  // sum_n d(n)
};

std::string to_string(Objective o);
Objective parse_objective(std::string_view text);

enum class SearchMethod { automatic, exhaustive, branch_and_bound };

inline constexpr std::size_t kMaxExhaustiveItems = 24;
inline constexpr std::size_t kMaxSearchItems = 4096;

/// The words of F_<=(N) as items 0..M-1 ordered by (length, rank), with every
/// triple x.y = z inside the ball indexed by item.
class SearchSpace {
 public:
  struct Pair {
    std::uint32_t first;
    std::uint32_t second;
  };

  SearchSpace(const Alphabet& alphabet, std::size_t horizon);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t horizon() const { return horizon_; }
  std::size_t size() const { return lengths_.size(); }
  std::size_t length(std::size_t item) const { return lengths_[item]; }
  std::uint64_t rank(std::size_t item) const { return item - layer_begin_[lengths_[item]]; }
  std::size_t item(std::size_t len, std::uint64_t r) const { return layer_begin_[len] + r; }
  std::uint64_t layer_size(std::size_t len) const { return layer_begin_[len + 1] - layer_begin_[len]; }

  /// (x, y) with x.y = item.
  std::span<const Pair> factorizations(std::size_t item) const { return factor_[item]; }
  /// (y, z) with item.y = z.
  std::span<const Pair> left_products(std::size_t item) const { return left_[item]; }
  /// (x, z) with x.item = z.
  std::span<const Pair> right_products(std::size_t item) const { return right_[item]; }

 private:
  Alphabet alphabet_;
  std::size_t horizon_;
  std::vector<std::size_t> layer_begin_;  // indexed by length, size N + 2
  std::vector<std::size_t> lengths_;
  std::vector<std::vector<Pair>> factor_, left_, right_;
};

enum class Decision : std::uint8_t { undecided, in, out };
using PartialAssignment = std::vector<Decision>;

/// Admissible bound on the objective of any product-free completion of the
/// assignment: propagates forced exclusions, then maximizes the layer counts
/// subject to |S(m)| |S(n)| + |S(m+n)| <= q^(m+n). Throws std::invalid_argument
/// if the included words already contain a product.
Rational upper_bound(const SearchSpace& space, const PartialAssignment& assignment,
                     Objective objective);

/// Exact objective of a set inside the ball.
Rational objective_value(const LayeredSet& s, Objective objective);

struct SearchResult {
  std::size_t horizon = 0;
  Objective objective = Objective::mean;
  SearchMethod method = SearchMethod::branch_and_bound;
  Rational value;
  LayeredSet best{Alphabet(), 1};
  std::uint64_t nodes = 0;
  bool optimal = false;  // search completed within budget
};

/// Among optimal sets, returns the first in include-first order over items
/// (i.e. the one whose membership vector is lexicographically greatest).
SearchResult max_productfree(const Alphabet& alphabet, std::size_t horizon,
                             Objective objective = Objective::mean,
                             std::uint64_t node_budget = 100'000'000,
                             SearchMethod method = SearchMethod::automatic);

}  // namespace prodfree
