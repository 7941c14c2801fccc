#include "prodfree/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace prodfree {

std::string to_string(Objective o) { return o == Objective::mean ? "mean" : "total"; }

Objective parse_objective(std::string_view text) {
  if (text == "mean") return Objective::mean;
  if (text == "total") return Objective::total;
  throw std::invalid_argument("objective must be 'mean' or 'total'");
}

SearchSpace::SearchSpace(const Alphabet& alphabet, std::size_t horizon)
    : alphabet_(alphabet), horizon_(horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be positive");
  const std::uint64_t q = alphabet.size();
  layer_begin_.assign(horizon + 2, 0);
  for (std::size_t n = 1; n <= horizon; ++n) {
    const std::uint64_t size = checked_pow(q, n);
    if (layer_begin_[n] + size > kMaxSearchItems) {
      throw BudgetExceeded("F_<=(" + std::to_string(horizon) + ") has more than " +
                           std::to_string(kMaxSearchItems) + " words");
    }
    layer_begin_[n + 1] = layer_begin_[n] + size;
    lengths_.insert(lengths_.end(), size, n);
  }
  layer_begin_[0] = 0;
  factor_.resize(size());
  left_.resize(size());
  right_.resize(size());
  for (std::size_t m = 1; m < horizon; ++m) {
    for (std::size_t n = 1; m + n <= horizon; ++n) {
      const std::uint64_t shift = checked_pow(q, n);
      for (std::uint64_t x = 0; x < layer_size(m); ++x) {
        for (std::uint64_t y = 0; y < layer_size(n); ++y) {
          auto ix = static_cast<std::uint32_t>(item(m, x));
          auto iy = static_cast<std::uint32_t>(item(n, y));
          auto iz = static_cast<std::uint32_t>(item(m + n, x * shift + y));
          factor_[iz].push_back({ix, iy});
          left_[ix].push_back({iy, iz});
          right_[iy].push_back({ix, iz});
        }
      }
    }
  }
}

namespace {

// Integer objective: word of length n weighs q^(N-n); a full layer weighs q^N.
std::vector<std::uint64_t> layer_weights(const SearchSpace& space) {
  std::vector<std::uint64_t> w(space.horizon() + 1, 0);
  for (std::size_t n = 1; n <= space.horizon(); ++n) {
    w[n] = checked_pow(space.alphabet().size(), space.horizon() - n);
  }
  return w;
}

Rational to_objective(std::uint64_t value, const SearchSpace& space, Objective objective) {
  Rational r(BigInt(value), big_pow(space.alphabet().size(), space.horizon()));
  if (objective == Objective::mean) r /= space.horizon();
  return r;
}

// max sum_n w_n c_n over lo_n <= c_n <= hi_n with c_m c_n + c_{m+n} <= q^(m+n).
class LayerRelaxation {
 public:
  explicit LayerRelaxation(const SearchSpace& space)
      : horizon_(space.horizon()), weights_(layer_weights(space)), limit_(horizon_ + 1, 0) {
    for (std::size_t n = 1; n <= horizon_; ++n) limit_[n] = space.layer_size(n);
  }

  // Returns -1 when no assignment of counts is feasible.
  std::int64_t solve(const std::vector<std::uint64_t>& lo, const std::vector<std::uint64_t>& hi) {
    std::string key;
    key.reserve(horizon_ * 16);
    for (std::size_t n = 1; n <= horizon_; ++n) {
      key.append(reinterpret_cast<const char*>(&lo[n]), sizeof(std::uint64_t));
      key.append(reinterpret_cast<const char*>(&hi[n]), sizeof(std::uint64_t));
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    lo_ = &lo;
    hi_ = &hi;
    counts_.assign(horizon_ + 1, 0);
    suffix_.assign(horizon_ + 2, 0);
    for (std::size_t n = horizon_; n >= 1; --n) suffix_[n] = suffix_[n + 1] + weights_[n] * hi[n];
    best_ = -1;
    dfs(1, 0);
    if (memo_.size() > 2'000'000) memo_.clear();
    memo_.emplace(std::move(key), best_);
    return best_;
  }

 private:
  void dfs(std::size_t n, std::uint64_t acc) {
    if (n > horizon_) {
      best_ = std::max<std::int64_t>(best_, static_cast<std::int64_t>(acc));
      return;
    }
    if (best_ >= 0 && acc + suffix_[n] <= static_cast<std::uint64_t>(best_)) return;
    std::uint64_t cap = (*hi_)[n];
    for (std::size_t m = 1; 2 * m <= n; ++m) {
      const std::uint64_t prod = counts_[m] * counts_[n - m];
      if (prod > limit_[n]) return;
      cap = std::min(cap, limit_[n] - prod);
    }
    const std::uint64_t floor = (*lo_)[n];
    if (cap < floor) return;
    if (n == horizon_) {
      counts_[n] = cap;
      dfs(n + 1, acc + weights_[n] * cap);
      return;
    }
    for (std::uint64_t v = cap + 1; v-- > floor;) {
      const std::uint64_t with = acc + weights_[n] * v;
      if (best_ >= 0 && with + suffix_[n + 1] <= static_cast<std::uint64_t>(best_)) break;
      counts_[n] = v;
      dfs(n + 1, with);
    }
  }

  std::size_t horizon_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> limit_;
  const std::vector<std::uint64_t>* lo_ = nullptr;
  const std::vector<std::uint64_t>* hi_ = nullptr;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> suffix_;
  std::int64_t best_ = -1;
  std::unordered_map<std::string, std::int64_t> memo_;
};

class BranchAndBound {
 public:
  BranchAndBound(const SearchSpace& space, std::uint64_t budget)
      : space_(space),
        budget_(budget),
        weights_(layer_weights(space)),
        relaxation_(space),
        decision_(space.size(), Decision::undecided),
        in_(space.horizon() + 1, 0),
        hi_(space.horizon() + 1, 0) {
    for (std::size_t n = 1; n <= space.horizon(); ++n) hi_[n] = space.layer_size(n);
  }

  // Applies an external assignment. Returns false if it already holds a product.
  bool load(const PartialAssignment& assignment) {
    if (assignment.size() != space_.size()) {
      throw std::invalid_argument("assignment size does not match the search space");
    }
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      if (assignment[i] == Decision::out) mark_out(i);
    }
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      if (assignment[i] != Decision::in) continue;
      if (decision_[i] == Decision::out) return false;
      if (!include(i)) return false;
    }
    return true;
  }

  std::int64_t bound() { return relaxation_.solve(in_, hi_); }

  void run() { dfs(0, 0); }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::int64_t best_value() const { return best_value_; }
  const std::vector<bool>& best_members() const { return best_members_; }

 private:
  // Returns false on conflict (an included word forced out).
  bool mark_out(std::size_t item) {
    if (decision_[item] == Decision::out) return true;
    if (decision_[item] == Decision::in) return false;
    decision_[item] = Decision::out;
    --hi_[space_.length(item)];
    trail_.push_back(static_cast<std::uint32_t>(item));
    return true;
  }

  bool include(std::size_t item) {
    decision_[item] = Decision::in;
    ++in_[space_.length(item)];
    bool ok = true;
    auto in = [&](std::uint32_t i) { return decision_[i] == Decision::in; };
    for (auto [x, y] : space_.factorizations(item)) {
      if (in(x)) ok &= mark_out(y);
      if (in(y)) ok &= mark_out(x);
    }
    for (auto [y, z] : space_.left_products(item)) {
      if (in(y)) ok &= mark_out(z);
      if (in(z)) ok &= mark_out(y);
    }
    for (auto [x, z] : space_.right_products(item)) {
      if (in(x)) ok &= mark_out(z);
      if (in(z)) ok &= mark_out(x);
    }
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      std::uint32_t item = trail_.back();
      trail_.pop_back();
      decision_[item] = Decision::undecided;
      ++hi_[space_.length(item)];
    }
  }

  void dfs(std::size_t i, std::uint64_t value) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    while (i < space_.size() && decision_[i] != Decision::undecided) ++i;
    if (i == space_.size()) {
      if (static_cast<std::int64_t>(value) > best_value_) {
        best_value_ = static_cast<std::int64_t>(value);
        best_members_.assign(space_.size(), false);
        for (std::size_t j = 0; j < space_.size(); ++j) {
          best_members_[j] = decision_[j] == Decision::in;
        }
      }
      return;
    }
    if (best_value_ >= 0 && bound() <= best_value_) return;

    const std::size_t len = space_.length(i);
    const std::size_t mark = trail_.size();
    if (include(i)) dfs(i + 1, value + weights_[len]);
    undo_to(mark);
    decision_[i] = Decision::undecided;
    --in_[len];

    mark_out(i);
    dfs(i + 1, value);
    undo_to(mark);
  }

  const SearchSpace& space_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> weights_;
  LayerRelaxation relaxation_;
  std::vector<Decision> decision_;
  std::vector<std::uint64_t> in_;
  std::vector<std::uint64_t> hi_;  // in + undecided, per layer
  std::vector<std::uint32_t> trail_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::int64_t best_value_ = -1;
  std::vector<bool> best_members_;
};

LayeredSet members_to_set(const SearchSpace& space, const std::vector<bool>& members) {
  LayeredSet s(space.alphabet(), space.horizon());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i]) s.insert(space.length(i), space.rank(i));
  }
  return s;
}

SearchResult exhaustive(const SearchSpace& space, Objective objective) {
  const std::size_t m = space.size();
  if (m > kMaxExhaustiveItems) {
    throw BudgetExceeded("exhaustive search is limited to " + std::to_string(kMaxExhaustiveItems) +
                         " words");
  }
  const auto weights = layer_weights(space);
  std::vector<std::uint32_t> triples;  // bitmask of each (x, y, z)
  auto bit = [&](std::size_t item) { return std::uint32_t{1} << (m - 1 - item); };
  for (std::size_t z = 0; z < m; ++z) {
    for (auto [x, y] : space.factorizations(z)) triples.push_back(bit(x) | bit(y) | bit(z));
  }
  std::int64_t best = -1;
  std::uint32_t best_mask = 0;
  std::uint64_t nodes = 0;
  for (std::uint64_t mask = (std::uint64_t{1} << m); mask-- > 0;) {
    ++nodes;
    const auto mk = static_cast<std::uint32_t>(mask);
    bool ok = std::none_of(triples.begin(), triples.end(),
                           [&](std::uint32_t t) { return (mk & t) == t; });
    if (!ok) continue;
    std::int64_t value = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mk & bit(i)) value += static_cast<std::int64_t>(weights[space.length(i)]);
    }
    if (value > best) {
      best = value;
      best_mask = mk;
    }
  }
  std::vector<bool> members(m);
  for (std::size_t i = 0; i < m; ++i) members[i] = (best_mask & bit(i)) != 0;
  SearchResult r;
  r.horizon = space.horizon();
  r.objective = objective;
  r.method = SearchMethod::exhaustive;
  r.value = to_objective(static_cast<std::uint64_t>(best), space, objective);
  r.best = members_to_set(space, members);
  r.nodes = nodes;
  r.optimal = true;
  return r;
}

}  // namespace

Rational upper_bound(const SearchSpace& space, const PartialAssignment& assignment,
                     Objective objective) {
  BranchAndBound bb(space, 0);
  if (!bb.load(assignment)) {
    throw std::invalid_argument("assignment includes a product x.y = z");
  }
  const std::int64_t b = bb.bound();
  if (b < 0) throw std::invalid_argument("assignment admits no completion");
  return to_objective(static_cast<std::uint64_t>(b), space, objective);
}

Rational objective_value(const LayeredSet& s, Objective objective) {
  Rational sum = 0;
  for (std::size_t n = 1; n <= s.horizon(); ++n) {
    sum += Rational(BigInt(s.count(n)), big_pow(s.alphabet().size(), n));
  }
  if (objective == Objective::mean) sum /= s.horizon();
  return sum;
}

SearchResult max_productfree(const Alphabet& alphabet, std::size_t horizon, Objective objective,
                             std::uint64_t node_budget, SearchMethod method) {
  SearchSpace space(alphabet, horizon);
  if (method == SearchMethod::automatic) {
    method = space.size() <= 20 ? SearchMethod::exhaustive : SearchMethod::branch_and_bound;
  }
  if (method == SearchMethod::exhaustive) return exhaustive(space, objective);

  BranchAndBound bb(space, node_budget);
  bb.run();
  SearchResult r;
  r.horizon = horizon;
  r.objective = objective;
  r.method = SearchMethod::branch_and_bound;
  r.nodes = bb.nodes();
  r.optimal = !bb.aborted();
  if (bb.best_value() < 0) {
    // budget ran out before any leaf; the empty set is always admissible
    r.value = 0;
    r.best = LayeredSet(alphabet, horizon);
  } else {
    r.value = to_objective(static_cast<std::uint64_t>(bb.best_value()), space, objective);
    r.best = members_to_set(space, bb.best_members());
  }
  return r;
}

}  // namespace prodfree
