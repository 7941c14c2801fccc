// Exact layer densities d(n) = |S(n)| / q^n and the finite-horizon estimators
// for upper asymptotic and upper Banach density.

#pragma once

#include <concepts>
#include <iosfwd>
#include <span>
#include <vector>

#include "prodfree/dfa.hpp"
#include "prodfree/layered_set.hpp"
#include "prodfree/numeric.hpp"

namespace prodfree {

inline constexpr std::size_t kDefaultRegularHorizon = 64;
inline constexpr std::size_t kDefaultMinWindow = 8;

struct DensityProfile {
  std::vector<LayerCount> counts;  // counts[i] is layer i + 1
  std::vector<Rational> d;         // d[i] = counts[i].count / counts[i].total
  /// True when built from an automaton; only then may limits be claimed exactly.
  bool regular = false;

  std::size_t horizon() const { return d.size(); }
  /// d(n), 1-based.
  const Rational& at(std::size_t n) const { return d.at(n - 1); }
};

/// Inclusive window [first, last] of layer lengths.
struct WindowSpec {
  std::size_t first = 1;
  std::size_t last = 1;

  WindowSpec() = default;
  WindowSpec(std::size_t first_, std::size_t last_);
  std::size_t size() const { return last - first + 1; }
  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

/// d(n + period) == d(n) for preperiod <= n <= horizon - period.
struct PeriodReport {
  std::size_t preperiod = 0;
  std::size_t period = 0;
  bool holds = false;
};

/// A limsup reported from finite evidence.
struct DensityEstimate {
  Rational estimate;    // max of the finite-horizon averages
  WindowSpec window;    // window attaining `estimate`
  bool exact = false;   // `value` is the true limit (eventually periodic regular profile)
  Rational value;       // the period mean when exact, else == estimate
  std::size_t horizon = 0;
  PeriodReport period;
};

/// Throws std::out_of_range when H exceeds an explicit set's horizon.
DensityProfile profile(const LayeredSet& s, std::size_t horizon);
DensityProfile profile(const Dfa& d, std::size_t horizon);

Rational layer_density(const LayeredSet& s, std::size_t n);
Rational layer_density(const Dfa& d, std::size_t n);

/// d(n; ls) = |S(n; ls)| / q^n.
Rational refined_density(const LayeredSet& s, std::size_t n, std::span<const std::size_t> ls);
Rational refined_density(const Dfa& d, std::size_t n, std::span<const std::size_t> ls);

/// Anything that can answer the two density queries the proof machinery needs.
template <class S>
concept DensitySource = requires(const S& s, std::size_t n, std::span<const std::size_t> ls) {
  { layer_density(s, n) } -> std::convertible_to<Rational>;
  { refined_density(s, n, ls) } -> std::convertible_to<Rational>;
  { profile(s, n) } -> std::same_as<DensityProfile>;
};

Rational window_mean(const DensityProfile& p, const WindowSpec& w);

/// Smallest period p <= H/3 (then smallest preperiod) with at least two full
/// periods of agreement inside the profile.
PeriodReport detect_period(const DensityProfile& p);

/// limsup of prefix means.
DensityEstimate upper_asymptotic(const DensityProfile& p);

/// limsup of window means over windows of length >= min_window.
/// Throws std::invalid_argument if min_window is 0 or exceeds the horizon.
DensityEstimate upper_banach(const DensityProfile& p, std::size_t min_window = kDefaultMinWindow);

/// |S intersect F_<=(n)| / |F_<=(n)|.
Rational ball_density(const LayeredSet& s, std::size_t n);
Rational ball_density(const Dfa& d, std::size_t n);

/// Columns n,count,total,density_num,density_den with a header row.
void write_profile_csv(std::ostream& out, const DensityProfile& p);

}  // namespace prodfree
