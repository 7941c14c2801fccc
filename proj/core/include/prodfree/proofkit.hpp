// Finite, exact evaluations of the inequalities behind the 1/2 upper bound on
// the Banach density of product-free sets: the chained prefix inequality, the
// greedy l-sequence certificate with its window bound, and the phi level-set
// argument.
//
// For product-free S and l_1 < ... < l_k < n,
//
//   sum_i d(l_i; l_1..l_{i-1}) d(n - l_i) + d(n)            (lhs)
//     <= sum_i d(l_i; l_1..l_{i-1}) + d(n; l_1..l_k)       (mid)
//     <= 1.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prodfree/density.hpp"
#include "prodfree/numeric.hpp"

namespace prodfree {

struct PropositionReport {
  std::size_t n = 0;
  std::vector<std::size_t> ls;
  std::vector<Rational> terms;  // d(l_i; l_1..l_{i-1})
  Rational lhs;
  Rational mid;
  bool ok = false;  // lhs <= mid && mid <= 1
};

PropositionReport proposition_check(const LayeredSet& s, std::span<const std::size_t> ls,
                                    std::size_t n);
PropositionReport proposition_check(const Dfa& d, std::span<const std::size_t> ls, std::size_t n);

struct LSequence {
  std::vector<std::size_t> ls;
  std::vector<Rational> terms;       // d(l_1), d(l_2; l_1), ...
  std::vector<Rational> cumulative;  // partial sums of terms

  std::size_t size() const { return ls.size(); }
  bool empty() const { return ls.empty(); }
  Rational total() const { return cumulative.empty() ? Rational(0) : cumulative.back(); }
};

/// Window scan order for extension: starts increase from l_k + 1; for each
/// start, lengths double from max(min_length, floor((l_k + 1) / eps) + 1).
struct WindowPolicy {
  std::size_t min_length = 16;
};

enum class ExtractionStatus {
  no_start,   // no layer with d(n) >= 1/2 inside the horizon
  complete,   // cumulative reached 1; no further term can be positive
  exhausted,  // no window inside the horizon allowed another extension
};

std::string to_string(ExtractionStatus s);

struct TraceRecord {
  std::size_t stage = 0;  // sequence length before this window was inspected
  WindowSpec window;
  Rational mean;
  bool dense = false;  // mean > 1/2 + eps
  std::optional<std::size_t> chosen;
  std::optional<bool> proposition_ok;  // for the chosen n
};

struct Extraction {
  LSequence sequence;
  ExtractionStatus status = ExtractionStatus::no_start;
  Rational epsilon;
  std::size_t horizon = 0;
  WindowPolicy policy;
  std::vector<TraceRecord> trace;
  /// Inequality checks at every n in (l_k, H] that failed (non-product-free input).
  std::vector<PropositionReport> violations;
};

/// Greedy construction of l_1 < l_2 < ... as in the density argument.
/// Exhaustion is evidence consistent with d*(S) <= 1/2 + eps at this horizon,
/// not a proof.
Extraction extract_lsequence(const LayeredSet& s, const Rational& epsilon, std::size_t horizon,
                             const WindowPolicy& policy = {});
Extraction extract_lsequence(const Dfa& d, const Rational& epsilon, std::size_t horizon,
                             const WindowPolicy& policy = {});

struct WindowCertificate {
  WindowSpec window;
  std::size_t k = 0;
  Rational bound;  // 2^k / (2^(k+1) - 1) + 2 (l_k + 1) / |I|
  Rational mean;
  bool holds = false;  // mean <= bound
};

/// Requires a nonempty sequence with cumulative >= 1 - 1/2^k, min I > l_k,
/// and I inside the profile. Throws std::invalid_argument otherwise.
WindowCertificate window_bound_certificate(const DensityProfile& p, const WindowSpec& window,
                                           const LSequence& seq);
WindowCertificate window_bound_certificate(const LayeredSet& s, const WindowSpec& window,
                                           const LSequence& seq);
WindowCertificate window_bound_certificate(const Dfa& d, const WindowSpec& window,
                                           const LSequence& seq);

/// Bound from the formula alone.
Rational window_bound(std::size_t k, std::size_t last_l, std::size_t window_length);

struct CertificateSweep {
  std::size_t windows_checked = 0;
  std::vector<WindowCertificate> violations;
};

/// Every window inside [l_k + 1, H] of length >= min_length.
CertificateSweep sweep_window_certificates(const DensityProfile& p, const LSequence& seq,
                                           std::size_t min_length);

struct PhiLevelSet {
  std::vector<std::size_t> levels;  // n <= H with d(n) > phi
  bool sum_free = true;
  std::optional<std::array<std::size_t, 3>> violation;  // a + b = c, a <= b
};

PhiLevelSet phi_level_set(const DensityProfile& p);
PhiLevelSet phi_level_set(const LayeredSet& s, std::size_t horizon);
PhiLevelSet phi_level_set(const Dfa& d, std::size_t horizon);

struct SimpleBoundReport {
  std::size_t horizon = 0;
  Rational raw_estimate;    // max prefix mean (upper_asymptotic estimate)
  Rational prefix_mean;     // mean of d over [1, H]
  std::size_t level_count = 0;  // |T intersect [1, H]|
  Surd5 implied;            // (t + (H - t) phi) / H, dominates prefix_mean
  Surd5 sum_free_ceiling;   // (ceil(H/2) + floor(H/2) phi) / H
  Surd5 asymptotic;         // (1 + phi) / 2
  bool consistent = false;  // prefix_mean <= implied <= ceiling (when T is sum-free)
};

SimpleBoundReport simple_bound_estimate(const DensityProfile& p);
SimpleBoundReport simple_bound_estimate(const LayeredSet& s, std::size_t horizon);
SimpleBoundReport simple_bound_estimate(const Dfa& d, std::size_t horizon);

}  // namespace prodfree
