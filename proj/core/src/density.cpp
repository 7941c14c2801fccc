#include "prodfree/density.hpp"

#include <ostream>
#include <stdexcept>

namespace prodfree {

namespace mp = boost::multiprecision;

WindowSpec::WindowSpec(std::size_t first_, std::size_t last_) : first(first_), last(last_) {
  if (first == 0 || last < first) throw std::invalid_argument("window must satisfy 1 <= m <= n");
}

namespace {

void require_within(const LayeredSet& s, std::size_t n) {
  if (n == 0) throw std::invalid_argument("layer length must be positive");
  if (n > s.horizon()) {
    throw std::out_of_range("length " + std::to_string(n) + " exceeds the set's horizon " +
                            std::to_string(s.horizon()));
  }
}

DensityProfile from_counts(std::vector<LayerCount> counts, bool regular) {
  DensityProfile p;
  p.regular = regular;
  p.d.reserve(counts.size());
  for (const auto& c : counts) p.d.emplace_back(c.count, c.total);
  p.counts = std::move(counts);
  return p;
}

}  // namespace

DensityProfile profile(const LayeredSet& s, std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be positive");
  require_within(s, horizon);
  std::vector<LayerCount> counts;
  BigInt total = 1;
  for (std::size_t n = 1; n <= horizon; ++n) {
    total *= s.alphabet().size();
    counts.push_back(LayerCount{n, BigInt(s.count(n)), total});
  }
  return from_counts(std::move(counts), false);
}

DensityProfile profile(const Dfa& d, std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be positive");
  return from_counts(dfa_layer_counts(d, horizon), true);
}

Rational layer_density(const LayeredSet& s, std::size_t n) {
  require_within(s, n);
  return Rational(BigInt(s.count(n)), big_pow(s.alphabet().size(), n));
}

Rational layer_density(const Dfa& d, std::size_t n) {
  auto c = dfa_layer_count(d, n);
  return Rational(c.count, c.total);
}

Rational refined_density(const LayeredSet& s, std::size_t n, std::span<const std::size_t> ls) {
  require_within(s, n);
  return Rational(BigInt(prefix_excluded(s, n, ls).count(n)), big_pow(s.alphabet().size(), n));
}

Rational refined_density(const Dfa& d, std::size_t n, std::span<const std::size_t> ls) {
  return Rational(dfa_refined_count(d, n, ls), big_pow(d.alphabet().size(), n));
}

Rational window_mean(const DensityProfile& p, const WindowSpec& w) {
  if (w.last > p.horizon()) throw std::out_of_range("window exceeds the profile horizon");
  Rational sum = 0;
  for (std::size_t n = w.first; n <= w.last; ++n) sum += p.at(n);
  return sum / w.size();
}

PeriodReport detect_period(const DensityProfile& p) {
  const std::size_t h = p.horizon();
  if (h < 4) return {};
  for (std::size_t period = 1; period <= h / 3; ++period) {
    // two full periods of agreement: (h - period) - preperiod + 1 >= 2 * period
    for (std::size_t pre = 1; pre + 3 * period <= h + 1; ++pre) {
      bool ok = true;
      for (std::size_t n = pre; n + period <= h; ++n) {
        if (p.at(n + period) != p.at(n)) {
          ok = false;
          break;
        }
      }
      if (ok) return PeriodReport{pre, period, true};
    }
  }
  return {};
}

namespace {

std::vector<Rational> prefix_sums(const DensityProfile& p) {
  std::vector<Rational> sums(p.horizon() + 1, Rational(0));
  for (std::size_t n = 1; n <= p.horizon(); ++n) sums[n] = sums[n - 1] + p.at(n);
  return sums;
}

void finish(DensityEstimate& e, const DensityProfile& p) {
  e.horizon = p.horizon();
  e.period = detect_period(p);
  e.value = e.estimate;
  if (p.regular && e.period.holds) {
    e.exact = true;
    e.value = window_mean(p, WindowSpec(e.period.preperiod,
                                        e.period.preperiod + e.period.period - 1));
  }
}

}  // namespace

DensityEstimate upper_asymptotic(const DensityProfile& p) {
  if (p.horizon() == 0) throw std::invalid_argument("empty profile");
  auto sums = prefix_sums(p);
  DensityEstimate e;
  e.estimate = sums[1];
  e.window = WindowSpec(1, 1);
  for (std::size_t n = 2; n <= p.horizon(); ++n) {
    Rational mean = sums[n] / n;
    if (mean > e.estimate) {
      e.estimate = mean;
      e.window = WindowSpec(1, n);
    }
  }
  finish(e, p);
  return e;
}

DensityEstimate upper_banach(const DensityProfile& p, std::size_t min_window) {
  if (min_window == 0 || min_window > p.horizon()) {
    throw std::invalid_argument("minimum window must lie in [1, horizon]");
  }
  auto sums = prefix_sums(p);
  DensityEstimate e;
  bool first = true;
  for (std::size_t m = 1; m + min_window - 1 <= p.horizon(); ++m) {
    for (std::size_t n = m + min_window - 1; n <= p.horizon(); ++n) {
      Rational mean = (sums[n] - sums[m - 1]) / (n - m + 1);
      if (first || mean > e.estimate) {
        e.estimate = mean;
        e.window = WindowSpec(m, n);
        first = false;
      }
    }
  }
  finish(e, p);
  return e;
}

Rational ball_density(const LayeredSet& s, std::size_t n) {
  require_within(s, n);
  BigInt members = 0;
  BigInt total = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    members += s.count(i);
    total += big_pow(s.alphabet().size(), i);
  }
  return Rational(members, total);
}

Rational ball_density(const Dfa& d, std::size_t n) {
  if (n == 0) throw std::invalid_argument("ball radius must be positive");
  BigInt members = 0;
  BigInt total = 0;
  for (const auto& c : dfa_layer_counts(d, n)) {
    members += c.count;
    total += c.total;
  }
  return Rational(members, total);
}

void write_profile_csv(std::ostream& out, const DensityProfile& p) {
  out << "n,count,total,density_num,density_den\n";
  for (std::size_t i = 0; i < p.horizon(); ++i) {
    const auto& c = p.counts[i];
    out << c.n << ',' << c.count << ',' << c.total << ',' << mp::numerator(p.d[i]) << ','
        << mp::denominator(p.d[i]) << '\n';
  }
}

}  // namespace prodfree
