#include "prodfree/proofkit.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace prodfree {

std::string to_string(ExtractionStatus s) {
  switch (s) {
    case ExtractionStatus::no_start:
      return "no_start";
    case ExtractionStatus::complete:
      return "complete";
    case ExtractionStatus::exhausted:
      return "exhausted";
  }
  return "unknown";
}

namespace {

template <DensitySource Set>
PropositionReport proposition_impl(const Set& s, std::span<const std::size_t> ls, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  validate_lsequence(n, ls);
  PropositionReport r;
  r.n = n;
  r.ls.assign(ls.begin(), ls.end());
  r.lhs = layer_density(s, n);
  r.mid = 0;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    Rational term = refined_density(s, ls[i], ls.first(i));
    r.lhs += term * layer_density(s, n - ls[i]);
    r.mid += term;
    r.terms.push_back(std::move(term));
  }
  r.mid += refined_density(s, n, ls);
  r.ok = r.lhs <= r.mid && r.mid <= 1;
  return r;
}

Rational threshold(std::size_t k) {
  // 1 - 1/2^k
  BigInt p = big_pow(2, k);
  return Rational(p - 1, p);
}

template <DensitySource Set>
Extraction extract_impl(const Set& s, const Rational& epsilon, std::size_t horizon,
                        const WindowPolicy& policy) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (policy.min_length == 0) throw std::invalid_argument("minimum window length must be positive");
  Extraction ex;
  ex.epsilon = epsilon;
  ex.horizon = horizon;
  ex.policy = policy;
  const DensityProfile p = profile(s, horizon);
  const Rational half(1, 2);
  const Rational dense_threshold = half + epsilon;

  for (std::size_t n = 1; n <= horizon; ++n) {
    if (p.at(n) >= half) {
      ex.sequence.ls.push_back(n);
      ex.sequence.terms.push_back(p.at(n));
      ex.sequence.cumulative.push_back(p.at(n));
      break;
    }
  }
  if (ex.sequence.empty()) return ex;

  while (true) {
    if (ex.sequence.total() >= 1) {
      ex.status = ExtractionStatus::complete;
      break;
    }
    const std::size_t k = ex.sequence.size();
    const std::size_t last = ex.sequence.ls.back();
    const Rational target = threshold(k + 1);
    const Rational needed = target - ex.sequence.total();
    // |I| > (l_k + 1) / eps
    const Rational ratio = Rational(last + 1) / epsilon;
    BigInt floor_ratio = boost::multiprecision::numerator(ratio) /
                         boost::multiprecision::denominator(ratio);
    std::size_t min_len = policy.min_length;
    if (floor_ratio + 1 > min_len) {
      min_len = floor_ratio + 1 > horizon ? horizon + 1 : floor_ratio.convert_to<std::size_t>() + 1;
    }

    std::map<std::size_t, Rational> refined;  // this stage's d(n; l_1..l_k)
    auto refined_at = [&](std::size_t n) -> const Rational& {
      auto it = refined.find(n);
      if (it == refined.end()) it = refined.emplace(n, refined_density(s, n, ex.sequence.ls)).first;
      return it->second;
    };

    std::optional<std::size_t> chosen;
    for (std::size_t start = last + 1; !chosen && start + min_len - 1 <= horizon; ++start) {
      for (std::size_t len = min_len; start + len - 1 <= horizon; len *= 2) {
        TraceRecord rec;
        rec.stage = k;
        rec.window = WindowSpec(start, start + len - 1);
        rec.mean = window_mean(p, rec.window);
        rec.dense = rec.mean > dense_threshold;
        if (rec.dense) {
          for (std::size_t n = rec.window.first; n <= rec.window.last; ++n) {
            if (refined_at(n) >= needed) {
              rec.chosen = n;
              rec.proposition_ok = proposition_impl(s, ex.sequence.ls, n).ok;
              break;
            }
          }
        }
        ex.trace.push_back(rec);
        if (rec.chosen) {
          chosen = rec.chosen;
          break;
        }
      }
    }
    if (!chosen) {
      ex.status = ExtractionStatus::exhausted;
      break;
    }
    Rational term = refined_at(*chosen);
    ex.sequence.ls.push_back(*chosen);
    ex.sequence.cumulative.push_back(ex.sequence.total() + term);
    ex.sequence.terms.push_back(std::move(term));
  }

  for (std::size_t n = ex.sequence.ls.back() + 1; n <= horizon; ++n) {
    auto report = proposition_impl(s, ex.sequence.ls, n);
    if (!report.ok) ex.violations.push_back(std::move(report));
  }
  return ex;
}

}  // namespace

PropositionReport proposition_check(const LayeredSet& s, std::span<const std::size_t> ls,
                                    std::size_t n) {
  return proposition_impl(s, ls, n);
}

PropositionReport proposition_check(const Dfa& d, std::span<const std::size_t> ls, std::size_t n) {
  return proposition_impl(d, ls, n);
}

Extraction extract_lsequence(const LayeredSet& s, const Rational& epsilon, std::size_t horizon,
                             const WindowPolicy& policy) {
  return extract_impl(s, epsilon, horizon, policy);
}

Extraction extract_lsequence(const Dfa& d, const Rational& epsilon, std::size_t horizon,
                             const WindowPolicy& policy) {
  return extract_impl(d, epsilon, horizon, policy);
}

Rational window_bound(std::size_t k, std::size_t last_l, std::size_t window_length) {
  if (k == 0 || window_length == 0) throw std::invalid_argument("k and |I| must be positive");
  BigInt p = big_pow(2, k);
  return Rational(p, 2 * p - 1) + Rational(2 * (last_l + 1), window_length);
}

WindowCertificate window_bound_certificate(const DensityProfile& p, const WindowSpec& window,
                                           const LSequence& seq) {
  if (seq.empty()) throw std::invalid_argument("certificate needs a nonempty l-sequence");
  const std::size_t k = seq.size();
  if (seq.total() < threshold(k)) {
    throw std::invalid_argument("cumulative density is below 1 - 1/2^k");
  }
  if (window.first <= seq.ls.back()) throw std::invalid_argument("window must start after l_k");
  if (window.last > p.horizon()) throw std::out_of_range("window exceeds the profile horizon");
  WindowCertificate c;
  c.window = window;
  c.k = k;
  c.bound = window_bound(k, seq.ls.back(), window.size());
  c.mean = window_mean(p, window);
  c.holds = c.mean <= c.bound;
  return c;
}

WindowCertificate window_bound_certificate(const LayeredSet& s, const WindowSpec& window,
                                           const LSequence& seq) {
  return window_bound_certificate(profile(s, window.last), window, seq);
}

WindowCertificate window_bound_certificate(const Dfa& d, const WindowSpec& window,
                                           const LSequence& seq) {
  return window_bound_certificate(profile(d, window.last), window, seq);
}

CertificateSweep sweep_window_certificates(const DensityProfile& p, const LSequence& seq,
                                           std::size_t min_length) {
  if (min_length == 0) throw std::invalid_argument("minimum window length must be positive");
  CertificateSweep sweep;
  if (seq.empty()) return sweep;
  const std::size_t first = seq.ls.back() + 1;
  const std::size_t k = seq.size();
  if (seq.total() < threshold(k)) {
    throw std::invalid_argument("cumulative density is below 1 - 1/2^k");
  }
  std::vector<Rational> sums(p.horizon() + 1, Rational(0));
  for (std::size_t n = 1; n <= p.horizon(); ++n) sums[n] = sums[n - 1] + p.at(n);
  for (std::size_t m = first; m + min_length - 1 <= p.horizon(); ++m) {
    for (std::size_t n = m + min_length - 1; n <= p.horizon(); ++n) {
      ++sweep.windows_checked;
      const std::size_t len = n - m + 1;
      Rational mean = (sums[n] - sums[m - 1]) / len;
      Rational bound = window_bound(k, seq.ls.back(), len);
      if (mean > bound) {
        sweep.violations.push_back(WindowCertificate{WindowSpec(m, n), k, bound, mean, false});
      }
    }
  }
  return sweep;
}

PhiLevelSet phi_level_set(const DensityProfile& p) {
  PhiLevelSet out;
  std::set<std::size_t> members;
  for (std::size_t n = 1; n <= p.horizon(); ++n) {
    if (exceeds_phi(p.at(n))) {
      out.levels.push_back(n);
      members.insert(n);
    }
  }
  for (std::size_t i = 0; i < out.levels.size() && out.sum_free; ++i) {
    for (std::size_t j = i; j < out.levels.size(); ++j) {
      std::size_t c = out.levels[i] + out.levels[j];
      if (members.contains(c)) {
        out.sum_free = false;
        out.violation = std::array<std::size_t, 3>{out.levels[i], out.levels[j], c};
        break;
      }
    }
  }
  return out;
}

PhiLevelSet phi_level_set(const LayeredSet& s, std::size_t horizon) {
  return phi_level_set(profile(s, horizon));
}

PhiLevelSet phi_level_set(const Dfa& d, std::size_t horizon) {
  return phi_level_set(profile(d, horizon));
}

SimpleBoundReport simple_bound_estimate(const DensityProfile& p) {
  if (p.horizon() == 0) throw std::invalid_argument("empty profile");
  SimpleBoundReport r;
  const std::size_t h = p.horizon();
  r.horizon = h;
  r.raw_estimate = upper_asymptotic(p).estimate;
  r.prefix_mean = window_mean(p, WindowSpec(1, h));
  auto levels = phi_level_set(p);
  r.level_count = levels.levels.size();
  const Rational t(r.level_count);
  r.implied = (Surd5(t) + Surd5(Rational(h) - t) * phi()) / Rational(h);
  const Rational half_up((h + 1) / 2), half_down(h / 2);
  r.sum_free_ceiling = (Surd5(half_up) + Surd5(half_down) * phi()) / Rational(h);
  r.asymptotic = simple_density_bound();
  r.consistent = Surd5(r.prefix_mean) <= r.implied &&
                 (!levels.sum_free || r.implied <= r.sum_free_ceiling);
  return r;
}

SimpleBoundReport simple_bound_estimate(const LayeredSet& s, std::size_t horizon) {
  return simple_bound_estimate(profile(s, horizon));
}

SimpleBoundReport simple_bound_estimate(const Dfa& d, std::size_t horizon) {
  return simple_bound_estimate(profile(d, horizon));
}

}  // namespace prodfree
