// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "prodfree/constructions.hpp"
#include "prodfree/density.hpp"
#include "prodfree/dfa.hpp"
#include "prodfree/productfree.hpp"
#include "prodfree/proofkit.hpp"
#include "prodfree/search.hpp"

using namespace prodfree;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

const Alphabet ab("ab");
const Alphabet abc("abc");
const Rational eps(1, 10);

std::string frac(const Rational& r) { return to_fraction_string(r); }

std::vector<LayeredSet> greedy_fixtures() {
  std::vector<LayeredSet> sets;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GreedySchedule schedule;
    if (seed % 4 == 0) schedule.insert_probability = Rational(1, 2);
    if (seed % 5 == 0) schedule.order = GreedyOrder::odd_lengths_first;
    sets.push_back(greedy_random_productfree(ab, 12, seed, schedule));
  }
  return sets;
}

void odd_occurrence_reproduction(Outcome& o) {
  for (const char* g : {"a", "b", "ab"}) {
    const Dfa d = odd_occurrence(GammaSpec(ab, g));
    o.require(!check_regular(d), std::string("O_") + g + " product-free");
    const auto p = profile(d, 64);
    const auto asym = upper_asymptotic(p);
    const auto banach = upper_banach(p);
    o.require(asym.exact && asym.value == Rational(1, 2), std::string("asymptotic O_") + g);
    o.require(banach.exact && banach.value == Rational(1, 2), std::string("Banach O_") + g);
    o.detail << "O_" << g << ": d*=" << frac(banach.value) << " dbar=" << frac(asym.value)
             << " period=" << banach.period.period << "; ";
  }
}

void proposition_suite(Outcome& o, const std::vector<LayeredSet>& sets) {
  std::mt19937_64 rng(20240601);
  std::size_t checks = 0, violations = 0;
  for (const auto& s : sets) {
    o.require(!check_explicit(s), "fixture is product-free");
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 2 + rng() % 11;
      std::vector<std::size_t> ls;
      for (std::size_t l = 1; l < n; ++l)
        if (rng() % 3 == 0) ls.push_back(l);
      if (ls.empty()) ls.push_back(1 + rng() % (n - 1));
      const auto r = proposition_check(s, ls, n);
      ++checks;
      const bool ok = r.lhs <= r.mid && r.mid <= 1;
      violations += !ok;
    }
  }
  o.require(violations == 0, "lhs <= mid <= 1");
  o.detail << checks << " exact checks over " << sets.size() << " sets, " << violations
           << " violations";
}

void window_certificates(Outcome& o, const std::vector<LayeredSet>& sets) {
  // finite sets: every layer beyond N = 12 is exactly empty
  const std::size_t horizon = 64;
  std::size_t certified = 0, windows = 0, violations = 0, extraction_violations = 0;
  for (const auto& s : sets) {
    const auto extended = s.with_horizon(horizon);
    const auto ex = extract_lsequence(extended, eps, horizon);
    extraction_violations += ex.violations.size();
    if (ex.sequence.empty()) continue;
    ++certified;
    const auto sweep = sweep_window_certificates(profile(extended, horizon), ex.sequence, 16);
    windows += sweep.windows_checked;
    violations += sweep.violations.size();
  }
  o.require(certified > 0, "some set yields a sequence");
  o.require(violations == 0, "window mean <= bound");
  o.require(extraction_violations == 0, "no inequality failures during extraction");
  o.detail << certified << " sets with k >= 1, " << windows << " windows, " << violations
           << " violations";
}

void phi_levels(Outcome& o, const std::vector<LayeredSet>& sets) {
  // gate: (2 * 5/8 + 1)^2 = 81/16 > 5 = 80/16
  const Rational gate = Rational(2) * Rational(5, 8) + 1;
  o.require(gate * gate * 16 == 81 && exceeds_phi(Rational(5, 8)), "gate 81 > 80");
  o.require(Surd5(Rational(5, 8)) > phi(), "surd gate");
  std::size_t checked = 0, violations = 0, nonempty = 0;
  auto record = [&](const PhiLevelSet& t) {
    ++checked;
    violations += !t.sum_free;
    nonempty += !t.levels.empty();
  };
  for (const auto& s : sets) record(phi_level_set(s, 12));
  for (const char* g : {"a", "b", "ab"}) record(phi_level_set(odd_occurrence(GammaSpec(ab, g)), 64));
  for (const char* g : {"a", "b", "c", "ab", "ac", "bc", "abc"})
    record(phi_level_set(odd_occurrence(GammaSpec(abc, g)), 64));
  record(phi_level_set(counting_pathology(ab, 4, 20), 20));
  for (std::size_t n = 1; n <= 5; ++n) record(phi_level_set(max_productfree(ab, n).best, n));
  o.require(violations == 0, "level sets sum-free");
  o.detail << "gate 81 > 80; " << checked << " sets (" << nonempty << " with nonempty level set), "
           << violations << " violations";
}

void pathology(Outcome& o) {
  const auto s = counting_pathology(ab, 4, 20);
  o.require(!check_explicit(s), "product-free");
  const Rational d = ball_density(s, 20);
  o.require(d >= Rational(3, 4), "ball density >= 3/4");
  o.detail << "ball density at 20 = " << frac(d) << " ≈" << to_decimal_string(d);
}

void asymmetric(Outcome& o) {
  const auto t = asymmetric_triple(ab, 4, eps);
  o.require(dfa_is_empty(dfa_intersect(dfa_concat(t.x, t.y), t.z)), "(X.Y) & Z empty");
  const auto px = profile(t.x, 20), py = profile(t.y, 20);
  for (std::size_t m = 4; m <= 20; ++m) {
    o.require(px.at(m) == Rational(9, 16), "d_X = 9/16");
    o.require(py.at(m) == Rational(9, 16), "d_Y = 9/16");
  }
  o.require(Surd5(Rational(9, 16)) > phi() - Surd5(eps), "9/16 > phi - eps");
  o.detail << "|W|=" << t.w.count(4) << ", d_X=d_Y=9/16 on [4,20], 9/16 > phi-1/10, "
           << "states X/Y/Z=" << t.x.num_states() << "/" << t.y.num_states() << "/"
           << t.z.num_states();
}

void search_ground_truth(Outcome& o) {
  struct Case {
    const char* alphabet;
    std::size_t horizon;
  };
  for (Case c : {Case{"ab", 1}, Case{"ab", 2}, Case{"ab", 3}, Case{"abc", 1}, Case{"abc", 2}}) {
    const Rational brute = oracle::max_productfree(c.alphabet, c.horizon);
    const auto bnb = max_productfree(Alphabet(c.alphabet), c.horizon, Objective::mean,
                                     100'000'000, SearchMethod::branch_and_bound);
    const auto ex = max_productfree(Alphabet(c.alphabet), c.horizon, Objective::mean,
                                    100'000'000, SearchMethod::exhaustive);
    const std::string tag = std::string("q=") + std::to_string(std::string(c.alphabet).size()) +
                            " N=" + std::to_string(c.horizon);
    o.require(bnb.optimal && ex.optimal, tag + " completed");
    o.require(bnb.value == brute && ex.value == brute, tag + " matches brute force");
    o.require(!check_explicit(bnb.best), tag + " witness product-free");
  }
  std::vector<Rational> opt;
  bool all_optimal = true;
  o.detail << "q=2 optima N=1..6:";
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto r = max_productfree(ab, n);
    all_optimal = all_optimal && r.optimal;
    opt.push_back(r.value);
    o.detail << ' ' << frac(r.value) << (r.optimal ? "" : "(anytime)");
  }
  o.require(opt[1] == Rational(5, 8), "N=2 optimum 5/8");
  for (const auto& v : opt) o.require(v > Rational(1, 2), "optimum exceeds 1/2");
  o.require(opt[5] < opt[1] && opt[1] < opt[0], "downward trend");
  for (std::size_t i = 2; i < opt.size(); ++i)
    o.require(opt[i] < opt[i - 2], "each parity class decreasing");
  o.detail << "; proof flag " << (all_optimal ? "set" : "unset") << " for N=6";
}

Dfa random_regular(std::mt19937_64& rng, const Alphabet& a, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    std::vector<std::uint8_t> gamma;
    for (std::uint8_t c = 0; c < a.size(); ++c)
      if (rng() % 2) gamma.push_back(c);
    if (gamma.empty()) gamma.push_back(rng() % a.size());
    return odd_occurrence(GammaSpec(a, gamma));
  }
  const Dfa l = random_regular(rng, a, depth - 1);
  switch (rng() % 4) {
    case 0: return dfa_union(l, random_regular(rng, a, depth - 1));
    case 1: return dfa_intersect(l, random_regular(rng, a, depth - 1));
    case 2: return dfa_difference(l, random_regular(rng, a, depth - 1));
    default: return dfa_complement(l);
  }
}

void representation_agreement(Outcome& o) {
  std::mt19937_64 rng(77);
  const std::size_t N = 10;
  std::size_t refined_checks = 0, productfree_sets = 0;
  for (int t = 0; t < 50; ++t) {
    const Alphabet& a = t % 2 ? abc : ab;
    const Dfa d = random_regular(rng, a, 3);
    const auto s = dfa_truncate(d, N);
    const auto pd = profile(d, N), ps = profile(s, N);
    o.require(pd.d == ps.d, "profiles agree");
    for (int k = 0; k < 5; ++k) {
      const std::size_t n = 2 + rng() % (N - 1);
      std::vector<std::size_t> ls;
      for (std::size_t l = 1; l < n; ++l)
        if (rng() % 3 == 0) ls.push_back(l);
      o.require(refined_density(d, n, ls) == refined_density(s, n, ls), "refined densities agree");
      ++refined_checks;
    }
    // verdict inside the ball: products x.y = z with |z| <= N
    const auto within = dfa_truncate(dfa_intersect(dfa_concat(d, d), d), N);
    const auto ex = check_explicit(s);
    o.require(within.empty() == !ex.has_value(), "product-freeness verdicts agree");
    if (ex) {
      const auto reg = check_regular(d);
      o.require(reg && reg->z.size() == ex->z.size(), "shortest witness lengths agree");
    } else {
      ++productfree_sets;
    }
  }
  o.detail << "50 sets, " << refined_checks << " refined-density checks, " << productfree_sets
           << " product-free within N=10";
}

}  // namespace

int main() {
  const auto fixtures = greedy_fixtures();
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "odd-occurrence densities", 1, odd_occurrence_reproduction},
      {2, "chained prefix inequality suite", 30,
       [&](Outcome& o) { proposition_suite(o, fixtures); }},
      {3, "window-bound certificates", 60, [&](Outcome& o) { window_certificates(o, fixtures); }},
      {4, "phi level sets", 60, [&](Outcome& o) { phi_levels(o, fixtures); }},
      {5, "ball-density pathology", 5, pathology},
      {6, "asymmetric triple", 5, asymmetric},
      {7, "exact search ground truth", 600, search_ground_truth},
      {8, "representation agreement", 60, representation_agreement},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.limit_seconds, "runtime limit");
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): "
              << o.detail.str() << " [" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s]" << std::endl;
    std::cout.unsetf(std::ios::fixed);
  }
  return failures == 0 ? 0 : 1;
}
