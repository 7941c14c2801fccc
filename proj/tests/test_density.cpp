#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "oracle.hpp"
#include "prodfree/density.hpp"

using namespace prodfree;
using testing::odd_a;
using testing::odd_length;
using testing::set_of;

namespace {
const Alphabet ab("ab");
const Rational half(1, 2);
}  // namespace

TEST_CASE("profiles of basic sets") {
  auto p = profile(odd_a(), 64);
  CHECK(p.regular);
  CHECK(p.horizon() == 64);
  for (std::size_t n = 1; n <= 64; ++n) CHECK(p.at(n) == half);

  auto po = profile(odd_length(ab), 10);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(po.at(n) == Rational(n % 2));

  auto pe = profile(Dfa::empty(ab), 10);
  for (const auto& d : pe.d) CHECK(d == 0);

  auto pl = profile(LayeredSet(ab, 5), 5);
  CHECK_FALSE(pl.regular);
  CHECK_THROWS_AS(profile(LayeredSet(ab, 5), 6), std::out_of_range);
}

TEST_CASE("profile invariants") {
  std::mt19937_64 rng(2);
  LayeredSet s(ab, 8);
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
      if (rng() % 3 == 0) s.insert(n, r);
  auto p = profile(s, 8);
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(p.at(n) >= 0);
    CHECK(p.at(n) <= 1);
    CHECK(p.at(n) * Rational(big_pow(2, n)) == Rational(p.counts[n - 1].count));
    CHECK(p.counts[n - 1].count == s.count(n));
    CHECK(layer_density(s, n) == p.at(n));
  }
}

TEST_CASE("refined densities") {
  const std::size_t one[] = {1};
  CHECK(refined_density(odd_length(ab), 3, one) == 0);

  auto s = set_of(ab, {"a"}, 3);
  for (std::uint64_t r = 0; r < 8; ++r) s.insert(3, r);
  CHECK(refined_density(s, 3, one) == half);
  CHECK(refined_density(s, 3, {}) == layer_density(s, 3));
  CHECK(refined_density(odd_a(), 3, {}) == half);
  CHECK(refined_density(odd_a(), 3, one) == Rational(1, 4));

  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    LayeredSet x(ab, 6);
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
        if (rng() % 2) x.insert(n, r);
    std::vector<std::size_t> ls;
    for (std::size_t l = 1; l < 6; ++l)
      if (rng() % 2) ls.push_back(l);
    CHECK(refined_density(x, 6, ls) == oracle::refined_density(testing::strings_of(x), 6, ls, 2));
  }
}

TEST_CASE("window means and validation") {
  CHECK_THROWS(WindowSpec(3, 2));
  CHECK_THROWS(WindowSpec(0, 2));
  auto p = profile(odd_length(ab), 10);
  CHECK(window_mean(p, WindowSpec(1, 4)) == half);
  CHECK(window_mean(p, WindowSpec(1, 3)) == Rational(2, 3));
  CHECK_THROWS(window_mean(p, WindowSpec(5, 11)));
}

TEST_CASE("upper asymptotic density") {
  auto odd = upper_asymptotic(profile(odd_length(ab), 64));
  CHECK(odd.exact);
  CHECK(odd.value == half);
  CHECK(odd.estimate == 1);  // the prefix [1,1]

  auto full = upper_asymptotic(profile(Dfa::universal(ab), 64));
  CHECK(full.exact);
  CHECK(full.value == 1);

  auto f1 = set_of(ab, {"a", "b"}, 8);
  auto e = upper_asymptotic(profile(f1, 8));
  CHECK(e.estimate == 1);
  CHECK(e.window == WindowSpec(1, 1));
  CHECK_FALSE(e.exact);
}

TEST_CASE("upper Banach density") {
  auto oa = upper_banach(profile(odd_a(), 64), 8);
  CHECK(oa.exact);
  CHECK(oa.value == half);
  auto odd = upper_banach(profile(odd_length(ab), 64), 8);
  CHECK(odd.exact);
  CHECK(odd.value == half);
  CHECK(odd.estimate == Rational(5, 9));
  auto full = upper_banach(profile(Dfa::universal(ab), 64), 8);
  CHECK(full.value == 1);
  CHECK_THROWS(upper_banach(profile(odd_a(), 4), 5));
  CHECK_THROWS(upper_banach(profile(odd_a(), 4), 0));
}

TEST_CASE("Banach estimate dominates the asymptotic estimate") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    LayeredSet s(ab, 12);
    for (std::size_t n = 1; n <= 12; ++n)
      for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
        if (rng() % (1 + n % 3) == 0) s.insert(n, r);
    auto p = profile(s, 12);
    CHECK(upper_banach(p, 1).estimate >= upper_asymptotic(p).estimate);
  }
}

TEST_CASE("period detection") {
  auto odd = detect_period(profile(odd_length(ab), 64));
  CHECK(odd.holds);
  CHECK(odd.preperiod == 1);
  CHECK(odd.period == 2);
  auto oa = detect_period(profile(odd_a(), 64));
  CHECK(oa.holds);
  CHECK(oa.preperiod == 1);
  CHECK(oa.period == 1);
  std::mt19937_64 rng(8);
  LayeredSet s(ab, 12);
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
      if (rng() % 2) s.insert(n, r);
  CHECK_FALSE(detect_period(profile(s, 12)).holds);
}

TEST_CASE("ball density") {
  CHECK(ball_density(Dfa::universal(ab), 10) == 1);
  LayeredSet top(ab, 10);
  for (std::uint64_t r = 0; r < 1024; ++r) top.insert(10, r);
  CHECK(ball_density(top, 10) >= half);
  CHECK(ball_density(top, 10) == Rational(1024, 2046));
  CHECK(ball_density(odd_a(), 30) == half);
}

TEST_CASE("profile CSV") {
  std::ostringstream out;
  write_profile_csv(out, profile(odd_a(), 3));
  CHECK(out.str() == "n,count,total,density_num,density_den\n1,1,2,1,2\n2,2,4,1,2\n3,4,8,1,2\n");
}
