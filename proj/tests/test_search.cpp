#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "prodfree/productfree.hpp"
#include "prodfree/search.hpp"

using namespace prodfree;
using testing::strings_of;

namespace {
const Alphabet ab("ab");
}

TEST_CASE("objective parsing") {
  CHECK(parse_objective("mean") == Objective::mean);
  CHECK(parse_objective("total") == Objective::total);
  CHECK_THROWS(parse_objective("max"));
  CHECK(to_string(Objective::total) == "total");
}

TEST_CASE("search space indexing") {
  SearchSpace space(ab, 3);
  CHECK(space.size() == 14);
  CHECK(space.item(2, 0) == 2);
  CHECK(space.length(13) == 3);
  CHECK(space.rank(13) == 7);
  CHECK(space.layer_size(3) == 8);
  // "aab" = a . ab = aa . b
  CHECK(space.factorizations(space.item(3, 1)).size() == 2);
  CHECK(space.left_products(space.item(1, 0)).size() == 2 + 4);
  CHECK_THROWS(SearchSpace(ab, 0));
}

TEST_CASE("small optima") {
  auto r1 = max_productfree(ab, 1);
  CHECK(r1.value == 1);
  CHECK(r1.optimal);
  CHECK(strings_of(r1.best) == std::set<std::string>{"a", "b"});

  auto r2 = max_productfree(ab, 2);
  CHECK(r2.value == Rational(5, 8));
  CHECK(r2.optimal);
  CHECK(strings_of(r2.best) == std::set<std::string>{"a", "ab", "ba", "bb"});
}

TEST_CASE("search matches brute force") {
  struct Case {
    const char* alphabet;
    std::size_t horizon;
  };
  for (Case c : {Case{"ab", 1}, Case{"ab", 2}, Case{"ab", 3}, Case{"abc", 1}, Case{"abc", 2}}) {
    const Rational expected = oracle::max_productfree(c.alphabet, c.horizon);
    for (auto method : {SearchMethod::exhaustive, SearchMethod::branch_and_bound}) {
      auto r = max_productfree(Alphabet(c.alphabet), c.horizon, Objective::mean, 100'000'000, method);
      CHECK(r.value == expected);
      CHECK(r.optimal);
      CHECK_FALSE(check_explicit(r.best));
      CHECK(objective_value(r.best, Objective::mean) == r.value);
    }
  }
}

TEST_CASE("both methods return the same witness") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto e = max_productfree(ab, n, Objective::mean, 100'000'000, SearchMethod::exhaustive);
    auto b = max_productfree(ab, n, Objective::mean, 100'000'000, SearchMethod::branch_and_bound);
    CHECK(e.best == b.best);
  }
}

TEST_CASE("total objective") {
  auto r = max_productfree(ab, 2, Objective::total);
  CHECK(r.value == Rational(5, 4));
  CHECK(objective_value(r.best, Objective::total) == r.value);
}

TEST_CASE("regression optima") {
  // values produced by the exact search and frozen here
  CHECK(max_productfree(ab, 3).value == Rational(2, 3));
  CHECK(max_productfree(ab, 4).value == Rational(9, 16));
  CHECK(max_productfree(ab, 5).value == Rational(3, 5));
  CHECK(max_productfree(Alphabet("abc"), 2).value == Rational(11, 18));
}

TEST_CASE("budget cutoff keeps a valid set") {
  auto r = max_productfree(ab, 5, Objective::mean, 50, SearchMethod::branch_and_bound);
  CHECK_FALSE(r.optimal);
  CHECK_FALSE(check_explicit(r.best));
  CHECK(objective_value(r.best, Objective::mean) == r.value);
  CHECK(r.value <= Rational(3, 5));
}

TEST_CASE("search is deterministic") {
  auto a = max_productfree(ab, 4);
  auto b = max_productfree(ab, 4);
  CHECK(a.best == b.best);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("upper bounds") {
  SearchSpace space(ab, 2);
  PartialAssignment empty(space.size(), Decision::undecided);
  CHECK(upper_bound(space, empty, Objective::mean) >= Rational(5, 8));

  PartialAssignment f1 = empty;
  f1[space.item(1, 0)] = Decision::in;
  f1[space.item(1, 1)] = Decision::in;
  CHECK(upper_bound(space, f1, Objective::mean) <= Rational(1, 2));

  // fully decided: the bound is the objective
  PartialAssignment all(space.size(), Decision::out);
  for (const char* w : {"a", "ab", "ba", "bb"}) {
    auto word = Word::parse(ab, w);
    all[space.item(word.size(), rank(word))] = Decision::in;
  }
  CHECK(upper_bound(space, all, Objective::mean) == Rational(5, 8));

  PartialAssignment bad(space.size(), Decision::out);
  bad[space.item(1, 0)] = Decision::in;
  bad[space.item(2, 0)] = Decision::in;
  CHECK_THROWS(upper_bound(space, bad, Objective::mean));
}

TEST_CASE("upper bounds dominate every completion") {
  SearchSpace space(ab, 3);
  const auto items = oracle::ball("ab", 3);
  // decide the first four items every possible way
  for (unsigned prefix = 0; prefix < 16; ++prefix) {
    PartialAssignment pa(space.size(), Decision::undecided);
    oracle::StringSet fixed;
    for (std::size_t i = 0; i < 4; ++i) {
      pa[i] = (prefix >> i & 1) ? Decision::in : Decision::out;
      if (prefix >> i & 1) fixed.insert(items[i]);
    }
    if (!oracle::product_free(fixed)) continue;
    Rational best = 0;
    for (unsigned rest = 0; rest < (1u << 10); ++rest) {
      auto s = fixed;
      for (std::size_t i = 4; i < 14; ++i)
        if (rest >> (i - 4) & 1) s.insert(items[i]);
      if (oracle::product_free(s)) best = std::max(best, oracle::mean_objective(s, 2, 3));
    }
    CHECK(upper_bound(space, pa, Objective::mean) >= best);
  }
}
