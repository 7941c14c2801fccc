#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "prodfree/productfree.hpp"

using namespace prodfree;
using testing::odd_a;
using testing::odd_length;
using testing::set_of;
using testing::strings_of;

namespace {
const Alphabet ab("ab");
}

TEST_CASE("explicit check") {
  auto w = check_explicit(LayeredSet::full(ab, 2));
  REQUIRE(w);
  CHECK(w->x.str() == "a");
  CHECK(w->y.str() == "a");
  CHECK(w->z.str() == "aa");
  CHECK_FALSE(check_explicit(dfa_truncate(odd_length(ab), 9)));
  CHECK_FALSE(check_explicit(set_of(ab, {"a", "ab"}, 3)));
  CHECK_FALSE(check_explicit(LayeredSet(ab, 4)));
}

TEST_CASE("explicit check agrees with the pair oracle") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 300; ++t) {
    const std::string alpha = t % 3 == 0 ? "abc" : "ab";
    Alphabet a(alpha);
    const std::size_t horizon = alpha.size() == 3 ? 4 : 6;
    LayeredSet s(a, horizon);
    const unsigned sparsity = 2 + rng() % 8;
    for (std::size_t n = 1; n <= horizon; ++n)
      for (std::uint64_t r = 0; r < checked_pow(a.size(), n); ++r)
        if (rng() % sparsity == 0) s.insert(n, r);
    auto strs = strings_of(s);
    auto w = check_explicit(s);
    CHECK(w.has_value() == !oracle::product_free(strs));
    if (w) {
      CHECK(concat(w->x, w->y) == w->z);
      CHECK(s.contains(w->x));
      CHECK(s.contains(w->y));
      CHECK(s.contains(w->z));
      // least z in shortlex order among all witnesses
      std::string least;
      for (const auto& x : strs)
        for (const auto& y : strs)
          if (strs.count(x + y)) {
            auto z = x + y;
            if (least.empty() || z.size() < least.size() || (z.size() == least.size() && z < least))
              least = z;
          }
      CHECK(w->z.str() == least);
    }
  }
}

TEST_CASE("regular check") {
  for (const char* g : {"a", "b", "ab"}) {
    CHECK_FALSE(check_regular(odd_occurrence(GammaSpec(ab, g))));
  }
  Alphabet abc("abc");
  for (const char* g : {"a", "b", "c", "ab", "ac", "bc", "abc"}) {
    CHECK_FALSE(check_regular(odd_occurrence(GammaSpec(abc, g))));
  }
  std::vector<Word> a{Word::parse(ab, "a")};
  const Dfa starts_a = dfa_union(dfa_concat(Dfa::from_words(ab, a), Dfa::universal(ab)),
                                 Dfa::from_words(ab, a));
  auto w = check_regular(starts_a);
  REQUIRE(w);
  CHECK(w->z.str() == "aa");
  auto wf = check_regular(Dfa::universal(ab));
  REQUIRE(wf);
  CHECK(wf->z.size() == 2);
  CHECK(concat(wf->x, wf->y) == wf->z);
}

TEST_CASE("regular and explicit checks agree on truncations") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t states = 1 + rng() % 4;
    std::vector<bool> acc(states);
    std::vector<State> delta(states * 2);
    for (std::size_t s = 0; s < states; ++s) acc[s] = rng() % 2;
    for (auto& x : delta) x = rng() % states;
    Dfa d(ab, states, 0, acc, delta);
    auto reg = check_regular(d);
    if (reg) {
      CHECK(d.accepts(reg->x));
      CHECK(d.accepts(reg->y));
      CHECK(d.accepts(reg->z));
      CHECK(concat(reg->x, reg->y) == reg->z);
      // the shortest z is found by the explicit check on a large enough truncation
      auto ex = check_explicit(dfa_truncate(d, reg->z.size()));
      REQUIRE(ex);
      CHECK(ex->z.size() == reg->z.size());
    } else {
      CHECK_FALSE(check_explicit(dfa_truncate(d, 10)));
    }
  }
}

TEST_CASE("pairwise inequality") {
  auto odd = pairwise_inequality(odd_length(ab), 6);
  REQUIRE_FALSE(odd.empty());
  CHECK(odd[0].m == 1);
  CHECK(odd[0].n == 1);
  CHECK(odd[0].lhs == 1);
  CHECK_FALSE(odd[0].violated);
  for (const auto& row : pairwise_inequality(odd_a(), 12)) CHECK(row.lhs == Rational(3, 4));
  auto full = pairwise_inequality(LayeredSet::full(ab, 4), 4);
  CHECK(full[0].lhs == 2);
  CHECK(full[0].violated);
  // m <= n and m + n <= H
  CHECK(pairwise_inequality(odd_a(), 6).size() == 9);
}

TEST_CASE("product-free sets satisfy the pairwise inequality") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = greedy_random_productfree(ab, 10, seed);
    for (const auto& row : pairwise_inequality(s, 10)) CHECK_FALSE(row.violated);
  }
}
