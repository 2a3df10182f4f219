#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "support.hpp"
#include "viconj/delta_reduction.hpp"
#include "viconj/text.hpp"

using namespace viconj;
using viconj::testing::random_word;
using viconj::testing::Rng;

namespace {

Word x(const char* text) { return parse_word(text, {Alphabet::of_rank(3), {}}); }

const Word example_delta = x("x1^-1 x2^-1 x3 x2 x1");
const Word example_v = x("x1^-1 x2^-1 x3^3 x2 x1^2");

std::size_t conj_len(const Word& delta, const Word& v, std::int64_t k) {
  const Word d = delta.power(k);
  return (d.inverse() * v * d).size();
}

}  // namespace

TEST(IsDeltaReduced, Examples) {
  EXPECT_TRUE(is_delta_reduced(x("x2"), x("x1")));
  EXPECT_FALSE(is_delta_reduced(x("x2"), x("x2^-1 x1 x2")));
  EXPECT_FALSE(is_delta_reduced(example_delta, example_v));
  EXPECT_TRUE(is_delta_reduced(Word{}, x("x2^-1 x1 x2")));
}

TEST(DeltaReduce, Examples) {
  DeltaConjugate r = delta_reduce(x("x2"), x("x2^-1 x1 x2"));
  EXPECT_EQ(r.word, x("x1"));
  EXPECT_EQ(r.exponent, -1);

  r = delta_reduce(example_delta, example_v);
  EXPECT_EQ(r.word, x("x2^-1 x3^3 x2 x1"));
  EXPECT_EQ(r.exponent, 3);

  r = delta_reduce(Word{}, example_v);
  EXPECT_EQ(r.word, example_v);
  EXPECT_EQ(r.exponent, 0);
}

TEST(DeltaReduce, WorkedExamplePlateau) {
  EXPECT_EQ(delta_length_profile(example_delta, example_v, 0, 3),
            (std::vector<std::size_t>{8, 10, 10, 6}));
  const DeltaConjugate greedy = delta_reduce_greedy(example_delta, example_v);
  EXPECT_EQ(greedy.word.size(), 8u);
  EXPECT_EQ(greedy.exponent, 0);
}

TEST(DeltaReduce, ProfileIsReportedInAscendingOrder) {
  const DeltaOrbit orbit = delta_orbit(example_delta, example_v);
  ASSERT_FALSE(orbit.profile.empty());
  for (std::size_t i = 1; i < orbit.profile.size(); ++i) {
    EXPECT_EQ(orbit.profile[i].exponent, orbit.profile[i - 1].exponent + 1);
  }
  for (const auto& p : orbit.profile) {
    EXPECT_EQ(p.length, conj_len(example_delta, example_v, p.exponent));
  }
  EXPECT_EQ(orbit.min_length, 6u);
}

TEST(DeltaReduce, MatchesBruteForceScan) {
  Rng rng(31);
  for (int i = 0; i < 400; ++i) {
    const Word v = random_word(rng, 3, 8);
    Word delta = random_word(rng, 3, 5);
    if (i % 2 == 0) {
      // Non-cyclically-reduced deltas are the interesting case.
      const Word s = random_word(rng, 3, 3);
      delta = s * delta * s.inverse();
    }
    const DeltaConjugate r = delta_reduce(delta, v);
    const Word d = delta.power(r.exponent);
    EXPECT_EQ(d.inverse() * v * d, r.word);

    const std::int64_t bound = static_cast<std::int64_t>(v.size()) + 2;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::int64_t k = -bound; k <= bound; ++k) best = std::min(best, conj_len(delta, v, k));
    EXPECT_EQ(r.word.size(), best) << format_word(v) << " / " << format_word(delta);
    EXPECT_EQ(is_delta_reduced(delta, v), v.size() == best);
  }
}

TEST(DeltaReduce, GreedyAgreesForCyclicallyReducedDelta) {
  Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const Word v = random_word(rng, 3, 8);
    const Word delta = cyclically_reduce(random_word(rng, 3, 5)).core;
    EXPECT_EQ(delta_reduce_greedy(delta, v).word.size(), delta_reduce(delta, v).word.size());
  }
}

TEST(DeltaReduce, TailIsEventuallyIncreasing) {
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const Word v = random_word(rng, 3, 8);
    const Word delta = random_word(rng, 3, 5);
    const DeltaOrbit orbit = delta_orbit(delta, v);
    if (orbit.commutes || orbit.profile.size() < 3) continue;
    const auto& p = orbit.profile;
    EXPECT_GT(p.back().length, p[p.size() - 2].length);
    EXPECT_GT(p.front().length, p[1].length);
  }
}

TEST(DeltaReduce, TieBreakPrefersSmallPositiveExponent) {
  // x1 commutes with delta = x1: everything is a minimum, and k = 0 wins.
  DeltaConjugate r = delta_reduce(x("x1"), x("x1^2"));
  EXPECT_EQ(r.exponent, 0);
  // delta = x1 x2: the conjugates by delta^0 and delta^1 of x2 x1 ... have equal length.
  const Word delta = x("x1 x2");
  const Word v = x("x2 x3 x2^-1");
  r = delta_reduce(delta, v);
  EXPECT_EQ(r.word.size(), delta_orbit(delta, v).min_length);
  for (const auto& c : delta_orbit(delta, v).minimal) {
    EXPECT_TRUE(std::llabs(r.exponent) < std::llabs(c.exponent) ||
                (std::llabs(r.exponent) == std::llabs(c.exponent) && r.exponent >= c.exponent));
  }
}
