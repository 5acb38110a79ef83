#include <gtest/gtest.h>

#include "bigfree/sampling.hpp"
#include "bigfree/topology.hpp"

using namespace bigfree;

namespace {

Word W(const char* text) { return Word::parse(text); }
LexVector V(std::initializer_list<std::int64_t> dense) { return LexVector(dense); }
AlphabetIndex I(std::uint32_t k) { return AlphabetIndex::letter(k); }

// Letter-by-letter definition: v = w u with every letter of u above a.
bool letter_ball_oracle(const Word& w, AlphabetIndex a, const Word& v) {
  const Word u = multiply(inverse(w), v);
  for (Letter l : u.letters()) {
    if (l.index <= a) return false;
  }
  return true;
}

}  // namespace

TEST(LetterBall, Examples) {
  EXPECT_TRUE(in_letter_ball(W("a1 a2"), I(2), W("a1 a2")));
  EXPECT_TRUE(in_letter_ball(W("a1"), I(3), W("a1 a5")));
  EXPECT_FALSE(in_letter_ball(W("a1"), I(3), W("a1 a2")));
  EXPECT_FALSE(in_letter_ball(W("a1"), I(3), W("a1 a3")));  // strictly greater
}

TEST(LetterBall, MatchesDefinition) {
  const auto words = all_reduced_words(3, 4);
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (std::size_t i = 0; i < words.size(); i += 7) {
      for (const Word& v : words) {
        ASSERT_EQ(in_letter_ball(words[i], I(k), v), letter_ball_oracle(words[i], I(k), v));
      }
    }
  }
}

TEST(MetricBall, Examples) {
  EXPECT_TRUE(in_metric_ball(W("a1"), V({0, 1}), W("a1")));
  EXPECT_FALSE(in_metric_ball(Word(), V({0, 1}), W("a2")));
  EXPECT_TRUE(in_metric_ball(Word(), V({1}), W("a2^3 a5")));
  EXPECT_THROW(in_metric_ball(Word(), V({}), W("a1")), DomainError);
  EXPECT_THROW(in_metric_ball(Word(), V({-1, 5}), W("a1")), DomainError);
}

TEST(MetricBall, UnitEpsilon) {
  EXPECT_EQ(unit_epsilon(I(3)), V({0, 0, 1}));
}

TEST(Inclusions, SmallExhaustive) {
  // B(w, eps_a) in B(w, a), and B(w, a+1) in B(w, eps) for eps leading at a.
  const auto words = all_reduced_words(2, 4);
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const LexVector eps = unit_epsilon(I(k)) - LexVector::unit(I(k + 1), Alphabet::omega, 5);
    for (const Word& w : words) {
      for (const Word& v : words) {
        if (in_metric_ball(w, unit_epsilon(I(k)), v)) ASSERT_TRUE(in_letter_ball(w, I(k), v));
        if (in_letter_ball(w, I(k + 1), v)) ASSERT_TRUE(in_metric_ball(w, eps, v));
      }
    }
  }
}
