#include <gtest/gtest.h>

#include <random>

#include "bigfree/sampling.hpp"
#include "bigfree/tree.hpp"
#include "bigfree/words.hpp"

using namespace bigfree;

namespace {

Word W(const char* text) { return Word::parse(text); }
LexVector V(std::initializer_list<std::int64_t> dense) { return LexVector(dense); }

// Deletes a random adjacent cancelling pair until none remains.
Word deletion_oracle(const Word& w, std::mt19937_64& rng) {
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  while (true) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i].cancels(letters[i + 1])) spots.push_back(i);
    }
    if (spots.empty()) break;
    const std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                  letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
  return Word(std::move(letters));
}

// Occurrences of a_k or a_k^-1 counted letter by letter.
LexVector count_oracle(const Word& reduced) {
  std::vector<LexVector::Entry> entries;
  for (Letter l : reduced.letters()) entries.emplace_back(l.index, 1);
  return LexVector::from_entries(std::move(entries));
}

}  // namespace

TEST(WordParse, Examples) {
  const Word w = W("a1 a2^-1");
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], Letter::generator(1));
  EXPECT_EQ(w[1], Letter::generator(2, Sign::negative));
  EXPECT_TRUE(W("").empty());
  EXPECT_EQ(W("a3^2"), Word({Letter::generator(3), Letter::generator(3)}));
  EXPECT_EQ(to_string(W("a3^-2 a1")), "a3^-1 a3^-1 a1");
  EXPECT_EQ(to_string(W("")), "");
}

TEST(WordParse, Errors) {
  EXPECT_THROW(W("a0"), ParseError);
  EXPECT_THROW(W("a1^0"), ParseError);
  EXPECT_THROW(W("x1"), ParseError);
  EXPECT_THROW(W("a"), ParseError);
  EXPECT_THROW(W("b"), ParseError);  // TOP letter needs omega+1
  EXPECT_EQ(Word::parse("b a1", Alphabet::omega_plus_one).size(), 2u);
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(W("a1 a1^-1")), Word());
  EXPECT_EQ(reduce(W("a1 a2 a2^-1 a1")), W("a1 a1"));
  EXPECT_EQ(reduce(W("a2^-1 a1 a1^-1 a2 a3")), W("a3"));
}

TEST(Reduce, AgreesWithEveryDeletionOrder) {
  Sampler s(11);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 3000; ++i) {
    const Word w = s.word(24, 4);
    const Word r = reduce(w);
    EXPECT_TRUE(r.is_reduced());
    for (int k = 0; k < 3; ++k) ASSERT_EQ(deletion_oracle(w, rng), r) << to_string(w);
  }
}

TEST(Cancellation, Examples) {
  EXPECT_FALSE(verify_cancellation(W("a1 a1^-1 a2 a2^-1"), Cancellation::parse("1-2,3-4")));

  const auto crossing = verify_cancellation(W("a1 a2 a1^-1 a2^-1"), Cancellation::parse("1-3,2-4"));
  ASSERT_TRUE(crossing);
  EXPECT_EQ(crossing->condition, CancellationCondition::noncrossing);
  EXPECT_EQ(crossing->position, 1u);
  EXPECT_EQ(crossing->partner, 3u);
  EXPECT_EQ(crossing->detail, "([1,3]_T)* = {3,4,1} != {1,2,3}");

  const auto same = verify_cancellation(W("a1 a1"), Cancellation::parse("1-2"));
  ASSERT_TRUE(same);
  EXPECT_EQ(same->condition, CancellationCondition::inverse_pairing);

  // Position 2 sits inside [1,3] but is not paired.
  const auto gap = verify_cancellation(W("a1 a2 a1^-1"), Cancellation::parse("1-3"));
  ASSERT_TRUE(gap);
  EXPECT_EQ(gap->condition, CancellationCondition::complete);
}

TEST(Cancellation, MalformedPairings) {
  EXPECT_THROW(verify_cancellation(W("a1 a1^-1"), Cancellation::parse("1-3")), DomainError);
  EXPECT_THROW(verify_cancellation(W("a1 a1^-1"), Cancellation::parse("1-1")), DomainError);
  EXPECT_THROW(verify_cancellation(W("a1 a1^-1 a1"), Cancellation::parse("1-2,2-3")), DomainError);
  EXPECT_THROW(Cancellation::parse("1-"), ParseError);
}

TEST(Cancellation, Apply) {
  EXPECT_EQ(apply_cancellation(W("a1 a1^-1"), Cancellation::parse("1-2")), Word());
  EXPECT_EQ(apply_cancellation(W("a1 a2"), Cancellation()), W("a1 a2"));
  EXPECT_EQ(apply_cancellation(W("a1 a2 a2^-1 a3"), Cancellation::parse("2-3")), W("a1 a3"));
}

TEST(Cancellation, SampledCancellationsAreValid) {
  Sampler s(13);
  for (int i = 0; i < 3000; ++i) {
    const Word w = s.word(20, 3);
    const Cancellation c = s.cancellation(w);
    ASSERT_FALSE(verify_cancellation(w, c).has_value()) << to_string(w) << " / " << to_string(c);
    EXPECT_EQ(reduce(apply_cancellation(w, c)), reduce(w));
  }
}

TEST(GroupOps, Examples) {
  EXPECT_EQ(multiply(W("a1 a2"), W("a2^-1 a1")), W("a1 a1"));
  EXPECT_EQ(inverse(W("a1 a2^-1")), W("a2 a1^-1"));
  Sampler s(14);
  for (int i = 0; i < 500; ++i) {
    const Word w = s.reduced_word(10, 4);
    const Word v = s.reduced_word(10, 4);
    const Word u = s.reduced_word(10, 4);
    EXPECT_EQ(multiply(w, Word()), w);
    EXPECT_EQ(multiply(w, inverse(w)), Word());
    EXPECT_EQ(multiply(multiply(w, v), u), multiply(w, multiply(v, u)));
  }
}

TEST(Length, Examples) {
  EXPECT_EQ(length_vector(Word()), V({}));
  EXPECT_EQ(length_vector(W("a1 a2 a1^-1")), V({2, 1}));
  EXPECT_EQ(length_vector(W("a1 a1^-1 a3")), V({0, 0, 1}));
  EXPECT_EQ(word_dist(W("a1 a2"), W("a1 a2")), V({}));
  EXPECT_EQ(word_dist(Word(), W("a1")), V({1}));
  EXPECT_EQ(word_dist(W("a1 a2"), W("a1 a3")), V({0, 1, 1}));
}

TEST(Length, MatchesLetterCount) {
  Sampler s(15);
  for (int i = 0; i < 2000; ++i) {
    const Word w = s.word(20, 6);
    ASSERT_EQ(length_vector(w), count_oracle(reduce(w)));
  }
}

TEST(Gromov, Examples) {
  EXPECT_EQ(gromov(W("a1 a2"), W("a1 a3")), V({1}));
  EXPECT_EQ(gromov(W("a2 a1"), W("a2 a1")), V({1, 1}));
  EXPECT_EQ(gromov(W("a1"), W("a1^-1")), V({}));
  EXPECT_EQ(gromov_doubled(W("a1 a2"), W("a1 a3")), V({2}));
}

TEST(CommonPrefix, Examples) {
  EXPECT_EQ(common_prefix(W("a1 a2"), W("a1 a3")), W("a1"));
  EXPECT_EQ(common_prefix(W("a1 a2"), W("a1 a2")), W("a1 a2"));
  EXPECT_EQ(common_prefix(W("a1"), W("a2")), Word());
  EXPECT_THROW(common_prefix(W("a1 a1^-1"), W("a1")), DomainError);
}

TEST(Subwords, Examples) {
  EXPECT_TRUE(is_subword(Word(), W("a1 a2")));
  EXPECT_TRUE(is_subword(W("a1"), W("a1 a2")));
  EXPECT_FALSE(is_subword(W("a2"), W("a1 a2")));
  EXPECT_EQ(subwords(Word()), std::vector<Word>{Word()});
  EXPECT_EQ(subwords(W("a2 a1")), (std::vector<Word>{Word(), W("a2"), W("a2 a1")}));
  EXPECT_EQ(subwords(W("a1 a1")), (std::vector<Word>{Word(), W("a1"), W("a1 a1")}));
}

TEST(Subwords, CriterionMatchesPrefixes) {
  // Exhaustive: v is a subword of w iff v is a literal prefix of w.
  const auto words = all_reduced_words(3, 2);
  for (const Word& w : words) {
    for (const Word& v : words) {
      const bool literal = v.size() <= w.size() && w.prefix(v.size()) == v;
      ASSERT_EQ(is_subword(v, w), literal) << to_string(v) << " in " << to_string(w);
    }
  }
}

TEST(YPoint, Examples) {
  EXPECT_EQ(y_point(Word(), W("a1 a2"), W("a1 a3")), W("a1"));
  EXPECT_EQ(y_point(W("a2"), W("a2"), W("a1")), W("a2"));
  EXPECT_EQ(y_point(W("a1"), W("a1 a2"), Word()), W("a1"));
}

TEST(YPoint, BruteForceMedian) {
  // The unique u with d(v,x) = d(v,u) + d(u,x) and likewise for the other
  // two pairs, searched over a ball containing every candidate.
  const auto ball = all_reduced_words(3, 2);
  Sampler s(16);
  for (int i = 0; i < 200; ++i) {
    const Word v = s.reduced_word(3, 2);
    const Word x = s.reduced_word(3, 2);
    const Word y = s.reduced_word(3, 2);
    std::vector<Word> medians;
    for (const Word& u : ball) {
      if (word_dist(v, x) == word_dist(v, u) + word_dist(u, x) &&
          word_dist(v, y) == word_dist(v, u) + word_dist(u, y) &&
          word_dist(x, y) == word_dist(x, u) + word_dist(u, y)) {
        medians.push_back(u);
      }
    }
    ASSERT_EQ(medians.size(), 1u);
    EXPECT_EQ(y_point(v, x, y), medians.front());
  }
}

TEST(Streams, Truncations) {
  EXPECT_EQ(WordStream::harmonic().truncate(3), W("a1 a2 a3"));
  EXPECT_EQ(WordStream::reverse_harmonic().truncate(3), W("a3 a2 a1"));
  EXPECT_EQ(WordStream::harmonic().truncate(0), Word());
  EXPECT_EQ(WordStream::reverse_harmonic().truncate(0), Word());
}

TEST(Streams, MultiplicityBoundIsEnforced) {
  const WordStream constant([](std::size_t) { return Letter::generator(1); },
                            StreamOrientation::forward, 2);
  EXPECT_NO_THROW(constant.truncate(2));
  EXPECT_THROW(constant.truncate(3), DomainError);
}

TEST(ShortLexOrder, LengthThenLetters) {
  const auto words = all_reduced_words(3, 2);
  EXPECT_EQ(words.size(), 1u + 4u + 12u + 36u);
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end(), ShortLex{}));
}
