#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "bigfree/ordered_abelian.hpp"

using namespace bigfree;

namespace {

LexVector V(std::initializer_list<std::int64_t> dense) { return LexVector(dense); }

// Dense oracle: pad to a fixed width and compare with the standard library.
std::vector<std::int64_t> dense(const LexVector& x, std::size_t width) {
  std::vector<std::int64_t> out(width, 0);
  for (const auto& [index, value] : x.entries()) out[index.rank() - 1] = value;
  return out;
}

int dense_compare(const LexVector& x, const LexVector& y) {
  const auto a = dense(x, 6);
  const auto b = dense(y, 6);
  if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) return -1;
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) return 1;
  return 0;
}

int as_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST(LexCompare, Examples) {
  EXPECT_EQ(compare(V({}), V({})), std::strong_ordering::equal);
  // The witness between 0 and the first basis vector.
  EXPECT_EQ(compare(V({1, -1}), V({1})), std::strong_ordering::less);
  EXPECT_EQ(compare(V({0, 2}), V({1, -5})), std::strong_ordering::less);
  EXPECT_LT(V({}), V({1, -1}));
}

TEST(LexCompare, MatchesDenseOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> width(0, 6);
  for (int i = 0; i < 20000; ++i) {
    std::vector<LexVector::Entry> xe, ye;
    for (int k = width(rng); k > 0; --k) xe.emplace_back(AlphabetIndex::letter(k), coord(rng));
    for (int k = width(rng); k > 0; --k) ye.emplace_back(AlphabetIndex::letter(k), coord(rng));
    const auto x = LexVector::from_entries(xe);
    const auto y = LexVector::from_entries(ye);
    ASSERT_EQ(as_int(x <=> y), dense_compare(x, y)) << to_string(x) << " " << to_string(y);
    ASSERT_EQ(x == y, dense(x, 6) == dense(y, 6));
  }
}

TEST(LexArithmetic, Examples) {
  EXPECT_EQ(V({1, 2}) + V({0, -2}), V({1}));
  EXPECT_EQ(V({3, 4}) + V({}), V({3, 4}));
  EXPECT_EQ(V({1}) + V({-1, 1}), V({0, 1}));
  EXPECT_EQ(abs(V({})), V({}));
  EXPECT_EQ(abs(V({-1, 5})), V({1, -5}));
  EXPECT_EQ(abs(V({0, 3})), V({0, 3}));
  EXPECT_EQ(half_exact(V({2, -4})), V({1, -2}));
  EXPECT_EQ(half_exact(V({})), V({}));
  EXPECT_THROW(half_exact(V({1})), HalfError);
}

TEST(LexArithmetic, ZeroCoordinatesAreNotStored) {
  const LexVector x = V({0, 0, 3}) - V({0, 0, 3});
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(to_string(x), "[]");
  EXPECT_FALSE(x.leading_index().has_value());
}

TEST(LexArithmetic, OverflowIsDetected) {
  const LexVector big = LexVector::unit(AlphabetIndex::letter(1), Alphabet::omega,
                                       std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + big, std::overflow_error);
  EXPECT_THROW(std::int64_t{2} * big, std::overflow_error);
  const LexVector low = LexVector::unit(AlphabetIndex::letter(1), Alphabet::omega,
                                       std::numeric_limits<std::int64_t>::min());
  EXPECT_THROW(-low, std::overflow_error);
}

TEST(LexArithmetic, OrderedGroupLaws) {
  // Exhaustive over support {a1, a2} with entries in [-2, 2].
  std::vector<LexVector> all;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) all.push_back(V({a, b}));
  for (const auto& x : all) {
    EXPECT_EQ(x + (-x), V({}));
    for (const auto& y : all) {
      EXPECT_EQ(x + y, y + x);
      if (x < y) {
        for (const auto& z : all) EXPECT_LT(x + z, y + z);
      }
    }
  }
}

TEST(LexText, RoundTrip) {
  for (const char* text : {"[]", "[1]", "[0,1]", "[1,-1]", "[0,0,3,0,-2]"}) {
    EXPECT_EQ(to_string(parse_lex_vector(text)), text);
  }
  EXPECT_EQ(to_string(parse_lex_vector(" [ 1 , -1 , 0 ] ")), "[1,-1]");
  EXPECT_EQ(to_string(parse_lex_vector("[1;TOP=2]", Alphabet::omega_plus_one)),
            "[1;TOP=2]");
  EXPECT_EQ(to_string(parse_lex_vector("[;TOP=1]", Alphabet::omega_plus_one)),
            "[;TOP=1]");
}

TEST(LexText, Errors) {
  EXPECT_THROW(parse_lex_vector("[1,"), ParseError);
  EXPECT_THROW(parse_lex_vector("1,2"), ParseError);
  EXPECT_THROW(parse_lex_vector("[x]"), ParseError);
  EXPECT_THROW(parse_lex_vector("[1]junk"), ParseError);
  // TOP only exists in omega+1.
  EXPECT_ANY_THROW(parse_lex_vector("[;TOP=1]"));
}

TEST(LexInstances, TopIsAboveEveryNaturalIndex) {
  const Alphabet w1 = Alphabet::omega_plus_one;
  const auto b = LexVector::unit(AlphabetIndex::top(), w1);
  const auto a_far = LexVector::unit(AlphabetIndex::letter(1000000), w1);
  // L(b) has its coordinate last, so it is infinitesimal against every a_k.
  EXPECT_LT(b, a_far);
  EXPECT_GT(b, LexVector(w1));
  EXPECT_LT(AlphabetIndex::letter(1000000), AlphabetIndex::top());
  EXPECT_FALSE(AlphabetIndex::top().successor().has_value());
  EXPECT_EQ(AlphabetIndex::letter(4).successor(), AlphabetIndex::letter(5));
}

TEST(LexInstances, MixingInstancesThrows) {
  const LexVector x = V({1});
  const LexVector y({1}, Alphabet::omega_plus_one);
  EXPECT_THROW((void)(x == y), InstanceMismatch);
  EXPECT_THROW((void)(x < y), InstanceMismatch);
  EXPECT_THROW(x + y, InstanceMismatch);
  EXPECT_THROW(LexVector::unit(AlphabetIndex::top()), InstanceMismatch);
}

TEST(RationalLex, ArithmeticAndText) {
  const auto half = RationalLexVector::unit(AlphabetIndex::letter(1), Alphabet::omega,
                                            Rational(1, 2));
  EXPECT_EQ(to_string(half + half), "[1]");
  EXPECT_EQ(to_string(half), "[1/2]");
  EXPECT_EQ(to_string(parse_rational_lex_vector("[1/2,-3/4]")), "[1/2,-3/4]");
  EXPECT_EQ(to_string(parse_rational_lex_vector("[2/4]")), "[1/2]");
  EXPECT_THROW(parse_rational_lex_vector("[1/0]"), ParseError);
  EXPECT_LT(half, RationalLexVector::convert(V({1})));
  EXPECT_GT(half, RationalLexVector::convert(V({0, 1000})));
}
