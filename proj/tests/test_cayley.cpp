#include <gtest/gtest.h>

#include <algorithm>

#include "bigfree/cayley.hpp"
#include "bigfree/sampling.hpp"

using namespace bigfree;

namespace {

Word W(const char* text) { return Word::parse(text); }
RationalLexVector Q(std::initializer_list<Rational> dense) { return RationalLexVector(dense); }
RationalLexVector Q(const LexVector& x) { return RationalLexVector::convert(x); }
Letter A(std::uint32_t k, int sign = 1) {
  return Letter::generator(k, sign > 0 ? Sign::positive : Sign::negative);
}

// In a tree, the path between points on two different edges leaves each edge
// through one of its ends; take the best of the four end pairs.
RationalLexVector endpoint_oracle(const CayleyPoint& x, const CayleyPoint& y) {
  struct End {
    Word vertex;
    RationalLexVector offset;
  };
  auto ends = [](const CayleyPoint& p) {
    if (p.is_vertex()) return std::vector<End>{{p.w(), Q({})}};
    const RationalLexVector la = Q(letter_length(p.edge()->index, p.alphabet()));
    return std::vector<End>{{p.w(), p.t() * la},
                            {p.far_end(), (Rational(1) - p.t()) * la}};
  };
  if (!x.is_vertex() && !y.is_vertex() && x.w() == y.w() && x.edge() == y.edge()) {
    const Rational gap = x.t() > y.t() ? x.t() - y.t() : y.t() - x.t();
    return gap * Q(letter_length(x.edge()->index, x.alphabet()));
  }
  std::optional<RationalLexVector> best;
  for (const End& ex : ends(x)) {
    for (const End& ey : ends(y)) {
      RationalLexVector d = ex.offset + Q(word_dist(ex.vertex, ey.vertex)) + ey.offset;
      if (!best || d < *best) best = d;
    }
  }
  return *best;
}

}  // namespace

TEST(CayleyPoint, Construction) {
  EXPECT_TRUE(CayleyPoint::make(W("a2"), A(1), Rational(0)).is_vertex());
  EXPECT_EQ(CayleyPoint::make(W("a2"), A(1), Rational(1)), CayleyPoint::vertex(W("a2 a1")));
  EXPECT_THROW(CayleyPoint::make(W("a2"), A(1), Rational(3, 2)), DomainError);
  EXPECT_THROW(CayleyPoint::make(W("a1^-1"), A(1), Rational(1, 2)), DomainError);
  const CayleyPoint x = CayleyPoint::parse("(a2 ; a1^-1 ; 1/3)");
  EXPECT_EQ(to_string(x), "(a2 ; a1^-1 ; 1/3)");
  EXPECT_EQ(x.height(), Q({Rational(1, 3), 1}));
  EXPECT_THROW(CayleyPoint::parse("(a2 ; a1 ; 1/0)"), ParseError);
}

TEST(CayleyDist, Examples) {
  const CayleyPoint mid = CayleyPoint::make(Word(), A(1), Rational(1, 2));
  EXPECT_EQ(cayley_dist(mid, mid), Q({}));
  EXPECT_EQ(cayley_dist(mid, CayleyPoint::vertex(Word())), Q({Rational(1, 2)}));
  EXPECT_EQ(cayley_dist(CayleyPoint::vertex(W("a1 a2")), CayleyPoint::vertex(W("a3"))),
            Q(word_dist(W("a1 a2"), W("a3"))));
}

TEST(CayleyDist, MatchesEndpointOracle) {
  Sampler s(41);
  for (int i = 0; i < 5000; ++i) {
    const CayleyPoint x = s.cayley_point(6, 4);
    CayleyPoint y = s.cayley_point(6, 4);
    if (i % 4 == 0 && !x.is_vertex()) y = CayleyPoint::make(x.w(), *x.edge(), s.open_unit_rational());
    ASSERT_EQ(cayley_dist(x, y), endpoint_oracle(x, y)) << to_string(x) << " | " << to_string(y);
  }
}

TEST(CayleyAct, Examples) {
  const CayleyPoint x = CayleyPoint::make(Word(), A(1, -1), Rational(1, 3));
  EXPECT_EQ(cayley_act(Word(), x), x);
  EXPECT_EQ(cayley_act(W("a1"), x), CayleyPoint::make(Word(), A(1), Rational(2, 3)));
  EXPECT_EQ(cayley_act(W("a2"), CayleyPoint::make(Word(), A(1), Rational(1, 3))),
            CayleyPoint::make(W("a2"), A(1), Rational(1, 3)));
}

TEST(CayleyShortcuts, BranchFormulaAgreesWhenGuarded) {
  Sampler s(42);
  std::size_t guarded = 0;
  for (int i = 0; i < 5000; ++i) {
    const auto sc = cayley_shortcuts(s.cayley_point(6, 4), s.cayley_point(6, 4));
    guarded += sc.branch_guard ? 1 : 0;
    ASSERT_TRUE(sc.branch_agrees());
  }
  EXPECT_GT(guarded, 0u);
}

TEST(CayleyShortcuts, OnSegmentFormulaNeedsOrderedHeights) {
  // y sits on the segment [1, x]: X <= c and Y - X would be negative.
  const CayleyPoint x = CayleyPoint::make(W("a1"), A(2), Rational(1, 2));
  const CayleyPoint y = CayleyPoint::make(Word(), A(1), Rational(1, 2));
  const auto forward = cayley_shortcuts(y, x);
  EXPECT_TRUE(forward.on_segment_guard);
  EXPECT_TRUE(forward.on_segment_agrees());
  const auto swapped = cayley_shortcuts(x, y);
  EXPECT_TRUE(swapped.swapped_guard);
  EXPECT_TRUE(swapped.swapped_agrees());
}

TEST(CayleyShortcuts, OnSegmentGuardAloneAdmitsNegativeValues) {
  // Two points on the edge [1, a1]: c = L(a1) bounds both heights, so both
  // guards hold, but only Y - X with X <= Y is the distance.
  const CayleyPoint x = CayleyPoint::make(Word(), A(1), Rational(1, 2));
  const CayleyPoint y = CayleyPoint::make(Word(), A(1), Rational(1, 4));
  const auto sc = cayley_shortcuts(x, y);
  EXPECT_EQ(sc.exact, Q({Rational(1, 4)}));
  EXPECT_TRUE(sc.on_segment_guard);
  EXPECT_EQ(*sc.on_segment_value, Q({Rational(-1, 4)}));
  EXPECT_FALSE(sc.on_segment_agrees());
  EXPECT_TRUE(sc.swapped_guard);
  EXPECT_TRUE(sc.swapped_agrees());
}

TEST(EmbedCompare, Examples) {
  const auto a1 = AlphabetIndex::letter(1);
  const auto r = embed_compare(Word(), a1, rational_grid(100), offset_grid(a1, Alphabet::omega));
  EXPECT_TRUE(r.only_endpoints(Alphabet::omega, a1));
  ASSERT_EQ(r.coincidences.size(), 2u);

  const auto half = embed_compare(W("a2"), a1, {Rational(1, 2)}, offset_grid(a1, Alphabet::omega));
  EXPECT_TRUE(half.coincidences.empty());
  EXPECT_EQ(rational_grid(4).size(), 5u);
}

TEST(BallGraph, Counts) {
  const BallGraph zero = ball_graph(Word(), 0, 3);
  EXPECT_EQ(zero.vertices.size(), 1u);
  EXPECT_TRUE(zero.edges.empty());
  const BallGraph one = ball_graph(Word(), 1, 3);
  EXPECT_EQ(one.vertices.size(), 7u);
  EXPECT_EQ(one.edges.size(), 6u);
  const BallGraph two = ball_graph(Word(), 2, 3);
  EXPECT_EQ(two.vertices.size(), 37u);
  EXPECT_EQ(two.edges.size(), 36u);
  EXPECT_TRUE(two.is_tree());
  EXPECT_TRUE(std::is_sorted(two.vertices.begin(), two.vertices.end(), ShortLex{}));
  for (const auto& e : two.edges) {
    EXPECT_EQ(two.vertices[e.to], multiply(two.vertices[e.from], Word({Letter{e.label, Sign::positive}})));
  }
}

TEST(BallGraph, TranslatedCenter) {
  const BallGraph g = ball_graph(W("a1"), 1, 2);
  EXPECT_EQ(g.vertices.size(), 5u);
  EXPECT_NE(std::find(g.vertices.begin(), g.vertices.end(), Word()), g.vertices.end());
  EXPECT_TRUE(g.is_tree());
}

TEST(BallGraph, Exports) {
  const BallGraph g = ball_graph(Word(), 1, 1);
  EXPECT_EQ(g.to_dot(),
            "digraph ball {\n"
            "  n0 [label=\"1\", shape=doublecircle];\n"
            "  n1 [label=\"a1\"];\n"
            "  n2 [label=\"a1^-1\"];\n"
            "  n0 -> n1 [label=\"a1\"];\n"
            "  n2 -> n0 [label=\"a1\"];\n"
            "}\n");
  const std::string json = g.to_json();
  EXPECT_NE(json.find("\"center\": \"\""), std::string::npos);
  EXPECT_NE(json.find("\"label\": \"a1\""), std::string::npos);
}

TEST(BallGraph, ResourceLimit) {
  EXPECT_THROW(ball_graph(Word(), 12, 8, 1000), ResourceLimit);
}
