#pragma once

// The big Cayley graph of BF(o) with its R^o metric, realized over exact
// rationals: a point is a vertex w or (w, a^p, t) with 0 < t < 1, the point a
// fraction t of the way along the real edge from w to w a^p.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bigfree/ordered_abelian.hpp"
#include "bigfree/words.hpp"

namespace bigfree {

class CayleyPoint {
 public:
  static CayleyPoint vertex(Word w);
  // t = 0 gives the vertex w and t = 1 the vertex w a^p. Otherwise requires
  // 0 < t < 1 and w not ending in a^-p.
  static CayleyPoint make(Word w, Letter edge, Rational t);

  // `(<word> ; a<k>^<+-1> ; <p/q>)` or a bare word.
  static CayleyPoint parse(std::string_view text,
                           Alphabet alphabet = Alphabet::omega);

  const Word& w() const { return w_; }
  const std::optional<Letter>& edge() const { return edge_; }
  const Rational& t() const { return t_; }
  bool is_vertex() const { return !edge_.has_value(); }
  Alphabet alphabet() const { return w_.alphabet(); }

  // L(w) + t L(a): distance from the identity.
  RationalLexVector height() const;
  // The far end of the edge, w a^p (w itself for a vertex).
  Word far_end() const;

  friend bool operator==(const CayleyPoint&, const CayleyPoint&) = default;

 private:
  CayleyPoint(Word w, std::optional<Letter> edge, Rational t)
      : w_(std::move(w)), edge_(edge), t_(t) {}

  Word w_;
  std::optional<Letter> edge_;
  Rational t_{0};
};

std::string to_string(const CayleyPoint& x);

// X + Y - 2 min{X, Y, c(w a^p, v b^q)} with X, Y the heights.
RationalLexVector cayley_dist(const CayleyPoint& x, const CayleyPoint& y);

// u.(w, a^p, t) = (uw, a^p, t), or (uw a^p, a^-p, 1 - t) when uw ends in a^-p.
CayleyPoint cayley_act(const Word& u, const CayleyPoint& x);

// The two shortcut forms of the distance, each with its guard:
//   branch:     c <= L(w) and c <= L(v)  =>  L(a^-1 w^-1 v b) - (1-t)L(a) - (1-s)L(b)
//   on-segment: X <= c                   =>  Y - X
//   (and the same with x, y swapped).
struct CayleyShortcuts {
  RationalLexVector exact;
  bool branch_guard = false;
  std::optional<RationalLexVector> branch_value;
  bool on_segment_guard = false;
  std::optional<RationalLexVector> on_segment_value;
  bool swapped_guard = false;
  std::optional<RationalLexVector> swapped_value;

  bool branch_agrees() const { return !branch_guard || *branch_value == exact; }
  bool on_segment_agrees() const {
    return !on_segment_guard || *on_segment_value == exact;
  }
  bool swapped_agrees() const {
    return !swapped_guard || *swapped_value == exact;
  }
};

// The branch shortcut needs edge data on both sides; it is skipped for
// vertices.
CayleyShortcuts cayley_shortcuts(const CayleyPoint& x, const CayleyPoint& y);

struct Coincidence {
  Rational t;   // parameter on the Cayley edge
  LexVector s;  // offset on the Z^o edge
};

struct EmbeddingReport {
  std::vector<Coincidence> coincidences;
  std::size_t comparisons = 0;
  // Exactly t = 0 <-> s = [] and t = 1 <-> s = L(a).
  bool only_endpoints(Alphabet alphabet, AlphabetIndex a) const;
};

// Compares the two embeddings of the edge [w, w a] into [0, L(wa)]:
// L(w) + t L(a) for t in t_grid against L(w) + s for s in s_grid.
EmbeddingReport embed_compare(const Word& w, AlphabetIndex a,
                              const std::vector<Rational>& t_grid,
                              const std::vector<LexVector>& s_grid);

// k/n for k = 0..n.
std::vector<Rational> rational_grid(std::size_t n);

// Points of [0, L(a)]: both endpoints plus y and L(a) - y for every y > 0
// supported on the `depth` indices after a with entries in [-range, range].
std::vector<LexVector> offset_grid(AlphabetIndex a, Alphabet alphabet,
                                   std::uint32_t depth = 3, int range = 2);

struct BallEdge {
  std::size_t from;  // vertex index; to = from . label
  std::size_t to;
  AlphabetIndex label;
};

struct BallGraph {
  Word center;
  std::vector<Word> vertices;  // shortlex order
  std::vector<BallEdge> edges;

  bool is_tree() const;
  std::string to_dot() const;
  std::string to_json() const;
};

// All v = center u with u reduced, |u| <= max_len, letters of index <=
// max_letter, joined by their labelled Cayley edges. Throws ResourceLimit when
// the ball would exceed max_vertices.
BallGraph ball_graph(const Word& center, std::size_t max_len,
                     std::uint32_t max_letter,
                     std::size_t max_vertices = 1'000'000);

}  // namespace bigfree
