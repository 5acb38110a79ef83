#pragma once

// Combinatorial coordinates for T(BF(omega)). Every tree point is either a
// word v or lies strictly inside exactly one edge [w, w a^p], written as the
// triple (w, a^p, t) with [] < t < L(a). The quotient of the tree by the
// group is the wedge of the Z^o-circles C_a of circumference L(a).

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bigfree/ordered_abelian.hpp"
#include "bigfree/tree.hpp"
#include "bigfree/words.hpp"

namespace bigfree {

class EdgeTriple {
 public:
  // Canonical only: w reduced, w does not end in edge^-1, [] < t < L(edge).
  EdgeTriple(Word w, Letter edge, LexVector t);

  const Word& w() const { return w_; }
  Letter edge() const { return edge_; }
  const LexVector& t() const { return t_; }
  Alphabet alphabet() const { return w_.alphabet(); }

  friend bool operator==(const EdgeTriple&, const EdgeTriple&) = default;

 private:
  Word w_;
  Letter edge_;
  LexVector t_;
};

// A vertex (t = 0) or an interior edge point.
using TriplePoint = std::variant<Word, EdgeTriple>;

// `(<word> ; a<k>^<+-1> ; <t-vector>)`, or a bare word.
TriplePoint parse_triple_point(std::string_view text,
                               Alphabet alphabet = Alphabet::omega);
std::string to_string(const EdgeTriple& e);
std::string to_string(const TriplePoint& e);

// Builds the canonical form of (w, edge, t): the bare word when t = 0.
TriplePoint make_triple_point(Word w, Letter edge, LexVector t);

// Locates <n, g> on its edge by the first-subword search: take the first
// nonzero index of n as a threshold, scan the letters of g at or below the
// threshold in word order for the first prefix of length >= n, and when none
// qualifies raise the threshold to the first index where the last scanned
// prefix still falls short of n.
TriplePoint to_triple(const TreePoint& p);

// word v -> <L(v), v>; (w, a^p, t) -> <L(w) + t, w a^p>.
TreePoint from_triple(const TriplePoint& e);

// u.(w, a^p, t) = (uw, a^p, t), unless uw ends in a^-p, in which case it is
// (uw a^p, a^-p, L(a) - t).
TriplePoint act_triple(const Word& u, const TriplePoint& e);

struct TripleDistance {
  LexVector exact;       // tree metric
  LexVector simplified;  // L(w^-1 v) + t + s, or |t - s| on a shared edge
  bool agrees() const { return exact == simplified; }
};

TripleDistance triple_dist(const TriplePoint& e1, const TriplePoint& e2);

enum class EdgeConfiguration { same_edge, sibling, nested, other };

std::string to_string(EdgeConfiguration configuration);

// same_edge: equal (w, a^p). sibling: distinct edges leaving the same w.
// nested: one edge's far endpoint is the other edge's base (w a^p = v).
EdgeConfiguration classify(const EdgeTriple& e1, const EdgeTriple& e2);

// A point on the circle C_a, s in [0, L(a)). s = [] is the wedge point shared
// by every circle; it carries no circle.
class CirclePoint {
 public:
  static CirclePoint wedge(Alphabet alphabet = Alphabet::omega);
  CirclePoint(AlphabetIndex circle, LexVector s);

  // `C(a<k>) @ <s-vector>`; the wedge point is `C(*) @ []`.
  static CirclePoint parse(std::string_view text,
                           Alphabet alphabet = Alphabet::omega);

  const std::optional<AlphabetIndex>& circle() const { return circle_; }
  const LexVector& s() const { return s_; }
  bool is_wedge() const { return !circle_.has_value(); }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  explicit CirclePoint(Alphabet alphabet) : s_(alphabet) {}

  std::optional<AlphabetIndex> circle_;
  LexVector s_;
};

std::string to_string(const CirclePoint& x);

// (., a, +1, t) -> t in C_a; (., a, -1, t) -> L(a) - t; vertices -> wedge.
CirclePoint project(const TriplePoint& e);

// min{|s - t|, L(a) - |s - t|} on one circle; across circles, the wedge
// metric routes through the wedge point.
LexVector circle_dist(const CirclePoint& x, const CirclePoint& y);

// A group element u with u.e1 = e2, constructed as v w^-1 (matching edge
// sign) or v a^-p w^-1 (opposite sign). Empty iff the projections differ.
std::optional<Word> orbit_witness(const TriplePoint& e1, const TriplePoint& e2);

struct InstabilityRow {
  std::size_t k;
  Word word;          // a_k ... a_2 a_1
  TriplePoint point;  // canonical form of <L(b), word>
  std::optional<Letter> edge_letter;
};

// In omega+1, the point at distance L(b) along the truncations of the reverse
// stream ... a_3 a_2 a_1. The edge letter is a fresh a_k at every depth.
std::vector<InstabilityRow> omega_plus_one_instability(std::size_t depth);

}  // namespace bigfree
