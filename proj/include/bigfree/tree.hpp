#pragma once

// The Z^o-tree T(BF(o)) built from the length function: points <n, g> with
// 0 <= n <= L(g), glued along Gromov products, with the tree metric and the
// isometric left action of BF(o).

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigfree/ordered_abelian.hpp"
#include "bigfree/words.hpp"

namespace bigfree {

// The point at distance n from the identity along [1, g]. Representatives are
// not unique: compare with point_eq, not ==.
class TreePoint {
 public:
  // Requires g reduced and [] <= n <= L(g).
  TreePoint(LexVector n, Word g);

  // The image of g under the embedding BF(o) -> T, i.e. <L(g), g>.
  static TreePoint vertex(const Word& g);
  static TreePoint origin(Alphabet alphabet = Alphabet::omega);

  // `<n-vector> @ <word>`.
  static TreePoint parse(std::string_view text,
                         Alphabet alphabet = Alphabet::omega);

  const LexVector& n() const { return n_; }
  const Word& g() const { return g_; }
  Alphabet alphabet() const { return g_.alphabet(); }

 private:
  LexVector n_;
  Word g_;
};

std::string to_string(const TreePoint& p);

bool point_eq(const TreePoint& p, const TreePoint& q);

// n + m - 2 min{n, m, c(g, h)}.
LexVector tree_dist(const TreePoint& p, const TreePoint& q);

// h . <n, g>: the point on [h, hg] at distance n from h.
TreePoint tree_act(const Word& h, const TreePoint& p);

// The explicit preimage of p under h (the surjectivity construction): with
// c = c(h, k), <m, k> comes from <L(h) - m, h^-1> when m <= c and from
// <L(h) + m - 2c, h^-1 k> otherwise.
TreePoint tree_preimage(const Word& h, const TreePoint& p);

// The median Y(v, x, y) of three words: [v,x] meets [v,y] in [v,u].
Word y_point(const Word& v, const Word& x, const Word& y);

// A group with a candidate Lyndon length function into a lex vector group.
template <class G>
struct LengthOracle {
  std::function<G(const G&, const G&)> multiply;
  std::function<G(const G&)> inverse;
  G identity;
  std::function<LexVector(const G&)> length;
  std::function<bool(const G&, const G&)> equal;
  std::function<std::string(const G&)> describe;
};

enum class LengthAxiom { definiteness, symmetry, ultrametric, integrality };

std::string to_string(LengthAxiom axiom);

struct AxiomViolation {
  LengthAxiom axiom;
  std::vector<std::string> witnesses;
  std::string detail;
};

// Empty on pass.
using AxiomReport = std::optional<AxiomViolation>;

LengthOracle<Word> big_free_length_oracle(Alphabet alphabet = Alphabet::omega);

// Checks (1) L(g) = 0 iff g = 1, (2) L(g) = L(g^-1), then (3)
// c(g,h) >= min{c(g,k), c(h,k)} together with integrality of every c over all
// ordered triples of the sample. Products are formed on the fly; the sample
// itself must be closed under inverses (DomainError otherwise).
template <class G>
AxiomReport check_length_axioms(const LengthOracle<G>& oracle,
                                std::span<const G> sample) {
  const Alphabet alphabet = oracle.length(oracle.identity).alphabet();
  const LexVector zero(alphabet);

  for (const G& g : sample) {
    bool found = false;
    G inv = oracle.inverse(g);
    for (const G& h : sample) found = found || oracle.equal(h, inv);
    if (!found) {
      throw DomainError("sample not closed under inverse at " +
                        oracle.describe(g));
    }
  }

  for (const G& g : sample) {
    bool zero_length = oracle.length(g) == zero;
    if (zero_length != oracle.equal(g, oracle.identity)) {
      return AxiomViolation{LengthAxiom::definiteness,
                            {oracle.describe(g)},
                            "L(" + oracle.describe(g) + ") = " +
                                to_string(oracle.length(g))};
    }
  }
  for (const G& g : sample) {
    if (oracle.length(g) != oracle.length(oracle.inverse(g))) {
      return AxiomViolation{LengthAxiom::symmetry,
                            {oracle.describe(g)},
                            "L(g) = " + to_string(oracle.length(g)) +
                                " but L(g^-1) = " +
                                to_string(oracle.length(oracle.inverse(g)))};
    }
  }

  const std::size_t n = sample.size();
  std::vector<LexVector> c(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const G& g = sample[i];
      const G& h = sample[j];
      LexVector doubled = oracle.length(g) + oracle.length(h) -
                          oracle.length(oracle.multiply(oracle.inverse(g), h));
      try {
        c[i * n + j] = half_exact(doubled);
      } catch (const HalfError&) {
        return AxiomViolation{LengthAxiom::integrality,
                              {oracle.describe(g), oracle.describe(h)},
                              "2c = " + to_string(doubled) + " is odd"};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const LexVector& gh = c[i * n + j];
        const LexVector& gk = c[i * n + k];
        const LexVector& hk = c[j * n + k];
        if (gh < std::min(gk, hk)) {
          return AxiomViolation{
              LengthAxiom::ultrametric,
              {oracle.describe(sample[i]), oracle.describe(sample[j]),
               oracle.describe(sample[k])},
              "c(g,h) = " + to_string(gh) + " < min{" + to_string(gk) + ", " +
                  to_string(hk) + "}"};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace bigfree
