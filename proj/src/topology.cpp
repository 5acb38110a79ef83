#include "bigfree/topology.hpp"

#include <algorithm>

namespace bigfree {

bool in_letter_ball(const Word& w, AlphabetIndex a, const Word& v) {
  const Word u = multiply(inverse(w), v);
  return std::all_of(u.letters().begin(), u.letters().end(),
                     [a](Letter x) { return x.index > a; });
}

bool in_metric_ball(const Word& w, const LexVector& eps, const Word& v) {
  if (eps.sign() <= 0) {
    throw DomainError("ball radius must be positive, got " + to_string(eps));
  }
  return word_dist(w, v) < eps;
}

LexVector unit_epsilon(AlphabetIndex a, Alphabet alphabet) {
  return LexVector::unit(a, alphabet);
}

}  // namespace bigfree
