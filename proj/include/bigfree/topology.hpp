#pragma once

// The two neighbourhood bases on BF(o): letter balls B(w, a) = {w u : every
// letter of u has index > a} and metric balls B(w, eps) = {v : d(w,v) < eps}.

#include "bigfree/ordered_abelian.hpp"
#include "bigfree/words.hpp"

namespace bigfree {

bool in_letter_ball(const Word& w, AlphabetIndex a, const Word& v);

// Throws DomainError unless eps > [].
bool in_metric_ball(const Word& w, const LexVector& eps, const Word& v);

// The unit vector at a: B(w, eps_a) sits inside B(w, a).
LexVector unit_epsilon(AlphabetIndex a, Alphabet alphabet = Alphabet::omega);

}  // namespace bigfree
