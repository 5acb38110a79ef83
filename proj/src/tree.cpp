#include "bigfree/tree.hpp"

namespace bigfree {

TreePoint::TreePoint(LexVector n, Word g) : n_(std::move(n)), g_(std::move(g)) {
  if (!g_.is_reduced()) {
    throw DomainError("tree point word must be reduced: '" + to_string(g_) +
                      "'");
  }
  if (n_.alphabet() != g_.alphabet()) {
    throw InstanceMismatch("tree point mixes alphabet instances");
  }
  if (n_.sign() < 0 || n_ > length_vector(g_)) {
    throw DomainError("tree point offset " + to_string(n_) +
                      " outside [0, L(g)] = [0, " +
                      to_string(length_vector(g_)) + "]");
  }
}

TreePoint TreePoint::vertex(const Word& g) {
  Word r = reduce(g);
  LexVector n = length_vector(r);
  return TreePoint(std::move(n), std::move(r));
}

TreePoint TreePoint::origin(Alphabet alphabet) {
  return TreePoint(LexVector(alphabet), Word(alphabet));
}

TreePoint TreePoint::parse(std::string_view text, Alphabet alphabet) {
  auto at = text.find('@');
  if (at == std::string_view::npos) {
    throw ParseError("tree point must be written '<vector> @ <word>'", 0);
  }
  LexVector n = parse_lex_vector(text.substr(0, at), alphabet);
  Word g;
  try {
    g = Word::parse(text.substr(at + 1), alphabet);
  } catch (const ParseError& e) {
    throw ParseError(std::string("in tree point word: ") + e.what(),
                     at + 1 + e.position());
  }
  return TreePoint(std::move(n), std::move(g));
}

std::string to_string(const TreePoint& p) {
  std::string word = to_string(p.g());
  return to_string(p.n()) + " @" + (word.empty() ? "" : " " + word);
}

bool point_eq(const TreePoint& p, const TreePoint& q) {
  if (p.n() != q.n()) return false;
  return p.n() + p.n() <= gromov_doubled(p.g(), q.g());
}

LexVector tree_dist(const TreePoint& p, const TreePoint& q) {
  LexVector twice_min =
      std::min({p.n() + p.n(), q.n() + q.n(), gromov_doubled(p.g(), q.g())});
  return p.n() + q.n() - twice_min;
}

TreePoint tree_act(const Word& h, const TreePoint& p) {
  if (!h.is_reduced()) {
    throw DomainError("acting word must be reduced: '" + to_string(h) + "'");
  }
  const Word h_inv = inverse(h);
  const LexVector twice_c = gromov_doubled(p.g(), h_inv);
  const LexVector length_h = length_vector(h);
  if (p.n() + p.n() <= twice_c) {
    return TreePoint(length_h - p.n(), h);
  }
  return TreePoint(length_h + p.n() - twice_c, multiply(h, p.g()));
}

TreePoint tree_preimage(const Word& h, const TreePoint& p) {
  if (!h.is_reduced()) {
    throw DomainError("acting word must be reduced: '" + to_string(h) + "'");
  }
  const Word h_inv = inverse(h);
  const LexVector twice_c = gromov_doubled(h, p.g());
  const LexVector length_h = length_vector(h);
  if (p.n() + p.n() <= twice_c) {
    return TreePoint(length_h - p.n(), h_inv);
  }
  return TreePoint(length_h + p.n() - twice_c, multiply(h_inv, p.g()));
}

Word y_point(const Word& v, const Word& x, const Word& y) {
  for (const Word* w : {&v, &x, &y}) {
    if (!w->is_reduced()) {
      throw DomainError("y_point requires reduced words, got '" +
                        to_string(*w) + "'");
    }
  }
  const Word v_inv = inverse(v);
  return multiply(v, common_prefix(multiply(v_inv, x), multiply(v_inv, y)));
}

std::string to_string(LengthAxiom axiom) {
  switch (axiom) {
    case LengthAxiom::definiteness:
      return "axiom (1): L(g) = 0 iff g = 1";
    case LengthAxiom::symmetry:
      return "axiom (2): L(g) = L(g^-1)";
    case LengthAxiom::ultrametric:
      return "axiom (3): c(g,h) >= min{c(g,k), c(h,k)}";
    case LengthAxiom::integrality:
      return "integrality: c(g,h) in Lambda";
  }
  return "?";
}

LengthOracle<Word> big_free_length_oracle(Alphabet alphabet) {
  return LengthOracle<Word>{
      .multiply = [](const Word& x, const Word& y) { return multiply(x, y); },
      .inverse = [](const Word& x) { return inverse(x); },
      .identity = Word(alphabet),
      .length = [](const Word& x) { return length_vector(x); },
      .equal = [](const Word& x, const Word& y) {
        return reduce(x) == reduce(y);
      },
      .describe = [](const Word& x) {
        std::string s = to_string(x);
        return s.empty() ? std::string("1") : s;
      },
  };
}

}  // namespace bigfree
