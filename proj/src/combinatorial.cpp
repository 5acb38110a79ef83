#include "bigfree/combinatorial.hpp"

#include <cctype>

namespace bigfree {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Word single(Letter x, Alphabet alphabet) { return Word({x}, alphabet); }

// (w, L(w) + t or L(w), the edge if any) for the simplified distance formula.
struct Parts {
  const Word* w;
  LexVector t;
  std::optional<Letter> edge;
};

Parts parts_of(const TriplePoint& e) {
  if (const auto* v = std::get_if<Word>(&e)) {
    return {v, LexVector(v->alphabet()), std::nullopt};
  }
  const auto& triple = std::get<EdgeTriple>(e);
  return {&triple.w(), triple.t(), triple.edge()};
}

}  // namespace

EdgeTriple::EdgeTriple(Word w, Letter edge, LexVector t)
    : w_(std::move(w)), edge_(edge), t_(std::move(t)) {
  if (!w_.is_reduced()) {
    throw DomainError("triple base word must be reduced: '" + to_string(w_) +
                      "'");
  }
  if (t_.alphabet() != w_.alphabet() || !edge_.index.allowed_in(w_.alphabet())) {
    throw InstanceMismatch("triple mixes alphabet instances");
  }
  if (w_.last_letter() == edge_.inverse()) {
    throw DomainError("non-canonical triple: '" + to_string(w_) +
                      "' ends in " + to_string(edge_.inverse()));
  }
  const LexVector edge_length = letter_length(edge_.index, w_.alphabet());
  if (t_.sign() <= 0 || t_ >= edge_length) {
    throw DomainError("triple offset " + to_string(t_) + " outside (0, " +
                      to_string(edge_length) + ")");
  }
}

TriplePoint make_triple_point(Word w, Letter edge, LexVector t) {
  if (t.is_zero()) {
    if (!w.is_reduced()) {
      throw DomainError("triple base word must be reduced: '" + to_string(w) +
                        "'");
    }
    return w;
  }
  return EdgeTriple(std::move(w), edge, std::move(t));
}

TriplePoint parse_triple_point(std::string_view text, Alphabet alphabet) {
  std::string_view body = trim(text);
  if (body.empty() || body.front() != '(') return Word::parse(text, alphabet);
  std::size_t base = static_cast<std::size_t>(body.data() - text.data());
  if (body.back() != ')') {
    throw ParseError("triple must end with ')'", base + body.size() - 1);
  }
  body = body.substr(1, body.size() - 2);
  auto first = body.find(';');
  auto second = first == std::string_view::npos ? first : body.find(';', first + 1);
  if (second == std::string_view::npos) {
    throw ParseError("triple must be written (<word> ; a<k>^<+-1> ; <t>)",
                     base);
  }
  Word w = Word::parse(body.substr(0, first), alphabet);
  Letter edge = parse_letter(body.substr(first + 1, second - first - 1), alphabet);
  LexVector t = parse_lex_vector(body.substr(second + 1), alphabet);
  return make_triple_point(std::move(w), edge, std::move(t));
}

std::string to_string(const EdgeTriple& e) {
  return "(" + to_string(e.w()) + " ; " + e.edge().index.name() +
         (e.edge().sign == Sign::positive ? "^1" : "^-1") + " ; " +
         to_string(e.t()) + ")";
}

std::string to_string(const TriplePoint& e) {
  return std::visit([](const auto& x) { return to_string(x); }, e);
}

TriplePoint to_triple(const TreePoint& p) {
  const Word& g = p.g();
  const LexVector& n = p.n();
  const Alphabet alphabet = p.alphabet();
  if (n.is_zero()) return Word(alphabet);

  auto finish = [&](std::size_t q, const LexVector& prefix_length) -> TriplePoint {
    if (prefix_length == n) return g.prefix(q);
    const Letter edge = g[q - 1];
    LexVector before = prefix_length - letter_length(edge.index, alphabet);
    return EdgeTriple(g.prefix(q - 1), edge, n - before);
  };

  AlphabetIndex threshold = *n.leading_index();
  std::size_t scanned = 0;             // u = g.prefix(scanned)
  LexVector scanned_length(alphabet);  // L(u)
  std::size_t limit = g.size();        // the crossing lies in (scanned, limit]
  while (true) {
    LexVector running = scanned_length;
    std::optional<std::size_t> last;
    LexVector last_length(alphabet);
    for (std::size_t q = scanned + 1; q <= limit; ++q) {
      const LexVector step = letter_length(g[q - 1].index, alphabet);
      running += step;
      if (g[q - 1].index > threshold) continue;
      if (running >= n) {
        if (running - step < n) return finish(q, running);
        // A skipped letter above the threshold crossed n first: narrow the
        // window to the letters before this occurrence.
        limit = q - 1;
        break;
      }
      last = q;
      last_length = running;
    }
    if (last) {
      scanned = *last;
      scanned_length = last_length;
    }
    // L(u) < n and L(u) agrees with n up to the threshold.
    const LexVector shortfall = n - scanned_length;
    if (shortfall.sign() <= 0 || *shortfall.leading_index() <= threshold) {
      throw std::logic_error("first-subword search stalled at " +
                             to_string(p));
    }
    threshold = *shortfall.leading_index();
  }
}

TreePoint from_triple(const TriplePoint& e) {
  if (const auto* v = std::get_if<Word>(&e)) return TreePoint::vertex(*v);
  const auto& triple = std::get<EdgeTriple>(e);
  return TreePoint(length_vector(triple.w()) + triple.t(),
                   multiply(triple.w(), single(triple.edge(), triple.alphabet())));
}

TriplePoint act_triple(const Word& u, const TriplePoint& e) {
  if (!u.is_reduced()) {
    throw DomainError("acting word must be reduced: '" + to_string(u) + "'");
  }
  if (const auto* v = std::get_if<Word>(&e)) return multiply(u, *v);
  const auto& triple = std::get<EdgeTriple>(e);
  const Alphabet alphabet = triple.alphabet();
  Word uw = multiply(u, triple.w());
  const Letter edge = triple.edge();
  if (uw.last_letter() == edge.inverse()) {
    return EdgeTriple(multiply(uw, single(edge, alphabet)), edge.inverse(),
                      letter_length(edge.index, alphabet) - triple.t());
  }
  return EdgeTriple(std::move(uw), edge, triple.t());
}

TripleDistance triple_dist(const TriplePoint& e1, const TriplePoint& e2) {
  LexVector exact = tree_dist(from_triple(e1), from_triple(e2));
  Parts x = parts_of(e1);
  Parts y = parts_of(e2);
  LexVector simplified = (x.edge && y.edge && *x.w == *y.w && *x.edge == *y.edge)
                             ? abs(x.t - y.t)
                             : word_dist(*x.w, *y.w) + x.t + y.t;
  return {std::move(exact), std::move(simplified)};
}

std::string to_string(EdgeConfiguration configuration) {
  switch (configuration) {
    case EdgeConfiguration::same_edge:
      return "same-edge";
    case EdgeConfiguration::sibling:
      return "sibling";
    case EdgeConfiguration::nested:
      return "nested";
    case EdgeConfiguration::other:
      return "other";
  }
  return "?";
}

EdgeConfiguration classify(const EdgeTriple& e1, const EdgeTriple& e2) {
  if (e1.w() == e2.w()) {
    return e1.edge() == e2.edge() ? EdgeConfiguration::same_edge
                                  : EdgeConfiguration::sibling;
  }
  const Alphabet alphabet = e1.alphabet();
  if (multiply(e1.w(), single(e1.edge(), alphabet)) == e2.w() ||
      multiply(e2.w(), single(e2.edge(), alphabet)) == e1.w()) {
    return EdgeConfiguration::nested;
  }
  return EdgeConfiguration::other;
}

CirclePoint CirclePoint::wedge(Alphabet alphabet) { return CirclePoint(alphabet); }

CirclePoint::CirclePoint(AlphabetIndex circle, LexVector s) : s_(std::move(s)) {
  if (!circle.allowed_in(s_.alphabet())) {
    throw InstanceMismatch("circle C_b outside the omega+1 alphabet");
  }
  const LexVector circumference = letter_length(circle, s_.alphabet());
  if (s_.sign() < 0 || s_ >= circumference) {
    throw DomainError("circle coordinate " + to_string(s_) + " outside [0, " +
                      to_string(circumference) + ")");
  }
  if (!s_.is_zero()) circle_ = circle;
}

CirclePoint CirclePoint::parse(std::string_view text, Alphabet alphabet) {
  std::string_view body = trim(text);
  auto at = body.find('@');
  if (body.substr(0, 2) != "C(" || at == std::string_view::npos) {
    throw ParseError("circle point must be written 'C(a<k>) @ <vector>'", 0);
  }
  auto close = body.find(')');
  if (close == std::string_view::npos || close > at) {
    throw ParseError("missing ')' after circle name", 0);
  }
  std::string_view name = trim(body.substr(2, close - 2));
  LexVector s = parse_lex_vector(body.substr(at + 1), alphabet);
  if (name == "*") {
    if (!s.is_zero()) throw ParseError("the wedge point has s = []", at + 1);
    return wedge(alphabet);
  }
  return CirclePoint(parse_letter(name, alphabet).index, std::move(s));
}

std::string to_string(const CirclePoint& x) {
  return "C(" + (x.circle() ? x.circle()->name() : std::string("*")) + ") @ " +
         to_string(x.s());
}

CirclePoint project(const TriplePoint& e) {
  if (const auto* v = std::get_if<Word>(&e)) return CirclePoint::wedge(v->alphabet());
  const auto& triple = std::get<EdgeTriple>(e);
  const AlphabetIndex a = triple.edge().index;
  if (triple.edge().sign == Sign::positive) return CirclePoint(a, triple.t());
  return CirclePoint(a, letter_length(a, triple.alphabet()) - triple.t());
}

namespace {

LexVector to_wedge(const CirclePoint& x) {
  if (x.is_wedge()) return x.s();
  const LexVector around = letter_length(*x.circle(), x.s().alphabet()) - x.s();
  return std::min(x.s(), around);
}

}  // namespace

LexVector circle_dist(const CirclePoint& x, const CirclePoint& y) {
  if (x.is_wedge() || y.is_wedge() || *x.circle() != *y.circle()) {
    return to_wedge(x) + to_wedge(y);
  }
  const LexVector gap = abs(x.s() - y.s());
  return std::min(gap, letter_length(*x.circle(), gap.alphabet()) - gap);
}

std::optional<Word> orbit_witness(const TriplePoint& e1, const TriplePoint& e2) {
  if (project(e1) != project(e2)) return std::nullopt;
  if (std::holds_alternative<Word>(e1)) {
    return multiply(std::get<Word>(e2), inverse(std::get<Word>(e1)));
  }
  const auto& x = std::get<EdgeTriple>(e1);
  const auto& y = std::get<EdgeTriple>(e2);
  const Word w_inv = inverse(x.w());
  if (x.edge() == y.edge()) return multiply(y.w(), w_inv);
  return multiply(multiply(y.w(), single(x.edge().inverse(), x.alphabet())),
                  w_inv);
}

std::vector<InstabilityRow> omega_plus_one_instability(std::size_t depth) {
  const Alphabet alphabet = Alphabet::omega_plus_one;
  const WordStream stream = WordStream::reverse_harmonic(alphabet);
  const LexVector top_length = letter_length(AlphabetIndex::top(), alphabet);
  std::vector<InstabilityRow> rows;
  for (std::size_t k = 1; k <= depth; ++k) {
    Word w = stream.truncate(k);
    TriplePoint point = to_triple(TreePoint(top_length, w));
    std::optional<Letter> edge;
    if (const auto* e = std::get_if<EdgeTriple>(&point)) edge = e->edge();
    rows.push_back({k, std::move(w), std::move(point), edge});
  }
  return rows;
}

}  // namespace bigfree
