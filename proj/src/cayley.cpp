#include "bigfree/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <nlohmann/json.hpp>

namespace bigfree {

namespace {

Word single(Letter x, Alphabet alphabet) { return Word({x}, alphabet); }

RationalLexVector rational(const LexVector& x) {
  return RationalLexVector::convert(x);
}

std::string vertex_name(const Word& w) {
  std::string s = to_string(w);
  return s.empty() ? std::string("1") : s;
}

}  // namespace

CayleyPoint CayleyPoint::vertex(Word w) {
  if (!w.is_reduced()) {
    throw DomainError("Cayley vertex must be a reduced word: '" +
                      to_string(w) + "'");
  }
  return CayleyPoint(std::move(w), std::nullopt, Rational(0));
}

CayleyPoint CayleyPoint::make(Word w, Letter edge, Rational t) {
  if (!w.is_reduced()) {
    throw DomainError("Cayley point base must be a reduced word: '" +
                      to_string(w) + "'");
  }
  if (!edge.index.allowed_in(w.alphabet())) {
    throw InstanceMismatch("edge letter b outside the omega+1 alphabet");
  }
  if (t < Rational(0) || t > Rational(1)) {
    throw DomainError("Cayley edge parameter must lie in [0, 1]");
  }
  if (t == Rational(0)) return vertex(std::move(w));
  if (w.last_letter() == edge.inverse()) {
    throw DomainError("non-canonical Cayley point: '" + to_string(w) +
                      "' ends in " + to_string(edge.inverse()));
  }
  if (t == Rational(1)) return vertex(multiply(w, single(edge, w.alphabet())));
  return CayleyPoint(std::move(w), edge, t);
}

CayleyPoint CayleyPoint::parse(std::string_view text, Alphabet alphabet) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
    body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);
  if (body.empty() || body.front() != '(') {
    return vertex(Word::parse(text, alphabet));
  }
  if (body.back() != ')') throw ParseError("point must end with ')'", 0);
  body = body.substr(1, body.size() - 2);
  auto first = body.find(';');
  auto second =
      first == std::string_view::npos ? first : body.find(';', first + 1);
  if (second == std::string_view::npos) {
    throw ParseError("Cayley point must be written (<word> ; a<k>^<+-1> ; p/q)",
                     0);
  }
  Word w = Word::parse(body.substr(0, first), alphabet);
  Letter edge =
      parse_letter(body.substr(first + 1, second - first - 1), alphabet);
  std::string_view t_text = body.substr(second + 1);
  while (!t_text.empty() && std::isspace(static_cast<unsigned char>(t_text.front())))
    t_text.remove_prefix(1);
  while (!t_text.empty() && std::isspace(static_cast<unsigned char>(t_text.back())))
    t_text.remove_suffix(1);
  Rational t = CoordTraits<Rational>::parse(t_text, second + 1);
  return make(std::move(w), edge, t);
}

std::string to_string(const CayleyPoint& x) {
  if (x.is_vertex()) return to_string(x.w());
  return "(" + to_string(x.w()) + " ; " + x.edge()->index.name() +
         (x.edge()->sign == Sign::positive ? "^1" : "^-1") + " ; " +
         CoordTraits<Rational>::format(x.t()) + ")";
}

RationalLexVector CayleyPoint::height() const {
  RationalLexVector base = rational(length_vector(w_));
  if (!edge_) return base;
  return base + t_ * rational(letter_length(edge_->index, alphabet()));
}

Word CayleyPoint::far_end() const {
  if (!edge_) return w_;
  return multiply(w_, single(*edge_, alphabet()));
}

RationalLexVector cayley_dist(const CayleyPoint& x, const CayleyPoint& y) {
  const RationalLexVector hx = x.height();
  const RationalLexVector hy = y.height();
  const RationalLexVector c = rational(gromov(x.far_end(), y.far_end()));
  return hx + hy - Rational(2) * std::min({hx, hy, c});
}

CayleyPoint cayley_act(const Word& u, const CayleyPoint& x) {
  if (!u.is_reduced()) {
    throw DomainError("acting word must be reduced: '" + to_string(u) + "'");
  }
  Word uw = multiply(u, x.w());
  if (x.is_vertex()) return CayleyPoint::vertex(std::move(uw));
  const Letter edge = *x.edge();
  if (uw.last_letter() == edge.inverse()) {
    return CayleyPoint::make(multiply(uw, single(edge, x.alphabet())),
                             edge.inverse(), Rational(1) - x.t());
  }
  return CayleyPoint::make(std::move(uw), edge, x.t());
}

CayleyShortcuts cayley_shortcuts(const CayleyPoint& x, const CayleyPoint& y) {
  CayleyShortcuts out;
  out.exact = cayley_dist(x, y);
  const RationalLexVector hx = x.height();
  const RationalLexVector hy = y.height();
  const RationalLexVector c = rational(gromov(x.far_end(), y.far_end()));

  if (!x.is_vertex() && !y.is_vertex()) {
    const Alphabet alphabet = x.alphabet();
    out.branch_guard = c <= rational(length_vector(x.w())) &&
                       c <= rational(length_vector(y.w()));
    if (out.branch_guard) {
      const RationalLexVector la =
          rational(letter_length(x.edge()->index, alphabet));
      const RationalLexVector lb =
          rational(letter_length(y.edge()->index, alphabet));
      out.branch_value = rational(word_dist(x.far_end(), y.far_end())) -
                         (Rational(1) - x.t()) * la -
                         (Rational(1) - y.t()) * lb;
    }
  }
  out.on_segment_guard = hx <= c;
  if (out.on_segment_guard) out.on_segment_value = hy - hx;
  out.swapped_guard = hy <= c;
  if (out.swapped_guard) out.swapped_value = hx - hy;
  return out;
}

bool EmbeddingReport::only_endpoints(Alphabet alphabet, AlphabetIndex a) const {
  if (coincidences.size() != 2) return false;
  const LexVector la = letter_length(a, alphabet);
  bool start = false;
  bool end = false;
  for (const auto& [t, s] : coincidences) {
    start = start || (t == Rational(0) && s.is_zero());
    end = end || (t == Rational(1) && s == la);
  }
  return start && end;
}

EmbeddingReport embed_compare(const Word& w, AlphabetIndex a,
                              const std::vector<Rational>& t_grid,
                              const std::vector<LexVector>& s_grid) {
  const Alphabet alphabet = w.alphabet();
  const RationalLexVector base = rational(length_vector(w));
  const RationalLexVector la = rational(letter_length(a, alphabet));
  EmbeddingReport report;
  for (const Rational& t : t_grid) {
    const RationalLexVector on_cayley_edge = base + t * la;
    for (const LexVector& s : s_grid) {
      ++report.comparisons;
      if (on_cayley_edge == base + rational(s)) {
        report.coincidences.push_back({t, s});
      }
    }
  }
  return report;
}

std::vector<Rational> rational_grid(std::size_t n) {
  std::vector<Rational> grid;
  if (n == 0) return {Rational(0)};
  grid.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    grid.emplace_back(static_cast<std::int64_t>(k),
                      static_cast<std::int64_t>(n));
  }
  return grid;
}

std::vector<LexVector> offset_grid(AlphabetIndex a, Alphabet alphabet,
                                   std::uint32_t depth, int range) {
  const LexVector la = letter_length(a, alphabet);
  std::vector<LexVector> grid{LexVector(alphabet), la};
  std::vector<AlphabetIndex> higher;
  for (auto next = a.successor(); next && higher.size() < depth;
       next = next->successor()) {
    higher.push_back(*next);
  }
  std::vector<int> digits(higher.size(), -range);
  while (true) {
    std::vector<LexVector::Entry> entries;
    for (std::size_t i = 0; i < higher.size(); ++i) {
      entries.emplace_back(higher[i], digits[i]);
    }
    LexVector y = LexVector::from_entries(std::move(entries), alphabet);
    if (y.sign() > 0) {
      grid.push_back(y);
      grid.push_back(la - y);
    }
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == range) digits[i++] = -range;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return grid;
}

bool BallGraph::is_tree() const {
  if (vertices.empty() || edges.size() + 1 != vertices.size()) return false;
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& e : edges) {
    std::size_t x = find(e.from);
    std::size_t y = find(e.to);
    if (x == y) return false;
    parent[x] = y;
  }
  return true;
}

std::string BallGraph::to_dot() const {
  std::string out = "digraph ball {\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + vertex_name(vertices[i]) +
           "\"";
    if (vertices[i] == center) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (const auto& e : edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=\"" + e.label.name() + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string BallGraph::to_json() const {
  nlohmann::json j;
  j["center"] = to_string(center);
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : vertices) j["vertices"].push_back(to_string(v));
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges) {
    j["edges"].push_back({{"from", to_string(vertices[e.from])},
                          {"to", to_string(vertices[e.to])},
                          {"label", e.label.name()}});
  }
  return j.dump(2);
}

BallGraph ball_graph(const Word& center, std::size_t max_len,
                     std::uint32_t max_letter, std::size_t max_vertices) {
  if (!center.is_reduced()) {
    throw DomainError("ball center must be reduced: '" + to_string(center) +
                      "'");
  }
  // 1 + sum_{i=1..L} 2m (2m-1)^(i-1)
  const std::size_t signed_letters = 2 * static_cast<std::size_t>(max_letter);
  std::size_t total = 1;
  std::size_t layer = 1;
  for (std::size_t i = 1; i <= max_len; ++i) {
    layer = i == 1 ? signed_letters : layer * (signed_letters - 1);
    if (layer == 0) break;
    total += layer;
    if (total > max_vertices) {
      throw ResourceLimit("ball would exceed " + std::to_string(max_vertices) +
                          " vertices");
    }
  }

  const Alphabet alphabet = center.alphabet();
  std::vector<Letter> letters;
  for (std::uint32_t k = 1; k <= max_letter; ++k) {
    letters.push_back(Letter::generator(k, Sign::positive));
    letters.push_back(Letter::generator(k, Sign::negative));
  }

  // Breadth-first over u; record (parent u, child u, step letter).
  std::vector<Word> offsets{Word(alphabet)};
  std::vector<std::pair<std::size_t, Letter>> steps;  // for offsets[1..]
  std::size_t frontier_begin = 0;
  for (std::size_t depth = 0; depth < max_len; ++depth) {
    const std::size_t frontier_end = offsets.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (Letter x : letters) {
        if (offsets[i].last_letter() == x.inverse()) continue;
        std::vector<Letter> grown(offsets[i].letters().begin(),
                                  offsets[i].letters().end());
        grown.push_back(x);
        offsets.emplace_back(std::move(grown), alphabet);
        steps.emplace_back(i, x);
      }
    }
    frontier_begin = frontier_end;
  }

  std::vector<Word> words;
  words.reserve(offsets.size());
  for (const auto& u : offsets) words.push_back(multiply(center, u));
  std::vector<std::size_t> order(words.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return ShortLex{}(words[i], words[j]);
  });
  std::vector<std::size_t> rank(words.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  BallGraph graph;
  graph.center = center;
  graph.vertices.reserve(words.size());
  for (std::size_t i : order) graph.vertices.push_back(words[i]);
  for (std::size_t child = 1; child < offsets.size(); ++child) {
    const auto& [parent, x] = steps[child - 1];
    // Orient so the label is a positive generator: v -> v a.
    if (x.sign == Sign::positive) {
      graph.edges.push_back({rank[parent], rank[child], x.index});
    } else {
      graph.edges.push_back({rank[child], rank[parent], x.index});
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const BallEdge& e, const BallEdge& f) {
              return std::tie(e.from, e.to) < std::tie(f.from, f.to);
            });
  return graph;
}

}  // namespace bigfree
