#include "bigfree/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <future>
#include <set>
#include <sstream>

#include "bigfree/cayley.hpp"
#include "bigfree/combinatorial.hpp"
#include "bigfree/sampling.hpp"
#include "bigfree/topology.hpp"
#include "bigfree/tree.hpp"
#include "bigfree/words.hpp"

namespace bigfree {

namespace {

// Counts cases and keeps the first failure.
class Tally {
 public:
  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++cases_;
    if (!ok && failures_++ == 0) first_failure_ = describe();
  }
  void add_cases(std::size_t n) { cases_ += n; }

  CheckResult finish(std::string summary = {}) const {
    CheckResult r;
    r.cases = cases_;
    r.passed = failures_ == 0;
    r.detail = r.passed ? std::move(summary)
                        : std::to_string(failures_) + " failure(s); first: " +
                              first_failure_;
    return r;
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

std::string show(const Word& w) {
  std::string s = to_string(w);
  return s.empty() ? std::string("1") : s;
}

AlphabetIndex idx(std::uint32_t k) { return AlphabetIndex::letter(k); }

template <class V>
bool two_smallest_equal(V x, V y, V z) {
  std::array<V, 3> v{std::move(x), std::move(y), std::move(z)};
  std::sort(v.begin(), v.end());
  return v[0] == v[1];
}

// Symmetry, definiteness, positivity and the triangle inequality at one triple.
template <class P, class Dist, class Eq>
void metric_axioms(Tally& tally, const char* name, const P& x, const P& y,
                   const P& z, Dist dist, Eq eq) {
  auto dxy = dist(x, y);
  auto dyx = dist(y, x);
  auto dxz = dist(x, z);
  auto dyz = dist(y, z);
  auto dxx = dist(x, x);
  tally.check(dxy == dyx, [&] { return std::string(name) + ": asymmetric"; });
  tally.check(dxx.is_zero(), [&] { return std::string(name) + ": d(x,x) != 0"; });
  tally.check(dxy.sign() >= 0, [&] { return std::string(name) + ": negative"; });
  tally.check(dxy.is_zero() == eq(x, y),
              [&] { return std::string(name) + ": definiteness"; });
  tally.check(dxz <= dxy + dyz, [&] {
    return std::string(name) + ": triangle inequality at " + to_string(x) +
           " | " + to_string(y) + " | " + to_string(z);
  });
}

// ---------------------------------------------------------------------------
// Acceptance criteria

CheckResult unique_reduced_form(const SuiteOptions& o) {
  Sampler s(o.seed + 1);
  Tally tally;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Word w = s.word(40, 8);
    const Word expected = reduce(w);
    for (int run = 0; run < 5; ++run) {
      Word current = w;
      while (true) {
        Cancellation c = s.cancellation(current);
        if (c.empty()) break;
        current = apply_cancellation(current, c);
      }
      tally.check(current == expected && current.is_reduced(), [&] {
        return "'" + to_string(w) + "' cancelled to '" + to_string(current) +
               "' but reduces to '" + to_string(expected) + "'";
      });
    }
  }
  return tally.finish("5 cancellation sequences per word agree with reduce");
}

CheckResult zero_hyperbolic(const SuiteOptions& o) {
  Sampler s(o.seed + 2);
  Tally tally;
  for (std::size_t i = 0; i < o.samples; ++i) {
    Word x = s.reduced_word(12, 6);
    Word y = s.reduced_word(12, 6);
    Word z = s.reduced_word(12, 6);
    tally.check(two_smallest_equal(gromov(x, y), gromov(x, z), gromov(y, z)),
                [&] {
                  return "random triple " + show(x) + " | " + show(y) + " | " +
                         show(z);
                });
  }

  // Exhaustive over reduced words of length <= 4 on a1..a3. Products are
  // taken from the library once per pair and compared densely per triple.
  const std::vector<Word> words = all_reduced_words(4, 3);
  const std::size_t n = words.size();
  std::vector<std::array<std::int64_t, 3>> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      LexVector c = gromov(words[i], words[j]);
      std::array<std::int64_t, 3> dense{c[idx(1)], c[idx(2)], c[idx(3)]};
      table[i * n + j] = table[j * n + i] = dense;
    }
  }
  std::size_t exhaustive_failures = 0;
  std::string first;
  std::size_t triples = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto& ij = table[i * n + j];
      for (std::size_t k = j; k < n; ++k) {
        ++triples;
        if (!two_smallest_equal(ij, table[i * n + k], table[j * n + k])) {
          if (exhaustive_failures++ == 0) {
            first = show(words[i]) + " | " + show(words[j]) + " | " +
                    show(words[k]);
          }
        }
      }
    }
  }
  tally.add_cases(triples - 1);
  tally.check(exhaustive_failures == 0,
              [&] { return "exhaustive triple " + first; });
  return tally.finish(std::to_string(triples) +
                      " unordered exhaustive triples over " +
                      std::to_string(n) + " words");
}

CheckResult metric_axioms_all(const SuiteOptions& o) {
  Sampler s(o.seed + 3);
  Tally tally;
  for (std::size_t i = 0; i < o.samples; ++i) {
    Word x = s.reduced_word(10, 6);
    Word y = s.coin() ? s.reduced_word(10, 6) : s.extend(x.prefix(x.size() / 2), 4, 6);
    if (s.uniform(0, 9) == 0) y = x;
    Word z = s.reduced_word(10, 6);
    metric_axioms(tally, "word_dist", x, y, z, word_dist,
                  [](const Word& a, const Word& b) { return a == b; });
  }
  for (std::size_t i = 0; i < o.samples; ++i) {
    TreePoint x = s.tree_point(10, 6);
    TreePoint y = s.uniform(0, 4) == 0 ? s.alternate_representative(x, 6)
                                       : s.tree_point(10, 6);
    TreePoint z = s.tree_point(10, 6);
    metric_axioms(tally, "tree_dist", x, y, z, tree_dist, point_eq);
  }
  for (std::size_t i = 0; i < o.samples; ++i) {
    CayleyPoint x = s.cayley_point(8, 5);
    CayleyPoint y = s.uniform(0, 9) == 0 ? x : s.cayley_point(8, 5);
    CayleyPoint z = s.cayley_point(8, 5);
    metric_axioms(tally, "cayley_dist", x, y, z, cayley_dist,
                  [](const CayleyPoint& a, const CayleyPoint& b) { return a == b; });
  }
  for (std::size_t i = 0; i < o.samples; ++i) {
    CirclePoint x = s.circle_point(3);
    CirclePoint y = s.uniform(0, 9) == 0 ? x : s.circle_point(3);
    CirclePoint z = s.circle_point(3);
    metric_axioms(tally, "circle_dist", x, y, z, circle_dist,
                  [](const CirclePoint& a, const CirclePoint& b) { return a == b; });
  }
  return tally.finish("word, tree, Cayley and wedge metrics");
}

CheckResult isometric_action(const SuiteOptions& o) {
  Sampler s(o.seed + 4);
  Tally tally;
  const Word identity;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Word h = s.reduced_word(8, 6);
    const Word h2 = s.reduced_word(8, 6);
    const TreePoint p = s.tree_point(10, 6);
    const TreePoint q = s.uniform(0, 4) == 0 ? s.alternate_representative(p, 6)
                                             : s.tree_point(10, 6);
    auto where = [&] { return "h=" + show(h) + " p=" + to_string(p) + " q=" + to_string(q); };

    tally.check(tree_dist(tree_act(h, p), tree_act(h, q)) == tree_dist(p, q),
                [&] { return "tree isometry " + where(); });
    tally.check(point_eq(tree_act(identity, p), p),
                [&] { return "tree identity " + where(); });
    tally.check(point_eq(tree_act(h, tree_act(h2, p)),
                         tree_act(multiply(h, h2), p)),
                [&] { return "tree composition h2=" + show(h2) + " " + where(); });
    const TreePoint p_alt = s.alternate_representative(p, 6);
    tally.check(point_eq(tree_act(h, p), tree_act(h, p_alt)),
                [&] { return "tree action not well defined " + where(); });
    if (!h.empty()) {
      tally.check(!point_eq(tree_act(h, p), p),
                  [&] { return "tree action has a fixed point " + where(); });
    }

    // No inversions: nothing swaps the ends of an edge [v, va].
    const Word v = s.reduced_word(6, 6);
    Letter a = s.letter(6);
    while (v.last_letter() == a.inverse()) a = s.letter(6);
    const Word va = multiply(v, Word({a}));
    const TreePoint start = TreePoint::vertex(v);
    const TreePoint end = TreePoint::vertex(va);
    for (const Word& u : {h, multiply(va, inverse(v))}) {
      if (u.empty()) continue;
      tally.check(!(point_eq(tree_act(u, start), end) &&
                    point_eq(tree_act(u, end), start)),
                  [&] { return "inversion by " + show(u) + " of edge at " + show(v); });
    }

    const CayleyPoint x = s.cayley_point(8, 5);
    const CayleyPoint y = s.cayley_point(8, 5);
    tally.check(cayley_dist(cayley_act(h, x), cayley_act(h, y)) == cayley_dist(x, y),
                [&] { return "cayley isometry h=" + show(h) + " x=" + to_string(x); });
    tally.check(cayley_act(identity, x) == x,
                [&] { return "cayley identity x=" + to_string(x); });
    tally.check(cayley_act(h, cayley_act(h2, x)) == cayley_act(multiply(h, h2), x),
                [&] { return "cayley composition x=" + to_string(x); });
  }
  return tally.finish("isometry, identity, composition, freeness, no inversions");
}

CheckResult triple_canonicalization(const SuiteOptions& o) {
  Sampler s(o.seed + 5);
  Tally tally;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const TreePoint p = s.tree_point(10, 6);
    const TriplePoint e = to_triple(p);
    tally.check(point_eq(from_triple(e), p),
                [&] { return "from_triple(to_triple(p)) != p for " + to_string(p); });
    const TreePoint p_alt = s.alternate_representative(p, 6);
    tally.check(to_triple(p_alt) == e, [&] {
      return "representatives " + to_string(p) + " and " + to_string(p_alt) +
             " give different triples";
    });

    const TriplePoint f = s.triple_point(8, 6);
    tally.check(to_triple(from_triple(f)) == f,
                [&] { return "to_triple(from_triple(e)) != e for " + to_string(f); });

    const Word u = s.reduced_word(8, 6);
    tally.check(point_eq(from_triple(act_triple(u, f)), tree_act(u, from_triple(f))),
                [&] { return "act_triple not equivariant: u=" + show(u) + " e=" + to_string(f); });
  }
  return tally.finish("round trips, uniqueness and equivariance");
}

CheckResult non_geodesic_witness(const SuiteOptions&) {
  Tally tally;
  const LexVector witness{1, -1};
  const LexVector first_letter{1};
  tally.check(LexVector{} < witness && witness < first_letter,
              [] { return "[1,-1] should lie strictly inside [0,[1]]"; });
  const Word identity;
  for (const Word& w : all_reduced_words(4, 4)) {
    const LexVector d = word_dist(identity, w);
    tally.check(d.componentwise_nonnegative() && d != witness,
                [&] { return "word " + show(w) + " has length " + to_string(d); });
  }
  return tally.finish(
      "no reduced word of length <= 4 over a1..a4 is at distance [1,-1] from 1");
}

// Same-circle distance by walking the circle both ways from x to y.
LexVector circle_oracle(const CirclePoint& x, const CirclePoint& y) {
  auto to_zero = [](const CirclePoint& p) {
    if (p.is_wedge()) return p.s();
    LexVector around = letter_length(*p.circle(), Alphabet::omega) - p.s();
    return p.s() < around ? p.s() : around;
  };
  if (x.is_wedge() || y.is_wedge() || *x.circle() != *y.circle()) {
    return to_zero(x) + to_zero(y);
  }
  const LexVector circumference = letter_length(*x.circle(), Alphabet::omega);
  LexVector forward = y.s() >= x.s() ? y.s() - x.s() : circumference - (x.s() - y.s());
  LexVector backward = circumference - forward;
  return forward < backward ? forward : backward;
}

CheckResult quotient_structure(const SuiteOptions& o) {
  Sampler s(o.seed + 7);
  Tally tally;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const EdgeTriple e = s.edge_triple(8, 6);
    const Word u = s.reduced_word(8, 6);
    const TriplePoint ue = act_triple(u, e);
    tally.check(project(ue) == project(e),
                [&] { return "project not orbit invariant at " + to_string(e); });
    auto witness = orbit_witness(e, ue);
    tally.check(witness && act_triple(*witness, e) == ue,
                [&] { return "no orbit witness from " + to_string(e) + " to " + to_string(ue); });

    // An independently built triple with the same image.
    const Sign q = s.coin() ? Sign::positive : Sign::negative;
    const Letter edge2{e.edge().index, q};
    Word v = s.reduced_word(8, 6);
    while (v.last_letter() == edge2.inverse()) v = s.reduced_word(8, 6);
    const LexVector t2 = q == e.edge().sign
                             ? e.t()
                             : letter_length(e.edge().index, Alphabet::omega) - e.t();
    const EdgeTriple f(v, edge2, t2);
    tally.check(project(f) == project(e),
                [&] { return "projection mismatch " + to_string(f); });
    auto w2 = orbit_witness(e, f);
    tally.check(w2 && act_triple(*w2, e) == TriplePoint(f),
                [&] { return "witness fails from " + to_string(e) + " to " + to_string(f); });

    const EdgeTriple g = s.edge_triple(8, 6);
    if (project(g) != project(e)) {
      tally.check(!orbit_witness(e, g).has_value(),
                  [&] { return "witness across orbits " + to_string(g); });
    }

    const CirclePoint x = s.circle_point(3);
    const CirclePoint y = s.circle_point(3);
    tally.check(circle_dist(x, y) == circle_oracle(x, y),
                [&] { return "wedge formula at " + to_string(x) + " , " + to_string(y); });

    // Two points on one edge: the quotient distance |t - s| wraps to the
    // shorter arc.
    const LexVector t3 = s.interior_offset(e.edge().index);
    const EdgeTriple same(e.w(), e.edge(), t3);
    const LexVector gap = abs(e.t() - t3);
    const LexVector la = letter_length(e.edge().index, Alphabet::omega);
    const LexVector d = circle_dist(project(e), project(same));
    tally.check(d == std::min(gap, la - gap) && d <= gap,
                [&] { return "same-edge quotient distance at " + to_string(e); });
  }

  // Surjectivity onto C_a over a 100-point grid.
  for (std::uint32_t k = 1; k <= 8; ++k) {
    const AlphabetIndex a = idx(k);
    const LexVector la = letter_length(a, Alphabet::omega);
    std::vector<LexVector> grid{LexVector{}};
    for (std::int64_t j = 1; j <= 33; ++j) {
      grid.push_back(LexVector::unit(idx(k + 1), Alphabet::omega, j));
      grid.push_back(la - LexVector::unit(idx(k + 1), Alphabet::omega, j));
      grid.push_back(LexVector::unit(idx(k + 2), Alphabet::omega, j));
    }
    for (const LexVector& point : grid) {
      const TriplePoint e = make_triple_point(Word(), Letter{a, Sign::positive}, point);
      const CirclePoint target = point.is_zero() ? CirclePoint::wedge() : CirclePoint(a, point);
      tally.check(project(e) == target,
                  [&] { return "C_" + a.name() + " misses " + to_string(point); });
    }
  }
  return tally.finish("orbit invariance with witnesses, surjectivity, wedge metric");
}

CheckResult omega_plus_one_example(const SuiteOptions&) {
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = omega_plus_one_instability(20);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::set<AlphabetIndex> seen;
  for (const auto& row : rows) {
    const auto expected = Letter::generator(static_cast<std::uint32_t>(row.k));
    tally.check(row.edge_letter == expected, [&] {
      return "k=" + std::to_string(row.k) + " gave " + to_string(row.point);
    });
    if (row.edge_letter) seen.insert(row.edge_letter->index);
  }
  tally.check(seen.size() == rows.size(),
              [] { return "edge letters repeat across depths"; });
  tally.check(seconds < 1.0,
              [&] { return "took " + std::to_string(seconds) + " s"; });
  return tally.finish("edge letter of <L(b), a_k...a_1> is a_k for k = 1..20");
}

CheckResult embedding_remark(const SuiteOptions& o) {
  Sampler s(o.seed + 9);
  Tally tally;
  const std::vector<Rational> t_grid = rational_grid(100);
  for (int i = 0; i < 100; ++i) {
    const Word w = s.reduced_word(8, 8);
    const AlphabetIndex a = idx(static_cast<std::uint32_t>(s.uniform(1, 8)));
    const auto report = embed_compare(w, a, t_grid, offset_grid(a, Alphabet::omega));
    tally.check(report.only_endpoints(Alphabet::omega, a), [&] {
      return "w=" + show(w) + " a=" + a.name() + ": " +
             std::to_string(report.coincidences.size()) + " coincidences";
    });
  }
  return tally.finish("Cayley and Z^o edge embeddings meet only at endpoints");
}

CheckResult topology_inclusions(const SuiteOptions&) {
  Tally tally;
  const std::vector<Word> words = all_reduced_words(3, 5);
  std::size_t cases = 0;
  for (std::uint32_t k = 1; k <= 4; ++k) {
    const AlphabetIndex a = idx(k);
    const AlphabetIndex b = *a.successor();
    const LexVector eps_a = unit_epsilon(a);
    const std::vector<LexVector> radii{
        eps_a,
        LexVector::unit(a, Alphabet::omega, 2),
        eps_a - LexVector::unit(b, Alphabet::omega, 3),
        eps_a - LexVector::unit(idx(k + 2)),
        eps_a + LexVector::unit(b),
    };
    std::size_t failures = 0;
    std::string first;
    for (const Word& w : words) {
      for (const Word& v : words) {
        ++cases;
        if (in_metric_ball(w, eps_a, v) && !in_letter_ball(w, a, v)) {
          if (failures++ == 0) first = "B(w,eps_a) not in B(w,a): w=" + show(w) + " v=" + show(v);
        }
        if (in_letter_ball(w, b, v)) {
          for (const LexVector& eps : radii) {
            if (!in_metric_ball(w, eps, v) && failures++ == 0) {
              first = "B(w,b) not in B(w," + to_string(eps) + "): w=" + show(w) + " v=" + show(v);
            }
          }
        }
      }
    }
    tally.check(failures == 0, [&] { return first; });
  }
  tally.add_cases(cases);
  return tally.finish("both inclusions over " + std::to_string(words.size()) +
                      " words, thresholds a1..a4");
}

CheckResult discrepancy_report(const SuiteOptions& o) {
  Sampler s(o.seed + 11);
  Tally tally;
  std::array<std::size_t, 4> total{};
  std::array<std::size_t, 4> disagree{};
  auto record = [&](const EdgeTriple& x, const EdgeTriple& y) {
    const auto config = classify(x, y);
    const auto k = static_cast<std::size_t>(config);
    ++total[k];
    if (!triple_dist(x, y).agrees()) ++disagree[k];
  };
  for (std::size_t i = 0; i < o.samples; ++i) {
    const EdgeTriple e = s.edge_triple(6, 5);
    // Same edge, another offset.
    record(e, EdgeTriple(e.w(), e.edge(), s.interior_offset(e.edge().index)));
    // A sibling edge at the same base.
    Letter other = s.letter(5);
    while (other == e.edge() || e.w().last_letter() == other.inverse()) other = s.letter(5);
    record(e, EdgeTriple(e.w(), other, s.interior_offset(other.index)));
    // The next edge out along w a^p.
    const Word far = multiply(e.w(), Word({e.edge()}));
    Letter next = s.letter(5);
    while (far.last_letter() == next.inverse()) next = s.letter(5);
    record(e, EdgeTriple(far, next, s.interior_offset(next.index)));
    record(e, s.edge_triple(6, 5));
  }

  const auto same = static_cast<std::size_t>(EdgeConfiguration::same_edge);
  const auto sibling = static_cast<std::size_t>(EdgeConfiguration::sibling);
  const auto nested = static_cast<std::size_t>(EdgeConfiguration::nested);
  const auto other = static_cast<std::size_t>(EdgeConfiguration::other);
  tally.check(disagree[same] == 0, [] { return "simplified formula fails on a shared edge"; });
  tally.check(disagree[sibling] == 0, [] { return "simplified formula fails on sibling edges"; });
  tally.check(disagree[nested] > 0, [] { return "no nested-edge disagreement found"; });

  const EdgeTriple x(Word(), Letter::generator(1), LexVector{0, 1});
  const EdgeTriple y(Word::parse("a1"), Letter::generator(2), LexVector{0, 0, 1});
  const TripleDistance d = triple_dist(x, y);
  tally.check(d.exact == LexVector{1, -1, 1} && d.simplified == LexVector{1, 1, 1},
              [&] { return "nested example gave " + to_string(d.exact) + " / " + to_string(d.simplified); });

  std::ostringstream summary;
  summary << "simplified formula disagreements: same-edge " << disagree[same] << "/"
          << total[same] << ", sibling " << disagree[sibling] << "/" << total[sibling]
          << ", nested " << disagree[nested] << "/" << total[nested] << ", other "
          << disagree[other] << "/" << total[other] << "; e.g. " << to_string(x)
          << " vs " << to_string(y) << ": tree " << to_string(d.exact)
          << ", simplified " << to_string(d.simplified);
  return tally.finish(summary.str());
}

// ---------------------------------------------------------------------------
// Module invariants

CheckResult lex_order_properties(const SuiteOptions&) {
  Tally tally;
  std::vector<LexVector> vectors;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) vectors.push_back(LexVector{a, b, c});
  const LexVector zero;
  for (const auto& x : vectors) {
    tally.check(half_exact(x + x) == x, [&] { return "half_exact(2x) at " + to_string(x); });
    tally.check(abs(x).sign() >= 0 && (abs(x).is_zero() == x.is_zero()),
                [&] { return "abs at " + to_string(x); });
    for (const auto& y : vectors) {
      const int relations = (x < y) + (x == y) + (x > y);
      tally.check(relations == 1, [&] { return "trichotomy at " + to_string(x) + ", " + to_string(y); });
      tally.check(abs(x + y) <= abs(x) + abs(y),
                  [&] { return "abs triangle at " + to_string(x) + ", " + to_string(y); });
      const auto xy = x <=> y;
      for (const auto& z : vectors) {
        tally.check((x + z <=> y + z) == xy,
                    [&] { return "translation invariance at " + to_string(z); });
        if (xy < 0 && y < z) {
          tally.check(x < z, [&] { return "transitivity at " + to_string(x); });
        }
      }
    }
  }
  return tally.finish("exhaustive over support <= 3, entries in [-2,2]");
}

CheckResult word_properties(const SuiteOptions& o) {
  Sampler s(o.seed + 21);
  Tally tally;
  const Word identity;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Word raw = s.word(20, 5);
    const Cancellation c = s.cancellation(raw);
    tally.check(reduce(apply_cancellation(raw, c)) == reduce(raw),
                [&] { return "cancellation changes the reduced form of " + to_string(raw); });

    const Word g = s.reduced_word(10, 5);
    const Word h = s.coin() ? s.extend(g.prefix(static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(g.size())))), 5, 5)
                            : s.reduced_word(10, 5);
    tally.check(gromov(g, h) == length_vector(common_prefix(g, h)),
                [&] { return "gromov != L(prefix) at " + show(g) + " , " + show(h); });

    const auto subs = subwords(g);
    for (std::size_t k = 0; k < subs.size(); ++k) {
      tally.check(is_subword(subs[k], g), [&] { return "prefix not a subword of " + show(g); });
      if (k > 0) {
        tally.check(length_vector(subs[k - 1]) < length_vector(subs[k]),
                    [&] { return "subwords not increasing in " + show(g); });
      }
    }
    const bool listed = std::find(subs.begin(), subs.end(), h) != subs.end();
    tally.check(is_subword(h, g) == listed,
                [&] { return "is_subword disagrees with subwords at " + show(h); });

    const Word x = s.reduced_word(8, 5);
    const Word y = s.reduced_word(8, 5);
    const Word v = s.reduced_word(8, 5);
    const Word u = y_point(v, x, y);
    tally.check(u == y_point(x, v, y) && u == y_point(y, x, v) && u == y_point(v, y, x),
                [&] { return "y_point not symmetric at " + show(v) + " | " + show(x) + " | " + show(y); });
    tally.check(y_point(identity, x, y) == common_prefix(x, y),
                [&] { return "y_point(1,x,y) != common_prefix"; });
    tally.check(word_dist(v, x) == word_dist(v, u) + word_dist(u, x) &&
                    word_dist(x, y) == word_dist(x, u) + word_dist(u, y),
                [&] { return "y_point not on the geodesics at " + show(v); });
  }

  const WordStream harmonic = WordStream::harmonic();
  for (std::size_t j = 0; j <= 30; ++j) {
    for (std::size_t k = 0; k <= 30; ++k) {
      const LexVector d = word_dist(harmonic.truncate(j), harmonic.truncate(k));
      const auto lead = d.leading_index();
      tally.check(!lead || lead->rank() > std::min(j, k),
                  [&] { return "stream truncations " + std::to_string(j) + "," + std::to_string(k) + " not Cauchy"; });
    }
  }
  return tally.finish("cancellation, prefixes, subwords, Y point, stream Cauchy");
}

CheckResult tree_properties(const SuiteOptions& o) {
  Sampler s(o.seed + 22);
  Tally tally;
  const TreePoint origin = TreePoint::origin();
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Word h = s.reduced_word(8, 6);
    const TreePoint p = s.tree_point(10, 6);
    tally.check(point_eq(tree_act(h, tree_preimage(h, p)), p),
                [&] { return "preimage formula fails for h=" + show(h) + " p=" + to_string(p); });

    const TreePoint end = TreePoint::vertex(p.g());
    tally.check(tree_dist(origin, p) + tree_dist(p, end) == length_vector(p.g()),
                [&] { return "geodesic alignment at " + to_string(p); });

    const TreePoint q = s.tree_point(10, 6);
    const TreePoint r = s.tree_point(10, 6);
    auto doubled = [&](const TreePoint& x, const TreePoint& y) {
      return tree_dist(origin, x) + tree_dist(origin, y) - tree_dist(x, y);
    };
    tally.check(two_smallest_equal(doubled(p, q), doubled(p, r), doubled(q, r)),
                [&] { return "tree not 0-hyperbolic at " + to_string(p); });
  }

  const std::vector<Word> ball = all_reduced_words(3, 2);
  const AxiomReport report =
      check_length_axioms(big_free_length_oracle(), std::span<const Word>(ball));
  tally.check(!report.has_value(), [&] { return "length axioms: " + report->detail; });
  return tally.finish("preimages, geodesic alignment, four-point condition, length axioms");
}

CheckResult cayley_properties(const SuiteOptions& o) {
  Sampler s(o.seed + 23);
  Tally tally;
  const CayleyPoint origin = CayleyPoint::vertex(Word());
  std::size_t on_segment_guarded = 0;
  std::size_t on_segment_reversed = 0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const CayleyPoint x = s.cayley_point(6, 4);
    CayleyPoint y = s.cayley_point(6, 4);
    if (s.coin() && !x.is_vertex()) {
      // Bias towards points sharing a geodesic from the origin.
      y = CayleyPoint::make(x.w(), *x.edge(), s.open_unit_rational());
    }
    const CayleyPoint z = s.cayley_point(6, 4);
    auto doubled = [&](const CayleyPoint& a, const CayleyPoint& b) {
      return cayley_dist(origin, a) + cayley_dist(origin, b) - cayley_dist(a, b);
    };
    tally.check(two_smallest_equal(doubled(x, y), doubled(x, z), doubled(y, z)),
                [&] { return "Cayley graph not 0-hyperbolic at " + to_string(x); });

    const CayleyShortcuts sc = cayley_shortcuts(x, y);
    tally.check(sc.branch_agrees(),
                [&] { return "branch shortcut disagrees at " + to_string(x) + " , " + to_string(y); });
    // The on-segment shortcut Y - X is the distance exactly when X <= Y;
    // with the guard alone it can come out negative.
    for (auto [guard, agrees, lower, upper] :
         {std::tuple{sc.on_segment_guard, sc.on_segment_agrees(), x.height(), y.height()},
          std::tuple{sc.swapped_guard, sc.swapped_agrees(), y.height(), x.height()}}) {
      if (!guard) continue;
      ++on_segment_guarded;
      if (!agrees) ++on_segment_reversed;
      tally.check(agrees == (lower <= upper),
                  [&] { return "on-segment shortcut at " + to_string(x) + " , " + to_string(y); });
    }
  }
  for (auto [len, letters, expected] :
       {std::tuple<std::size_t, std::uint32_t, std::size_t>{0, 3, 1}, {1, 3, 7}, {2, 3, 37}, {3, 2, 53}}) {
    const BallGraph g = ball_graph(Word::parse("a1 a2^-1"), len, letters);
    tally.check(g.is_tree() && g.vertices.size() == expected,
                [&] { return "ball graph of radius " + std::to_string(len) + " is not the expected tree"; });
  }
  return tally.finish("0-hyperbolic; shortcut guards held " +
                      std::to_string(on_segment_guarded) + " times, " +
                      std::to_string(on_segment_reversed) +
                      " with Y < X where Y - X is negative; balls are trees");
}

CheckResult truncation_convergence(const SuiteOptions&) {
  Tally tally;
  const WordStream harmonic = WordStream::harmonic();
  for (std::uint32_t k = 1; k <= 10; ++k) {
    const AlphabetIndex a = idx(k);
    for (std::size_t i = k + 1; i <= 30; ++i) {
      for (std::size_t j = k + 1; j <= 30; ++j) {
        tally.check(in_letter_ball(harmonic.truncate(i), a, harmonic.truncate(j)),
                    [&] { return "truncations " + std::to_string(i) + "," + std::to_string(j); });
      }
    }
  }
  return tally.finish("harmonic truncations settle into every B(w, a)");
}

}  // namespace

std::vector<SuiteCheck> suite_checks() {
  return {
      {"C1", "unique reduced form", unique_reduced_form},
      {"C2", "0-hyperbolicity of BF", zero_hyperbolic},
      {"C3", "metric axioms", metric_axioms_all},
      {"C4", "isometric action", isometric_action},
      {"C5", "triple canonicalization", triple_canonicalization},
      {"C6", "non-geodesicity witness", non_geodesic_witness},
      {"C7", "quotient structure", quotient_structure},
      {"C8", "omega+1 example", omega_plus_one_example},
      {"C9", "embedding remark", embedding_remark},
      {"C10", "topology ball inclusions", topology_inclusions},
      {"C11", "distance formula discrepancy report", discrepancy_report},
      {"P-lex", "lexicographic order", lex_order_properties},
      {"P-words", "word invariants", word_properties},
      {"P-tree", "tree invariants", tree_properties},
      {"P-cayley", "Cayley graph invariants", cayley_properties},
      {"P-topology", "truncation convergence", truncation_convergence},
  };
}

namespace {

CheckResult timed(const SuiteCheck& check, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = check.run(options);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = check.id;
  r.title = check.title;
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
  const auto checks = suite_checks();
  std::vector<CheckResult> results;
  if (!options.parallel) {
    for (const auto& c : checks) results.push_back(timed(c, options));
    return results;
  }
  std::vector<std::future<CheckResult>> pending;
  for (const auto& c : checks) {
    pending.push_back(std::async(std::launch::async, timed, c, options));
  }
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

CheckResult run_check(const std::string& id, const SuiteOptions& options) {
  for (const auto& c : suite_checks()) {
    if (c.id == id) return timed(c, options);
  }
  throw DomainError("unknown suite check " + id);
}

std::string format_result(const CheckResult& r, bool with_timing) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.title << " ("
      << r.cases << " cases";
  if (with_timing) {
    out.setf(std::ios::fixed);
    out.precision(2);
    out << ", " << r.seconds << " s";
  }
  out << ")";
  if (!r.detail.empty()) out << ": " << r.detail;
  return out.str();
}

}  // namespace bigfree
