#include "bigfree/sampling.hpp"

#include <algorithm>

namespace bigfree {

std::vector<Word> all_reduced_words(std::size_t max_len,
                                    std::uint32_t max_index,
                                    Alphabet alphabet) {
  std::vector<Letter> letters;
  for (std::uint32_t k = 1; k <= max_index; ++k) {
    letters.push_back(Letter::generator(k, Sign::positive));
    letters.push_back(Letter::generator(k, Sign::negative));
  }
  std::sort(letters.begin(), letters.end());
  std::vector<Word> out{Word(alphabet)};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Letter x : letters) {
        if (out[i].last_letter() == x.inverse()) continue;
        std::vector<Letter> grown(out[i].letters().begin(),
                                  out[i].letters().end());
        grown.push_back(x);
        out.emplace_back(std::move(grown), alphabet);
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Letter Sampler::letter(std::uint32_t max_index) {
  auto rank = static_cast<std::uint32_t>(uniform(1, max_index));
  return Letter::generator(rank, coin() ? Sign::positive : Sign::negative);
}

Word Sampler::word(std::size_t max_len, std::uint32_t max_index) {
  auto len = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_len)));
  std::vector<Letter> letters;
  letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    // Bias towards cancellation so that reduction has work to do.
    if (!letters.empty() && uniform(0, 3) == 0) {
      letters.push_back(letters.back().inverse());
    } else {
      letters.push_back(letter(max_index));
    }
  }
  return Word(std::move(letters));
}

Word Sampler::extend(const Word& w, std::size_t max_extra,
                     std::uint32_t max_index) {
  auto extra =
      static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_extra)));
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  for (std::size_t i = 0; i < extra; ++i) {
    Letter x = letter(max_index);
    while (!letters.empty() && letters.back().cancels(x)) x = letter(max_index);
    letters.push_back(x);
  }
  return Word(std::move(letters), w.alphabet());
}

Word Sampler::reduced_word(std::size_t max_len, std::uint32_t max_index) {
  return extend(Word(), max_len, max_index);
}

Word Sampler::nontrivial_reduced_word(std::size_t max_len,
                                      std::uint32_t max_index) {
  Word w;
  while (w.empty()) w = reduced_word(max_len, max_index);
  return w;
}

LexVector Sampler::interior_offset(AlphabetIndex a) {
  std::vector<LexVector::Entry> entries;
  auto next = a.successor();
  for (int i = 0; i < 3 && next; ++i, next = next->successor()) {
    entries.emplace_back(*next, uniform(-3, 3));
  }
  LexVector y = LexVector::from_entries(std::move(entries));
  if (y.is_zero()) y = LexVector::unit(*a.successor());
  if (y.sign() < 0) y = -y;
  if (coin()) return y;
  return letter_length(a, Alphabet::omega) - y;
}

TreePoint Sampler::tree_point(std::size_t max_len, std::uint32_t max_index) {
  Word g = reduced_word(max_len, max_index);
  if (g.empty()) return TreePoint::origin();
  auto q = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(g.size())));
  LexVector before = length_vector(g.prefix(q - 1));
  switch (uniform(0, 3)) {
    case 0:
      return TreePoint(before, g);
    case 1:
      return TreePoint(before + letter_length(g[q - 1].index, Alphabet::omega), g);
    default:
      return TreePoint(before + interior_offset(g[q - 1].index), g);
  }
}

TreePoint Sampler::alternate_representative(const TreePoint& p,
                                            std::uint32_t max_index) {
  TreePoint canonical = from_triple(to_triple(p));
  return TreePoint(p.n(), extend(canonical.g(), 3, max_index));
}

EdgeTriple Sampler::edge_triple(std::size_t max_len, std::uint32_t max_index) {
  Word w = reduced_word(max_len, max_index);
  Letter edge = letter(max_index);
  while (w.last_letter() == edge.inverse()) edge = letter(max_index);
  return EdgeTriple(std::move(w), edge, interior_offset(edge.index));
}

TriplePoint Sampler::triple_point(std::size_t max_len, std::uint32_t max_index) {
  if (uniform(0, 4) == 0) return reduced_word(max_len, max_index);
  return edge_triple(max_len, max_index);
}

Rational Sampler::open_unit_rational() {
  std::int64_t den = uniform(2, 12);
  return Rational(uniform(1, den - 1), den);
}

CayleyPoint Sampler::cayley_point(std::size_t max_len, std::uint32_t max_index) {
  Word w = reduced_word(max_len, max_index);
  if (uniform(0, 4) == 0) return CayleyPoint::vertex(std::move(w));
  Letter edge = letter(max_index);
  while (w.last_letter() == edge.inverse()) edge = letter(max_index);
  return CayleyPoint::make(std::move(w), edge, open_unit_rational());
}

CirclePoint Sampler::circle_point(std::uint32_t max_index) {
  if (uniform(0, 9) == 0) return CirclePoint::wedge();
  AlphabetIndex a = AlphabetIndex::letter(static_cast<std::uint32_t>(uniform(1, max_index)));
  return CirclePoint(a, interior_offset(a));
}

Cancellation Sampler::cancellation(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w[i].cancels(w[i + 1])) starts.push_back(i);
  }
  if (starts.empty()) return Cancellation();
  std::shuffle(starts.begin(), starts.end(), engine_);

  std::vector<bool> used(n, false);
  std::vector<PositionPair> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [l, r], 0-based
  for (std::size_t k = 0; k < starts.size(); ++k) {
    std::size_t i = starts[k];
    if (used[i] || used[i + 1]) continue;
    if (k > 0 && !coin()) continue;
    used[i] = used[i + 1] = true;
    pairs.push_back({i + 1, i + 2});
    blocks.emplace_back(i, i + 1);
  }

  auto merge = [&] {
    std::sort(blocks.begin(), blocks.end());
    std::vector<std::pair<std::size_t, std::size_t>> merged;
    for (auto b : blocks) {
      if (!merged.empty() && merged.back().second + 1 == b.first) {
        merged.back().second = b.second;
      } else {
        merged.push_back(b);
      }
    }
    blocks = std::move(merged);
  };
  merge();

  auto growth_steps = uniform(0, static_cast<std::int64_t>(n));
  for (std::int64_t step = 0; step < growth_steps; ++step) {
    auto& [l, r] = blocks[static_cast<std::size_t>(
        uniform(0, static_cast<std::int64_t>(blocks.size()) - 1))];
    if (l == 0 || r + 1 >= n || used[l - 1] || used[r + 1]) continue;
    if (!w[l - 1].cancels(w[r + 1])) continue;
    --l;
    ++r;
    used[l] = used[r] = true;
    pairs.push_back({l + 1, r + 1});
    merge();
  }
  return Cancellation(std::move(pairs));
}

}  // namespace bigfree
