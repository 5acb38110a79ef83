#pragma once

// Seeded generators and exhaustive enumerators for property checks.

#include <cstdint>
#include <random>
#include <vector>

#include "bigfree/cayley.hpp"
#include "bigfree/combinatorial.hpp"
#include "bigfree/tree.hpp"
#include "bigfree/words.hpp"

namespace bigfree {

// Every reduced word of length <= max_len over a_1..a_max_index, in
// shortlex order.
std::vector<Word> all_reduced_words(std::size_t max_len,
                                    std::uint32_t max_index,
                                    Alphabet alphabet = Alphabet::omega);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() { return engine_; }

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  Letter letter(std::uint32_t max_index);
  // Any word, usually unreduced.
  Word word(std::size_t max_len, std::uint32_t max_index);
  Word reduced_word(std::size_t max_len, std::uint32_t max_index);
  Word nontrivial_reduced_word(std::size_t max_len, std::uint32_t max_index);
  // Appends letters to w without creating cancellation.
  Word extend(const Word& w, std::size_t max_extra, std::uint32_t max_index);

  // A t with [] < t < L(a): either y or L(a) - y for some y > 0 supported on
  // the three indices after a.
  LexVector interior_offset(AlphabetIndex a);

  TreePoint tree_point(std::size_t max_len, std::uint32_t max_index);
  // Another representative <n, g'> of the same tree point.
  TreePoint alternate_representative(const TreePoint& p,
                                     std::uint32_t max_index);
  EdgeTriple edge_triple(std::size_t max_len, std::uint32_t max_index);
  TriplePoint triple_point(std::size_t max_len, std::uint32_t max_index);

  // In (0, 1) with denominator <= 12.
  Rational open_unit_rational();
  CayleyPoint cayley_point(std::size_t max_len, std::uint32_t max_index);

  CirclePoint circle_point(std::uint32_t max_index);

  // A nonempty valid cancellation of an unreduced word: random adjacent
  // pairs, grown outward and merged at random.
  Cancellation cancellation(const Word& w);

 private:
  std::mt19937_64 engine_;
};

}  // namespace bigfree
