#pragma once

// Finite words in the big free group BF(o): free reduction, the cancellation
// calculus, the Z^o length function and metric, Gromov products at the
// identity, subwords, and truncation streams standing in for infinite words.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigfree/ordered_abelian.hpp"

namespace bigfree {

enum class Sign : std::int8_t { negative = -1, positive = 1 };

inline Sign flip(Sign s) {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

struct Letter {
  AlphabetIndex index;
  Sign sign = Sign::positive;

  static Letter generator(std::uint32_t rank, Sign sign = Sign::positive) {
    return {AlphabetIndex::letter(rank), sign};
  }

  Letter inverse() const { return {index, flip(sign)}; }
  bool cancels(Letter other) const {
    return index == other.index && sign != other.sign;
  }

  friend bool operator==(Letter, Letter) = default;
  // By index, then a before a^-1.
  friend std::strong_ordering operator<=>(Letter x, Letter y) {
    if (auto c = x.index <=> y.index; c != 0) return c;
    return static_cast<int>(y.sign) <=> static_cast<int>(x.sign);
  }
};

// "a3", "a3^-1", "b", "b^-1".
std::string to_string(Letter letter);

// Parses a single letter token `a<k>`, `a<k>^<+-1>`, `b` or `b^<+-1>`.
Letter parse_letter(std::string_view text, Alphabet alphabet = Alphabet::omega);

class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(std::vector<Letter> letters, Alphabet alphabet = Alphabet::omega);

  // Whitespace-separated tokens `a<k>` / `a<k>^<e>` (e != 0), plus `b` for the
  // TOP letter in omega+1. Does not reduce.
  static Word parse(std::string_view text, Alphabet alphabet = Alphabet::omega);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Alphabet alphabet() const { return alphabet_; }

  // True iff no adjacent pair x x^-1; computed once at construction.
  bool is_reduced() const { return reduced_; }

  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::optional<Letter> last_letter() const {
    if (letters_.empty()) return std::nullopt;
    return letters_.back();
  }

  // The first k letters.
  Word prefix(std::size_t k) const;

  friend bool operator==(const Word& x, const Word& y) {
    return x.alphabet_ == y.alphabet_ && x.letters_ == y.letters_;
  }

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_ = Alphabet::omega;
  bool reduced_ = true;
};

// Canonical text: one token per letter, inverse letters as `a<k>^-1`.
// The empty word is the empty string.
std::string to_string(const Word& w);

// Shortlex: by length, then lexicographically on letters.
struct ShortLex {
  bool operator()(const Word& x, const Word& y) const;
};

Word reduce(const Word& w);
Word multiply(const Word& w, const Word& v);
Word inverse(const Word& w);

// The length function L: the coordinate at a counts occurrences of a and
// a^-1 in the reduced form.
LexVector length_vector(const Word& w);
// L of a single generator, i.e. the unit vector at its index.
LexVector letter_length(AlphabetIndex index, Alphabet alphabet);

// L(w^-1 v).
LexVector word_dist(const Word& w, const Word& v);

// Gromov product at the identity, (L(g) + L(h) - L(g^-1 h)) / 2.
LexVector gromov(const Word& g, const Word& h);
// The doubled product, which never needs halving.
LexVector gromov_doubled(const Word& g, const Word& h);

// Longest common initial segment of two reduced words.
Word common_prefix(const Word& g, const Word& h);

// v is a subword (initial segment) of w: L(v) + L(v^-1 w) = L(w).
bool is_subword(const Word& v, const Word& w);

// All initial segments of a reduced word, shortest first.
std::vector<Word> subwords(const Word& w);

// Cancellations use 1-based positions.
struct PositionPair {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const PositionPair&, const PositionPair&) = default;
};

class Cancellation {
 public:
  Cancellation() = default;
  explicit Cancellation(std::vector<PositionPair> pairs)
      : pairs_(std::move(pairs)) {}

  // Comma-separated `i-j` pairs; the empty string is the empty pairing.
  static Cancellation parse(std::string_view text);

  const std::vector<PositionPair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

 private:
  std::vector<PositionPair> pairs_;
};

std::string to_string(const Cancellation& c);

enum class CancellationCondition { complete, noncrossing, inverse_pairing };

std::string to_string(CancellationCondition condition);

struct CancellationViolation {
  CancellationCondition condition;
  std::size_t position;  // t, 1-based
  std::size_t partner;   // t*
  std::string detail;
};

// Checks completeness, noncrossing and inverse pairing for every t in the
// pairing domain, in increasing t. Returns the first violation, or nothing if
// the pairing is a valid cancellation. Throws DomainError for positions out of
// range or a pairing that is not a fixed-point-free involution.
std::optional<CancellationViolation> verify_cancellation(
    const Word& w, const Cancellation& c);

// Restriction of w to the positions outside the pairing.
Word apply_cancellation(const Word& w, const Cancellation& c);

enum class StreamOrientation { forward, reverse };

// An infinite word given by a rule k -> letter (k >= 1). A forward stream is
// rule(1) rule(2) ...; a reverse stream is ... rule(3) rule(2) rule(1).
class WordStream {
 public:
  using Rule = std::function<Letter(std::size_t)>;

  WordStream(Rule rule, StreamOrientation orientation,
             std::size_t multiplicity_bound,
             Alphabet alphabet = Alphabet::omega);

  // a1 a2 a3 ...
  static WordStream harmonic(Alphabet alphabet = Alphabet::omega);
  // ... a3 a2 a1
  static WordStream reverse_harmonic(Alphabet alphabet = Alphabet::omega);

  // First k letters under the stream's orientation. Throws DomainError if the
  // rule breaks its per-letter multiplicity bound within those letters.
  Word truncate(std::size_t k) const;

  StreamOrientation orientation() const { return orientation_; }
  std::size_t multiplicity_bound() const { return multiplicity_bound_; }
  Alphabet alphabet() const { return alphabet_; }

 private:
  Rule rule_;
  StreamOrientation orientation_;
  std::size_t multiplicity_bound_;
  Alphabet alphabet_;
};

}  // namespace bigfree
