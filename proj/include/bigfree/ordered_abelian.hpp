#pragma once

// Finitely supported vectors over a well-ordered alphabet (order type omega
// or omega+1) with the lexicographic order. Integer coordinates give Z^o,
// exact rational coordinates give the Q^o stand-in for R^o.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "bigfree/error.hpp"

namespace bigfree {

enum class Alphabet : std::uint8_t { omega, omega_plus_one };

std::string to_string(Alphabet alphabet);
Alphabet parse_alphabet(std::string_view text);

// A position in the alphabet: a natural rank k >= 1 (the letter a_k) or the
// distinguished TOP position that exists only in the omega+1 instance.
class AlphabetIndex {
 public:
  static AlphabetIndex letter(std::uint32_t rank) {
    if (rank == 0 || rank == top_value) {
      throw DomainError("alphabet rank out of range: " + std::to_string(rank));
    }
    return AlphabetIndex(rank);
  }
  static constexpr AlphabetIndex top() { return AlphabetIndex(top_value); }

  constexpr bool is_top() const { return value_ == top_value; }

  std::uint32_t rank() const {
    if (is_top()) throw DomainError("TOP has no natural rank");
    return value_;
  }

  // Next natural rank. TOP is a limit position, so a_k's successor is a_{k+1}
  // even in omega+1; TOP itself has none.
  std::optional<AlphabetIndex> successor() const {
    if (is_top() || value_ + 1 == top_value) return std::nullopt;
    return AlphabetIndex(value_ + 1);
  }

  bool allowed_in(Alphabet alphabet) const {
    return !is_top() || alphabet == Alphabet::omega_plus_one;
  }

  // "a3" or "b".
  std::string name() const {
    return is_top() ? std::string("b") : "a" + std::to_string(value_);
  }

  friend constexpr auto operator<=>(AlphabetIndex, AlphabetIndex) = default;

 private:
  static constexpr std::uint32_t top_value =
      std::numeric_limits<std::uint32_t>::max();

  explicit constexpr AlphabetIndex(std::uint32_t value) : value_(value) {}

  std::uint32_t value_;
};

using Rational = boost::rational<std::int64_t>;

template <class Coord>
struct CoordTraits;

template <>
struct CoordTraits<std::int64_t> {
  static std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t out;
    if (__builtin_add_overflow(x, y, &out)) {
      throw std::overflow_error("lex vector coordinate overflow");
    }
    return out;
  }
  static std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t out;
    if (__builtin_mul_overflow(x, y, &out)) {
      throw std::overflow_error("lex vector coordinate overflow");
    }
    return out;
  }
  static std::string format(std::int64_t x) { return std::to_string(x); }
  static std::int64_t parse(std::string_view text, std::size_t offset);
};

template <>
struct CoordTraits<Rational> {
  static Rational add(const Rational& x, const Rational& y) { return x + y; }
  static Rational mul(const Rational& x, const Rational& y) { return x * y; }
  static std::string format(const Rational& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" +
           std::to_string(x.denominator());
  }
  static Rational parse(std::string_view text, std::size_t offset);
};

template <class Coord>
class BasicLexVector {
 public:
  using Entry = std::pair<AlphabetIndex, Coord>;

  BasicLexVector() = default;
  explicit BasicLexVector(Alphabet alphabet) : alphabet_(alphabet) {}

  // Dense form: the i-th value is the coordinate at a_{i+1}.
  BasicLexVector(std::initializer_list<Coord> dense,
                 Alphabet alphabet = Alphabet::omega)
      : alphabet_(alphabet) {
    std::uint32_t rank = 1;
    for (const Coord& c : dense) {
      if (c != Coord(0)) entries_.emplace_back(AlphabetIndex::letter(rank), c);
      ++rank;
    }
  }

  // Entries in any order; repeated indices are summed.
  static BasicLexVector from_entries(std::vector<Entry> entries,
                                     Alphabet alphabet = Alphabet::omega) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& x, const Entry& y) { return x.first < y.first; });
    BasicLexVector out(alphabet);
    for (auto& [index, value] : entries) {
      out.check_index(index);
      if (!out.entries_.empty() && out.entries_.back().first == index) {
        out.entries_.back().second =
            CoordTraits<Coord>::add(out.entries_.back().second, value);
        if (out.entries_.back().second == Coord(0)) out.entries_.pop_back();
      } else if (value != Coord(0)) {
        out.entries_.emplace_back(index, std::move(value));
      }
    }
    return out;
  }

  static BasicLexVector unit(AlphabetIndex index,
                             Alphabet alphabet = Alphabet::omega,
                             Coord value = Coord(1)) {
    return from_entries({{index, std::move(value)}}, alphabet);
  }

  // Embeds a vector with another coordinate type (e.g. Z^o into Q^o).
  template <class Other>
  static BasicLexVector convert(const BasicLexVector<Other>& other) {
    BasicLexVector out(other.alphabet());
    out.entries_.reserve(other.entries().size());
    for (const auto& [index, value] : other.entries()) {
      out.entries_.emplace_back(index, Coord(value));
    }
    return out;
  }

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Coord operator[](AlphabetIndex index) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), index,
        [](const Entry& e, AlphabetIndex i) { return e.first < i; });
    return it != entries_.end() && it->first == index ? it->second : Coord(0);
  }

  // Least index with a nonzero coordinate.
  std::optional<AlphabetIndex> leading_index() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.front().first;
  }

  int sign() const {
    if (entries_.empty()) return 0;
    return entries_.front().second > Coord(0) ? 1 : -1;
  }

  bool componentwise_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.second > Coord(0); });
  }

  BasicLexVector operator-() const {
    BasicLexVector out = *this;
    for (auto& entry : out.entries_) {
      entry.second = CoordTraits<Coord>::mul(Coord(-1), entry.second);
    }
    return out;
  }

  friend BasicLexVector operator+(const BasicLexVector& x,
                                  const BasicLexVector& y) {
    check_same_instance(x, y);
    BasicLexVector out(x.alphabet_);
    out.entries_.reserve(x.entries_.size() + y.entries_.size());
    auto i = x.entries_.begin();
    auto j = y.entries_.begin();
    while (i != x.entries_.end() || j != y.entries_.end()) {
      if (j == y.entries_.end() ||
          (i != x.entries_.end() && i->first < j->first)) {
        out.entries_.push_back(*i++);
      } else if (i == x.entries_.end() || j->first < i->first) {
        out.entries_.push_back(*j++);
      } else {
        Coord sum = CoordTraits<Coord>::add(i->second, j->second);
        if (sum != Coord(0)) out.entries_.emplace_back(i->first, sum);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend BasicLexVector operator-(const BasicLexVector& x,
                                  const BasicLexVector& y) {
    return x + (-y);
  }

  friend BasicLexVector operator*(const Coord& scalar,
                                  const BasicLexVector& x) {
    if (scalar == Coord(0)) return BasicLexVector(x.alphabet_);
    BasicLexVector out = x;
    for (auto& entry : out.entries_) {
      entry.second = CoordTraits<Coord>::mul(scalar, entry.second);
    }
    return out;
  }

  BasicLexVector& operator+=(const BasicLexVector& y) {
    return *this = *this + y;
  }
  BasicLexVector& operator-=(const BasicLexVector& y) {
    return *this = *this - y;
  }

  friend bool operator==(const BasicLexVector& x, const BasicLexVector& y) {
    check_same_instance(x, y);
    return x.entries_ == y.entries_;
  }

  // Standard lexicographic order: the first index where the coordinates
  // differ decides.
  friend std::strong_ordering operator<=>(const BasicLexVector& x,
                                          const BasicLexVector& y) {
    check_same_instance(x, y);
    auto i = x.entries_.begin();
    auto j = y.entries_.begin();
    while (i != x.entries_.end() && j != y.entries_.end()) {
      if (i->first != j->first) {
        // The one with the smaller index has a nonzero coordinate where the
        // other is zero.
        return i->first < j->first ? sign_ordering(i->second)
                                   : flip(sign_ordering(j->second));
      }
      if (i->second != j->second) {
        return i->second < j->second ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
      }
      ++i;
      ++j;
    }
    if (i != x.entries_.end()) return sign_ordering(i->second);
    if (j != y.entries_.end()) return flip(sign_ordering(j->second));
    return std::strong_ordering::equal;
  }

 private:
  static void check_same_instance(const BasicLexVector& x,
                                  const BasicLexVector& y) {
    if (x.alphabet_ != y.alphabet_) {
      throw InstanceMismatch("lex vectors from different alphabet instances");
    }
  }

  void check_index(AlphabetIndex index) const {
    if (!index.allowed_in(alphabet_)) {
      throw InstanceMismatch("TOP coordinate outside the omega+1 instance");
    }
  }

  static std::strong_ordering sign_ordering(const Coord& c) {
    return c > Coord(0) ? std::strong_ordering::greater
                        : std::strong_ordering::less;
  }
  static std::strong_ordering flip(std::strong_ordering o) {
    return o == std::strong_ordering::less ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
  }

  Alphabet alphabet_ = Alphabet::omega;
  std::vector<Entry> entries_;  // sorted by index, no zero values
};

using LexVector = BasicLexVector<std::int64_t>;
using RationalLexVector = BasicLexVector<Rational>;

template <class Coord>
std::strong_ordering compare(const BasicLexVector<Coord>& x,
                             const BasicLexVector<Coord>& y) {
  return x <=> y;
}

template <class Coord>
BasicLexVector<Coord> abs(const BasicLexVector<Coord>& x) {
  return x.sign() < 0 ? -x : x;
}

// x / 2, provided every coordinate is even. Gromov products live in
// (1/2)Lambda in general; this is where membership in Lambda gets certified.
LexVector half_exact(const LexVector& x);

// "[c1,c2,...]" with trailing zeros trimmed and an optional ";TOP=c" suffix
// before the closing bracket.
template <class Coord>
std::string to_string(const BasicLexVector<Coord>& x) {
  std::string out = "[";
  std::uint32_t next_rank = 1;
  std::optional<Coord> top;
  for (const auto& [index, value] : x.entries()) {
    if (index.is_top()) {
      top = value;
      continue;
    }
    for (; next_rank < index.rank(); ++next_rank) {
      out += next_rank == 1 ? "0" : ",0";
    }
    if (next_rank > 1) out += ',';
    out += CoordTraits<Coord>::format(value);
    next_rank = index.rank() + 1;
  }
  if (top) out += ";TOP=" + CoordTraits<Coord>::format(*top);
  out += ']';
  return out;
}

LexVector parse_lex_vector(std::string_view text,
                           Alphabet alphabet = Alphabet::omega);
RationalLexVector parse_rational_lex_vector(
    std::string_view text, Alphabet alphabet = Alphabet::omega);

}  // namespace bigfree
