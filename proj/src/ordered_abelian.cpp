#include "bigfree/ordered_abelian.hpp"

#include <cctype>
#include <charconv>

namespace bigfree {

std::string to_string(Alphabet alphabet) {
  return alphabet == Alphabet::omega ? "omega" : "omega+1";
}

Alphabet parse_alphabet(std::string_view text) {
  if (text == "omega") return Alphabet::omega;
  if (text == "omega+1") return Alphabet::omega_plus_one;
  throw ParseError("unknown alphabet '" + std::string(text) +
                       "' (expected omega or omega+1)",
                   0);
}

LexVector half_exact(const LexVector& x) {
  std::vector<LexVector::Entry> halved;
  halved.reserve(x.entries().size());
  for (const auto& [index, value] : x.entries()) {
    if (value % 2 != 0) {
      throw HalfError("odd coordinate at " + index.name() + " in " +
                      to_string(x));
    }
    halved.emplace_back(index, value / 2);
  }
  return LexVector::from_entries(std::move(halved), x.alphabet());
}

namespace {

std::int64_t parse_int(std::string_view text, std::size_t offset) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'",
                     offset);
  }
  return value;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

template <class Coord>
BasicLexVector<Coord> parse_vector(std::string_view text, Alphabet alphabet) {
  std::size_t offset = 0;
  text = trim(text, offset);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("vector must be written [c1,c2,...]", offset);
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t body_offset = offset + 1;

  std::vector<typename BasicLexVector<Coord>::Entry> entries;
  std::string_view dense = body;
  if (auto semi = body.find(';'); semi != std::string_view::npos) {
    dense = body.substr(0, semi);
    std::size_t top_offset = body_offset + semi + 1;
    std::string_view top = trim(body.substr(semi + 1), top_offset);
    if (top.substr(0, 4) != "TOP=") {
      throw ParseError("expected TOP=<c> after ';'", top_offset);
    }
    if (alphabet != Alphabet::omega_plus_one) {
      throw ParseError("TOP coordinate requires the omega+1 alphabet",
                       top_offset);
    }
    std::size_t value_offset = top_offset + 4;
    std::string_view value = trim(top.substr(4), value_offset);
    entries.emplace_back(AlphabetIndex::top(),
                         CoordTraits<Coord>::parse(value, value_offset));
  }

  std::size_t item_offset = body_offset;
  std::string_view rest = trim(dense, item_offset);
  std::uint32_t rank = 1;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    std::size_t value_offset = item_offset;
    item = trim(item, value_offset);
    entries.emplace_back(AlphabetIndex::letter(rank++),
                         CoordTraits<Coord>::parse(item, value_offset));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    item_offset += comma + 1;
    if (rest.empty()) throw ParseError("trailing comma", item_offset);
  }
  return BasicLexVector<Coord>::from_entries(std::move(entries), alphabet);
}

}  // namespace

std::int64_t CoordTraits<std::int64_t>::parse(std::string_view text,
                                               std::size_t offset) {
  return parse_int(text, offset);
}

Rational CoordTraits<Rational>::parse(std::string_view text,
                                      std::size_t offset) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, offset));
  std::int64_t num = parse_int(text.substr(0, slash), offset);
  std::int64_t den = parse_int(text.substr(slash + 1), offset + slash + 1);
  if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
  return Rational(num, den);
}

LexVector parse_lex_vector(std::string_view text, Alphabet alphabet) {
  return parse_vector<std::int64_t>(text, alphabet);
}

RationalLexVector parse_rational_lex_vector(std::string_view text,
                                            Alphabet alphabet) {
  return parse_vector<Rational>(text, alphabet);
}

}  // namespace bigfree
