#include "bigfree/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace bigfree {

namespace {

void check_same_alphabet(const Word& w, const Word& v) {
  if (w.alphabet() != v.alphabet()) {
    throw InstanceMismatch("words from different alphabet instances");
  }
}

void require_reduced(const Word& w, const char* what) {
  if (!w.is_reduced()) {
    throw DomainError(std::string(what) + " requires a reduced word, got '" +
                      to_string(w) + "'");
  }
}

bool has_cancelling_pair(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i - 1].cancels(letters[i])) return true;
  }
  return false;
}

std::int64_t parse_exponent(std::string_view text, std::size_t offset) {
  std::int64_t e = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, e);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("bad exponent '" + std::string(text) + "'", offset);
  }
  if (e == 0) throw ParseError("exponent zero is not allowed", offset);
  return e;
}

// One token `a<k>[^e]` or `b[^e]`; returns the letter and its exponent.
std::pair<Letter, std::int64_t> parse_token(std::string_view token,
                                            std::size_t offset,
                                            Alphabet alphabet) {
  std::string_view head = token;
  std::int64_t exponent = 1;
  if (auto caret = token.find('^'); caret != std::string_view::npos) {
    head = token.substr(0, caret);
    exponent = parse_exponent(token.substr(caret + 1), offset + caret + 1);
  }
  if (head == "b") {
    if (alphabet != Alphabet::omega_plus_one) {
      throw ParseError("letter b requires the omega+1 alphabet", offset);
    }
    return {Letter{AlphabetIndex::top(), Sign::positive}, exponent};
  }
  if (head.size() < 2 || head.front() != 'a') {
    throw ParseError("expected a letter a<k> or b, got '" +
                         std::string(token) + "'",
                     offset);
  }
  std::uint32_t rank = 0;
  auto digits = head.substr(1);
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || rank == 0 ||
      rank == std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError("letter index must be an integer k >= 1 in '" +
                         std::string(token) + "'",
                     offset + 1);
  }
  return {Letter::generator(rank), exponent};
}

}  // namespace

std::string to_string(Letter letter) {
  std::string out = letter.index.name();
  if (letter.sign == Sign::negative) out += "^-1";
  return out;
}

Letter parse_letter(std::string_view text, Alphabet alphabet) {
  std::size_t offset = 0;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text[0]))) {
    text.remove_prefix(1);
    ++offset;
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  auto [letter, exponent] = parse_token(text, offset, alphabet);
  if (exponent != 1 && exponent != -1) {
    throw ParseError("a single letter takes exponent +1 or -1", offset);
  }
  return exponent > 0 ? letter : letter.inverse();
}

Word::Word(std::vector<Letter> letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  for (const Letter& x : letters_) {
    if (!x.index.allowed_in(alphabet_)) {
      throw InstanceMismatch("letter b outside the omega+1 alphabet");
    }
  }
  reduced_ = !has_cancelling_pair(letters_);
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    auto [letter, exponent] =
        parse_token(text.substr(start, i - start), start, alphabet);
    Letter x = exponent > 0 ? letter : letter.inverse();
    std::int64_t count = exponent > 0 ? exponent : -exponent;
    if (count > 1'000'000) throw ParseError("exponent too large", start);
    letters.insert(letters.end(), static_cast<std::size_t>(count), x);
  }
  return Word(std::move(letters), alphabet);
}

Word Word::prefix(std::size_t k) const {
  k = std::min(k, letters_.size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + k),
              alphabet_);
}

std::string to_string(const Word& w) {
  std::string out;
  for (Letter x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(x);
  }
  return out;
}

bool ShortLex::operator()(const Word& x, const Word& y) const {
  if (x.size() != y.size()) return x.size() < y.size();
  auto xs = x.letters();
  auto ys = y.letters();
  return std::lexicographical_compare(xs.begin(), xs.end(), ys.begin(),
                                      ys.end());
}

Word reduce(const Word& w) {
  if (w.is_reduced()) return w;
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter x : w.letters()) {
    if (!stack.empty() && stack.back().cancels(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack), w.alphabet());
}

Word multiply(const Word& w, const Word& v) {
  check_same_alphabet(w, v);
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return reduce(Word(std::move(letters), w.alphabet()));
}

Word inverse(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return Word(std::move(letters), w.alphabet());
}

LexVector length_vector(const Word& w) {
  Word r = reduce(w);
  std::vector<LexVector::Entry> entries;
  entries.reserve(r.size());
  for (Letter x : r.letters()) entries.emplace_back(x.index, 1);
  return LexVector::from_entries(std::move(entries), r.alphabet());
}

LexVector letter_length(AlphabetIndex index, Alphabet alphabet) {
  return LexVector::unit(index, alphabet);
}

LexVector word_dist(const Word& w, const Word& v) {
  return length_vector(multiply(inverse(w), v));
}

LexVector gromov_doubled(const Word& g, const Word& h) {
  return length_vector(g) + length_vector(h) - word_dist(g, h);
}

LexVector gromov(const Word& g, const Word& h) {
  try {
    return half_exact(gromov_doubled(g, h));
  } catch (const HalfError& e) {
    // BF(o) is 0-hyperbolic with integral products; reaching this is a bug.
    throw std::logic_error(std::string("gromov product left Z^o: ") +
                           e.what());
  }
}

Word common_prefix(const Word& g, const Word& h) {
  check_same_alphabet(g, h);
  require_reduced(g, "common_prefix");
  require_reduced(h, "common_prefix");
  std::size_t k = 0;
  while (k < g.size() && k < h.size() && g[k] == h[k]) ++k;
  return g.prefix(k);
}

bool is_subword(const Word& v, const Word& w) {
  require_reduced(v, "is_subword");
  require_reduced(w, "is_subword");
  return length_vector(v) + word_dist(v, w) == length_vector(w);
}

std::vector<Word> subwords(const Word& w) {
  require_reduced(w, "subwords");
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t k = 0; k <= w.size(); ++k) out.push_back(w.prefix(k));
  return out;
}

Cancellation Cancellation::parse(std::string_view text) {
  std::vector<PositionPair> pairs;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto read_number = [&]() -> std::size_t {
    skip_space();
    std::size_t start = i;
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + start) {
      throw ParseError("expected a position number", start);
    }
    i = static_cast<std::size_t>(ptr - text.data());
    skip_space();
    return value;
  };
  skip_space();
  if (i == text.size()) return Cancellation();
  while (true) {
    std::size_t a = read_number();
    if (i >= text.size() || text[i] != '-') {
      throw ParseError("expected '-' between paired positions", i);
    }
    ++i;
    std::size_t b = read_number();
    pairs.push_back({a, b});
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  return Cancellation(std::move(pairs));
}

std::string to_string(const Cancellation& c) {
  std::string out;
  for (const auto& [a, b] : c.pairs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

std::string to_string(CancellationCondition condition) {
  switch (condition) {
    case CancellationCondition::complete:
      return "complete";
    case CancellationCondition::noncrossing:
      return "noncrossing";
    case CancellationCondition::inverse_pairing:
      return "inverse pairing";
  }
  return "?";
}

namespace {

// partner[t] = t*, or 0 when t is outside the pairing domain.
std::vector<std::size_t> partner_table(const Word& w, const Cancellation& c) {
  std::vector<std::size_t> partner(w.size() + 1, 0);
  for (const auto& [a, b] : c.pairs()) {
    for (std::size_t p : {a, b}) {
      if (p == 0 || p > w.size()) {
        throw DomainError("cancellation position " + std::to_string(p) +
                          " outside word of length " +
                          std::to_string(w.size()));
      }
    }
    if (a == b) {
      throw DomainError("cancellation pairs position " + std::to_string(a) +
                        " with itself");
    }
    if (partner[a] != 0 || partner[b] != 0) {
      throw DomainError("cancellation uses a position twice: " +
                        std::to_string(partner[a] != 0 ? a : b));
    }
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

std::string set_text(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

std::optional<CancellationViolation> verify_cancellation(
    const Word& w, const Cancellation& c) {
  const auto partner = partner_table(w, c);
  for (std::size_t t = 1; t <= w.size(); ++t) {
    std::size_t s = partner[t];
    if (s == 0) continue;
    std::size_t lo = std::min(t, s);
    std::size_t hi = std::max(t, s);
    std::string interval =
        "[" + std::to_string(t) + "," + std::to_string(s) + "]";

    for (std::size_t r = lo; r <= hi; ++r) {
      if (partner[r] == 0) {
        return CancellationViolation{
            CancellationCondition::complete, t, s,
            "position " + std::to_string(r) + " lies in " + interval +
                "_S but not in the pairing domain"};
      }
    }

    std::vector<std::size_t> domain;
    std::vector<std::size_t> image;
    for (std::size_t r = lo; r <= hi; ++r) {
      domain.push_back(r);
      image.push_back(partner[r]);
    }
    bool closed = std::all_of(image.begin(), image.end(), [&](std::size_t r) {
      return r >= lo && r <= hi;
    });
    if (!closed) {
      return CancellationViolation{
          CancellationCondition::noncrossing, t, s,
          "(" + interval + "_T)* = " + set_text(image) + " != " +
              set_text(domain)};
    }

    if (!w[t - 1].cancels(w[s - 1])) {
      return CancellationViolation{
          CancellationCondition::inverse_pairing, t, s,
          "w(" + std::to_string(s) + ") = " + to_string(w[s - 1]) +
              " is not the inverse of w(" + std::to_string(t) + ") = " +
              to_string(w[t - 1])};
    }
  }
  return std::nullopt;
}

Word apply_cancellation(const Word& w, const Cancellation& c) {
  if (auto violation = verify_cancellation(w, c)) {
    throw DomainError("invalid cancellation: " +
                      to_string(violation->condition) + " violated at t=" +
                      std::to_string(violation->position) + ": " +
                      violation->detail);
  }
  const auto partner = partner_table(w, c);
  std::vector<Letter> kept;
  for (std::size_t t = 1; t <= w.size(); ++t) {
    if (partner[t] == 0) kept.push_back(w[t - 1]);
  }
  return Word(std::move(kept), w.alphabet());
}

WordStream::WordStream(Rule rule, StreamOrientation orientation,
                       std::size_t multiplicity_bound, Alphabet alphabet)
    : rule_(std::move(rule)),
      orientation_(orientation),
      multiplicity_bound_(multiplicity_bound),
      alphabet_(alphabet) {}

WordStream WordStream::harmonic(Alphabet alphabet) {
  return WordStream(
      [](std::size_t k) { return Letter::generator(static_cast<std::uint32_t>(k)); },
      StreamOrientation::forward, 1, alphabet);
}

WordStream WordStream::reverse_harmonic(Alphabet alphabet) {
  return WordStream(
      [](std::size_t k) { return Letter::generator(static_cast<std::uint32_t>(k)); },
      StreamOrientation::reverse, 1, alphabet);
}

Word WordStream::truncate(std::size_t k) const {
  std::vector<Letter> letters;
  letters.reserve(k);
  std::map<AlphabetIndex, std::size_t> seen;
  for (std::size_t i = 1; i <= k; ++i) {
    Letter x = rule_(i);
    if (++seen[x.index] > multiplicity_bound_) {
      throw DomainError("stream letter " + x.index.name() +
                        " exceeds its multiplicity bound");
    }
    letters.push_back(x);
  }
  if (orientation_ == StreamOrientation::reverse) {
    std::reverse(letters.begin(), letters.end());
  }
  return Word(std::move(letters), alphabet_);
}

}  // namespace bigfree
