#include "word.hpp"

#include <algorithm>
#include <cctype>

namespace b3 {

std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 'b': return Letter::b;
    case 'B': return Letter::B;
    default: return std::nullopt;
  }
}

namespace {

// Recursive-descent parser over text[pos..).  Builds letters into out.
// depth guards against absurdly nested parentheses.
struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos);
  }

  long parse_exponent() {
    ++pos;  // consume '^'
    bool neg = false;
    if (!done() && peek() == '-') {
      neg = true;
      ++pos;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected digits after '^'");
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  // Appends atom^exp to out where atom is the next letter or group.
  void parse_term(std::vector<Letter>& out, int depth) {
    std::vector<Letter> atom;
    char c = peek();
    if (c == '(') {
      if (depth > 64) fail("parentheses nested too deeply");
      ++pos;
      while (!done() && peek() != ')') parse_term(atom, depth + 1);
      if (done()) fail("missing ')'");
      ++pos;
    } else if (auto l = letter_from_char(c)) {
      atom.push_back(*l);
      ++pos;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }

    long exp = 1;
    if (!done() && peek() == '^') exp = parse_exponent();

    if (exp < 0) {
      std::reverse(atom.begin(), atom.end());
      for (auto& l : atom) l = inverse(l);
      exp = -exp;
    }
    if (static_cast<std::size_t>(exp) * atom.size() + out.size() > 10000000)
      fail("word too long");
    for (long i = 0; i < exp; ++i)
      out.insert(out.end(), atom.begin(), atom.end());
  }
};

}  // namespace

Word parse_word(const std::string& text) {
  Parser p(text);
  std::vector<Letter> out;
  while (!p.done()) p.parse_term(out, 0);
  return Word(std::move(out));
}

std::string format_plain(const Word& w) {
  if (w.empty()) return "ε";
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(to_char(l));
  return s;
}

std::string format_compressed(const Word& w) {
  if (w.empty()) return "ε";
  std::string s;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    s.push_back(to_char(w[i]));
    if (j - i > 1) {
      s.push_back('^');
      s += std::to_string(j - i);
    }
    i = j;
  }
  return s;
}

Word concat(const Word& u, const Word& w) {
  std::vector<Letter> ls = u.letters();
  ls.insert(ls.end(), w.begin(), w.end());
  return Word(std::move(ls));
}

Word append(const Word& u, Letter l) {
  std::vector<Letter> ls = u.letters();
  ls.push_back(l);
  return Word(std::move(ls));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> st;
  st.reserve(w.size());
  for (Letter l : w) {
    if (!st.empty() && st.back() == inverse(l))
      st.pop_back();
    else
      st.push_back(l);
  }
  return Word(std::move(st));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse(w[i - 1])) return false;
  return true;
}

Word invert(const Word& w) {
  std::vector<Letter> ls(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    ls[w.size() - 1 - i] = inverse(w[i]);
  return Word(std::move(ls));
}

Word swapped(const Word& w) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (Letter l : w) ls.push_back(swapped(l));
  return Word(std::move(ls));
}

long exponent_sum(const Word& w) {
  long s = 0;
  for (Letter l : w) s += sign_of(l);
  return s;
}

std::vector<Syllable> syllables(const Word& w) {
  if (!is_freely_reduced(w))
    throw std::invalid_argument("syllables: word is not freely reduced");
  std::vector<Syllable> out;
  for (Letter l : w) {
    if (!out.empty() && out.back().base == base_of(l))
      out.back().exp += sign_of(l);
    else
      out.push_back({base_of(l), sign_of(l)});
  }
  return out;
}

Word word_from_syllables(const std::vector<Syllable>& syls) {
  std::vector<Letter> ls;
  for (const auto& s : syls) {
    Letter l = make_letter(s.base, s.exp < 0 ? -1 : +1);
    for (long i = 0; i < std::abs(s.exp); ++i) ls.push_back(l);
  }
  return Word(std::move(ls));
}

bool is_almost_even(const Word& w) {
  auto syls = syllables(w);
  for (std::size_t i = 0; i + 1 < syls.size(); ++i)
    if (syls[i].exp % 2 != 0) return false;
  return true;
}

Word cyclic_reduce(const Word& w) {
  std::vector<Letter> ls = free_reduce(w).letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == inverse(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
}

Word rotate(const Word& w, std::size_t by) {
  if (w.empty()) return w;
  by %= w.size();
  std::vector<Letter> ls(w.begin() + by, w.end());
  ls.insert(ls.end(), w.begin(), w.begin() + by);
  return Word(std::move(ls));
}

std::vector<Word> cyclic_permutations(const Word& w) {
  std::vector<Word> out;
  out.reserve(std::max<std::size_t>(w.size(), 1));
  if (w.empty()) {
    out.push_back(w);
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(rotate(w, i));
  return out;
}

}  // namespace b3
