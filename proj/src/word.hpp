#pragma once

// Words over the generating set {a, b, a^-1, b^-1} of the three-strand
// braid group, written as the letters a, b, A, B.  The Letter encoding is
// chosen so that the short-lex letter order a < A < b < B is the numeric
// order, the inverse of a letter is code^1 and the a<->b base swap is
// code^2.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace b3 {

enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

inline constexpr Letter kLetters[4] = {Letter::a, Letter::A, Letter::b,
                                       Letter::B};

inline constexpr int base_of(Letter l) {
  return static_cast<int>(l) >> 1;  // 0 = a-strand, 1 = b-strand
}

inline constexpr int sign_of(Letter l) {
  return (static_cast<int>(l) & 1) ? -1 : +1;
}

inline constexpr bool is_positive(Letter l) { return sign_of(l) > 0; }

inline constexpr Letter inverse(Letter l) {
  return static_cast<Letter>(static_cast<int>(l) ^ 1);
}

// The a<->b, A<->B swap; algebraically this is conjugation by the
// half-twist aba and it is an automorphism of the group.
inline constexpr Letter swapped(Letter l) {
  return static_cast<Letter>(static_cast<int>(l) ^ 2);
}

inline constexpr char to_char(Letter l) { return "aAbB"[static_cast<int>(l)]; }

std::optional<Letter> letter_from_char(char c);

// Make the letter with the given strand (0 = a, 1 = b) and exponent sign.
inline constexpr Letter make_letter(int base, int sign) {
  return static_cast<Letter>((base << 1) | (sign < 0 ? 1 : 0));
}

// A maximal run s^exp of one generator: base 0/1 as above, exp != 0 signed.
struct Syllable {
  int base = 0;
  long exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
};

// An immutable word in the free group on a, b.  Not reduced unless stated;
// operations that need reduced input say so.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> ls) : ls_(std::move(ls)) {}

  static Word one() { return Word(); }

  std::size_t size() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }
  Letter operator[](std::size_t i) const { return ls_[i]; }
  const std::vector<Letter>& letters() const { return ls_; }

  auto begin() const { return ls_.begin(); }
  auto end() const { return ls_.end(); }

  // Plain letter order, i.e. a < A < b < B position by position.
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> ls_;
};

// ---- parsing and printing ------------------------------------------------

// Grammar: word := term*, term := atom ['^' ['-'] digits],
// atom := letter | '(' word ')'.  A negative exponent inverts the atom.
// Anything else (including whitespace) raises ParseError with a position.
Word parse_word(const std::string& text);

// Plain letter string; the empty word prints as the Unicode epsilon so that
// output lines are never blank.
std::string format_plain(const Word& w);

// Run-compressed form, e.g. a^2B^3; exponent 1 is left bare.
std::string format_compressed(const Word& w);

// ---- free group structure ------------------------------------------------

Word concat(const Word& u, const Word& w);
Word append(const Word& u, Letter l);

// Cancel all xX / Xx pairs; the result is the unique reduced form.
Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

Word invert(const Word& w);

// Apply the a<->b swap letterwise.
Word swapped(const Word& w);

long exponent_sum(const Word& w);

// ---- syllables -----------------------------------------------------------

// Maximal runs of one strand.  Requires a freely reduced word (otherwise a
// run could hide a cancellation); throws std::invalid_argument if not.
std::vector<Syllable> syllables(const Word& w);

Word word_from_syllables(const std::vector<Syllable>& syls);

// Every syllable exponent even, except possibly the last.
bool is_almost_even(const Word& w);

// ---- cyclic structure ----------------------------------------------------

// Freely reduce, then strip matching first/last letters until none cancel.
Word cyclic_reduce(const Word& w);

// All |w| rotations of w, starting with rotation by 0.
std::vector<Word> cyclic_permutations(const Word& w);

Word rotate(const Word& w, std::size_t by);

// ---- enumeration ---------------------------------------------------------

namespace detail {
template <class F>
void reduced_words_rec(std::vector<Letter>& cur, std::size_t length,
                       F& visit) {
  if (cur.size() == length) {
    visit(Word(cur));
    return;
  }
  for (Letter l : kLetters) {
    if (!cur.empty() && l == inverse(cur.back())) continue;
    cur.push_back(l);
    reduced_words_rec(cur, length, visit);
    cur.pop_back();
  }
}
}  // namespace detail

// Visit every freely reduced word of exactly the given length, in
// lexicographic order of the letters a < A < b < B.
template <class F>
void for_each_reduced_word(std::size_t length, F&& visit) {
  std::vector<Letter> cur;
  cur.reserve(length);
  detail::reduced_words_rec(cur, length, visit);
}

}  // namespace b3
