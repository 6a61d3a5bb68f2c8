#include "normal_form.hpp"

#include <algorithm>
#include <optional>

#include "ensure.hpp"

namespace b3 {

namespace {

// All ways to read w as "prefix followed by m literal twist triples", the
// triples spelled aba for positive m and ABA for negative.  m = 0 always
// qualifies.  The seam is allowed to be unreduced, which is why membership
// tests try every m instead of stripping greedily.
struct Decomposition {
  Word prefix;
  int k;
};

std::vector<Decomposition> twist_decompositions(const Word& w) {
  std::vector<Decomposition> out;
  out.push_back({w, 0});
  for (int sgn : {+1, -1}) {
    Word triple = sgn > 0 ? parse_word("aba") : parse_word("ABA");
    std::size_t end = w.size();
    int m = 0;
    while (end >= 3 && w[end - 3] == triple[0] && w[end - 2] == triple[1] &&
           w[end - 1] == triple[2]) {
      end -= 3;
      ++m;
      out.push_back(
          {Word(std::vector<Letter>(w.begin(), w.begin() + end)), sgn * m});
    }
  }
  return out;
}

bool is_rg_prefix(const Word& p) {
  for (Letter l : p)
    if (!is_positive(l)) return false;
  if (p.empty()) return true;
  auto syls = syllables(p);  // positive => freely reduced
  for (std::size_t i = 1; i + 1 < syls.size(); ++i)
    if (syls[i].exp < 2) return false;
  return true;
}

bool signs_alternate(const Word& body) {
  if (!is_freely_reduced(body)) return false;
  if (body.empty()) return true;
  auto syls = syllables(body);
  for (std::size_t i = 1; i < syls.size(); ++i)
    if ((syls[i].exp > 0) == (syls[i - 1].exp > 0)) return false;
  return true;
}

}  // namespace

bool is_cf_spelling(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  for (const auto& d : twist_decompositions(w))
    if (is_almost_even(d.prefix)) return true;
  return false;
}

bool is_rg_spelling(const Word& w) {
  for (const auto& d : twist_decompositions(w))
    if (is_rg_prefix(d.prefix)) return true;
  return false;
}

bool is_tf_spelling(const Word& w) {
  for (const auto& d : twist_decompositions(w))
    if (signs_alternate(d.prefix)) return true;
  return false;
}

int sl_step(int state, Letter l) {
  constexpr int X = -1;
  // Row layout: the start state; two pure-power states (one per sign); a
  // block for words whose mixed part alternates b-runs with A-runs,
  // optionally continued by a positive block of runs of length >= 2 with a
  // possibly short final run; and the mirror-image block with the cases
  // exchanged.
  static constexpr int kTable[kSlStateCount][4] = {
      //        a   A   b   B
      /* 0*/ {  1,  2,  3,  9},
      /* 1*/ {  1,  X,  3,  9},
      /* 2*/ {  X,  2,  3,  9},
      /* 3*/ {  5,  4,  3,  X},
      /* 4*/ {  X,  4,  3,  X},
      /* 5*/ {  6,  X,  X,  X},
      /* 6*/ {  6,  X,  7,  X},
      /* 7*/ {  X,  X,  8,  X},
      /* 8*/ {  5,  X,  8,  X},
      /* 9*/ { 10, 11,  X,  9},
      /*10*/ { 10,  X,  X,  9},
      /*11*/ {  X, 12,  X,  X},
      /*12*/ {  X, 12,  X, 13},
      /*13*/ {  X,  X,  X, 14},
      /*14*/ {  X, 11,  X, 14},
  };
  if (state < 0) return -1;
  ensure(state < kSlStateCount, "sl_step: bad state");
  return kTable[state][static_cast<int>(l)];
}

bool is_sl(const Word& w) {
  int state = 0;
  for (Letter l : w) {
    state = sl_step(state, l);
    if (state < 0) return false;
  }
  return true;
}

CfState to_cf(const Word& w) { return fold(w); }

RgForm cf_to_rg(const CfState& s) {
  const Word& u = s.u;

  // Stage one: wherever two adjacent inverse letters involve both strands,
  // trade them for a single positive letter and a borrowed inverse twist
  // (AB and ba differ by one half twist, as do BA and ab... shortened here
  // to AB -> b and BA -> a).  The twist is pushed to the back, swapping
  // the strands of everything it passes, hence the running parity t1.
  std::vector<Letter> mid;
  int t1 = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    Letter e = (t1 % 2) ? swapped(u[i]) : u[i];
    if (i + 1 < u.size()) {
      Letter f = (t1 % 2) ? swapped(u[i + 1]) : u[i + 1];
      if (!is_positive(e) && !is_positive(f) && base_of(e) != base_of(f)) {
        mid.push_back(base_of(e) == 0 ? Letter::b : Letter::a);
        ++t1;
        ++i;
        continue;
      }
    }
    mid.push_back(e);
  }

  // Stage two: expand each remaining inverse letter into a positive pair
  // and one more borrowed twist, A -> ba and B -> ab.
  std::vector<Letter> out;
  int t2 = 0;
  for (Letter m : mid) {
    Letter e = (t2 % 2) ? swapped(m) : m;
    if (is_positive(e)) {
      out.push_back(e);
      continue;
    }
    if (base_of(e) == 0) {
      out.push_back(Letter::b);
      out.push_back(Letter::a);
    } else {
      out.push_back(Letter::a);
      out.push_back(Letter::b);
    }
    ++t2;
  }

  RgForm r{Word(std::move(out)), s.k - t1 - t2};
  ensure(is_rg_prefix(r.prefix), "cf_to_rg: prefix left the target shape");
  return r;
}

namespace {

// Merge adjacent same-strand runs and drop empty ones, cascading.
std::vector<Syllable> normalize_syllables(const std::vector<Syllable>& in) {
  std::vector<Syllable> st;
  for (Syllable s : in) {
    if (s.exp == 0) continue;
    if (!st.empty() && st.back().base == s.base) {
      st.back().exp += s.exp;
      if (st.back().exp == 0) st.pop_back();
    } else {
      st.push_back(s);
    }
  }
  return st;
}

}  // namespace

CfState rg_to_cf(const RgForm& r) {
  ensure(is_rg_prefix(r.prefix), "rg_to_cf: input prefix malformed");
  std::vector<Syllable> syls = syllables(r.prefix);
  int p = r.j;
  std::size_t guard = 4 * (r.prefix.size() + 4) * (r.prefix.size() + 4) + 16;

  // Kill odd interior runs left to right.  An odd run x^c followed by y^d
  // becomes x^(c-1) then d runs of the opposite sign (exponents -2 except a
  // final -1) while d twists leave for the back of the word; the -1 then
  // merges into whatever follows.  Everything left of the work site stays
  // even, everything right stays positive, so the site moves right and the
  // loop terminates.
  for (;;) {
    ensure(guard-- > 0, "rg_to_cf: rewrite did not settle");
    std::size_t i = syls.size();
    for (std::size_t t = 0; t + 1 < syls.size(); ++t)
      if (syls[t].exp % 2 != 0) {
        i = t;
        break;
      }
    if (i == syls.size()) break;
    Syllable x = syls[i], y = syls[i + 1];
    ensure(x.exp > 0 && y.exp > 0, "rg_to_cf: work site not positive");
    long d = y.exp;

    std::vector<Syllable> next(syls.begin(), syls.begin() + i);
    if (x.exp > 1) next.push_back({x.base, x.exp - 1});
    int base = y.base;
    for (long q = 0; q < d; ++q) {
      next.push_back({base, q + 1 == d ? -1 : -2});
      base ^= 1;
    }
    for (std::size_t t = i + 2; t < syls.size(); ++t) {
      Syllable z = syls[t];
      if (d % 2) z.base ^= 1;
      next.push_back(z);
    }
    syls = normalize_syllables(next);
    p += static_cast<int>(d);
  }

  CfState out{word_from_syllables(syls), p};
  ensure(is_almost_even(out.u), "rg_to_cf: result not almost even");
  return out;
}

RgForm to_rg(const Word& w) { return cf_to_rg(to_cf(w)); }

TfWord to_tf(const Word& input) {
  Word w = free_reduce(input);
  int j = 0;
  long pairs = 0;
  std::size_t guard = 4 * (w.size() + 4) * (w.size() + 4) + 16;

  for (;;) {
    ensure(guard-- > 0, "to_tf: rewrite did not settle");

    // First preference: pull a literal one-signed triple (aba, bab, ABA,
    // BAB) out of the word; it is a whole half twist and leaves rightward.
    std::optional<std::size_t> tri;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      if (sign_of(w[i]) == sign_of(w[i + 1]) &&
          sign_of(w[i]) == sign_of(w[i + 2]) &&
          base_of(w[i]) != base_of(w[i + 1]) &&
          base_of(w[i + 1]) != base_of(w[i + 2])) {
        tri = i;
        break;
      }
    }
    if (tri) {
      int s = sign_of(w[*tri]);
      std::vector<Letter> ls(w.begin(), w.begin() + *tri);
      for (std::size_t i = *tri + 3; i < w.size(); ++i)
        ls.push_back(swapped(w[i]));
      w = free_reduce(Word(std::move(ls)));
      j += s;
      continue;
    }

    // Otherwise break up the leftmost pair of adjacent same-sign runs
    // x^k y^l: it equals x^(k-1) y^-1 x^(l-1) times one departing twist.
    auto syls = w.empty() ? std::vector<Syllable>{} : syllables(w);
    std::size_t q = syls.size();
    for (std::size_t t = 0; t + 1 < syls.size(); ++t)
      if ((syls[t].exp > 0) == (syls[t + 1].exp > 0)) {
        q = t;
        break;
      }
    if (q == syls.size()) break;  // signs alternate: settled

    int s = syls[q].exp > 0 ? 1 : -1;
    std::size_t start = 0;
    for (std::size_t t = 0; t < q; ++t) start += std::labs(syls[t].exp);
    std::size_t len = std::labs(syls[q].exp) + std::labs(syls[q + 1].exp);

    std::vector<Letter> ls(w.begin(), w.begin() + start);
    Letter xl = make_letter(syls[q].base, s);
    Letter yl = make_letter(syls[q + 1].base, s);
    for (long i = 0; i + 1 < std::labs(syls[q].exp); ++i) ls.push_back(xl);
    ls.push_back(inverse(yl));
    for (long i = 0; i + 1 < std::labs(syls[q + 1].exp); ++i) ls.push_back(xl);
    for (std::size_t i = start + len; i < w.size(); ++i)
      ls.push_back(swapped(w[i]));
    w = free_reduce(Word(std::move(ls)));
    j += s;
    ++pairs;
  }

  TfWord t{w, j, pairs, 0};
  for (Letter l : w)
    if (!is_positive(l)) ++t.negative_letters;
  ensure(signs_alternate(t.body), "to_tf: body signs do not alternate");
  return t;
}

namespace {

// Spell one twist (sign s) into the word at the given seam; letters past
// the seam swap strands because the twist used to sit to their right.
// Both spellings of the triple are candidates since either neighbor may
// absorb into it.
Word seam_insert(const Word& w, std::size_t split, int s, bool alt) {
  static const Word spell[2][2] = {
      {parse_word("aba"), parse_word("bab")},
      {parse_word("ABA"), parse_word("BAB")},
  };
  std::vector<Letter> ls(w.begin(), w.begin() + split);
  for (Letter l : spell[s < 0][alt]) ls.push_back(l);
  for (std::size_t i = split; i < w.size(); ++i) ls.push_back(swapped(w[i]));
  return free_reduce(Word(std::move(ls)));
}

bool better(const Word& cand, const Word& best) {
  if (cand.size() != best.size()) return cand.size() < best.size();
  return cand < best;
}

Word best_seam_insert(const Word& w, std::size_t split, int s) {
  Word x = seam_insert(w, split, s, false);
  Word y = seam_insert(w, split, s, true);
  return better(y, x) ? y : x;
}

}  // namespace

Word tf_to_shortlex(const TfWord& t) {
  Word w = t.body;
  int j = t.j;
  if (j != 0) {
    int s = j > 0 ? 1 : -1;
    // Letters the twists want to cancel against: inverse letters when
    // twists are positive, plain ones when negative.
    auto is_target = [s](Letter l) {
      return s > 0 ? !is_positive(l) : is_positive(l);
    };

    // One preparatory insertion in front of the first target run, but only
    // when that run lives on the b strand; on the a strand the straight
    // absorption below already gives the least spelling.
    std::optional<std::size_t> first_target;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (is_target(w[i])) {
        first_target = i;
        break;
      }
    if (first_target && base_of(w[*first_target]) == 1) {
      w = best_seam_insert(w, *first_target, s);
      j -= s;
    }

    // Main absorption: place each twist right behind the last target
    // letter, where one spelling cancels two letters against it.
    while (j != 0) {
      std::optional<std::size_t> last_target;
      for (std::size_t i = w.size(); i-- > 0;)
        if (is_target(w[i])) {
          last_target = i;
          break;
        }
      if (!last_target) break;
      w = best_seam_insert(w, *last_target + 1, s);
      j -= s;
    }

    // Remaining twists meet no target letters; spell each at whichever
    // seam gives the least word.
    while (j != 0) {
      Word best = seam_insert(w, 0, s, false);
      for (std::size_t split = 0; split <= w.size(); ++split)
        for (bool alt : {false, true}) {
          Word cand = seam_insert(w, split, s, alt);
          if (better(cand, best)) best = std::move(cand);
        }
      w = std::move(best);
      j -= s;
    }
  }
  ensure(is_sl(w), "tf_to_shortlex: result left the canonical language");
  return w;
}

Word shortlex(const Word& w) { return tf_to_shortlex(to_tf(w)); }

bool equal_elements(const Word& u, const Word& w) {
  return shortlex(u) == shortlex(w);
}

long element_length(const Word& w) {
  return static_cast<long>(shortlex(w).size());
}

namespace {

std::string format_pair(const Word& prefix, int k) {
  if (prefix.empty() && k == 0) return "ε";
  std::string s;
  if (!prefix.empty()) s += format_compressed(prefix);
  if (k != 0) s += "(aba)^" + std::to_string(k);
  return s;
}

}  // namespace

std::string format_cf(const CfState& s) { return format_pair(s.u, s.k); }
std::string format_rg(const RgForm& r) { return format_pair(r.prefix, r.j); }
std::string format_tf(const TfWord& t) { return format_pair(t.body, t.j); }

}  // namespace b3
