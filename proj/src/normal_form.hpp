#pragma once

// Canonical representatives for braid group elements, and the conversions
// between them.  Four shapes appear:
//
//   cf  pair (u, k): freely reduced prefix with all syllable exponents even
//       except possibly the last, times the k-th power of the half twist.
//   rg  pair (P, j): P a positive word whose interior syllables have
//       exponent at least 2, times a twist power.
//   tf  pair (body, j): body freely reduced with strictly alternating
//       syllable signs, times a twist power.
//   sl  a single word: the lexicographically least geodesic spelling of the
//       element, letters ordered a < A < b < B.
//
// cf is reached by folding letters one at a time (see cayley.hpp); rg and
// cf convert back and forth; tf is reached by a rewriting loop that pushes
// half twists out of the word; sl is reached from tf by reinserting the
// collected twists at optimal seams.

#include <string>

#include "cayley.hpp"
#include "word.hpp"

namespace b3 {

struct RgForm {
  Word prefix;  // positive letters only, interior runs of length >= 2
  int j = 0;
  friend bool operator==(const RgForm&, const RgForm&) = default;
};

struct TfWord {
  Word body;  // freely reduced, syllable signs strictly alternate
  int j = 0;
  // Rewrite statistics: how many same-sign syllable pairs were broken up,
  // and how many inverse letters remain in the body.
  long mixed_pairs = 0;
  long negative_letters = 0;
};

// ---- membership tests ----------------------------------------------------

// These judge literal spellings.  The pair forms are spelled "prefix
// (aba)^k"; a negative power is spelled with ABA triples.  The seam between
// prefix and twist block need not be freely reduced, so the tests strip
// trailing triples before validating the remainder.

bool is_cf_spelling(const Word& w);
bool is_rg_spelling(const Word& w);
bool is_tf_spelling(const Word& w);

// Membership in the canonical-geodesic language, decided by a 15-state
// automaton.  The language is closed under taking prefixes.
bool is_sl(const Word& w);

// The automaton behind is_sl, exposed so the automata module can package
// the same language for export and counting.  States are 0..14, state 0
// initial, every state accepting; -1 is the reject sink.
inline constexpr int kSlStateCount = 15;
int sl_step(int state, Letter l);

// ---- conversions ---------------------------------------------------------

CfState to_cf(const Word& w);

RgForm cf_to_rg(const CfState& s);
CfState rg_to_cf(const RgForm& r);
RgForm to_rg(const Word& w);

TfWord to_tf(const Word& w);
Word tf_to_shortlex(const TfWord& t);

// The canonical spelling: least in length-then-lexicographic order among
// all words representing the same element.
Word shortlex(const Word& w);

bool equal_elements(const Word& u, const Word& w);
long element_length(const Word& w);

// ---- printing ------------------------------------------------------------

// Pair forms print as "prefix(aba)^k" run-compressed, with the twist block
// omitted when k = 0 and the prefix shown as epsilon only when the whole
// form is trivial.  All outputs reparse to the same element.
std::string format_cf(const CfState& s);
std::string format_rg(const RgForm& r);
std::string format_tf(const TfWord& t);

}  // namespace b3
