#pragma once

// Finite automata over the four-letter alphabet, used to package the
// geodesic language and the canonical-spelling language for counting and
// export.  Both languages are prefix-closed, so every live state accepts
// and the only rejecting state is the implicit sink.

#include <array>
#include <string>
#include <vector>

#include "fingerprint.hpp"
#include "word.hpp"

namespace b3 {

struct Dfa {
  int start = 0;
  std::vector<std::array<int, 4>> next;  // -1 denotes the reject sink
  std::vector<char> accepting;

  std::size_t size() const { return next.size(); }
  bool accepts(const Word& w) const;

  // Number of accepted words of each length 0..terms-1, exactly.
  std::vector<BigInt> count_words(int terms) const;
};

// Smallest automaton recognizing geodesic spellings.  Built by tracking,
// letter by letter, which of the incompatible pattern families have been
// seen, then minimizing.
Dfa geodesic_dfa();

// Smallest automaton recognizing canonical spellings, derived from the
// grammar machine behind is_sl.
Dfa shortlex_dfa();

// Partition-refinement minimization.  The result is renumbered by
// breadth-first search from the start state in letter order a, A, b, B, so
// equal automata always serialize identically.
Dfa minimize(const Dfa& d);

// One line per state of the minimized geodesic automaton, describing the
// scanner configuration it stands for (shortest witness word, its last two
// letters, and the pattern flags seen so far).  Diagnostic aid for when the
// expected state count ever drifts.
std::vector<std::string> geodesic_state_descriptions();

// M[i][j] = number of letters moving live state i to live state j.  Words
// of length n are counted by start-row * M^n * all-ones, which is only
// valid when every live state accepts; rejected otherwise.
std::vector<std::vector<int>> transfer_matrix(const Dfa& d);

std::string to_dot(const Dfa& d);

// {states, start, accepting, transitions, sink}: the transition table is
// made total by appending one absorbing sink state at index size().
std::string to_json(const Dfa& d);

}  // namespace b3
