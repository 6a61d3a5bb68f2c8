#pragma once

// Recognizing minimal-length spellings.  A freely reduced word fails to be
// geodesic exactly when it contains one of two globally incompatible
// pattern combinations, so the test is a pair of linear scans rather than a
// search.

#include <cstddef>
#include <string>

#include "word.hpp"

namespace b3 {

struct GeodesicReport {
  enum class Kind {
    geodesic,
    not_reduced,         // a cancelling pair sits at position `first`
    opposite_pairs,      // ab/ba at `first` together with AB/BA at `second`
    twist_with_inverse,  // aba/bab at `first` together with an upper-case
                         // letter at `second`, or ABA/BAB together with a
                         // lower-case letter
  };

  Kind kind = Kind::geodesic;
  std::size_t first = 0;   // 0-based letter positions of the two witnesses
  std::size_t second = 0;

  bool geodesic() const { return kind == Kind::geodesic; }
  std::string describe() const;
};

GeodesicReport geodesic_report(const Word& w);
bool is_geodesic(const Word& w);

// Stable word length of the element under iterated powers, equivalently
// the minimal geodesic length over the conjugacy class.
long translation_length(const Word& w);

}  // namespace b3
