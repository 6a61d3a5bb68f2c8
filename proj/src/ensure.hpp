#pragma once

#include <stdexcept>

namespace b3 {

// Internal invariant check that stays on in release builds.  These guard
// algebraic rewriting steps, where a silent slip would corrupt results far
// from the cause, so the cost of a branch is always worth it.
inline void ensure(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

}  // namespace b3
