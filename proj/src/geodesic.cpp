#include "geodesic.hpp"

#include <optional>

#include "ensure.hpp"
#include "normal_form.hpp"

namespace b3 {

namespace {

bool lower_pair(const Word& w, std::size_t i) {
  return is_positive(w[i]) && is_positive(w[i + 1]) &&
         base_of(w[i]) != base_of(w[i + 1]);
}

bool upper_pair(const Word& w, std::size_t i) {
  return !is_positive(w[i]) && !is_positive(w[i + 1]) &&
         base_of(w[i]) != base_of(w[i + 1]);
}

// aba or bab when positive, ABA or BAB when negative.
bool twist_triple(const Word& w, std::size_t i, bool positive) {
  return sign_of(w[i]) == (positive ? 1 : -1) &&
         sign_of(w[i + 1]) == sign_of(w[i]) &&
         sign_of(w[i + 2]) == sign_of(w[i]) &&
         base_of(w[i]) != base_of(w[i + 1]) &&
         base_of(w[i + 1]) != base_of(w[i + 2]);
}

template <class Pred>
std::optional<std::size_t> first_index(std::size_t n, Pred p) {
  for (std::size_t i = 0; i < n; ++i)
    if (p(i)) return i;
  return std::nullopt;
}

}  // namespace

GeodesicReport geodesic_report(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (w[i + 1] == inverse(w[i]))
      return {GeodesicReport::Kind::not_reduced, i, i + 1};

  // Any positive pair together with any negative pair, in either order,
  // allows a strictly shorter spelling; likewise a one-signed half-twist
  // triple together with any letter of the opposite case.
  auto lo_pair = first_index(n >= 2 ? n - 1 : 0,
                             [&](std::size_t i) { return lower_pair(w, i); });
  auto up_pair = first_index(n >= 2 ? n - 1 : 0,
                             [&](std::size_t i) { return upper_pair(w, i); });
  if (lo_pair && up_pair)
    return {GeodesicReport::Kind::opposite_pairs, *lo_pair, *up_pair};

  auto lo_tri = first_index(
      n >= 3 ? n - 2 : 0, [&](std::size_t i) { return twist_triple(w, i, true); });
  auto up_letter =
      first_index(n, [&](std::size_t i) { return !is_positive(w[i]); });
  if (lo_tri && up_letter)
    return {GeodesicReport::Kind::twist_with_inverse, *lo_tri, *up_letter};

  auto up_tri = first_index(n >= 3 ? n - 2 : 0, [&](std::size_t i) {
    return twist_triple(w, i, false);
  });
  auto lo_letter =
      first_index(n, [&](std::size_t i) { return is_positive(w[i]); });
  if (up_tri && lo_letter)
    return {GeodesicReport::Kind::twist_with_inverse, *up_tri, *lo_letter};

  return {};
}

bool is_geodesic(const Word& w) { return geodesic_report(w).geodesic(); }

std::string GeodesicReport::describe() const {
  switch (kind) {
    case Kind::geodesic:
      return "geodesic";
    case Kind::not_reduced:
      return "not freely reduced: cancelling pair at position " +
             std::to_string(first);
    case Kind::opposite_pairs:
      return "positive pair at position " + std::to_string(first) +
             " conflicts with negative pair at position " +
             std::to_string(second);
    case Kind::twist_with_inverse:
      return "half-twist triple at position " + std::to_string(first) +
             " conflicts with opposite-case letter at position " +
             std::to_string(second);
  }
  return "";
}

long translation_length(const Word& input) {
  // Shrink within the conjugacy class: cyclic reduction never lengthens,
  // and a non-geodesic rotation of a geodesic word pinpoints a strictly
  // shorter conjugate.  When every rotation is geodesic the length is
  // stable under conjugation and we are done.
  Word x = shortlex(input);
  for (;;) {
    x = cyclic_reduce(x);
    if (x.empty()) return 0;
    bool shortened = false;
    for (std::size_t r = 1; r < x.size(); ++r) {
      Word p = rotate(x, r);
      if (!is_geodesic(p)) {
        Word sp = shortlex(p);
        ensure(sp.size() < x.size(), "translation_length: no progress");
        x = std::move(sp);
        shortened = true;
        break;
      }
    }
    if (!shortened) return static_cast<long>(x.size());
  }
}

}  // namespace b3
