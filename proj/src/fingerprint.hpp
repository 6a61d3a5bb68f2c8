#pragma once

// Exact invariant for elements of the three-strand braid group: the image
// in SL(2,Z) under a -> [[1,1],[0,1]], b -> [[1,0],[-1,1]] together with
// the exponent sum.  The matrix alone has kernel generated by the full
// twist squared, whose exponent sum is 12, so the pair separates elements.
// Used as the ground truth that everything else is checked against.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "word.hpp"

namespace b3 {

using BigInt = boost::multiprecision::cpp_int;

struct Mat2 {
  BigInt m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 letter_matrix(Letter l);

// Matrix image plus exponent sum; equal fingerprints <=> equal elements.
struct Fingerprint {
  Mat2 mat;
  long exp_sum = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  // Stable map key, "m00,m01,m10,m11,e".
  std::string key() const;
};

Fingerprint fingerprint(const Word& w);

bool same_element(const Word& u, const Word& w);
bool is_identity_element(const Word& w);

// ---- breadth-first exploration of the group ------------------------------

struct OutOfRadius : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Distances from the identity out to the given radius, computed by plain
// breadth-first search over fingerprints.  Deliberately naive; this is the
// oracle the clever machinery must agree with.
class DistanceTable {
 public:
  explicit DistanceTable(int radius, std::size_t max_elements = 50000000);

  int radius() const { return radius_; }

  // Geodesic distance from the identity; throws OutOfRadius when the
  // element lies outside the explored ball.
  int distance(const Word& w) const;

  // Number of elements at each distance 0..radius.
  const std::vector<std::uint64_t>& layer_counts() const { return counts_; }

 private:
  int radius_;
  std::map<std::string, int> dist_;
  std::vector<std::uint64_t> counts_;
};

}  // namespace b3
