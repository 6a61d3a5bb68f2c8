#pragma once

// Exact growth series.  Counts come from three independent places -- a
// closed-form rational function, the transfer matrix of an automaton, and
// raw enumeration -- and agreeing across all three is the whole point, so
// everything here is integer-exact: no floating point, no truncation.

#include <cstdint>
#include <string>
#include <vector>

#include "dfa.hpp"
#include "fingerprint.hpp"

namespace b3 {

// Dense univariate polynomial over arbitrary-precision integers,
// coefficients stored ascending.  Kept free of trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<long> coeffs);
  explicit Poly(std::vector<BigInt> coeffs);

  static Poly x();

  bool zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if 0
  const BigInt& operator[](std::size_t i) const;
  const BigInt& leading() const;
  const std::vector<BigInt>& coefficients() const { return c_; }

  friend Poly operator+(const Poly&, const Poly&);
  friend Poly operator-(const Poly&, const Poly&);
  friend Poly operator*(const Poly&, const Poly&);
  friend Poly operator-(const Poly&);
  friend bool operator==(const Poly&, const Poly&) = default;

  // Quotient, requiring the division to leave no remainder.
  friend Poly divide_exact(const Poly& a, const Poly& b);

  BigInt content() const;   // gcd of coefficients, 0 for the zero poly
  Poly primitive() const;   // divided by content, leading coefficient > 0

  std::string str() const;  // human form, e.g. "1 - 3x + x^4"

 private:
  void trim();
  std::vector<BigInt> c_;
};

Poly gcd(Poly a, Poly b);

// Fraction of integer polynomials in lowest terms, denominator leading
// coefficient positive.
struct RationalFn {
  Poly num, den;
  std::string str() const;
};

RationalFn make_rational(Poly num, Poly den);
bool operator==(const RationalFn& a, const RationalFn& b);

// Taylor coefficients of f around 0; requires den(0) = +-1 so the series
// stays integral (true for everything in this project, and checked).
std::vector<BigInt> series(const RationalFn& f, int terms);

// Generating function of words-per-length via fraction-free elimination on
// I - x*M, M the transfer matrix of the automaton.
RationalFn dfa_series(const Dfa& d);

// The closed forms the two languages satisfy; the automaton-derived
// fractions must reduce to exactly these.
RationalFn geodesic_series_closed_form();
RationalFn spherical_series_closed_form();

// Counting with no cleverness at all, for cross-checking.
std::vector<BigInt> geodesic_counts_direct(int terms);
std::vector<BigInt> spherical_counts_direct(int terms);

}  // namespace b3
