#include "growth.hpp"

#include <algorithm>

#include "ensure.hpp"
#include "geodesic.hpp"

namespace b3 {

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly{0, 1}; }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& Poly::operator[](std::size_t i) const {
  static const BigInt zero = 0;
  return i < c_.size() ? c_[i] : zero;
}

const BigInt& Poly::leading() const {
  ensure(!zero(), "Poly::leading on zero");
  return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) { return Poly{} - a; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly divide_exact(const Poly& a, const Poly& b) {
  ensure(!b.zero(), "divide_exact by zero polynomial");
  if (a.zero()) return {};
  ensure(a.degree() >= b.degree(), "divide_exact: degree too small");
  std::vector<BigInt> rem = a.c_;
  std::vector<BigInt> quot(a.degree() - b.degree() + 1);
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    BigInt& top = rem[k + b.degree()];
    ensure(top % b.leading() == 0, "divide_exact: inexact step");
    BigInt q = top / b.leading();
    quot[k] = q;
    for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * b.c_[i];
  }
  for (const BigInt& r : rem) ensure(r == 0, "divide_exact: nonzero remainder");
  return Poly(std::move(quot));
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const BigInt& v : c_) g = boost::multiprecision::gcd(g, v);
  return g;
}

Poly Poly::primitive() const {
  if (zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> c = c_;
  for (BigInt& v : c) v /= g;
  return Poly(std::move(c));
}

std::string Poly::str() const {
  if (zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt v = c_[i];
    if (!s.empty()) {
      s += v < 0 ? " - " : " + ";
      if (v < 0) v = -v;
    } else if (v < 0) {
      s += "-";
      v = -v;
    }
    if (i == 0 || v != 1) s += v.str();
    if (i >= 1) {
      s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
  }
  return s;
}

namespace {

/// Pseudo-remainder of a by b: scale a so the leading terms divide cleanly,
// then run the school division.
Poly pseudo_rem(const Poly& a, const Poly& b) {
  ensure(!b.zero(), "pseudo_rem by zero");
  Poly r = a;
  int steps = a.degree() - b.degree() + 1;
  if (steps <= 0) return r;
  BigInt scale = 1;
  for (int i = 0; i < steps; ++i) scale *= b.leading();
  std::vector<BigInt> rem;
  for (const BigInt& v : r.coefficients()) rem.push_back(v * scale);
  // long division, discarding the quotient
  for (int k = static_cast<int>(rem.size()) - 1;
       k >= b.degree() && !rem.empty();) {
    if (rem[k] == 0) {
      --k;
      continue;
    }
    ensure(rem[k] % b.leading() == 0, "pseudo_rem: scaling failed");
    BigInt q = rem[k] / b.leading();
    for (int i = 0; i <= b.degree(); ++i)
      rem[k - b.degree() + i] -= q * b.coefficients()[i];
    --k;
  }
  return Poly(std::move(rem));
}

}  // namespace

Poly gcd(Poly a, Poly b) {
  if (a.zero()) return b.zero() || b.leading() > 0 ? b : -b;
  if (b.zero()) return a.leading() > 0 ? a : -a;
  BigInt shared =
      boost::multiprecision::gcd(a.content(), b.content());
  a = a.primitive();
  b = b.primitive();
  while (!b.zero()) {
    Poly r = pseudo_rem(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return Poly(std::vector<BigInt>{shared}) * a.primitive();
}

RationalFn make_rational(Poly num, Poly den) {
  ensure(!den.zero(), "make_rational: zero denominator");
  if (num.zero()) return {Poly{}, Poly{1}};
  Poly g = gcd(num, den);
  num = divide_exact(num, g);
  den = divide_exact(den, g);
  // Roll the remaining unit and content normalization into the numerator.
  BigInt dc = den.content();
  if (den.leading() < 0) dc = -dc;
  BigInt nc = num.content();
  BigInt shrink = boost::multiprecision::gcd(nc, dc < 0 ? BigInt(-dc) : dc);
  std::vector<BigInt> n = num.coefficients(), d = den.coefficients();
  for (BigInt& v : n) v = v / shrink * (dc < 0 ? -1 : 1);
  for (BigInt& v : d) v /= dc < 0 ? -shrink : shrink;
  return {Poly(std::move(n)), Poly(std::move(d))};
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  return a.num * b.den == b.num * a.den;
}

std::string RationalFn::str() const {
  return "(" + num.str() + ") / (" + den.str() + ")";
}

std::vector<BigInt> series(const RationalFn& f, int terms) {
  ensure(!f.den.zero(), "series: zero denominator");
  const BigInt d0 = f.den[0];
  ensure(d0 == 1 || d0 == -1, "series: denominator constant term not a unit");
  std::vector<BigInt> c;
  for (int n = 0; n < terms; ++n) {
    BigInt acc = f.num[n];
    for (int i = 1; i <= f.den.degree() && i <= n; ++i)
      acc -= f.den[i] * c[n - i];
    c.push_back(d0 == 1 ? acc : -acc);
  }
  return c;
}

namespace {

// Determinant by fraction-free (Bareiss) elimination; every division in
// the update is exact, so the arithmetic stays in Z[x].
Poly bareiss_det(std::vector<std::vector<Poly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly{1};
  Poly prev = Poly{1};
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly{};
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

RationalFn dfa_series(const Dfa& d) {
  // f_s = [s accepting] + x * sum over letters of f_{next(s)}; solve the
  // linear system by Cramer's rule with two fraction-free determinants.
  const int n = static_cast<int>(d.size());
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = i == j ? Poly{1} : Poly{};
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < 4; ++g) {
      int t = d.next[i][g];
      if (t >= 0) a[i][t] = a[i][t] - Poly::x();
    }
  Poly den = bareiss_det(a);
  ensure(!den.zero(), "dfa_series: singular system");
  for (int i = 0; i < n; ++i)
    a[i][d.start] = Poly{d.accepting[i] ? 1 : 0};
  Poly num = bareiss_det(a);
  return make_rational(std::move(num), std::move(den));
}

RationalFn geodesic_series_closed_form() {
  // (1 + x + 3x^3 + x^4) / ((x^2 + x - 1)(x^2 + 2x - 1))
  Poly den = Poly{-1, 1, 1} * Poly{-1, 2, 1};
  return make_rational(Poly{1, 1, 0, 3, 1}, std::move(den));
}

RationalFn spherical_series_closed_form() {
  // (-1 + x^3 + 2x^4) / ((1 - 3x + x^2 + 2x^3)(x - 1))
  Poly den = Poly{1, -3, 1, 2} * Poly{-1, 1};
  return make_rational(Poly{-1, 0, 0, 1, 2}, std::move(den));
}

std::vector<BigInt> geodesic_counts_direct(int terms) {
  std::vector<BigInt> out;
  for (int n = 0; n < terms; ++n) {
    long count = 0;
    for_each_reduced_word(n, [&](const Word& w) {
      if (is_geodesic(w)) ++count;
    });
    out.emplace_back(count);
  }
  return out;
}

std::vector<BigInt> spherical_counts_direct(int terms) {
  std::vector<BigInt> out;
  if (terms <= 0) return out;
  DistanceTable table(terms - 1);
  for (std::uint64_t v : table.layer_counts()) out.emplace_back(v);
  return out;
}

}  // namespace b3
