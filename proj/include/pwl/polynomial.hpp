#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pwl/scalars.hpp"

namespace pwl {

struct DegenerateZeroPolynomial : std::runtime_error {
  DegenerateZeroPolynomial() : std::runtime_error("zero polynomial has no root count") {}
};

// Dense univariate polynomial, coefficient i on x^i. T is Rational for exact
// work and double/BigFloat for evaluation.
template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  Poly(std::initializer_list<T> init) : c(init) { trim(); }
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly constant(const T& v) { return Poly({v}); }
  static Poly x() { return Poly({T(0), T(1)}); }

  void trim() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return int(c.size()) - 1; }
  const T& coeff(int i) const { return c[i]; }

  template <class X>
  X operator()(const X& x) const {
    if (c.empty()) return X(0);
    X acc = X(c.back());
    for (int i = int(c.size()) - 2; i >= 0; --i) acc = acc * x + X(c[i]);
    return acc;
  }

  Poly derivative() const {
    if (c.size() <= 1) return Poly();
    std::vector<T> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * T(int(i));
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const T& s) {
    Poly r = a;
    for (auto& v : r.c) v = v * s;
    r.trim();
    return r;
  }
  friend Poly operator*(const T& s, const Poly& a) { return a * s; }
  friend Poly operator-(const Poly& a) { return a * T(-1); }
};

template <class T>
Poly<T> poly_pow(const Poly<T>& p, int e) {
  Poly<T> r = Poly<T>::constant(T(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

using RatPoly = Poly<Rational>;

// Exact polynomial remainder over the rationals.
inline RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rational q = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] -= q * b.c[i];
    a.trim();
  }
  return a;
}

// Scale so the coefficients are coprime integers; positive factor only, so
// signs stay meaningful in Sturm chains.
inline RatPoly make_primitive(RatPoly p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& q : p.c) den_lcm = lcm(den_lcm, denominator(q));
  Integer num_gcd = 0;
  for (auto& q : p.c) {
    q *= den_lcm;
    num_gcd = gcd(num_gcd, numerator(q));
  }
  if (num_gcd != 0)
    for (auto& q : p.c) q /= num_gcd;
  return p;
}

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  a = make_primitive(std::move(a));
  b = make_primitive(std::move(b));
  while (!b.is_zero()) {
    RatPoly r = make_primitive(poly_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline RatPoly poly_div_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly rem = a;
  std::vector<Rational> q(std::max<std::size_t>(1, a.c.size() - b.c.size() + 1), Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    Rational f = rem.c.back() / b.c.back();
    int shift = rem.degree() - b.degree();
    q[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) rem.c[i + shift] -= f * b.c[i];
    rem.trim();
  }
  return RatPoly(std::move(q));
}

inline RatPoly square_free_part(const RatPoly& p) {
  RatPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return poly_div_exact(p, g);
}

inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  chain.push_back(make_primitive(p));
  chain.push_back(make_primitive(p.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(make_primitive(-r));
  }
  return chain;
}

inline int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.is_zero() ? 0 : sign_of(p(x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

struct RootCount {
  int count = 0;
  std::vector<std::pair<Rational, Rational>> isolating;
  // Multiplicity of each isolated root in the original polynomial (1 unless
  // the input had repeated factors).
  std::vector<int> multiplicity;
};

// Exact count of distinct real roots in the open interval (a, b) by Sturm's
// theorem, with isolating intervals refined to the requested width. Roots at
// the endpoints are divided out first, which matches open-interval semantics.
RootCount count_real_roots(RatPoly p, Rational a, Rational b, double width = 1e-12);

// Roots on (0, +inf); the upper end is replaced by a Cauchy bound.
RootCount count_positive_roots(const RatPoly& p, double width = 1e-12);

}  // namespace pwl
