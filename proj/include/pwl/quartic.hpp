#pragma once

#include <array>
#include <optional>

#include "pwl/factors.hpp"
#include "pwl/roots.hpp"

namespace pwl {

struct DegenerateK : std::runtime_error {
  DegenerateK() : std::runtime_error("k in {1, 2/3, 2} degenerates the quartic analysis") {}
};

// Generic quartic discriminant from the coefficient tuple (a x^4 + ... + e).
template <class T>
T quartic_discriminant(const T& a, const T& b, const T& c, const T& d, const T& e) {
  return T(256) * a * a * a * e * e * e - T(192) * a * a * b * d * e * e -
         T(128) * a * a * c * c * e * e + T(144) * a * a * c * d * d * e -
         T(27) * a * a * d * d * d * d + T(144) * a * b * b * c * e * e -
         T(6) * a * b * b * d * d * e - T(80) * a * b * c * c * d * e +
         T(18) * a * b * c * d * d * d + T(16) * a * c * c * c * c * e -
         T(4) * a * c * c * c * d * d - T(27) * b * b * b * b * e * e +
         T(18) * b * b * b * c * d * e - T(4) * b * b * b * d * d * d -
         T(4) * b * b * c * c * c * e + b * b * c * c * d * d;
}

template <class T>
T quartic_discriminant_of_k(const T& k) {
  Poly<T> q = quartic_poly(k);
  std::array<T, 5> c{T(0), T(0), T(0), T(0), T(0)};
  for (int i = 0; i <= q.degree(); ++i) c[std::size_t(i)] = q.coeff(i);
  return quartic_discriminant(c[4], c[3], c[2], c[1], c[0]);
}

// The degree-12 cofactor of the factored discriminant.
template <class T>
T quartic_disc_M(const T& k) {
  Poly<T> m(std::vector<T>{T(3296), T(-15336), T(22032), T(28332), T(-161955), T(253647),
                           T(-84219), T(-352440), T(742059), T(-781069), T(503307),
                           T(-189990), T(32400)});
  return m(k);
}

// Factored form: -192 (4-3k)^2 (k-1)^12 (2k-1)(3k-2)(5k-4) M(k) N(k), where N
// is the degree-17 region polynomial.
template <class T>
T quartic_discriminant_factored(const T& k) {
  T f = T(4) - T(3) * k;
  T g = k - T(1);
  T g2 = g * g;
  T g4 = g2 * g2;
  T g12 = g4 * g4 * g4;
  Poly<T> q2;
  {
    const RatPoly& q = q2_poly();
    std::vector<T> c;
    c.reserve(q.c.size());
    for (const auto& r : q.c) c.push_back(static_cast<T>(r));
    q2 = Poly<T>(std::move(c));
  }
  return T(-192) * f * f * g12 * (T(2) * k - T(1)) * (T(3) * k - T(2)) * (T(5) * k - T(4)) *
         quartic_disc_M(k) * q2(k);
}

struct QuarticSignAnalysis {
  int disc_sign = 0;                     // via the factored form, exact
  std::array<int, 5> coeff_signs{};      // signs of the five coefficients
  int positive_roots = 0;                // certified by Sturm sequences
  std::vector<std::pair<Rational, Rational>> isolating;
};

// Exact analysis at rational k (k in {1, 2/3, 2} rejected as degenerate).
QuarticSignAnalysis quartic_sign_analysis(const Rational& k);

// Expected positive-root count per k-interval (the appendix conclusion list);
// nullopt on interval boundaries / degenerate points.
std::optional<int> quartic_expected_positive_roots(const Rational& k);

}  // namespace pwl
