#pragma once

#include "pwl/jet.hpp"
#include "pwl/system.hpp"

namespace pwl {

struct OrderUnsupported : std::runtime_error {
  OrderUnsupported() : std::runtime_error("Melnikov orders above 3 are not supported") {}
};

// Polar components of the order-i perturbation: rdot = sum eps^i A_i,
// thetadot = -1 + sum eps^i B_i, written in terms of sin/cos of theta so the
// scalar type can be a jet in r or theta.
template <class T>
T polar_A(const ZoneAffine& z, const T& r, const T& cth, const T& sth) {
  return cth * (r * sth * (z.p[2] + z.q[1]) + z.p[0]) + r * cth * cth * z.p[1] +
         sth * (z.q[2] * r * sth + z.q[0]);
}

template <class T>
T polar_B(const ZoneAffine& z, const T& r, const T& cth, const T& sth) {
  return (-(sth * (z.p[2] * r * sth + z.p[0])) + cth * (r * sth * (z.q[2] - z.p[1]) + z.q[0]) +
          r * cth * cth * z.q[1]) /
         r;
}

// dr/dtheta = (sum eps^i A_i) / (-1 + sum eps^i B_i); the order-i coefficient
// comes out of truncated power-series division in eps.
template <class T>
T polar_F(const PerturbationCoeffs& coeffs, int zone, int order, const T& r, const T& theta) {
  if (order < 1 || order > 3) throw OrderUnsupported();
  using std::cos;
  using std::sin;
  using JT = Jet<T>;
  T zero = zero_like(r);
  JT num(std::size_t(order), zero);
  JT den(std::size_t(order), zero);
  den[0] = zero - one_like(r);
  T cth = cos(theta), sth = sin(theta);
  for (int i = 1; i <= order; ++i) {
    const OrderCoeffs& oc = coeffs.at(i);
    const ZoneAffine& z = zone > 0 ? oc.upper : oc.lower;
    num[std::size_t(i)] = polar_A(z, r, cth, sth);
    den[std::size_t(i)] = polar_B(z, r, cth, sth);
  }
  return (num / den)[std::size_t(order)];
}

inline double polar_rhs(const PwlSystem& sys, int zone, int order, double r, double theta) {
  if (r <= 0) throw NonPositiveRadius();
  return polar_F(sys.coeffs, zone, order, r, theta);
}

// Exact dr/dtheta of the full system at finite epsilon (for oracle tests).
inline double polar_rhs_exact(const PwlSystem& sys, int zone, double r, double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  double num = 0, den = -1, ei = 1;
  for (int i = 1; i <= 3; ++i) {
    ei *= sys.epsilon;
    const ZoneAffine& z = zone > 0 ? sys.coeffs.at(i).upper : sys.coeffs.at(i).lower;
    num += ei * polar_A(z, r, c, s);
    den += ei * polar_B(z, r, c, s);
  }
  return num / den;
}

}  // namespace pwl
