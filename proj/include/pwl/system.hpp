#pragma once

#include <array>
#include <string>

#include "pwl/curve.hpp"

namespace pwl {

// Affine perturbation for one zone and one order:
//   P(x, y) = p0 + p1 x + p2 y,   Q(x, y) = q0 + q1 x + q2 y.
struct ZoneAffine {
  std::array<double, 3> p{0, 0, 0};
  std::array<double, 3> q{0, 0, 0};
};

// One epsilon order: upper-zone (a, b) and lower-zone (alpha, beta) blocks.
struct OrderCoeffs {
  ZoneAffine upper;  // a_{ji}, b_{ji}
  ZoneAffine lower;  // alpha_{ji}, beta_{ji}
};

struct PerturbationCoeffs {
  std::array<OrderCoeffs, 3> order{};  // orders 1..3

  const OrderCoeffs& at(int ord) const { return order[ord - 1]; }
  OrderCoeffs& at(int ord) { return order[ord - 1]; }
  // Flat views used by the linear coefficient maps (12 scalars per order,
  // layout a0 a1 a2 b0 b1 b2 alpha0 alpha1 alpha2 beta0 beta1 beta2).
  std::array<double, 12> flat(int ord) const;
  void set_flat(int ord, const std::array<double, 12>& v);
};

struct PwlSystem {
  SwitchingCurve curve;
  PerturbationCoeffs coeffs;
  double epsilon = 0;

  // Builds the system, normalizing (odd, even) exponent pairs to (even, odd)
  // by the (x,y) |-> (y,x) + time-reversal conjugacy (which also remaps the
  // coefficient blocks). Radii of periodic orbits are preserved.
  static PwlSystem make(int m, int n, const PerturbationCoeffs& coeffs, double epsilon);
};

struct Vec2 {
  double x = 0, y = 0;
};

// The vector field of the stored (normalized) system, selecting the zone by
// the sign of y^n - x^m. Throws OnSwitchingManifold within tol of the curve
// unless a side is forced (+1 upper / -1 lower).
Vec2 evaluate_field(const PwlSystem& sys, double x, double y, double tol = 0.0,
                    int force_side = 0);

PwlSystem load_system(const std::string& path);
std::string system_to_json(const PwlSystem& sys);
PwlSystem system_from_json(const std::string& text);
void save_system(const PwlSystem& sys, const std::string& path);

}  // namespace pwl
