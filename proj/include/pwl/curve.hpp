#pragma once

#include <stdexcept>
#include <vector>

#include "pwl/jet.hpp"
#include "pwl/scalars.hpp"

namespace pwl {

struct NonPositiveRadius : std::runtime_error {
  NonPositiveRadius() : std::runtime_error("radius must be positive") {}
};
struct OnSwitchingManifold : std::runtime_error {
  OnSwitchingManifold() : std::runtime_error("point lies on the switching manifold") {}
};

enum class Parity { OddOdd, EvenEven, EvenOdd };

// The switching curve y^n = x^m. Inputs with m odd / n even are normalized to
// the (even, odd) orientation via the (x,y) swap, so only three parity cases
// remain. For the EvenOdd case all analysis (angle set, Melnikov engine,
// return map) uses the normalized geometry whose circle crossings are
// {theta1, 2pi - theta1}: the branch pair |y| = x^(m/n) on x > 0. This is the
// geometry the closed-form coefficient maps describe.
struct SwitchingCurve {
  int m = 1;
  int n = 1;
  bool swapped = false;  // true when constructed from (odd, even) input
  Parity parity = Parity::OddOdd;

  static SwitchingCurve make(int m, int n);

  Rational k() const { return make_rational(m, n); }
  double k_double() const { return double(m) / double(n); }

  // Canonical zone sign: +1 where the upper-zone field X acts, -1 for Y.
  int side(double x, double y) const;

  // Smooth local event function whose zero set is the switching manifold near
  // a transversal crossing (branch chosen by the sign of y for EvenOdd).
  double boundary_value(double x, double y) const;
  void boundary_gradient(double x, double y, double& gx, double& gy) const;
};

// First-quadrant crossing angle: the unique root of
//   g(theta) = r^n sin^n(theta) - r^m cos^m(theta)  on [0, pi/2].
double switching_angle(const SwitchingCurve& curve, double r, double tol = 1e-14);

// Taylor jet of theta1 with respect to r (order >= 0).
Jet<double> switching_angle_jet(const SwitchingCurve& curve, double r, int order);

// Parity-dependent crossing angles on (0, 2pi), strictly increasing, with the
// zone of each arc (arc j spans [angles[j-1], angles[j]] with angles
// bracketed by 0 and 2pi). dtheta/d2theta are derivatives with respect to r.
struct SwitchAngleSet {
  double r = 0;
  double theta1 = 0;
  std::vector<double> angles;
  std::vector<int> zones;  // size angles.size() + 1, entries +1 / -1
  std::vector<double> dtheta;
  std::vector<double> d2theta;
};

SwitchAngleSet build_angle_set(const SwitchingCurve& curve, double r);

// x = r cos(theta1(r)), the radial variable used by the closed forms.
double x_of_r(const SwitchingCurve& curve, double r);
Jet<double> x_of_r_jet(const SwitchingCurve& curve, double r, int order);
// Inverse map by Newton iteration (x_of_r is strictly increasing).
double r_of_x(const SwitchingCurve& curve, double x);

}  // namespace pwl
