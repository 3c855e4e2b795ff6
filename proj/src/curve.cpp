#include "pwl/curve.hpp"

#include <algorithm>
#include <cmath>

namespace pwl {

SwitchingCurve SwitchingCurve::make(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("curve exponents must be >= 1");
  SwitchingCurve c;
  bool modd = m % 2 == 1, nodd = n % 2 == 1;
  if (modd && !nodd) {
    c.m = n;
    c.n = m;
    c.swapped = true;
  } else {
    c.m = m;
    c.n = n;
  }
  modd = c.m % 2 == 1;
  nodd = c.n % 2 == 1;
  c.parity = modd && nodd ? Parity::OddOdd : (!modd && !nodd ? Parity::EvenEven : Parity::EvenOdd);
  return c;
}

int SwitchingCurve::side(double x, double y) const {
  switch (parity) {
    case Parity::OddOdd:
    case Parity::EvenEven: {
      double v = std::pow(y, n) - std::pow(x, m);
      return v > 0 ? 1 : -1;
    }
    case Parity::EvenOdd: {
      if (x <= 0) return 1;
      double v = std::pow(std::abs(y), n) - std::pow(x, m);
      return v > 0 ? 1 : -1;
    }
  }
  return 1;
}

double SwitchingCurve::boundary_value(double x, double y) const {
  switch (parity) {
    case Parity::OddOdd:
    case Parity::EvenEven:
      return std::pow(y, n) - std::pow(x, m);
    case Parity::EvenOdd:
      // Lower branch has y < 0 there; n odd, so |y|^n = -y^n.
      return y >= 0 ? std::pow(y, n) - std::pow(x, m) : -std::pow(y, n) - std::pow(x, m);
  }
  return 0;
}

void SwitchingCurve::boundary_gradient(double x, double y, double& gx, double& gy) const {
  gx = -double(m) * std::pow(x, m - 1);
  gy = double(n) * std::pow(y, n - 1);
  if (parity == Parity::EvenOdd && y < 0) gy = -gy;
}

namespace {

inline double cross_g(const SwitchingCurve& c, double r, double th) {
  return std::pow(r, c.n) * std::pow(std::sin(th), c.n) -
         std::pow(r, c.m) * std::pow(std::cos(th), c.m);
}

inline double cross_g_dtheta(const SwitchingCurve& c, double r, double th) {
  return c.n * std::pow(r, c.n) * std::pow(std::sin(th), c.n - 1) * std::cos(th) +
         c.m * std::pow(r, c.m) * std::pow(std::cos(th), c.m - 1) * std::sin(th);
}

}  // namespace

double switching_angle(const SwitchingCurve& curve, double r, double tol) {
  if (r <= 0) throw NonPositiveRadius();
  const double half_pi = std::asin(1.0);
  // g is strictly increasing on [0, pi/2] with g(0) < 0 < g(pi/2); bisect,
  // then polish with Newton.
  double lo = 0.0, hi = half_pi;
  for (int i = 0; i < 52 && hi - lo > 1e-12; ++i) {
    double mid = 0.5 * (lo + hi);
    (cross_g(curve, r, mid) < 0 ? lo : hi) = mid;
  }
  double th = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    double g = cross_g(curve, r, th);
    double dg = cross_g_dtheta(curve, r, th);
    if (dg == 0) break;
    th -= g / dg;
    th = std::clamp(th, 0.0, half_pi);
  }
  if (std::abs(cross_g(curve, r, th)) > std::max(tol, 1e-12 * (std::pow(r, curve.n) + std::pow(r, curve.m))))
    throw std::runtime_error("switching angle solve failed tolerance");
  return th;
}

Jet<double> switching_angle_jet(const SwitchingCurve& curve, double r, int order) {
  if (r <= 0) throw NonPositiveRadius();
  double th0 = switching_angle(curve, r);
  Jet<double> rj = Jet<double>::variable(r, order);
  Jet<double> th = Jet<double>::constant(th0, order);
  // Newton on the truncated series: each pass fixes one more coefficient.
  for (int it = 0; it < order + 2; ++it) {
    Jet<double> s, c;
    sin_cos(th, s, c);
    Jet<double> g = pow(rj, double(curve.n)) * pow(s, double(curve.n)) -
                    pow(rj, double(curve.m)) * pow(c, double(curve.m));
    Jet<double> dg = double(curve.n) * pow(rj, double(curve.n)) * pow(s, double(curve.n - 1)) * c +
                     double(curve.m) * pow(rj, double(curve.m)) * pow(c, double(curve.m - 1)) * s;
    th = th - g / dg;
  }
  return th;
}

SwitchAngleSet build_angle_set(const SwitchingCurve& curve, double r) {
  if (r <= 0) throw NonPositiveRadius();
  SwitchAngleSet s;
  s.r = r;
  Jet<double> th = switching_angle_jet(curve, r, 2);
  s.theta1 = th.value();
  const double pi = 2 * std::asin(1.0);
  double d1 = th.derivative(1), d2 = th.derivative(2);
  switch (curve.parity) {
    case Parity::OddOdd:
      s.angles = {s.theta1, pi + s.theta1};
      s.dtheta = {d1, d1};
      s.d2theta = {d2, d2};
      break;
    case Parity::EvenEven:
      s.angles = {s.theta1, pi - s.theta1, pi + s.theta1, 2 * pi - s.theta1};
      s.dtheta = {d1, -d1, d1, -d1};
      s.d2theta = {d2, -d2, d2, -d2};
      break;
    case Parity::EvenOdd:
      s.angles = {s.theta1, 2 * pi - s.theta1};
      s.dtheta = {d1, -d1};
      s.d2theta = {d2, -d2};
      break;
  }
  // Zone labels from the canonical side function at arc midpoints.
  s.zones.resize(s.angles.size() + 1);
  double prev = 0.0;
  for (std::size_t j = 0; j <= s.angles.size(); ++j) {
    double next = j < s.angles.size() ? s.angles[j] : 2 * pi;
    double mid = 0.5 * (prev + next);
    s.zones[j] = curve.side(r * std::cos(mid), r * std::sin(mid));
    prev = next;
  }
  return s;
}

double x_of_r(const SwitchingCurve& curve, double r) {
  return r * std::cos(switching_angle(curve, r));
}

Jet<double> x_of_r_jet(const SwitchingCurve& curve, double r, int order) {
  Jet<double> rj = Jet<double>::variable(r, order);
  return rj * cos(switching_angle_jet(curve, r, order));
}

double r_of_x(const SwitchingCurve& curve, double x) {
  if (x <= 0) throw std::invalid_argument("x must be positive");
  // x(r) < r and x(.) is strictly increasing, so the root lies in [x, hi].
  double lo = x, hi = std::max(2 * x, 1e-6);
  while (x_of_r(curve, hi) < x) hi *= 2;
  double r = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    Jet<double> xj = x_of_r_jet(curve, r, 1);
    double f = xj.value() - x;
    (f < 0 ? lo : hi) = r;
    double step = f / xj.derivative(1);
    double cand = r - step;
    r = (cand > lo && cand < hi) ? cand : 0.5 * (lo + hi);
    if (std::abs(step) < 1e-15 * (1 + r) || hi - lo < 1e-15 * (1 + r)) break;
  }
  return r;
}

}  // namespace pwl
