#include "pwl/melnikov.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "pwl/basis.hpp"
#include "pwl/quadrature.hpp"

namespace pwl {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Arc decomposition of one revolution at radius r, plus the switching-angle
// derivatives needed by the boundary corrections.
struct Arcs {
  std::vector<double> bounds;   // 0, theta_1, ..., theta_M, 2pi
  std::vector<int> zone;        // per arc, size M+1
  std::vector<double> dtheta;   // per interior angle (size M)
  std::vector<double> d2theta;  // per interior angle
};

Arcs make_arcs(const PwlSystem& sys, double r) {
  SwitchAngleSet s = build_angle_set(sys.curve, r);
  Arcs a;
  a.bounds.push_back(0.0);
  for (double th : s.angles) a.bounds.push_back(th);
  a.bounds.push_back(2 * kPi);
  a.zone = s.zones;
  a.dtheta = s.dtheta;
  a.d2theta = s.d2theta;
  return a;
}

struct Engine {
  const PwlSystem& sys;
  double x;  // initial radius (the recursion's state variable)
  double tol;
  Arcs arcs;

  Engine(const PwlSystem& s, double r, double quad_tol)
      : sys(s), x(r), tol(quad_tol), arcs(make_arcs(s, r)) {
    if (r <= 0) throw NonPositiveRadius();
  }

  int num_arcs() const { return int(arcs.zone.size()); }

  double F(int ord, int arc, double th) const {
    return polar_F(sys.coeffs, arcs.zone[arc], ord, x, th);
  }
  double dFdr(int ord, int arc, double th) const {
    auto rj = Jet<double>::variable(x, 1);
    auto tj = Jet<double>::constant(th, 1);
    return polar_F(sys.coeffs, arcs.zone[arc], ord, rj, tj).derivative(1);
  }
  double d2Fdr2(int ord, int arc, double th) const {
    auto rj = Jet<double>::variable(x, 2);
    auto tj = Jet<double>::constant(th, 2);
    return polar_F(sys.coeffs, arcs.zone[arc], ord, rj, tj).derivative(2);
  }
  double dFdth(int ord, int arc, double th) const {
    auto rj = Jet<double>::constant(x, 1);
    auto tj = Jet<double>::variable(th, 1);
    return polar_F(sys.coeffs, arcs.zone[arc], ord, rj, tj).derivative(1);
  }

  // ---- order 1 ----
  std::vector<double> I1, z1pre;  // arc integrals of F1 and prefix values

  void build_order1() {
    int A = num_arcs();
    I1.resize(A);
    z1pre.assign(A + 1, 0.0);
    for (int j = 0; j < A; ++j) {
      I1[j] = integrate([&](double s) { return F(1, j, s); }, arcs.bounds[j],
                        arcs.bounds[j + 1], tol);
      z1pre[j + 1] = z1pre[j] + I1[j];
    }
  }

  int arc_of(double s) const {
    int A = num_arcs();
    for (int j = 0; j < A; ++j)
      if (s <= arcs.bounds[j + 1]) return j;
    return A - 1;
  }

  double z1(double s) const {
    int j = arc_of(s);
    return z1pre[j] +
           integrate([&](double t) { return F(1, j, t); }, arcs.bounds[j], s, 0.1 * tol);
  }

  // ---- order 2 ----
  std::vector<double> I2, B2;

  double integrand2(int arc, double s) const { return F(2, arc, s) + dFdr(1, arc, s) * z1(s); }

  void build_order2() {
    int A = num_arcs();
    I2.resize(A);
    B2.assign(A, 0.0);  // B2[j] is the jump added when entering arc j (j >= 1)
    for (int j = 0; j < A; ++j)
      I2[j] = integrate([&](double s) { return integrand2(j, s); }, arcs.bounds[j],
                        arcs.bounds[j + 1], tol);
    for (int j = 1; j < A; ++j) {
      double th = arcs.bounds[j];
      double jumpF1 = F(1, j - 1, th) - F(1, j, th);
      double alpha1 = arcs.dtheta[j - 1] * z1pre[j];
      B2[j] = jumpF1 * alpha1;
    }
  }

  // z2 at the start of arc j (after the jump there).
  double z2pre_at(int j) const {
    double v = 0;
    for (int i = 0; i < j; ++i) v += 2 * I2[i];
    for (int i = 1; i <= j; ++i) v += B2[i];
    return v;
  }

  // z2 along the arc containing s.
  double z2(double s) const {
    int j = arc_of(s);
    return z2pre_at(j) +
           2 * integrate([&](double t) { return integrand2(j, t); }, arcs.bounds[j], s,
                         0.1 * tol);
  }

  double delta2_value() const {
    return (z2pre_at(num_arcs() - 1) + 2 * I2[num_arcs() - 1]) / 2.0;
  }

  // ---- order 3 ----
  double integrand3(int arc, double s) const {
    double z1s = z1(s);
    return F(3, arc, s) + dFdr(2, arc, s) * z1s + 0.5 * d2Fdr2(1, arc, s) * z1s * z1s +
           0.5 * dFdr(1, arc, s) * z2(s);
  }

  double delta3_value() const {
    int A = num_arcs();
    double total = 0;
    for (int j = 0; j < A; ++j)
      total += 6 * integrate([&](double s) { return integrand3(j, s); }, arcs.bounds[j],
                             arcs.bounds[j + 1], tol);
    for (int j = 1; j < A; ++j) {
      double th = arcs.bounds[j];
      double z1th = z1pre[j];
      double alpha1 = arcs.dtheta[j - 1] * z1th;
      // d/dt and d2/dt2 of delta1 = z1^{j-1} - z1^{j} at the switching angle.
      double dtd1 = F(1, j - 1, th) - F(1, j, th);
      double d2td1 = dFdth(1, j - 1, th) - dFdth(1, j, th);
      // d/dt of delta2 (z1 is continuous across the angle).
      double dtd2 = 2 * ((F(2, j - 1, th) - F(2, j, th)) +
                         (dFdr(1, j - 1, th) - dFdr(1, j, th)) * z1th);
      // z2 along arc j-1 evaluated at the angle (pre-jump value).
      double z2m = z2pre_at(j - 1) + 2 * I2[j - 1];
      double w2 = 0.5 * z2m + F(1, j - 1, th) * alpha1;
      double alpha2 = 2 * arcs.dtheta[j - 1] * w2 + arcs.d2theta[j - 1] * z1th * z1th;
      total += dtd2 * alpha1 + 0.5 * (d2td1 * alpha1 * alpha1 + dtd1 * alpha2);
    }
    return total / 6.0;
  }
};

}  // namespace

std::vector<double> melnikov_all(const PwlSystem& sys, int order, double r, double quad_tol) {
  if (order < 1 || order > 3) throw OrderUnsupported();
  Engine e(sys, r, quad_tol);
  e.build_order1();
  std::vector<double> out{e.z1pre.back()};
  if (order >= 2) {
    e.build_order2();
    out.push_back(e.delta2_value());
  }
  if (order >= 3) out.push_back(e.delta3_value());
  return out;
}

double melnikov_numeric(const PwlSystem& sys, int order, double r, double quad_tol) {
  return melnikov_all(sys, order, r, quad_tol).back();
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

double rho_eval(const RhoClosedForm& form, double x) {
  if (x <= 0) throw std::invalid_argument("rho forms live on x > 0");
  double acc = 0;
  for (const auto& [idx, c] : form.terms) acc += c * basis_u(idx, form.k, x);
  return acc;
}

double RhoClosedForm::denominator(double x) const {
  double x2k = std::pow(x, 2.0 * k);
  double root = std::sqrt(x2k + x * x);
  double mix = m * x2k + n * x * x;
  switch (index) {
    case 1:
      return 2.0 / x * root;
    case 2:
      return 4.0 / (x * x * x) * root * mix;
    case 4:
      return 1.0 / x * root;
    case 5:
      return 1.0 / (x * x * x) * root * mix;
    case 6:
      return 1.0 / x * root;
    case 7:
      return 2.0 / (x * x * x) * root * mix;
    default:
      throw std::logic_error("no closed denominator for this rho index");
  }
}

double rho_delta(const RhoClosedForm& form, const SwitchingCurve& curve, double r) {
  double x = x_of_r(curve, r);
  return rho_eval(form, x) / form.denominator(x);
}

namespace {

struct Named {
  // Aliases matching the printed subscripts: first index is the coefficient
  // slot (0..2), second the epsilon order (1..3).
  double a01, a11, a21, b01, b11, b21, al01, al11, al21, be01, be11, be21;
  double a02, a12, a22, b02, b12, b22, al02, al12, al22, be02, be12, be22;

  explicit Named(const PerturbationCoeffs& c) {
    auto f1 = c.flat(1);
    a01 = f1[0]; a11 = f1[1]; a21 = f1[2];
    b01 = f1[3]; b11 = f1[4]; b21 = f1[5];
    al01 = f1[6]; al11 = f1[7]; al21 = f1[8];
    be01 = f1[9]; be11 = f1[10]; be21 = f1[11];
    auto f2 = c.flat(2);
    a02 = f2[0]; a12 = f2[1]; a22 = f2[2];
    b02 = f2[3]; b12 = f2[4]; b22 = f2[5];
    al02 = f2[6]; al12 = f2[7]; al22 = f2[8];
    be02 = f2[9]; be12 = f2[10]; be22 = f2[11];
  }
};

std::vector<double> order1_v(const SwitchingCurve& curve, const PerturbationCoeffs& c) {
  Named s(c);
  switch (curve.parity) {
    case Parity::OddOdd:
      return {4 * (s.a01 - s.al01), -kPi * (s.a11 + s.al11 + s.b21 + s.be21),
              -4 * (s.b01 - s.be01)};
    case Parity::EvenEven:
      return {2 * (s.a11 - s.al11 - s.b21 + s.be21), -kPi * (s.a11 + s.b21),
              2 * (s.a11 - s.al11 + s.b21 - s.be21)};
    case Parity::EvenOdd:
      return {2 * (s.a01 - s.al01), s.a11 - s.al11 - s.b21 + s.be21, -kPi * (s.a11 + s.b21),
              s.a11 - s.al11 + s.b21 - s.be21};
  }
  return {};
}

std::vector<double> order2_ell(const SwitchingCurve& curve, const PerturbationCoeffs& c) {
  Named s(c);
  const double m = curve.m, n = curve.n;
  const bool k1 = curve.k() == 1;
  switch (curve.parity) {
    case Parity::OddOdd: {
      if (k1) {
        double l8 = 8 * n *
                    (-2 * s.al01 * s.al11 + s.al01 * s.al21 - s.al01 * s.be11 + 2 * s.a02 -
                     2 * s.al02 - 2 * s.al11 * s.be01 - s.al01 * s.a21 + s.a21 * s.be01 -
                     s.al21 * s.be01 - 4 * s.be21 * (s.al01 + s.b01) - 4 * s.al11 * s.b01 +
                     s.be01 * s.be11 - 2 * s.b02 + 2 * s.be02 + s.al01 * s.b11 -
                     s.be01 * s.b11 + 2 * s.al01 * s.b21 - 2 * s.be01 * s.b21);
        double l9 = -4 * kPi * n *
                    (2 * (s.al12 + s.be22) + 2 * s.a12 +
                     (s.al11 + s.be21) * (s.a21 - s.al21 - s.b11 + s.be11) + 2 * s.b22);
        return {l8, l9};
      }
      double l0 = -kPi * n *
                  (-s.al11 * s.al21 + s.al11 * s.be11 + 2 * s.a12 + 2 * s.al12 +
                   s.al11 * s.a21 + s.a21 * s.be21 - s.al21 * s.be21 - s.al11 * s.b11 -
                   s.b11 * s.be21 + s.be11 * s.be21 + 2 * s.b22 + 2 * s.be22);
      double l1 = 8 * (s.a02 * n + s.al01 * s.b11 * n - s.be01 * s.b21 * m -
                       s.be01 * s.b21 * n - 2 * s.al11 * s.be01 * m - s.be01 * s.be21 * m -
                       s.al01 * s.be11 * n - s.al02 * n - 2 * s.al11 * s.be01 * n -
                       s.be01 * s.be21 * n);
      double l2 = 8 * (s.a21 * s.be01 * m - s.b02 * m + s.al01 * s.b21 * (m + n) -
                       s.al01 * s.be21 * m - s.al21 * s.be01 * m + s.be02 * m -
                       s.al01 * s.be21 * n);
      double l3 = -kPi * (s.a21 * (s.al11 + s.be21) * (3 * m - n) + s.al11 * s.b11 * m +
                          s.b11 * s.be21 * m - 3 * s.al11 * s.b11 * n - 3 * s.b11 * s.be21 * n +
                          2 * s.b22 * (m + n) - 3 * s.al11 * s.al21 * m - s.al11 * s.be11 * m +
                          2 * s.al12 * m - 3 * s.al21 * s.be21 * m - s.be11 * s.be21 * m +
                          2 * s.be22 * m + s.al11 * s.al21 * n + 3 * s.al11 * s.be11 * n +
                          2 * s.al12 * n + s.al21 * s.be21 * n + 3 * s.be11 * s.be21 * n +
                          2 * s.be22 * n + 2 * s.a12 * (m + n));
      double l4 = -8 * n *
                  (2 * s.al01 * (s.al11 + s.be21) - s.be01 * s.be11 + s.b02 - s.be02 +
                   s.be01 * s.b11);
      double l5 = 2 * kPi * (s.al11 + s.be21) * (m - n) * (2 * s.al11 + s.b21 + s.be21);
      double l6 = -2 * kPi * (s.al11 + s.be21) * (s.b21 - s.be21) * (m - n);
      double l7 = 8 * m *
                  (s.al01 * s.al21 + s.a02 - s.al02 - 2 * s.al11 * s.be01 - s.al01 * s.a21 -
                   2 * s.be01 * s.be21);
      return {l0, l1, l2, l3, l4, l5, l6, l7};
    }
    case Parity::EvenEven: {
      if (k1) {
        double l5 = 4 * n * (s.a01 * s.b01 - s.al01 * s.be01);
        double pi = kPi;
        double l6 = -n / (2 + pi) *
                    (s.a11 * ((pi - 2) * (pi * s.al21 - (4 + pi) * s.be11) -
                              pi * (2 + pi) * s.a21 + (pi - 4) * (2 + pi) * s.b11) +
                     2 * (pi * pi - 4) * s.a12 + 2 * pi * pi * s.al12 + 8 * pi * s.al12 +
                     8 * s.al12 - pi * pi * s.a21 * s.b21 - 8 * s.a21 * s.b21 -
                     6 * pi * s.a21 * s.b21 + 8 * s.al21 * s.be21 + pi * pi * s.b11 * s.b21 +
                     2 * pi * s.b11 * s.b21 + 8 * s.be11 * s.be21 + pi * pi * s.al21 * s.b21 +
                     2 * pi * s.al21 * s.b21 - pi * pi * s.be11 * s.b21 -
                     6 * pi * s.be11 * s.b21 - 8 * s.be11 * s.b21 + 2 * pi * pi * s.b22 +
                     8 * s.b22 + 2 * (pi * pi - 4) * s.be22 + 8 * pi * s.b22);
        return {l5, l6};
      }
      double l0 = -kPi * (s.a12 + s.b22);
      double l1 = 2 * n *
                  (s.a12 - s.al12 - 2 * s.b11 * s.be21 + 2 * s.be11 * s.be21 - s.b22 + s.be22);
      double l2 = 2 * n * (s.a12 - s.al12 + s.b22 - s.be22);
      double l3 = 2 * m *
                  (s.a12 - s.al12 + 2 * s.a21 * s.be21 - 2 * s.al21 * s.be21 - s.b22 + s.be22);
      double l4 = 4 * s.a01 * s.b01 * m - 4 * s.al01 * (s.b01 * (m - n) + s.be01 * n);
      return {l0, l1, l2, l3, l4};
    }
    case Parity::EvenOdd: {
      double l0 = -kPi * n * (s.a12 + s.al12 + s.b22 + s.be22);
      double l1 = 4 * m *
                  (s.a01 * s.be21 - s.al01 * s.be21 + s.a21 * s.be01 - s.al21 * s.be01 -
                   s.b02 + s.be02);
      double l2 = 2 * n * (s.a12 - s.al12 + s.b22 - s.be22);
      double l3 = 2 * m *
                  (s.a12 - s.al12 + 2 * s.a21 * s.be21 - 2 * s.al21 * s.be21 - s.b22 + s.be22);
      double l4 = 4 * m * s.be01 * (s.a01 - s.al01);
      double l5 = 4 * n * (s.be01 * s.be11 - s.b02 + s.be02 - s.be01 * s.b11);
      double l6 = 2 * n *
                  (s.a12 - s.al12 - 2 * s.b11 * s.be21 + 2 * s.be11 * s.be21 - s.b22 + s.be22);
      return {l0, l1, l2, l3, l4, l5, l6};
    }
  }
  return {};
}

double coeff_scale(const PerturbationCoeffs& c, int order) {
  double s = 0;
  for (double v : c.flat(order)) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace

RhoClosedForm coeffs_to_rho(const SwitchingCurve& curve, const PerturbationCoeffs& coeffs,
                            int order) {
  if (order < 1 || order > 2) throw OrderUnsupported();
  RhoClosedForm f;
  f.parity = curve.parity;
  f.m = curve.m;
  f.n = curve.n;
  f.k = curve.k_double();
  f.order = order;
  const Rational k = curve.k();
  const bool k1 = k == 1;

  if (order == 1) {
    auto v = order1_v(curve, coeffs);
    switch (curve.parity) {
      case Parity::OddOdd:
        f.index = 1;
        if (k1)
          f.terms = {{0, v[0] + v[2]}, {8, v[1]}};
        else
          f.terms = {{2, v[0]}, {8, v[1]}, {0, v[2]}};
        break;
      case Parity::EvenEven:
        f.index = 4;
        if (k1)
          // u8 = 2x and u11 = (pi/2) x at k = 1, so the span collapses onto u1.
          f.terms = {{1, v[0] + 2 * v[1] + 0.5 * kPi * v[2]}};
        else
          f.terms = {{1, v[0]}, {8, v[1]}, {11, v[2]}};
        break;
      case Parity::EvenOdd:
        f.index = 6;
        f.terms = {{2, v[0]}, {1, v[1]}, {8, v[2]}, {11, v[3]}};
        break;
    }
    return f;
  }

  // Order 2 requires the first-order coefficients to vanish identically.
  auto v = order1_v(curve, coeffs);
  double scale = std::max(1.0, coeff_scale(coeffs, 1));
  if (curve.parity == Parity::EvenEven && k1) {
    double combo = v[0] + 2 * v[1] + 0.5 * kPi * v[2];
    if (std::abs(combo) > 1e-9 * scale)
      throw VanishingConditionViolated("Delta_1 must vanish before using order 2");
  } else if (curve.parity == Parity::OddOdd && k1) {
    if (std::abs(v[0] + v[2]) > 1e-9 * scale || std::abs(v[1]) > 1e-9 * scale)
      throw VanishingConditionViolated("Delta_1 must vanish before using order 2");
  } else {
    for (double vi : v)
      if (std::abs(vi) > 1e-9 * scale)
        throw VanishingConditionViolated("Delta_1 must vanish before using order 2");
  }

  auto l = order2_ell(curve, coeffs);
  switch (curve.parity) {
    case Parity::OddOdd:
      f.index = 2;
      if (k1)
        f.terms = {{0, l[0]}, {1, l[1]}};
      else
        f.terms = {{9, l[0]}, {2, l[1]}, {5, l[2]}, {4, l[3]},
                   {0, l[4]}, {1, l[5]}, {6, l[6]}, {7, l[7]}};
      break;
    case Parity::EvenEven:
      f.index = 5;
      if (k1)
        f.terms = {{3, l[0]}, {1, l[1]}};
      else
        f.terms = {{10, l[0]}, {1, l[1]}, {12, l[2]}, {6, l[3]}, {3, l[4]}};
      break;
    case Parity::EvenOdd:
      f.index = 7;
      if (k == make_rational(2, 3))
        f.terms = {{10, l[0]}, {5, l[1]}, {12, l[2]}, {0, l[3] + l[5]}, {3, l[4]}, {1, l[6]}};
      else if (k == 2)
        f.terms = {{10, l[0]}, {5, l[1] + l[6]}, {12, l[2]}, {6, l[3]}, {0, l[4] + l[5]}};
      else
        f.terms = {{10, l[0]}, {5, l[1]}, {12, l[2]}, {6, l[3]}, {3, l[4]}, {0, l[5]}, {1, l[6]}};
      break;
  }
  return f;
}

PerturbationCoeffs delta1_vanishing(const SwitchingCurve& curve, const PerturbationCoeffs& c) {
  PerturbationCoeffs out = c;
  Named s(c);
  auto f1 = out.flat(1);
  const bool k1 = curve.k() == 1;
  switch (curve.parity) {
    case Parity::OddOdd:
      if (k1) {
        f1[0] = s.al01 + s.b01 - s.be01;          // a01
        f1[1] = -s.al11 - s.b21 - s.be21;         // a11
      } else {
        f1[0] = s.al01;                           // a01
        f1[1] = -s.al11 - s.b21 - s.be21;         // a11
        f1[3] = s.be01;                           // b01
      }
      break;
    case Parity::EvenEven:
      if (k1) {
        f1[7] = (-kPi * s.a11 + 2 * s.a11 - 2 * s.b21 - kPi * s.be21 + 2 * s.be21 -
                 kPi * s.b21) /
                (2 + kPi);                        // alpha11
      } else {
        f1[1] = -s.be21;                          // a11
        f1[5] = s.be21;                           // b21
        f1[7] = -s.be21;                          // alpha11
      }
      break;
    case Parity::EvenOdd:
      // The printed tuple (b01 := beta01) plus the algebraically required
      // a01 := alpha01; without the latter the v0 term survives.
      f1[3] = s.be01;                             // b01
      f1[0] = s.al01;                             // a01
      f1[1] = -s.be21;                            // a11
      f1[5] = s.be21;                             // b21
      f1[7] = -s.be21;                            // alpha11
      break;
  }
  out.set_flat(1, f1);
  return out;
}

PerturbationCoeffs solve_delta2_vanishing(const SwitchingCurve& curve,
                                          const PerturbationCoeffs& c) {
  PerturbationCoeffs base = c;
  base.set_flat(2, {});
  std::vector<double> q = order2_ell(curve, base);
  const int rows = int(q.size());
  Eigen::MatrixXd L(rows, 12);
  for (int j = 0; j < 12; ++j) {
    PerturbationCoeffs probe = base;
    std::array<double, 12> unit{};
    unit[j] = 1.0;
    probe.set_flat(2, unit);
    auto lj = order2_ell(curve, probe);
    for (int i = 0; i < rows; ++i) L(i, j) = lj[i] - q[i];
  }
  Eigen::VectorXd rhs(rows);
  for (int i = 0; i < rows; ++i) rhs(i) = -q[i];
  Eigen::VectorXd sol = L.completeOrthogonalDecomposition().solve(rhs);
  double resid = (L * sol - rhs).norm();
  if (resid > 1e-9 * std::max(1.0, rhs.norm()))
    throw VanishingConditionViolated(
        "order-2 coefficients cannot annihilate Delta_2 for these order-1 values");
  PerturbationCoeffs out = base;
  std::array<double, 12> v{};
  for (int i = 0; i < 12; ++i) v[i] = sol(i);
  out.set_flat(2, v);
  return out;
}

std::vector<int> delta3_basis(const SwitchingCurve& curve) {
  const Rational k = curve.k();
  switch (curve.parity) {
    case Parity::OddOdd:
      if (k == 1) return {0, 1, 13};
      return {9, 2, 5, 4, 0, 1, 6, 7};
    case Parity::EvenOdd:
      if (k == make_rational(2, 3)) return {10, 5, 12, 0, 3, 1};
      if (k == 2) return {10, 5, 12, 6, 0};
      return {10, 5, 12, 6, 3, 0, 1};
    case Parity::EvenEven:
      throw OrderUnsupported();  // no third-order span is available here
  }
  return {};
}

SpanCheckResult delta3_span_check(const PwlSystem& sys, const std::vector<double>& r_samples,
                                  double vanish_tol, double quad_tol) {
  const SwitchingCurve& curve = sys.curve;
  std::vector<int> basis = delta3_basis(curve);
  const int N = int(r_samples.size());
  if (N < 2 * int(basis.size()))
    throw std::invalid_argument("need at least 2x basis-size sample points");

  Eigen::VectorXd y(N);
  Eigen::MatrixXd A(N, int(basis.size()));
  const double k = curve.k_double();
  for (int i = 0; i < N; ++i) {
    auto d = melnikov_all(sys, 3, r_samples[i], quad_tol);
    if (std::abs(d[0]) > vanish_tol || std::abs(d[1]) > vanish_tol)
      throw VanishingConditionViolated("Delta_1 and Delta_2 must vanish on the samples");
    double x = x_of_r(curve, r_samples[i]);
    // Positive denominator pattern continuing the order-1/2 prefactors.
    double mix = curve.m * std::pow(x, 2 * k) + curve.n * x * x;
    double nu = std::sqrt(std::pow(x, 2 * k) + x * x) * mix * mix / std::pow(x, 5);
    y(i) = d[2];
    for (std::size_t j = 0; j < basis.size(); ++j)
      A(i, int(j)) = basis_u(basis[j], k, x) / nu;
  }
  Eigen::VectorXd sol = A.completeOrthogonalDecomposition().solve(y);
  double ynorm = y.norm();
  SpanCheckResult res;
  res.basis = basis;
  res.fitted.assign(sol.data(), sol.data() + sol.size());
  res.relative_residual = ynorm > 0 ? (A * sol - y).norm() / ynorm : 0.0;
  return res;
}

}  // namespace pwl
