#pragma once

#include <utility>
#include <vector>

#include "pwl/polar.hpp"
#include "pwl/system.hpp"

namespace pwl {

struct VanishingConditionViolated : std::runtime_error {
  explicit VanishingConditionViolated(const std::string& w) : std::runtime_error(w) {}
};

// Melnikov function of the given order at initial radius r, computed by the
// arcwise recursion: order 1 is the plain arc integral of F1; orders 2 and 3
// add the state-derivative convolution terms and the switching-time
// corrections built from the angle jets. All quadratures are adaptive
// Gauss-Kronrod with absolute tolerance quad_tol per arc.
double melnikov_numeric(const PwlSystem& sys, int order, double r, double quad_tol = 1e-10);

// Evaluates Delta_1..Delta_order at once (shares the arc decomposition).
std::vector<double> melnikov_all(const PwlSystem& sys, int order, double r,
                                 double quad_tol = 1e-10);

// Closed form of Delta_order as a positive prefactor times a combination of
// basis functions u_i(x) evaluated at x = r cos(theta1(r)).
struct RhoClosedForm {
  int index = 0;  // 1..7 and 9, matching the per-parity displays
  Parity parity{};
  int m = 1, n = 1;
  double k = 1;
  int order = 1;
  std::vector<std::pair<int, double>> terms;  // (basis index, coefficient)

  // Denominator D(x) with Delta(x) = rho(x) / D(x); strictly positive on x>0.
  double denominator(double x) const;
};

double rho_eval(const RhoClosedForm& form, double x);
// rho composed with x(r) and divided by the prefactor: the closed-form value
// of Delta_order at initial radius r.
double rho_delta(const RhoClosedForm& form, const SwitchingCurve& curve, double r);

// Coefficient maps (v for order 1, l for order 2) per parity case, including
// the degenerate-k branches selected by exact rational comparison. Order 2
// requires the order-1 vanishing conditions to hold.
RhoClosedForm coeffs_to_rho(const SwitchingCurve& curve, const PerturbationCoeffs& coeffs,
                            int order);

// Returns coefficients with the parity-correct substitution making Delta_1
// identically zero.
PerturbationCoeffs delta1_vanishing(const SwitchingCurve& curve, const PerturbationCoeffs& c);

// Least-squares choice of order-2 coefficients annihilating every order-2
// closed-form coefficient (Delta_2 == 0). Requires Delta_1 == 0 already and,
// for OddOdd, alpha11 + beta21 == 0 (two of the order-2 coefficients are pure
// order-1 products that no order-2 choice can cancel).
PerturbationCoeffs solve_delta2_vanishing(const SwitchingCurve& curve,
                                          const PerturbationCoeffs& c);

// Numeric span-membership check for the third-order function: fits
// Delta_3(r_i) against the stated basis over x(r_i) divided by the
// (unknown up to a constant) positive denominator pattern. Returns the
// relative residual and the fitted coefficients.
struct SpanCheckResult {
  double relative_residual = 0;
  std::vector<double> fitted;
  std::vector<int> basis;
};
SpanCheckResult delta3_span_check(const PwlSystem& sys, const std::vector<double>& r_samples,
                                  double vanish_tol = 1e-8, double quad_tol = 1e-10);

// Basis of the order-3 span per parity and k branch.
std::vector<int> delta3_basis(const SwitchingCurve& curve);

}  // namespace pwl
