#pragma once

#include <optional>

#include "pwl/melnikov.hpp"
#include "pwl/system.hpp"

namespace pwl {

struct NoCrossingFound : std::runtime_error {
  NoCrossingFound() : std::runtime_error("no switching-curve crossing within one revolution") {}
};
struct TangencyDetected : std::runtime_error {
  TangencyDetected() : std::runtime_error("trajectory meets the switching curve tangentially") {}
};
struct NotInImage : std::runtime_error {
  explicit NotInImage(const std::string& w) : std::runtime_error(w) {}
};

// One zone of the system at fixed epsilon: xdot = A x + c, with the exact
// flow phi_t(p) = p* + exp(tA)(p - p*) around the affine fixed point (series
// fallback when A is near-singular).
struct AffinePiece {
  double A[2][2] = {{0, 1}, {-1, 0}};
  double c[2] = {0, 0};

  static AffinePiece from_zone(const PwlSystem& sys, int zone);
  Vec2 flow(const Vec2& p, double t) const;
  Vec2 velocity(const Vec2& p) const;
};

struct CrossingEvent {
  Vec2 point;
  double time = 0;
  double transversality = 0;  // dH/dt at the event
};

// First positive-time crossing of the switching set from a point strictly
// inside a zone, by coarse angular sampling of the zone indicator followed by
// bisection and Newton on the branch event function. zone = 0 infers the zone
// from p; passing it explicitly allows starting on the curve itself.
CrossingEvent flow_to_section(const AffinePiece& piece, const Vec2& p,
                              const SwitchingCurve& curve, int zone = 0,
                              double step = 0.04908738521234052, double tangent_tol = 1e-8);

// Full clockwise revolution starting and ending on the positive x-axis.
double return_map(const PwlSystem& sys, double r0);
inline double displacement(const PwlSystem& sys, double r0) { return return_map(sys, r0) - r0; }

struct LimitCycleReport {
  double radius = 0;
  double residual = 0;
  int stability = 0;  // sign of dP/dr - 1
  double melnikov_zero = 0;
  double melnikov_distance = 0;
  int melnikov_order = 1;
};

// Fixed points of the return map on the window, paired with the nearest zero
// of the first nonvanishing Melnikov function.
std::vector<LimitCycleReport> find_limit_cycles(const PwlSystem& sys,
                                                std::pair<double, double> window,
                                                double tol = 1e-12, int grid = 240);

// Zeros of Delta_order on the window by sign-scanning + bisection.
std::vector<double> melnikov_zeros(const PwlSystem& sys, int order,
                                   std::pair<double, double> window, int grid = 240,
                                   double quad_tol = 1e-10);

// Minimum-norm preimage of a target coefficient vector under the linear
// order-1 coefficient map (order 2: solves for the order-2 block given the
// already-fixed order-1 block).
PerturbationCoeffs coeffs_from_target_rho(const SwitchingCurve& curve,
                                          const std::vector<double>& target, int order,
                                          const PerturbationCoeffs& base = {},
                                          double tol = 1e-9);

}  // namespace pwl
