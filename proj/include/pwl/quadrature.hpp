#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace pwl {

struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Gauss7/Kronrod15 nodes and weights on [-1,1].
inline constexpr double kGK15Node[8] = {
    0.0,
    0.2077849550078985,
    0.4058451513773972,
    0.5860872354676911,
    0.7415311855993945,
    0.8648644233597691,
    0.9491079123427585,
    0.9914553711208126};
inline constexpr double kK15Weight[8] = {
    0.2094821410847278,
    0.2044329400752989,
    0.1903505780647854,
    0.1690047266392679,
    0.1406532597155259,
    0.1047900103222502,
    0.0630920926299785,
    0.0229353220105292};
// Gauss weights attach to even-indexed Kronrod nodes (0, 2, 4, 6).
inline constexpr double kG7Weight[4] = {
    0.4179591836734694,
    0.3818300505051189,
    0.2797053914892767,
    0.1294849661688697};

template <class F>
void gk15_panel(F&& f, double a, double b, double& value, double& err) {
  const double mid = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double f0 = f(mid);
  double k15 = kK15Weight[0] * f0;
  double g7 = kG7Weight[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kGK15Node[i];
    const double s = f(mid + dx) + f(mid - dx);
    k15 += kK15Weight[i] * s;
    if (i % 2 == 0) g7 += kG7Weight[i / 2] * s;
  }
  value = k15 * h;
  err = std::abs((k15 - g7) * h);
}

template <class F>
double gk_adaptive(F&& f, double a, double b, double tol, int depth, double* err_out) {
  double v, e;
  gk15_panel(f, a, b, v, e);
  if (e <= tol || b - a < 1e-14 * (1.0 + std::abs(a))) {
    if (depth == 0 && e > tol)
      throw QuadratureFailure("adaptive quadrature: tolerance not met");
    if (err_out) *err_out += e;
    return v;
  }
  if (depth == 0) throw QuadratureFailure("adaptive quadrature: max depth reached");
  const double mid = 0.5 * (a + b);
  return gk_adaptive(f, a, mid, 0.5 * tol, depth - 1, err_out) +
         gk_adaptive(f, mid, b, 0.5 * tol, depth - 1, err_out);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration to absolute tolerance.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-10, double* err_out = nullptr) {
  if (a == b) return 0.0;
  double acc = 0.0;
  double v = detail::gk_adaptive(f, a, b, abs_tol, 40, &acc);
  if (err_out) *err_out = acc;
  return v;
}

}  // namespace pwl
