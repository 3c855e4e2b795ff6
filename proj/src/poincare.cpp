#include "pwl/poincare.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace pwl {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

AffinePiece AffinePiece::from_zone(const PwlSystem& sys, int zone) {
  AffinePiece ap;
  double e = sys.epsilon, e2 = e * e, e3 = e2 * e;
  const double ordeps[3] = {e, e2, e3};
  for (int ord = 1; ord <= 3; ++ord) {
    const ZoneAffine& z = zone > 0 ? sys.coeffs.at(ord).upper : sys.coeffs.at(ord).lower;
    double w = ordeps[ord - 1];
    ap.A[0][0] += w * z.p[1];
    ap.A[0][1] += w * z.p[2];
    ap.A[1][0] += w * z.q[1];
    ap.A[1][1] += w * z.q[2];
    ap.c[0] += w * z.p[0];
    ap.c[1] += w * z.q[0];
  }
  return ap;
}

Vec2 AffinePiece::velocity(const Vec2& p) const {
  return {A[0][0] * p.x + A[0][1] * p.y + c[0], A[1][0] * p.x + A[1][1] * p.y + c[1]};
}

namespace {

// exp(tA) for the trace/deviator split A = mu I + N with tr N = 0: the series
// C(t) I + S(t) N with C = sum (-d)^j t^(2j)/(2j)!, S its odd partner,
// d = det N. Valid for both rotational (d > 0) and hyperbolic (d < 0) pieces.
void expm2(const double A[2][2], double t, double E[2][2]) {
  double mu = 0.5 * (A[0][0] + A[1][1]);
  double N[2][2] = {{A[0][0] - mu, A[0][1]}, {A[1][0], A[1][1] - mu}};
  double d = N[0][0] * N[1][1] - N[0][1] * N[1][0];
  double w2 = d * t * t;
  double C, S;
  if (w2 > 1e-6) {
    double w = std::sqrt(d);
    C = std::cos(w * t);
    S = std::sin(w * t) / w;
  } else if (w2 < -1e-6) {
    double w = std::sqrt(-d);
    C = std::cosh(w * t);
    S = std::sinh(w * t) / w;
  } else {
    // Near the defective boundary: short series in d t^2.
    C = 1 - w2 / 2 + w2 * w2 / 24 - w2 * w2 * w2 / 720;
    S = t * (1 - w2 / 6 + w2 * w2 / 120 - w2 * w2 * w2 / 5040);
  }
  double emu = std::exp(mu * t);
  E[0][0] = emu * (C + S * N[0][0]);
  E[0][1] = emu * S * N[0][1];
  E[1][0] = emu * S * N[1][0];
  E[1][1] = emu * (C + S * N[1][1]);
}

}  // namespace

Vec2 AffinePiece::flow(const Vec2& p, double t) const {
  double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
  double E[2][2];
  expm2(A, t, E);
  if (std::abs(det) > 1e-8) {
    // Fixed point p* = -A^{-1} c.
    double px = -(A[1][1] * c[0] - A[0][1] * c[1]) / det;
    double py = -(-A[1][0] * c[0] + A[0][0] * c[1]) / det;
    double dx = p.x - px, dy = p.y - py;
    return {px + E[0][0] * dx + E[0][1] * dy, py + E[1][0] * dx + E[1][1] * dy};
  }
  // Near-singular A: phi_t(p) = e^{tA} p + Phi(t) c with
  // Phi(t) = t sum (tA)^j/(j+1)!, assembled by scaling and squaring
  // (Phi(2t) = (E(t) + I) Phi(t), E(2t) = E(t)^2).
  int halvings = 0;
  double tt = t;
  while (std::abs(tt) > 0.25) {
    tt *= 0.5;
    ++halvings;
  }
  double P[2][2] = {{tt, 0}, {0, tt}};
  double term[2][2] = {{tt, 0}, {0, tt}};
  for (int j = 1; j < 24; ++j) {
    double nt[2][2];
    for (int r = 0; r < 2; ++r)
      for (int cc = 0; cc < 2; ++cc)
        nt[r][cc] = (term[r][0] * A[0][cc] + term[r][1] * A[1][cc]) * tt / (j + 1);
    for (int r = 0; r < 2; ++r)
      for (int cc = 0; cc < 2; ++cc) {
        term[r][cc] = nt[r][cc];
        P[r][cc] += nt[r][cc];
      }
  }
  double Et[2][2];
  expm2(A, tt, Et);
  for (int h = 0; h < halvings; ++h) {
    double nP[2][2], sq[2][2];
    for (int r = 0; r < 2; ++r)
      for (int cc = 0; cc < 2; ++cc) {
        nP[r][cc] = P[r][cc] + Et[r][0] * P[0][cc] + Et[r][1] * P[1][cc];
        sq[r][cc] = Et[r][0] * Et[0][cc] + Et[r][1] * Et[1][cc];
      }
    for (int r = 0; r < 2; ++r)
      for (int cc = 0; cc < 2; ++cc) {
        P[r][cc] = nP[r][cc];
        Et[r][cc] = sq[r][cc];
      }
  }
  double fx = Et[0][0] * p.x + Et[0][1] * p.y + P[0][0] * c[0] + P[0][1] * c[1];
  double fy = Et[1][0] * p.x + Et[1][1] * p.y + P[1][0] * c[0] + P[1][1] * c[1];
  return {fx, fy};
}

CrossingEvent flow_to_section(const AffinePiece& piece, const Vec2& p,
                              const SwitchingCurve& curve, int zone, double step,
                              double tangent_tol) {
  const double t_max = 2 * kPi * 1.2;
  int side0 = zone != 0 ? zone : curve.side(p.x, p.y);
  double t_prev = 1e-9;
  double h = step;
  for (double t = t_prev + h; t <= t_max + h; t += h) {
    Vec2 q = piece.flow(p, t);
    if (curve.side(q.x, q.y) != side0) {
      // Bracketed: bisect on the zone indicator, then Newton on the branch
      // event function (fixed by the bracket).
      double lo = t_prev, hi = t;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        Vec2 qm = piece.flow(p, mid);
        (curve.side(qm.x, qm.y) == side0 ? lo : hi) = mid;
      }
      double tc = 0.5 * (lo + hi);
      Vec2 qc = piece.flow(p, tc);
      for (int it = 0; it < 6; ++it) {
        double g = curve.boundary_value(qc.x, qc.y);
        double gx, gy;
        curve.boundary_gradient(qc.x, qc.y, gx, gy);
        Vec2 v = piece.velocity(qc);
        double dg = gx * v.x + gy * v.y;
        if (dg == 0) break;
        tc -= g / dg;
        qc = piece.flow(p, tc);
      }
      double gx, gy;
      curve.boundary_gradient(qc.x, qc.y, gx, gy);
      Vec2 v = piece.velocity(qc);
      double dg = gx * v.x + gy * v.y;
      if (std::abs(dg) < tangent_tol) throw TangencyDetected();
      return {qc, tc, dg};
    }
    t_prev = t;
  }
  throw NoCrossingFound();
}

double return_map(const PwlSystem& sys, double r0) {
  if (r0 <= 0) throw NonPositiveRadius();
  const SwitchingCurve& curve = sys.curve;
  Vec2 p{r0, 0};
  double total_t = 0;
  int zone = curve.side(p.x, p.y);
  const int max_legs = 16;
  for (int leg = 0; leg < max_legs; ++leg) {
    AffinePiece piece = AffinePiece::from_zone(sys, zone);
    // Next switching crossing and next section return; take whichever is
    // first. The section return only counts after more than half a turn.
    std::optional<CrossingEvent> crossing;
    try {
      crossing = flow_to_section(piece, p, curve, zone);
    } catch (const NoCrossingFound&) {
      crossing = std::nullopt;
    }
    // Locate the section return: the flow is clockwise, so it comes back to
    // the positive x-axis with y descending through 0 at x > 0.
    std::optional<double> section_t;
    {
      const double h = 0.04908738521234052;
      double t_prev = 1e-9;
      Vec2 q_prev = piece.flow(p, t_prev);
      for (double t = t_prev + h; t <= 2 * kPi * 1.2; t += h) {
        Vec2 q = piece.flow(p, t);
        if (total_t + t > kPi && q_prev.y > 0 && q.y <= 0 && q.x > 0) {
          double lo = t_prev, hi = t;
          for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (lo + hi);
            (piece.flow(p, mid).y > 0 ? lo : hi) = mid;
          }
          section_t = 0.5 * (lo + hi);
          break;
        }
        t_prev = t;
        q_prev = q;
      }
    }
    if (section_t && (!crossing || *section_t < crossing->time)) {
      Vec2 q = piece.flow(p, *section_t);
      return q.x;
    }
    if (!crossing) throw NoCrossingFound();
    p = crossing->point;
    total_t += crossing->time;
    zone = -zone;
  }
  throw NoCrossingFound();
}

std::vector<double> melnikov_zeros(const PwlSystem& sys, int order,
                                   std::pair<double, double> window, int grid,
                                   double quad_tol) {
  std::vector<double> zeros;
  double a = window.first, b = window.second;
  double prev_r = a, prev = melnikov_numeric(sys, order, a, quad_tol);
  for (int i = 1; i <= grid; ++i) {
    double r = a + (b - a) * i / grid;
    double cur = melnikov_numeric(sys, order, r, quad_tol);
    if (prev != 0 && cur != 0 && (prev < 0) != (cur < 0)) {
      double lo = prev_r, hi = r;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        double v = melnikov_numeric(sys, order, mid, quad_tol);
        ((v < 0) == (prev < 0) ? lo : hi) = mid;
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    prev_r = r;
    prev = cur;
  }
  return zeros;
}

std::vector<LimitCycleReport> find_limit_cycles(const PwlSystem& sys,
                                                std::pair<double, double> window, double tol,
                                                int grid) {
  std::vector<LimitCycleReport> out;
  double a = window.first, b = window.second;

  // Active Melnikov order: the first with a non-identically-zero function.
  int order = 1;
  {
    double probe = 0;
    for (int ord = 1; ord <= 3; ++ord) {
      probe = 0;
      for (double r : {a + 0.3 * (b - a), a + 0.55 * (b - a), a + 0.8 * (b - a)})
        probe = std::max(probe, std::abs(melnikov_numeric(sys, ord, r)));
      if (probe > 1e-8) {
        order = ord;
        break;
      }
    }
  }
  std::vector<double> mzeros = melnikov_zeros(sys, order, window);

  double prev_r = a, prev = displacement(sys, a);
  for (int i = 1; i <= grid; ++i) {
    double r = a + (b - a) * i / grid;
    double cur = displacement(sys, r);
    if (prev != 0 && cur != 0 && (prev < 0) != (cur < 0)) {
      double lo = prev_r, hi = r;
      double dlo = prev;
      for (int it = 0; it < 80 && hi - lo > 1e-14 * (1 + hi); ++it) {
        double mid = 0.5 * (lo + hi);
        double v = displacement(sys, mid);
        if ((v < 0) == (dlo < 0)) {
          lo = mid;
          dlo = v;
        } else {
          hi = mid;
        }
      }
      LimitCycleReport rep;
      rep.radius = 0.5 * (lo + hi);
      rep.residual = std::abs(displacement(sys, rep.radius));
      (void)tol;
      double h = 1e-6 * (1 + rep.radius);
      double dP = (return_map(sys, rep.radius + h) - return_map(sys, rep.radius - h)) / (2 * h);
      rep.stability = dP - 1 > 0 ? 1 : -1;
      rep.melnikov_order = order;
      rep.melnikov_zero = std::numeric_limits<double>::quiet_NaN();
      rep.melnikov_distance = std::numeric_limits<double>::infinity();
      for (double z : mzeros) {
        double d = std::abs(z - rep.radius);
        if (d < rep.melnikov_distance) {
          rep.melnikov_distance = d;
          rep.melnikov_zero = z;
        }
      }
      out.push_back(rep);
    }
    prev_r = r;
    prev = cur;
  }
  return out;
}

PerturbationCoeffs coeffs_from_target_rho(const SwitchingCurve& curve,
                                          const std::vector<double>& target, int order,
                                          const PerturbationCoeffs& base, double tol) {
  // Coefficient map evaluated through the closed-form builder; linear in the
  // order-`order` block once the lower-order block is fixed.
  auto eval_vec = [&](const PerturbationCoeffs& c) {
    RhoClosedForm f = coeffs_to_rho(curve, c, order);
    std::vector<double> v;
    v.reserve(f.terms.size());
    for (auto& [idx, coef] : f.terms) v.push_back(coef);
    return v;
  };
  PerturbationCoeffs zero = base;
  zero.set_flat(order, {});
  std::vector<double> q = eval_vec(zero);
  const int rows = int(q.size());
  if (int(target.size()) != rows)
    throw std::invalid_argument("target dimension does not match the coefficient map");
  Eigen::MatrixXd L(rows, 12);
  for (int j = 0; j < 12; ++j) {
    PerturbationCoeffs probe = zero;
    std::array<double, 12> unit{};
    unit[std::size_t(j)] = 1.0;
    probe.set_flat(order, unit);
    auto col = eval_vec(probe);
    for (int i = 0; i < rows; ++i) L(i, j) = col[std::size_t(i)] - q[std::size_t(i)];
  }
  Eigen::VectorXd rhs(rows);
  for (int i = 0; i < rows; ++i) rhs(i) = target[std::size_t(i)] - q[std::size_t(i)];
  Eigen::VectorXd sol = L.completeOrthogonalDecomposition().solve(rhs);
  double resid = (L * sol - rhs).norm();
  if (resid > tol * std::max(1.0, rhs.norm()))
    throw NotInImage("target vector is outside the image of the coefficient map");
  PerturbationCoeffs out = zero;
  std::array<double, 12> v{};
  for (int i = 0; i < 12; ++i) v[std::size_t(i)] = sol(i);
  out.set_flat(order, v);
  return out;
}

}  // namespace pwl
