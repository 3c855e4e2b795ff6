#include <cmath>
#include <random>

#include "doctest.h"
#include "pwl/polar.hpp"
#include "pwl/system.hpp"

using namespace pwl;

namespace {
constexpr double kPi = 3.14159265358979323846;

PerturbationCoeffs single(int ord, int slot, double v) {
  PerturbationCoeffs c;
  std::array<double, 12> f{};
  f[std::size_t(slot)] = v;
  c.set_flat(ord, f);
  return c;
}
}  // namespace

TEST_CASE("unperturbed field is the linear center") {
  PwlSystem sys = PwlSystem::make(2, 1, {}, 0.0);
  Vec2 v = evaluate_field(sys, 1.0, 2.0);
  CHECK(v.x == doctest::Approx(2.0));
  CHECK(v.y == doctest::Approx(-1.0));
}

TEST_CASE("field selects the zone by the curve sign") {
  // m=2, n=1, a01 = 1, eps = 0.1, p = (0,1): upper zone since 1 - 0 > 0.
  PwlSystem sys = PwlSystem::make(2, 1, single(1, 0, 1.0), 0.1);
  Vec2 v = evaluate_field(sys, 0.0, 1.0);
  CHECK(v.x == doctest::Approx(1.0 + 0.1));
  CHECK(v.y == doctest::Approx(0.0));
  // m=3, n=1, p=(1, 0.5): lower zone since 0.5 - 1 < 0.
  PwlSystem sys2 = PwlSystem::make(3, 1, single(1, 6, 1.0), 0.1);  // alpha0 = 1
  Vec2 w = evaluate_field(sys2, 1.0, 0.5);
  CHECK(w.x == doctest::Approx(0.5 + 0.1));
  CHECK(w.y == doctest::Approx(-1.0));
  CHECK_THROWS_AS(evaluate_field(sys2, 1.0, 1.0, 1e-6), OnSwitchingManifold);
}

TEST_CASE("switching angle solves the crossing equation") {
  SUBCASE("m = n gives pi/4 at every radius") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {3, 3}}) {
      SwitchingCurve c = SwitchingCurve::make(m, n);
      CHECK(switching_angle(c, 1.0) == doctest::Approx(kPi / 4).epsilon(1e-13));
      CHECK(switching_angle(c, 10.0) == doctest::Approx(kPi / 4).epsilon(1e-13));
      CHECK(switching_angle(c, 1e-2) == doctest::Approx(kPi / 4).epsilon(1e-13));
    }
  }
  SUBCASE("m=2, n=1 at r=1: sin theta = cos^2 theta") {
    SwitchingCurve c = SwitchingCurve::make(2, 1);
    double th = switching_angle(c, 1.0);
    CHECK(std::sin(th) == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-13));
  }
  SUBCASE("rejects nonpositive radius") {
    SwitchingCurve c = SwitchingCurve::make(2, 1);
    CHECK_THROWS_AS(switching_angle(c, 0.0), NonPositiveRadius);
    CHECK_THROWS_AS(switching_angle(c, -1.0), NonPositiveRadius);
  }
  SUBCASE("bracketing: the crossing function changes sign exactly once") {
    for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {5, 4}, {1, 4}}) {
      SwitchingCurve c = SwitchingCurve::make(m, n);
      for (double r : {0.05, 0.8, 3.0, 40.0}) {
        double th = switching_angle(c, r);
        auto g = [&](double t) {
          return std::pow(r, c.n) * std::pow(std::sin(t), c.n) -
                 std::pow(r, c.m) * std::pow(std::cos(t), c.m);
        };
        int changes = 0;
        double prev = g(1e-4);
        for (int i = 1; i <= 300; ++i) {
          double cur = g(1e-4 + (kPi / 2 - 2e-4) * i / 300.0);
          if ((prev < 0) != (cur < 0)) ++changes;
          prev = cur;
        }
        CHECK(changes == 1);
        CHECK(g(th - 1e-6) < 0);
        CHECK(g(th + 1e-6) > 0);
      }
    }
  }
}

TEST_CASE("angle sets follow the parity patterns") {
  SUBCASE("odd/odd") {
    SwitchAngleSet s = build_angle_set(SwitchingCurve::make(1, 1), 1.0);
    REQUIRE(s.angles.size() == 2);
    CHECK(s.angles[0] == doctest::Approx(kPi / 4));
    CHECK(s.angles[1] == doctest::Approx(5 * kPi / 4));
    CHECK(s.zones == std::vector<int>{-1, 1, -1});
  }
  SUBCASE("even/even") {
    SwitchAngleSet s = build_angle_set(SwitchingCurve::make(2, 2), 1.0);
    REQUIRE(s.angles.size() == 4);
    CHECK(s.angles[0] == doctest::Approx(kPi / 4));
    CHECK(s.angles[1] == doctest::Approx(3 * kPi / 4));
    CHECK(s.angles[2] == doctest::Approx(5 * kPi / 4));
    CHECK(s.angles[3] == doctest::Approx(7 * kPi / 4));
    CHECK(s.zones == std::vector<int>{-1, 1, -1, 1, -1});
  }
  SUBCASE("even/odd") {
    SwitchingCurve c = SwitchingCurve::make(2, 1);
    SwitchAngleSet s = build_angle_set(c, 1.0);
    REQUIRE(s.angles.size() == 2);
    double th1 = switching_angle(c, 1.0);
    CHECK(s.angles[0] == doctest::Approx(th1));
    CHECK(s.angles[1] == doctest::Approx(2 * kPi - th1));
    CHECK(s.zones == std::vector<int>{-1, 1, -1});
  }
  SUBCASE("angles strictly increasing") {
    for (auto [m, n] : {std::pair{3, 1}, {2, 4}, {4, 1}, {1, 2}}) {
      for (double r : {0.3, 1.0, 2.7}) {
        SwitchAngleSet s = build_angle_set(SwitchingCurve::make(m, n), r);
        for (std::size_t i = 1; i < s.angles.size(); ++i) CHECK(s.angles[i] > s.angles[i - 1]);
      }
    }
  }
}

TEST_CASE("swap symmetry of the first-quadrant angle at r = 1") {
  // Raw exponent pairs on both sides: make() would normalize odd/even inputs.
  for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {5, 2}, {4, 3}}) {
    SwitchingCurve a_curve;
    a_curve.m = m;
    a_curve.n = n;
    SwitchingCurve b_curve;
    b_curve.m = n;
    b_curve.n = m;
    double a = switching_angle(a_curve, 1.0);
    double b = switching_angle(b_curve, 1.0);
    CHECK(a + b == doctest::Approx(kPi / 2).epsilon(1e-12));
  }
}

TEST_CASE("odd/even inputs normalize to even/odd with conjugated coefficients") {
  SwitchingCurve c = SwitchingCurve::make(1, 2);
  CHECK(c.parity == Parity::EvenOdd);
  CHECK(c.m == 2);
  CHECK(c.n == 1);
  CHECK(c.swapped);
  PwlSystem sys = PwlSystem::make(1, 2, single(1, 0, 1.0), 0.0);  // a01 = 1 before the swap
  // The swap sends the old upper block to the new lower one: beta0 = -a0.
  CHECK(sys.coeffs.at(1).lower.q[0] == doctest::Approx(-1.0));
  CHECK(sys.coeffs.at(1).upper.p[0] == doctest::Approx(0.0));
}

TEST_CASE("first-order polar component matches the displayed formula") {
  // zone +, only a01 = 1: F1+ = -cos(theta).
  PwlSystem sys = PwlSystem::make(2, 1, single(1, 0, 1.0), 0.0);
  for (double th : {0.3, 1.1, 2.9, 4.4}) {
    CHECK(polar_rhs(sys, +1, 1, 1.3, th) == doctest::Approx(-std::cos(th)).epsilon(1e-13));
    CHECK(polar_rhs(sys, -1, 1, 1.3, th) == doctest::Approx(0.0));
  }
}

TEST_CASE("polar rhs for random coefficients matches the explicit first-order form") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    PerturbationCoeffs c;
    std::array<double, 12> f{};
    for (auto& v : f) v = u(rng);
    c.set_flat(1, f);
    PwlSystem sys = PwlSystem::make(3, 1, c, 0.0);
    double r = 0.2 + 2.5 * (u(rng) + 1) / 2, th = kPi * (u(rng) + 1);
    for (int zone : {+1, -1}) {
      const ZoneAffine& z = zone > 0 ? sys.coeffs.at(1).upper : sys.coeffs.at(1).lower;
      double expect = -(std::cos(th) * (z.p[0] + r * (z.p[2] + z.q[1]) * std::sin(th)) +
                        z.p[1] * r * std::cos(th) * std::cos(th) +
                        std::sin(th) * (z.q[0] + z.q[2] * r * std::sin(th)));
      CHECK(polar_rhs(sys, zone, 1, r, th) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("higher-order polar coefficients agree with a finite-eps expansion") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  PerturbationCoeffs c;
  for (int ord = 1; ord <= 3; ++ord) {
    std::array<double, 12> f{};
    for (auto& v : f) v = u(rng);
    c.set_flat(ord, f);
  }
  double r = 1.3, th = 0.7;
  for (int zone : {+1, -1}) {
    double f1, f2, f3;
    {
      PwlSystem sys = PwlSystem::make(2, 1, c, 0.0);
      f1 = polar_rhs(sys, zone, 1, r, th);
      f2 = polar_rhs(sys, zone, 2, r, th);
      f3 = polar_rhs(sys, zone, 3, r, th);
    }
    // Richardson: fit rhs(eps) ~ eps f1 + eps^2 f2 + eps^3 f3 using three
    // small eps values and solve the Vandermonde system.
    double e1 = 1e-3, e2 = 2e-3, e3 = 3e-3;
    auto rhs = [&](double eps) {
      PwlSystem sys = PwlSystem::make(2, 1, c, eps);
      return polar_rhs_exact(sys, zone, r, th);
    };
    // Solve for the first three series coefficients.
    double y1 = rhs(e1), y2 = rhs(e2), y3 = rhs(e3);
    // 3x3 Vandermonde in powers of eps
    double M[3][4] = {{e1, e1 * e1, e1 * e1 * e1, y1},
                      {e2, e2 * e2, e2 * e2 * e2, y2},
                      {e3, e3 * e3, e3 * e3 * e3, y3}};
    for (int col = 0; col < 3; ++col) {
      int piv = col;
      for (int rr = col + 1; rr < 3; ++rr)
        if (std::abs(M[rr][col]) > std::abs(M[piv][col])) piv = rr;
      std::swap(M[piv], M[col]);
      for (int rr = 0; rr < 3; ++rr) {
        if (rr == col) continue;
        double fac = M[rr][col] / M[col][col];
        for (int cc = col; cc < 4; ++cc) M[rr][cc] -= fac * M[col][cc];
      }
    }
    double g1 = M[0][3] / M[0][0], g2 = M[1][3] / M[1][1], g3 = M[2][3] / M[2][2];
    CHECK(g1 == doctest::Approx(f1).epsilon(1e-6));
    CHECK(g2 == doctest::Approx(f2).epsilon(1e-4));
    CHECK(g3 == doctest::Approx(f3).epsilon(2e-2));
  }
}

TEST_CASE("system JSON round trip") {
  PerturbationCoeffs c = single(1, 0, 0.25);
  c.at(2).lower.q[2] = -0.75;
  PwlSystem sys = PwlSystem::make(4, 3, c, 1e-3);
  PwlSystem back = system_from_json(system_to_json(sys));
  CHECK(back.curve.m == sys.curve.m);
  CHECK(back.curve.n == sys.curve.n);
  CHECK(back.epsilon == sys.epsilon);
  CHECK(back.coeffs.flat(1) == sys.coeffs.flat(1));
  CHECK(back.coeffs.flat(2) == sys.coeffs.flat(2));
}
