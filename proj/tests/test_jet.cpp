#include <cmath>

#include "doctest.h"
#include "pwl/jet.hpp"
#include "pwl/quadrature.hpp"

using namespace pwl;

TEST_CASE("jet arithmetic reproduces derivatives of elementary compositions") {
  double x0 = 0.7;
  auto x = Jet<double>::variable(x0, 4);
  // f = sin(x^2) / (1 + x)
  auto f = sin(x * x) / (x + 1.0);
  double v = std::sin(x0 * x0) / (1 + x0);
  CHECK(f.value() == doctest::Approx(v).epsilon(1e-14));
  // first derivative by hand
  double d1 = (2 * x0 * std::cos(x0 * x0) * (1 + x0) - std::sin(x0 * x0)) / ((1 + x0) * (1 + x0));
  CHECK(f.derivative(1) == doctest::Approx(d1).epsilon(1e-12));
}

TEST_CASE("jet pow matches finite differences to high order") {
  double x0 = 1.3, alpha = 2.7;
  auto x = Jet<double>::variable(x0, 5);
  auto f = pow(x, alpha);
  // p-th derivative of x^alpha = alpha (alpha-1) ... (alpha-p+1) x^(alpha-p)
  double fall = 1.0;
  for (int p = 0; p <= 5; ++p) {
    double expect = fall * std::pow(x0, alpha - p);
    CHECK(f.derivative(std::size_t(p)) == doctest::Approx(expect).epsilon(1e-11));
    fall *= alpha - p;
  }
}

TEST_CASE("jet atan derivative chain") {
  double x0 = 0.9;
  auto x = Jet<double>::variable(x0, 3);
  auto f = atan(pow(x, 1.5));
  double u = std::pow(x0, 1.5);
  double du = 1.5 * std::pow(x0, 0.5);
  CHECK(f.value() == doctest::Approx(std::atan(u)).epsilon(1e-14));
  CHECK(f.derivative(1) == doctest::Approx(du / (1 + u * u)).epsilon(1e-12));
}

TEST_CASE("nested jets expand rational functions of two variables") {
  // g(eps, r) = (eps r + eps^2) / (-1 + eps r^2): coefficient of eps^2 is
  // -(1 + r^3) by the geometric expansion.
  double r0 = 1.7;
  auto r = Jet<double>::variable(r0, 1);
  Jet<Jet<double>> num(2, r), den(2, r);
  num[1] = r;
  num[2] = one_like(r);
  den[0] = zero_like(r) - one_like(r);
  den[1] = r * r;
  auto q = num / den;
  CHECK(q[2].value() == doctest::Approx(-(1 + r0 * r0 * r0)).epsilon(1e-13));
  // and d/dr of that coefficient is -3 r^2
  CHECK(q[2].derivative(1) == doctest::Approx(-3 * r0 * r0).epsilon(1e-13));
}

TEST_CASE("adaptive quadrature hits tight tolerances") {
  double v = integrate([](double t) { return std::exp(-t) * std::sin(3 * t); }, 0.0, 2.0, 1e-12);
  // antiderivative of e^{-t} sin 3t = -e^{-t}(sin 3t + 3 cos 3t)/10
  auto F = [](double t) { return -std::exp(-t) * (std::sin(3 * t) + 3 * std::cos(3 * t)) / 10; };
  CHECK(v == doctest::Approx(F(2.0) - F(0.0)).epsilon(1e-12));
}
