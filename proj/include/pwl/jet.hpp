#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace pwl {

// Truncated Taylor series ("jet") arithmetic with runtime order. Coefficient
// i stores f^(i)(x0)/i!. The scalar type T may itself be a Jet, which is how
// mixed eps/r expansions are formed; zero_like/one_like keep nested shapes
// consistent.

template <class T>
class Jet;

inline double zero_like(const double&) { return 0.0; }
inline double one_like(const double&) { return 1.0; }
template <class T>
Jet<T> zero_like(const Jet<T>& j);
template <class T>
Jet<T> one_like(const Jet<T>& j);

// Fallback for multiprecision scalars (boost cpp_bin_float etc.).
template <class T>
T zero_like(const T&) {
  return T(0);
}
template <class T>
T one_like(const T&) {
  return T(1);
}

template <class T>
class Jet {
 public:
  Jet() = default;
  Jet(std::size_t order, const T& proto) : c_(order + 1, zero_like(proto)) {}

  static Jet constant(const T& v, std::size_t order) {
    Jet j(order, v);
    j.c_[0] = v;
    return j;
  }
  static Jet variable(const T& v, std::size_t order) {
    Jet j(order, v);
    j.c_[0] = v;
    if (order > 0) j.c_[1] = one_like(v);
    return j;
  }

  std::size_t order() const { return c_.size() - 1; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }
  const T& value() const { return c_[0]; }

  // p-th derivative (not scaled by 1/p!).
  T derivative(std::size_t p) const {
    T f = one_like(c_[0]);
    for (std::size_t i = 2; i <= p; ++i) f = f * T(double(i));
    return c_[p] * f;
  }

  Jet operator-() const {
    Jet r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    assert(a.order() == b.order());
    Jet r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    assert(a.order() == b.order());
    Jet r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    assert(a.order() == b.order());
    Jet r(a.order(), a.c_[0]);
    for (std::size_t i = 0; i <= a.order(); ++i)
      for (std::size_t j = 0; i + j <= a.order(); ++j)
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    assert(a.order() == b.order());
    Jet r(a.order(), a.c_[0]);
    for (std::size_t n = 0; n <= a.order(); ++n) {
      T acc = a.c_[n];
      for (std::size_t i = 0; i < n; ++i) acc = acc - r.c_[i] * b.c_[n - i];
      r.c_[n] = acc / b.c_[0];
    }
    return r;
  }

  friend Jet operator+(const Jet& a, const T& s) { return a + constant(s, a.order()); }
  friend Jet operator+(const T& s, const Jet& a) { return a + constant(s, a.order()); }
  friend Jet operator-(const Jet& a, const T& s) { return a - constant(s, a.order()); }
  friend Jet operator-(const T& s, const Jet& a) { return constant(s, a.order()) - a; }
  friend Jet operator*(const Jet& a, const T& s) {
    Jet r = a;
    for (auto& v : r.c_) v = v * s;
    return r;
  }
  friend Jet operator*(const T& s, const Jet& a) { return a * s; }
  friend Jet operator/(const Jet& a, const T& s) {
    Jet r = a;
    for (auto& v : r.c_) v = v / s;
    return r;
  }

 private:
  std::vector<T> c_;
};

template <class T>
Jet<T> zero_like(const Jet<T>& j) {
  return Jet<T>(j.order(), j.value());
}
template <class T>
Jet<T> one_like(const Jet<T>& j) {
  return Jet<T>::constant(one_like(j.value()), j.order());
}

// sin/cos computed together from s' = u' cos, c' = -u' sin.
template <class T>
void sin_cos(const Jet<T>& u, Jet<T>& s, Jet<T>& c) {
  using std::cos;
  using std::sin;
  s = zero_like(u);
  c = zero_like(u);
  s[0] = sin(u[0]);
  c[0] = cos(u[0]);
  for (std::size_t n = 1; n <= u.order(); ++n) {
    T sa = zero_like(u[0]);
    T ca = zero_like(u[0]);
    for (std::size_t i = 1; i <= n; ++i) {
      sa = sa + T(double(i)) * u[i] * c[n - i];
      ca = ca + T(double(i)) * u[i] * s[n - i];
    }
    s[n] = sa / T(double(n));
    c[n] = -ca / T(double(n));
  }
}

template <class T>
Jet<T> sin(const Jet<T>& u) {
  Jet<T> s, c;
  sin_cos(u, s, c);
  return s;
}
template <class T>
Jet<T> cos(const Jet<T>& u) {
  Jet<T> s, c;
  sin_cos(u, s, c);
  return c;
}

// u^alpha for u(0) > 0, from the recurrence n f_n u_0 = sum (alpha i - (n-i)) u_i f_{n-i}.
template <class T, class A>
Jet<T> pow(const Jet<T>& u, const A& alpha) {
  using std::pow;
  Jet<T> f = zero_like(u);
  f[0] = pow(u[0], alpha);
  for (std::size_t n = 1; n <= u.order(); ++n) {
    T acc = zero_like(u[0]);
    for (std::size_t i = 1; i <= n; ++i)
      acc = acc + (T(alpha) * T(double(i)) - T(double(n - i))) * u[i] * f[n - i];
    f[n] = acc / (T(double(n)) * u[0]);
  }
  return f;
}

template <class T>
Jet<T> sqrt(const Jet<T>& u) {
  return pow(u, 0.5);
}

// atan via f' (1 + u^2) = u'.
template <class T>
Jet<T> atan(const Jet<T>& u) {
  using std::atan;
  Jet<T> g = u * u;
  g[0] = g[0] + one_like(u[0]);
  Jet<T> f = zero_like(u);
  f[0] = atan(u[0]);
  for (std::size_t n = 1; n <= u.order(); ++n) {
    T acc = T(double(n)) * u[n];
    for (std::size_t i = 1; i < n; ++i) acc = acc - T(double(i)) * f[i] * g[n - i];
    f[n] = acc / (T(double(n)) * g[0]);
  }
  return f;
}

template <class T>
Jet<T> exp(const Jet<T>& u) {
  using std::exp;
  Jet<T> f = zero_like(u);
  f[0] = exp(u[0]);
  for (std::size_t n = 1; n <= u.order(); ++n) {
    T acc = zero_like(u[0]);
    for (std::size_t i = 1; i <= n; ++i) acc = acc + T(double(i)) * u[i] * f[n - i];
    f[n] = acc / T(double(n));
  }
  return f;
}

}  // namespace pwl
