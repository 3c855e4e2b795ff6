#pragma once

#include <stdexcept>

#include "pwl/jet.hpp"

namespace pwl {

// The fourteen basis functions on x > 0, indexed as used throughout:
//   u0 = 1                 u1 = x^k                u2 = x^(k-1)
//   u3 = x^(k-2)           u4 = x^(2k-1)           u5 = x^(2k-2)
//   u6 = x^(3k-2)          u7 = x^(3k-3)           u8 = x + x^(2k-1)
//   u9 = x + k x^(4k-3)    u10 = (1+x^(2k-2))(x + k x^(2k-1))
//   u11 = (x + x^(2k-1)) atan(x^(k-1))
//   u12 = (1+x^(2k-2))(x + k x^(2k-1)) atan(x^(k-1))
//   u13 = x^(2k)
// X may be a plain scalar or a Jet; K is the scalar type of k.
template <class X, class K>
X basis_u(int idx, const K& k, const X& x) {
  using std::atan;
  using std::pow;
  const X one = one_like(x);
  switch (idx) {
    case 0:
      return one;
    case 1:
      return pow(x, k);
    case 2:
      return pow(x, k - 1);
    case 3:
      return pow(x, k - 2);
    case 4:
      return pow(x, 2 * k - 1);
    case 5:
      return pow(x, 2 * k - 2);
    case 6:
      return pow(x, 3 * k - 2);
    case 7:
      return pow(x, 3 * k - 3);
    case 8:
      return x + pow(x, 2 * k - 1);
    case 9:
      return x + pow(x, 4 * k - 3) * k;
    case 10:
      return (one + pow(x, 2 * k - 2)) * (x + pow(x, 2 * k - 1) * k);
    case 11:
      return (x + pow(x, 2 * k - 1)) * atan(pow(x, k - 1));
    case 12:
      return (one + pow(x, 2 * k - 2)) * (x + pow(x, 2 * k - 1) * k) * atan(pow(x, k - 1));
    case 13:
      return pow(x, 2 * k);
    default:
      throw std::out_of_range("basis index must be 0..13");
  }
}

}  // namespace pwl
