#pragma once

#include "pwl/polynomial.hpp"

namespace pwl {

// The reduced factor polynomials appearing in the closed-form Wronskians,
// written in the composition variable y (usually y = x^(2k-2)). Indices 0..21
// match the displayed P_{j,k}; 30..34 are the fixed-k factors of the two
// special families plus the (1+y) factor of u8.
template <class T>
Poly<T> factor_poly(int which, const T& k) {
  const T one(1);
  auto P = [](std::initializer_list<T> asc) { return Poly<T>(std::vector<T>(asc)); };
  switch (which) {
    case 0:
      return P({-(k - 2), k * (2 * k - 1)});
    case 1:
      return P({(k - 2) * (2 * k - 1), k * (2 * k - 3)});
    case 2:
      return P({(k - 2) * (2 * k - 3) * (3 * k - 4),
                k * k * (2 * k - 1) * (3 * k - 2) * (4 * k - 3)});
    case 3:
      return P({T(3), -(k + 1), 3 * k});
    case 4:
    case 17:
      return P({one - 5 * k, (k - 5) * k});
    case 5:
    case 14:
      return P({-(k - 3) * (2 * k - 1) * (5 * k - 1),
                T(-2) * (k * (k * (k * (k + 10) - 30) + 10) + 1),
                (k - 5) * (k - 2) * k * (3 * k - 1)});
    case 6:
      return P({k - 3, (k + 1) * (k + 1), 3 * k * (3 * k - 1)});
    case 7:
      return P({k * (k * (7 - 3 * k) + 6), T(4) - k * (k * (k * (k + 22) - 61) + 18),
                -k * (k * (k * (k + 34) - 67) + 20), -17 * k * k * k * k + 8 * k * k * k + k * k,
                T(-3) * k * k * k * (3 * k - 1)});
    case 8:
      return P({(k - 3) * (2 * k - 1) * (5 * k - 1),
                T(2) * (k * (k * (k * (k + 10) - 30) + 10) + 1),
                -(k - 5) * (k - 2) * k * (3 * k - 1)});
    case 9:
    case 10:
      return P({3 * (k - 3) * (2 * k - 3), -(k + 1) * (k + 1) * (2 * k - 1),
                3 * k * (2 * k - 1) * (3 * k - 1) * (4 * k - 3)});
    case 11:
      return P({3 * (k - 3) * (2 * k - 3), -(k + 1) * (k + 1), 3 * k * (k * (6 * k - 5) + 1)});
    case 12:
      return P({(k - 3) * (2 * k - 3) * (2 * k - 1) * (3 * k - 2) * (5 * k - 1),
                (3 * k - 2) * (k * (k * (2 * k * (18 * k - 89) + 185) + 10) - 29),
                k * (k * (k * (k * (9 * k * (4 * k + 3) - 562) + 949) - 498) + 80) - 8,
                -(k - 5) * (k - 2) * k * (2 * k - 1) * (3 * k - 4) * (3 * k - 1)});
    case 13:
      return P({T(-3) * (k - 3), -(k + 1) * (k + 1), 3 * k * (3 * k - 1)});
    case 15:
      return P({(k - 3) * (2 * k - 1) * (5 * k - 4) * (5 * k - 1),
                k * (5 * k * (k * (4 * k * (k * k + 4) - 91) + 84) - 73) - 16,
                -(k * (k * (k * (k * (k * (82 * k - 329) + 246) + 341) - 404) + 84) + 4),
                (k - 5) * (k - 2) * (k - 2) * k * (3 * k - 1) * (4 * k - 3)});
    case 16:
      return P({T(3), -(k + 1), 3 * k});
    case 18:
      return P({k * ((71 - 30 * k) * k - 43) + 6, -(k * (k * (51 * k - 98) + 35) + 4),
                (k - 5) * k * (2 * k - 1) * (3 * k - 4)});
    case 19:
      return P({(2 * k - 3) * (3 * k - 2) * (5 * k - 4) * (5 * k - 1),
                (5 * k - 4) * (k * (k * (k * (6 * k + 59) - 125) + 40) + 8),
                -(2 * k - 1) * (3 * k - 4) * (k * (k * (10 * k * (2 * k - 3) - 49) + 45) + 2),
                (k - 5) * (k - 2) * k * (2 * k - 1) * (3 * k - 4) * (4 * k - 3)});
    case 20:
      return P({(9 - 2 * k) * k - 9, (k + 1) * (k + 1) * (2 * k - 1),
                3 * k * (2 * k - 1) * (3 * k - 1) * (4 * k - 3)});
    case 21:
      return P({-(k - 3) * k * k * (2 * k - 3) * (3 * k - 2) * (3 * k + 2),
                (3 * k - 2) *
                    (k * (k * (k * (k * (k * (2 * k - 153) + 894) - 1625) + 1234) - 444) + 48),
                -(3 * k - 2) *
                    (k * (k * (k * (k * (k * (2 * k * (36 * k - 77) + 337) - 1899) + 3376) -
                               2038) +
                          312) +
                     64),
                T(2) * (k * (k * (k * (k * (k * (4 * k * (9 * k * (28 * k - 123) + 1928) -
                                              4375) -
                                         3482) +
                                    5733) -
                               2528) +
                          324) +
                        16),
                k * (k * (k * (k * (k * (6 * k * (12 * k * (16 * k - 17) - 877) + 15977) -
                               19731) +
                          12594) -
                     3976) +
                    480),
                k * k * k * (2 * k - 1) * (3 * k - 2) * (k * (k * (144 * k - 157) + 34) - 1),
                3 * k * k * k * k * (2 * k - 1) * (3 * k - 2) * (3 * k - 1) * (4 * k - 3)});
    // fixed-k helper factors
    case 30:
      return P({one, T(-3), T(10)});  // 10y^2 - 3y + 1
    case 31:
      return P({T(9), T(2)});  // 2y + 9
    case 32:
      return P({T(6), T(-25), T(105)});  // 105y^2 - 25y + 6
    case 33:
      return P({T(26), T(9)});  // 9y + 26
    case 34:
      return P({one, one});  // 1 + y
    default:
      throw std::out_of_range("unknown factor polynomial");
  }
}

// The quartic controlling the last Wronskian of the seven-function family.
template <class T>
Poly<T> quartic_poly(const T& k) {
  T A = (k - 5) * (k - 2) * (k - 2) * k * (2 * k - 1) * (3 * k - 4) * (3 * k - 1) * (4 * k - 3);
  T B = T(-2) * (2 * k - 1) * (3 * k - 4) *
        (k * (k * (k * (2 * k * (k * (39 * k - 179) + 235) - 89) - 118) + 35) - 2);
  T C = (3 * k - 4) *
        (k * (k * (k * (5 * k * (k * (2 * k * (24 * k - 61) + 177) - 366) + 2034) - 930) + 201) -
         38);
  T D = T(-2) * (3 * k - 2) * (5 * k - 4) *
        (k * (k * (k * (k * (2 * k - 19) + 88) - 75) - 38) + 26);
  T E = (k - 3) * (2 * k - 3) * (2 * k - 1) * (3 * k - 2) * (5 * k - 4) * (5 * k - 1);
  return Poly<T>(std::vector<T>{E, D, C, B, A});
}

constexpr int kQuarticFactor = 100;

}  // namespace pwl
