#include "pwl/wronskian.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace pwl {

FamilyId family_from_name(const std::string& name) {
  static const std::map<std::string, FamilyId> names = {
      {"G0", FamilyId::G0},   {"G1", FamilyId::G1},   {"G2", FamilyId::G2},
      {"G3", FamilyId::G3},   {"G4", FamilyId::G4},   {"G5", FamilyId::G5},
      {"G6", FamilyId::G6},   {"G7", FamilyId::G7},   {"G8", FamilyId::G8},
      {"G9", FamilyId::G9},   {"G10", FamilyId::G10}, {"G11", FamilyId::G11},
      {"F1", FamilyId::F1},   {"F2", FamilyId::F2}};
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown family: " + name);
  return it->second;
}

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::G0: return "G0";
    case FamilyId::G1: return "G1";
    case FamilyId::G2: return "G2";
    case FamilyId::G3: return "G3";
    case FamilyId::G4: return "G4";
    case FamilyId::G5: return "G5";
    case FamilyId::G6: return "G6";
    case FamilyId::G7: return "G7";
    case FamilyId::G8: return "G8";
    case FamilyId::G9: return "G9";
    case FamilyId::G10: return "G10";
    case FamilyId::G11: return "G11";
    case FamilyId::F1: return "F1";
    case FamilyId::F2: return "F2";
  }
  return "?";
}

namespace {

bool in_open(const Rational& k, const Rational& a, const Rational& b) { return a < k && k < b; }

// Which reordering case covers this k, or nullopt outside all six ranges.
// Cases 1..6 in the order their Wronskian displays appear.
std::optional<int> f2_case(const Rational& k) {
  const RegionConstants& rc = region_constants();
  if (compare_to_root(k, rc.k4) > 0 && k <= 4) return 1;  // (k4,k5) u (k5,4]
  if (k > make_rational(3, 4) && k <= make_rational(4, 5)) return 2;
  if ((in_open(k, make_rational(1, 2), make_rational(3, 4)) && k != make_rational(2, 3)) ||
      in_open(k, make_rational(4, 3), make_rational(3, 2)))
    return 3;
  if (in_open(k, make_rational(1, 5), make_rational(1, 3)) ||
      (k > make_rational(4, 5) && k <= make_rational(4, 3) && k != 1) ||
      in_open(k, make_rational(3, 2), Rational(2)))
    return 4;
  if ((compare_to_root(k, rc.k1) > 0 && k < make_rational(1, 5)) || in_open(k, Rational(2), Rational(3)))
    return 5;
  if (in_open(k, make_rational(1, 3), make_rational(1, 2)) || (k > 4 && k <= 5)) return 6;
  return std::nullopt;
}

}  // namespace

std::vector<int> family_indices(FamilyId id, const Rational& k) {
  switch (id) {
    case FamilyId::G0: return {1};
    case FamilyId::G1: return {0, 1};
    case FamilyId::G2: return {8, 11, 1};
    case FamilyId::G3: return {0, 2, 8};
    case FamilyId::G4: return {11, 8, 1, 2};
    case FamilyId::G5: return {2, 5, 4, 0, 1, 6, 7, 9};
    case FamilyId::G6: return {6, 0, 1, 10, 12};
    case FamilyId::G7: return {5, 6, 3, 1, 10, 12};
    case FamilyId::G8: return {1, 6, 10, 12, 3};
    case FamilyId::G9: return {0, 1, 6, 5, 3, 10, 12};
    case FamilyId::G10: return {0, 1, 13};
    case FamilyId::G11: return {1, 3};
    case FamilyId::F1:
      return k < 5 ? std::vector<int>{1, 6, 10, 12, 3} : std::vector<int>{1, 3, 10, 12, 6};
    case FamilyId::F2: {
      auto c = f2_case(k);
      if (!c) throw NotTabulated("no reordering case covers this k");
      switch (*c) {
        case 1: return {5, 6, 3, 0, 1, 10, 12};
        case 2: return {5, 6, 3, 1, 10, 12, 0};
        case 3: return {6, 3, 1, 10, 12, 0, 5};
        case 4: return {6, 1, 10, 12, 5, 0, 3};
        case 5: return {5, 3, 0, 1, 10, 12, 6};
        default: return {0, 1, 6, 5, 3, 10, 12};
      }
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// Small DSL for the coefficient polynomials in k.
RatPoly K() { return RatPoly::x(); }
RatPoly C(long long v) { return RatPoly::constant(Rational(v)); }
RatPoly Cq(long long num, long long den) { return RatPoly::constant(make_rational(num, den)); }
RatPoly pw(const RatPoly& p, int e) { return poly_pow(p, e); }
Rational R(long long num, long long den = 1) { return make_rational(num, den); }

struct WF {
  // Convenience builder.
  static WronskianFormula make(RatPoly coef, Rational xk, Rational xc, int denom = 0,
                               int factor = -1, Rational argk = Rational(0),
                               Rational argc = Rational(0), bool has_atan = false) {
    WronskianFormula f;
    f.coef = std::move(coef);
    f.xk = std::move(xk);
    f.xc = std::move(xc);
    f.denom_pow = denom;
    f.factor = factor;
    f.argk = std::move(argk);
    f.argc = std::move(argc);
    f.has_atan = has_atan;
    return f;
  }
};

using Table = std::vector<WronskianFormula>;

const Table& table_G2() {
  static const Table t = {
      WF::make(C(1), R(0), R(1), 0, 34, R(2), R(-2)),
      WF::make(K() - C(1), R(1), R(-2), -1),
      WF::make(C(-4) * pw(K() - C(1), 3), R(4), R(-2), 1),
  };
  return t;
}

const Table& table_G3() {
  static const Table t = {
      WF::make(C(1), R(0), R(0)),
      WF::make(K() - C(1), R(1), R(-2)),
      WF::make(K() - C(1), R(1), R(-3), 0, 0, R(2), R(-2)),
  };
  return t;
}

const Table& table_G4() {
  static const Table t = {
      WF::make(C(1), R(0), R(1), 0, 34, R(2), R(-2), true),
      WF::make(C(-1) * (K() - C(1)), R(1), R(-2), -1),
      WF::make(C(4) * pw(K() - C(1), 3), R(4), R(-2), 1),
      WF::make(C(4) * pw(K() - C(1), 3), R(5), R(-4), 2, 1, R(2), R(-2)),
  };
  return t;
}

const Table& table_G5() {
  static const Table t = {
      WF::make(C(1), R(1), R(-1)),
      WF::make(K() - C(1), R(3), R(-4)),
      WF::make((K() - C(1)) * K(), R(5), R(-7)),
      WF::make(C(-2) * pw(K() - C(1), 3) * K() * (C(2) * K() - C(1)), R(5), R(-10)),
      WF::make(C(-2) * (K() - C(2)) * pw(K() - C(1), 4) * pw(K(), 2) * (C(2) * K() - C(1)),
               R(6), R(-14)),
      WF::make(C(-4) * pw(C(2) * K() - C(1), 2) * (K() - C(2)) * pw(K() - C(1), 6) *
                   pw(K(), 3) * (C(3) * K() - C(2)),
               R(9), R(-21)),
      WF::make(C(24) * pw(C(2) * K() - C(1), 2) * pw(K() - C(2), 2) * pw(K() - C(1), 9) *
                   pw(K(), 3) * (C(2) * K() - C(3)) * (C(3) * K() - C(2)),
               R(12), R(-30)),
      WF::make(C(144) * pw(C(2) * K() - C(1), 2) * pw(K() - C(2), 2) * pw(K() - C(1), 12) *
                   pw(K(), 3) * (C(2) * K() - C(3)) * (C(3) * K() - C(2)),
               R(12), R(-36), 0, 2, R(4), R(-4)),
  };
  return t;
}

const Table& table_G6() {
  static const Table t = {
      WF::make(C(1), R(0), R(4)),
      WF::make(C(-4), R(0), R(3)),
      WF::make(C(16), R(0), R(3)),
      WF::make(C(48), R(0), R(1), 0, 30, R(0), R(2)),
      WF::make(C(1536), R(0), R(9), 3, 31, R(0), R(2)),
  };
  return t;
}

const Table& table_G7() {
  static const Table t = {
      WF::make(C(1), R(0), R(-2, 3)),
      WF::make(Cq(2, 3), R(0), R(-5, 3)),
      WF::make(Cq(16, 27), R(0), R(-5)),
      WF::make(Cq(256, 243), R(0), R(-22, 3)),
      WF::make(Cq(256, 19683), R(0), R(-35, 3), 0, 32, R(0), R(2, 3)),
      WF::make(Cq(-65536, 4782969), R(0), R(-10), 4, 33, R(0), R(2, 3)),
  };
  return t;
}

const Table& table_F1a() {
  static const Table t = {
      WF::make(C(1), R(1), R(0)),
      WF::make(C(2) * (K() - C(1)), R(4), R(-3)),
      WF::make(C(2) * pw(K() - C(1), 3), R(4), R(-4), 0, 3, R(2), R(-2)),
      WF::make(C(-32) * pw(K() - C(1), 6), R(9), R(-7), 2, 4, R(2), R(-2)),
      WF::make(C(256) * pw(K() - C(1), 6) * K(), R(10), R(-11), 3, 5, R(2), R(-2)),
  };
  return t;
}

const Table& table_F1b() {
  static const Table t = {
      WF::make(C(1), R(1), R(0)),
      WF::make(C(-2), R(2), R(-3)),
      WF::make(C(-2) * (K() - C(1)), R(2), R(-4), 0, 6, R(2), R(-2)),
      WF::make(C(8) * pw(K() - C(1), 3), R(5), R(-5), 2, 7, R(2), R(-2)),
      WF::make(C(256) * pw(K() - C(1), 6) * K(), R(10), R(-11), 3, 8, R(2), R(-2)),
  };
  return t;
}

const Table& table_G9() {
  static const Table t = {
      WF::make(C(1), R(0), R(0)),
      WF::make(K(), R(1), R(-1)),
      WF::make(C(2) * (K() - C(1)) * K() * (C(3) * K() - C(2)), R(4), R(-5)),
      WF::make(C(-4) * (K() - C(2)) * pw(K() - C(1), 2) * pw(K(), 2) * (C(3) * K() - C(2)),
               R(6), R(-10)),
      WF::make(C(16) * pw(K(), 4) * (C(3) * K() - C(2)) *
                   pw(pw(K(), 2) - C(3) * K() + C(2), 2),
               R(7), R(-16)),
      WF::make(C(16) * pw(K() - C(2), 2) * pw(K() - C(1), 4) * pw(K(), 4) *
                   (C(3) * K() - C(2)),
               R(7), R(-20), 0, 9, R(2), R(-2)),
      WF::make(C(512) * pw(K() - C(2), 2) * pw(K() - C(1), 7) * pw(K(), 4) *
                   (C(3) * K() - C(2)),
               R(12), R(-20), 5, kQuarticFactor, R(2), R(-2)),
  };
  return t;
}

const Table& table_F2c1() {
  static const Table t = {
      WF::make(C(1), R(2), R(-2)),
      WF::make(K(), R(5), R(-5)),
      WF::make(C(2) * pw(K(), 3), R(6), R(-9)),
      WF::make(C(-4) * (K() - C(2)) * (K() - C(1)) * pw(K(), 3) * (C(3) * K() - C(2)), R(6),
               R(-12)),
      WF::make(C(-16) * pw(K(), 4) * (C(3) * K() - C(2)) *
                   pw(pw(K(), 2) - C(3) * K() + C(2), 2),
               R(7), R(-16)),
      WF::make(C(-16) * pw(K() - C(2), 2) * pw(K() - C(1), 4) * pw(K(), 4) *
                   (C(3) * K() - C(2)),
               R(7), R(-20), 0, 10, R(2), R(-2)),
      WF::make(C(-512) * pw(K() - C(2), 2) * pw(K() - C(1), 7) * pw(K(), 4) *
                   (C(3) * K() - C(2)),
               R(12), R(-20), 5, kQuarticFactor, R(2), R(-2)),
  };
  return t;
}

const Table& table_F2c2() {
  static const Table t = {
      WF::make(C(1), R(2), R(-2)),
      WF::make(K(), R(5), R(-5)),
      WF::make(C(2) * pw(K(), 3), R(6), R(-9)),
      WF::make(C(8) * (K() - C(2)) * (K() - C(1)) * pw(K(), 3), R(7), R(-12)),
      WF::make(C(8) * (K() - C(2)) * pw(K() - C(1), 3) * pw(K(), 3), R(7), R(-15), 0, 11,
               R(2), R(-2)),
      WF::make(C(256) * (K() - C(2)) * pw(K() - C(1), 6) * pw(K(), 3), R(12), R(-16), 4, 12,
               R(2), R(-2)),
      WF::make(C(512) * pw(K() - C(2), 2) * pw(K() - C(1), 7) * pw(K(), 4) *
                   (C(3) * K() - C(2)),
               R(12), R(-20), 5, kQuarticFactor, R(2), R(-2)),
  };
  return t;
}

const Table& table_F2c3() {
  static const Table t = {
      WF::make(C(1), R(3), R(-2)),
      WF::make(C(-2) * K(), R(4), R(-5)),
      WF::make(C(8) * (K() - C(1)) * K(), R(5), R(-7)),
      WF::make(C(8) * pw(K() - C(1), 3) * K(), R(5), R(-9), 0, 13, R(2), R(-2)),
      WF::make(C(256) * pw(K() - C(1), 6) * K(), R(10), R(-11), 3, 14, R(2), R(-2)),
      WF::make(C(256) * (K() - C(2)) * pw(K() - C(1), 6) * pw(K(), 2) * (C(3) * K() - C(2)),
               R(10), R(-14), 4, 15, R(2), R(-2)),
      WF::make(C(512) * pw(K() - C(2), 2) * pw(K() - C(1), 7) * pw(K(), 4) *
                   (C(3) * K() - C(2)),
               R(12), R(-20), 5, kQuarticFactor, R(2), R(-2)),
  };
  return t;
}

const Table& table_F2c4() {
  static const Table t = {
      WF::make(C(1), R(3), R(-2)),
      WF::make(C(-2) * (K() - C(1)), R(4), R(-3)),
      WF::make(C(-2) * pw(K() - C(1), 3), R(4), R(-4), 0, 16, R(2), R(-2)),
      WF::make(C(32) * pw(K() - C(1), 6), R(9), R(-7), 2, 17, R(2), R(-2)),
      WF::make(C(32) * (K() - C(2)) * pw(K() - C(1), 6) * K(), R(11), R(-11), 3, 18, R(2),
               R(-2)),
      WF::make(C(64) * (K() - C(2)) * pw(K() - C(1), 7) * pw(K(), 2) * (C(3) * K() - C(2)),
               R(11), R(-14), 4, 19, R(2), R(-2)),
      WF::make(C(512) * pw(K() - C(2), 2) * pw(K() - C(1), 7) * pw(K(), 4) *
                   (C(3) * K() - C(2)),
               R(12), R(-20), 5, kQuarticFactor, R(2), R(-2)),
  };
  return t;
}

const Table& table_F2c5() {
  static const Table t = {
      WF::make(C(1), R(2), R(-2)),
      WF::make(C(-1) * K(), R(3), R(-5)),
      WF::make(C(-2) * (K() - C(2)) * (K() - C(1)) * K(), R(3), R(-7)),
      WF::make(C(4) * pw(K() - C(2), 2) * (K() - C(1)) * pw(K(), 2), R(4), R(-10)),
      WF::make(C(4) * pw(K() - C(2), 2) * pw(K() - C(1), 2) * pw(K(), 2), R(4), R(-13), 0, 20,
               R(2), R(-2)),
      WF::make(C(16) * pw(K() - C(2), 2) * pw(K() - C(1), 4) * pw(K(), 2), R(7), R(-12), 4, 21,
               R(2), R(-2)),
      WF::make(C(512) * pw(K() - C(2), 2) * pw(K() - C(1), 7) * pw(K(), 4) *
                   (C(3) * K() - C(2)),
               R(12), R(-20), 5, kQuarticFactor, R(2), R(-2)),
  };
  return t;
}

}  // namespace

const std::vector<WronskianFormula>& wronskian_table(FamilyId id, const Rational& k) {
  switch (id) {
    case FamilyId::G2:
      if (k == 1) throw NotTabulated("G2 degenerates at k = 1");
      return table_G2();
    case FamilyId::G3:
      return table_G3();
    case FamilyId::G4:
      if (k == 1) throw NotTabulated("G4 degenerates at k = 1");
      return table_G4();
    case FamilyId::G5:
      return table_G5();
    case FamilyId::G6:
      if (k != 2) throw NotTabulated("G6 is tabulated at k = 2 only");
      return table_G6();
    case FamilyId::G7:
      if (k != make_rational(2, 3)) throw NotTabulated("G7 is tabulated at k = 2/3 only");
      return table_G7();
    case FamilyId::G8:
      if (k > 1 && k < 5) return table_F1a();
      throw NotTabulated("this ordering is tabulated for k in (1,5) only");
    case FamilyId::F1:
      if (k > 1 && k < 5) return table_F1a();
      if (k >= 5) return table_F1b();
      throw NotTabulated("F1 is tabulated for k > 1 only");
    case FamilyId::G9:
      return table_G9();
    case FamilyId::F2: {
      auto c = f2_case(k);
      if (!c) throw NotTabulated("no reordering case covers this k");
      switch (*c) {
        case 1: return table_F2c1();
        case 2: return table_F2c2();
        case 3: return table_F2c3();
        case 4: return table_F2c4();
        case 5: return table_F2c5();
        default: return table_G9();
      }
    }
    default:
      throw NotTabulated("no closed Wronskians are tabulated for this family");
  }
}

namespace {

template <class S>
S rat_to(const Rational& q);
template <>
double rat_to<double>(const Rational& q) { return to_double(q); }
template <>
BigFloat rat_to<BigFloat>(const Rational& q) { return to_bigfloat(q); }

template <class S>
S eval_formula(const WronskianFormula& f, const S& k, const S& x) {
  using std::atan;
  using std::pow;
  S v = f.coef(k) * pow(x, rat_to<S>(f.xk) * k + rat_to<S>(f.xc));
  if (f.factor >= 0) {
    S y = pow(x, rat_to<S>(f.argk) * k + rat_to<S>(f.argc));
    if (f.factor == kQuarticFactor)
      v = v * quartic_poly(k)(y);
    else
      v = v * factor_poly(f.factor, k)(y);
  }
  if (f.has_atan) v = v * atan(pow(x, k - S(1)));
  if (f.denom_pow != 0) v = v / pow(pow(x, 2 * k) + x * x, S(f.denom_pow));
  return v;
}

template <class S>
S closed_eval(FamilyId id, int j, const S& k, const S& x) {
  const auto& table = wronskian_table(id, to_rational(to_double(k)));
  if (j < 0 || j >= int(table.size()))
    throw NotTabulated("no closed form at this order index");
  return eval_formula(table[std::size_t(j)], k, x);
}

// Wronskian as a determinant of derivatives computed with jets.
template <class S>
S numeric_eval(const std::vector<int>& idx, int j, const S& k, const S& x) {
  if (j < 0 || j >= int(idx.size())) throw std::out_of_range("order index beyond family size");
  const int d = j + 1;
  Jet<S> xj = Jet<S>::variable(x, std::size_t(j));
  std::vector<std::vector<S>> mat(d, std::vector<S>(d, S(0)));
  for (int col = 0; col < d; ++col) {
    Jet<S> u = basis_u(idx[std::size_t(col)], k, xj);
    for (int row = 0; row < d; ++row) mat[std::size_t(row)][std::size_t(col)] = u.derivative(std::size_t(row));
  }
  // Partial-pivot LU determinant.
  using std::abs;
  S det(1);
  for (int c = 0; c < d; ++c) {
    int piv = c;
    for (int r = c + 1; r < d; ++r)
      if (abs(mat[std::size_t(r)][std::size_t(c)]) > abs(mat[std::size_t(piv)][std::size_t(c)])) piv = r;
    if (piv != c) {
      std::swap(mat[std::size_t(piv)], mat[std::size_t(c)]);
      det = -det;
    }
    S p = mat[std::size_t(c)][std::size_t(c)];
    if (p == 0) return S(0);
    det = det * p;
    for (int r = c + 1; r < d; ++r) {
      S f = mat[std::size_t(r)][std::size_t(c)] / p;
      for (int cc = c; cc < d; ++cc)
        mat[std::size_t(r)][std::size_t(cc)] = mat[std::size_t(r)][std::size_t(cc)] - f * mat[std::size_t(c)][std::size_t(cc)];
    }
  }
  return det;
}

}  // namespace

double wronskian_closed(FamilyId id, int j, double k, double x) {
  return closed_eval(id, j, k, x);
}
BigFloat wronskian_closed_mp(FamilyId id, int j, const BigFloat& k, const BigFloat& x) {
  return closed_eval(id, j, k, x);
}

double wronskian_numeric(FamilyId id, int j, double k, double x) {
  return numeric_eval(family_indices(id, to_rational(k)), j, k, x);
}
BigFloat wronskian_numeric_mp(FamilyId id, int j, const BigFloat& k, const BigFloat& x) {
  return numeric_eval(family_indices(id, to_rational(to_double(k))), j, k, x);
}
BigFloat wronskian_numeric_mp(const std::vector<int>& indices, int j, const BigFloat& k,
                              const BigFloat& x) {
  return numeric_eval(indices, j, k, x);
}

}  // namespace pwl
