#include "pwl/roots.hpp"

#include <mutex>
#include <stdexcept>

namespace pwl {

namespace {

// Yun's square-free decomposition: returns f[i] (0-based) holding the product
// of factors of multiplicity i+1.
std::vector<RatPoly> yun_decomposition(const RatPoly& p) {
  std::vector<RatPoly> out;
  RatPoly d = p.derivative();
  RatPoly a = poly_gcd(p, d);
  if (a.degree() <= 0) {
    out.push_back(p);
    return out;
  }
  RatPoly b = poly_div_exact(p, a);
  RatPoly c = poly_div_exact(d, a);
  RatPoly z = c - b.derivative();
  while (true) {
    RatPoly g = poly_gcd(b, z);
    out.push_back(g);
    b = poly_div_exact(b, g);
    if (b.degree() <= 0) break;
    z = poly_div_exact(z, g) - b.derivative();
  }
  return out;
}

}  // namespace

RootCount count_real_roots(RatPoly p, Rational a, Rational b, double width) {
  if (p.is_zero()) throw DegenerateZeroPolynomial();
  if (!(a < b)) return {};

  RatPoly sf = square_free_part(p);
  bool has_repeats = sf.degree() != p.degree();
  std::vector<RatPoly> yun;
  if (has_repeats) yun = yun_decomposition(p);

  // Open-interval semantics: divide out exact roots at the endpoints.
  auto strip_root = [&](const Rational& r) {
    while (!sf.is_zero() && sf(r) == 0) sf = poly_div_exact(sf, RatPoly({-r, Rational(1)}));
  };
  strip_root(a);
  strip_root(b);
  if (sf.degree() <= 0) return {};

  auto chain = sturm_chain(sf);
  auto count_between = [&](const Rational& lo, const Rational& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
  };

  RootCount rc;
  rc.count = count_between(a, b);
  if (rc.count <= 0) {
    rc.count = 0;
    return rc;
  }

  struct Seg {
    Rational lo, hi;
    int n;
  };
  std::vector<Seg> work{{a, b, rc.count}};
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.n == 0) continue;
    double w = to_double(s.hi - s.lo);
    if (s.n == 1 && w <= width) {
      rc.isolating.emplace_back(s.lo, s.hi);
      int mult = 1;
      if (has_repeats) {
        for (std::size_t i = 0; i < yun.size(); ++i) {
          if (yun[i].degree() >= 1 && sign_of(yun[i](s.lo)) * sign_of(yun[i](s.hi)) < 0)
            mult = int(i) + 1;
        }
      }
      rc.multiplicity.push_back(mult);
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    while (sf(mid) == 0) mid = (s.lo + mid) / 2;  // keep subinterval ends off roots
    int left = count_between(s.lo, mid);
    work.push_back({s.lo, mid, left});
    work.push_back({mid, s.hi, s.n - left});
  }
  std::sort(rc.isolating.begin(), rc.isolating.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return rc;
}

RootCount count_positive_roots(const RatPoly& p, double width) {
  if (p.is_zero()) throw DegenerateZeroPolynomial();
  Rational bound(1);
  const Rational& lead = p.c.back();
  for (std::size_t i = 0; i + 1 < p.c.size(); ++i) {
    Rational q = abs(p.c[i] / lead);
    if (q > bound) bound = q;
  }
  bound += 1;
  return count_real_roots(p, Rational(0), bound, width);
}

namespace {

RatPoly poly_from_ll(std::initializer_list<long long> coeffs_desc) {
  // Listed highest degree first, as printed.
  std::vector<Rational> c;
  for (auto it = std::rbegin(coeffs_desc); it != std::rend(coeffs_desc); ++it)
    c.emplace_back(*it);
  return RatPoly(std::move(c));
}

RootEnclosure isolate_unique(const RatPoly& p, const Rational& lo, const Rational& hi,
                             double width) {
  RootCount rc = count_real_roots(p, lo, hi, width);
  if (rc.count != 1)
    throw std::runtime_error("expected a unique root in the stated interval");
  return RootEnclosure{rc.isolating[0].first, rc.isolating[0].second, &p};
}

}  // namespace

const RatPoly& q1_poly() {
  static const RatPoly p = poly_from_ll({2, -153, 894, -1625, 1234, -444, 48});
  return p;
}

const RatPoly& q2_poly() {
  static const RatPoly p = poly_from_ll(
      {177586560LL, -1447424208LL, 5969663136LL, -29387373904LL, 129626832188LL,
       -293774330511LL, 102470736381LL, 1027573184492LL, -2645532232771LL,
       3259827826136LL, -2344796073539LL, 997977148820LL, -227233713561LL,
       15757275163LL, 3311923726LL, -563207524LL, 11249208LL, 19744LL});
  return p;
}

const RatPoly& q3_poly() {
  static const RatPoly p = poly_from_ll({862, -4831, 8308, -5186, 974, 1});
  return p;
}

const RatPoly& k6_aux_poly() {
  static const RatPoly p = poly_from_ll({240, -610, 885, -1830, 2034, -930, 201, -38});
  return p;
}

const RegionConstants& region_constants() {
  static RegionConstants rc;
  static std::once_flag flag;
  std::call_once(flag, [] {
    const double w = 1e-13;
    rc.k0 = isolate_unique(q2_poly(), Rational(0), make_rational(1, 5), w);
    rc.k1 = isolate_unique(q1_poly(), Rational(0), make_rational(1, 5), w);
    rc.k2 = isolate_unique(q2_poly(), make_rational(1, 5), make_rational(1, 3), w);
    rc.k3 = isolate_unique(q2_poly(), make_rational(3, 2), Rational(2), w);
    rc.k4 = isolate_unique(q3_poly(), Rational(3), Rational(4), w);
    rc.k5 = isolate_unique(q2_poly(), Rational(3), Rational(4), w);
    rc.k6 = isolate_unique(k6_aux_poly(), make_rational(3, 4), make_rational(4, 5), w);
  });
  return rc;
}

int compare_to_root(const Rational& k, const RootEnclosure& e) {
  if (k <= e.lo) return -1;
  if (k >= e.hi) return 1;
  Rational v = (*e.poly)(k);
  if (v == 0) return 0;
  // Same sign as at the lower end means the root is still ahead of k.
  return sign_of(v) == sign_of((*e.poly)(e.lo)) ? -1 : 1;
}

}  // namespace pwl
