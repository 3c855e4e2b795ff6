#include "pwl/quartic.hpp"

namespace pwl {

QuarticSignAnalysis quartic_sign_analysis(const Rational& k) {
  if (k <= 0 || k == 1 || k == make_rational(2, 3) || k == 2) throw DegenerateK();
  QuarticSignAnalysis out;
  RatPoly q = quartic_poly<Rational>(k);
  // quartic_poly stores ascending (E, D, C, B, A); report as (A, B, C, D, E).
  for (int i = 0; i < 5; ++i) {
    Rational c = i <= q.degree() ? q.coeff(i) : Rational(0);
    out.coeff_signs[std::size_t(4 - i)] = sign_of(c);
  }
  out.disc_sign = sign_of(quartic_discriminant_factored<Rational>(k));
  RootCount rc = count_positive_roots(q);
  out.positive_roots = rc.count;
  out.isolating = rc.isolating;
  return out;
}

std::optional<int> quartic_expected_positive_roots(const Rational& k) {
  const RegionConstants& rc = region_constants();
  auto lt = [&](const RootEnclosure& e) { return compare_to_root(k, e) < 0; };
  auto gt = [&](const RootEnclosure& e) { return compare_to_root(k, e) > 0; };
  if (k <= 0) return std::nullopt;
  if (lt(rc.k0)) return 3;                                                   // (0, k0)
  if (gt(rc.k0) && k < make_rational(1, 5)) return 1;                        // (k0, 1/5)
  if (k > make_rational(1, 5) && lt(rc.k2)) return 0;                        // (1/5, k2)
  if (gt(rc.k2) && k < make_rational(1, 3)) return 2;                        // (k2, 1/3)
  if (k > make_rational(1, 3) && k < make_rational(1, 2)) return 1;
  if (k > make_rational(1, 2) && k < make_rational(2, 3)) return 1;
  if (k > make_rational(2, 3) && k < make_rational(3, 4)) return 0;
  if (k > make_rational(3, 4) && k < make_rational(4, 5)) return 1;
  if (k >= make_rational(4, 5) && k < 1) return 0;
  if (k > 1 && k <= make_rational(4, 3)) return 0;
  if (k > make_rational(4, 3) && k < make_rational(3, 2)) return 1;
  if (k > make_rational(3, 2) && lt(rc.k3)) return 0;                        // (3/2, k3)
  if (gt(rc.k3) && k < 2) return 2;                                          // (k3, 2)
  if (k > 2 && k < 3) return 2;
  if (k > 3 && lt(rc.k5)) return 3;                                          // (3, k5)
  if (gt(rc.k5) && k < 5) return 1;                                          // (k5, 5)
  if (k == 5) return 1;                                                      // degenerate degree
  if (k > 5) return 2;
  return std::nullopt;
}

}  // namespace pwl
