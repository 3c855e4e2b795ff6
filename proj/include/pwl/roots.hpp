#pragma once

#include "pwl/polynomial.hpp"
#include "pwl/scalars.hpp"

namespace pwl {

// Certified enclosure of an isolated real root: the root lies strictly inside
// (lo, hi) and the defining polynomial is nonzero at both ends.
struct RootEnclosure {
  Rational lo, hi;
  const RatPoly* poly = nullptr;
  double mid() const { return to_double((lo + hi) / 2); }
  double width() const { return to_double(hi - lo); }
};

// k0..k5 from the region-splitting polynomials plus the auxiliary root k6 in
// (3/4, 4/5) used by the quartic sign table.
struct RegionConstants {
  RootEnclosure k0, k1, k2, k3, k4, k5, k6;
};

const RatPoly& q1_poly();
const RatPoly& q2_poly();
const RatPoly& q3_poly();
const RatPoly& k6_aux_poly();

const RegionConstants& region_constants();

// -1 if k lies below the enclosed root, +1 above, 0 if k is exactly the root
// (impossible for irrational roots, but handled). Exact; no refinement loop
// is needed because the defining polynomial travels with the enclosure.
int compare_to_root(const Rational& k, const RootEnclosure& e);

}  // namespace pwl
