#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwl/basis.hpp"
#include "pwl/factors.hpp"
#include "pwl/roots.hpp"
#include "pwl/scalars.hpp"

namespace pwl {

struct NotTabulated : std::runtime_error {
  explicit NotTabulated(const std::string& w) : std::runtime_error(w) {}
};
struct UncertifiedWronskianSign : std::runtime_error {
  explicit UncertifiedWronskianSign(const std::string& w) : std::runtime_error(w) {}
};

enum class FamilyId { G0, G1, G2, G3, G4, G5, G6, G7, G8, G9, G10, G11, F1, F2 };

FamilyId family_from_name(const std::string& name);
std::string family_name(FamilyId id);

// Ordered basis-index list; F1/F2 orderings depend on k.
std::vector<int> family_indices(FamilyId id, const Rational& k);

// One closed-form Wronskian row:
//   W_j = coef(k) * x^(xk*k+xc) * factor(x^(argk*k+argc)) * atan(x^(k-1))?
//         / (x^(2k) + x^2)^denom_pow
struct WronskianFormula {
  RatPoly coef;           // polynomial in k
  Rational xk, xc;        // monomial exponent
  int denom_pow = 0;      // may be negative (a multiplying factor)
  int factor = -1;        // factor_poly index, kQuarticFactor, or -1
  Rational argk, argc;    // factor argument exponent
  bool has_atan = false;  // extra atan(x^(k-1)) factor (positive on x > 0)
};

// Closed-form table for the ordered family at this k (selecting the
// k-range-dependent reordering cases); throws NotTabulated when the paper's
// proofs display no formula for this (family, k).
const std::vector<WronskianFormula>& wronskian_table(FamilyId id, const Rational& k);

// Evaluate the tabulated W_j exactly as printed.
double wronskian_closed(FamilyId id, int j, double k, double x);
BigFloat wronskian_closed_mp(FamilyId id, int j, const BigFloat& k, const BigFloat& x);

// Determinant-of-derivative-matrix evaluation from jet arithmetic. The
// multiprecision variant is the oracle-grade path: the families are close to
// linearly dependent and a double determinant loses 20+ digits.
double wronskian_numeric(FamilyId id, int j, double k, double x);
BigFloat wronskian_numeric_mp(FamilyId id, int j, const BigFloat& k, const BigFloat& x);
BigFloat wronskian_numeric_mp(const std::vector<int>& indices, int j, const BigFloat& k,
                              const BigFloat& x);

}  // namespace pwl
