#pragma once

#include <utility>

#include "pwl/wronskian.hpp"

namespace pwl {

struct RankDeficiency : std::runtime_error {
  explicit RankDeficiency(const std::string& w) : std::runtime_error(w) {}
};
struct VerificationFailure : std::runtime_error {
  explicit VerificationFailure(const std::string& w) : std::runtime_error(w) {}
};

// Upper bound on isolated zeros of the family span on (0, inf), derived from
// certified root counts of the closed-form Wronskian factors:
//  - all Wronskians nonvanishing: bound n (extended complete system);
//  - only the last vanishes, at one simple point: bound n + 1, realizable;
//  - otherwise the general counting formula over the certified nu_i;
//  - ranges not covered by a reordering case fall back to the generic bound;
//  - k > 5 for the seven-function family carries the literature value.
struct ZeroCountBound {
  int lower = 0;
  int upper = 0;
  enum class Mode { ECT, AccuracyOne, Counted, GenericFallback, Literature } mode = Mode::ECT;
  std::vector<int> nu;  // per-order certified counts when available

  bool exact() const { return lower == upper; }
};

ZeroCountBound zero_count_bound(FamilyId fam, const Rational& k);

// Linear-combination search: find span coefficients whose combination has
// sign-change zeros at the targets (kernel method, needs targets < family
// size) or, for targets == family size (the accuracy-one extra zero), a
// best-effort perturbation search whose outcome is reported honestly.
struct RealizationResult {
  bool success = false;
  std::vector<double> coeffs;
  std::vector<double> zeros;
  std::string note;
};

RealizationResult realize_zeros(FamilyId fam, double k, const std::vector<double>& targets,
                                std::pair<double, double> window);

// Searches the coefficient sphere for a combination with `want` sign-change
// zeros inside the window; deterministic for a fixed seed.
RealizationResult find_zero_configuration(FamilyId fam, double k, int want,
                                          std::pair<double, double> window, unsigned seed = 1);

}  // namespace pwl
