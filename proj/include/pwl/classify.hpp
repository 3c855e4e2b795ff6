#pragma once

#include <string>
#include <vector>

#include "pwl/curve.hpp"
#include "pwl/zerocount.hpp"

namespace pwl {

struct InvalidExponent : std::runtime_error {
  InvalidExponent() : std::runtime_error("curve exponents must be >= 1") {}
};

struct ValueOrRange {
  int lo = 0, hi = 0;
  bool exact() const { return lo == hi; }
  std::string str() const;
};

struct ClassificationResult {
  int m_input = 1, n_input = 1;  // as given
  int m = 1, n = 1;              // swap-normalized
  Parity parity{};
  Rational k;
  std::string region;   // k-interval label of the matched row
  ValueOrRange m1, m2, m3;
  bool m3_stated = true;  // even/even rows state orders 1-2 only
  int h_lower = 0;

  std::string parity_name() const;
};

// Locates k = m/n in the parity table (exact endpoint handling; comparisons
// against the irrational region constants via certified enclosures).
ClassificationResult classify(int m, int n);

// Family backing the order-2 span for this parity/k (used by the
// cross-check against zero_count_bound).
FamilyId order2_family(Parity parity, const Rational& k);
ZeroCountBound order2_bound(Parity parity, const Rational& k);

struct TableRowOut {
  std::string region;
  std::string m1, m2, m3;
  std::vector<std::pair<int, int>> members;  // (m, n) pairs in the grid
};

struct TablesReport {
  std::vector<TableRowOut> odd_odd, even_even, even_odd;
  bool cross_check_passed = true;
  std::vector<std::string> cross_check_failures;
};

TablesReport reproduce_tables(int max_exponent);

std::string tables_to_text(const TablesReport& rep);
std::string tables_to_csv(const TablesReport& rep);
std::string tables_to_json(const TablesReport& rep);
std::string classification_to_json(const ClassificationResult& r);

}  // namespace pwl
