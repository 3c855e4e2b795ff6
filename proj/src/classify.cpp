#include "pwl/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace pwl {

std::string ValueOrRange::str() const {
  if (exact()) return std::to_string(lo);
  return std::to_string(lo) + ".." + std::to_string(hi);
}

std::string ClassificationResult::parity_name() const {
  switch (parity) {
    case Parity::OddOdd: return "odd/odd";
    case Parity::EvenEven: return "even/even";
    case Parity::EvenOdd: return "even/odd";
  }
  return "?";
}

namespace {

ValueOrRange V(int v) { return {v, v}; }
ValueOrRange V(int lo, int hi) { return {lo, hi}; }

struct Row {
  std::string region;
  ValueOrRange m1, m2, m3;
  bool m3_stated = true;
};

bool in_open(const Rational& k, const Rational& a, const Rational& b) { return a < k && k < b; }

Row locate_odd_odd(const Rational& k) {
  if (k == 1) return {"{1}", V(1), V(1), V(2)};
  if (k < make_rational(1, 2) || k > 2) return {"(0,1/2) u (2,inf)", V(3), V(7), V(7)};
  if (in_open(k, make_rational(1, 2), make_rational(2, 3)) ||
      in_open(k, make_rational(3, 4), Rational(1)) || in_open(k, Rational(1), make_rational(4, 3)) ||
      in_open(k, make_rational(3, 2), Rational(2)))
    return {"(1/2,2/3) u (3/4,1) u (1,4/3) u (3/2,2)", V(2), V(8), V(8)};
  // (2/3,3/4] u [4/3,3/2) with the stated closed endpoints.
  if ((k > make_rational(2, 3) && k <= make_rational(3, 4)) ||
      (k >= make_rational(4, 3) && k < make_rational(3, 2)))
    return {"(2/3,3/4] u [4/3,3/2)", V(2), V(7), V(7)};
  throw std::logic_error("odd/odd ratio fell on an unreachable boundary");
}

Row locate_even_even(const Rational& k) {
  if (k == 1) return {"{1}", V(0), V(1), V(1), false};
  if (k < make_rational(1, 5) || in_open(k, make_rational(1, 3), make_rational(1, 2)) ||
      in_open(k, Rational(2), Rational(3)) || k > 5)
    return {"(0,1/5) u (1/3,1/2) u (2,3) u (5,inf)", V(2), V(5), V(5), false};
  if ((k >= make_rational(1, 5) && k <= make_rational(1, 3)) ||
      (k >= make_rational(1, 2) && k < 1) || (k > 1 && k <= 2) || (k >= 3 && k <= 5))
    return {"[1/5,1/3] u [1/2,1) u (1,2] u [3,5]", V(2), V(4), V(4), false};
  throw std::logic_error("even/even ratio fell on an unreachable boundary");
}

Row locate_even_odd(const Rational& k) {
  const RegionConstants& rc = region_constants();
  auto lt = [&](const RootEnclosure& e) { return compare_to_root(k, e) < 0; };
  auto gt = [&](const RootEnclosure& e) { return compare_to_root(k, e) > 0; };
  if (k == 2) return {"{2}", V(3), V(4), V(4)};
  if (k == make_rational(2, 3)) return {"{2/3}", V(3), V(5), V(5)};
  if (lt(rc.k1) && k < make_rational(1, 5))
    return {"(0,k0) u (k0,k1)", V(4), V(6, 11), V(6, 11)};
  if (gt(rc.k1) && k < make_rational(1, 5))
    return {"(k1,1/5) u (1/3,1/2)", V(4), V(7), V(7)};
  if (in_open(k, make_rational(1, 3), make_rational(1, 2)))
    return {"(k1,1/5) u (1/3,1/2)", V(4), V(7), V(7)};
  if (k > make_rational(1, 5) && lt(rc.k2))
    return {"(1/5,k2) u (3/2,k3)", V(4), V(6), V(6)};
  if (k > make_rational(3, 2) && lt(rc.k3))
    return {"(1/5,k2) u (3/2,k3)", V(4), V(6), V(6)};
  if (gt(rc.k2) && k < make_rational(1, 3))
    return {"(k2,1/3) u (k3,2)", V(4), V(7, 8), V(7, 8)};
  if (gt(rc.k3) && k < 2) return {"(k2,1/3) u (k3,2)", V(4), V(7, 8), V(7, 8)};
  if (in_open(k, make_rational(1, 2), make_rational(2, 3)) ||
      in_open(k, make_rational(3, 4), make_rational(4, 5)) ||
      in_open(k, make_rational(4, 3), make_rational(3, 2)) || gt(rc.k5))
    return {"(1/2,2/3) u (3/4,4/5) u (4/3,3/2) u (k5,inf)", V(3), V(7), V(7)};
  if (in_open(k, make_rational(2, 3), make_rational(3, 4)) ||
      (k >= make_rational(4, 5) && k < 1) || (k > 1 && k <= make_rational(4, 3)))
    return {"(2/3,3/4) u [4/5,1) u (1,4/3]", V(3), V(6), V(6)};
  if (in_open(k, Rational(2), Rational(3))) return {"(2,3)", V(3), V(7, 8), V(7, 8)};
  if (k > 3 && lt(rc.k4)) return {"(3,k4)", V(3), V(6, 11), V(6, 11)};
  if (gt(rc.k4) && lt(rc.k5)) return {"(k4,k5)", V(3), V(7, 9), V(7, 9)};
  throw std::logic_error("even/odd ratio fell on an unreachable boundary");
}

}  // namespace

ClassificationResult classify(int m, int n) {
  if (m < 1 || n < 1) throw InvalidExponent();
  SwitchingCurve curve = SwitchingCurve::make(m, n);
  ClassificationResult r;
  r.m_input = m;
  r.n_input = n;
  r.m = curve.m;
  r.n = curve.n;
  r.parity = curve.parity;
  r.k = curve.k();
  Row row;
  switch (curve.parity) {
    case Parity::OddOdd: row = locate_odd_odd(r.k); break;
    case Parity::EvenEven: row = locate_even_even(r.k); break;
    case Parity::EvenOdd: row = locate_even_odd(r.k); break;
  }
  r.region = row.region;
  r.m1 = row.m1;
  r.m2 = row.m2;
  r.m3 = row.m3;
  r.m3_stated = row.m3_stated;
  r.h_lower = std::max({row.m1.lo, row.m2.lo, row.m3_stated ? row.m3.lo : 0});
  return r;
}

FamilyId order2_family(Parity parity, const Rational& k) {
  switch (parity) {
    case Parity::OddOdd: return k == 1 ? FamilyId::G1 : FamilyId::G5;
    case Parity::EvenEven: return k == 1 ? FamilyId::G11 : FamilyId::G8;
    case Parity::EvenOdd:
      if (k == 2) return FamilyId::G6;
      if (k == make_rational(2, 3)) return FamilyId::G7;
      return FamilyId::G9;
  }
  throw std::logic_error("unreachable");
}

ZeroCountBound order2_bound(Parity parity, const Rational& k) {
  return zero_count_bound(order2_family(parity, k), k);
}

TablesReport reproduce_tables(int max_exponent) {
  TablesReport rep;
  struct Key {
    Parity parity;
    std::string region;
    bool operator<(const Key& o) const {
      return parity != o.parity ? parity < o.parity : region < o.region;
    }
  };
  std::map<Key, TableRowOut> rows;
  for (int m = 1; m <= max_exponent; ++m) {
    for (int n = 1; n <= max_exponent; ++n) {
      ClassificationResult r = classify(m, n);
      Key key{r.parity, r.region};
      auto& row = rows[key];
      if (row.region.empty()) {
        row.region = r.region;
        row.m1 = r.m1.str();
        row.m2 = r.m2.str();
        row.m3 = r.m3_stated ? r.m3.str() : r.m2.str() + " (order-2 value; orders 1-2 stated)";
      }
      row.members.emplace_back(m, n);

      // Independent cross-check of the order-2 value against the
      // Wronskian-certified bound of the backing family.
      try {
        ZeroCountBound b = order2_bound(r.parity, r.k);
        if (b.lower != r.m2.lo || b.upper != r.m2.hi) {
          rep.cross_check_passed = false;
          rep.cross_check_failures.push_back(
              "(" + std::to_string(m) + "," + std::to_string(n) + "): table " + r.m2.str() +
              " vs bound " + std::to_string(b.lower) + ".." + std::to_string(b.upper));
        }
      } catch (const std::exception& ex) {
        rep.cross_check_passed = false;
        rep.cross_check_failures.push_back("(" + std::to_string(m) + "," + std::to_string(n) +
                                           "): " + ex.what());
      }
    }
  }
  for (auto& [key, row] : rows) {
    switch (key.parity) {
      case Parity::OddOdd: rep.odd_odd.push_back(row); break;
      case Parity::EvenEven: rep.even_even.push_back(row); break;
      case Parity::EvenOdd: rep.even_odd.push_back(row); break;
    }
  }
  return rep;
}

namespace {

void print_block(std::ostringstream& os, const std::string& title,
                 const std::vector<TableRowOut>& rows) {
  os << title << "\n";
  os << "  " << std::string(title.size(), '-') << "\n";
  for (const auto& row : rows) {
    os << "  region " << row.region << "\n";
    os << "    m1 = " << row.m1 << ", m2 = " << row.m2 << ", m3 = " << row.m3 << "\n";
    os << "    pairs:";
    int shown = 0;
    for (auto& [m, n] : row.members) {
      if (shown++ == 12) {
        os << " ... (" << row.members.size() << " total)";
        break;
      }
      os << " (" << m << "," << n << ")";
    }
    os << "\n";
  }
  os << "\n";
}

}  // namespace

std::string tables_to_text(const TablesReport& rep) {
  std::ostringstream os;
  print_block(os, "odd/odd exponents", rep.odd_odd);
  print_block(os, "even/even exponents", rep.even_even);
  print_block(os, "even/odd exponents", rep.even_odd);
  os << "order-2 cross-check vs Wronskian bounds: "
     << (rep.cross_check_passed ? "all rows match" : "MISMATCH") << "\n";
  for (const auto& f : rep.cross_check_failures) os << "  " << f << "\n";
  return os.str();
}

std::string tables_to_csv(const TablesReport& rep) {
  std::ostringstream os;
  os << "parity,region,m1,m2,m3,pairs\n";
  auto emit = [&](const char* parity, const std::vector<TableRowOut>& rows) {
    for (const auto& row : rows) {
      os << parity << ",\"" << row.region << "\"," << row.m1 << "," << row.m2 << ",\"" << row.m3
         << "\",\"";
      for (std::size_t i = 0; i < row.members.size(); ++i) {
        if (i) os << " ";
        os << row.members[i].first << ":" << row.members[i].second;
      }
      os << "\"\n";
    }
  };
  emit("odd/odd", rep.odd_odd);
  emit("even/even", rep.even_even);
  emit("even/odd", rep.even_odd);
  return os.str();
}

namespace {

nlohmann::json rows_to_json(const std::vector<TableRowOut>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j;
    j["region"] = row.region;
    j["m1"] = row.m1;
    j["m2"] = row.m2;
    j["m3"] = row.m3;
    nlohmann::json mem = nlohmann::json::array();
    for (auto& [m, n] : row.members) mem.push_back({m, n});
    j["pairs"] = mem;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace

std::string tables_to_json(const TablesReport& rep) {
  nlohmann::json j;
  j["odd_odd"] = rows_to_json(rep.odd_odd);
  j["even_even"] = rows_to_json(rep.even_even);
  j["even_odd"] = rows_to_json(rep.even_odd);
  j["cross_check_passed"] = rep.cross_check_passed;
  j["cross_check_failures"] = rep.cross_check_failures;
  return j.dump(2);
}

std::string classification_to_json(const ClassificationResult& r) {
  nlohmann::json j;
  j["m"] = r.m_input;
  j["n"] = r.n_input;
  j["normalized_m"] = r.m;
  j["normalized_n"] = r.n;
  j["parity"] = r.parity_name();
  j["k"] = to_double(r.k);
  j["region"] = r.region;
  j["m1"] = r.m1.str();
  j["m2"] = r.m2.str();
  j["m3"] = r.m3_stated ? r.m3.str() : r.m2.str();
  j["m3_stated"] = r.m3_stated;
  j["H_lower_bound"] = r.h_lower;
  return j.dump(2);
}

}  // namespace pwl
