#include "pwl/system.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pwl {

std::array<double, 12> PerturbationCoeffs::flat(int ord) const {
  const OrderCoeffs& o = at(ord);
  return {o.upper.p[0], o.upper.p[1], o.upper.p[2], o.upper.q[0], o.upper.q[1], o.upper.q[2],
          o.lower.p[0], o.lower.p[1], o.lower.p[2], o.lower.q[0], o.lower.q[1], o.lower.q[2]};
}

void PerturbationCoeffs::set_flat(int ord, const std::array<double, 12>& v) {
  OrderCoeffs& o = at(ord);
  o.upper.p = {v[0], v[1], v[2]};
  o.upper.q = {v[3], v[4], v[5]};
  o.lower.p = {v[6], v[7], v[8]};
  o.lower.q = {v[9], v[10], v[11]};
}

namespace {

// (x,y) |-> (y,x) with time reversal: new upper block comes from the old
// lower one and vice versa, with P/Q swapped, arguments transposed, signs
// flipped.
ZoneAffine swap_zone(const ZoneAffine& z) {
  ZoneAffine r;
  r.p = {-z.q[0], -z.q[2], -z.q[1]};
  r.q = {-z.p[0], -z.p[2], -z.p[1]};
  return r;
}

PerturbationCoeffs swap_coeffs(const PerturbationCoeffs& c) {
  PerturbationCoeffs r;
  for (int ord = 1; ord <= 3; ++ord) {
    r.at(ord).upper = swap_zone(c.at(ord).lower);
    r.at(ord).lower = swap_zone(c.at(ord).upper);
  }
  return r;
}

}  // namespace

PwlSystem PwlSystem::make(int m, int n, const PerturbationCoeffs& coeffs, double epsilon) {
  PwlSystem s;
  s.curve = SwitchingCurve::make(m, n);
  s.coeffs = s.curve.swapped ? swap_coeffs(coeffs) : coeffs;
  s.epsilon = epsilon;
  return s;
}

Vec2 evaluate_field(const PwlSystem& sys, double x, double y, double tol, int force_side) {
  double h = std::pow(y, sys.curve.n) - std::pow(x, sys.curve.m);
  int side = force_side;
  if (side == 0) {
    if (std::abs(h) < tol) throw OnSwitchingManifold();
    side = h > 0 ? 1 : -1;
  }
  Vec2 v{y, -x};
  double ei = 1.0;
  for (int ord = 1; ord <= 3; ++ord) {
    ei *= sys.epsilon;
    const ZoneAffine& z = side > 0 ? sys.coeffs.at(ord).upper : sys.coeffs.at(ord).lower;
    v.x += ei * (z.p[0] + z.p[1] * x + z.p[2] * y);
    v.y += ei * (z.q[0] + z.q[1] * x + z.q[2] * y);
  }
  return v;
}

namespace {

void zone_to_json(nlohmann::json& j, const ZoneAffine& z, const char* pname, const char* qname) {
  for (int i = 0; i < 3; ++i) {
    j[pname + std::to_string(i)] = z.p[i];
    j[qname + std::to_string(i)] = z.q[i];
  }
}

void zone_from_json(const nlohmann::json& j, ZoneAffine& z, const char* pname,
                    const char* qname) {
  for (int i = 0; i < 3; ++i) {
    std::string pk = pname + std::to_string(i), qk = qname + std::to_string(i);
    if (j.contains(pk)) z.p[i] = j.at(pk).get<double>();
    if (j.contains(qk)) z.q[i] = j.at(qk).get<double>();
  }
}

}  // namespace

std::string system_to_json(const PwlSystem& sys) {
  nlohmann::json j;
  j["m"] = sys.curve.m;
  j["n"] = sys.curve.n;
  j["epsilon"] = sys.epsilon;
  nlohmann::json coeffs;
  for (int ord = 1; ord <= 3; ++ord) {
    nlohmann::json o;
    zone_to_json(o, sys.coeffs.at(ord).upper, "a", "b");
    zone_to_json(o, sys.coeffs.at(ord).lower, "alpha", "beta");
    coeffs["order" + std::to_string(ord)] = o;
  }
  j["coeffs"] = coeffs;
  return j.dump(2);
}

PwlSystem system_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PerturbationCoeffs c;
  if (j.contains("coeffs")) {
    for (int ord = 1; ord <= 3; ++ord) {
      std::string key = "order" + std::to_string(ord);
      if (!j["coeffs"].contains(key)) continue;
      const auto& o = j["coeffs"][key];
      zone_from_json(o, c.at(ord).upper, "a", "b");
      zone_from_json(o, c.at(ord).lower, "alpha", "beta");
    }
  }
  double eps = j.value("epsilon", 0.0);
  return PwlSystem::make(j.at("m").get<int>(), j.at("n").get<int>(), c, eps);
}

PwlSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open system file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return system_from_json(ss.str());
}

void save_system(const PwlSystem& sys, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write system file: " + path);
  out << system_to_json(sys) << "\n";
}

}  // namespace pwl
