#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pwl/classify.hpp"
#include "pwl/melnikov.hpp"
#include "pwl/poincare.hpp"
#include "pwl/quartic.hpp"
#include "pwl/verify.hpp"
#include "pwl/zerocount.hpp"

namespace {

struct GridSpec {
  double lo = 0.1, hi = 10.0;
  int n = 50;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  std::istringstream is(s);
  char c1, c2;
  if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.n) || c1 != ':' || c2 != ':' || g.n < 2)
    throw CLI::ValidationError("--grid expects lo:hi:count");
  return g;
}

// --out accepts a path, or the literal "csv"/"json" for stdout in that format.
std::ostream& open_out(const std::string& out, std::ofstream& file) {
  if (out.empty() || out == "csv" || out == "json" || out == "-") return std::cout;
  file.open(out);
  if (!file) throw CLI::ValidationError("cannot open output file " + out);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Melnikov analysis of planar piecewise-linear systems switching on y^n = x^m"};
  app.require_subcommand(1);

  // classify
  auto* sc_classify = app.add_subcommand("classify", "region and cycle bounds for (m, n)");
  int cm = 2, cn = 1;
  bool cjson = false;
  sc_classify->add_option("--m", cm, "exponent on x")->required();
  sc_classify->add_option("--n", cn, "exponent on y")->required();
  sc_classify->add_flag("--json", cjson, "emit JSON");
  sc_classify->callback([&] {
    pwl::ClassificationResult r = pwl::classify(cm, cn);
    if (cjson) {
      std::cout << pwl::classification_to_json(r) << "\n";
      return;
    }
    std::cout << "(m, n) = (" << r.m_input << ", " << r.n_input << ")  parity "
              << r.parity_name();
    if (r.m_input != r.m) std::cout << "  [normalized to (" << r.m << ", " << r.n << ")]";
    std::cout << "\nk = " << pwl::to_double(r.k) << "  region " << r.region << "\n";
    std::cout << "m1 = " << r.m1.str() << "  m2 = " << r.m2.str() << "  m3 = "
              << (r.m3_stated ? r.m3.str() : r.m2.str() + " (orders 1-2 stated)") << "\n";
    std::cout << "H(m,n) >= " << r.h_lower << "\n";
  });

  // reproduce-tables
  auto* sc_tables = app.add_subcommand("reproduce-tables", "classify the full exponent grid");
  int tmax = 12;
  std::string tout;
  sc_tables->add_option("--max", tmax, "max exponent")->required();
  sc_tables->add_option("--out", tout, "output directory (writes text/CSV/JSON)");
  sc_tables->callback([&] {
    pwl::TablesReport rep = pwl::reproduce_tables(tmax);
    std::cout << pwl::tables_to_text(rep);
    if (!tout.empty()) {
      std::ofstream(tout + "/tables.txt") << pwl::tables_to_text(rep);
      std::ofstream(tout + "/tables.csv") << pwl::tables_to_csv(rep);
      std::ofstream(tout + "/tables.json") << pwl::tables_to_json(rep);
      std::cout << "written to " << tout << "/tables.{txt,csv,json}\n";
    }
    if (!rep.cross_check_passed) throw CLI::RuntimeError("cross-check failed", 1);
  });

  // melnikov
  auto* sc_mel = app.add_subcommand("melnikov", "evaluate Delta_order on a radius grid");
  std::string msys, mgrid = "0.5:2.5:50", mout;
  int morder = 1;
  sc_mel->add_option("--system", msys, "system JSON file")->required();
  sc_mel->add_option("--order", morder, "Melnikov order 1..3")->required();
  sc_mel->add_option("--grid", mgrid, "r grid lo:hi:count");
  sc_mel->add_option("--out", mout, "output file, or csv for stdout");
  sc_mel->callback([&] {
    pwl::PwlSystem sys = pwl::load_system(msys);
    GridSpec g = parse_grid(mgrid);
    std::ofstream file;
    std::ostream& os = open_out(mout, file);
    os << "r,x,delta" << morder << "\n";
    for (int i = 0; i < g.n; ++i) {
      double r = g.lo + (g.hi - g.lo) * i / (g.n - 1);
      os << r << "," << pwl::x_of_r(sys.curve, r) << ","
         << pwl::melnikov_numeric(sys, morder, r) << "\n";
    }
  });

  // wronskian-check
  auto* sc_wr = app.add_subcommand("wronskian-check",
                                   "closed-form vs numeric Wronskians of a family");
  std::string wfam = "G5", wgrid = "0.1:10:50", wout;
  double wk = 1.8;
  sc_wr->add_option("--family", wfam, "family name (G0..G11, F1, F2)")->required();
  sc_wr->add_option("--k", wk, "parameter k")->required();
  sc_wr->add_option("--grid", wgrid, "x grid lo:hi:count (log spaced)");
  sc_wr->add_option("--out", wout, "output file, or csv for stdout");
  sc_wr->callback([&] {
    pwl::FamilyId fam = pwl::family_from_name(wfam);
    GridSpec g = parse_grid(wgrid);
    const auto& table = pwl::wronskian_table(fam, pwl::to_rational(wk));
    std::ofstream file;
    std::ostream& os = open_out(wout, file);
    os << "x,order,closed,numeric,rel_err\n";
    pwl::BigFloat kb(wk);
    double worst = 0;
    for (int i = 0; i < g.n; ++i) {
      double x = g.lo * std::pow(g.hi / g.lo, double(i) / (g.n - 1));
      pwl::BigFloat xb(x);
      for (int j = 0; j < int(table.size()); ++j) {
        pwl::BigFloat closed = pwl::wronskian_closed_mp(fam, j, kb, xb);
        pwl::BigFloat numeric = pwl::wronskian_numeric_mp(fam, j, kb, xb);
        double rel = closed != 0 ? pwl::to_double(abs(closed - numeric) / abs(closed)) : 0.0;
        worst = std::max(worst, rel);
        os << x << "," << j << "," << pwl::to_double(closed) << ","
           << pwl::to_double(numeric) << "," << rel << "\n";
      }
    }
    std::cerr << "worst relative deviation: " << worst << "\n";
  });

  // roots
  auto* sc_roots = app.add_subcommand("roots", "isolate real roots of the region polynomials");
  std::string rwhich = "q2", rint = "0:5";
  sc_roots->add_option("--which", rwhich, "q1 | q2 | q3 | k6aux")->required();
  sc_roots->add_option("--interval", rint, "search interval lo:hi");
  sc_roots->callback([&] {
    const pwl::RatPoly* p = nullptr;
    if (rwhich == "q1") p = &pwl::q1_poly();
    else if (rwhich == "q2") p = &pwl::q2_poly();
    else if (rwhich == "q3") p = &pwl::q3_poly();
    else if (rwhich == "k6aux") p = &pwl::k6_aux_poly();
    else throw CLI::ValidationError("--which must be q1, q2, q3 or k6aux");
    double lo, hi;
    char c;
    std::istringstream is(rint);
    if (!(is >> lo >> c >> hi) || c != ':') throw CLI::ValidationError("--interval lo:hi");
    pwl::RootCount rc = pwl::count_real_roots(*p, pwl::to_rational(lo), pwl::to_rational(hi));
    std::cout << rc.count << " root(s) in (" << lo << ", " << hi << ")\n";
    for (std::size_t i = 0; i < rc.isolating.size(); ++i) {
      auto& [a, b] = rc.isolating[i];
      std::cout << "  root in [" << pwl::to_double(a) << ", " << pwl::to_double(b)
                << "]  width " << pwl::to_double(b - a) << "  multiplicity "
                << rc.multiplicity[i] << "\n";
    }
  });

  // cycles
  auto* sc_cyc = app.add_subcommand("cycles", "limit cycles of the return map");
  std::string csys, cwin = "0.2:5", cout_path;
  double ceps = 1e-3;
  sc_cyc->add_option("--system", csys, "system JSON file")->required();
  sc_cyc->add_option("--epsilon", ceps, "perturbation size (overrides the file)");
  sc_cyc->add_option("--window", cwin, "radius window lo:hi");
  sc_cyc->add_option("--out", cout_path, "output file, or json for stdout");
  sc_cyc->callback([&] {
    pwl::PwlSystem sys = pwl::load_system(csys);
    sys.epsilon = ceps;
    double lo, hi;
    char c;
    std::istringstream is(cwin);
    if (!(is >> lo >> c >> hi) || c != ':') throw CLI::ValidationError("--window lo:hi");
    auto cycles = pwl::find_limit_cycles(sys, {lo, hi});
    nlohmann::json j = nlohmann::json::array();
    for (const auto& cy : cycles) {
      j.push_back({{"radius", cy.radius},
                   {"residual", cy.residual},
                   {"stability", cy.stability},
                   {"melnikov_order", cy.melnikov_order},
                   {"melnikov_zero", cy.melnikov_zero},
                   {"melnikov_distance", cy.melnikov_distance}});
    }
    std::ofstream file;
    std::ostream& os = open_out(cout_path, file);
    os << j.dump(2) << "\n";
  });

  // displacement
  auto* sc_disp = app.add_subcommand("displacement", "return-map displacement on a grid");
  std::string dsys, dgrid = "0.2:5:100", dout;
  sc_disp->add_option("--system", dsys, "system JSON file")->required();
  sc_disp->add_option("--grid", dgrid, "r grid lo:hi:count");
  sc_disp->add_option("--out", dout, "output file, or csv for stdout");
  sc_disp->callback([&] {
    pwl::PwlSystem sys = pwl::load_system(dsys);
    GridSpec g = parse_grid(dgrid);
    std::ofstream file;
    std::ostream& os = open_out(dout, file);
    os << "r,displacement\n";
    for (int i = 0; i < g.n; ++i) {
      double r = g.lo + (g.hi - g.lo) * i / (g.n - 1);
      os << r << "," << pwl::displacement(sys, r) << "\n";
    }
  });

  // verify
  auto* sc_verify = app.add_subcommand("verify", "run the full cross-validation suite");
  bool vall = false;
  sc_verify->add_flag("--all", vall, "run every check");
  sc_verify->callback([&] {
    auto results = pwl::run_acceptance();
    bool ok = true;
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.seconds << " s)\n";
      std::cout << "       " << r.detail << "\n";
      ok = ok && r.pass;
    }
    if (!ok) throw CLI::RuntimeError("verification failed", 1);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
