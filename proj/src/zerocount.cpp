#include "pwl/zerocount.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

namespace pwl {

namespace {

// Pure monomial families: the Wronskians are Vandermonde products of the
// exponents, nonzero whenever the exponents are pairwise distinct.
std::optional<std::vector<Rational>> monomial_exponents(FamilyId fam, const Rational& k) {
  auto expo = [&](int idx) -> std::optional<Rational> {
    switch (idx) {
      case 0: return Rational(0);
      case 1: return k;
      case 2: return k - 1;
      case 3: return k - 2;
      case 4: return 2 * k - 1;
      case 5: return 2 * k - 2;
      case 6: return 3 * k - 2;
      case 7: return 3 * k - 3;
      case 13: return 2 * k;
      default: return std::nullopt;
    }
  };
  std::vector<Rational> out;
  for (int idx : family_indices(fam, k)) {
    auto e = expo(idx);
    if (!e) return std::nullopt;
    out.push_back(*e);
  }
  return out;
}

ZeroCountBound bound_from_nu(const std::vector<int>& nu) {
  const int n = int(nu.size()) - 1;
  ZeroCountBound b;
  b.nu = nu;
  bool lower_clear = true;
  for (int i = 0; i < n; ++i) lower_clear = lower_clear && nu[std::size_t(i)] == 0;
  if (lower_clear && nu[std::size_t(n)] == 0) {
    b.lower = b.upper = n;
    b.mode = ZeroCountBound::Mode::ECT;
    return b;
  }
  if (lower_clear && nu[std::size_t(n)] == 1) {
    b.lower = b.upper = n + 1;
    b.mode = ZeroCountBound::Mode::AccuracyOne;
    return b;
  }
  // General bound: n + nu_n + nu_{n-1} + 2(nu_{n-2}+...+nu_0) + mu terms.
  int upper = n + nu[std::size_t(n)];
  if (n >= 1) upper += nu[std::size_t(n - 1)];
  for (int i = 0; i <= n - 2; ++i) upper += 2 * nu[std::size_t(i)];
  for (int i = 3; i <= n - 1; ++i) {
    int tail = 0;
    for (int j = 0; j <= i - 3; ++j) tail += nu[std::size_t(j)];
    upper += std::min(2 * nu[std::size_t(i)], tail);
  }
  b.upper = upper;
  b.lower = lower_clear ? n + 1 : n;  // one extra zero is realizable when only W_n vanishes
  b.mode = ZeroCountBound::Mode::Counted;
  return b;
}

// Certified nu_i from a closed-form table at exact rational k.
std::vector<int> certified_nu(const std::vector<WronskianFormula>& table, const Rational& k) {
  std::vector<int> nu;
  for (const auto& f : table) {
    Rational c = f.coef(k);
    if (c == 0)
      throw UncertifiedWronskianSign("a Wronskian vanishes identically at this k");
    if (f.factor < 0) {
      nu.push_back(0);
      continue;
    }
    Rational arg_exp = f.argk * k + f.argc;
    RatPoly fac = f.factor == kQuarticFactor ? quartic_poly<Rational>(k)
                                             : factor_poly<Rational>(f.factor, k);
    if (fac.is_zero())
      throw UncertifiedWronskianSign("factor polynomial vanishes identically at this k");
    if (arg_exp == 0) {
      // Constant argument: the factor contributes no x-dependence.
      if (fac(Rational(1)) == 0)
        throw UncertifiedWronskianSign("factor degenerates at this k");
      nu.push_back(0);
      continue;
    }
    // y = x^e is a bijection of (0, inf) for e != 0, so positive roots of the
    // factor correspond one-to-one to zeros of W on (0, inf).
    nu.push_back(count_positive_roots(fac).count);
  }
  return nu;
}

}  // namespace

ZeroCountBound zero_count_bound(FamilyId fam, const Rational& k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");

  // Monomial families first (their Wronskians are Vandermonde products).
  if (fam == FamilyId::G0 || fam == FamilyId::G1 || fam == FamilyId::G10 ||
      fam == FamilyId::G11) {
    auto ex = monomial_exponents(fam, k);
    for (std::size_t i = 0; i < ex->size(); ++i)
      for (std::size_t j = i + 1; j < ex->size(); ++j)
        if ((*ex)[i] == (*ex)[j])
          throw UncertifiedWronskianSign("duplicate exponents at this k");
    ZeroCountBound b;
    b.lower = b.upper = int(ex->size()) - 1;
    b.mode = ZeroCountBound::Mode::ECT;
    b.nu.assign(ex->size(), 0);
    return b;
  }

  // Even/even second-order family: the orderings are tabulated for k > 1;
  // k < 1 reduces by the swap symmetry (the family's span claims are
  // symmetric in k <-> 1/k for this parity).
  if (fam == FamilyId::G8 && k < 1) return zero_count_bound(fam, 1 / k);

  if (fam == FamilyId::G9 || fam == FamilyId::F2) {
    if (k > 5) {
      // Exact value from the literature (stated without proof); the certified
      // general bound from the plain ordering is one higher.
      ZeroCountBound b;
      b.lower = b.upper = 7;
      b.mode = ZeroCountBound::Mode::Literature;
      return b;
    }
    try {
      return bound_from_nu(certified_nu(wronskian_table(FamilyId::F2, k), k));
    } catch (const NotTabulated&) {
      // No reordering case covers this k: fall back to the plain ordering's
      // generic estimate (quartic <= 3 positive roots, quadratic <= 2).
      ZeroCountBound b;
      b.lower = 6;
      b.upper = 11;
      b.mode = ZeroCountBound::Mode::GenericFallback;
      return b;
    }
  }

  return bound_from_nu(certified_nu(wronskian_table(fam, k), k));
}

namespace {

std::vector<double> grid_log(double a, double b, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i) g[std::size_t(i)] = std::exp(la + (lb - la) * i / (n - 1));
  return g;
}

double combo_eval(const std::vector<int>& idx, const std::vector<double>& c, double k,
                  double x) {
  double acc = 0;
  for (std::size_t j = 0; j < idx.size(); ++j) acc += c[j] * basis_u(idx[j], k, x);
  return acc;
}

std::vector<double> sign_change_zeros(const std::vector<int>& idx, const std::vector<double>& c,
                                      double k, double a, double b, int grid_n = 4000) {
  auto g = grid_log(a, b, grid_n);
  std::vector<double> zeros;
  double prev = combo_eval(idx, c, k, g[0]);
  for (std::size_t i = 1; i < g.size(); ++i) {
    double cur = combo_eval(idx, c, k, g[i]);
    if (prev == 0) {
      prev = cur;
      continue;
    }
    if (cur != 0 && ((prev < 0) != (cur < 0))) {
      double lo = g[i - 1], hi = g[i];
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        double v = combo_eval(idx, c, k, mid);
        if ((v < 0) == (prev < 0))
          lo = mid;
        else
          hi = mid;
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  return zeros;
}

}  // namespace

RealizationResult realize_zeros(FamilyId fam, double k, const std::vector<double>& targets,
                                std::pair<double, double> window) {
  auto idx = family_indices(fam, to_rational(k));
  const int nf = int(idx.size());
  const int m = int(targets.size());
  RealizationResult res;
  if (m == 0) {
    res.success = false;
    res.note = "no targets";
    return res;
  }

  Eigen::MatrixXd A(m, nf);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < nf; ++j) A(i, j) = basis_u(idx[std::size_t(j)], k, targets[std::size_t(i)]);

  std::vector<double> c(std::size_t(nf), 0.0);
  if (m < nf) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    Eigen::VectorXd v = svd.matrixV().col(nf - 1);
    for (int j = 0; j < nf; ++j) c[std::size_t(j)] = v(j);
    double resid = (A * v).norm();
    if (resid > 1e-8 * (1.0 + A.norm()))
      throw RankDeficiency("kernel vector does not interpolate the targets");
  } else {
    // Accuracy-one configuration: a square homogeneous system generically has
    // no kernel; search nearby instead and report the outcome.
    auto found = find_zero_configuration(fam, k, m, window, 7);
    found.note = "accuracy-one request: " + std::string(found.success ? "configuration with the "
                                                                        "requested zero count "
                                                                        "found (zeros are free)"
                                                                      : "no configuration found");
    return found;
  }

  res.coeffs = c;
  res.zeros = sign_change_zeros(idx, c, k, window.first, window.second);
  res.success = true;
  for (double t : targets) {
    double best = 1e300;
    for (double z : res.zeros) best = std::min(best, std::abs(z - t));
    if (best > 1e-6 * (1.0 + std::abs(t))) {
      res.success = false;
      res.note = "a target is not a verified sign-change zero";
    }
  }
  return res;
}

RealizationResult find_zero_configuration(FamilyId fam, double k, int want,
                                          std::pair<double, double> window, unsigned seed) {
  auto idx = family_indices(fam, to_rational(k));
  const int nf = int(idx.size());
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  RealizationResult best;
  int best_count = -1;
  for (int trial = 0; trial < 20000; ++trial) {
    std::vector<double> c(static_cast<std::size_t>(nf));
    for (auto& v : c) v = gauss(rng);
    auto zeros = sign_change_zeros(idx, c, k, window.first, window.second, 600);
    int cnt = int(zeros.size());
    if (cnt > best_count && cnt <= want) {
      best_count = cnt;
      best.coeffs = c;
      best.zeros = zeros;
      if (cnt == want) break;
    }
  }
  best.success = best_count == want;
  if (!best.zeros.empty() && best.success)
    best.zeros = sign_change_zeros(idx, best.coeffs, k, window.first, window.second, 8000);
  return best;
}

}  // namespace pwl
