#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/thermo.hpp"

using namespace casimir;

namespace {

// independent series oracle for Li_3
double li3_series(double z) {
  double s = 0.0, zk = 1.0;
  for (int k = 1; k < 4000; ++k) {
    zk *= z;
    s += zk / (double(k) * k * k);
  }
  return s;
}

std::vector<double> loggrid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
  return g;
}

}  // namespace

TEST_CASE("drude zero-temperature entropy: series vs quadrature oracle") {
  const double a = 1.0, hwp = 9.0;
  const double closed = drude_entropy_T0_kB(a, hwp);
  // reference value quoted to four digits
  CHECK(closed == doctest::Approx(-0.02196).epsilon(5e-4));
  // independent oracle: the l=0 TE term lost by dissipation
  auto f = [&](double k) {
    const double w = hwp / hbar_c;
    const double kl = std::hypot(k, w);
    const double r = (k - kl) / (k + kl);
    return k * std::log1p(-r * r * std::exp(-2.0 * a * k));
  };
  const double oracle =
      integrate_semi_infinite(f, 1.0 / (2.0 * a), 1e-12).value / (4.0 * pi);
  CHECK(closed == doctest::Approx(oracle).epsilon(1e-3));
  CHECK(closed < 0.0);
}

TEST_CASE("drude entropy series guards its validity range") {
  CHECK_THROWS_AS(drude_entropy_T0_kB(0.5, 1.0), SeriesOutOfRange);
}

TEST_CASE("dc-dielectric zero-temperature entropy against the Li3 series") {
  const double a = 1.0, eps0 = 2.0;
  const double z = (eps0 - 1.0) / (eps0 + 1.0);
  const double oracle = (zeta3 - li3_series(z * z)) / (16.0 * pi * a * a);
  const double closed = dielectric_dc_entropy_T0_kB(a, eps0);
  CHECK(closed == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(closed == doctest::Approx(0.0216719).epsilon(1e-4));

  // eps0 -> 1+: the full conductor value; eps0 -> inf: vanishing anomaly
  CHECK(dielectric_dc_entropy_T0_kB(a, 1.0 + 1e-9) ==
        doctest::Approx(zeta3 / (16.0 * pi)).epsilon(1e-6));
  CHECK(std::abs(dielectric_dc_entropy_T0_kB(a, 1e8)) < 1e-8);
}

TEST_CASE("atom-plate dc anomaly closed form") {
  const double a = 1.0, alpha0 = 1e-3;
  // eps0 = 3 sits at the symmetric point where z = 1 - z = 1/2
  CHECK(cp_dc_entropy_T0_kB(a, alpha0, 3.0) ==
        doctest::Approx(alpha0 / (8.0 * a * a * a)).epsilon(1e-14));
  // vacuum + conductivity carries the full l=0 discontinuity
  CHECK(cp_dc_entropy_T0_kB(a, alpha0, 1.0 + 1e-12) ==
        doctest::Approx(alpha0 / (4.0 * a * a * a)).epsilon(1e-9));
  // an already-metallic plate gains nothing
  CHECK(std::abs(cp_dc_entropy_T0_kB(a, alpha0, 1e9)) < 1e-11);
  CHECK_THROWS_AS(cp_dc_entropy_T0_kB(a, alpha0, 0.5), DomainError);
}

TEST_CASE("case classification") {
  GrapheneParams p;
  CHECK(classify_case(p) == CaseLabel::Pristine);
  p.gap_eV = 0.2;
  p.mu_eV = 0.05;
  CHECK(classify_case(p) == CaseLabel::Gapped);
  p.mu_eV = 0.1;
  CHECK(classify_case(p) == CaseLabel::Critical);
  p.gap_eV = 0.0;
  CHECK(classify_case(p) == CaseLabel::Doped);
  p.gap_eV = 0.2;
  p.mu_eV = 0.1 + 1e-12;  // inside the classification tolerance
  CHECK(classify_case(p) == CaseLabel::Critical);
  CHECK(classify_case(p, 1e-14) == CaseLabel::Doped);
}

TEST_CASE("expected asymptotes carry the table exponents") {
  GrapheneParams p;
  p.gap_eV = 0.2;
  p.mu_eV = 0.05;
  const double a = 1.0, alpha0 = 1e-3, T = 10.0;
  CHECK(expected_asymptote(CaseLabel::Pristine, SystemKind::AtomPlate, a, p,
                           alpha0, T)
            .exponent == 2.0);
  auto ps = expected_asymptote(CaseLabel::Pristine, SystemKind::PlatePlate, a,
                               p, 0.0, T);
  CHECK(ps.exponent == 2.0);
  CHECK(ps.log_factor);
  CHECK(expected_asymptote(CaseLabel::Gapped, SystemKind::PlatePlate, a, p,
                           0.0, T)
            .exponent == 4.0);
  CHECK(expected_asymptote(CaseLabel::Doped, SystemKind::PlatePlate, a, p, 0.0,
                           T)
            .exponent == 1.0);
  auto cr = expected_asymptote(CaseLabel::Critical, SystemKind::PlatePlate, a,
                               p, 0.0, T);
  CHECK(cr.exponent == 0.0);
  CHECK(cr.scale_estimate == doctest::Approx(1.0 / (a * a)));
  auto ca = expected_asymptote(CaseLabel::Critical, SystemKind::AtomPlate, a,
                               p, alpha0, T);
  CHECK(ca.scale_estimate == doctest::Approx(alpha0 / (a * a * a)));
}

TEST_CASE("validity windows follow the case's small parameters") {
  GrapheneParams gp;
  gp.gap_eV = 0.2;
  CHECK(in_validity_window(CaseLabel::Gapped, gp, 2.0, 5.0));
  CHECK_FALSE(in_validity_window(CaseLabel::Gapped, gp, 2.0, 50.0));
  GrapheneParams pr;
  CHECK(in_validity_window(CaseLabel::Pristine, pr, 0.05, 5.0));
  CHECK_FALSE(in_validity_window(CaseLabel::Pristine, pr, 0.05, 15.0));
  GrapheneParams dp;
  dp.mu_eV = 0.1;
  CHECK(in_validity_window(CaseLabel::Doped, dp, 1.0, 10.0));
  CHECK_FALSE(in_validity_window(CaseLabel::Doped, dp, 1.0, 40.0));
}

TEST_CASE("entropy agrees with a direct free-energy difference quotient") {
  ThreadPool pool(2);
  auto prov = ReflectionProvider::ideal_metal();
  PlatePlateSystem s{prov, prov, 1.0};
  const double T = 300.0;
  const EntropyResult e = entropy(s, T, 1e-7, &pool);
  const double h = 5.0;
  const double Fp = casimir_free_energy(s, T + h, 1e-11, &pool);
  const double Fm = casimir_free_energy(s, T - h, 1e-11, &pool);
  const double direct = -(Fp - Fm) / (2.0 * h);
  CHECK(e.S == doctest::Approx(direct).epsilon(1e-3));
}

TEST_CASE("ideal-metal plates: entropy positive and vanishing at low T") {
  ThreadPool pool(2);
  auto prov = ReflectionProvider::ideal_metal();
  PlatePlateSystem s{prov, prov, 1.0};
  ScanResult sc = low_T_scan(s, loggrid(1.0, 20.0, 8), 1e-6, &pool);
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : sc.rows) {
    CHECK(r.S >= 0.0);
    pts.emplace_back(r.T_K, r.S / k_boltzmann);
  }
  auto fit = fit_scaling(pts, false);
  CHECK(fit.exponent > 0.5);
  double lim, err;
  extrapolate_entropy_limit(sc, &lim, &err);
  CHECK(std::abs(lim) <= 2.0 * err + 1e-10);
}

TEST_CASE("plain dielectric plates satisfy the Nernst heat theorem") {
  ThreadPool pool(2);
  auto prov = ReflectionProvider::fresnel(DielectricModel::constant_eps(2.0));
  PlatePlateSystem s{prov, prov, 1.0};
  ScanResult sc = low_T_scan(s, loggrid(2.0, 25.0, 8), 1e-6, &pool);
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : sc.rows) pts.emplace_back(r.T_K, r.S / k_boltzmann);
  auto fit = fit_scaling(pts, false);
  CHECK(fit.exponent > 0.5);
  double lim, err;
  extrapolate_entropy_limit(sc, &lim, &err);
  CHECK(std::abs(lim) <= 2.0 * err + 1e-10);
}

TEST_CASE("nernst verdict logic on synthetic scans") {
  ScanResult sc;
  sc.kind = SystemKind::PlatePlate;
  sc.a_um = 2.0;
  sc.graphene = true;
  sc.params.gap_eV = 0.2;

  SUBCASE("clean quartic scaling is Satisfied") {
    for (double T : {2.0, 3.0, 4.5, 6.0, 8.0, 10.0, 13.0, 16.0}) {
      ScanRow r;
      r.T_K = T;
      r.S = 3e-9 * std::pow(T, 4) * k_boltzmann;
      r.in_window = true;
      sc.rows.push_back(r);
    }
    NernstReport rep = nernst_verdict(sc, CaseLabel::Gapped);
    CHECK(rep.fit.exponent == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(rep.verdict == Verdict::Satisfied);
    CHECK(rep.expected_exponent == 4.0);
  }

  SUBCASE("a plateau violates the theorem") {
    sc.params.mu_eV = 0.1;
    for (double T : {2.0, 3.0, 4.5, 6.0, 8.0, 10.0, 13.0, 16.0}) {
      ScanRow r;
      r.T_K = T;
      r.S = (0.25 + 1e-5 * T) * k_boltzmann;
      r.in_window = true;
      sc.rows.push_back(r);
    }
    NernstReport rep = nernst_verdict(sc, CaseLabel::Critical);
    CHECK(std::abs(rep.fit.exponent) < 0.05);
    CHECK(rep.verdict == Verdict::Violated);
    CHECK(rep.entropy_limit == doctest::Approx(0.25).epsilon(0.02));
  }

  SUBCASE("too few in-window rows is degenerate") {
    for (double T : {2.0, 3.0, 4.5, 6.0, 8.0}) {
      ScanRow r;
      r.T_K = T;
      r.S = 1e-6 * T * k_boltzmann;
      r.in_window = T < 5.0;
      sc.rows.push_back(r);
    }
    CHECK_THROWS_AS(nernst_verdict(sc, CaseLabel::Gapped), DegenerateData);
  }
}

TEST_CASE("scan rejects a non-increasing grid") {
  auto prov = ReflectionProvider::ideal_metal();
  PlatePlateSystem s{prov, prov, 1.0};
  std::vector<double> bad{5.0, 4.0, 6.0};
  CHECK_THROWS_AS(low_T_scan(s, bad, 1e-6), DomainError);
}
