#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/response.hpp"

using namespace casimir;

TEST_CASE("permittivity: constant dielectric") {
  auto m = DielectricModel::constant_eps(2.0);
  CHECK(permittivity_at(m, 0.01) == 2.0);
  CHECK(permittivity_at(m, 7.3) == 2.0);
}

TEST_CASE("permittivity: plasma and drude reference points") {
  auto pl = DielectricModel::plasma(9.0);
  CHECK(permittivity_at(pl, 9.0) == doctest::Approx(2.0).epsilon(1e-14));

  auto dr = DielectricModel::drude(9.0, 0.03);
  // 1 + 81/(0.03*0.06)
  CHECK(permittivity_at(dr, 0.03) == doctest::Approx(45001.0).epsilon(1e-12));
}

TEST_CASE("permittivity: divergent variants reject xi = 0") {
  CHECK_THROWS_AS(permittivity_at(DielectricModel::drude(9.0, 0.03), 0.0),
                  DomainError);
  CHECK_THROWS_AS(
      permittivity_at(DielectricModel::constant_eps_dc(2.0, 1e-5), 0.0),
      DomainError);
}

TEST_CASE("permittivity >= 1 on the imaginary axis for every variant") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> lx(-4.0, 2.0);
  const DielectricModel models[] = {
      DielectricModel::plasma(9.0), DielectricModel::drude(9.0, 0.03),
      DielectricModel::constant_eps(1.0), DielectricModel::constant_eps(50.0),
      DielectricModel::constant_eps_dc(2.0, 1e-4)};
  for (const auto& m : models) {
    for (int i = 0; i < 200; ++i) {
      const double xi = std::pow(10.0, lx(rng));
      const double eps = permittivity_at(m, xi);
      CHECK(eps >= 1.0);
      // monotone decreasing in xi
      CHECK(permittivity_at(m, 2.0 * xi) <= eps);
    }
  }
}

TEST_CASE("drude approaches plasma pointwise as the relaxation vanishes") {
  const double hwp = 9.0;
  auto pl = DielectricModel::plasma(hwp);
  auto dr = DielectricModel::drude(hwp, 1e-6 * hwp);
  for (double xi : {1.0, 3.0, 9.0, 30.0}) {
    const double a = permittivity_at(dr, xi);
    const double b = permittivity_at(pl, xi);
    CHECK(std::abs(a - b) <= 1e-5 * b);
  }
}

TEST_CASE("polarizability: oscillator model") {
  auto st = AtomModel::static_atom(3.0);
  CHECK(polarizability_at(st, 5.0) == 3.0);

  auto osc = AtomModel::oscillator(3.0, 10.0);
  CHECK(polarizability_at(osc, 0.0) == 3.0);
  CHECK(polarizability_at(osc, 10.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(polarizability_at(osc, 30.0) == doctest::Approx(0.3).epsilon(1e-14));
  // monotone decreasing
  CHECK(polarizability_at(osc, 2.0) > polarizability_at(osc, 4.0));
}

TEST_CASE("hydrodynamic sheet: default wave number") {
  HydrodynamicSheet s;
  CHECK(s.K_per_um == doctest::Approx(0.675).epsilon(1e-12));
  CHECK(HydrodynamicSheet::from_per_m(6.75e5).K_per_um ==
        doctest::Approx(0.675).epsilon(1e-12));
}

TEST_CASE("model validation catches bad parameters") {
  CHECK_THROWS_AS(DielectricModel::plasma(-1.0).validate(), ConfigError);
  CHECK_THROWS_AS(DielectricModel::constant_eps(0.5).validate(), ConfigError);
  CHECK_THROWS_AS(AtomModel::oscillator(1.0, -2.0).validate(), ConfigError);
  CHECK_THROWS_AS(HydrodynamicSheet{-1.0}.validate(), ConfigError);
}
