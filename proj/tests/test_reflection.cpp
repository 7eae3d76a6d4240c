#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/constants.hpp"
#include "casimir/reflection.hpp"

using namespace casimir;

TEST_CASE("fresnel: vacuum reflects nothing") {
  auto m = DielectricModel::constant_eps(1.0);
  for (double xi : {0.5, 3.0}) {
    const ReflectionPair r = fresnel(m, xi, 1.0);
    CHECK(r.r_tm == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.r_te == doctest::Approx(0.0).epsilon(1e-15));
  }
}

TEST_CASE("fresnel: large permittivity approaches the ideal metal") {
  auto m = DielectricModel::constant_eps(1e10);
  const ReflectionPair r = fresnel(m, 1.0, 1.0);
  CHECK(r.r_tm == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.r_te == doctest::Approx(-1.0).epsilon(1e-4));
}

TEST_CASE("fresnel: zero-frequency dichotomy between drude and plasma") {
  const double hwp = 9.0, k = 1.0;
  SUBCASE("drude TE limit vanishes") {
    const ReflectionPair r0 = fresnel(DielectricModel::drude(hwp, 0.03), 0.0, k);
    CHECK(r0.r_te == 0.0);
    CHECK(r0.r_tm == 1.0);
    // and it is the xi -> 0+ limit of the finite-frequency coefficient
    // (the approach is linear in xi)
    const ReflectionPair rs =
        fresnel(DielectricModel::drude(hwp, 0.03), 1e-9, k);
    CHECK(std::abs(rs.r_te) < 1e-4);
  }
  SUBCASE("plasma TE limit stays finite and negative") {
    const ReflectionPair r0 = fresnel(DielectricModel::plasma(hwp), 0.0, k);
    const double w = hwp / hbar_c;
    const double expected = (k - std::hypot(k, w)) / (k + std::hypot(k, w));
    CHECK(r0.r_te == doctest::Approx(expected).epsilon(1e-14));
    CHECK(r0.r_te < -0.9);
    const ReflectionPair rs = fresnel(DielectricModel::plasma(hwp), 1e-7, k);
    CHECK(rs.r_te == doctest::Approx(expected).epsilon(1e-6));
  }
  SUBCASE("dc conductivity forces the TM limit to one") {
    const ReflectionPair r0 =
        fresnel(DielectricModel::constant_eps_dc(2.0, 1e-6), 0.0, k);
    CHECK(r0.r_tm == 1.0);
    CHECK(r0.r_te == 0.0);
  }
  SUBCASE("plain dielectric TM limit is (eps-1)/(eps+1)") {
    const ReflectionPair r0 =
        fresnel(DielectricModel::constant_eps(2.0), 0.0, k);
    CHECK(r0.r_tm == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(r0.r_te == 0.0);
  }
}

TEST_CASE("fresnel rejects the origin node") {
  CHECK_THROWS_AS(fresnel(DielectricModel::constant_eps(2.0), 0.0, 0.0),
                  DomainError);
}

TEST_CASE("hydrodynamic sheet coefficients") {
  HydrodynamicSheet s;  // K = 0.675 1/um
  SUBCASE("TM is perfect at zero frequency") {
    CHECK(hydrodynamic(s, 0.0, 2.0).r_tm == doctest::Approx(1.0));
  }
  SUBCASE("TE at zero frequency is -K/(K+k)") {
    const double k = 1.3;
    CHECK(hydrodynamic(s, 0.0, k).r_te ==
          doctest::Approx(-s.K_per_um / (s.K_per_um + k)).epsilon(1e-15));
  }
  SUBCASE("k = K gives TE = -1/2") {
    CHECK(hydrodynamic(s, 0.0, s.K_per_um).r_te ==
          doctest::Approx(-0.5).epsilon(1e-15));
  }
}

TEST_CASE("graphene: pristine static coefficients are k-independent") {
  GrapheneParams p;
  const double r_tm_expected =
      p.alpha_fs * pi / (p.alpha_fs * pi + 2.0 * p.vf_ratio);
  const double r_te_expected =
      -p.alpha_fs * pi * p.vf_ratio / (p.alpha_fs * pi * p.vf_ratio + 2.0);
  for (double k : {0.01, 1.0, 40.0}) {
    const ReflectionPair r = graphene_pt_T0(p, 0.0, k);
    CHECK(r.r_tm == doctest::Approx(r_tm_expected).epsilon(1e-12));
    CHECK(r.r_te == doctest::Approx(r_te_expected).epsilon(1e-9));
  }
  CHECK(r_tm_expected == doctest::Approx(0.7747).epsilon(2e-4));
  CHECK(r_te_expected == doctest::Approx(-3.82e-5).epsilon(2e-3));
}

TEST_CASE("graphene: doped sheet has no static TE reflection at T = 0") {
  GrapheneParams p;
  p.mu_eV = 0.1;
  for (double k : {0.1, 1.0, 20.0}) {
    // below the interband threshold the transverse tensor component vanishes
    const ReflectionPair r = graphene_pt_T0(p, 0.0, k);
    CHECK(std::abs(r.r_te) < 1e-9);
    CHECK(r.r_tm > 0.9);  // dc-metal-like TM response from the Fermi sea
  }
}

TEST_CASE("graphene: huge gap suppresses both channels") {
  GrapheneParams p;
  p.gap_eV = 1e5;
  const ReflectionPair r = graphene_pt(p, 1, 1.0, 300.0);
  CHECK(std::abs(r.r_tm) < 1e-6);
  CHECK(std::abs(r.r_te) < 1e-6);
}

TEST_CASE("correlation-function and conductivity forms reproduce the tensor "
          "form") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> lk(-3.0, std::log10(50.0));
  std::uniform_int_distribution<long> ldist(1, 60);
  std::uniform_real_distribution<double> Tdist(0.5, 300.0);
  std::uniform_real_distribution<double> gm(0.0, 0.5);
  for (int i = 0; i < 200; ++i) {
    GrapheneParams p;
    p.gap_eV = gm(rng);
    p.mu_eV = gm(rng);
    const long l = ldist(rng);
    const double k = std::pow(10.0, lk(rng));
    const double T = Tdist(rng);
    const ReflectionPair a = graphene_pt(p, l, k, T);
    const ReflectionPair b = graphene_correlation(p, l, k, T);
    const ReflectionPair c = graphene_conductivity(p, l, k, T);
    CHECK(std::abs(a.r_tm - b.r_tm) < 1e-12);
    CHECK(std::abs(a.r_te - b.r_te) < 1e-12);
    CHECK(std::abs(a.r_tm - c.r_tm) < 1e-12);
    CHECK(std::abs(a.r_te - c.r_te) < 1e-12);
  }
}

TEST_CASE("correlation/conductivity TE channel is undefined at l = 0") {
  GrapheneParams p;
  CHECK_THROWS_AS(graphene_correlation(p, 0, 1.0, 300.0), DomainError);
  CHECK_THROWS_AS(graphene_conductivity(p, 0, 1.0, 300.0), DomainError);
  // the provider falls back to the tensor form there
  auto prov = ReflectionProvider::graphene_correlation(p);
  const ReflectionPair r = prov.at_node(0, 1.0, 300.0);
  const ReflectionPair ref = graphene_pt(p, 0, 1.0, 300.0);
  CHECK(r.r_tm == ref.r_tm);
  CHECK(r.r_te == ref.r_te);
}

TEST_CASE("ideal metal provider returns exactly (1, -1) everywhere") {
  auto prov = ReflectionProvider::ideal_metal();
  for (long l : {0L, 3L, 40L}) {
    const ReflectionPair r = prov.at_node(l, 0.7, 77.0);
    CHECK(r.r_tm == 1.0);
    CHECK(r.r_te == -1.0);
  }
}

TEST_CASE("reflection bounds hold for every provider on random nodes") {
  GrapheneParams gp;
  gp.gap_eV = 0.15;
  gp.mu_eV = 0.04;
  const ReflectionProvider providers[] = {
      ReflectionProvider::ideal_metal(),
      ReflectionProvider::fresnel(DielectricModel::plasma(9.0)),
      ReflectionProvider::fresnel(DielectricModel::drude(9.0, 0.03)),
      ReflectionProvider::fresnel(DielectricModel::constant_eps(4.0)),
      ReflectionProvider::fresnel(DielectricModel::constant_eps_dc(2.0, 1e-5)),
      ReflectionProvider::hydrodynamic(HydrodynamicSheet{}),
      ReflectionProvider::graphene_pt(GrapheneParams{}),
      ReflectionProvider::graphene_pt(gp),
  };
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> lk(-3.0, 1.7);
  std::uniform_int_distribution<long> ldist(0, 60);
  std::uniform_real_distribution<double> Tdist(0.5, 300.0);
  for (const auto& prov : providers) {
    for (int i = 0; i < 100; ++i) {
      const double k = std::pow(10.0, lk(rng));
      const ReflectionPair r = prov.at_node(ldist(rng), k, Tdist(rng));
      CHECK(r.r_tm >= -1e-12);
      CHECK(r.r_tm <= 1.0 + 1e-12);
      CHECK(r.r_te <= 1e-12);
      CHECK(r.r_te >= -1.0 - 1e-12);
    }
  }
}

TEST_CASE("complex T=0 evaluation matches the real path on the real axis") {
  GrapheneParams gp;
  gp.mu_eV = 0.08;
  gp.gap_eV = 0.02;
  const ReflectionProvider providers[] = {
      ReflectionProvider::fresnel(DielectricModel::plasma(9.0)),
      ReflectionProvider::hydrodynamic(HydrodynamicSheet{}),
      ReflectionProvider::graphene_pt(GrapheneParams{}),
      ReflectionProvider::graphene_pt(gp),
  };
  for (const auto& prov : providers) {
    for (double xi : {0.01, 0.4, 2.0}) {
      for (double k : {0.2, 5.0}) {
        const ReflectionPair re = prov.t0(xi, k);
        const ReflectionPairC rc = prov.t0_complex({xi, 0.0}, k);
        CHECK(std::abs(rc.r_tm.real() - re.r_tm) < 1e-12);
        CHECK(std::abs(rc.r_te.real() - re.r_te) < 1e-12);
        CHECK(std::abs(rc.r_tm.imag()) < 1e-12);
        CHECK(std::abs(rc.r_te.imag()) < 1e-12);
      }
    }
  }
}

TEST_CASE("delta_T vanishes identically for temperature-independent models") {
  auto prov = ReflectionProvider::fresnel(DielectricModel::drude(9.0, 0.03));
  CHECK_FALSE(prov.has_explicit_temperature_dependence());
  const ReflectionPair d = prov.delta_T(3, 1.0, 50.0);
  CHECK(d.r_tm == 0.0);
  CHECK(d.r_te == 0.0);
}

TEST_CASE("graphene delta_T is the exact difference r(T) - r(0)") {
  GrapheneParams p;
  p.mu_eV = 0.02;
  auto prov = ReflectionProvider::graphene_pt(p);
  const long l = 2;
  const double k = 3.0, T = 150.0;
  const auto n = prov.node_eval(l, k, T);
  const double xi = matsubara_energy(T, l);
  const ReflectionPair rT = prov.at_node(l, k, T);
  const ReflectionPair r0 = prov.t0(xi, k);
  CHECK(n.delta.r_tm ==
        doctest::Approx(rT.r_tm - r0.r_tm).epsilon(1e-9));
  CHECK(n.delta.r_te ==
        doctest::Approx(rT.r_te - r0.r_te).epsilon(1e-9));
}
