#include <doctest.h>

#include "jmfem/material.hpp"
#include "test_support.hpp"

using namespace jmfem;

TEST_CASE("engineering constants to Lame pair") {
  const Material m0 = material_from_engineering(1.0, 0.0);
  CHECK(m0.lambda == doctest::Approx(0.0));
  CHECK(m0.mu == doctest::Approx(0.5));

  const Material m3 = material_from_engineering(1.0, 0.3);
  CHECK(m3.lambda == doctest::Approx(0.3 / (1.3 * 0.4)).epsilon(1e-12));
  CHECK(m3.mu == doctest::Approx(1.0 / 2.6).epsilon(1e-12));
  CHECK(m3.lambda == doctest::Approx(0.576923).epsilon(1e-6));
  CHECK(m3.mu == doctest::Approx(0.384615).epsilon(1e-6));

  const Material mi = material_from_engineering(1.0, 0.49999);
  CHECK(mi.lambda == doctest::Approx(16666.1).epsilon(1e-4));
  CHECK(mi.mu == doctest::Approx(0.333336).epsilon(1e-5));

  CHECK_THROWS_AS(material_from_engineering(1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(material_from_engineering(1.0, 0.7), std::invalid_argument);
  CHECK_THROWS_AS(material_from_engineering(1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(material_from_engineering(0.0, 0.3), std::invalid_argument);
}

TEST_CASE("deviatoric part") {
  const SymTensor2 id = SymTensor2::identity();
  CHECK(id.deviatoric().frobenius() == doctest::Approx(0.0));

  const SymTensor2 d = SymTensor2{2, 0, 0}.deviatoric();
  CHECK(d.xx == doctest::Approx(1.0));
  CHECK(d.yy == doctest::Approx(-1.0));
  CHECK(d.xy == doctest::Approx(0.0));

  const SymTensor2 e = SymTensor2{3, 1, 1}.deviatoric();
  CHECK(e.xx == doctest::Approx(1.0));
  CHECK(e.yy == doctest::Approx(-1.0));
  CHECK(e.xy == doctest::Approx(1.0));

  for (int i = 0; i < 100; ++i)
    CHECK(std::abs(test::random_tensor(10.0).deviatoric().trace()) < 1e-13);
}

TEST_CASE("compliance and elasticity actions") {
  const Material soft{0.5, 0.0};
  const SymTensor2 tau = test::random_tensor();
  const SymTensor2 ct = compliance_apply(soft, tau);
  CHECK((ct - tau).frobenius() < 1e-15);

  const Material m{test::uniform(0.1, 2.0), test::uniform(0.0, 5.0)};
  const SymTensor2 ci = compliance_apply(m, SymTensor2::identity());
  const double expected = 1.0 / (2.0 * m.mu + 2.0 * m.lambda);
  CHECK(ci.xx == doctest::Approx(expected).epsilon(1e-13));
  CHECK(ci.yy == doctest::Approx(expected).epsilon(1e-13));
  CHECK(std::abs(ci.xy) < 1e-15);

  CHECK((elasticity_apply(soft, tau) - tau).frobenius() < 1e-15);
  const SymTensor2 e4 = elasticity_apply(Material{1.0, 1.0}, SymTensor2::identity());
  CHECK(e4.xx == doctest::Approx(4.0));
  CHECK(e4.yy == doctest::Approx(4.0));
  CHECK(std::abs(e4.xy) < 1e-15);

  // lambda drops out on trace-free input
  const SymTensor2 dev = test::random_tensor().deviatoric();
  for (double lambda : {0.0, 1.0, 1e4}) {
    const Material md{1.7, lambda};
    const SymTensor2 r = elasticity_apply(md, dev);
    CHECK((r - 2.0 * 1.7 * dev).frobenius() < 1e-12 * dev.frobenius());
  }
}

TEST_CASE("compliance/elasticity round trip over the parameter range") {
  for (int i = 0; i < 1000; ++i) {
    const Material m{test::uniform(1e-2, 1e2), test::uniform(0.0, 1e6)};
    const SymTensor2 tau = test::random_tensor(test::uniform(0.1, 10.0));
    const SymTensor2 back = elasticity_apply(m, compliance_apply(m, tau));
    CHECK((back - tau).frobenius() <= 1e-12 * std::max(tau.frobenius(), 1e-30));
    const SymTensor2 fwd = compliance_apply(m, elasticity_apply(m, tau));
    CHECK((fwd - tau).frobenius() <= 1e-12 * std::max(tau.frobenius(), 1e-30));
  }
}

TEST_CASE("energy density and its deviatoric/trace split") {
  CHECK(energy_density(Material{1.0, 2.0}, SymTensor2{}) == doctest::Approx(0.0));

  CHECK(energy_density(Material{0.5, 0.0}, SymTensor2{1, -1, 0}) == doctest::Approx(2.0));
  CHECK(energy_density(Material{1.0, 1.0}, SymTensor2::identity()) == doctest::Approx(1.0));

  for (int i = 0; i < 1000; ++i) {
    const Material m{test::uniform(1e-2, 1e2), test::uniform(0.0, 1e6)};
    const SymTensor2 tau = test::random_tensor(test::uniform(0.1, 10.0));
    const double lhs = energy_density(m, tau);
    const double tr = tau.trace();
    const double split = tau.deviatoric().frobenius_sq() / (2.0 * m.mu) +
                         tr * tr / (2.0 * m.mu + 2.0 * m.lambda);
    CHECK(lhs == doctest::Approx(split).epsilon(1e-12));
    CHECK(lhs >= 0.0);
  }
}

TEST_CASE("compliance norm bound |C tau| <= |tau| / mu") {
  for (int i = 0; i < 500; ++i) {
    const Material m{test::uniform(1e-2, 1e2), test::uniform(0.0, 1e6)};
    const SymTensor2 tau = test::random_tensor(5.0);
    CHECK(compliance_apply(m, tau).frobenius() <= (1.0 + 1e-12) / m.mu * tau.frobenius());
  }
}
