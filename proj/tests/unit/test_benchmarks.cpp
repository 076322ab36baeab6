#include <doctest.h>

#include "jmfem/benchmarks.hpp"
#include "test_support.hpp"

using namespace jmfem;

namespace {

SymTensor2 fd_strain(const std::function<Vec2(const Vec2&)>& u, const Vec2& p, double h) {
  const Vec2 dux = (u(p + Vec2(h, 0)) - u(p - Vec2(h, 0))) / (2 * h);
  const Vec2 duy = (u(p + Vec2(0, h)) - u(p - Vec2(0, h))) / (2 * h);
  return {dux.x(), duy.y(), 0.5 * (dux.y() + duy.x())};
}

Vec2 fd_divergence(const std::function<SymTensor2(const Vec2&)>& s, const Vec2& p, double h) {
  const SymTensor2 dx = (s(p + Vec2(h, 0)) - s(p - Vec2(h, 0))) * (0.5 / h);
  const SymTensor2 dy = (s(p + Vec2(0, h)) - s(p - Vec2(0, h))) * (0.5 / h);
  return {dx.xx + dy.xy, dx.xy + dy.yy};
}

}  // namespace

TEST_CASE("poisson ratio recovered from the Lame pair") {
  for (double nu : {0.0, 0.3, 0.4, 0.49, 0.49999})
    CHECK(poisson_ratio(material_from_engineering(2.7, nu)) == doctest::Approx(nu).epsilon(1e-12));
}

TEST_CASE("hole solution") {
  const Material m = material_from_engineering(1.0, 0.3);
  const double a = 1.0, s_inf = 1.0;

  SUBCASE("stress at (a, 0)") {
    const auto [u, sig] = hole_exact(Vec2(a, 0.0), a, s_inf, m);
    CHECK(sig.xx == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(sig.xy == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(sig.yy == doctest::Approx(-s_inf).epsilon(1e-14));
  }

  SUBCASE("hole boundary is traction free") {
    for (int k = 0; k < 32; ++k) {
      const double th = 2.0 * M_PI * k / 32.0;
      const Vec2 n(std::cos(th), std::sin(th));
      const auto [u, sig] = hole_exact(a * n, a, s_inf, m);
      const Vec2 trac(sig.xx * n.x() + sig.xy * n.y(), sig.xy * n.x() + sig.yy * n.y());
      CHECK(trac.norm() < 1e-12 * s_inf);
    }
  }

  SUBCASE("far field approaches uniaxial tension") {
    // at r/a = 100 the perturbation terms are bounded by ~2.5e-4 sigma_inf
    for (int k = 0; k < 16; ++k) {
      const double th = 2.0 * M_PI * k / 16.0;
      const auto [u, sig] = hole_exact(100.0 * Vec2(std::cos(th), std::sin(th)), a, s_inf, m);
      CHECK(std::abs(sig.xx - s_inf) <= 2.6e-4 * s_inf);
      CHECK(std::abs(sig.yy) <= 2.6e-4 * s_inf);
      CHECK(std::abs(sig.xy) <= 2.6e-4 * s_inf);
    }
  }

  SUBCASE("divergence free and constitutive-consistent") {
    auto sfun = [&](const Vec2& p) { return hole_exact(p, a, s_inf, m).second; };
    auto ufun = [&](const Vec2& p) { return hole_exact(p, a, s_inf, m).first; };
    for (int k = 0; k < 20; ++k) {
      const double th = test::uniform(0, 2 * M_PI);
      const double r = test::uniform(1.3, 3.8);
      const Vec2 p = r * Vec2(std::cos(th), std::sin(th));
      CHECK(fd_divergence(sfun, p, 1e-6).norm() < 1e-6 * s_inf);
      const SymTensor2 sig_fd = elasticity_apply(m, fd_strain(ufun, p, 1e-6));
      const SymTensor2 sig = sfun(p);
      CHECK((sig_fd - sig).frobenius() < 1e-6 * sig.frobenius());
    }
  }

  SUBCASE("points inside the hole are rejected") {
    CHECK_THROWS_AS(hole_exact(Vec2(0.3, 0.0), a, s_inf, m), std::domain_error);
  }
}

TEST_CASE("L-shape solution") {
  const Material m = material_from_engineering(1.0, 0.3);
  constexpr double alpha = 0.544483737;

  auto sfun = [&](const Vec2& p) { return lshape_exact(p, m).second; };
  auto ufun = [&](const Vec2& p) { return lshape_exact(p, m).first; };
  auto random_point = [&](double rmin, double rmax) {
    // interior direction: stay away from the slit faces at +-45 degrees
    const double t = test::uniform(M_PI / 4 + 0.15, 7 * M_PI / 4 - 0.15);
    return test::uniform(rmin, rmax) * Vec2(std::cos(t), std::sin(t));
  };

  SUBCASE("divergence free") {
    for (int k = 0; k < 20; ++k) {
      const Vec2 p = random_point(0.2, 1.0);
      const double scale = sfun(p).frobenius();
      CHECK(fd_divergence(sfun, p, 1e-5).norm() < 1e-5 * scale);
    }
  }

  SUBCASE("stress scales like r^(alpha-1)") {
    for (int k = 0; k < 10; ++k) {
      const Vec2 p = random_point(0.05, 0.4);
      const double ratio = sfun(p).frobenius() / sfun(2.0 * p).frobenius();
      CHECK(ratio == doctest::Approx(std::pow(2.0, 1.0 - alpha)).epsilon(0.01));
    }
  }

  SUBCASE("displacement and stress satisfy the constitutive law") {
    for (int k = 0; k < 20; ++k) {
      const Vec2 p = random_point(0.2, 1.0);
      const SymTensor2 sig_fd = elasticity_apply(m, fd_strain(ufun, p, 1e-5));
      const SymTensor2 sig = sfun(p);
      CHECK((sig_fd - sig).frobenius() < 1e-5 * sig.frobenius());
    }
  }

  SUBCASE("slit faces are traction free") {
    for (double s : {1.0, -1.0})
      for (double r : {0.1, 0.5, 1.2}) {
        const Vec2 d = Vec2(1.0, s).normalized();
        const Vec2 n(-d.y(), d.x());
        const SymTensor2 sig = sfun(r * d);
        const Vec2 trac(sig.xx * n.x() + sig.xy * n.y(), sig.xy * n.x() + sig.yy * n.y());
        // alpha and Q carry nine digits, which limits the cancellation
        CHECK(trac.norm() < 1e-7 * sig.frobenius());
      }
  }

  SUBCASE("origin is rejected") {
    CHECK_THROWS_AS(lshape_exact(Vec2(0, 0), m), std::domain_error);
  }
}

TEST_CASE("manufactured benchmark") {
  const Benchmark b = make_manufactured_benchmark(1.0, 0.3, 2);

  SUBCASE("u vanishes identically on the Dirichlet edge x = 0") {
    for (int k = 0; k <= 20; ++k) {
      const Vec2 p(0.0, k / 20.0);
      CHECK(b.exact_u(p).norm() == 0.0);
    }
  }

  SUBCASE("sigma equals A eps(u) via finite differences") {
    for (int k = 0; k < 30; ++k) {
      const Vec2 p(test::uniform(0.05, 0.95), test::uniform(0.05, 0.95));
      const SymTensor2 sig_fd = elasticity_apply(b.material, fd_strain(b.exact_u, p, 1e-6));
      CHECK((sig_fd - b.exact_sigma(p)).frobenius() < 1e-7 * (1.0 + b.exact_sigma(p).frobenius()));
    }
  }

  SUBCASE("body load matches the finite-difference divergence") {
    auto sfun = b.exact_sigma;
    for (int k = 0; k < 50; ++k) {
      const Vec2 p(test::uniform(0.05, 0.95), test::uniform(0.05, 0.95));
      const Vec2 f_fd = -fd_divergence(sfun, p, 1e-6);
      CHECK((f_fd - b.body_load(p)).norm() < 1e-6 * (1.0 + b.body_load(p).norm()));
    }
  }
}
