#include <doctest.h>

#include "jmfem/assembly.hpp"
#include "jmfem/estimators.hpp"
#include "jmfem/mesh_generators.hpp"
#include "jmfem/norms.hpp"
#include "jmfem/postprocess.hpp"
#include "jmfem/solver.hpp"
#include "jmfem/study.hpp"
#include "test_support.hpp"

using namespace jmfem;

namespace {

const SymTensor2 kConstStress{1.3, -0.7, 0.25};

TractionField const_traction(const SymTensor2& s) {
  return [s](const Vec2&, const Vec2& n) -> Vec2 {
    return {s.xx * n.x() + s.xy * n.y(), s.xy * n.x() + s.yy * n.y()};
  };
}

VectorField zero_load() {
  return [](const Vec2&) { return Vec2::Zero(); };
}

}  // namespace

TEST_CASE("hand-solvable 2x2 saddle system") {
  SaddleSystem sys;
  sys.n_stress = 1;
  sys.n_disp = 1;
  sys.matrix.resize(2, 2);
  std::vector<Eigen::Triplet<double>> trip{{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}};
  sys.matrix.setFromTriplets(trip.begin(), trip.end());
  sys.rhs = Eigen::Vector2d(1.0, 1.0);
  const auto [sol, rep] = solve_saddle(sys, 1e-10);
  CHECK(sol.stress[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sol.displacement[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(rep.success);
  CHECK(rep.rel_residual <= 1e-10);
}

TEST_CASE("singular systems are reported") {
  SaddleSystem sys;
  sys.n_stress = 1;
  sys.n_disp = 1;
  sys.matrix.resize(2, 2);
  std::vector<Eigen::Triplet<double>> trip{{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 1, 1.0}};
  sys.matrix.setFromTriplets(trip.begin(), trip.end());
  sys.rhs = Eigen::Vector2d(1.0, 0.0);
  CHECK_THROWS_AS(solve_saddle(sys, 1e-10), std::runtime_error);
}

TEST_CASE("tolerance validation") {
  SaddleSystem sys;
  sys.n_stress = 1;
  sys.n_disp = 0;
  sys.matrix.resize(1, 1);
  std::vector<Eigen::Triplet<double>> trip{{0, 0, 1.0}};
  sys.matrix.setFromTriplets(trip.begin(), trip.end());
  sys.rhs = Eigen::VectorXd::Ones(1);
  CHECK_THROWS_AS(solve_saddle(sys, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(solve_saddle(sys, 0.0), std::invalid_argument);
}

TEST_CASE("single all-Neumann triangle with zero data has the zero solution") {
  const MacroMesh mesh = test::one_triangle_mesh(test::random_triangle());
  const Discretization disc = build_discretization(mesh);
  const Material m = material_from_engineering(1.0, 0.3);
  const SaddleSystem sys =
      assemble(disc, m, zero_load(), [](const Vec2&, const Vec2&) { return Vec2::Zero(); });
  const auto [sol, rep] = solve_saddle(sys, 1e-10);
  CHECK(sol.stress.norm() < 1e-12);
  CHECK(sol.displacement.norm() < 1e-12);
}

TEST_CASE("assembled matrix is structurally symmetric") {
  const MacroMesh mesh = generate_unit_square(2);
  const Discretization disc = build_discretization(mesh);
  const Material m = material_from_engineering(1.0, 0.3);
  const SaddleSystem sys = assemble(disc, m, zero_load(), const_traction(kConstStress));
  const Eigen::SparseMatrix<double> diff = Eigen::SparseMatrix<double>(sys.matrix.transpose()) - sys.matrix;
  double asym = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(diff, k); it; ++it)
      asym = std::max(asym, std::abs(it.value()));
  CHECK(asym == 0.0);
}

TEST_CASE("constant-stress patch test recovers the stress exactly") {
  for (int n : {1, 2, 3}) {
    const MacroMesh mesh = generate_unit_square(n);
    const Discretization disc = build_discretization(mesh);
    const Material m = material_from_engineering(1.0, 0.3);
    const SaddleSystem sys = assemble(disc, m, zero_load(), const_traction(kConstStress));
    const auto [sol, rep] = solve_saddle(sys, 1e-10);

    double err_sq = integrate(mesh, 4, [&](int t, const Vec2& p) {
      return (stress_at(disc, sol.stress, t, p) - kConstStress).frobenius_sq();
    });
    CHECK(std::sqrt(err_sq) <= 1e-10 * kConstStress.frobenius());
    CHECK(sol.multipliers.norm() < 1e-9);
  }
}

TEST_CASE("patch test on an unstructured refined mesh") {
  MacroMesh mesh = generate_lshape(1.0);
  mesh = refine(mesh, {0, 2});
  mesh = refine(mesh, {1, 3, 4});
  const Discretization disc = build_discretization(mesh);
  const Material m = material_from_engineering(1.0, 0.4);
  const SaddleSystem sys = assemble(disc, m, zero_load(), const_traction(kConstStress));
  const auto [sol, rep] = solve_saddle(sys, 1e-10);
  double err_sq = integrate(mesh, 4, [&](int t, const Vec2& p) {
    return (stress_at(disc, sol.stress, t, p) - kConstStress).frobenius_sq();
  });
  CHECK(std::sqrt(err_sq) <= 1e-9 * kConstStress.frobenius());
}

TEST_CASE("essential traction dofs reproduce the data moments") {
  const MacroMesh mesh = generate_unit_square(2);
  const Discretization disc = build_discretization(mesh);
  const Material m = material_from_engineering(1.0, 0.3);
  auto g = [](const Vec2& p, const Vec2& n) -> Vec2 {
    const SymTensor2 s{p.x() + p.y(), p.x() * p.y(), std::sin(p.x())};
    return {s.xx * n.x() + s.xy * n.y(), s.xy * n.x() + s.yy * n.y()};
  };
  // This g is not rigid-compatible in general; use a Dirichlet mesh so no
  // compatibility constraint applies.
  const MacroMesh dmesh = generate_unit_square(2, BoundaryTag::DirichletD, BoundaryTag::TractionN);
  const Discretization ddisc = build_discretization(dmesh);
  const SaddleSystem sys = assemble(ddisc, m, zero_load(), g);
  const auto [sol, rep] = solve_saddle(sys, 1e-10);

  // On every traction edge the discrete field's edge dofs equal the moments
  // of g against the oriented weights.
  for (int e : ddisc.dofs.neumann_edges) {
    const Edge& edge = dmesh.edge(e);
    const Vec2 A = dmesh.vertex(edge.a), B = dmesh.vertex(edge.b);
    // outward normal as assembly computes it
    const auto& tri = dmesh.triangle(edge.tri[0]);
    int la = -1, lb = -1;
    for (int k = 0; k < 3; ++k) {
      if (tri[k] == edge.a) la = k;
      if (tri[k] == edge.b) lb = k;
    }
    Vec2 d = B - A;
    if ((la + 1) % 3 != lb) d = -d;
    const Vec2 n_out = Vec2(d.y(), -d.x()).normalized();
    const Vec2 t_ab = (B - A).normalized();
    const Vec2 n_func(t_ab.y(), -t_ab.x());
    const double sign = n_func.dot(n_out) > 0 ? 1.0 : -1.0;
    const Eigen::Vector4d mom =
        edge_traction_moments(A, B, [&](const Vec2& p) { return g(p, n_out); });
    for (int w = 0; w < 4; ++w)
      CHECK(sol.stress[4 * e + w] == doctest::Approx(sign * mom[w]).epsilon(1e-12));
  }
}

TEST_CASE("A-block quadratic form equals the integrated energy") {
  const MacroMesh mesh = generate_unit_square(2);
  const Discretization disc = build_discretization(mesh);
  const Material m{1.7, 3.1};
  const SaddleSystem sys = assemble(disc, m, zero_load(), const_traction(kConstStress));

  Eigen::VectorXd coeff = Eigen::VectorXd::Zero(sys.total());
  for (int i = 0; i < disc.dofs.n_stress; ++i) coeff[i] = test::uniform(-1, 1);
  const double quad_form = coeff.dot(sys.matrix * coeff);
  const double direct = integrate(mesh, 6, [&](int t, const Vec2& p) {
    return energy_density(m, stress_at(disc, coeff.head(disc.dofs.n_stress), t, p));
  });
  CHECK(quad_form == doctest::Approx(direct).epsilon(1e-11));
}

TEST_CASE("incompatible pure-traction data are rejected") {
  const MacroMesh mesh = generate_unit_square(2);  // all traction
  const Discretization disc = build_discretization(mesh);
  const Material m = material_from_engineering(1.0, 0.3);
  auto bad_g = [](const Vec2&, const Vec2&) { return Vec2(1.0, 0.0); };  // net force
  CHECK_THROWS_AS(assemble(disc, m, zero_load(), bad_g), std::invalid_argument);
}

TEST_CASE("discrete equilibrium holds pointwise after the solve") {
  const Benchmark bench = make_manufactured_benchmark(1.0, 0.3, 2);
  const MacroMesh mesh = bench.initial_mesh();
  const PipelineResult r = solve_pipeline(mesh, bench);
  CHECK(equilibrium_residual(r.disc, r.solution, bench.body_load) < 1e-9);
}

TEST_CASE("solver determinism") {
  const MacroMesh mesh = generate_unit_square(2);
  const Discretization disc = build_discretization(mesh);
  const Material m = material_from_engineering(1.0, 0.3);
  const SaddleSystem sys = assemble(disc, m, zero_load(), const_traction(kConstStress));
  const auto [s1, r1] = solve_saddle(sys, 1e-10);
  const auto [s2, r2] = solve_saddle(sys, 1e-10);
  CHECK((s1.stress - s2.stress).norm() == 0.0);
  CHECK((s1.displacement - s2.displacement).norm() == 0.0);
}

TEST_CASE("joint material and data scaling scales the stress linearly") {
  const Benchmark base = make_manufactured_benchmark(1.0, 0.3, 2);
  const MacroMesh mesh = base.initial_mesh();
  const double c = 1e3;

  Benchmark scaled = base;
  scaled.material = Material{c * base.material.mu, c * base.material.lambda};
  scaled.body_load = [&base, c](const Vec2& p) -> Vec2 { return c * base.body_load(p); };
  scaled.traction = [&base, c](const Vec2& p, const Vec2& n) -> Vec2 {
    return c * base.traction(p, n);
  };

  const PipelineResult r1 = solve_pipeline(mesh, base);
  const PipelineResult r2 = solve_pipeline(mesh, scaled);
  CHECK((r2.solution.stress - c * r1.solution.stress).norm() <=
        1e-8 * c * r1.solution.stress.norm());
  CHECK((r2.solution.displacement - r1.solution.displacement).norm() <=
        1e-8 * r1.solution.displacement.norm());
}
