#include <doctest.h>

#include <numeric>
#include <set>

#include "jmfem/mesh_generators.hpp"
#include "test_support.hpp"

using namespace jmfem;

namespace {

// Shoelace oracle: orders the boundary edges into a loop and accumulates the
// signed polygon area, independent of the triangle areas.
double boundary_shoelace_area(const MacroMesh& mesh) {
  std::map<int, std::vector<int>> adj;  // vertex -> boundary neighbors
  for (const auto& e : mesh.edges())
    if (e.on_boundary()) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
  REQUIRE(!adj.empty());
  const int start = adj.begin()->first;
  std::vector<int> loop{start};
  int prev = -1, cur = start;
  do {
    const auto& nb = adj.at(cur);
    REQUIRE(nb.size() == 2);
    const int next = (nb[0] == prev) ? nb[1] : nb[0];
    loop.push_back(next);
    prev = cur;
    cur = next;
  } while (cur != start);
  double area2 = 0.0;
  for (std::size_t k = 0; k + 1 < loop.size(); ++k) {
    const Vec2 a = mesh.vertex(loop[k]), b = mesh.vertex(loop[k + 1]);
    area2 += a.x() * b.y() - a.y() * b.x();
  }
  return 0.5 * std::abs(area2);
}

std::vector<int> all_triangles(const MacroMesh& mesh) {
  std::vector<int> all(mesh.num_triangles());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

TEST_CASE("unit square generator") {
  const MacroMesh m1 = generate_unit_square(1);
  CHECK(m1.num_triangles() == 2);
  CHECK(m1.num_vertices() == 4);
  CHECK(m1.num_edges() == 5);

  const MacroMesh m2 = generate_unit_square(2);
  CHECK(m2.num_triangles() == 8);
  CHECK(m2.num_vertices() == 9);

  for (int n : {1, 2, 3, 7}) {
    const MacroMesh m = generate_unit_square(n);
    CHECK(m.total_area() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(test::is_conforming(m));
  }
  CHECK_THROWS_AS(generate_unit_square(0), std::invalid_argument);
}

TEST_CASE("L-shape generator") {
  const MacroMesh m = generate_lshape(1.0);
  CHECK(m.total_area() == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(boundary_shoelace_area(m) == doctest::Approx(m.total_area()).epsilon(1e-13));

  bool origin_found = false;
  for (const auto& v : m.vertices())
    if (v.norm() < 1e-14) origin_found = true;
  CHECK(origin_found);

  for (const auto& e : m.edges())
    if (e.on_boundary()) CHECK(e.tag == BoundaryTag::TractionN);
  CHECK_FALSE(m.has_dirichlet_boundary());
}

TEST_CASE("plate with hole generator") {
  const MacroMesh m = generate_plate_with_hole(1.0, 4.0, 4.0, 16);

  int on_circle = 0;
  for (const auto& v : m.vertices())
    if (std::abs(v.norm() - 1.0) < 1e-14) ++on_circle;
  CHECK(on_circle == 16);

  for (int t = 0; t < m.num_triangles(); ++t) CHECK(m.area(t) > 0.0);
  CHECK(test::is_conforming(m));

  // Inscribed 16-gon area: (16/2) a^2 sin(2 pi/16).
  const double polygon = 8.0 * std::sin(M_PI / 8.0);
  const double area = m.total_area();
  CHECK(area > 64.0 - M_PI);
  CHECK(area < 64.0 - polygon + 1e-12);
  CHECK(boundary_shoelace_area(m) == doctest::Approx(area).epsilon(1e-12));

  CHECK_THROWS_AS(generate_plate_with_hole(5.0, 4.0, 4.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(generate_plate_with_hole(1.0, 4.0, 4.0, 6), std::invalid_argument);
}

TEST_CASE("barycentric split") {
  const MacroMesh m = test::one_triangle_mesh({Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)});
  const MacroSplit s = barycentric_split(m, 0);
  CHECK((s.barycenter - Vec2(1.0 / 3.0, 1.0 / 3.0)).norm() < 1e-15);
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto sub = s.sub(i);
    const double a = triangle_area(sub[0], sub[1], sub[2]);
    CHECK(a == doctest::Approx(0.5 / 3.0).epsilon(1e-14));
    sum += a;
    const auto [p0, p1] = s.internal_edge(i);
    CHECK((p1 - s.barycenter).norm() < 1e-15);  // internal edges end at the barycenter
    (void)p0;
  }
  CHECK(sum == doctest::Approx(0.5).epsilon(1e-14));

  for (int trial = 0; trial < 20; ++trial) {
    const MacroMesh mr = test::one_triangle_mesh(test::random_triangle());
    const MacroSplit sr = barycentric_split(mr, 0);
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
      const auto sub = sr.sub(i);
      const double a = triangle_area(sub[0], sub[1], sub[2]);
      CHECK(a > 0.0);
      CHECK(a == doctest::Approx(mr.area(0) / 3.0).epsilon(1e-12));
      total += a;
    }
    CHECK(total == doctest::Approx(mr.area(0)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(barycentric_split(m, 5), std::out_of_range);
}

TEST_CASE("refine with empty marking is the identity") {
  const MacroMesh m = generate_unit_square(2);
  const MacroMesh r = refine(m, {});
  CHECK(r.num_triangles() == m.num_triangles());
  CHECK(r.num_vertices() == m.num_vertices());
  for (int t = 0; t < m.num_triangles(); ++t) {
    CHECK(r.triangle(t) == m.triangle(t));
    CHECK(r.parent(t) == t);
  }
}

TEST_CASE("single marked triangle refines conformingly") {
  const MacroMesh m = generate_unit_square(2);
  int interior = -1;
  for (int t = 0; t < m.num_triangles(); ++t) {
    bool touches_boundary = false;
    for (int k = 0; k < 3; ++k)
      if (m.edge(m.tri_edge(t, k)).on_boundary()) touches_boundary = true;
    if (!touches_boundary) interior = t;
  }
  // n=2 squares have no fully interior triangle; fall back to triangle 0.
  const int target = interior >= 0 ? interior : 0;
  const MacroMesh r = refine(m, {target});
  CHECK(r.num_triangles() > m.num_triangles());
  CHECK(test::is_conforming(r));
  CHECK(r.total_area() == doctest::Approx(m.total_area()).epsilon(1e-13));
  // all input vertices survive
  for (int v = 0; v < m.num_vertices(); ++v) {
    bool found = false;
    for (int w = 0; w < r.num_vertices(); ++w)
      if ((r.vertex(w) - m.vertex(v)).norm() < 1e-15) found = true;
    CHECK(found);
  }
  // parent map points into the old mesh
  for (int t = 0; t < r.num_triangles(); ++t) {
    CHECK(r.parent(t) >= 0);
    CHECK(r.parent(t) < m.num_triangles());
  }
}

TEST_CASE("uniform sweeps double the element count and keep angles bounded") {
  MacroMesh m = generate_unit_square(2);
  const double angle0 = m.min_angle();
  int expected = m.num_triangles();
  for (int sweep = 0; sweep < 3; ++sweep) {
    m = refine(m, all_triangles(m));
    expected *= 2;
    CHECK(m.num_triangles() == expected);
    CHECK(test::is_conforming(m));
    CHECK(m.total_area() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(m.min_angle() >= angle0 / 4.0 - 1e-12);
  }
}

TEST_CASE("boundary tags are inherited by children") {
  MacroMesh m = generate_unit_square(2, BoundaryTag::DirichletD, BoundaryTag::TractionN);
  for (int sweep = 0; sweep < 3; ++sweep) m = refine(m, all_triangles(m));
  for (const auto& e : m.edges()) {
    if (!e.on_boundary()) continue;
    const Vec2 a = m.vertex(e.a), b = m.vertex(e.b);
    const bool on_left = std::abs(a.x()) < 1e-14 && std::abs(b.x()) < 1e-14;
    CHECK(e.tag == (on_left ? BoundaryTag::DirichletD : BoundaryTag::TractionN));
  }
}

TEST_CASE("closure terminates on random marked sets") {
  MacroMesh m = generate_lshape(1.0);
  for (int it = 0; it < 6; ++it) {
    std::vector<int> marked;
    for (int t = 0; t < m.num_triangles(); ++t)
      if (test::uniform(0, 1) < 0.3) marked.push_back(t);
    if (marked.empty()) marked.push_back(0);
    const MacroMesh r = refine(m, marked);
    CHECK(test::is_conforming(r));
    CHECK(r.total_area() == doctest::Approx(m.total_area()).epsilon(1e-12));
    // every marked triangle was bisected: its index cannot appear as its own
    // sole descendant
    std::map<int, int> children;
    for (int t = 0; t < r.num_triangles(); ++t) ++children[r.parent(t)];
    for (int t : marked) CHECK(children[t] >= 2);
    m = r;
  }
}
