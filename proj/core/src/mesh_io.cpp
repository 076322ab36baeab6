#include "jmfem/mesh_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace jmfem {

void save_mesh(const MacroMesh& mesh, std::ostream& out) {
  int nb = 0;
  for (const auto& e : mesh.edges())
    if (e.on_boundary()) ++nb;
  out << mesh.num_vertices() << ' ' << mesh.num_triangles() << ' ' << nb << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& v : mesh.vertices()) out << v.x() << ' ' << v.y() << '\n';
  for (const auto& t : mesh.triangles()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  for (const auto& e : mesh.edges()) {
    if (!e.on_boundary()) continue;
    out << e.a << ' ' << e.b << ' '
        << (e.tag == BoundaryTag::TractionN ? "TractionN" : "DirichletD") << '\n';
  }
}

void save_mesh(const MacroMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_mesh: cannot open " + path);
  save_mesh(mesh, out);
}

MacroMesh load_mesh(std::istream& in) {
  int nv = 0, nt = 0, nb = 0;
  if (!(in >> nv >> nt >> nb)) throw std::runtime_error("load_mesh: bad header");
  std::vector<Vec2> vertices(nv);
  for (auto& v : vertices)
    if (!(in >> v.x() >> v.y())) throw std::runtime_error("load_mesh: bad vertex line");
  std::vector<std::array<int, 3>> triangles(nt);
  for (auto& t : triangles)
    if (!(in >> t[0] >> t[1] >> t[2])) throw std::runtime_error("load_mesh: bad triangle line");
  std::vector<std::pair<std::array<int, 2>, BoundaryTag>> boundary(nb);
  for (auto& [pair, tag] : boundary) {
    std::string token;
    if (!(in >> pair[0] >> pair[1] >> token))
      throw std::runtime_error("load_mesh: bad boundary line");
    if (token == "TractionN")
      tag = BoundaryTag::TractionN;
    else if (token == "DirichletD")
      tag = BoundaryTag::DirichletD;
    else
      throw std::runtime_error("load_mesh: unknown boundary tag " + token);
  }
  return MacroMesh(std::move(vertices), std::move(triangles), std::move(boundary));
}

MacroMesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_mesh: cannot open " + path);
  return load_mesh(in);
}

}  // namespace jmfem
