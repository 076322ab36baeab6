#pragma once

#include <iosfwd>
#include <string>

#include "jmfem/mesh.hpp"

namespace jmfem {

/// Plain-text mesh format:
///   nv nt nb
///   x y                (nv lines)
///   i j k              (nt lines)
///   i j TractionN|DirichletD   (nb lines)
void save_mesh(const MacroMesh& mesh, std::ostream& out);
void save_mesh(const MacroMesh& mesh, const std::string& path);

MacroMesh load_mesh(std::istream& in);
MacroMesh load_mesh(const std::string& path);

}  // namespace jmfem
