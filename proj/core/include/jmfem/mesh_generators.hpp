#pragma once

#include "jmfem/mesh.hpp"

namespace jmfem {

/// Structured mesh of the unit square (0,1)^2 with 2n^2 triangles.
/// Boundary edges on {x=0} receive `left_tag`; the rest `other_tag`.
MacroMesh generate_unit_square(int n, BoundaryTag left_tag = BoundaryTag::TractionN,
                               BoundaryTag other_tag = BoundaryTag::TractionN);

/// Rotated-L domain { |x|+|y| <= sqrt(2) a } minus the diamond
/// { |x - a/sqrt(2)| + |y| <= a/sqrt(2) }; the reentrant corner sits at the
/// origin and the whole boundary is tagged TractionN.
MacroMesh generate_lshape(double a);

/// Rectangle (-b,b) x (-w,w) minus a regular polygonal approximation of the
/// circle of radius `a` with `segments` vertices placed exactly on the
/// circle. The whole boundary is tagged TractionN.
MacroMesh generate_plate_with_hole(double a, double b, double w, int segments);

}  // namespace jmfem
