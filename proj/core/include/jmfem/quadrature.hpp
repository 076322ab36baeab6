#pragma once

#include <array>
#include <vector>

namespace jmfem {

/// Symmetric quadrature rule on the reference triangle.
/// Points are barycentric; weights sum to the reference area 1/2, so that
///   int_K f ~= 2*area(K) * sum_i w_i f(x(bary_i)).
struct QuadratureRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  int order = 0;

  std::size_t size() const { return points.size(); }
};

/// Returns a positive-weight symmetric rule exact at least to `order`.
/// Supported requests: 1 <= order <= 10. Throws std::invalid_argument otherwise.
const QuadratureRule& make_quadrature(int order);

/// Gauss-Legendre rule on [0,1]; n in [1,6], exact to degree 2n-1.
struct EdgeQuadrature {
  std::vector<double> points;   // in [0,1]
  std::vector<double> weights;  // sum to 1
};
const EdgeQuadrature& make_edge_quadrature(int npoints);

}  // namespace jmfem
