#include "jmfem/quadrature.hpp"

#include <map>
#include <stdexcept>

namespace jmfem {

namespace {

void add_centroid(QuadratureRule& r, double w) {
  r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  r.weights.push_back(w);
}

// Orbit (a,a,1-2a) and its two rotations.
void add_orbit3(QuadratureRule& r, double a, double w) {
  const double c = 1.0 - 2.0 * a;
  r.points.push_back({c, a, a});
  r.points.push_back({a, c, a});
  r.points.push_back({a, a, c});
  for (int i = 0; i < 3; ++i) r.weights.push_back(w);
}

// Full six-point orbit of (a,b,c), a+b+c=1.
void add_orbit6(QuadratureRule& r, double a, double b, double w) {
  const double c = 1.0 - a - b;
  r.points.push_back({a, b, c});
  r.points.push_back({a, c, b});
  r.points.push_back({b, a, c});
  r.points.push_back({b, c, a});
  r.points.push_back({c, a, b});
  r.points.push_back({c, b, a});
  for (int i = 0; i < 6; ++i) r.weights.push_back(w);
}

// Dunavant rules with positive weights only; listed weights are relative to
// the unit-sum convention and rescaled to the reference area below.
QuadratureRule build(int order) {
  QuadratureRule r;
  switch (order) {
    case 1:
      add_centroid(r, 1.0);
      r.order = 1;
      break;
    case 2:
      add_orbit3(r, 1.0 / 6.0, 1.0 / 3.0);
      r.order = 2;
      break;
    case 3:  // degree-3 rule with a negative weight is avoided; use degree 4
    case 4:
      add_orbit3(r, 0.445948490915965, 0.223381589678011);
      add_orbit3(r, 0.091576213509771, 0.109951743655322);
      r.order = 4;
      break;
    case 5:
      add_centroid(r, 0.225);
      add_orbit3(r, 0.470142064105115, 0.132394152788506);
      add_orbit3(r, 0.101286507323456, 0.125939180544827);
      r.order = 5;
      break;
    case 6:
      add_orbit3(r, 0.249286745170910, 0.116786275726379);
      add_orbit3(r, 0.063089014491502, 0.050844906370207);
      add_orbit6(r, 0.310352451033785, 0.636502499121399, 0.082851075618374);
      r.order = 6;
      break;
    case 7:  // degree-7 rule carries a negative centroid weight; use degree 8
    case 8:
      add_centroid(r, 0.144315607677787);
      add_orbit3(r, 0.459292588292723, 0.095091634413245);
      add_orbit3(r, 0.170569307751760, 0.103217370534718);
      add_orbit3(r, 0.050547228317031, 0.032458497623198);
      add_orbit6(r, 0.263112829634638, 0.728492392955404, 0.027230314174435);
      r.order = 8;
      break;
    case 9:
      add_centroid(r, 0.097135796282799);
      add_orbit3(r, 0.489682519198738, 0.031334700227139);
      add_orbit3(r, 0.437089591492937, 0.077827541004774);
      add_orbit3(r, 0.188203535619033, 0.079647738927210);
      add_orbit3(r, 0.044729513394453, 0.025577675658698);
      add_orbit6(r, 0.221962989160766, 0.741198598784498, 0.043283539377289);
      r.order = 9;
      break;
    case 10:
      add_centroid(r, 0.090817990382754);
      add_orbit3(r, 0.485577633383657, 0.036725957756467);
      add_orbit3(r, 0.109481575485037, 0.045321059435528);
      add_orbit6(r, 0.141707219414880, 0.307939838764121, 0.072757916845420);
      add_orbit6(r, 0.025003534762686, 0.246672560639903, 0.028327242531057);
      add_orbit6(r, 0.009540815400299, 0.066803251012200, 0.009421666963733);
      r.order = 10;
      break;
    default:
      throw std::invalid_argument("make_quadrature: order must lie in [1, 10]");
  }
  for (double& w : r.weights) w *= 0.5;
  return r;
}

}  // namespace

const QuadratureRule& make_quadrature(int order) {
  if (order < 1 || order > 10)
    throw std::invalid_argument("make_quadrature: order must lie in [1, 10]");
  static std::map<int, QuadratureRule> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build(order)).first;
  return it->second;
}

const EdgeQuadrature& make_edge_quadrature(int npoints) {
  if (npoints < 1 || npoints > 6)
    throw std::invalid_argument("make_edge_quadrature: npoints must lie in [1, 6]");
  static std::map<int, EdgeQuadrature> cache;
  auto it = cache.find(npoints);
  if (it != cache.end()) return it->second;

  // Gauss-Legendre abscissae on [-1,1], mapped to [0,1].
  EdgeQuadrature q;
  std::vector<double> x, w;
  switch (npoints) {
    case 1: x = {0.0}; w = {2.0}; break;
    case 2: x = {-0.5773502691896257, 0.5773502691896257}; w = {1.0, 1.0}; break;
    case 3:
      x = {-0.7745966692414834, 0.0, 0.7745966692414834};
      w = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
      break;
    case 4:
      x = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
      w = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};
      break;
    case 5:
      x = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831, 0.9061798459386640};
      w = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
           0.2369268850561891};
      break;
    case 6:
      x = {-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
           0.2386191860831969, 0.6612093864662645, 0.9324695142031521};
      w = {0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
           0.4679139345726910, 0.3607615730481386, 0.1713244923791704};
      break;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    q.points.push_back(0.5 * (x[i] + 1.0));
    q.weights.push_back(0.5 * w[i]);
  }
  return cache.emplace(npoints, std::move(q)).first->second;
}

}  // namespace jmfem
