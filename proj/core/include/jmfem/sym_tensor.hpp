#pragma once

#include <cmath>

namespace jmfem {

/// Symmetric 2x2 tensor stored as its three independent entries.
/// Contractions carry the factor-2 weight on the single-stored xy entry.
struct SymTensor2 {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;

  static constexpr SymTensor2 identity() { return {1.0, 1.0, 0.0}; }

  constexpr double trace() const { return xx + yy; }

  /// Trace-free part: tau - tr(tau)/2 * I.
  constexpr SymTensor2 deviatoric() const {
    const double m = 0.5 * trace();
    return {xx - m, yy - m, xy};
  }

  constexpr double frobenius_sq() const { return xx * xx + yy * yy + 2.0 * xy * xy; }
  double frobenius() const { return std::sqrt(frobenius_sq()); }

  constexpr SymTensor2 operator+(const SymTensor2& o) const { return {xx + o.xx, yy + o.yy, xy + o.xy}; }
  constexpr SymTensor2 operator-(const SymTensor2& o) const { return {xx - o.xx, yy - o.yy, xy - o.xy}; }
  constexpr SymTensor2 operator*(double s) const { return {s * xx, s * yy, s * xy}; }
  constexpr SymTensor2 operator-() const { return {-xx, -yy, -xy}; }
  SymTensor2& operator+=(const SymTensor2& o) {
    xx += o.xx; yy += o.yy; xy += o.xy;
    return *this;
  }
};

constexpr SymTensor2 operator*(double s, const SymTensor2& t) { return t * s; }

/// Full contraction a : b.
constexpr double ddot(const SymTensor2& a, const SymTensor2& b) {
  return a.xx * b.xx + a.yy * b.yy + 2.0 * a.xy * b.xy;
}

}  // namespace jmfem
