#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "negcurv/linalg.hpp"
#include "negcurv/potential.hpp"

namespace negcurv {

struct PointCn {
  CVector z;

  int dim() const { return static_cast<int>(z.size()); }
  double r2() const { return z.squaredNorm(); }
};

/// g_{i jbar} = f'(r^2) delta_ij + f''(r^2) conj(z_i) z_j, stored as
/// g(i, j). Eigenvalues are f' (multiplicity n-1) and f' + r^2 f''.
struct HermitianMetric {
  CMatrix g;
  CMatrix g_inv;
  RVector eigenvalues;

  /// g(v, conj w) = sum_ij g_{i jbar} v^i conj(w^j).
  Complex inner(const CVector& v, const CVector& w) const;
  double norm2(const CVector& v) const { return inner(v, v).real(); }
};

/// Throws DomainError outside the potential's domain and NotPositiveDefinite
/// (carrying the offending eigenvalue) if g is not positive definite.
HermitianMetric metric_at(const RadialPotential& p, const PointCn& z);

/// R_{i jbar k lbar} = -d_k d_lbar g_{i jbar}
///                     + (d_k g) g^{-1} (d_lbar g) in matrix order,
/// with all metric derivatives in closed form from f', ..., f''''.
class KahlerCurvatureTensor {
 public:
  KahlerCurvatureTensor(PointCn point, HermitianMetric metric, std::vector<Complex> data);

  int dim() const { return point_.dim(); }
  const PointCn& point() const { return point_; }
  const HermitianMetric& metric() const { return metric_; }

  Complex operator()(int i, int j, int k, int l) const {
    const int n = dim();
    return data_[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  }

  /// R(v, conj w, x, conj y) = sum R_{i jbar k lbar} v^i conj(w^j) x^k conj(y^l).
  Complex contract(const CVector& v, const CVector& w, const CVector& x, const CVector& y) const;

  /// Largest |component|.
  double max_abs() const;

 private:
  PointCn point_;
  HermitianMetric metric_;
  std::vector<Complex> data_;
};

KahlerCurvatureTensor curvature_tensor_at(const RadialPotential& p, const PointCn& z);

/// H(v) = 2 R(v, v, v, v) / |v|_g^4. The factor 2 makes the ball potential
/// at n = 1 reproduce Gaussian curvature -4. Throws ZeroVector.
double holomorphic_sectional(const KahlerCurvatureTensor& t, const CVector& v);

/// B(v, w) = 2 R(v, v, w, w) / (|v|_g^2 |w|_g^2), so B(v, v) = H(v).
double holomorphic_bisectional(const KahlerCurvatureTensor& t, const CVector& v, const CVector& w);

/// Sectional curvature of span{X, Y} in the realified metric, computed from
/// finite differences of the real metric (independent of the tensor above).
/// Throws DegeneratePlane.
double real_sectional(const RadialPotential& p, const PointCn& z, const RVector& X,
                      const RVector& Y);

struct RicciResult {
  /// Ric_{i jbar} = -d_i d_jbar ln det g.
  CMatrix ricci;
  /// Smallest eigenvalue of 2 Ric relative to g; equals the Gaussian
  /// curvature when n = 1.
  double ricci_lower = 0.0;
};

RicciResult ricci_at(const RadialPotential& p, const PointCn& z);

struct CurvatureRow {
  double r = 0.0;
  double K_min = 0.0, K_max = 0.0;
  double H_min = 0.0, H_max = 0.0;
  double B_min = 0.0, B_max = 0.0;
  double ricci_lower = 0.0;
  /// Real sectional curvatures: for each draw, the random plane {X, Y}
  /// followed by the complex line {X, JX}.
  std::vector<double> K_samples;
  /// Holomorphic sectional curvature of each draw's X via the complex tensor.
  std::vector<double> H_samples;
  std::vector<double> B_samples;
};

struct CurvatureReport {
  std::string potential;
  int n = 0;
  std::uint64_t seed = 0;
  int planes_per_point = 0;
  std::vector<CurvatureRow> rows;
};

/// Samples planes at the point r e_1 for each r. X and Y are Gaussian draws
/// orthonormalized in the real metric; near-dependent draws (residual below
/// 1e-6 of |Y|) are redrawn. Deterministic in the seed for any worker count.
CurvatureReport curvature_range_report(const RadialPotential& p, int n,
                                       std::span<const double> r_values, int planes_per_point,
                                       std::uint64_t seed);

}  // namespace negcurv
