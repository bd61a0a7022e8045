#pragma once

#include <vector>

#include "negcurv/linalg.hpp"
#include "negcurv/potential.hpp"

namespace negcurv {

/// The Hermitian metric of a radial potential read as a Riemannian metric on
/// R^2n, normalized so the linear potential gives the Euclidean metric with
/// unit coordinate vectors: |X|^2 = Re g(v, conj v) for X = realify(v).
class RealifiedMetric {
 public:
  RealifiedMetric(RadialPotential potential, int complex_dim);

  int dim() const { return 2 * complex_dim_; }
  int complex_dim() const { return complex_dim_; }
  const RadialPotential& potential() const { return potential_; }

  bool in_domain(const RVector& x) const;
  /// Euclidean distance from x to the boundary of the domain (infinite when
  /// the domain is all of R^2n).
  double boundary_margin(const RVector& x) const;

  /// 2n x 2n symmetric matrix at x. Throws DomainError.
  RMatrix at(const RVector& x) const;

  double inner(const RVector& x, const RVector& u, const RVector& v) const;

 private:
  RadialPotential potential_;
  int complex_dim_;
};

/// Real metric plus first and second coordinate derivatives by central
/// differences with one Richardson extrapolation.
struct MetricDerivatives {
  RMatrix g;
  std::vector<RMatrix> d1;  // d1[c](a, b) = d_c g_ab
  std::vector<RMatrix> d2;  // d2[c * dim + d](a, b) = d_c d_d g_ab
};

inline constexpr double kDefaultFdStep = 1e-4;

/// The step is reduced near the domain boundary so every stencil point stays
/// inside the domain.
MetricDerivatives metric_derivatives(const RealifiedMetric& metric, const RVector& x,
                                     bool with_second, double step = kDefaultFdStep);

/// Gamma^a_{bc}, stored flat; symmetric in (b, c) by construction.
class Christoffel {
 public:
  Christoffel(int dim, std::vector<double> data) : dim_(dim), data_(std::move(data)) {}

  int dim() const { return dim_; }
  double operator()(int a, int b, int c) const {
    return data_[(static_cast<std::size_t>(a) * dim_ + b) * dim_ + c];
  }
  /// a^a = -Gamma^a_{bc} v^b v^c.
  RVector acceleration(const RVector& v) const;

 private:
  int dim_;
  std::vector<double> data_;
};

Christoffel christoffel_from(const MetricDerivatives& md);

/// Throws NotPositiveDefinite when the metric at x is not positive definite.
Christoffel christoffel_at(const RealifiedMetric& metric, const RVector& x,
                           double step = kDefaultFdStep);

/// Fully covariant Riemann tensor R_{abcd} at one point, with the sign fixed
/// so that R(X, Y, X, Y) / |X ^ Y|^2 is the sectional curvature.
class RealCurvature {
 public:
  RealCurvature(const RealifiedMetric& metric, const RVector& x, double step = kDefaultFdStep);

  int dim() const { return dim_; }
  const RMatrix& metric() const { return g_; }
  double operator()(int a, int b, int c, int d) const {
    return data_[((static_cast<std::size_t>(a) * dim_ + b) * dim_ + c) * dim_ + d];
  }

  /// Throws DegeneratePlane if |X ^ Y|^2 <= 1e-12 |X|^2 |Y|^2.
  double sectional(const RVector& X, const RVector& Y) const;

 private:
  int dim_;
  RMatrix g_;
  std::vector<double> data_;
};

}  // namespace negcurv
