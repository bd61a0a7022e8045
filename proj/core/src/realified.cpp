#include "negcurv/realified.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "negcurv/errors.hpp"

namespace negcurv {

RVector realify(const CVector& v) {
  RVector x(2 * v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    x[2 * k] = v[k].real();
    x[2 * k + 1] = v[k].imag();
  }
  return x;
}

CVector complexify(const RVector& x) {
  CVector v(x.size() / 2);
  for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = Complex(x[2 * k], x[2 * k + 1]);
  return v;
}

RVector complex_structure(const RVector& x) {
  RVector jx(x.size());
  for (Eigen::Index k = 0; k + 1 < x.size(); k += 2) {
    jx[k] = -x[k + 1];
    jx[k + 1] = x[k];
  }
  return jx;
}

RealifiedMetric::RealifiedMetric(RadialPotential potential, int complex_dim)
    : potential_(std::move(potential)), complex_dim_(complex_dim) {
  if (complex_dim < 1) throw DomainError("complex dimension must be at least 1");
}

bool RealifiedMetric::in_domain(const RVector& x) const {
  return x.size() == dim() && x.allFinite() && potential_.in_domain(x.squaredNorm());
}

double RealifiedMetric::boundary_margin(const RVector& x) const {
  const double sup = potential_.domain_sup();
  if (!std::isfinite(sup)) return std::numeric_limits<double>::infinity();
  return std::sqrt(sup) - x.norm();
}

RMatrix RealifiedMetric::at(const RVector& x) const {
  if (x.size() != dim()) throw DomainError("point has wrong dimension");
  const double r2 = x.squaredNorm();
  const double f1 = potential_.derivative(1, r2);
  const double f2 = potential_.derivative(2, r2);
  const int n = complex_dim_;
  RMatrix G(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    const Complex zi(x[2 * i], x[2 * i + 1]);
    for (int j = 0; j < n; ++j) {
      const Complex zj(x[2 * j], x[2 * j + 1]);
      const Complex gij = (i == j ? f1 : 0.0) + f2 * std::conj(zi) * zj;
      const double a = gij.real();
      const double b = gij.imag();
      G(2 * i, 2 * j) = a;
      G(2 * i + 1, 2 * j + 1) = a;
      G(2 * i, 2 * j + 1) = b;
      G(2 * i + 1, 2 * j) = -b;
    }
  }
  return G;
}

double RealifiedMetric::inner(const RVector& x, const RVector& u, const RVector& v) const {
  return u.dot(at(x) * v);
}

namespace {

struct Stencil {
  const RealifiedMetric& metric;
  const RVector& x;

  RMatrix shifted(int a, double ha, int b = -1, double hb = 0.0) const {
    RVector y = x;
    y[a] += ha;
    if (b >= 0) y[b] += hb;
    return metric.at(y);
  }

  RMatrix first(int c, double h) const { return (shifted(c, h) - shifted(c, -h)) / (2.0 * h); }

  RMatrix second(int c, int d, const RMatrix& g0, double h) const {
    if (c == d) return (shifted(c, h) - 2.0 * g0 + shifted(c, -h)) / (h * h);
    return (shifted(c, h, d, h) - shifted(c, h, d, -h) - shifted(c, -h, d, h) +
            shifted(c, -h, d, -h)) /
           (4.0 * h * h);
  }
};

void require_positive_definite(const RMatrix& g) {
  Eigen::LLT<RMatrix> llt(g);
  if (llt.info() != Eigen::Success) {
    const double lo = Eigen::SelfAdjointEigenSolver<RMatrix>(g).eigenvalues().minCoeff();
    std::ostringstream os;
    os << "realified metric is not positive definite (eigenvalue " << lo << ")";
    throw NotPositiveDefinite(os.str(), lo);
  }
}

}  // namespace

MetricDerivatives metric_derivatives(const RealifiedMetric& metric, const RVector& x,
                                     bool with_second, double step) {
  if (!metric.in_domain(x)) throw DomainError("point outside the domain of the realified metric");
  // Near the boundary the metric varies on the scale of the margin m, and the
  // extrapolated stencil errs like (h/m)^4; h = m/1000 keeps that below
  // rounding for the second differences.
  const double h = std::min(step, 1e-3 * metric.boundary_margin(x));
  const int dim = metric.dim();
  const Stencil s{metric, x};

  MetricDerivatives md;
  md.g = metric.at(x);
  md.d1.reserve(dim);
  for (int c = 0; c < dim; ++c) {
    md.d1.push_back((4.0 * s.first(c, 0.5 * h) - s.first(c, h)) / 3.0);
  }
  if (with_second) {
    md.d2.assign(static_cast<std::size_t>(dim) * dim, RMatrix());
    for (int c = 0; c < dim; ++c) {
      for (int d = c; d < dim; ++d) {
        RMatrix v = (4.0 * s.second(c, d, md.g, 0.5 * h) - s.second(c, d, md.g, h)) / 3.0;
        md.d2[c * dim + d] = v;
        md.d2[d * dim + c] = std::move(v);
      }
    }
  }
  return md;
}

RVector Christoffel::acceleration(const RVector& v) const {
  RVector acc = RVector::Zero(dim_);
  for (int a = 0; a < dim_; ++a) {
    double s = 0.0;
    for (int b = 0; b < dim_; ++b) {
      for (int c = 0; c < dim_; ++c) s += (*this)(a, b, c) * v[b] * v[c];
    }
    acc[a] = -s;
  }
  return acc;
}

Christoffel christoffel_from(const MetricDerivatives& md) {
  const int dim = static_cast<int>(md.g.rows());
  require_positive_definite(md.g);
  const RMatrix ginv = md.g.inverse();
  std::vector<double> data(static_cast<std::size_t>(dim) * dim * dim);
  const auto at = [&](int a, int b, int c) -> double& {
    return data[(static_cast<std::size_t>(a) * dim + b) * dim + c];
  };
  for (int b = 0; b < dim; ++b) {
    for (int c = b; c < dim; ++c) {
      // Gamma_{d bc} = (d_b g_dc + d_c g_db - d_d g_bc) / 2
      RVector lowered(dim);
      for (int d = 0; d < dim; ++d) {
        lowered[d] = 0.5 * (md.d1[b](d, c) + md.d1[c](d, b) - md.d1[d](b, c));
      }
      const RVector raised = ginv * lowered;
      for (int a = 0; a < dim; ++a) {
        at(a, b, c) = raised[a];
        at(a, c, b) = raised[a];
      }
    }
  }
  return Christoffel(dim, std::move(data));
}

Christoffel christoffel_at(const RealifiedMetric& metric, const RVector& x, double step) {
  return christoffel_from(metric_derivatives(metric, x, false, step));
}

RealCurvature::RealCurvature(const RealifiedMetric& metric, const RVector& x, double step)
    : dim_(metric.dim()) {
  const MetricDerivatives md = metric_derivatives(metric, x, true, step);
  g_ = md.g;
  const Christoffel gamma = christoffel_from(md);
  const int n = dim_;
  const auto d2 = [&](int c, int d, int a, int b) { return md.d2[c * n + d](a, b); };

  // Lowered Christoffel products: P(b,c,a,d) = g_ef Gamma^e_bc Gamma^f_ad.
  std::vector<RVector> lowered(static_cast<std::size_t>(n) * n);
  std::vector<RVector> raised(static_cast<std::size_t>(n) * n);
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      RVector v(n);
      for (int e = 0; e < n; ++e) v[e] = gamma(e, b, c);
      raised[b * n + c] = v;
      lowered[b * n + c] = g_ * v;
    }
  }
  data_.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          const double second =
              0.5 * (d2(b, c, a, d) + d2(a, d, b, c) - d2(a, c, b, d) - d2(b, d, a, c));
          const double quad = lowered[b * n + c].dot(raised[a * n + d]) -
                              lowered[b * n + d].dot(raised[a * n + c]);
          data_[((static_cast<std::size_t>(a) * n + b) * n + c) * n + d] = second + quad;
        }
      }
    }
  }
}

double RealCurvature::sectional(const RVector& X, const RVector& Y) const {
  const double xx = X.dot(g_ * X);
  const double yy = Y.dot(g_ * Y);
  const double xy = X.dot(g_ * Y);
  const double area2 = xx * yy - xy * xy;
  if (!(area2 > 1e-12 * xx * yy)) {
    throw DegeneratePlane("vectors span a degenerate plane");
  }
  const int n = dim_;
  double num = 0.0;
  for (int a = 0; a < n; ++a) {
    if (X[a] == 0.0) continue;
    for (int b = 0; b < n; ++b) {
      if (Y[b] == 0.0) continue;
      const double xa_yb = X[a] * Y[b];
      for (int c = 0; c < n; ++c) {
        if (X[c] == 0.0) continue;
        for (int d = 0; d < n; ++d) num += (*this)(a, b, c, d) * xa_yb * X[c] * Y[d];
      }
    }
  }
  return num / area2;
}

}  // namespace negcurv
