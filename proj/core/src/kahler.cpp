#include "negcurv/kahler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "negcurv/errors.hpp"
#include "negcurv/parallel.hpp"
#include "negcurv/realified.hpp"
#include "negcurv/rng.hpp"

namespace negcurv {

namespace {

void check_point(const RadialPotential& p, const PointCn& z) {
  if (z.dim() < 1) throw DomainError("point has no coordinates");
  if (!z.z.allFinite() || !p.in_domain(z.r2())) {
    std::ostringstream os;
    os << "point with r^2 = " << z.r2() << " outside the domain of " << p.spec();
    throw DomainError(os.str());
  }
}

// Hessian of a radial function phi(r^2): phi' delta_ij + phi'' conj(z_i) z_j.
CMatrix radial_hessian(const CVector& z, double d1, double d2) {
  const int n = static_cast<int>(z.size());
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = (i == j ? d1 : 0.0) + d2 * std::conj(z[i]) * z[j];
    }
  }
  return m;
}

}  // namespace

Complex HermitianMetric::inner(const CVector& v, const CVector& w) const {
  return (v.transpose() * g * w.conjugate())(0, 0);
}

HermitianMetric metric_at(const RadialPotential& p, const PointCn& z) {
  check_point(p, z);
  const double x = z.r2();
  HermitianMetric m;
  m.g = radial_hessian(z.z, p.derivative(1, x), p.derivative(2, x));
  m.eigenvalues = Eigen::SelfAdjointEigenSolver<CMatrix>(m.g).eigenvalues();
  const double lo = m.eigenvalues.minCoeff();
  if (!(lo > 0.0)) {
    std::ostringstream os;
    os << "metric of " << p.spec() << " not positive definite at r^2 = " << x
       << " (eigenvalue " << lo << ")";
    throw NotPositiveDefinite(os.str(), lo);
  }
  m.g_inv = m.g.inverse();
  const int n = z.dim();
  const double residual = (m.g * m.g_inv - CMatrix::Identity(n, n)).norm();
  if (!(residual <= 1e-10)) {
    std::ostringstream os;
    os << "metric inverse residual " << residual << " exceeds 1e-10";
    throw NotPositiveDefinite(os.str(), lo);
  }
  return m;
}

KahlerCurvatureTensor::KahlerCurvatureTensor(PointCn point, HermitianMetric metric,
                                             std::vector<Complex> data)
    : point_(std::move(point)), metric_(std::move(metric)), data_(std::move(data)) {}

Complex KahlerCurvatureTensor::contract(const CVector& v, const CVector& w, const CVector& x,
                                        const CVector& y) const {
  const int n = dim();
  Complex s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex vw = v[i] * std::conj(w[j]);
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) s += (*this)(i, j, k, l) * vw * x[k] * std::conj(y[l]);
      }
    }
  }
  return s;
}

double KahlerCurvatureTensor::max_abs() const {
  double m = 0.0;
  for (const Complex& c : data_) m = std::max(m, std::abs(c));
  return m;
}

KahlerCurvatureTensor curvature_tensor_at(const RadialPotential& p, const PointCn& point) {
  HermitianMetric metric = metric_at(p, point);
  const CVector& z = point.z;
  const int n = point.dim();
  const double x = point.r2();
  const double f2 = p.derivative(2, x);
  const double f3 = p.derivative(3, x);
  const double f4 = p.derivative(4, x);
  const auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  const auto zb = [&](int a) { return std::conj(z[a]); };

  // dk[k](i, q) = d_k g_{i qbar}; dl[l](p, j) = d_lbar g_{p jbar}.
  std::vector<CMatrix> dk(n, CMatrix(n, n)), dl(n, CMatrix(n, n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int q = 0; q < n; ++q) {
        dk[k](i, q) = f2 * zb(k) * delta(i, q) + f3 * zb(k) * zb(i) * z[q] + f2 * zb(i) * delta(k, q);
        dl[k](i, q) = f2 * z[k] * delta(i, q) + f3 * z[k] * zb(i) * z[q] + f2 * delta(k, i) * z[q];
      }
    }
  }

  std::vector<Complex> data(static_cast<std::size_t>(n) * n * n * n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const CMatrix quad = dk[k] * metric.g_inv * dl[l];
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          // d_k d_lbar g_{i jbar}
          const Complex dd = f3 * z[l] * zb(k) * delta(i, j) + f2 * delta(k, l) * delta(i, j) +
                             f4 * z[l] * zb(k) * zb(i) * z[j] +
                             f3 * (delta(k, l) * zb(i) * z[j] + zb(k) * delta(i, l) * z[j] +
                                   z[l] * zb(i) * delta(k, j)) +
                             f2 * delta(i, l) * delta(k, j);
          data[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l] = -dd + quad(i, j);
        }
      }
    }
  }
  return KahlerCurvatureTensor(point, std::move(metric), std::move(data));
}

double holomorphic_sectional(const KahlerCurvatureTensor& t, const CVector& v) {
  return holomorphic_bisectional(t, v, v);
}

double holomorphic_bisectional(const KahlerCurvatureTensor& t, const CVector& v, const CVector& w) {
  if (v.size() != t.dim() || w.size() != t.dim()) throw DomainError("vector has wrong dimension");
  const double nv = t.metric().norm2(v);
  const double nw = t.metric().norm2(w);
  if (!(nv > 0.0) || !(nw > 0.0)) throw ZeroVector("curvature of a zero vector is undefined");
  return 2.0 * t.contract(v, v, w, w).real() / (nv * nw);
}

double real_sectional(const RadialPotential& p, const PointCn& z, const RVector& X,
                      const RVector& Y) {
  check_point(p, z);
  const RealifiedMetric metric(p, z.dim());
  return RealCurvature(metric, realify(z.z)).sectional(X, Y);
}

RicciResult ricci_at(const RadialPotential& p, const PointCn& z) {
  const HermitianMetric metric = metric_at(p, z);
  const int n = z.dim();
  const double x = z.r2();
  // ln det g = (n-1) ln f'(x) + ln(f'(x) + x f''(x)) as an x-jet.
  const Jet4 xj = Jet4::variable(x);
  const Jet4 f1 = p.derivative_jet(1, x);
  const Jet4 f2 = p.derivative_jet(2, x);
  Jet4 logdet = log(f1 + xj * f2);
  if (n > 1) logdet += static_cast<double>(n - 1) * log(f1);

  RicciResult out;
  out.ricci = -radial_hessian(z.z, logdet[1], logdet[2]);
  const Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> solver(out.ricci, metric.g);
  out.ricci_lower = 2.0 * solver.eigenvalues().minCoeff();
  return out;
}

namespace {

struct PlaneSample {
  double K_random = 0.0;
  double K_complex_line = 0.0;
  double H = 0.0;
  double B = 0.0;
};

RVector gaussian(CounterRng& rng, int dim) {
  RVector v(dim);
  for (int k = 0; k < dim; ++k) v[k] = rng.normal();
  return v;
}

}  // namespace

CurvatureReport curvature_range_report(const RadialPotential& p, int n,
                                       std::span<const double> r_values, int planes_per_point,
                                       std::uint64_t seed) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  if (planes_per_point < 1) throw DomainError("planes_per_point must be at least 1");
  CurvatureReport report;
  report.potential = p.spec();
  report.n = n;
  report.seed = seed;
  report.planes_per_point = planes_per_point;

  const RealifiedMetric real_metric(p, n);
  for (std::size_t row_index = 0; row_index < r_values.size(); ++row_index) {
    const double r = r_values[row_index];
    PointCn point{CVector::Zero(n)};
    point.z[0] = r;
    const KahlerCurvatureTensor tensor = curvature_tensor_at(p, point);
    const RealCurvature real(real_metric, realify(point.z));
    const RMatrix& g = real.metric();
    const auto g_norm = [&](const RVector& u) { return std::sqrt(u.dot(g * u)); };

    const auto samples = parallel_map(static_cast<std::size_t>(planes_per_point), [&](std::size_t i) {
      CounterRng rng(seed, (static_cast<std::uint64_t>(row_index) << 32) | i);
      RVector X, Y;
      while (true) {
        X = gaussian(rng, 2 * n);
        Y = gaussian(rng, 2 * n);
        const double nx = g_norm(X);
        const double ny = g_norm(Y);
        if (!(nx > 0.0) || !(ny > 0.0)) continue;
        X /= nx;
        Y -= Y.dot(g * X) * X;
        const double residual = g_norm(Y);
        if (residual < 1e-6 * ny) continue;
        Y /= residual;
        break;
      }
      PlaneSample s;
      s.K_random = real.sectional(X, Y);
      s.K_complex_line = real.sectional(X, complex_structure(X));
      s.H = holomorphic_sectional(tensor, complexify(X));
      s.B = holomorphic_bisectional(tensor, complexify(X), complexify(Y));
      return s;
    });

    CurvatureRow row;
    row.r = r;
    row.K_samples.reserve(2 * samples.size());
    for (const PlaneSample& s : samples) {
      row.K_samples.push_back(s.K_random);
      row.K_samples.push_back(s.K_complex_line);
      row.H_samples.push_back(s.H);
      row.B_samples.push_back(s.B);
    }
    const auto [kmin, kmax] = std::minmax_element(row.K_samples.begin(), row.K_samples.end());
    const auto [hmin, hmax] = std::minmax_element(row.H_samples.begin(), row.H_samples.end());
    const auto [bmin, bmax] = std::minmax_element(row.B_samples.begin(), row.B_samples.end());
    row.K_min = *kmin;
    row.K_max = *kmax;
    row.H_min = *hmin;
    row.H_max = *hmax;
    row.B_min = *bmin;
    row.B_max = *bmax;
    row.ricci_lower = ricci_at(p, point).ricci_lower;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace negcurv
