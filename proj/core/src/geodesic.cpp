#include "negcurv/geodesic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "negcurv/errors.hpp"
#include "negcurv/radial_analysis.hpp"
#include "negcurv/rng.hpp"

namespace negcurv {

namespace {

double speed_at(const RealifiedMetric& metric, const RVector& x, const RVector& v) {
  return std::sqrt(v.dot(metric.at(x) * v));
}

struct State {
  RVector x;
  RVector v;
};

// Throws DomainError when a stage leaves the domain.
State derivative(const RealifiedMetric& metric, const State& s) {
  return {s.v, christoffel_at(metric, s.x).acceleration(s.v)};
}

}  // namespace

RVector unit_speed(const RealifiedMetric& metric, const RVector& x, const RVector& v) {
  const double s = speed_at(metric, x, v);
  if (!(s > 0.0)) throw ZeroVector("cannot normalize a zero velocity");
  return v / s;
}

GeodesicPath integrate_geodesic(const RealifiedMetric& metric, const RVector& x0, const RVector& v0,
                                double T, const GeodesicOptions& options) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("integration time must be finite and nonnegative");
  if (!metric.in_domain(x0)) throw DomainError("initial point outside the domain");
  if (v0.size() != metric.dim()) throw DomainError("initial velocity has wrong dimension");
  const int steps =
      options.steps > 0 ? options.steps : std::max(200, static_cast<int>(std::ceil(100.0 * T)));
  const double h = T / steps;

  GeodesicPath path;
  path.t.reserve(steps + 1);
  path.points.reserve(steps + 1);
  path.velocities.reserve(steps + 1);
  path.speeds.reserve(steps + 1);
  State s{x0, v0};
  const double s0 = speed_at(metric, x0, v0);
  path.t.push_back(0.0);
  path.points.push_back(s.x);
  path.velocities.push_back(s.v);
  path.speeds.push_back(s0);

  for (int k = 0; k < steps; ++k) {
    State next;
    try {
      const State k1 = derivative(metric, s);
      const State k2 = derivative(metric, {s.x + 0.5 * h * k1.x, s.v + 0.5 * h * k1.v});
      const State k3 = derivative(metric, {s.x + 0.5 * h * k2.x, s.v + 0.5 * h * k2.v});
      const State k4 = derivative(metric, {s.x + h * k3.x, s.v + h * k3.v});
      next.x = s.x + (h / 6.0) * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
      next.v = s.v + (h / 6.0) * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
      if (!metric.in_domain(next.x)) throw DomainError("step left the domain");
    } catch (const DomainError&) {
      const double t_exit = path.t.back();
      if (options.allow_exit) {
        path.exited_domain = true;
        return path;
      }
      std::ostringstream os;
      os << "geodesic left the domain after t = " << t_exit;
      throw DomainExited(os.str(), t_exit);
    }
    s = std::move(next);
    const double sp = speed_at(metric, s.x, s.v);
    const double drift = s0 > 0.0 ? std::abs(sp - s0) / s0 : std::abs(sp);
    path.max_speed_drift = std::max(path.max_speed_drift, drift);
    if (drift > options.max_drift) {
      std::ostringstream os;
      os << "speed drift " << drift << " exceeds " << options.max_drift << " at t = " << (k + 1) * h;
      throw StepTooLarge(os.str(), drift);
    }
    path.t.push_back(k + 1 == steps ? T : (k + 1) * h);
    path.points.push_back(s.x);
    path.velocities.push_back(s.v);
    path.speeds.push_back(sp);
  }
  return path;
}

namespace {

constexpr double kNotHit = std::numeric_limits<double>::infinity();

struct Shot {
  RVector end;
  bool ok = false;
};

// Shots longer than max_length are refused: Newton steps can propose huge
// velocities, and the step count grows with the length.
Shot shoot(const RealifiedMetric& metric, const RVector& p, const RVector& w, double max_length) {
  const double length = speed_at(metric, p, w);
  if (!(length <= max_length)) return {RVector(), false};
  GeodesicOptions opt;
  opt.steps = std::max(200, static_cast<int>(std::ceil(100.0 * length)));
  try {
    return {integrate_geodesic(metric, p, w, 1.0, opt).end(), true};
  } catch (const Error&) {
    return {RVector(), false};
  }
}

std::vector<RVector> restart_directions(const RVector& chord, int budget) {
  const Eigen::Index dim = chord.size();
  std::vector<RVector> dirs;
  dirs.reserve(budget);
  const RVector base = chord.normalized();
  if (dim == 2) {
    const double theta0 = std::atan2(base[1], base[0]);
    for (int k = 0; k < budget; ++k) {
      const double theta = theta0 + 2.0 * std::numbers::pi * k / budget;
      RVector d(2);
      d << std::cos(theta), std::sin(theta);
      dirs.push_back(d);
    }
    return dirs;
  }
  dirs.push_back(base);
  for (int k = 1; k < budget; ++k) {
    CounterRng rng(0x5eed, static_cast<std::uint64_t>(k));
    RVector d(dim);
    for (Eigen::Index j = 0; j < dim; ++j) d[j] = rng.normal();
    dirs.push_back(d.normalized());
  }
  return dirs;
}

}  // namespace

DistanceEstimate distance_estimate(const RealifiedMetric& metric, const RVector& p,
                                   const RVector& q, int budget) {
  if (!metric.in_domain(p) || !metric.in_domain(q)) throw DomainError("endpoint outside the domain");
  if (budget < 1) throw DomainError("budget must be at least 1");
  DistanceEstimate out;
  if (p == q) return out;
  const RadialPotential& pot = metric.potential();
  if (p.isZero() || q.isZero()) {
    out.distance = radial_distance(pot, p.isZero() ? q.norm() : p.norm());
    return out;
  }

  const RVector chord = q - p;
  const RVector mid = 0.5 * (p + q);
  const double guess = std::sqrt(chord.dot(metric.at(mid) * chord));
  const double tol = 1e-10 * std::max(1.0, q.norm());
  const int dim = metric.dim();
  const double max_length = 20.0 * guess + 10.0;

  double best_length = kNotHit;
  double best_residual = kNotHit;
  const std::vector<RVector> dirs = restart_directions(chord, budget);
  for (int k = 0; k < budget; ++k) {
    RVector w = guess * unit_speed(metric, p, dirs[k]);
    Shot shot = shoot(metric, p, w, max_length);
    if (!shot.ok) continue;
    RVector F = shot.end - q;
    for (int it = 0; it < 40 && F.norm() > tol; ++it) {
      RMatrix J(dim, dim);
      bool jac_ok = true;
      for (int j = 0; j < dim; ++j) {
        const double eps = 1e-7 * std::max(1.0, w.norm());
        RVector wj = w;
        wj[j] += eps;
        const Shot sj = shoot(metric, p, wj, max_length);
        if (!sj.ok) {
          jac_ok = false;
          break;
        }
        J.col(j) = (sj.end - shot.end) / eps;
      }
      if (!jac_ok) break;
      const RVector step = J.colPivHouseholderQr().solve(-F);
      bool improved = false;
      for (double alpha = 1.0; alpha >= 1.0 / 64.0; alpha *= 0.5) {
        const RVector trial = w + alpha * step;
        const Shot st = shoot(metric, p, trial, max_length);
        if (st.ok && (st.end - q).norm() < F.norm()) {
          w = trial;
          shot = st;
          F = st.end - q;
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    const double residual = F.norm();
    const double length = speed_at(metric, p, w);
    if (residual <= tol) {
      ++out.converged_restarts;
      if (length < out.distance || out.restart < 0) {
        out.distance = length;
        out.residual = residual;
        out.restart = k;
      }
    }
    if (residual < best_residual) {
      best_residual = residual;
      best_length = length;
    }
  }
  if (out.restart < 0) {
    std::ostringstream os;
    os << "shooting failed after " << budget << " restarts; best endpoint miss " << best_residual;
    throw NoConvergence(os.str(), best_length, best_residual);
  }
  return out;
}

std::function<RVector(double)> radial_ray(const RealifiedMetric& metric, const RVector& direction) {
  if (direction.size() != metric.dim() || !(direction.norm() > 0.0)) {
    throw DomainError("ray direction must be a nonzero vector of the right dimension");
  }
  const RVector unit = direction.normalized();
  const RadialPotential pot = metric.potential();
  return [pot, unit](double t) -> RVector {
    if (!(t >= 0.0)) throw DomainError("ray parameter must be nonnegative");
    return radius_at_distance(pot, t) * unit;
  };
}

void write_trace_csv(std::ostream& os, const GeodesicPath& path) {
  const Eigen::Index dim = path.points.empty() ? 0 : path.points.front().size();
  os << "t";
  for (Eigen::Index k = 0; k < dim; ++k) os << ",x_" << (k + 1);
  os << ",speed\n";
  const auto old = os.precision(17);
  for (std::size_t i = 0; i < path.t.size(); ++i) {
    os << path.t[i];
    for (Eigen::Index k = 0; k < dim; ++k) os << ',' << path.points[i][k];
    os << ',' << path.speeds[i] << '\n';
  }
  os.precision(old);
}

}  // namespace negcurv
