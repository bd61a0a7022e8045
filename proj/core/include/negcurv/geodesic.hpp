#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "negcurv/linalg.hpp"
#include "negcurv/realified.hpp"

namespace negcurv {

struct GeodesicPath {
  std::vector<double> t;
  std::vector<RVector> points;
  std::vector<RVector> velocities;
  std::vector<double> speeds;
  /// Largest |speed - speed(0)| / speed(0) over the samples.
  double max_speed_drift = 0.0;
  /// Set when integration stopped at the domain boundary before the final
  /// time; `t.back()` is then the last time inside the domain.
  bool exited_domain = false;

  const RVector& end() const { return points.back(); }
};

struct GeodesicOptions {
  /// 0 selects max(200, ceil(100 T)).
  int steps = 0;
  /// Return the partial path instead of throwing DomainExited.
  bool allow_exit = false;
  /// Drift beyond this raises StepTooLarge.
  double max_drift = 1e-4;
};

/// Classical fourth-order Runge-Kutta on x'' = -Gamma(x)(x', x') with
/// Christoffel symbols from finite differences. Throws DomainExited (with
/// the exit time) when the path leaves the domain, unless allow_exit, and
/// StepTooLarge when the speed drift exceeds the bound.
GeodesicPath integrate_geodesic(const RealifiedMetric& metric, const RVector& x0, const RVector& v0,
                                double T, const GeodesicOptions& options = {});

/// v scaled to unit speed in the metric at x.
RVector unit_speed(const RealifiedMetric& metric, const RVector& x, const RVector& v);

struct DistanceEstimate {
  double distance = 0.0;
  /// Endpoint miss of the winning shot (0 for the closed-form radial case).
  double residual = 0.0;
  /// Index of the winning restart, -1 for the closed-form radial case.
  int restart = -1;
  int converged_restarts = 0;
};

/// Geodesic distance by multi-start shooting: Newton iteration on the
/// initial velocity w so that the unit-time geodesic from p ends at q, with
/// restarts seeded from directions stratified on the unit sphere (the chord
/// direction first). The shortest converged shot wins, ties by restart
/// index. When p or q is the origin the exact radial distance is returned.
/// Throws NoConvergence with the best residual when no restart converges.
DistanceEstimate distance_estimate(const RealifiedMetric& metric, const RVector& p,
                                   const RVector& q, int budget = 32);

/// Unit-speed geodesic ray from the origin along `direction`, obtained by
/// inverting the radial distance (radial lines are geodesics of every radial
/// metric).
std::function<RVector(double)> radial_ray(const RealifiedMetric& metric, const RVector& direction);

/// CSV with header t,x_1..x_2n,speed.
void write_trace_csv(std::ostream& os, const GeodesicPath& path);

}  // namespace negcurv
