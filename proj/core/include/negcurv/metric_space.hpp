#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "negcurv/potential.hpp"
#include "negcurv/rng.hpp"

namespace negcurv {

/// Points of a sampled metric space are plain coordinate tuples; their
/// meaning is fixed by the handle that produced them.
using Point = std::vector<double>;
using DistanceFn = std::function<double(const Point&, const Point&)>;
using Sampler = std::function<Point(CounterRng&)>;
using PathFn = std::function<Point(double)>;
using Quadruple = std::array<Point, 4>;

/// Unit-speed geodesic from `from` to `to`, parametrized on [0, length].
struct GeodesicSegment {
  Point from;
  Point to;
  double length = 0.0;
  PathFn at;
};

using GeodesicFn = std::function<GeodesicSegment(const Point&, const Point&)>;

/// A metric space as seen by the estimators: a distance oracle, a seeded
/// sampler, and optionally a geodesic oracle and a unit-speed ray from the
/// basepoint. Every callable must be safe to invoke concurrently.
struct MetricSpaceHandle {
  std::string name;
  int dim = 0;
  double scale = 0.0;
  DistanceFn distance;
  Sampler sampler;
  GeodesicFn geodesic;
  PathFn ray;
  /// Quadruples evaluated ahead of the random ones by four_point_delta.
  std::vector<Quadruple> landmarks;
};

enum class Combiner { l1, l2 };

const char* to_string(Combiner c);
Combiner parse_combiner(const std::string& name);

/// (X1, d1) x (X2, d2) with d = d1 + d2 (l1) or sqrt(d1^2 + d2^2) (l2).
/// Product points are the concatenation of the factor points.
struct ProductSpace {
  MetricSpaceHandle first;
  MetricSpaceHandle second;
  Combiner combiner = Combiner::l1;

  Point join(const Point& a, const Point& b) const;
  Point first_of(const Point& p) const;
  Point second_of(const Point& p) const;
  double combine(double d1, double d2) const;

  MetricSpaceHandle handle() const;
};

namespace spaces {

/// The segment [0, scale] of the real line.
MetricSpaceHandle line(double scale);
/// The ray [0, infinity); samples from [0, scale].
MetricSpaceHandle ray(double scale);
/// R^2; samples from the Euclidean disc of radius scale.
MetricSpaceHandle euclidean_plane(double scale);

/// The disc of constant curvature -4, with points in geodesic polar
/// coordinates (rho, theta) about the center; samples rho uniformly in
/// [0, radius] and theta uniformly.
MetricSpaceHandle disc4(double radius);
double disc4_distance(const Point& a, const Point& b);
/// Poincare-disc coordinates (|w| = tanh rho) of a polar point and back.
std::array<double, 2> disc4_to_poincare(const Point& p);
Point disc4_from_poincare(double x, double y);

/// Distances multiplied by factor; same sampler, same geodesics
/// reparametrized to unit speed.
MetricSpaceHandle scaled(const MetricSpaceHandle& base, double factor);

/// l1 product of two rays with the corner quadruple
/// (0,0), (n,0), (0,n), (n,n) as landmark, n = scale.
MetricSpaceHandle product_rays(double scale);

/// The plane C with the metric of a radial potential, in real coordinates.
/// Distances along a common ray through the origin use the radial distance;
/// all others use shooting with the given budget.
MetricSpaceHandle radial_plane(const RadialPotential& p, double scale, int budget = 8);

/// Registry lookup used by the CLI: line, ray, plane, disc4, product-rays,
/// product-discs. Throws DomainError for an unknown name.
MetricSpaceHandle by_name(const std::string& name, double scale, Combiner combiner = Combiner::l1);

std::vector<std::string> registry_names();

}  // namespace spaces

}  // namespace negcurv
