#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "negcurv/metric_space.hpp"

namespace negcurv {

/// (x|y)_w = (d(w,x) + d(w,y) - d(x,y)) / 2.
double gromov_product(const MetricSpaceHandle& space, const Point& w, const Point& x, const Point& y);

/// min((x|z)_w, (y|z)_w) - (x|y)_w for the quadruple (w, x, y, z).
double four_point_defect(const MetricSpaceHandle& space, const Quadruple& q);

struct HyperbolicityReport {
  std::string space;
  double scale = 0.0;
  std::size_t n_quadruples = 0;
  std::uint64_t seed = 0;
  /// Sup of the four-point defect over evaluated quadruples, clamped at 0.
  /// A lower bound for the space's delta.
  double delta_estimate = 0.0;
  /// First quadruple attaining the sup in evaluation order.
  Quadruple worst_quadruple;
};

/// Evaluates the handle's landmark quadruples first, then random ones; the
/// i-th quadruple is drawn from CounterRng(seed, i), so runs with more
/// quadruples extend runs with fewer.
HyperbolicityReport four_point_delta(const MetricSpaceHandle& space, std::size_t n_quadruples,
                                     std::uint64_t seed);

struct TriangleSide {
  std::string label;
  GeodesicSegment path;
};

/// Three geodesic sides; side k ends where side k+1 (mod 3) starts.
struct TriangleSpec {
  std::array<TriangleSide, 3> sides;

  double perimeter() const;
};

/// Sides a->b, b->c, c->a from the handle's geodesic oracle.
TriangleSpec geodesic_triangle(const MetricSpaceHandle& space, const Point& a, const Point& b,
                               const Point& c);

struct ThinnessWitness {
  double defect = 0.0;
  Point point;
  std::string side;
};

/// Max over sampled points p of each side of the distance from p to the
/// other two sides. Each side is sampled at `samples_per_side` equally spaced
/// parameters; the distance to a side is the best sampled distance refined by
/// golden-section search on the bracketing parameter interval, so the result
/// is a lower bound for the triangle's thinness constant.
ThinnessWitness thin_triangle_witness(const MetricSpaceHandle& space, const TriangleSpec& triangle,
                                      int samples_per_side);

double thin_triangle_defect(const MetricSpaceHandle& space, const TriangleSpec& triangle,
                            int samples_per_side);

/// The triangle Delta_n in the l1 product of X1 and X2 built from their rays
/// g1, g2: S2 = {g1(0)} x g2([0,n]), then
///   sigma_n(t) = (g1(t), g2(n))        0 <= t <= n
///              = (g1(n), g2(2n - t))   n <= t <= 2n,
/// then S1 = g1([0,n]) x {g2(0)} traversed back to the corner. Throws
/// NotAGeodesic if sampled points of sigma_n fail |t - s| = d(sigma(t),
/// sigma(s)) within 1e-9.
TriangleSpec lemma_not_triangle(double n, const MetricSpaceHandle& X1, const MetricSpaceHandle& X2);

/// The l1 product in which lemma_not_triangle's triangle lives.
MetricSpaceHandle lemma_not_space(const MetricSpaceHandle& X1, const MetricSpaceHandle& X2);

}  // namespace negcurv
