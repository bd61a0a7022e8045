#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "negcurv/metric_space.hpp"

namespace negcurv {

struct RatioBounds {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t used_pairs = 0;

  /// Bi-Lipschitz constant certified by the sample: max(hi, 1/lo).
  double certified_L() const;
};

/// (inf, sup) of d2/d1 over pairs drawn from `sampler`; pairs with d1 = 0 are
/// skipped. Pair i uses CounterRng(seed, i).
RatioBounds bilipschitz_ratio(const DistanceFn& d1, const DistanceFn& d2, const Sampler& sampler,
                              std::size_t pairs, std::uint64_t seed);

/// c bounds the target's holomorphic sectional curvature from above, d bounds
/// the domain's Ricci curvature from below; both negative, L = sqrt(d / c).
class SchwarzConstants {
 public:
  /// Throws DomainError unless c < 0 and d < 0.
  static SchwarzConstants make(double c, double d);
  /// Keeps d and picks c = d / L^2, so that L() returns exactly L. Used for
  /// deliberately wrong constants in negative controls.
  static SchwarzConstants with_lipschitz(double d, double L);

  double c() const { return c_; }
  double d() const { return d_; }
  double L() const { return L_; }

 private:
  SchwarzConstants(double c, double d, double L) : c_(c), d_(d), L_(L) {}
  double c_;
  double d_;
  double L_;
};

struct InequalityViolation {
  std::size_t pair_index = 0;
  int inequality = 0;
  Point p;
  Point q;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

using PointMap = std::function<Point(const Point&)>;

struct SchwarzReport {
  std::size_t pairs = 0;
  double L = 0.0;
  std::vector<InequalityViolation> violations;
  /// slack = d_target(map p, map q) - L d_domain(p, q); max <= 0 means the
  /// bound held, max = min = 0 means it was attained on every pair.
  double max_slack = 0.0;
  double min_slack = 0.0;
};

/// Checks d_target(map p, map q) <= L d_domain(p, q) + 1e-9 on sampled pairs
/// of the domain.
SchwarzReport schwarz_bound_check(const PointMap& map, const MetricSpaceHandle& domain,
                                  const MetricSpaceHandle& target, const SchwarzConstants& constants,
                                  std::size_t pairs, std::uint64_t seed);

struct KeyLemmaReport {
  std::size_t pairs = 0;
  double L = 0.0;
  std::vector<InequalityViolation> violations;
  /// Relative slack (lhs - rhs) / rhs of inequality (1)
  ///   d_b(p1, q1) + d_a(p2, q2) <= 2 L^2 d(p, q)
  /// and (2)
  ///   d(p, q) <= L (d_a(p2, q2) + d_b(p1, q1)),
  /// maximized over pairs with a positive right-hand side (0 if there are
  /// none, e.g. when every pair has p = q).
  double max_slack_1 = 0.0;
  double max_slack_2 = 0.0;
};

/// Runs both inequalities on sampled pairs of the product, d being the
/// product distance. Pair 0 is p = q, pair 1 differs in the first factor
/// only; the rest are independent samples.
KeyLemmaReport key_lemma_check(const ProductSpace& P, const SchwarzConstants& constants,
                               std::size_t pairs, std::uint64_t seed);

/// The harness product: two curvature -4 discs of the given radius with the
/// l2 combiner.
ProductSpace disc_product(double radius);

/// Projections of a product point onto its factors.
PointMap first_projection(const ProductSpace& P);
PointMap second_projection(const ProductSpace& P);

}  // namespace negcurv
