#include "negcurv/hyperbolicity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "negcurv/errors.hpp"
#include "negcurv/parallel.hpp"

namespace negcurv {

double gromov_product(const MetricSpaceHandle& space, const Point& w, const Point& x, const Point& y) {
  return 0.5 * (space.distance(w, x) + space.distance(w, y) - space.distance(x, y));
}

double four_point_defect(const MetricSpaceHandle& space, const Quadruple& q) {
  const auto& [w, x, y, z] = q;
  return std::min(gromov_product(space, w, x, z), gromov_product(space, w, y, z)) -
         gromov_product(space, w, x, y);
}

HyperbolicityReport four_point_delta(const MetricSpaceHandle& space, std::size_t n_quadruples,
                                     std::uint64_t seed) {
  HyperbolicityReport rep;
  rep.space = space.name;
  rep.scale = space.scale;
  rep.n_quadruples = n_quadruples;
  rep.seed = seed;
  if (n_quadruples == 0) return rep;

  const std::size_t n_landmarks = std::min(space.landmarks.size(), n_quadruples);
  const auto quadruple = [&](std::size_t i) -> Quadruple {
    if (i < n_landmarks) return space.landmarks[i];
    CounterRng rng(seed, i);
    Quadruple q;
    for (Point& p : q) p = space.sampler(rng);
    return q;
  };
  const std::vector<double> defects =
      parallel_map(n_quadruples, [&](std::size_t i) { return four_point_defect(space, quadruple(i)); });

  std::size_t worst = 0;
  for (std::size_t i = 1; i < defects.size(); ++i) {
    if (defects[i] > defects[worst]) worst = i;
  }
  rep.delta_estimate = std::max(0.0, defects[worst]);
  rep.worst_quadruple = quadruple(worst);
  return rep;
}

double TriangleSpec::perimeter() const {
  return sides[0].path.length + sides[1].path.length + sides[2].path.length;
}

TriangleSpec geodesic_triangle(const MetricSpaceHandle& space, const Point& a, const Point& b,
                               const Point& c) {
  if (!space.geodesic) throw DomainError("space " + space.name + " has no geodesic oracle");
  return TriangleSpec{{TriangleSide{"ab", space.geodesic(a, b)}, TriangleSide{"bc", space.geodesic(b, c)},
                       TriangleSide{"ca", space.geodesic(c, a)}}};
}

namespace {

std::vector<double> side_parameters(const GeodesicSegment& seg, int samples) {
  std::vector<double> s(samples);
  for (int k = 0; k < samples; ++k) {
    s[k] = samples == 1 ? 0.0 : seg.length * static_cast<double>(k) / (samples - 1);
  }
  return s;
}

struct SampledSide {
  const GeodesicSegment* seg;
  std::vector<double> params;
  std::vector<Point> points;
};

double distance_to_side(const MetricSpaceHandle& space, const Point& p, const SampledSide& side) {
  std::size_t best = 0;
  double best_d = space.distance(p, side.points[0]);
  for (std::size_t k = 1; k < side.points.size(); ++k) {
    const double d = space.distance(p, side.points[k]);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  if (side.points.size() < 2) return best_d;
  // Golden-section refinement on the bracketing interval.
  double lo = side.params[best == 0 ? 0 : best - 1];
  double hi = side.params[std::min(best + 1, side.params.size() - 1)];
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  const auto f = [&](double s) { return space.distance(p, side.seg->at(s)); };
  double a = hi - ratio * (hi - lo);
  double b = lo + ratio * (hi - lo);
  double fa = f(a), fb = f(b);
  for (int it = 0; it < 80 && hi - lo > 1e-13 * std::max(1.0, side.seg->length); ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = f(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = f(b);
    }
  }
  return std::min({best_d, fa, fb});
}

}  // namespace

ThinnessWitness thin_triangle_witness(const MetricSpaceHandle& space, const TriangleSpec& triangle,
                                      int samples_per_side) {
  if (samples_per_side < 2) throw DomainError("need at least 2 samples per side");
  std::array<SampledSide, 3> sampled;
  for (int k = 0; k < 3; ++k) {
    const GeodesicSegment& seg = triangle.sides[k].path;
    sampled[k].seg = &seg;
    sampled[k].params = side_parameters(seg, samples_per_side);
    for (double s : sampled[k].params) sampled[k].points.push_back(seg.at(s));
  }
  ThinnessWitness out;
  bool first = true;
  for (int k = 0; k < 3; ++k) {
    const auto dists = parallel_map(sampled[k].points.size(), [&](std::size_t i) {
      const Point& p = sampled[k].points[i];
      return std::min(distance_to_side(space, p, sampled[(k + 1) % 3]),
                      distance_to_side(space, p, sampled[(k + 2) % 3]));
    });
    for (std::size_t i = 0; i < dists.size(); ++i) {
      if (first || dists[i] > out.defect) {
        out.defect = dists[i];
        out.point = sampled[k].points[i];
        out.side = triangle.sides[k].label;
        first = false;
      }
    }
  }
  return out;
}

double thin_triangle_defect(const MetricSpaceHandle& space, const TriangleSpec& triangle,
                            int samples_per_side) {
  return thin_triangle_witness(space, triangle, samples_per_side).defect;
}

MetricSpaceHandle lemma_not_space(const MetricSpaceHandle& X1, const MetricSpaceHandle& X2) {
  return ProductSpace{X1, X2, Combiner::l1}.handle();
}

TriangleSpec lemma_not_triangle(double n, const MetricSpaceHandle& X1, const MetricSpaceHandle& X2) {
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("n must be positive");
  if (!X1.ray || !X2.ray) throw DomainError("both factors need a geodesic ray");
  const ProductSpace prod{X1, X2, Combiner::l1};
  const PathFn g1 = X1.ray;
  const PathFn g2 = X2.ray;

  const Point corner = prod.join(g1(0.0), g2(0.0));
  const Point top = prod.join(g1(0.0), g2(n));
  const Point right = prod.join(g1(n), g2(0.0));

  GeodesicSegment s2{corner, top, n, [prod, g1, g2](double s) { return prod.join(g1(0.0), g2(s)); }};
  GeodesicSegment sigma{top, right, 2.0 * n, [prod, g1, g2, n](double t) {
                          if (t <= n) return prod.join(g1(t), g2(n));
                          return prod.join(g1(n), g2(2.0 * n - t));
                        }};
  GeodesicSegment s1{right, corner, n, [prod, g1, g2, n](double s) { return prod.join(g1(n - s), g2(0.0)); }};

  // Sampled isometry check of sigma_n.
  const MetricSpaceHandle space = prod.handle();
  constexpr int kChecks = 41;
  std::vector<double> ts(kChecks);
  std::vector<Point> pts(kChecks);
  for (int i = 0; i < kChecks; ++i) {
    ts[i] = 2.0 * n * i / (kChecks - 1);
    pts[i] = sigma.at(ts[i]);
  }
  for (int i = 0; i < kChecks; ++i) {
    for (int j = i + 1; j < kChecks; ++j) {
      const double d = space.distance(pts[i], pts[j]);
      const double expect = ts[j] - ts[i];
      if (std::abs(d - expect) > 1e-9) {
        std::ostringstream os;
        os.precision(17);
        os << "sigma_n is not a geodesic: d(sigma(" << ts[i] << "), sigma(" << ts[j] << ")) = " << d
           << " but |t - s| = " << expect;
        throw NotAGeodesic(os.str());
      }
    }
  }
  return TriangleSpec{{TriangleSide{"S2", std::move(s2)}, TriangleSide{"sigma_n", std::move(sigma)},
                       TriangleSide{"S1", std::move(s1)}}};
}

}  // namespace negcurv
