#include "negcurv/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "negcurv/errors.hpp"
#include "negcurv/geodesic.hpp"
#include "negcurv/radial_analysis.hpp"

namespace negcurv {

const char* to_string(Combiner c) { return c == Combiner::l1 ? "l1" : "l2"; }

Combiner parse_combiner(const std::string& name) {
  if (name == "l1") return Combiner::l1;
  if (name == "l2") return Combiner::l2;
  throw DomainError("unknown combiner '" + name + "' (expected l1 or l2)");
}

Point ProductSpace::join(const Point& a, const Point& b) const {
  Point p(a);
  p.insert(p.end(), b.begin(), b.end());
  return p;
}

Point ProductSpace::first_of(const Point& p) const { return Point(p.begin(), p.begin() + first.dim); }

Point ProductSpace::second_of(const Point& p) const { return Point(p.begin() + first.dim, p.end()); }

double ProductSpace::combine(double d1, double d2) const {
  return combiner == Combiner::l1 ? d1 + d2 : std::hypot(d1, d2);
}

MetricSpaceHandle ProductSpace::handle() const {
  MetricSpaceHandle h;
  h.name = first.name + "x" + second.name;
  h.dim = first.dim + second.dim;
  h.scale = std::max(first.scale, second.scale);
  const ProductSpace self = *this;
  h.distance = [self](const Point& a, const Point& b) {
    return self.combine(self.first.distance(self.first_of(a), self.first_of(b)),
                        self.second.distance(self.second_of(a), self.second_of(b)));
  };
  h.sampler = [self](CounterRng& rng) {
    const Point a = self.first.sampler(rng);
    const Point b = self.second.sampler(rng);
    return self.join(a, b);
  };
  if (first.geodesic && second.geodesic) {
    h.geodesic = [self](const Point& a, const Point& b) {
      const GeodesicSegment g1 = self.first.geodesic(self.first_of(a), self.first_of(b));
      const GeodesicSegment g2 = self.second.geodesic(self.second_of(a), self.second_of(b));
      GeodesicSegment seg;
      seg.from = a;
      seg.to = b;
      seg.length = self.combine(g1.length, g2.length);
      if (self.combiner == Combiner::l1) {
        // Move in the first factor, then in the second.
        seg.at = [self, g1, g2](double s) {
          return self.join(g1.at(std::min(s, g1.length)),
                           g2.at(std::clamp(s - g1.length, 0.0, g2.length)));
        };
      } else {
        const double total = seg.length;
        seg.at = [self, g1, g2, total](double s) {
          const double u = total > 0.0 ? s / total : 0.0;
          return self.join(g1.at(u * g1.length), g2.at(u * g2.length));
        };
      }
      return seg;
    };
  }
  return h;
}

namespace spaces {

namespace {

GeodesicSegment straight_segment(const Point& a, const Point& b) {
  double len2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) len2 += (b[k] - a[k]) * (b[k] - a[k]);
  GeodesicSegment seg{a, b, std::sqrt(len2), {}};
  const double len = seg.length;
  seg.at = [a, b, len](double s) {
    Point p(a.size());
    const double u = len > 0.0 ? s / len : 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) p[k] = a[k] + u * (b[k] - a[k]);
    return p;
  };
  return seg;
}

double euclidean(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

}  // namespace

MetricSpaceHandle line(double scale) {
  MetricSpaceHandle h;
  h.name = "line";
  h.dim = 1;
  h.scale = scale;
  h.distance = [](const Point& a, const Point& b) { return std::abs(a[0] - b[0]); };
  h.sampler = [scale](CounterRng& rng) { return Point{rng.uniform(0.0, scale)}; };
  h.geodesic = straight_segment;
  h.ray = [](double t) { return Point{t}; };
  return h;
}

MetricSpaceHandle ray(double scale) {
  MetricSpaceHandle h = line(scale);
  h.name = "ray";
  return h;
}

MetricSpaceHandle euclidean_plane(double scale) {
  MetricSpaceHandle h;
  h.name = "plane";
  h.dim = 2;
  h.scale = scale;
  h.distance = euclidean;
  h.sampler = [scale](CounterRng& rng) {
    const double rad = scale * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return Point{rad * std::cos(theta), rad * std::sin(theta)};
  };
  h.geodesic = straight_segment;
  h.ray = [](double t) { return Point{t, 0.0}; };
  return h;
}

double disc4_distance(const Point& a, const Point& b) {
  // Curvature -4 is the hyperbolic plane with distances halved:
  // sinh^2 d = sinh^2(rho1 - rho2) + sinh(2 rho1) sinh(2 rho2) sin^2(dtheta / 2).
  const double dr = std::sinh(a[0] - b[0]);
  const double st = std::sin(0.5 * (a[1] - b[1]));
  const double s2 = dr * dr + std::sinh(2.0 * a[0]) * std::sinh(2.0 * b[0]) * st * st;
  return std::asinh(std::sqrt(std::max(0.0, s2)));
}

std::array<double, 2> disc4_to_poincare(const Point& p) {
  const double rad = std::tanh(p[0]);
  return {rad * std::cos(p[1]), rad * std::sin(p[1])};
}

Point disc4_from_poincare(double x, double y) {
  const double rad = std::hypot(x, y);
  if (!(rad < 1.0)) throw DomainError("point outside the unit disc");
  return Point{std::atanh(rad), rad > 0.0 ? std::atan2(y, x) : 0.0};
}

MetricSpaceHandle disc4(double radius) {
  MetricSpaceHandle h;
  h.name = "disc4";
  h.dim = 2;
  h.scale = radius;
  h.distance = disc4_distance;
  h.sampler = [radius](CounterRng& rng) {
    const double rho = rng.uniform(0.0, radius);
    const double theta = rng.uniform(-std::numbers::pi, std::numbers::pi);
    return Point{rho, theta};
  };
  h.geodesic = [](const Point& a, const Point& b) {
    // Hyperboloid model of the curvature -1 plane, where lengths are doubled.
    // The Poincare disc loses every point beyond rho ~ 18 to rounding
    // (tanh rho == 1); here the combination below stays relatively accurate.
    const auto lift = [](const Point& p) {
      return std::array<double, 3>{std::cosh(2.0 * p[0]), std::sinh(2.0 * p[0]) * std::cos(p[1]),
                                   std::sinh(2.0 * p[0]) * std::sin(p[1])};
    };
    GeodesicSegment seg;
    seg.from = a;
    seg.to = b;
    seg.length = disc4_distance(a, b);
    seg.at = [A = lift(a), B = lift(b), a, b, len = seg.length](double s) {
      if (s <= 0.0) return a;
      if (s >= len) return b;
      // sinh(D - u) / sinh D and sinh u / sinh D without overflowing sinh D.
      const double D = 2.0 * len;
      const double u = 2.0 * s;
      const double den = -std::expm1(-2.0 * D);
      const double ca = std::exp(-u) * -std::expm1(-2.0 * (D - u)) / den;
      const double cb = std::exp(u - D) * -std::expm1(-2.0 * u) / den;
      const double x = ca * A[1] + cb * B[1];
      const double y = ca * A[2] + cb * B[2];
      const double rad = std::hypot(x, y);
      return Point{0.5 * std::asinh(rad), rad > 0.0 ? std::atan2(y, x) : 0.0};
    };
    return seg;
  };
  h.ray = [](double t) { return Point{t, 0.0}; };
  return h;
}

MetricSpaceHandle scaled(const MetricSpaceHandle& base, double factor) {
  if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
  MetricSpaceHandle h = base;
  h.name = base.name + "*" + std::to_string(factor);
  h.distance = [d = base.distance, factor](const Point& a, const Point& b) { return factor * d(a, b); };
  if (base.geodesic) {
    h.geodesic = [g = base.geodesic, factor](const Point& a, const Point& b) {
      GeodesicSegment seg = g(a, b);
      seg.length *= factor;
      seg.at = [at = seg.at, factor](double s) { return at(s / factor); };
      return seg;
    };
  }
  if (base.ray) {
    h.ray = [r = base.ray, factor](double t) { return r(t / factor); };
  }
  return h;
}

MetricSpaceHandle product_rays(double scale) {
  ProductSpace prod{ray(scale), ray(scale), Combiner::l1};
  MetricSpaceHandle h = prod.handle();
  h.name = "product-rays";
  h.scale = scale;
  h.landmarks.push_back(Quadruple{Point{0.0, 0.0}, Point{scale, 0.0}, Point{0.0, scale},
                                  Point{scale, scale}});
  return h;
}

MetricSpaceHandle radial_plane(const RadialPotential& p, double scale, int budget) {
  const RealifiedMetric metric(p, 1);
  MetricSpaceHandle h;
  h.name = "radial-plane:" + p.spec();
  h.dim = 2;
  h.scale = scale;
  h.distance = [metric, budget](const Point& a, const Point& b) {
    const RVector x = Eigen::Map<const RVector>(a.data(), 2);
    const RVector y = Eigen::Map<const RVector>(b.data(), 2);
    const double nx = x.norm();
    const double ny = y.norm();
    const double cross = x[0] * y[1] - x[1] * y[0];
    const RadialPotential& pot = metric.potential();
    // Both points on one line through the origin: the line is a geodesic.
    if (nx == 0.0 || ny == 0.0 || std::abs(cross) <= 1e-14 * nx * ny) {
      const double dx = radial_distance(pot, nx);
      const double dy = radial_distance(pot, ny);
      return x.dot(y) >= 0.0 ? std::abs(dx - dy) : dx + dy;
    }
    return distance_estimate(metric, x, y, budget).distance;
  };
  const double r_scale = radius_at_distance(p, scale);
  h.sampler = [r_scale](CounterRng& rng) {
    const double rad = r_scale * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return Point{rad * std::cos(theta), rad * std::sin(theta)};
  };
  RVector e1(2);
  e1 << 1.0, 0.0;
  h.ray = [ray = radial_ray(metric, e1)](double t) {
    const RVector v = ray(t);
    return Point{v[0], v[1]};
  };
  return h;
}

std::vector<std::string> registry_names() {
  return {"line", "ray", "plane", "disc4", "product-rays", "product-discs"};
}

MetricSpaceHandle by_name(const std::string& name, double scale, Combiner combiner) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("scale must be positive");
  if (name == "line") return line(scale);
  if (name == "ray") return ray(scale);
  if (name == "plane") return euclidean_plane(scale);
  if (name == "disc4") return disc4(scale);
  if (name == "product-rays") {
    if (combiner == Combiner::l1) return product_rays(scale);
    MetricSpaceHandle h = ProductSpace{ray(scale), ray(scale), combiner}.handle();
    h.name = "product-rays";
    return h;
  }
  if (name == "product-discs") {
    MetricSpaceHandle h = ProductSpace{disc4(scale), disc4(scale), combiner}.handle();
    h.name = "product-discs";
    return h;
  }
  throw DomainError("unknown space '" + name + "'");
}

}  // namespace spaces

}  // namespace negcurv
