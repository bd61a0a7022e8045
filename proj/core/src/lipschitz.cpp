#include "negcurv/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "negcurv/errors.hpp"
#include "negcurv/parallel.hpp"

namespace negcurv {

double RatioBounds::certified_L() const { return std::max(hi, 1.0 / lo); }

RatioBounds bilipschitz_ratio(const DistanceFn& d1, const DistanceFn& d2, const Sampler& sampler,
                              std::size_t pairs, std::uint64_t seed) {
  const auto ratios = parallel_map(pairs, [&](std::size_t i) {
    CounterRng rng(seed, i);
    const Point x = sampler(rng);
    const Point y = sampler(rng);
    const double a = d1(x, y);
    return a > 0.0 ? d2(x, y) / a : std::numeric_limits<double>::quiet_NaN();
  });
  RatioBounds out;
  out.lo = std::numeric_limits<double>::infinity();
  out.hi = -std::numeric_limits<double>::infinity();
  for (double r : ratios) {
    if (std::isnan(r)) continue;
    out.lo = std::min(out.lo, r);
    out.hi = std::max(out.hi, r);
    ++out.used_pairs;
  }
  if (out.used_pairs == 0) out.lo = out.hi = std::numeric_limits<double>::quiet_NaN();
  return out;
}

SchwarzConstants SchwarzConstants::make(double c, double d) {
  if (!(c < 0.0) || !(d < 0.0)) {
    throw DomainError("Schwarz constants need c < 0 and d < 0");
  }
  return SchwarzConstants(c, d, std::sqrt(d / c));
}

SchwarzConstants SchwarzConstants::with_lipschitz(double d, double L) {
  if (!(d < 0.0)) throw DomainError("Schwarz constants need d < 0");
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("L must be positive");
  return SchwarzConstants(d / (L * L), d, L);
}

namespace {

bool violates(double lhs, double rhs) { return lhs > rhs + 1e-9 * std::max(1.0, rhs); }

double relative_slack(double lhs, double rhs) {
  if (rhs > 0.0) return (lhs - rhs) / rhs;
  return lhs - rhs;
}

}  // namespace

SchwarzReport schwarz_bound_check(const PointMap& map, const MetricSpaceHandle& domain,
                                  const MetricSpaceHandle& target, const SchwarzConstants& constants,
                                  std::size_t pairs, std::uint64_t seed) {
  const double L = constants.L();
  struct Row {
    Point p, q;
    double lhs = 0.0, rhs = 0.0;
  };
  const auto rows = parallel_map(pairs, [&](std::size_t i) {
    CounterRng rng(seed, i);
    Row r;
    r.p = domain.sampler(rng);
    r.q = domain.sampler(rng);
    r.lhs = target.distance(map(r.p), map(r.q));
    r.rhs = L * domain.distance(r.p, r.q);
    return r;
  });
  SchwarzReport rep;
  rep.pairs = pairs;
  rep.L = L;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    const double slack = r.lhs - r.rhs;
    if (i == 0) {
      rep.max_slack = rep.min_slack = slack;
    } else {
      rep.max_slack = std::max(rep.max_slack, slack);
      rep.min_slack = std::min(rep.min_slack, slack);
    }
    if (r.lhs > r.rhs + 1e-9) rep.violations.push_back({i, 0, r.p, r.q, r.lhs, r.rhs, slack});
  }
  return rep;
}

KeyLemmaReport key_lemma_check(const ProductSpace& P, const SchwarzConstants& constants,
                               std::size_t pairs, std::uint64_t seed) {
  const double L = constants.L();
  struct Row {
    Point p, q;
    double lhs1 = 0.0, rhs1 = 0.0, lhs2 = 0.0, rhs2 = 0.0;
  };
  const auto rows = parallel_map(pairs, [&](std::size_t i) {
    CounterRng rng(seed, i);
    Row r;
    const Point p1 = P.first.sampler(rng);
    const Point p2 = P.second.sampler(rng);
    r.p = P.join(p1, p2);
    if (i == 0) {
      r.q = r.p;
    } else if (i == 1) {
      r.q = P.join(P.first.sampler(rng), p2);
    } else {
      const Point q1 = P.first.sampler(rng);
      r.q = P.join(q1, P.second.sampler(rng));
    }
    // d_b measures the first factor and d_a the second.
    const double db = P.first.distance(P.first_of(r.p), P.first_of(r.q));
    const double da = P.second.distance(P.second_of(r.p), P.second_of(r.q));
    const double d = P.combine(db, da);
    r.lhs1 = db + da;
    r.rhs1 = 2.0 * L * L * d;
    r.lhs2 = d;
    r.rhs2 = L * (da + db);
    return r;
  });
  KeyLemmaReport rep;
  rep.pairs = pairs;
  rep.L = L;
  bool seen_1 = false, seen_2 = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    const double s1 = relative_slack(r.lhs1, r.rhs1);
    const double s2 = relative_slack(r.lhs2, r.rhs2);
    if (r.rhs1 > 0.0) {
      rep.max_slack_1 = seen_1 ? std::max(rep.max_slack_1, s1) : s1;
      seen_1 = true;
    }
    if (r.rhs2 > 0.0) {
      rep.max_slack_2 = seen_2 ? std::max(rep.max_slack_2, s2) : s2;
      seen_2 = true;
    }
    if (violates(r.lhs1, r.rhs1)) rep.violations.push_back({i, 1, r.p, r.q, r.lhs1, r.rhs1, s1});
    if (violates(r.lhs2, r.rhs2)) rep.violations.push_back({i, 2, r.p, r.q, r.lhs2, r.rhs2, s2});
  }
  return rep;
}

ProductSpace disc_product(double radius) {
  return ProductSpace{spaces::disc4(radius), spaces::disc4(radius), Combiner::l2};
}

PointMap first_projection(const ProductSpace& P) {
  return [P](const Point& x) { return P.first_of(x); };
}

PointMap second_projection(const ProductSpace& P) {
  return [P](const Point& x) { return P.second_of(x); };
}

}  // namespace negcurv
