#include "negcurv/radial_analysis.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "negcurv/errors.hpp"

namespace negcurv {

namespace {

void check_radius(const RadialPotential& p, double r) {
  if (!(r >= 0.0) || !p.in_domain(r * r)) {
    std::ostringstream os;
    os << "radius " << r << " outside the domain of potential " << p.spec();
    throw DomainError(os.str());
  }
}

}  // namespace

const char* to_string(CompletenessClass c) {
  switch (c) {
    case CompletenessClass::divergent: return "divergent";
    case CompletenessClass::inconclusive: return "inconclusive";
    case CompletenessClass::convergent: return "convergent";
  }
  return "?";
}

Jet4 log_radial_density_jet(const RadialPotential& p, double r) {
  check_radius(p, r);
  const Jet4 rj = Jet4::variable(r);
  const Jet4 xj = rj * rj;
  const double x = xj[0];
  const Jet4 f1 = compose(p.derivative_jet(1, x), xj);
  const Jet4 f2 = compose(p.derivative_jet(2, x), xj);
  return log(f1 + xj * f2);
}

ConditionMargins condition_margins(const RadialPotential& p, double r) {
  check_radius(p, r);
  const double x = r * r;
  const Jet4 f = potential_jet(p, x);
  if (f[1] == 0.0) {
    std::ostringstream os;
    os << "f'(r^2) = 0 at r = " << r << " (condition d divides by f')";
    throw SingularityError(os.str());
  }
  ConditionMargins m;
  m.a = f[1] + x * f[2];
  m.c = f[2];
  m.d = f[2] + x * f[3] - x * f[2] * f[2] / f[1];
  // ln(f' + x f'') needs a positive argument; a failing condition a is
  // reported as a non-positive e margin rather than an exception.
  if (m.a > 0.0) {
    const Jet4 h = log_radial_density_jet(p, r);
    m.e = h[1] / r + h[2];
  } else {
    m.e = -std::numeric_limits<double>::infinity();
  }
  return m;
}

bool ConditionReport::all_pass() const {
  const bool complete =
      !completeness || completeness->classification == CompletenessClass::divergent;
  return pass_a && pass_c && pass_d && pass_e && complete;
}

std::vector<double> default_grid(double r_max, std::size_t count) {
  constexpr double kMin = 1e-3;
  std::vector<double> grid(count);
  if (count == 0) return grid;
  if (count == 1) {
    grid[0] = r_max;
    return grid;
  }
  // Points kMin * q^k for k = 1..count with q^count = r_max / kMin, so the
  // open end at kMin is excluded and r_max is hit exactly.
  const double log_ratio = std::log(r_max / kMin);
  for (std::size_t k = 0; k < count; ++k) {
    grid[k] = kMin * std::exp(log_ratio * static_cast<double>(k + 1) / static_cast<double>(count));
  }
  grid.back() = r_max;
  return grid;
}

ConditionReport check_conditions(const RadialPotential& p, std::span<const double> r_grid) {
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > 0.0)) throw DomainError("grid radii must be positive");
    if (i > 0 && !(r_grid[i] > r_grid[i - 1])) throw DomainError("grid must be strictly increasing");
    check_radius(p, r_grid[i]);
  }
  ConditionReport rep;
  rep.potential = p.spec();
  rep.grid.assign(r_grid.begin(), r_grid.end());
  const std::size_t n = r_grid.size();
  rep.margin_a.resize(n);
  rep.margin_c.resize(n);
  rep.margin_d.resize(n);
  rep.margin_e.resize(n);
  rep.pass_a = rep.pass_c = rep.pass_d = rep.pass_e = n > 0;
  for (std::size_t i = 0; i < n; ++i) {
    const ConditionMargins m = condition_margins(p, r_grid[i]);
    rep.margin_a[i] = m.a;
    rep.margin_c[i] = m.c;
    rep.margin_d[i] = m.d;
    rep.margin_e[i] = m.e;
    rep.pass_a = rep.pass_a && m.a > 0.0;
    rep.pass_c = rep.pass_c && m.c > 0.0;
    rep.pass_d = rep.pass_d && m.d > 0.0;
    rep.pass_e = rep.pass_e && m.e > 0.0;
  }
  return rep;
}

double radial_length_density(const RadialPotential& p, double r) {
  check_radius(p, r);
  const double x = r * r;
  const double radicand = p.derivative(1, x) + x * p.derivative(2, x);
  if (!(radicand > 0.0)) {
    std::ostringstream os;
    os << "f' + r^2 f'' = " << radicand << " is not positive at r = " << r;
    throw DomainError(os.str());
  }
  return std::sqrt(radicand);
}

CompletenessQuadrature completeness_integral(const RadialPotential& p, double r_max, int n_panels) {
  if (!(r_max > 0.0)) throw DomainError("r_max must be positive");
  if (n_panels < 1) throw DomainError("n_panels must be at least 1");
  check_radius(p, r_max);

  using boost::math::quadrature::gauss_kronrod;
  const auto integrand = [&p](double r) { return radial_length_density(p, r); };

  CompletenessQuadrature q;
  q.r_max = r_max;
  std::vector<double> cuts;
  for (int k = 0; k <= n_panels; ++k) cuts.push_back(r_max * k / n_panels);
  // Near a finite domain edge the density blows up; halve the distance to
  // the edge per extra panel so each panel sees a bounded relative change.
  const double r_sup = std::sqrt(p.domain_sup());
  if (std::isfinite(r_sup)) {
    for (double gap = 0.5 * r_sup; r_sup - gap < r_max; gap *= 0.5) cuts.push_back(r_sup - gap);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  }
  // 1e-10 stays above the rounding floor of the density next to the edge;
  // asking for less sends the recursion to full depth and inflates the
  // summed error estimate without improving the value.
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    double err = 0.0;
    q.integral += gauss_kronrod<double, 31>::integrate(integrand, cuts[k], cuts[k + 1], 15, 1e-10, &err);
    q.error_estimate += err;
  }
  if (!(q.error_estimate <= 1e-8 * std::abs(q.integral))) {
    std::ostringstream os;
    os << "quadrature error estimate " << q.error_estimate << " exceeds 1e-8 relative of "
       << q.integral;
    throw QuadratureError(os.str());
  }

  // Tail envelope over the last 20% of the range.
  constexpr int kTail = 33;
  std::vector<double> rs(kTail), vals(kTail);
  for (int i = 0; i < kTail; ++i) {
    rs[i] = r_max * (0.8 + 0.2 * i / (kTail - 1));
    vals[i] = integrand(rs[i]);
  }
  bool monotone = true;
  for (int i = 0; i < kTail; ++i) {
    if (!(vals[i] > 0.0) || !std::isfinite(vals[i])) monotone = false;
    if (i > 0 && vals[i] < vals[i - 1] * (1.0 - 1e-12)) monotone = false;
  }
  q.classification = monotone ? CompletenessClass::divergent : CompletenessClass::inconclusive;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < kTail; ++i) {
    const double lx = std::log(rs[i]);
    const double ly = std::log(vals[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = kTail * sxx - sx * sx;
  q.tail_exponent = denom > 0.0 ? (kTail * sxy - sx * sy) / denom : 0.0;
  return q;
}

double radial_distance(const RadialPotential& p, double r) {
  check_radius(p, r);
  if (r == 0.0) return 0.0;
  return completeness_integral(p, r).integral;
}

double radius_at_distance(const RadialPotential& p, double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("distance must be finite and nonnegative");
  if (s == 0.0) return 0.0;

  // Bracket [lo, hi] with D(lo) <= s <= D(hi).
  double lo = 0.0;
  double hi;
  const double r_sup = std::sqrt(p.domain_sup());
  if (std::isfinite(r_sup)) {
    hi = r_sup;
  } else {
    hi = 1.0;
    while (radial_distance(p, hi) < s) {
      lo = hi;
      hi *= 2.0;
    }
  }
  double r = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double residual = radial_distance(p, r) - s;
    if (std::abs(residual) <= 1e-14 * std::max(1.0, s)) return r;
    if (residual > 0.0) {
      hi = r;
    } else {
      lo = r;
    }
    double next = r - residual / radial_length_density(p, r);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == r) return r;
    r = next;
  }
  return r;
}

}  // namespace negcurv
