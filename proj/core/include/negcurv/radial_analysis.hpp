#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "negcurv/jet.hpp"
#include "negcurv/potential.hpp"

namespace negcurv {

/// Pointwise sufficient conditions for a radial potential to induce a
/// complete, negatively curved Kahler metric on C^n. Each margin is the
/// quantity that has to be strictly positive; x = r^2.
///
///   a  f' + x f''
///   c  f''
///   d  f'' + x f''' - x f''^2 / f'
///   e  (1/r) d/dr ( r d/dr ln(f'(r^2) + r^2 f''(r^2)) )
///
/// The completeness condition (the radial length integral diverges) is
/// handled by completeness_integral.
struct ConditionMargins {
  double a = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
};

/// Margins at one radius r > 0. Condition e is computed by pushing the r-jet
/// of x = r^2 through the potential and taking the logarithm, no finite
/// differences. Throws DomainError outside the domain and SingularityError
/// where f' = 0.
ConditionMargins condition_margins(const RadialPotential& p, double r);

/// r-jet of h(r) = ln(f'(r^2) + r^2 f''(r^2)).
Jet4 log_radial_density_jet(const RadialPotential& p, double r);

enum class CompletenessClass { divergent, inconclusive, convergent };

const char* to_string(CompletenessClass c);

struct CompletenessQuadrature {
  double r_max = 0.0;
  /// Integral of sqrt(f'(r^2) + r^2 f''(r^2)) over [0, r_max].
  double integral = 0.0;
  double error_estimate = 0.0;
  /// Least-squares slope of ln(integrand) against ln(r) over the last 20%
  /// of the range.
  double tail_exponent = 0.0;
  /// Never `convergent`: divergence of the improper integral cannot be
  /// decided numerically, so the classifier only says divergent when the
  /// integrand is nondecreasing and positive over the tail.
  CompletenessClass classification = CompletenessClass::inconclusive;
};

struct ConditionReport {
  std::string potential;
  std::vector<double> grid;
  std::vector<double> margin_a, margin_c, margin_d, margin_e;
  bool pass_a = false, pass_c = false, pass_d = false, pass_e = false;
  std::optional<CompletenessQuadrature> completeness;

  /// Every pointwise condition passes and, if evaluated, completeness
  /// classified divergent.
  bool all_pass() const;
};

/// `count` logarithmically spaced radii on (1e-3, r_max], the last exactly
/// r_max.
std::vector<double> default_grid(double r_max, std::size_t count = 500);

/// Requires a strictly increasing grid of positive radii inside the domain.
ConditionReport check_conditions(const RadialPotential& p, std::span<const double> r_grid);

/// sqrt(f'(r^2) + r^2 f''(r^2)), the radial length density. DomainError if
/// the radicand is not positive.
double radial_length_density(const RadialPotential& p, double r);

/// Adaptive Gauss-Kronrod quadrature of the radial length density over
/// [0, r_max] split into n_panels, plus geometrically graded panels toward a
/// finite domain edge. QuadratureError when the combined error
/// estimate exceeds 1e-8 relative.
CompletenessQuadrature completeness_integral(const RadialPotential& p, double r_max,
                                             int n_panels = 16);

/// Distance from the origin to any point of Euclidean radius r.
double radial_distance(const RadialPotential& p, double r);

/// Inverse of radial_distance: the Euclidean radius at distance s from the
/// origin. Solved by safeguarded Newton iteration.
double radius_at_distance(const RadialPotential& p, double s);

}  // namespace negcurv
