#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negcurv/jet.hpp"

namespace negcurv {

enum class PotentialKind { linear, exp, log_ball, fubini, poly };

/// A radial Kahler potential f, used as f(r^2) with r^2 = |z_1|^2 + ... +
/// |z_n|^2. Only registry entries are supported; each has closed-form
/// derivatives of every order.
///
///   linear    f(x) = x               flat C^n
///   exp       f(x) = e^x             complete, negatively curved
///   log_ball  f(x) = -ln(1 - x)      ball model, x < 1
///   fubini    f(x) = ln(1 + x)       positively curved
///   poly      f(x) = sum_i c_i x^i, i >= 1
class RadialPotential {
 public:
  static RadialPotential linear();
  static RadialPotential exp();
  static RadialPotential log_ball();
  static RadialPotential fubini();
  static RadialPotential poly(std::vector<double> coefficients);

  /// Parses `exp`, `linear`, `log_ball`, `fubini` or `poly:c1,c2,...,ck`.
  /// Throws DomainError on malformed input.
  static RadialPotential parse(std::string_view spec);

  PotentialKind kind() const { return kind_; }
  std::span<const double> coefficients() const { return coefficients_; }
  /// Supremum of admissible x = r^2 (infinity unless log_ball).
  double domain_sup() const;
  bool in_domain(double x) const;
  /// Canonical spec string; parse(spec()) reproduces the potential.
  std::string spec() const;

  /// k-th derivative f^(k)(x), k >= 0. Throws DomainError outside
  /// [0, domain_sup).
  double derivative(int k, double x) const;

  /// (f^(k), f^(k+1), ..., f^(k+4)) at x, i.e. the jet of f^(k).
  Jet4 derivative_jet(int k, double x) const;

 private:
  RadialPotential(PotentialKind kind, std::vector<double> coefficients)
      : kind_(kind), coefficients_(std::move(coefficients)) {}

  void check_domain(double x) const;

  PotentialKind kind_;
  std::vector<double> coefficients_;
};

/// (f(x), f'(x), f''(x), f'''(x), f''''(x)).
Jet4 potential_jet(const RadialPotential& p, double x);

}  // namespace negcurv
