#pragma once

#include <array>
#include <cstddef>

namespace negcurv {

/// Truncated Taylor jet of a scalar function: the value and the first four
/// derivatives at one evaluation point. Arithmetic follows the Leibniz and
/// Faa di Bruno rules, so composing jets differentiates exactly up to
/// rounding.
struct Jet4 {
  static constexpr std::size_t kOrder = 4;

  std::array<double, kOrder + 1> v{};

  static constexpr Jet4 constant(double c) { return Jet4{{c, 0, 0, 0, 0}}; }
  /// The identity function evaluated at x.
  static constexpr Jet4 variable(double x) { return Jet4{{x, 1, 0, 0, 0}}; }

  constexpr double operator[](std::size_t k) const { return v[k]; }
  constexpr double& operator[](std::size_t k) { return v[k]; }

  bool is_finite() const;

  Jet4& operator+=(const Jet4& o);
  Jet4& operator-=(const Jet4& o);
  Jet4& operator*=(double s);
};

Jet4 operator+(Jet4 a, const Jet4& b);
Jet4 operator-(Jet4 a, const Jet4& b);
Jet4 operator-(Jet4 a);
Jet4 operator*(Jet4 a, double s);
Jet4 operator*(double s, Jet4 a);

/// Jet of the pointwise product (general Leibniz rule).
Jet4 jet_mul(const Jet4& a, const Jet4& b);
inline Jet4 operator*(const Jet4& a, const Jet4& b) { return jet_mul(a, b); }

/// Chain rule through order 4. `outer` holds g(u), g'(u), ..., g''''(u)
/// evaluated at u = inner.v[0]; the result is the jet of g(inner(x)).
Jet4 compose(const Jet4& outer, const Jet4& inner);

enum class Elementary { exp, ln, reciprocal, power };

/// Composition with an elementary function. `exponent` is only read for
/// Elementary::power. Throws DomainError when inner.v[0] is outside the
/// function's domain.
Jet4 jet_elementary(Elementary kind, const Jet4& a, double exponent = 1.0);

Jet4 exp(const Jet4& a);
Jet4 log(const Jet4& a);
Jet4 reciprocal(const Jet4& a);
Jet4 pow(const Jet4& a, double exponent);
Jet4 sqrt(const Jet4& a);
Jet4 operator/(const Jet4& a, const Jet4& b);

}  // namespace negcurv
