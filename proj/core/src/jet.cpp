#include "negcurv/jet.hpp"

#include <cmath>
#include <sstream>

#include "negcurv/errors.hpp"

namespace negcurv {

bool Jet4::is_finite() const {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

Jet4& Jet4::operator+=(const Jet4& o) {
  for (std::size_t k = 0; k <= kOrder; ++k) v[k] += o.v[k];
  return *this;
}

Jet4& Jet4::operator-=(const Jet4& o) {
  for (std::size_t k = 0; k <= kOrder; ++k) v[k] -= o.v[k];
  return *this;
}

Jet4& Jet4::operator*=(double s) {
  for (double& x : v) x *= s;
  return *this;
}

Jet4 operator+(Jet4 a, const Jet4& b) { return a += b; }
Jet4 operator-(Jet4 a, const Jet4& b) { return a -= b; }
Jet4 operator-(Jet4 a) { return a *= -1.0; }
Jet4 operator*(Jet4 a, double s) { return a *= s; }
Jet4 operator*(double s, Jet4 a) { return a *= s; }

Jet4 jet_mul(const Jet4& a, const Jet4& b) {
  // Binomial coefficients of rows 0..4.
  static constexpr double kBinom[5][5] = {{1, 0, 0, 0, 0},
                                          {1, 1, 0, 0, 0},
                                          {1, 2, 1, 0, 0},
                                          {1, 3, 3, 1, 0},
                                          {1, 4, 6, 4, 1}};
  Jet4 out;
  for (std::size_t k = 0; k <= Jet4::kOrder; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j <= k; ++j) s += kBinom[k][j] * a.v[j] * b.v[k - j];
    out.v[k] = s;
  }
  return out;
}

Jet4 compose(const Jet4& g, const Jet4& a) {
  const double a1 = a.v[1], a2 = a.v[2], a3 = a.v[3], a4 = a.v[4];
  Jet4 out;
  out.v[0] = g.v[0];
  out.v[1] = g.v[1] * a1;
  out.v[2] = g.v[2] * a1 * a1 + g.v[1] * a2;
  out.v[3] = g.v[3] * a1 * a1 * a1 + 3.0 * g.v[2] * a1 * a2 + g.v[1] * a3;
  out.v[4] = g.v[4] * a1 * a1 * a1 * a1 + 6.0 * g.v[3] * a1 * a1 * a2 +
             g.v[2] * (3.0 * a2 * a2 + 4.0 * a1 * a3) + g.v[1] * a4;
  return out;
}

namespace {

[[noreturn]] void throw_domain(const char* fn, double value) {
  std::ostringstream os;
  os << "jet " << fn << " undefined at " << value;
  throw DomainError(os.str());
}

bool is_integer(double p) { return std::floor(p) == p; }

}  // namespace

Jet4 jet_elementary(Elementary kind, const Jet4& a, double exponent) {
  const double u = a.v[0];
  Jet4 g;
  switch (kind) {
    case Elementary::exp: {
      const double e = std::exp(u);
      g = Jet4{{e, e, e, e, e}};
      break;
    }
    case Elementary::ln: {
      if (!(u > 0.0)) throw_domain("ln", u);
      const double iu = 1.0 / u;
      g = Jet4{{std::log(u), iu, -iu * iu, 2.0 * iu * iu * iu,
                -6.0 * iu * iu * iu * iu}};
      break;
    }
    case Elementary::reciprocal: {
      if (u == 0.0 || !std::isfinite(u)) throw_domain("reciprocal", u);
      const double iu = 1.0 / u;
      const double iu2 = iu * iu;
      g = Jet4{{iu, -iu2, 2.0 * iu2 * iu, -6.0 * iu2 * iu2,
                24.0 * iu2 * iu2 * iu}};
      break;
    }
    case Elementary::power: {
      const double p = exponent;
      if (!is_integer(p) && !(u > 0.0)) throw_domain("power", u);
      if (is_integer(p) && p < 0.0 && u == 0.0) throw_domain("power", u);
      // d^k/du^k u^p = p (p-1) ... (p-k+1) u^(p-k)
      double falling = 1.0;
      for (std::size_t k = 0; k <= Jet4::kOrder; ++k) {
        const double kk = static_cast<double>(k);
        g.v[k] = falling == 0.0 ? 0.0 : falling * std::pow(u, p - kk);
        falling *= (p - kk);
      }
      break;
    }
  }
  return compose(g, a);
}

Jet4 exp(const Jet4& a) { return jet_elementary(Elementary::exp, a); }
Jet4 log(const Jet4& a) { return jet_elementary(Elementary::ln, a); }
Jet4 reciprocal(const Jet4& a) { return jet_elementary(Elementary::reciprocal, a); }
Jet4 pow(const Jet4& a, double p) { return jet_elementary(Elementary::power, a, p); }
Jet4 sqrt(const Jet4& a) { return jet_elementary(Elementary::power, a, 0.5); }
Jet4 operator/(const Jet4& a, const Jet4& b) { return a * reciprocal(b); }

}  // namespace negcurv
