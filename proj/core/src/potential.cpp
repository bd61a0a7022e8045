#include "negcurv/potential.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "negcurv/errors.hpp"

namespace negcurv {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// i! / (i - k)!
double falling_factorial(int i, int k) {
  double f = 1.0;
  for (int j = 0; j < k; ++j) f *= (i - j);
  return f;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

RadialPotential RadialPotential::linear() { return {PotentialKind::linear, {}}; }
RadialPotential RadialPotential::exp() { return {PotentialKind::exp, {}}; }
RadialPotential RadialPotential::log_ball() { return {PotentialKind::log_ball, {}}; }
RadialPotential RadialPotential::fubini() { return {PotentialKind::fubini, {}}; }

RadialPotential RadialPotential::poly(std::vector<double> coefficients) {
  if (coefficients.empty()) throw DomainError("poly potential needs at least one coefficient");
  for (double c : coefficients) {
    if (!std::isfinite(c)) throw DomainError("poly coefficient is not finite");
  }
  return {PotentialKind::poly, std::move(coefficients)};
}

RadialPotential RadialPotential::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec == "linear") return linear();
  if (spec == "exp") return exp();
  if (spec == "log_ball") return log_ball();
  if (spec == "fubini") return fubini();
  constexpr std::string_view kPoly = "poly:";
  if (spec.substr(0, kPoly.size()) == kPoly) {
    std::vector<double> coeffs;
    std::string_view rest = spec.substr(kPoly.size());
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view token = trim(rest.substr(0, comma));
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw DomainError("malformed poly coefficient '" + std::string(token) + "'");
      }
      coeffs.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return poly(std::move(coeffs));
  }
  throw DomainError("unknown potential '" + std::string(spec) + "'");
}

double RadialPotential::domain_sup() const {
  return kind_ == PotentialKind::log_ball ? 1.0 : std::numeric_limits<double>::infinity();
}

bool RadialPotential::in_domain(double x) const { return x >= 0.0 && x < domain_sup(); }

std::string RadialPotential::spec() const {
  switch (kind_) {
    case PotentialKind::linear: return "linear";
    case PotentialKind::exp: return "exp";
    case PotentialKind::log_ball: return "log_ball";
    case PotentialKind::fubini: return "fubini";
    case PotentialKind::poly: {
      std::ostringstream os;
      os.precision(17);
      os << "poly:";
      for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (i) os << ',';
        os << coefficients_[i];
      }
      return os.str();
    }
  }
  return {};
}

void RadialPotential::check_domain(double x) const {
  if (!in_domain(x)) {
    std::ostringstream os;
    os << "x = r^2 = " << x << " outside [0, " << domain_sup() << ") for potential " << spec();
    throw DomainError(os.str());
  }
}

double RadialPotential::derivative(int k, double x) const {
  check_domain(x);
  switch (kind_) {
    case PotentialKind::linear:
      return k == 0 ? x : (k == 1 ? 1.0 : 0.0);
    case PotentialKind::exp:
      return std::exp(x);
    case PotentialKind::log_ball:
      // f^(k) = (k-1)! (1-x)^-k
      if (k == 0) return -std::log1p(-x);
      return factorial(k - 1) / std::pow(1.0 - x, k);
    case PotentialKind::fubini:
      // f^(k) = (-1)^(k-1) (k-1)! (1+x)^-k
      if (k == 0) return std::log1p(x);
      return ((k % 2 == 1) ? 1.0 : -1.0) * factorial(k - 1) / std::pow(1.0 + x, k);
    case PotentialKind::poly: {
      double s = 0.0;
      for (std::size_t idx = 0; idx < coefficients_.size(); ++idx) {
        const int i = static_cast<int>(idx) + 1;
        if (i < k) continue;
        s += coefficients_[idx] * falling_factorial(i, k) * std::pow(x, i - k);
      }
      return s;
    }
  }
  return 0.0;
}

Jet4 RadialPotential::derivative_jet(int k, double x) const {
  Jet4 j;
  for (std::size_t m = 0; m <= Jet4::kOrder; ++m) j.v[m] = derivative(k + static_cast<int>(m), x);
  return j;
}

Jet4 potential_jet(const RadialPotential& p, double x) { return p.derivative_jet(0, x); }

}  // namespace negcurv
