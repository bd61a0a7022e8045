#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "negcurv/errors.hpp"
#include "negcurv/geodesic.hpp"
#include "negcurv/radial_analysis.hpp"
#include "negcurv/realified.hpp"
#include "negcurv/rng.hpp"
#include "oracles.hpp"

using negcurv::RadialPotential;
using negcurv::RealifiedMetric;
using negcurv::RVector;

namespace {

RVector vec(std::initializer_list<double> xs) {
  RVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST(Realified, EuclideanForLinear) {
  const RealifiedMetric m(RadialPotential::linear(), 2);
  EXPECT_TRUE(m.at(vec({0.3, -1, 2, 0.5})).isIdentity(0.0));
}

TEST(Realified, RealifyRoundTripAndComplexStructure) {
  negcurv::CVector v(2);
  v << std::complex<double>(1, 2), std::complex<double>(-3, 0.5);
  const RVector x = negcurv::realify(v);
  EXPECT_EQ(x, vec({1, 2, -3, 0.5}));
  EXPECT_EQ(negcurv::complexify(x), v);
  EXPECT_TRUE(negcurv::complex_structure(negcurv::complex_structure(x)).isApprox(-x, 0.0));
  // J is multiplication by i.
  EXPECT_EQ(negcurv::complexify(negcurv::complex_structure(x)), std::complex<double>(0, 1) * v);
}

TEST(Realified, ChristoffelFlat) {
  const RealifiedMetric m(RadialPotential::linear(), 2);
  const auto G = negcurv::christoffel_at(m, vec({0.5, 1, -2, 0.1}));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) EXPECT_NEAR(G(a, b, c), 0.0, 1e-8);
}

TEST(Realified, ChristoffelVanishesAtOriginOfLogBall) {
  const RealifiedMetric m(RadialPotential::log_ball(), 1);
  const auto G = negcurv::christoffel_at(m, vec({0, 0}));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) EXPECT_NEAR(G(a, b, c), 0.0, 1e-6);
}

TEST(Realified, ChristoffelMatchesConformalFormula) {
  // g = lambda delta: Gamma^a_bc = (delta_ab L_c + delta_ac L_b - delta_bc L_a) / 2,
  // L = grad ln lambda = 4 x / (1 - |x|^2) for the log_ball disc.
  const RealifiedMetric m(RadialPotential::log_ball(), 1);
  for (std::uint64_t s = 0; s < 20; ++s) {
    negcurv::CounterRng rng(21, s);
    const double rad = 0.95 * std::sqrt(rng.uniform());
    const double th = rng.uniform(0, 2 * M_PI);
    const RVector x = vec({rad * std::cos(th), rad * std::sin(th)});
    const RVector L = 4.0 * x / (1 - x.squaredNorm());
    const auto G = negcurv::christoffel_at(m, x);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          const double want = 0.5 * ((a == b) * L[c] + (a == c) * L[b] - (b == c) * L[a]);
          EXPECT_NEAR(G(a, b, c), want, 1e-6 * std::max(1.0, std::abs(want)));
          EXPECT_EQ(G(a, b, c), G(a, c, b));
        }
  }
}

TEST(Geodesic, EuclideanStraightLine) {
  const RealifiedMetric m(RadialPotential::linear(), 2);
  const auto path = negcurv::integrate_geodesic(m, RVector::Zero(4), vec({1, 0, 0, 0}), 3.0);
  EXPECT_LE((path.end() - vec({3, 0, 0, 0})).norm(), 1e-12);
  EXPECT_EQ(path.t.back(), 3.0);
  EXPECT_EQ(path.t.size(), 301u);
  const auto long_path = negcurv::integrate_geodesic(m, vec({1, 2, 3, 4}), vec({0.3, -0.2, 1, 0}), 10.0);
  EXPECT_LE(long_path.max_speed_drift, 1e-9);
}

TEST(Geodesic, LogBallRadialEndpoint) {
  const RealifiedMetric m(RadialPotential::log_ball(), 1);
  const RVector v = negcurv::unit_speed(m, RVector::Zero(2), vec({1, 0}));
  const auto path = negcurv::integrate_geodesic(m, RVector::Zero(2), v, 1.0);
  EXPECT_NEAR(path.end().norm(), std::tanh(1.0), 1e-6);
}

TEST(Geodesic, LogBallSpeedConservation) {
  const RealifiedMetric m(RadialPotential::log_ball(), 1);
  const RVector x0 = vec({0.3, 0.1});
  const RVector v0 = negcurv::unit_speed(m, x0, vec({0.2, 1}));
  const auto path = negcurv::integrate_geodesic(m, x0, v0, 5.0);
  EXPECT_LE(path.max_speed_drift, 1e-6);
}

TEST(Geodesic, ExpRadialMatchesRadialDistance) {
  const RealifiedMetric m(RadialPotential::exp(), 1);
  for (double r : {1.0, 2.0}) {
    const double T = negcurv::radial_distance(RadialPotential::exp(), r);
    const RVector v = negcurv::unit_speed(m, RVector::Zero(2), vec({1, 0}));
    const auto path = negcurv::integrate_geodesic(m, RVector::Zero(2), v, T);
    EXPECT_NEAR(path.end().norm(), r, 1e-4);
  }
}

TEST(Geodesic, Reversal) {
  const RealifiedMetric m(RadialPotential::log_ball(), 1);
  const RVector x0 = vec({-0.2, 0.4});
  const RVector v0 = negcurv::unit_speed(m, x0, vec({1, 0.3}));
  const auto fwd = negcurv::integrate_geodesic(m, x0, v0, 3.0);
  const auto back = negcurv::integrate_geodesic(m, fwd.end(), -fwd.velocities.back(), 3.0);
  EXPECT_LE((back.end() - x0).norm(), 1e-5);
}

TEST(Geodesic, DomainExit) {
  const RealifiedMetric m(RadialPotential::log_ball(), 1);
  negcurv::GeodesicOptions opt;
  opt.steps = 20;
  EXPECT_THROW(negcurv::integrate_geodesic(m, RVector::Zero(2), vec({1, 0}), 30.0, opt), negcurv::DomainExited);
  opt.allow_exit = true;
  const auto path = negcurv::integrate_geodesic(m, RVector::Zero(2), vec({1, 0}), 30.0, opt);
  EXPECT_TRUE(path.exited_domain);
  EXPECT_LT(path.t.back(), 30.0);
}

TEST(Geodesic, LongRunOnLogBallStopsAtPrecisionLimit) {
  // The radius approaches 1 like 1 - 2 exp(-2t); past t ~ 12 the margin is
  // below 1e-10 and rounding of the position alone moves the measured speed
  // by more than the drift bound. The integrator must report that rather than
  // return a silently wrong path.
  const RealifiedMetric m(RadialPotential::log_ball(), 1);
  try {
    negcurv::integrate_geodesic(m, RVector::Zero(2), vec({1, 0}), 100.0);
    FAIL() << "expected the run to stop";
  } catch (const negcurv::StepTooLarge& e) {
    EXPECT_GT(e.drift(), 1e-4);
  } catch (const negcurv::DomainExited& e) {
    EXPECT_GT(e.exit_time(), 10.0);
  }
  const auto ten = negcurv::integrate_geodesic(m, RVector::Zero(2), vec({1, 0}), 10.0);
  EXPECT_NEAR(ten.end().norm(), std::tanh(10.0), 1e-12);
}

TEST(Geodesic, DriftBreachRaises) {
  const RealifiedMetric m(RadialPotential::exp(), 1);
  negcurv::GeodesicOptions opt;
  opt.steps = 4;
  const RVector x0 = vec({1.5, 0});
  EXPECT_THROW(negcurv::integrate_geodesic(m, x0, negcurv::unit_speed(m, x0, vec({0, 1})), 6.0, opt),
               negcurv::StepTooLarge);
}

TEST(Geodesic, DistanceEuclidean) {
  const RealifiedMetric m(RadialPotential::linear(), 1);
  EXPECT_NEAR(negcurv::distance_estimate(m, vec({0, 0}), vec({3, 4})).distance, 5.0, 1e-6);
  EXPECT_NEAR(negcurv::distance_estimate(m, vec({1, 1}), vec({4, 5}), 4).distance, 5.0, 1e-6);
}

TEST(Geodesic, DistanceLogBallFromOrigin) {
  const RealifiedMetric m(RadialPotential::log_ball(), 1);
  const auto d = negcurv::distance_estimate(m, vec({0, 0}), vec({0.3, 0.4}));
  EXPECT_NEAR(d.distance, std::atanh(0.5), 1e-6);
  // The oracle itself, validated at the origin before use below.
  EXPECT_NEAR(oracle::disc4_poincare_distance(0.0, {0.3, 0.4}), std::atanh(0.5), 1e-12);
}

TEST(Geodesic, DistanceLogBallMatchesDiscFormula) {
  const RealifiedMetric m(RadialPotential::log_ball(), 1);
  for (std::uint64_t s = 0; s < 4; ++s) {
    negcurv::CounterRng rng(31, s);
    const std::complex<double> z = std::polar(0.7 * std::sqrt(rng.uniform()), rng.uniform(0, 2 * M_PI));
    const std::complex<double> w = std::polar(0.7 * std::sqrt(rng.uniform()), rng.uniform(0, 2 * M_PI));
    const auto est = negcurv::distance_estimate(m, vec({z.real(), z.imag()}), vec({w.real(), w.imag()}), 8);
    EXPECT_NEAR(est.distance, oracle::disc4_poincare_distance(z, w), 1e-6);
    const auto rev = negcurv::distance_estimate(m, vec({w.real(), w.imag()}), vec({z.real(), z.imag()}), 8);
    EXPECT_NEAR(est.distance, rev.distance, 1e-6);
  }
}

TEST(Geodesic, DistanceTriangleInequality) {
  const RealifiedMetric m(RadialPotential::exp(), 1);
  const RVector p = vec({0.3, 0.2}), q = vec({-0.4, 0.5}), mid = vec({0.1, -0.3});
  const double pq = negcurv::distance_estimate(m, p, q, 8).distance;
  const double pm = negcurv::distance_estimate(m, p, mid, 8).distance;
  const double mq = negcurv::distance_estimate(m, mid, q, 8).distance;
  EXPECT_LE(pq, pm + mq + 1e-5);
}

TEST(Geodesic, RadialRayIsUnitSpeed) {
  const RealifiedMetric m(RadialPotential::exp(), 1);
  const auto ray = negcurv::radial_ray(m, vec({3, 4}));
  for (double t : {0.5, 1.0, 4.0, 20.0}) {
    const RVector x = ray(t);
    EXPECT_NEAR(negcurv::radial_distance(RadialPotential::exp(), x.norm()), t, 1e-10 * t);
    EXPECT_NEAR(x[1] / x[0], 4.0 / 3.0, 1e-12);
  }
  EXPECT_EQ(ray(0.0).norm(), 0.0);
  EXPECT_THROW(negcurv::radial_ray(m, vec({0, 0})), negcurv::DomainError);
}

TEST(Geodesic, TraceCsv) {
  const RealifiedMetric m(RadialPotential::linear(), 1);
  const auto path = negcurv::integrate_geodesic(m, RVector::Zero(2), vec({1, 0}), 1.0, {.steps = 2});
  std::ostringstream os;
  negcurv::write_trace_csv(os, path);
  EXPECT_EQ(os.str(), "t,x_1,x_2,speed\n0,0,0,1\n0.5,0.5,0,1\n1,1,0,1\n");
}
