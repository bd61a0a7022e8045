#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "negcurv/errors.hpp"
#include "negcurv/kahler.hpp"
#include "negcurv/rng.hpp"
#include "oracles.hpp"

using negcurv::CVector;
using negcurv::Complex;
using negcurv::PointCn;
using negcurv::RadialPotential;
using negcurv::RVector;

namespace {

CVector random_cvector(negcurv::CounterRng& rng, int n) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(rng.normal(), rng.normal());
  return v;
}

// Uniform-ish point in the Euclidean ball of radius rmax.
PointCn random_point(negcurv::CounterRng& rng, int n, double rmax) {
  CVector z = random_cvector(rng, n);
  z *= rmax * std::pow(rng.uniform(), 1.0 / (2 * n)) / z.norm();
  return {z};
}

PointCn along_e1(int n, double r) {
  CVector z = CVector::Zero(n);
  z[0] = r;
  return {z};
}

CVector unit(int n, int i) {
  CVector v = CVector::Zero(n);
  v[i] = 1.0;
  return v;
}

}  // namespace

TEST(Kahler, MetricExamples) {
  const auto lin = negcurv::metric_at(RadialPotential::linear(), along_e1(2, 0.7));
  EXPECT_TRUE(lin.g.isApprox(negcurv::CMatrix::Identity(2, 2), 1e-15));
  const auto ex = negcurv::metric_at(RadialPotential::exp(), along_e1(2, 0.0));
  EXPECT_TRUE(ex.g.isApprox(negcurv::CMatrix::Identity(2, 2), 1e-15));
  const auto lb = negcurv::metric_at(RadialPotential::log_ball(), along_e1(1, std::sqrt(0.5)));
  EXPECT_NEAR(lb.g(0, 0).real(), 4.0, 1e-12);
}

TEST(Kahler, MetricNotPositiveDefinite) {
  // f = x - x^2/2 at |z|^2 = 0.8: f' + x f'' = -0.6.
  EXPECT_THROW(negcurv::metric_at(RadialPotential::parse("poly:1,-0.5"), along_e1(1, std::sqrt(0.8))),
               negcurv::NotPositiveDefinite);
}

TEST(Kahler, OriginTensorOneDimensional) {
  for (const auto& p : {RadialPotential::log_ball(), RadialPotential::exp()}) {
    const auto t = negcurv::curvature_tensor_at(p, along_e1(1, 0.0));
    EXPECT_NEAR(t(0, 0, 0, 0).real(), -2.0, 1e-14);
    EXPECT_NEAR(t(0, 0, 0, 0).imag(), 0.0, 1e-14);
  }
}

TEST(Kahler, LogBallOriginTensorClosedForm) {
  const int n = 2;
  const auto t = negcurv::curvature_tensor_at(RadialPotential::log_ball(), along_e1(n, 0.0));
  const auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          EXPECT_NEAR(std::abs(t(i, j, k, l) - Complex(-(d(i, j) * d(k, l) + d(i, l) * d(k, j)))), 0.0, 1e-14);
        }
  EXPECT_NEAR(negcurv::holomorphic_sectional(t, unit(n, 0)), -4.0, 1e-14);
  EXPECT_NEAR(negcurv::holomorphic_bisectional(t, unit(n, 0), unit(n, 1)), -2.0, 1e-14);
}

TEST(Kahler, FlatPotentialIsFlat) {
  for (int n = 1; n <= 3; ++n) {
    negcurv::CounterRng rng(1, n);
    const PointCn z = random_point(rng, n, 3.0);
    const auto t = negcurv::curvature_tensor_at(RadialPotential::linear(), z);
    EXPECT_EQ(t.max_abs(), 0.0);
    EXPECT_EQ(negcurv::ricci_at(RadialPotential::linear(), z).ricci_lower, 0.0);
  }
}

TEST(Kahler, TensorSymmetries) {
  const int n = 3;
  for (std::uint64_t s = 0; s < 5; ++s) {
    negcurv::CounterRng rng(2, s);
    const auto t = negcurv::curvature_tensor_at(RadialPotential::exp(), random_point(rng, n, 1.5));
    const double scale = t.max_abs();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            EXPECT_LE(std::abs(t(i, j, k, l) - t(k, j, i, l)), 1e-12 * scale);
            EXPECT_LE(std::abs(t(i, j, k, l) - t(i, l, k, j)), 1e-12 * scale);
            EXPECT_LE(std::abs(std::conj(t(i, j, k, l)) - t(j, i, l, k)), 1e-12 * scale);
          }
  }
}

TEST(Kahler, LogBallHolomorphicSectionalIsMinusFour) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t s = 0; s < 40; ++s) {
      negcurv::CounterRng rng(3, s);
      const PointCn z = random_point(rng, n, 0.9);
      const auto t = negcurv::curvature_tensor_at(RadialPotential::log_ball(), z);
      EXPECT_NEAR(negcurv::holomorphic_sectional(t, random_cvector(rng, n)), -4.0, 1e-9);
    }
  }
}

TEST(Kahler, LogBallGaussianCurvatureOracle) {
  // n = 1: the metric is lambda |dz|^2 with lambda = 1/(1-|z|^2)^2.
  const auto lambda = [](double x, double y) {
    const double q = 1 - x * x - y * y;
    return 1 / (q * q);
  };
  for (std::uint64_t s = 0; s < 20; ++s) {
    negcurv::CounterRng rng(4, s);
    const PointCn z = random_point(rng, 1, 0.9);
    const double K_oracle = oracle::conformal_gaussian_curvature(lambda, z.z[0].real(), z.z[0].imag(), 1e-4);
    EXPECT_NEAR(K_oracle, -4.0, 1e-5);
    RVector X(2), Y(2);
    X << 1, 0;
    Y << 0, 1;
    EXPECT_NEAR(negcurv::real_sectional(RadialPotential::log_ball(), z, X, Y), K_oracle, 1e-5);
  }
}

TEST(Kahler, ExpGaussianCurvatureOracle) {
  const auto lambda = [](double x, double y) {
    const double r2 = x * x + y * y;
    return std::exp(r2) * (1 + r2);
  };
  for (double r : {0.3, 1.0, 1.7}) {
    const double K_oracle = oracle::conformal_gaussian_curvature(lambda, r, 0.0, 1e-4);
    const auto t = negcurv::curvature_tensor_at(RadialPotential::exp(), along_e1(1, r));
    EXPECT_NEAR(negcurv::holomorphic_sectional(t, unit(1, 0)), K_oracle, 1e-6 * std::max(1.0, std::abs(K_oracle)));
  }
}

TEST(Kahler, ExpClosedFormsAlongAxis) {
  // Hand-derived and independently checked symbolically at z = (r, 0).
  for (double r : {0.5, 1.0, 2.0, 3.0}) {
    const double x = r * r;
    const auto t = negcurv::curvature_tensor_at(RadialPotential::exp(), along_e1(2, r));
    const double tangential = -4 * std::exp(-x);
    const double mixed = -2 / ((1 + x) * std::exp(x));
    const double radial = -2 * (2 + 2 * x + x * x) / (std::exp(x) * std::pow(1 + x, 3));
    EXPECT_NEAR(negcurv::holomorphic_sectional(t, unit(2, 1)), tangential, 1e-10 * std::abs(tangential));
    EXPECT_NEAR(negcurv::holomorphic_bisectional(t, unit(2, 0), unit(2, 1)), mixed, 1e-10 * std::abs(mixed));
    EXPECT_NEAR(negcurv::holomorphic_sectional(t, unit(2, 0)), radial, 1e-10 * std::abs(radial));
  }
}

TEST(Kahler, ScalingAndSymmetry) {
  negcurv::CounterRng rng(6, 0);
  const auto t = negcurv::curvature_tensor_at(RadialPotential::exp(), random_point(rng, 3, 1.2));
  for (int i = 0; i < 20; ++i) {
    const CVector v = random_cvector(rng, 3);
    const CVector w = random_cvector(rng, 3);
    const Complex alpha(rng.normal(), rng.normal());
    const double H = negcurv::holomorphic_sectional(t, v);
    EXPECT_NEAR(negcurv::holomorphic_sectional(t, alpha * v), H, 1e-12 * std::abs(H));
    const double B = negcurv::holomorphic_bisectional(t, v, w);
    EXPECT_NEAR(negcurv::holomorphic_bisectional(t, w, v), B, 1e-10 * std::max(1.0, std::abs(B)));
  }
  EXPECT_THROW(negcurv::holomorphic_bisectional(t, CVector::Zero(3), unit(3, 0)), negcurv::ZeroVector);
  EXPECT_THROW(negcurv::holomorphic_sectional(t, CVector::Zero(3)), negcurv::ZeroVector);
}

TEST(Kahler, RicciIsTraceOfTensor) {
  for (int n = 1; n <= 3; ++n) {
    negcurv::CounterRng rng(7, n);
    const PointCn z = random_point(rng, n, 1.5);
    const auto p = RadialPotential::exp();
    const auto t = negcurv::curvature_tensor_at(p, z);
    const auto ric = negcurv::ricci_at(p, z).ricci;
    const auto& M = t.metric().g_inv;
    const double scale = ric.cwiseAbs().maxCoeff();
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        Complex trace = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) trace += M(j, i) * t(i, j, k, l);
        EXPECT_LE(std::abs(trace - ric(k, l)), 1e-8 * scale);
      }
  }
}

TEST(Kahler, LogBallRicciLowerBound) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      negcurv::CounterRng rng(8, s);
      // Ric = -(n + 1) g in complex terms, so the real lower bound is -2(n + 1).
      EXPECT_NEAR(negcurv::ricci_at(RadialPotential::log_ball(), random_point(rng, n, 0.9)).ricci_lower,
                  -2.0 * (n + 1), 1e-8);
    }
  }
}

TEST(Kahler, RealSectionalMatchesHolomorphicOnComplexLines) {
  const auto p = RadialPotential::exp();
  for (std::uint64_t s = 0; s < 20; ++s) {
    negcurv::CounterRng rng(9, s);
    const PointCn z = random_point(rng, 2, 2.0);
    const CVector v = random_cvector(rng, 2);
    const RVector X = negcurv::realify(v);
    const double K = negcurv::real_sectional(p, z, X, negcurv::complex_structure(X));
    const double H = negcurv::holomorphic_sectional(negcurv::curvature_tensor_at(p, z), v);
    EXPECT_NEAR(K, H, 1e-4 * std::max(1.0, std::abs(H)));
  }
}

TEST(Kahler, RealSectionalRejectsDegeneratePlanes) {
  RVector X(4);
  X << 1, 2, 0, 0;
  EXPECT_THROW(negcurv::real_sectional(RadialPotential::exp(), along_e1(2, 1.0), X, 3.0 * X),
               negcurv::DegeneratePlane);
}

TEST(Kahler, RangeReportInvariants) {
  const std::vector<double> radii{0.5, 1.5};
  const auto rep = negcurv::curvature_range_report(RadialPotential::exp(), 2, radii, 50, 7);
  ASSERT_EQ(rep.rows.size(), 2u);
  for (const auto& row : rep.rows) {
    EXPECT_LE(row.K_min, row.K_max);
    ASSERT_EQ(row.K_samples.size(), 100u);
    ASSERT_EQ(row.H_samples.size(), 50u);
    for (std::size_t i = 0; i < row.H_samples.size(); ++i) {
      // Sample 2i + 1 is the complex line {X, JX} of draw i.
      EXPECT_NEAR(row.K_samples[2 * i + 1], row.H_samples[i], 1e-4 * std::max(1.0, std::abs(row.H_samples[i])));
    }
    EXPECT_LT(row.K_max, 0.0);
  }
}

TEST(Kahler, RangeReportIndependentOfWorkers) {
  const std::vector<double> radii{1.0, 2.0, 3.0};
  ::setenv("NEGCURV_THREADS", "1", 1);
  const auto a = negcurv::curvature_range_report(RadialPotential::exp(), 2, radii, 40, 3);
  ::setenv("NEGCURV_THREADS", "3", 1);
  const auto b = negcurv::curvature_range_report(RadialPotential::exp(), 2, radii, 40, 3);
  ::unsetenv("NEGCURV_THREADS");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    EXPECT_EQ(a.rows[i].K_samples, b.rows[i].K_samples);
    EXPECT_EQ(a.rows[i].B_samples, b.rows[i].B_samples);
  }
}

TEST(Kahler, LogBallReportIsConstant) {
  const std::vector<double> radii{0.1, 0.5, 0.9};
  const auto rep = negcurv::curvature_range_report(RadialPotential::log_ball(), 1, radii, 10, 0);
  for (const auto& row : rep.rows) {
    EXPECT_NEAR(row.K_min, -4.0, 1e-5);
    EXPECT_NEAR(row.K_max, -4.0, 1e-5);
    EXPECT_NEAR(row.ricci_lower, -4.0, 1e-8);
  }
}
