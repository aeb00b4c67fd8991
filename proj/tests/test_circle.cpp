#include <gtest/gtest.h>

#include <random>

#include "crank/crank.hpp"
#include "oracles.hpp"

using namespace crank;

namespace {

// Principal parts at m without the (-1)^{m r} factor.
Complex unsigned_expansion(int r, Complex w, long M) {
  const auto d = ml_alphas(r);
  Complex s = 0;
  for (long m = -M; m <= M; ++m) {
    const Complex z = -2.0 * pi * kI * (w - static_cast<double>(m));
    for (const auto& [j, a] : d.alphas) s += to_double(a) * std::pow(z, -j);
  }
  return s;
}

const std::vector<double> kZagierTs{0.5, 0.4, 0.32, 0.25, 0.2};

}  // namespace

TEST(MittagLeffler, Alphas) {
  for (int r = 1; r <= 12; ++r) {
    const auto d = ml_alphas(r);
    EXPECT_EQ(d.alphas.at(r), 1);
    if (r >= 3) {
      EXPECT_EQ(d.alphas.at(r - 2), Rational(-r, 24));
    }
    for (const auto& [j, a] : d.alphas) {
      EXPECT_EQ((r - j) % 2, 0);
      EXPECT_GT(j, 0);
    }
  }
  EXPECT_EQ(ml_alphas(3).alphas.at(1), Rational(-1, 8));
  EXPECT_EQ(ml_alphas(5).alphas.at(3), Rational(-5, 24));
  EXPECT_EQ(ml_alphas(5).alphas.at(1), Rational(3, 128));
  EXPECT_THROW(ml_alphas(0), UnsupportedParameter);
  EXPECT_THROW(ml_alphas(13), UnsupportedParameter);
}

TEST(MittagLeffler, AlphasAreLaurentCoefficients) {
  for (int r = 1; r <= 8; ++r) {
    const auto d = ml_alphas(r);
    const auto kernel = [r](Complex w) { return ml_kernel(r, w); };
    for (int j = 1; j <= r; ++j) {
      const Complex c = oracle::laurent_coefficient(kernel, j);
      const Complex expect = d.alpha(j) * std::pow(-2.0 * pi * kI, -j);
      EXPECT_LT(std::abs(c - expect), 1e-12 * std::max(1.0, std::abs(expect))) << r << ' ' << j;
    }
  }
}

TEST(MittagLeffler, SingleWExample) {
  const Complex w(0.3, 0.2);
  EXPECT_LT(std::abs(ml_expand(1, w, 10000) - ml_kernel(1, w)), 1e-10);
}

TEST(MittagLeffler, RandomPointsConvergeWithM) {
  std::mt19937_64 gen(20240601);
  std::uniform_real_distribution<double> U(-0.49, 0.49);
  for (int r = 1; r <= 6; ++r) {
    for (int i = 0; i < 20; ++i) {
      Complex w;
      do {
        w = Complex(U(gen), U(gen));
      } while (std::abs(w) >= 0.5 || std::abs(w.imag()) < 1e-3);
      const Complex k = ml_kernel(r, w);
      const double e100 = std::abs(ml_expand(r, w, 100, false) - k);
      const double e10k = std::abs(ml_expand(r, w, 10000, false) - k);
      if (r >= 2) {
        EXPECT_LT(e10k, e100) << r << ' ' << w;
      }
      EXPECT_LT(std::abs(ml_expand(r, w, 10000) - k), 1e-9 * std::max(1.0, std::abs(k))) << r << ' ' << w;
    }
  }
}

TEST(MittagLeffler, SignFactorIsRequiredForOddOrder) {
  const Complex w(0.3, 0.2);
  for (int r : {1, 3, 5}) {
    const Complex k = ml_kernel(r, w);
    EXPECT_LT(std::abs(ml_expand(r, w, 10000) - k), 1e-9);
    EXPECT_GT(std::abs(unsigned_expansion(r, w, 2000) - k), 1e-3 * std::abs(k)) << r;
  }
  for (int r : {2, 4}) EXPECT_LT(std::abs(unsigned_expansion(r, w, 20000) - ml_kernel(r, w)), 1e-4) << r;
}

TEST(Glj, DeepInUpperHalfPlane) {
  const Complex tau(0.0, 10.0);
  for (int ell : {1, 3}) {
    const Complex g = g_lj(ell, 2, 0.5, tau);
    const Complex first = std::exp(2 * pi * kI * tau * (ell / 2.0 + 0.5));
    EXPECT_LT(std::abs(g - first), 1e-12 * std::abs(first));
  }
}

TEST(Glj, LimitAtZeroIsEta) {
  for (int j = 1; j <= 5; ++j)
    for (int ell : {1, 3}) {
      const double rho = j % 2 == 0 ? 0.5 : 0.0;
      EXPECT_NEAR(g_lj(ell, j, rho, Complex(0.0, 1e-5)).real(), dirichlet_eta(j), 1e-3) << j;
    }
  EXPECT_THROW(g_lj(1, 1, 0.0, Complex(0.3, 0.0)), DomainError);
}

TEST(Glj, BoundedOnMainArc) {
  const std::vector<double> Ns{1e2, 1e3, 1e4, 1e5, 1e6};
  for (int ell : {1, 3})
    for (int j : {-1, 0, 1, 2}) {
      const auto c = glj_check(ell, j, Ns);
      EXPECT_TRUE(c.stable()) << ell << ' ' << j;
      EXPECT_LT(*std::max_element(c.K.begin(), c.K.end()), 10.0);
    }
}

TEST(BoundChecks, StableConstants) {
  const std::vector<double> Ns{1e2, 1e3, 1e4, 1e5};
  EXPECT_TRUE(qinfty_check(Ns).stable());
  for (int ell : {1, 3})
    for (int r = 1; r <= 4; ++r) {
      EXPECT_TRUE(slr_check(ell, r, Ns).stable()) << ell << ' ' << r;
      EXPECT_TRUE(slraway_check(ell, r, Ns).stable()) << ell << ' ' << r;
      EXPECT_TRUE(flraway_check(ell, r, Ns).stable()) << ell << ' ' << r;
    }
}

TEST(BoundChecks, CsvHasOneRowPerSample) {
  const auto c = qinfty_check({100, 1000}, 5);
  std::ostringstream os;
  write_bound_csv(os, c);
  const std::string text = os.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 11);
}

TEST(WrightIntegrals, ReproduceCoefficients) {
  for (int ell : {1, 3}) {
    const auto a = wright_integrals(ell, 3, 50);
    EXPECT_LE(a.relative_error, 1e-6) << ell;
    EXPECT_EQ(a.exact_coefficient, symmetrized_moments(ell, 3, 50).values[50]);
  }
}

TEST(WrightIntegrals, ErrorArcShrinks) {
  double prev = 1.0;
  for (int N : {50, 100, 200}) {
    const auto a = wright_integrals(1, 4, N);
    EXPECT_LT(a.arc_ratio, prev) << N;
    EXPECT_LT(a.arc_ratio, 1.0);
    prev = a.arc_ratio;
  }
  EXPECT_THROW(wright_integrals(1, 3, 19), UnsupportedParameter);
  EXPECT_THROW(wright_integrals(1, 3, 401), UnsupportedParameter);
  EXPECT_THROW(wright_integrals(2, 3, 50), UnsupportedParameter);
}

TEST(PsIntegral, BesselAgreement) {
  double prev = 1.0;
  for (double N : {60.0, 100.0, 160.0}) {
    const double dev = p_s_bessel_deviation(0.5 - 3, N);
    EXPECT_LE(dev, std::exp(-pi / 2 * std::sqrt(N / 6)));
    EXPECT_LT(dev, prev);
    prev = dev;
  }
  EXPECT_LE(p_s_bessel_deviation(0.0, 60), std::exp(-pi / 2 * std::sqrt(10.0)));
}

TEST(PsIntegral, ScaledValuePositive) {
  const auto p = p_s_integral(-2.5, 100);
  EXPECT_GT(p.scaled.real(), 0.0);
  EXPECT_NEAR(p.log_scale, 2 * pi * std::sqrt(100.0 / 6), 1e-12);
}

TEST(Bernoulli, Polynomials) {
  for (double x : {0.0, 0.3, 0.5, 1.0}) {
    EXPECT_NEAR(bernoulli_polynomial(1, x), x - 0.5, 1e-15);
    EXPECT_NEAR(bernoulli_polynomial(2, x), x * x - x + 1.0 / 6, 1e-15);
    EXPECT_NEAR(bernoulli_polynomial(3, x), x * x * x - 1.5 * x * x + 0.5 * x, 1e-15);
  }
  for (unsigned n = 2; n < 12; ++n) EXPECT_NEAR(bernoulli_polynomial(n, 1.0), bernoulli_polynomial(n, 0.0), 1e-12);
}

TEST(Zagier, ZeroOrderExpansion) {
  const auto f = zagier_exp();
  for (double a : {0.5, 1.0, 2.0})
    EXPECT_NEAR(zagier_expand(f, a, 0.1, 0), f.integral / 0.1 - f.taylor[0] * (a - 0.5), 1e-14);
}

TEST(Zagier, ResidualSlopes) {
  for (const auto& f : zagier_builtins())
    for (double a : {0.5, 1.0})
      for (std::size_t S = 0; S <= 3; ++S) EXPECT_GE(zagier_residual_slope(f, a, S, kZagierTs), S + 0.5) << f.name << ' ' << a << ' ' << S;
}

TEST(Zagier, DirectSumExact) {
  // sum_{m>=0} e^{-(m+1)t} = 1/(e^t - 1)
  EXPECT_NEAR(zagier_direct(zagier_exp(), 1.0, 0.01), 1 / std::expm1(0.01), 1e-10);
}

TEST(AppendixSums, JOneSum) {
  const double y = 1e-4;
  EXPECT_NEAR(j1_sum_direct(y) * 2 * pi * y, 1.0, 1e-3);
}

TEST(AppendixSums, GAgainstQuarterY) {
  for (double y : {1e-3, 1e-2}) {
    EXPECT_NEAR(g_direct(y), y / 4, 1e-5 * (y / 1e-3) * (y / 1e-3));
    EXPECT_NEAR(g_offset_form(y), g_direct(y), 1e-12);
  }
}

TEST(AppendixSums, TLimit) {
  const auto rows = t_limit_check({1e-1, 1e-2, 1e-3, 1e-4});
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].deviation, rows[i - 1].deviation);
  EXPECT_LT(rows.back().deviation, 1e-3);
  EXPECT_THROW(t_limit_check({1.5}), DomainError);
}
