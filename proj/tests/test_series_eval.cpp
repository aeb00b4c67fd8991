#include <gtest/gtest.h>

#include "crank/crank.hpp"

using namespace crank;

namespace {

Complex horner(const ExactSeries& s, Complex q) {
  Complex v = 0;
  for (std::size_t n = s.nmax() + 1; n-- > 0;) v = v * q + s[n].convert_to<double>();
  return v;
}

}  // namespace

TEST(EvalComplex, EulerInverseAtZero) {
  const auto e = eval_complex(EulerInverse{}, Complex(0.0, 0.0));
  EXPECT_EQ(e.value, Complex(1.0, 0.0));
}

TEST(EvalComplex, SSeriesMatchesIntegerSeries) {
  const Complex q(0.1, 0.0);
  const auto e = eval_complex(SSeries{1, 2}, q);
  const Complex ref = horner(appell_s_series(1, 2, 60), q);
  EXPECT_NEAR(std::abs(e.value - ref), 0.0, 1e-15 * std::abs(ref) + 1e-300);
  EXPECT_LE(e.tail_bound, 1e-15 * std::abs(e.value));
}

TEST(EvalComplex, CrossCheckAgainstCoefficientsOnComplexDisc) {
  const std::vector<Complex> qs{{0.3, 0.4}, {-0.5, 0.1}, {0.0, -0.6}, {0.45, 0.0}};
  for (Complex q : qs) {
    const auto p = eval_complex(EulerInverse{}, q).value;
    EXPECT_LT(std::abs(p - horner(euler_inverse(300), q)), 1e-12 * std::abs(p));
    const auto t = eval_complex(TSeries{}, q).value;
    EXPECT_LT(std::abs(t - horner(t_series(300), q)), 1e-12);
    for (int ell : {1, 3})
      for (int r = 1; r <= 5; ++r) {
        const auto s = eval_complex(SSeries{ell, r}, q).value;
        EXPECT_LT(std::abs(s - horner(appell_s_series(ell, r, 400), q)), 1e-11 * std::max(1.0, std::abs(s)));
        EXPECT_LT(std::abs(eval_f(ell, r, q) - s * p), 1e-12 * std::abs(s * p) + 1e-300);
      }
  }
}

TEST(EvalComplex, TNearOne) {
  const double v = eval_complex(TSeries{}, Complex(std::exp(-1e-4), 0.0)).value.real();
  EXPECT_NEAR(v, 0.25, 1e-3);
  const double w = eval_complex(TSeries{}, Complex(std::exp(-1.0), 0.0)).value.real();
  EXPECT_LT(std::abs(w), 1.0);
}

TEST(EvalComplex, OutsideDiscIsDomainError) {
  EXPECT_THROW(eval_complex(EulerInverse{}, Complex(1.0, 0.0)), DomainError);
  EXPECT_THROW(eval_complex(TSeries{}, Complex(0.0, 1.2)), DomainError);
  EXPECT_THROW(eval_f(1, 1, Complex(-1.0, 0.0)), DomainError);
}

TEST(EvalComplex, ReportsTailBound) {
  const auto e = eval_complex(SSeries{3, 4}, std::exp(Complex(-0.05, 0.3)));
  EXPECT_GT(e.terms, 0u);
  EXPECT_LE(e.tail_bound, 1e-14 * std::abs(e.value));
}

TEST(EvalComplex, LogEulerInverseConsistent) {
  const Complex q = std::exp(Complex(-0.01, 0.02));
  const auto lg = log_euler_inverse(q).value;
  const auto lf = log_eval_f(1, 3, q);
  const auto s = eval_complex(SSeries{1, 3}, q).value;
  EXPECT_LT(std::abs(std::exp(lf - lg) - s) / std::abs(s), 1e-9);
}
