#pragma once

// Numerical side of the circle method: the sine-kernel partial fraction
// decomposition, the theta-type sums g_{l,j}, the main-arc/error-arc split of
// the Cauchy integral, Wright's auxiliary integral P_s, Euler-Maclaurin style
// expansions of sums f((m+a)t), and grid checks of the uniform bounds.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "crank/asymptotics.hpp"
#include "crank/bigint.hpp"
#include "crank/error.hpp"
#include "crank/quadrature.hpp"
#include "crank/series.hpp"
#include "crank/series_eval.hpp"

namespace crank {

using std::numbers::pi;

inline constexpr Complex kI{0.0, 1.0};

// ---------------------------------------------------------------------------
// Partial fractions of (-2i sin(pi w))^{-r}

/// Principal-part coefficients at w = 0 in powers of (-2 pi i w)^{-j}, for 0 < j <= r, j = r mod 2.
struct MLDecomposition {
  int r = 0;
  std::map<int, Rational> alphas;

  double alpha(int j) const {
    const auto it = alphas.find(j);
    return it == alphas.end() ? 0.0 : to_double(it->second);
  }
};

/// alpha_{r-2k} = s_k (-1/4)^k where (sin x / x)^{-r} = sum_k s_k x^{2k}.
inline MLDecomposition ml_alphas(int r) {
  if (r < 1 || r > 12) throw UnsupportedParameter("ml_alphas supports 1 <= r <= 12");
  const std::size_t K = static_cast<std::size_t>(r - 1) / 2;  // keep 2k < r
  // sin x / x in powers of x^2
  std::vector<Rational> u(K + 1);
  for (std::size_t k = 0; k <= K; ++k)
    u[k] = Rational(k % 2 == 0 ? 1 : -1) / Rational(factorial(static_cast<unsigned>(2 * k + 1)));
  std::vector<Rational> inv(K + 1);
  inv[0] = 1;
  for (std::size_t k = 1; k <= K; ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += u[i] * inv[k - i];
    inv[k] = -s;
  }
  std::vector<Rational> pow(K + 1);
  pow[0] = 1;
  for (int e = 0; e < r; ++e) {
    std::vector<Rational> next(K + 1);
    for (std::size_t i = 0; i <= K; ++i)
      for (std::size_t k = 0; i + k <= K; ++k) next[i + k] += pow[i] * inv[k];
    pow = std::move(next);
  }
  MLDecomposition d{r, {}};
  Rational quarter = 1;
  for (std::size_t k = 0; k <= K; ++k) {
    d.alphas[r - 2 * static_cast<int>(k)] = pow[k] * quarter;
    quarter *= Rational(-1, 4);
  }
  return d;
}

inline Complex ml_kernel(int r, Complex w) { return std::pow(-2.0 * kI * std::sin(pi * w), -r); }

namespace detail {

inline Complex ml_principal(const MLDecomposition& d, Complex w, long m) {
  Complex s = 0;
  const Complex z = -2.0 * pi * kI * (w - static_cast<double>(m));
  for (const auto& [j, a] : d.alphas) s += to_double(a) * std::pow(z, -j);
  return (m % 2 != 0 && d.r % 2 != 0) ? -s : s;
}

/// sum_{m>M} (m + c)^{-j} by Euler-Maclaurin at the cut.
inline Complex em_tail(Complex c, int j, long M) {
  const Complex b = static_cast<double>(M) + c;
  return std::pow(b, 1 - j) / static_cast<double>(j - 1) - 0.5 * std::pow(b, -j) +
         static_cast<double>(j) / 12.0 * std::pow(b, -j - 1) -
         static_cast<double>(j) * (j + 1) * (j + 2) / 720.0 * std::pow(b, -j - 3);
}

}  // namespace detail

/// Sum of the principal parts at m with |m| <= M. With `accelerate`, odd r averages
/// the partial sums at M and M+1 (the m-sum alternates) and even r adds an
/// Euler-Maclaurin estimate of the |m| > M tail.
inline Complex ml_expand(int r, Complex w, long M, bool accelerate = true) {
  const auto d = ml_alphas(r);
  Complex s = detail::ml_principal(d, w, 0);
  for (long m = 1; m <= M; ++m) s += detail::ml_principal(d, w, m) + detail::ml_principal(d, w, -m);
  if (!accelerate) return s;
  if (r % 2 != 0) {
    const Complex next = s + detail::ml_principal(d, w, M + 1) + detail::ml_principal(d, w, -(M + 1));
    return (s + next) / 2.0;
  }
  for (const auto& [j, a] : d.alphas)
    s += to_double(a) * std::pow(2.0 * pi * kI, -j) * (detail::em_tail(-w, j, M) + detail::em_tail(w, j, M));
  return s;
}

// ---------------------------------------------------------------------------
// g_{l,j}(tau) = sum_{n>=1} (-1)^(n+1) n^-j q^{l n^2/2 + rho n},  q = e^{2 pi i tau}

inline Complex g_lj(int ell, int j, double rho, Complex tau, double tol = 1e-13) {
  if (!(tau.imag() > 0)) throw DomainError("g_lj needs Im tau > 0");
  if (ell < 1) throw UnsupportedParameter("g_lj needs ell >= 1");
  const double y = tau.imag();
  auto exponent = [&](double n) { return ell * n * n / 2 + rho * n; };
  auto term = [&](std::size_t k) {
    const double n = static_cast<double>(k);
    return (k % 2 == 1 ? 1.0 : -1.0) * std::pow(n, -j) * std::exp(2 * pi * kI * tau * exponent(n));
  };
  auto majorant = [&](std::size_t k) {
    const double n = static_cast<double>(k);
    return std::pow(n, -j) * std::exp(-2 * pi * y * exponent(n));
  };
  auto ratio = [&](std::size_t k) {
    const double n = static_cast<double>(k);
    const double poly = j < 0 ? std::pow((n + 1) / n, -j) : 1.0;
    return poly * std::exp(-2 * pi * y * (ell * (2 * n + 1) / 2 + rho));
  };
  return detail::sum_with_tail(term, majorant, ratio, tol).value;
}

// ---------------------------------------------------------------------------
// Cauchy integral for a_{l,r}(N) on |q| = e^{-pi/sqrt(6N)}

struct QuadratureReport {
  int N = 0;
  int ell = 1;
  int r = 1;
  Complex I_prime;
  Complex I_double_prime;
  BigInt exact_coefficient;
  double relative_error = 0.0;
  double arc_ratio = 0.0;  // |I''| / |I'|
  std::size_t evaluations = 0;
  double estimated_quadrature_error = 0.0;
};

/// Integrand F(e^{-pi/sqrt(6N) + 2 pi i x}) e^{pi sqrt(N/6) - 2 pi i N x}.
inline Complex wright_integrand(int ell, int r, int N, double x) {
  const double n = N;
  const Complex q = std::exp(Complex(-pi / std::sqrt(6 * n), 2 * pi * x));
  const double phase = -2 * pi * std::remainder(n * x, 1.0);
  return eval_f(ell, r, q) * std::exp(pi * std::sqrt(n / 6)) * std::polar(1.0, phase);
}

inline QuadratureReport wright_integrals(int ell, int r, int N, double rel_tol = 1e-11) {
  require_ell(ell);
  if (r < 1) throw UnsupportedParameter("wright_integrals needs r >= 1");
  if (N < 20 || N > 400) throw UnsupportedParameter("wright_integrals supports 20 <= N <= 400");
  const double cut = 1 / (2 * std::sqrt(6.0 * N));
  auto f = [&](double x) { return wright_integrand(ell, r, N, x); };
  const auto main = integrate_complex(f, -cut, cut, rel_tol);
  const auto left = integrate_complex(f, -0.5, -cut, rel_tol);
  const auto right = integrate_complex(f, cut, 0.5, rel_tol);

  QuadratureReport rep;
  rep.N = N;
  rep.ell = ell;
  rep.r = r;
  rep.I_prime = main.value;
  rep.I_double_prime = left.value + right.value;
  rep.exact_coefficient = f_series(ell, r, static_cast<std::size_t>(N))[static_cast<std::size_t>(N)];
  const double exact = rep.exact_coefficient.convert_to<double>();
  rep.relative_error = std::abs(rep.I_prime + rep.I_double_prime - exact) / std::abs(exact);
  rep.arc_ratio = std::abs(rep.I_double_prime) / std::abs(rep.I_prime);
  rep.evaluations = main.evaluations + left.evaluations + right.evaluations;
  rep.estimated_quadrature_error = main.error + left.error + right.error;
  return rep;
}

// ---------------------------------------------------------------------------
// P_s = (1/2 pi i) int_{1-i}^{1+i} v^s e^{kappa (v + 1/v)} dv,  kappa = pi sqrt(N/6)

struct ScaledValue {
  Complex scaled;    // value * e^{-log_scale}
  double log_scale;  // 2 kappa
};

inline ScaledValue p_s_integral(double s, double N) {
  if (!(N >= 1)) throw DomainError("p_s_integral needs N >= 1");
  const double kappa = pi * std::sqrt(N / 6);
  auto f = [&](double t) {
    const Complex v(1.0, t);
    // kappa (v + 1/v) - 2 kappa, with 1/v = (1 - it)/(1 + t^2)
    const double d = 1 + t * t;
    const Complex e(kappa * (1 / d - 1), kappa * t * (1 - 1 / d));
    return std::pow(v, s) * std::exp(e);
  };
  const auto res = integrate_complex(f, -1.0, 1.0, 1e-13);
  return {res.value / (2 * pi), 2 * kappa};
}

/// |P_s - I_{-s-1}(2 kappa)| / |I_{-s-1}(2 kappa)| for half-integer or integer -s-1.
inline double p_s_bessel_deviation(double s, double N) {
  const auto p = p_s_integral(s, N);
  const double nu = -s - 1;
  const double x = 2 * pi * std::sqrt(N / 6);
  double bessel_scaled = 0;
  if (std::nearbyint(nu) == nu) {
    bessel_scaled = boost::math::cyl_bessel_i(std::abs(nu), x) * std::exp(-p.log_scale);
  } else {
    const LogValue b = log_bessel_i(nu, x);
    bessel_scaled = b.sign * std::exp(b.log_abs - p.log_scale);
  }
  return std::abs(p.scaled - bessel_scaled) / std::abs(bessel_scaled);
}

// ---------------------------------------------------------------------------
// Sums g(t) = sum_{m>=0} f((m+a)t) and their small-t expansion
// I_f/t - sum_{n<=S} b_n B_{n+1}(a)/(n+1) t^n.

struct ZagierFunction {
  std::string name;
  std::function<double(double)> f;
  std::vector<double> taylor;  // b_0, b_1, ...
  double integral = 0.0;       // int_0^inf f
};

inline constexpr std::size_t kZagierTaylorTerms = 16;

inline ZagierFunction zagier_exp() {
  ZagierFunction z{"exp(-u)", [](double u) { return std::exp(-u); }, {}, 1.0};
  for (std::size_t n = 0; n < kZagierTaylorTerms; ++n)
    z.taylor.push_back((n % 2 == 0 ? 1.0 : -1.0) / factorial(static_cast<unsigned>(n)).convert_to<double>());
  return z;
}

inline ZagierFunction zagier_gaussian_moment() {
  ZagierFunction z{"u*exp(-u^2)", [](double u) { return u * std::exp(-u * u); }, {}, 0.5};
  z.taylor.assign(kZagierTaylorTerms, 0.0);
  for (std::size_t k = 0; 2 * k + 1 < kZagierTaylorTerms; ++k)
    z.taylor[2 * k + 1] = (k % 2 == 0 ? 1.0 : -1.0) / factorial(static_cast<unsigned>(k)).convert_to<double>();
  return z;
}

/// (e^{-2u^2} - e^{-6u^2})/(2u) = e^{-2u^2}(1 - e^{-4u^2})/(2u), the summand behind g(y).
inline ZagierFunction zagier_gaussian_difference() {
  ZagierFunction z{"(exp(-2u^2)-exp(-6u^2))/(2u)",
                   [](double u) { return u == 0 ? 0.0 : -std::exp(-2 * u * u) * std::expm1(-4 * u * u) / (2 * u); },
                   {},
                   std::log(3.0) / 4};
  z.taylor.assign(kZagierTaylorTerms, 0.0);
  for (std::size_t k = 1; 2 * k - 1 < kZagierTaylorTerms; ++k) {
    const double fk = factorial(static_cast<unsigned>(k)).convert_to<double>();
    z.taylor[2 * k - 1] = (std::pow(-2.0, static_cast<double>(k)) - std::pow(-6.0, static_cast<double>(k))) / (2 * fk);
  }
  return z;
}

inline std::vector<ZagierFunction> zagier_builtins() {
  return {zagier_exp(), zagier_gaussian_moment(), zagier_gaussian_difference()};
}

/// Bernoulli polynomial B_n(x) with B_1(x) = x - 1/2.
inline double bernoulli_polynomial(unsigned n, double x) {
  double s = 0;
  for (unsigned k = 0; k <= n; ++k) {
    double bk = 0;
    if (k == 0)
      bk = 1;
    else if (k == 1)
      bk = -0.5;
    else if (k % 2 == 0)
      bk = boost::math::bernoulli_b2n<double>(static_cast<int>(k / 2));
    if (bk == 0) continue;
    s += binomial(n, k).convert_to<double>() * bk * std::pow(x, static_cast<double>(n - k));
  }
  return s;
}

inline double zagier_expand(const ZagierFunction& fn, double a, double t, std::size_t S) {
  if (S >= fn.taylor.size()) throw UnsupportedParameter("expansion order beyond stored Taylor coefficients");
  double s = fn.integral / t;
  for (std::size_t n = 0; n <= S; ++n) {
    if (fn.taylor[n] == 0) continue;
    s -= fn.taylor[n] * bernoulli_polynomial(static_cast<unsigned>(n + 1), a) / (n + 1) * std::pow(t, static_cast<double>(n));
  }
  return s;
}

/// sum_{m>=0} f((m+a)t) summed until the terms are negligible past the bulk.
inline double zagier_direct(const ZagierFunction& fn, double a, double t) {
  if (!(t > 0) || !(a > 0)) throw DomainError("zagier_direct needs a, t > 0");
  double s = 0;
  double c = 0;  // Kahan compensation
  for (std::size_t m = 0; m < kEvalIterationCap; ++m) {
    const double u = (static_cast<double>(m) + a) * t;
    const double v = fn.f(u);
    const double yv = v - c;
    const double tmp = s + yv;
    c = (tmp - s) - yv;
    s = tmp;
    if (u > 1 && std::abs(v) <= 1e-18 * std::abs(s) * t) return s;
  }
  throw ConvergenceError("direct sum did not settle", 0.0);
}

/// Least-squares slope of log|direct - expansion| against log t.
inline double zagier_residual_slope(const ZagierFunction& fn, double a, std::size_t S, const std::vector<double>& ts) {
  if (ts.size() < 2) throw InsufficientData("slope needs at least two t values");
  std::vector<double> lx, ly;
  for (double t : ts) {
    lx.push_back(std::log(t));
    ly.push_back(std::log(std::abs(zagier_direct(fn, a, t) - zagier_expand(fn, a, t, S))));
  }
  const double n = static_cast<double>(ts.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    mx += lx[i] / n;
    my += ly[i] / n;
  }
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  return sxy / sxx;
}

/// sum_{n>=1} n e^{-pi n^2 y}
inline double j1_sum_direct(double y) {
  const double t = std::sqrt(pi * y);
  return zagier_direct(zagier_gaussian_moment(), 1.0, t) / t;
}

/// g(y) = sum_{n>=1} (-1)^(n+1) e^{-n^2 y/2}(1 - e^{-n^2 y})/n, summed directly.
inline double g_direct(double y) {
  if (!(y > 0)) throw DomainError("g_direct needs y > 0");
  double s = 0;
  for (std::size_t k = 1; k < kEvalIterationCap; ++k) {
    const double n2 = static_cast<double>(k) * static_cast<double>(k);
    const double term = std::exp(-n2 * y / 2) * -std::expm1(-n2 * y) / static_cast<double>(k);
    s += (k % 2 == 1 ? term : -term);
    if (n2 * y > 80) return s;
  }
  throw ConvergenceError("g(y) did not settle", 0.0);
}

/// The same g(y) as sqrt(y) [sum f((n-1/2) sqrt y) - sum f(n sqrt y)].
inline double g_offset_form(double y) {
  const auto fn = zagier_gaussian_difference();
  const double t = std::sqrt(y);
  return t * (zagier_direct(fn, 0.5, t) - zagier_direct(fn, 1.0, t));
}

struct TLimitRow {
  double y = 0.0;
  double value = 0.0;
  double deviation = 0.0;  // |T(e^{-y}) - 1/4|
};

inline std::vector<TLimitRow> t_limit_check(const std::vector<double>& ladder) {
  std::vector<TLimitRow> rows;
  for (double y : ladder) {
    if (!(y > 0 && y < 1)) throw DomainError("t_limit_check needs 0 < y < 1");
    const double v = eval_complex(TSeries{}, Complex(std::exp(-y), 0.0)).value.real();
    rows.push_back({y, v, std::abs(v - 0.25)});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Grid checks of uniform bounds, with y = 1/(2 sqrt(6N)) and tau = x + iy.

struct BoundSample {
  double N, x, y, lhs, rhs_bound, ratio;
};

struct BoundCheck {
  std::string name;
  std::vector<BoundSample> samples;
  std::vector<double> Ns;
  std::vector<double> K;  // max ratio at each N

  /// No growth beyond a factor 2 over the constant at the first ladder point.
  bool stable() const {
    if (K.empty()) return false;
    return *std::max_element(K.begin(), K.end()) <= 2 * K.front();
  }
};

inline double circle_y(double N) { return 1 / (2 * std::sqrt(6 * N)); }

namespace detail {

/// `count` evenly spaced points on [lo, hi], endpoints included.
inline std::vector<double> grid(double lo, double hi, std::size_t count) {
  std::vector<double> g;
  if (count == 1) return {lo};
  for (std::size_t i = 0; i < count; ++i) g.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  return g;
}

/// ratio_fn(N, x, y) returns {lhs, rhs, ratio}.
template <class Fn>
BoundCheck run_grid(std::string name, const std::vector<double>& Ns, std::size_t count, bool away, Fn ratio_fn) {
  BoundCheck c{std::move(name), {}, Ns, {}};
  for (double N : Ns) {
    const double y = circle_y(N);
    const auto xs = away ? grid(y, 0.5, count) : grid(-y, y, count);
    double k = 0;
    for (double x : xs) {
      const auto [lhs, rhs, ratio] = ratio_fn(N, x, y);
      c.samples.push_back({N, x, y, lhs, rhs, ratio});
      k = std::max(k, ratio);
    }
    c.K.push_back(k);
  }
  return c;
}

struct Triple {
  double lhs, rhs, ratio;
};

}  // namespace detail

/// |(1/(q)_inf) / (sqrt(-i tau) e^{pi i/(12 tau)} (1 + 2 pi i tau/24)) - 1| against 1/N.
inline BoundCheck qinfty_check(const std::vector<double>& Ns, std::size_t count = 9) {
  return detail::run_grid("qinfty", Ns, count, false, [](double N, double x, double y) {
    const Complex tau(x, y);
    const Complex q = std::exp(2 * pi * kI * tau);
    const Complex model = 0.5 * std::log(-kI * tau) + pi * kI / (12.0 * tau) + std::log(1.0 + 2 * pi * kI * tau / 24.0);
    const double lhs = std::abs(detail::cexpm1(log_euler_inverse(q).value - model));
    const double rhs = 1 / N;
    return detail::Triple{lhs, rhs, lhs / rhs};
  });
}

/// |S - c~ X^{-r} - d~ X^{1-r}| against N^{r/2-1}, X = -2 pi i tau.
inline BoundCheck slr_check(int ell, int r, const std::vector<double>& Ns, DTildeVariant variant = DTildeVariant::slr,
                            std::size_t count = 9) {
  const auto m = build_model(r, ell, variant);
  return detail::run_grid("Slr", Ns, count, false, [&](double N, double x, double y) {
    const Complex tau(x, y);
    const Complex X = -2 * pi * kI * tau;
    const Complex S = eval_complex(SSeries{ell, r}, std::exp(-X)).value;
    const double lhs = std::abs(S - m.c_tilde * std::pow(X, -r) - m.d_tilde * std::pow(X, 1 - r));
    const double rhs = std::pow(N, r / 2.0 - 1);
    return detail::Triple{lhs, rhs, lhs / rhs};
  });
}

/// |S_{l,r}(q)| against N^{r/2+1/4} on the whole circle.
inline BoundCheck slraway_check(int ell, int r, const std::vector<double>& Ns, std::size_t count = 33) {
  return detail::run_grid("Slraway", Ns, count, true, [&](double N, double x, double y) {
    const Complex q = std::exp(2 * pi * kI * Complex(x, y));
    const double lhs = std::abs(eval_complex(SSeries{ell, r}, q).value);
    const double rhs = std::pow(N, r / 2.0 + 0.25);
    return detail::Triple{lhs, rhs, lhs / rhs};
  });
}

/// |F_{l,r}(q)| against N^{r/2+1/4} e^{(pi/2) sqrt(N/6)} for y <= |x| <= 1/2.
inline BoundCheck flraway_check(int ell, int r, const std::vector<double>& Ns, std::size_t count = 33) {
  return detail::run_grid("Flraway", Ns, count, true, [&](double N, double x, double y) {
    const Complex q = std::exp(2 * pi * kI * Complex(x, y));
    const double log_lhs = log_eval_f(ell, r, q).real();
    const double log_rhs = (r / 2.0 + 0.25) * std::log(N) + pi / 2 * std::sqrt(N / 6);
    return detail::Triple{std::exp(log_lhs), std::exp(log_rhs), std::exp(log_lhs - log_rhs)};
  });
}

/// |g_{l,j}(tau)| against 1 on the main arc; rho follows the parity of j.
inline BoundCheck glj_check(int ell, int j, const std::vector<double>& Ns, std::size_t count = 9) {
  const double rho = (j % 2 == 0) ? 0.5 : 0.0;
  return detail::run_grid("glj", Ns, count, false, [&](double, double x, double y) {
    const double lhs = std::abs(g_lj(ell, j, rho, Complex(x, y)));
    return detail::Triple{lhs, 1.0, lhs};
  });
}

inline void write_bound_csv(std::ostream& os, const BoundCheck& c) {
  os << "N,x,y,lhs,rhs_bound,ratio\n";
  const auto old = os.precision(17);
  for (const auto& s : c.samples) os << s.N << ',' << s.x << ',' << s.y << ',' << s.lhs << ',' << s.rhs_bound << ',' << s.ratio << '\n';
  os.precision(old);
}

}  // namespace crank
