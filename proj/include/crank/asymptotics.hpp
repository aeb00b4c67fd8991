#pragma once

// Asymptotic constants for crank/rank moments, half-integer Bessel functions in
// log domain, leading-order predictions and convergence-trend fitting.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "crank/bigint.hpp"
#include "crank/error.hpp"
#include "crank/series.hpp"

namespace crank {

/// eta(s) = sum_{n>=1} (-1)^(n+1) n^-s, the alternating zeta function.
/// Closed values at s = 1, 0, -1; Cohen-Rodriguez Villegas-Zagier acceleration for other s > 0.
inline double dirichlet_eta(double s) {
  if (s == 1.0) return std::numbers::ln2;
  if (s == 0.0) return 0.5;
  if (s == -1.0) return 0.25;
  if (s < 0.0) throw UnsupportedParameter("dirichlet_eta supports s in {-1, 0} or s > 0");
  constexpr int n = 40;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::pow(k + 1.0, -s);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

/// Which reading of the rho-term in d-tilde to use. `slr` carries eta(r-1); `theorem`
/// carries zeta(r-1)(1 - 2^{1-r}). They coincide for odd r (rho = 0).
enum class DTildeVariant { slr, theorem };

inline std::string_view to_string(DTildeVariant v) { return v == DTildeVariant::slr ? "slr" : "theorem"; }

struct AsymptoticModel {
  int r = 0;
  int ell = 1;
  double rho = 0.0;
  DTildeVariant variant = DTildeVariant::slr;
  double gamma = 0.0;   // M_r^+ ~ gamma N^{r/2-1} e^x
  double delta = 0.0;   // M_r^+ - N_r^+ ~ delta N^{r/2-3/2} e^x
  double c = 0.0;       // mu_r^+ ~ c N^{r/2-3/4} I_{r-3/2}(x) + d N^{r/2-5/4} I_{r-5/2}(x)
  double d = 0.0;
  double c_tilde = 0.0;  // S_{l,r} ~ c~ (-2 pi i tau)^-r + d~ (-2 pi i tau)^{1-r}
  double d_tilde = 0.0;
  double c_star = 0.0;  // F_{l,r} ~ (c* X^{1/2-r} + d* X^{3/2-r}) e^{pi i/(12 tau)}
  double d_star = 0.0;

  /// Orders of the Bessel functions in the symmetrized prediction.
  double leading_order() const { return r - 1.5; }
  double second_order() const { return r - 2.5; }
};

namespace detail {

/// The eta(r-1) slot of d-tilde under the chosen variant.
inline double rho_term(int r, DTildeVariant variant) {
  if (variant == DTildeVariant::slr || r % 2 == 1) return dirichlet_eta(r - 1);
  // zeta(r-1)(1 - 2^{1-r}) = eta(r-1)(1 - 2^{1-r})/(1 - 2^{2-r})
  if (r == 2) throw UnsupportedParameter("theorem variant of d-tilde diverges at r = 2");
  return dirichlet_eta(r - 1) * (1 - std::pow(2.0, 1 - r)) / (1 - std::pow(2.0, 2 - r));
}

}  // namespace detail

/// Builds every constant for order r and ell in {1, 3}. For r = 0 only gamma is
/// defined (the positive-statistic count, half of p(N)); the rest stay NaN.
inline AsymptoticModel build_model(int r, int ell = 1, DTildeVariant variant = DTildeVariant::slr) {
  using std::numbers::pi;
  require_ell(ell);
  if (r < 0) throw UnsupportedParameter("moment order must be nonnegative");
  AsymptoticModel m;
  m.r = r;
  m.ell = ell;
  m.variant = variant;
  m.rho = twice_rho(r) / 2.0;
  const double fact = factorial(static_cast<unsigned>(r)).convert_to<double>();
  const double sqrt3 = std::sqrt(3.0);
  m.gamma = fact * dirichlet_eta(r) * std::pow(6.0, r / 2.0) / (4 * sqrt3 * std::pow(pi, r));
  if (r == 0) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    m.delta = m.c = m.d = m.c_tilde = m.d_tilde = m.c_star = m.d_star = nan;
    return m;
  }
  const double eta_r = dirichlet_eta(r);
  const double eta_r2 = dirichlet_eta(r - 2);
  const double x_term = m.rho == 0.0 ? 0.0 : detail::rho_term(r, variant);
  m.delta = fact * eta_r2 * std::pow(6.0, (r - 1) / 2.0) / (4 * sqrt3 * std::pow(pi, r - 1));
  m.c = eta_r * std::pow(6.0, r / 2.0 - 0.75) / (std::sqrt(2.0) * std::pow(pi, r - 1));
  m.d = -pi / (24 * std::sqrt(6.0)) * m.c -
        std::pow(6.0, r / 2.0 - 1.25) / (std::sqrt(2.0) * std::pow(pi, r - 2)) * (ell / 2.0 * eta_r2 + m.rho * x_term);
  m.c_tilde = eta_r;
  m.d_tilde = -(ell / 2.0) * eta_r2 - m.rho * x_term;
  m.c_star = m.c_tilde / std::sqrt(2 * pi);
  m.d_star = (-m.c_tilde / 24 + m.d_tilde) / std::sqrt(2 * pi);
  return m;
}

/// A real number stored as sign * exp(log_abs).
struct LogValue {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static LogValue from_double(double v) {
    if (v == 0) return {};
    return {std::log(std::abs(v)), v > 0 ? 1 : -1};
  }
  static LogValue from_bigint(const BigInt& v) {
    if (v == 0) return {};
    return {crank::log_abs(v), v > 0 ? 1 : -1};
  }
  double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

/// a * b
inline LogValue operator*(LogValue a, LogValue b) { return {a.log_abs + b.log_abs, a.sign * b.sign}; }

/// a + b without leaving log domain.
inline LogValue operator+(LogValue a, LogValue b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  if (a.log_abs < b.log_abs) std::swap(a, b);
  const double t = b.sign * a.sign * std::exp(b.log_abs - a.log_abs);
  if (t == -1.0) return {};
  return {a.log_abs + std::log1p(t), a.sign};
}

namespace detail {

inline bool is_half_integer(double nu) {
  const double twice = 2 * nu;
  return std::nearbyint(twice) == twice && std::fmod(std::abs(twice), 2.0) == 1.0;
}

/// Sign of Gamma(z) for z not a nonpositive integer.
inline int gamma_sign(double z) {
  if (z > 0) return 1;
  return static_cast<long>(std::floor(-z)) % 2 == 0 ? -1 : 1;
}

/// Power series sum_k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)) summed in log domain.
inline LogValue bessel_i_series(double nu, double x) {
  const double lx = std::log(x / 2);
  std::vector<double> logs;
  std::vector<int> signs;
  double peak = -std::numeric_limits<double>::infinity();
  for (int k = 0;; ++k) {
    const double z = k + nu + 1;
    const double lt = (2 * k + nu) * lx - std::lgamma(k + 1.0) - std::lgamma(z);
    logs.push_back(lt);
    signs.push_back(gamma_sign(z));
    peak = std::max(peak, lt);
    if (k > x && z > 0 && lt < peak - 40) break;
  }
  double s = 0;
  for (std::size_t k = 0; k < logs.size(); ++k) s += signs[k] * std::exp(logs[k] - peak);
  if (s == 0) return {};
  return {peak + std::log(std::abs(s)), s > 0 ? 1 : -1};
}

/// Elementary closed form for I_{+-(n+1/2)}(x):
/// (e^x sum_k (-1)^k a_k (2x)^-k + sigma e^-x sum_k a_k (2x)^-k) / sqrt(2 pi x),
/// a_k = (n+k)!/(k!(n-k)!), sigma = (-1)^(n+1) for the positive order, (-1)^n for the negative one.
inline LogValue bessel_i_closed(int n, bool negative_order, double x) {
  double alt = 0;
  double plain = 0;
  double a = 1;
  double p = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      a *= static_cast<double>((n + k) * (n - k + 1)) / k;
      p /= 2 * x;
    }
    alt += (k % 2 == 0 ? 1 : -1) * a * p;
    plain += a * p;
  }
  const int sigma = ((n + (negative_order ? 0 : 1)) % 2 == 0) ? 1 : -1;
  const LogValue big = LogValue{x, 1} * LogValue::from_double(alt);
  const LogValue small = LogValue{-x, sigma} * LogValue::from_double(plain);
  LogValue out = big + small;
  out.log_abs -= 0.5 * std::log(2 * std::numbers::pi * x);
  return out;
}

}  // namespace detail

/// log I_nu(x) for half-integer nu, with the sign (negative orders can give I_nu < 0 at small x).
inline LogValue log_bessel_i(double nu, double x) {
  if (!detail::is_half_integer(nu)) throw UnsupportedParameter("log_bessel_i needs a half-integer order");
  if (!(x > 0)) throw DomainError("log_bessel_i needs x > 0");
  const int n = static_cast<int>(std::abs(nu) - 0.5);
  if (x < 50.0 + n * (n + 1.0)) return detail::bessel_i_series(nu, x);
  return detail::bessel_i_closed(n, nu < 0, x);
}

/// pi sqrt(2N/3), the exponential rate shared by all predictions.
inline double saddle(double N) { return std::numbers::pi * std::sqrt(2 * N / 3); }

enum class Target { mu, eta, m_pos, n_pos, diff };

inline std::string_view to_string(Target t) {
  switch (t) {
    case Target::mu: return "mu";
    case Target::eta: return "eta";
    case Target::m_pos: return "M_pos";
    case Target::n_pos: return "N_pos";
    case Target::diff: return "diff";
  }
  return "?";
}

/// One- or two-term prediction in log domain. `mu` needs a model with ell = 1, `eta` one with ell = 3.
inline LogValue predict(const AsymptoticModel& m, Target target, double N, int terms = 1) {
  if (!(N >= 1)) throw DomainError("predictions need N >= 1");
  if (terms != 1 && terms != 2) throw UnsupportedParameter("terms must be 1 or 2");
  const double x = saddle(N);
  const double logN = std::log(N);
  const int r = m.r;
  switch (target) {
    case Target::m_pos:
    case Target::n_pos:
      if (terms == 2) throw UnsupportedParameter("no second term for positive moments");
      return LogValue::from_double(m.gamma) * LogValue{(r / 2.0 - 1) * logN + x, 1};
    case Target::diff:
      if (terms == 2) throw UnsupportedParameter("no second term for the moment difference");
      if (r < 1) throw UnsupportedParameter("difference prediction needs r >= 1");
      return LogValue::from_double(m.delta) * LogValue{(r / 2.0 - 1.5) * logN + x, 1};
    case Target::mu:
    case Target::eta: {
      if ((target == Target::mu) != (m.ell == 1)) throw UnsupportedParameter("mu pairs with ell = 1, eta with ell = 3");
      if (r < 1) throw UnsupportedParameter("symmetrized prediction needs r >= 1");
      LogValue first = LogValue::from_double(m.c) * LogValue{(r / 2.0 - 0.75) * logN, 1} *
                       log_bessel_i(m.leading_order(), x);
      if (terms == 1) return first;
      if (r < 2) throw UnsupportedParameter("second term needs r >= 2");
      const LogValue second = LogValue::from_double(m.d) * LogValue{(r / 2.0 - 1.25) * logN, 1} *
                              log_bessel_i(m.second_order(), x);
      return first + second;
    }
  }
  throw UnsupportedParameter("unknown target");
}

struct TrendReport {
  std::string target;
  int r = 0;
  int ell = 0;
  std::vector<double> Ns;
  std::vector<double> exact_log;
  std::vector<double> predicted_log;
  std::vector<double> ratios;
  std::vector<double> deviations;  // |ratio - 1|
  double fitted_exponent = std::numeric_limits<double>::quiet_NaN();
  double exponent_stderr = std::numeric_limits<double>::quiet_NaN();
  bool decreasing = false;  // |ratio - 1| strictly decreasing along the ladder
};

/// Ratios exact/predicted along a ladder of N and the least-squares slope of
/// log|ratio - 1| against log N.
inline TrendReport trend(const std::vector<double>& Ns, const std::vector<LogValue>& exact,
                         const std::vector<LogValue>& predicted, std::string_view target = "", int r = 0,
                         int ell = 0) {
  if (Ns.size() != exact.size() || Ns.size() != predicted.size()) throw MismatchError("trend inputs differ in length");
  if (Ns.size() < 3) throw InsufficientData("trend needs at least three ladder points");
  TrendReport t;
  t.target = target;
  t.r = r;
  t.ell = ell;
  t.Ns = Ns;
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    if (exact[i].sign <= 0 || predicted[i].sign <= 0) throw DomainError("trend needs positive values");
    t.exact_log.push_back(exact[i].log_abs);
    t.predicted_log.push_back(predicted[i].log_abs);
    const double ratio = std::exp(exact[i].log_abs - predicted[i].log_abs);
    t.ratios.push_back(ratio);
    t.deviations.push_back(std::abs(ratio - 1));
  }
  t.decreasing = true;
  for (std::size_t i = 1; i < Ns.size(); ++i)
    if (!(t.deviations[i] < t.deviations[i - 1])) t.decreasing = false;

  const std::size_t n = Ns.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.deviations[i] == 0) return t;
    mx += std::log(Ns[i]);
    my += std::log(t.deviations[i]);
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(Ns[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(t.deviations[i]) - my);
  }
  t.fitted_exponent = sxy / sxx;
  double rss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = my + t.fitted_exponent * (std::log(Ns[i]) - mx);
    const double e = std::log(t.deviations[i]) - fit;
    rss += e * e;
  }
  t.exponent_stderr = n > 2 ? std::sqrt(rss / static_cast<double>(n - 2) / sxx) : 0.0;
  return t;
}

}  // namespace crank
