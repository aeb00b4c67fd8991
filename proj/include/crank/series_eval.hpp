#pragma once

// Floating-point evaluation of the defining infinite sums and products at a
// complex point inside the unit disc, with a certified bound on the discarded tail.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <variant>

#include "crank/error.hpp"
#include "crank/series.hpp"

namespace crank {

using Complex = std::complex<double>;

struct SSeries {
  int ell = 1;
  int r = 1;
};
struct EulerInverse {};
struct TSeries {};

using SeriesKind = std::variant<SSeries, EulerInverse, TSeries>;

struct ComplexEval {
  Complex value;
  double tail_bound = 0.0;  // absolute bound on |exact - value| from truncation
  std::size_t terms = 0;
};

inline constexpr std::size_t kEvalIterationCap = 1'000'000;

namespace detail {

/// e^z - 1 without cancellation for small |z|.
inline Complex cexpm1(Complex z) {
  const double a = z.real();
  const double b = z.imag();
  const double s = std::sin(b / 2);
  return {std::expm1(a) * std::cos(b) - 2 * s * s, std::exp(a) * std::sin(b)};
}

/// 1 - q^m computed as -expm1(m log q).
inline Complex one_minus_power(Complex log_q, double m) { return -cexpm1(m * log_q); }

inline void require_disc(Complex q) {
  if (!(std::abs(q) < 1.0)) throw DomainError("series evaluation needs |q| < 1");
}

/// Sums term(n) for n = 1, 2, ... until the geometric majorant of the remaining
/// terms, majorant(n+1) / (1 - ratio(n+1)), drops below tol * |partial sum|.
/// ratio(n) bounds majorant(k+1)/majorant(k) for all k >= n and must be nonincreasing.
template <class Term, class Majorant, class Ratio>
ComplexEval sum_with_tail(Term term, Majorant majorant, Ratio ratio, double tol) {
  Complex sum = 0;
  double achieved = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= kEvalIterationCap; ++n) {
    sum += term(n);
    const double rho = ratio(n + 1);
    if (rho >= 1.0) continue;
    const double tail = majorant(n + 1) / (1.0 - rho);
    const double scale = std::abs(sum);
    achieved = scale > 0 ? tail / scale : tail;
    if (tail <= tol * scale || tail == 0.0) return {sum, tail, n};
  }
  throw ConvergenceError("series did not reach tolerance within the iteration cap", achieved);
}

}  // namespace detail

/// log(1/(q;q)_inf) as a complex number (imaginary part not reduced mod 2 pi),
/// with an absolute bound on the truncation error of the log.
inline ComplexEval log_euler_inverse(Complex q, double tol = 1e-15) {
  detail::require_disc(q);
  if (q == Complex(0)) return {Complex(0), 0.0, 0};
  const Complex log_q = std::log(q);
  const double aq = std::abs(q);
  Complex sum = 0;
  for (std::size_t n = 1; n <= kEvalIterationCap; ++n) {
    sum -= std::log(detail::one_minus_power(log_q, static_cast<double>(n)));
    // sum_{k>n} |log(1 - q^k)| <= |q|^{n+1} / ((1 - |q|)(1 - |q|^{n+1}))
    const double next = std::pow(aq, static_cast<double>(n + 1));
    const double tail = next / ((1.0 - aq) * (1.0 - next));
    if (tail <= tol) return {sum, tail, n};
  }
  throw ConvergenceError("Euler product did not converge within the iteration cap", 0.0);
}

inline ComplexEval eval_complex(const SeriesKind& kind, Complex q, double tol = 1e-15) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  detail::require_disc(q);

  if (std::holds_alternative<EulerInverse>(kind)) {
    const auto lg = log_euler_inverse(q, tol);
    const Complex v = std::exp(lg.value);
    return {v, std::abs(v) * std::expm1(lg.tail_bound), lg.terms};
  }
  if (q == Complex(0)) return {Complex(0), 0.0, 0};

  const Complex log_q = std::log(q);
  const double log_aq = std::log(std::abs(q));

  if (const auto* s = std::get_if<SSeries>(&kind)) {
    require_ell(s->ell);
    if (s->r < 1) throw UnsupportedParameter("Appell sum order r must be >= 1");
    const int ell = s->ell;
    const int r = s->r;
    const double lin = (r + twice_rho(r)) / 2.0;
    auto exponent = [&](double n) { return ell * n * n / 2 + lin * n; };
    auto term = [&](std::size_t k) {
      const double n = static_cast<double>(k);
      const Complex num = std::exp(exponent(n) * log_q);
      const Complex den = std::pow(detail::one_minus_power(log_q, n), r);
      return (k % 2 == 1 ? 1.0 : -1.0) * num / den;
    };
    auto majorant = [&](std::size_t k) {
      const double n = static_cast<double>(k);
      return std::exp(exponent(n) * log_aq) / std::pow(-std::expm1(n * log_aq), r);
    };
    auto ratio = [&](std::size_t k) {
      const double n = static_cast<double>(k);
      return std::exp((ell * (2 * n + 1) / 2 + lin) * log_aq);
    };
    return detail::sum_with_tail(term, majorant, ratio, tol);
  }

  // T(q): sum_{n>=1} (-1)^(n+1) q^{(n^2+n)/2} (1 - q^{n^2}) / (1 - q^n)
  auto term = [&](std::size_t k) {
    const double n = static_cast<double>(k);
    const Complex geo = detail::one_minus_power(log_q, n * n) / detail::one_minus_power(log_q, n);
    return (k % 2 == 1 ? 1.0 : -1.0) * std::exp((n * n + n) / 2 * log_q) * geo;
  };
  auto majorant = [&](std::size_t k) {
    const double n = static_cast<double>(k);
    return n * std::exp((n * n + n) / 2 * log_aq);
  };
  auto ratio = [&](std::size_t k) {
    const double n = static_cast<double>(k);
    return (n + 1) / n * std::exp((n + 1) * log_aq);
  };
  return detail::sum_with_tail(term, majorant, ratio, tol);
}

/// F_{l,r}(q) = S_{l,r}(q)/(q)_inf.
inline Complex eval_f(int ell, int r, Complex q, double tol = 1e-15) {
  const auto s = eval_complex(SSeries{ell, r}, q, tol);
  return s.value * std::exp(log_euler_inverse(q, tol).value);
}

/// log F_{l,r}(q), usable where |F| overflows a double.
inline Complex log_eval_f(int ell, int r, Complex q, double tol = 1e-15) {
  const auto s = eval_complex(SSeries{ell, r}, q, tol);
  return std::log(s.value) + log_euler_inverse(q, tol).value;
}

}  // namespace crank
