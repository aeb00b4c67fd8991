#pragma once

// Exact truncated power series in q with arbitrary-precision coefficients,
// and the integer q-expansions the moment engine is built from:
// 1/(q)_inf, (q)_inf, the false Appell sums S_{l,r} and the ospt kernel T(q).

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "crank/bigint.hpp"
#include "crank/error.hpp"

namespace crank {

class ExactSeries {
 public:
  /// Zero series through q^nmax.
  explicit ExactSeries(std::size_t nmax) : coeffs_(nmax + 1) {}

  /// Takes ownership of coefficients 0..nmax. `truncated` records that
  /// nonzero terms beyond q^nmax were discarded when producing them.
  explicit ExactSeries(std::vector<BigInt> coeffs, bool truncated = false)
      : coeffs_(std::move(coeffs)), truncated_(truncated) {
    if (coeffs_.empty()) throw DomainError("ExactSeries needs at least the constant term");
  }

  std::size_t nmax() const noexcept { return coeffs_.size() - 1; }
  bool truncated() const noexcept { return truncated_; }

  const BigInt& operator[](std::size_t n) const noexcept { return coeffs_[n]; }

  const BigInt& at(std::size_t n) const {
    if (n > nmax()) throw RangeError("series index beyond truncation order");
    return coeffs_[n];
  }

  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  /// Largest exponent with a nonzero coefficient, or -1 for the zero series.
  long degree() const noexcept {
    for (std::size_t n = coeffs_.size(); n-- > 0;)
      if (coeffs_[n] != 0) return static_cast<long>(n);
    return -1;
  }

  // Truncation metadata does not take part in equality.
  friend bool operator==(const ExactSeries& a, const ExactSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<BigInt> coeffs_;
  bool truncated_ = false;
};

namespace detail {

inline void require_same_order(const ExactSeries& a, const ExactSeries& b) {
  if (a.nmax() != b.nmax()) throw MismatchError("series truncation orders differ");
}

inline std::vector<std::size_t> nonzero_indices(const ExactSeries& s) {
  std::vector<std::size_t> idx;
  for (std::size_t n = 0; n <= s.nmax(); ++n)
    if (s[n] != 0) idx.push_back(n);
  return idx;
}

}  // namespace detail

inline ExactSeries series_add(const ExactSeries& a, const ExactSeries& b) {
  detail::require_same_order(a, b);
  std::vector<BigInt> c(a.nmax() + 1);
  for (std::size_t n = 0; n <= a.nmax(); ++n) c[n] = a[n] + b[n];
  return ExactSeries(std::move(c), a.truncated() || b.truncated());
}

inline ExactSeries series_sub(const ExactSeries& a, const ExactSeries& b) {
  detail::require_same_order(a, b);
  std::vector<BigInt> c(a.nmax() + 1);
  for (std::size_t n = 0; n <= a.nmax(); ++n) c[n] = a[n] - b[n];
  return ExactSeries(std::move(c), a.truncated() || b.truncated());
}

/// Cauchy product truncated at the common order.
inline ExactSeries series_mul(const ExactSeries& a, const ExactSeries& b) {
  detail::require_same_order(a, b);
  const std::size_t nmax = a.nmax();
  // Iterate over the sparser operand.
  auto ia = detail::nonzero_indices(a);
  auto ib = detail::nonzero_indices(b);
  const bool swap = ib.size() < ia.size();
  const ExactSeries& outer = swap ? b : a;
  const ExactSeries& inner = swap ? a : b;
  const auto& idx = swap ? ib : ia;

  std::vector<BigInt> c(nmax + 1);
  BigInt tmp;
  for (std::size_t n = 0; n <= nmax; ++n) {
    BigInt& acc = c[n];
    for (std::size_t i : idx) {
      if (i > n) break;
      const BigInt& y = inner[n - i];
      if (y == 0) continue;
      boost::multiprecision::multiply(tmp, outer[i], y);
      acc += tmp;
    }
  }
  const long da = a.degree();
  const long db = b.degree();
  const bool dropped = da >= 0 && db >= 0 && static_cast<std::size_t>(da + db) > nmax;
  return ExactSeries(std::move(c), a.truncated() || b.truncated() || dropped);
}

inline ExactSeries operator+(const ExactSeries& a, const ExactSeries& b) { return series_add(a, b); }
inline ExactSeries operator-(const ExactSeries& a, const ExactSeries& b) { return series_sub(a, b); }
inline ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) { return series_mul(a, b); }

/// Generalized pentagonal numbers k(3k-1)/2 for k = 1, -1, 2, -2, ... up to nmax,
/// paired with the sign (-1)^(k+1).
inline std::vector<std::pair<std::size_t, int>> pentagonal_terms(std::size_t nmax) {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t k = 1;; ++k) {
    const std::size_t g1 = k * (3 * k - 1) / 2;
    const std::size_t g2 = k * (3 * k + 1) / 2;
    if (g1 > nmax) break;
    const int sign = (k % 2 == 1) ? 1 : -1;
    out.emplace_back(g1, sign);
    if (g2 <= nmax) out.emplace_back(g2, sign);
  }
  return out;
}

/// 1/(q;q)_inf through q^nmax: the partition numbers p(0..nmax), via
/// Euler's pentagonal recurrence p(n) = sum_k (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline ExactSeries euler_inverse(std::size_t nmax) {
  const auto pent = pentagonal_terms(nmax);
  std::vector<BigInt> p(nmax + 1);
  p[0] = 1;
  for (std::size_t n = 1; n <= nmax; ++n) {
    BigInt s = 0;
    for (const auto& [g, sign] : pent) {
      if (g > n) break;
      if (sign > 0)
        s += p[n - g];
      else
        s -= p[n - g];
    }
    p[n] = std::move(s);
  }
  return ExactSeries(std::move(p), true);
}

/// (q;q)_inf through q^nmax (Euler's pentagonal number theorem).
inline ExactSeries euler_product(std::size_t nmax) {
  std::vector<BigInt> c(nmax + 1);
  c[0] = 1;
  for (const auto& [g, sign] : pentagonal_terms(nmax)) c[g] = -sign;
  return ExactSeries(std::move(c), true);
}

/// 2*rho(r): rho = 0 for odd r and 1/2 for even r.
constexpr int twice_rho(int r) noexcept { return r % 2 == 0 ? 1 : 0; }

inline Rational rho(int r) { return Rational(twice_rho(r), 2); }

inline void require_ell(int ell) {
  if (ell != 1 && ell != 3) throw UnsupportedParameter("ell must be 1 or 3");
}

/// Exponent l n^2/2 + (r/2 + rho) n of the n-th Appell term, checked integral.
inline std::size_t appell_exponent(int ell, int r, std::size_t n) {
  const Rational e = Rational(ell) * n * n / 2 + (Rational(r, 2) + rho(r)) * n;
  if (!is_integral(e)) throw ConsistencyError("non-integral Appell exponent");
  return e.convert_to<std::size_t>();
}

/// q-expansion of S_{l,r}(q) = sum_{n>=1} (-1)^(n+1) q^{l n^2/2 + (r/2+rho) n} / (1 - q^n)^r.
inline ExactSeries appell_s_series(int ell, int r, std::size_t nmax) {
  require_ell(ell);
  if (r < 1) throw UnsupportedParameter("Appell sum order r must be >= 1");
  std::vector<BigInt> c(nmax + 1);
  for (std::size_t n = 1;; ++n) {
    const std::size_t e = appell_exponent(ell, r, n);
    if (e > nmax) break;
    const bool positive = n % 2 == 1;
    // (1 - q^n)^(-r) = sum_k C(k+r-1, r-1) q^{nk}
    BigInt binom = 1;
    for (std::size_t k = 0; e + n * k <= nmax; ++k) {
      if (positive)
        c[e + n * k] += binom;
      else
        c[e + n * k] -= binom;
      binom *= (k + static_cast<std::size_t>(r));
      binom /= (k + 1);
    }
  }
  return ExactSeries(std::move(c), true);
}

/// T(q) = sum_{n>=1} (-1)^(n+1) q^{(n^2+n)/2} (1 - q^{n^2}) / (1 - q^n); each summand is a polynomial.
inline ExactSeries t_series(std::size_t nmax) {
  std::vector<BigInt> c(nmax + 1);
  bool dropped = false;
  for (std::size_t n = 1;; ++n) {
    const std::size_t e = n * (n + 1) / 2;
    if (e > nmax) {
      dropped = true;
      break;
    }
    const int sign = n % 2 == 1 ? 1 : -1;
    for (std::size_t k = 0; k < n; ++k) {
      if (e + n * k > nmax) {
        dropped = true;
        break;
      }
      c[e + n * k] += sign;
    }
  }
  return ExactSeries(std::move(c), dropped);
}

/// O(q) = T(q)/(q)_inf, whose coefficients are ospt(N).
inline ExactSeries ospt_series(std::size_t nmax) { return series_mul(t_series(nmax), euler_inverse(nmax)); }

/// F_{l,r}(q) = S_{l,r}(q)/(q)_inf.
inline ExactSeries f_series(int ell, int r, std::size_t nmax) {
  return series_mul(appell_s_series(ell, r, nmax), euler_inverse(nmax));
}

inline void write_series_csv(std::ostream& os, const ExactSeries& s) {
  os << "n,coefficient\n";
  for (std::size_t n = 0; n <= s.nmax(); ++n) os << n << ',' << s[n] << '\n';
}

}  // namespace crank
