#pragma once

// Two-variable generating functions C(w;q) (crank) and R(w;q) (rank), stored as
// one dense Laurent polynomial in w per power of q.

#include <cstddef>
#include <cstdlib>
#include <map>
#include <ostream>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "crank/bigint.hpp"
#include "crank/error.hpp"
#include "crank/series.hpp"

namespace crank {

enum class Statistic { crank, rank };

inline std::string_view to_string(Statistic s) { return s == Statistic::crank ? "crank" : "rank"; }

class BivariateSeries {
 public:
  /// rows[n] holds the coefficients of w^m for m = -n..n (index m + n).
  explicit BivariateSeries(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DomainError("bivariate series needs the q^0 row");
    for (std::size_t n = 0; n < rows_.size(); ++n)
      if (rows_[n].size() != 2 * n + 1) throw ConsistencyError("row width must be 2n+1");
  }

  std::size_t nmax() const noexcept { return rows_.size() - 1; }

  std::span<const BigInt> row(std::size_t n) const {
    if (n > nmax()) throw RangeError("q-power beyond truncation order");
    return rows_[n];
  }

  /// Coefficient of w^m q^n; zero outside |m| <= n.
  const BigInt& coeff(std::size_t n, long m) const {
    static const BigInt zero = 0;
    if (n > nmax()) throw RangeError("q-power beyond truncation order");
    if (static_cast<std::size_t>(std::labs(m)) > n) return zero;
    return rows_[n][static_cast<std::size_t>(m + static_cast<long>(n))];
  }

  /// The q^n coefficient evaluated at w = 1.
  BigInt row_sum(std::size_t n) const {
    BigInt s = 0;
    for (const auto& c : row(n)) s += c;
    return s;
  }

  std::vector<std::vector<BigInt>> take_rows() && { return std::move(rows_); }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

namespace detail {

/// Exponent of q in the n-th Appell term: n(n+1)/2 (crank) or n(3n+1)/2 (rank), n in Z.
constexpr long appell_quadratic(Statistic kind, long n) noexcept {
  return kind == Statistic::crank ? n * (n + 1) / 2 : n * (3 * n + 1) / 2;
}

/// Sparse numerator (1 - w) * sum_{n in Z} (-1)^n q^{e(n)} / (1 - w q^n), grouped by q-power.
/// For n < 0 the geometric factor is expanded in w^{-1}: 1/(1 - w q^{-k}) = -sum_{j>=1} w^{-j} q^{kj}.
inline std::vector<std::vector<std::pair<long, long>>> appell_numerator(Statistic kind, std::size_t nmax) {
  std::vector<std::map<long, long>> acc(nmax + 1);
  const long top = static_cast<long>(nmax);
  auto add = [&](long q, long w, long c) {
    // (1 - w) factor
    acc[static_cast<std::size_t>(q)][w] += c;
    acc[static_cast<std::size_t>(q)][w + 1] -= c;
  };
  // n = 0: (1 - w)/(1 - w) = 1
  acc[0][0] += 1;
  for (long n = 1;; ++n) {
    const long e = appell_quadratic(kind, n);
    if (e > top) break;
    const long sign = n % 2 == 0 ? 1 : -1;
    for (long k = 0; e + n * k <= top; ++k) add(e + n * k, k, sign);
  }
  for (long n = 1;; ++n) {
    const long e = appell_quadratic(kind, -n);
    if (e + n > top) break;
    const long sign = n % 2 == 0 ? -1 : 1;  // -(-1)^n
    for (long k = 1; e + n * k <= top; ++k) add(e + n * k, -k, sign);
  }
  std::vector<std::vector<std::pair<long, long>>> out(nmax + 1);
  for (std::size_t q = 0; q <= nmax; ++q)
    for (const auto& [w, c] : acc[q])
      if (c != 0) out[q].emplace_back(w, c);
  return out;
}

}  // namespace detail

/// C(w;q) or R(w;q) through q^nmax. The factor 1/(q)_inf is applied exactly, so
/// the crank output carries the raw generating-function column at q^1: w^-1 - 1 + w.
inline BivariateSeries bivariate_gen(Statistic kind, std::size_t nmax) {
  const auto numer = detail::appell_numerator(kind, nmax);
  const ExactSeries p = euler_inverse(nmax);
  std::vector<std::vector<BigInt>> rows(nmax + 1);
  BigInt tmp;
  for (std::size_t N = 0; N <= nmax; ++N) {
    auto& row = rows[N];
    row.resize(2 * N + 1);
    const long offset = static_cast<long>(N);
    for (std::size_t j = 0; j <= N; ++j) {
      const BigInt& pj = p[N - j];
      for (const auto& [m, c] : numer[j]) {
        if (std::labs(m) > offset) throw ConsistencyError("w-exponent exceeds q-exponent");
        BigInt& slot = row[static_cast<std::size_t>(m + offset)];
        if (c == 1)
          slot += pj;
        else if (c == -1)
          slot -= pj;
        else {
          tmp = pj;
          tmp *= c;
          slot += tmp;
        }
      }
    }
  }
  return BivariateSeries(std::move(rows));
}

/// `n,m,coefficient` triples sorted by (n, m); zero coefficients are omitted.
inline void write_bivariate_csv(std::ostream& os, const BivariateSeries& s) {
  os << "n,m,coefficient\n";
  for (std::size_t n = 0; n <= s.nmax(); ++n) {
    const auto row = s.row(n);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      os << n << ',' << static_cast<long>(i) - static_cast<long>(n) << ',' << row[i] << '\n';
    }
  }
}

}  // namespace crank
