#pragma once

// Exact crank/rank tables and their moments: full, positive and symmetrized,
// the binomial basis change between positive and symmetrized moments, spt and ospt.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "crank/bigint.hpp"
#include "crank/bivariate.hpp"
#include "crank/error.hpp"
#include "crank/partitions.hpp"
#include "crank/series.hpp"

namespace crank {

/// How the crank column at N = 1 is reported. The generating function gives
/// M(-1,1) = 1, M(0,1) = -1, M(1,1) = 1; the combinatorial values are M(0,1) = 1.
enum class Convention { generating_function, combinatorial };

inline std::string_view to_string(Convention c) {
  return c == Convention::generating_function ? "generating_function" : "combinatorial";
}

class CrankRankTable {
 public:
  CrankRankTable(Statistic kind, Convention convention, std::vector<std::vector<BigInt>> rows)
      : kind_(kind), convention_(convention), counts_(std::move(rows)) {}

  Statistic kind() const noexcept { return kind_; }
  Convention convention() const noexcept { return convention_; }
  std::size_t nmax() const noexcept { return counts_.nmax(); }

  /// M(m,N) or N(m,N); zero for |m| > N.
  const BigInt& count(std::size_t N, long m) const { return counts_.coeff(N, m); }

  /// Entries for m = -N..N.
  std::span<const BigInt> row(std::size_t N) const { return counts_.row(N); }

  const BivariateSeries& series() const noexcept { return counts_; }

 private:
  Statistic kind_;
  Convention convention_;
  BivariateSeries counts_;
};

inline CrankRankTable build_table(Statistic kind, std::size_t nmax,
                                  Convention convention = Convention::generating_function) {
  auto rows = bivariate_gen(kind, nmax).take_rows();
  if (kind == Statistic::crank && convention == Convention::combinatorial && nmax >= 1)
    rows[1] = {BigInt(0), BigInt(1), BigInt(0)};
  return CrankRankTable(kind, convention, std::move(rows));
}

/// Maps a brute-force histogram onto the combinatorial convention: the crank
/// definition applied literally to the partition (1) gives -1, the convention says 0.
inline Histogram reconcile_combinatorial(Histogram h, int n, Statistic kind) {
  if (kind == Statistic::crank && n == 1) return Histogram{{0, 1}};
  return h;
}

enum class MomentVariant { full, positive, symmetrized };

inline std::string_view to_string(MomentVariant v) {
  switch (v) {
    case MomentVariant::full: return "full";
    case MomentVariant::positive: return "positive";
    case MomentVariant::symmetrized: return "symmetrized";
  }
  return "?";
}

struct MomentTable {
  Statistic kind = Statistic::crank;
  MomentVariant variant = MomentVariant::positive;
  int r = 0;
  int ell = 0;  // 1 or 3 for symmetrized moments, 0 otherwise
  std::vector<BigInt> values;  // indexed by N
};

namespace detail {

inline void require_moment_access(const CrankRankTable& table, std::size_t N) {
  if (table.convention() != Convention::generating_function)
    throw UnsupportedParameter("moments are computed on the generating-function convention");
  if (N > table.nmax()) throw RangeError("N beyond table order");
}

inline BigInt power_sum(std::span<const BigInt> row, long from, long N, int r) {
  BigInt s = 0;
  BigInt term;
  for (long m = from; m <= N; ++m) {
    const BigInt& c = row[static_cast<std::size_t>(m + N)];
    if (c == 0) continue;
    term = c;
    for (int k = 0; k < r; ++k) term *= m;
    s += term;
  }
  return s;
}

/// floor((r-1)/2): the shift in the symmetrized binomial weight C(m + shift, r).
constexpr long binomial_shift(int r) noexcept { return r == 0 ? -1 : (r - 1) / 2; }

}  // namespace detail

/// M_r^+(N) = sum_{m>=1} m^r M(m,N) (or the rank analogue).
inline BigInt positive_moment(const CrankRankTable& table, int r, std::size_t N) {
  detail::require_moment_access(table, N);
  return detail::power_sum(table.row(N), 1, static_cast<long>(N), r);
}

/// M_r(N) = sum_{m in Z} m^r M(m,N).
inline BigInt full_moment(const CrankRankTable& table, int r, std::size_t N) {
  detail::require_moment_access(table, N);
  return detail::power_sum(table.row(N), -static_cast<long>(N), static_cast<long>(N), r);
}

inline MomentTable full_moment_table(const CrankRankTable& table, int r) {
  MomentTable t{table.kind(), MomentVariant::full, r, 0, {}};
  t.values.reserve(table.nmax() + 1);
  for (std::size_t N = 0; N <= table.nmax(); ++N) t.values.push_back(full_moment(table, r, N));
  return t;
}

/// Positive moments for r = 0..rmax in one pass over the table.
inline std::vector<MomentTable> positive_moment_tables(const CrankRankTable& table, int rmax) {
  detail::require_moment_access(table, 0);
  std::vector<MomentTable> out;
  for (int r = 0; r <= rmax; ++r) {
    out.push_back({table.kind(), MomentVariant::positive, r, 0, std::vector<BigInt>(table.nmax() + 1)});
  }
  BigInt term;
  for (std::size_t N = 0; N <= table.nmax(); ++N) {
    const auto row = table.row(N);
    for (std::size_t m = 1; m <= N; ++m) {
      const BigInt& c = row[m + N];
      if (c == 0) continue;
      term = c;
      out[0].values[N] += term;
      for (int r = 1; r <= rmax; ++r) {
        term *= m;
        out[static_cast<std::size_t>(r)].values[N] += term;
      }
    }
  }
  return out;
}

inline MomentTable positive_moment_table(const CrankRankTable& table, int r) {
  return std::move(positive_moment_tables(table, r).back());
}

/// Symmetrized moment sum_{m>=1} C(m + floor((r-1)/2), r) M(m,N) read directly off
/// the table. For r = 0 this is the number of partitions with positive statistic.
inline MomentTable binomial_moment_table(const CrankRankTable& table, int r) {
  detail::require_moment_access(table, 0);
  MomentTable t{table.kind(), MomentVariant::symmetrized, r, table.kind() == Statistic::crank ? 1 : 3, {}};
  t.values.resize(table.nmax() + 1);
  const long shift = detail::binomial_shift(r);
  std::vector<BigInt> weight(table.nmax() + 1);
  for (std::size_t m = 1; m <= table.nmax(); ++m) weight[m] = binomial(static_cast<std::int64_t>(m) + shift, static_cast<unsigned>(r));
  BigInt term;
  for (std::size_t N = 1; N <= table.nmax(); ++N) {
    const auto row = table.row(N);
    for (std::size_t m = 1; m <= N; ++m) {
      const BigInt& c = row[m + N];
      if (c == 0 || weight[m] == 0) continue;
      boost::multiprecision::multiply(term, c, weight[m]);
      t.values[N] += term;
    }
  }
  return t;
}

/// mu_r^+ (ell = 1) or eta_r^+ (ell = 3) as the coefficients a_{l,r}(N) of F_{l,r}(q) = S_{l,r}(q)/(q)_inf.
inline MomentTable symmetrized_moments(int ell, int r, std::size_t nmax) {
  require_ell(ell);
  if (r < 1) throw UnsupportedParameter("symmetrized moments need r >= 1");
  const ExactSeries f = f_series(ell, r, nmax);
  MomentTable t{ell == 1 ? Statistic::crank : Statistic::rank, MomentVariant::symmetrized, r, ell, {}};
  t.values.assign(f.coefficients().begin(), f.coefficients().end());
  return t;
}

/// Coefficients c_0..c_r with m^r = sum_l c_l C(m + floor((l-1)/2), l) as polynomials; c_r = r!.
struct BasisChange {
  int r = 0;
  std::vector<BigInt> coefficients;

  const BigInt& leading() const { return coefficients.back(); }
  /// a_l for l < r.
  const BigInt& a(int l) const { return coefficients.at(static_cast<std::size_t>(l)); }
};

namespace detail {

/// Monomial coefficients (ascending) of C(m + shift, l) as a polynomial in m.
inline std::vector<Rational> binomial_polynomial(long shift, int l) {
  std::vector<Rational> poly{Rational(1)};
  for (int i = 0; i < l; ++i) {
    // multiply by (m + shift - i)
    std::vector<Rational> next(poly.size() + 1);
    const Rational c(shift - i);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] += poly[k] * c;
    }
    poly = std::move(next);
  }
  const Rational denom(factorial(static_cast<unsigned>(l)));
  for (auto& c : poly) c /= denom;
  return poly;
}

}  // namespace detail

/// Solves the triangular system in the binomial basis over exact rationals.
inline BasisChange basis_change(int r) {
  if (r < 1) throw UnsupportedParameter("basis change needs r >= 1");
  std::vector<Rational> target(static_cast<std::size_t>(r) + 1);
  target.back() = 1;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(r) + 1);
  for (int l = r; l >= 0; --l) {
    const auto basis = detail::binomial_polynomial(detail::binomial_shift(l), l);
    const Rational c = target[static_cast<std::size_t>(l)] / basis.back();
    if (!is_integral(c)) throw ConsistencyError("non-integral basis-change coefficient");
    coeffs[static_cast<std::size_t>(l)] = boost::multiprecision::numerator(c);
    for (std::size_t k = 0; k < basis.size(); ++k) target[k] -= c * basis[k];
  }
  for (const auto& t : target)
    if (t != 0) throw ConsistencyError("basis change left a residual");
  return BasisChange{r, std::move(coeffs)};
}

struct SptOspt {
  std::vector<BigInt> spt;   // spt[N], N = 0..nmax (spt[0] = 0)
  std::vector<BigInt> ospt;  // ospt[N]
};

/// spt = M_2^+ - N_2^+ and ospt = M_1^+ - N_1^+ from generating-function tables.
inline SptOspt spt_ospt(const CrankRankTable& crank_table, const CrankRankTable& rank_table) {
  if (crank_table.kind() != Statistic::crank || rank_table.kind() != Statistic::rank)
    throw UnsupportedParameter("spt_ospt expects a crank table and a rank table");
  if (crank_table.nmax() != rank_table.nmax()) throw MismatchError("table orders differ");
  const auto mc = positive_moment_tables(crank_table, 2);
  const auto mr = positive_moment_tables(rank_table, 2);
  SptOspt out;
  for (std::size_t N = 0; N <= crank_table.nmax(); ++N) {
    out.spt.push_back(mc[2].values[N] - mr[2].values[N]);
    out.ospt.push_back(mc[1].values[N] - mr[1].values[N]);
  }
  return out;
}

inline SptOspt spt_ospt(std::size_t nmax) {
  if (nmax < 1) throw UnsupportedParameter("spt_ospt needs nmax >= 1");
  return spt_ospt(build_table(Statistic::crank, nmax), build_table(Statistic::rank, nmax));
}

inline void write_moment_csv(std::ostream& os, const MomentTable& t) {
  os << "N,value\n";
  for (std::size_t N = 0; N < t.values.size(); ++N) os << N << ',' << t.values[N] << '\n';
}

}  // namespace crank
