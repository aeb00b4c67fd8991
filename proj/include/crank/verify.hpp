#pragma once

// The exact identity suite: oracle equivalence against brute force, the moment
// identities, the inequalities, the Ramanujan congruences and the parity law.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crank/bigint.hpp"
#include "crank/bivariate.hpp"
#include "crank/moments.hpp"
#include "crank/parity.hpp"
#include "crank/partitions.hpp"
#include "crank/series.hpp"

namespace crank {

struct IdentityResult {
  std::string name;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;  // first failure

  bool passed() const { return !counterexample; }
};

struct VerifyOptions {
  std::size_t nmax = 200;
  int brute_max = 40;
  int rmax = 10;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<IdentityResult> results;

  bool passed() const {
    return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed(); });
  }
};

namespace detail {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  template <class... Parts>
  void expect(bool ok, const Parts&... where) {
    ++r_.checked;
    if (ok || r_.counterexample) return;
    std::ostringstream os;
    (os << ... << where);
    r_.counterexample = os.str();
  }

  IdentityResult done() && { return std::move(r_); }

 private:
  IdentityResult r_;
};

inline bool histogram_matches_row(const Histogram& h, std::span<const BigInt> row, long N) {
  for (long m = -N; m <= N; ++m) {
    const auto it = h.find(static_cast<int>(m));
    const std::int64_t want = it == h.end() ? 0 : it->second;
    if (row[static_cast<std::size_t>(m + N)] != want) return false;
  }
  for (const auto& [m, c] : h)
    if (std::abs(m) > N && c != 0) return false;
  return true;
}

}  // namespace detail

/// Brute-force histograms against generating-function rows for 0 <= N <= nmax.
/// The crank side is compared under the combinatorial convention.
inline IdentityResult check_oracle_equivalence(int nmax) {
  detail::Check c("oracle_equivalence");
  const auto ct = build_table(Statistic::crank, static_cast<std::size_t>(nmax), Convention::combinatorial);
  const auto rt = build_table(Statistic::rank, static_cast<std::size_t>(nmax));
  for (int N = 0; N <= nmax; ++N) {
    const auto hc = reconcile_combinatorial(brute_distribution(N, Statistic::crank), N, Statistic::crank);
    c.expect(detail::histogram_matches_row(hc, ct.row(static_cast<std::size_t>(N)), N), "crank N=", N);
    const auto hr = brute_distribution(N, Statistic::rank);
    c.expect(detail::histogram_matches_row(hr, rt.row(static_cast<std::size_t>(N)), N), "rank N=", N);
  }
  return std::move(c).done();
}

/// Everything the suite needs, computed once.
struct MomentData {
  std::size_t nmax = 0;
  CrankRankTable crank;
  CrankRankTable rank;
  std::vector<MomentTable> m_pos;  // r = 0..rmax
  std::vector<MomentTable> n_pos;
  SptOspt so;

  MomentData(std::size_t n, int rmax)
      : nmax(n),
        crank(build_table(Statistic::crank, n)),
        rank(build_table(Statistic::rank, n)),
        m_pos(positive_moment_tables(crank, rmax)),
        n_pos(positive_moment_tables(rank, rmax)) {
    for (std::size_t N = 0; N <= n; ++N) {
      so.spt.push_back(m_pos[2].values[N] - n_pos[2].values[N]);
      so.ospt.push_back(m_pos[1].values[N] - n_pos[1].values[N]);
    }
  }
};

inline std::vector<IdentityResult> check_brute_identities(const MomentData& d, int brute_max) {
  detail::Check spt("spt_equals_M2_minus_N2"), durfee("M1_equals_durfee_sum"), strings("ospt_equals_string_count");
  const int top = std::min<int>(brute_max, static_cast<int>(d.nmax));
  for (int N = 1; N <= top; ++N) {
    const auto a = brute_aggregates(N);
    const auto n = static_cast<std::size_t>(N);
    spt.expect(d.so.spt[n] == a.spt, "N=", N);
    durfee.expect(d.m_pos[1].values[n] == a.durfee_sum, "N=", N);
    strings.expect(d.so.ospt[n] == a.ospt_strings, "N=", N);
  }
  return {std::move(spt).done(), std::move(durfee).done(), std::move(strings).done()};
}

inline IdentityResult check_ospt_generating_function(const MomentData& d) {
  detail::Check c("ospt_equals_T_over_euler");
  const auto o = ospt_series(d.nmax);
  for (std::size_t N = 0; N <= d.nmax; ++N) c.expect(o[N] == d.so.ospt[N], "N=", N);
  return std::move(c).done();
}

/// mu_r^+ and eta_r^+ from binomial weights over the tables against F_{l,r}, plus the
/// basis change M_r^+ = sum_l c_l mu_l^+ (and the rank analogue).
inline std::vector<IdentityResult> check_symmetrized(const MomentData& d, int rmax) {
  detail::Check sym("symmetrized_equals_F_coefficients"), basis("basis_change_reconstructs_positive_moments");
  for (const auto* table : {&d.crank, &d.rank}) {
    const int ell = table->kind() == Statistic::crank ? 1 : 3;
    const auto& pos = table->kind() == Statistic::crank ? d.m_pos : d.n_pos;
    std::vector<std::vector<BigInt>> mu;
    mu.push_back(binomial_moment_table(*table, 0).values);
    for (int r = 1; r <= rmax; ++r) {
      const auto direct = binomial_moment_table(*table, r);
      const auto via_f = symmetrized_moments(ell, r, d.nmax);
      for (std::size_t N = 0; N <= d.nmax; ++N)
        sym.expect(direct.values[N] == via_f.values[N], to_string(table->kind()), " r=", r, " N=", N);
      mu.push_back(via_f.values);
    }
    for (int r = 1; r <= rmax; ++r) {
      const auto bc = basis_change(r);
      for (std::size_t N = 0; N <= d.nmax; ++N) {
        BigInt s = 0;
        for (int l = 0; l <= r; ++l) s += bc.coefficients[static_cast<std::size_t>(l)] * mu[static_cast<std::size_t>(l)][N];
        basis.expect(s == pos[static_cast<std::size_t>(r)].values[N], to_string(table->kind()), " r=", r, " N=", N);
      }
    }
  }
  return {std::move(sym).done(), std::move(basis).done()};
}

inline IdentityResult check_even_moment_halving(const MomentData& d, int rmax) {
  detail::Check c("even_positive_moment_is_half_full");
  for (const auto* table : {&d.crank, &d.rank}) {
    const auto& pos = table->kind() == Statistic::crank ? d.m_pos : d.n_pos;
    for (int r = 2; r <= rmax; r += 2) {
      const auto full = full_moment_table(*table, r);
      for (std::size_t N = 0; N <= d.nmax; ++N)
        c.expect(2 * pos[static_cast<std::size_t>(r)].values[N] == full.values[N], to_string(table->kind()), " r=", r, " N=", N);
    }
  }
  return std::move(c).done();
}

inline std::vector<IdentityResult> check_inequalities(const MomentData& d, int rmax) {
  detail::Check pos("positive_crank_exceeds_rank"), even("even_crank_moment_exceeds_rank"), mono("ospt_nondecreasing");
  for (int r = 1; r <= rmax; ++r)
    for (std::size_t N = 2; N <= d.nmax; ++N)
      pos.expect(d.m_pos[static_cast<std::size_t>(r)].values[N] > d.n_pos[static_cast<std::size_t>(r)].values[N], "r=", r, " N=", N);
  for (int r = 2; r <= rmax; r += 2)
    for (std::size_t N = 1; N <= d.nmax; ++N)
      even.expect(d.m_pos[static_cast<std::size_t>(r)].values[N] > d.n_pos[static_cast<std::size_t>(r)].values[N], "r=", r, " N=", N);
  for (std::size_t N = 2; N <= d.nmax; ++N) mono.expect(d.so.ospt[N] >= d.so.ospt[N - 1], "N=", N);
  return {std::move(pos).done(), std::move(even).done(), std::move(mono).done()};
}

inline IdentityResult check_ramanujan(std::size_t nmax) {
  detail::Check c("ramanujan_congruences");
  const auto p = euler_inverse(nmax);
  for (std::size_t N = 0; 5 * N + 4 <= nmax; ++N) c.expect(p[5 * N + 4] % 5 == 0, "p(5N+4) N=", N);
  for (std::size_t N = 0; 7 * N + 5 <= nmax; ++N) c.expect(p[7 * N + 5] % 7 == 0, "p(7N+5) N=", N);
  for (std::size_t N = 0; 11 * N + 6 <= nmax; ++N) c.expect(p[11 * N + 6] % 11 == 0, "p(11N+6) N=", N);
  return std::move(c).done();
}

/// Row sums equal p(N) and rows are symmetric in m for N >= 2.
inline IdentityResult check_table_shape(const MomentData& d) {
  detail::Check c("table_row_sums_and_symmetry");
  const auto p = euler_inverse(d.nmax);
  for (const auto* table : {&d.crank, &d.rank}) {
    for (std::size_t N = 0; N <= d.nmax; ++N) {
      c.expect(table->series().row_sum(N) == p[N], to_string(table->kind()), " sum N=", N);
      if (N < 2) continue;
      const auto row = table->row(N);
      c.expect(std::equal(row.begin(), row.end(), row.rbegin()), to_string(table->kind()), " symmetry N=", N);
    }
  }
  return std::move(c).done();
}

inline IdentityResult check_parity(const MomentData& d) {
  detail::Check c("parity_from_factorization");
  const auto rep = parity_suite(d.so.spt, d.so.ospt);
  for (const auto& row : rep.rows) c.expect(row.consistent(), "N=", row.N);
  return std::move(c).done();
}

inline IdentityResult check_parity_mechanism(const MomentData& d) {
  detail::Check c("second_moment_parity_matches_first");
  for (std::size_t N = 0; N <= d.nmax; ++N) {
    c.expect(bit_test(d.m_pos[2].values[N], 0) == bit_test(d.m_pos[1].values[N], 0), "crank N=", N);
    c.expect(bit_test(d.n_pos[2].values[N], 0) == bit_test(d.n_pos[1].values[N], 0), "rank N=", N);
  }
  return std::move(c).done();
}

inline VerifyReport run_identity_suite(const VerifyOptions& opt) {
  if (opt.nmax < 2) throw UnsupportedParameter("identity suite needs nmax >= 2");
  if (opt.rmax < 2) throw UnsupportedParameter("identity suite needs rmax >= 2");
  VerifyReport rep{opt, {}};
  const MomentData d(opt.nmax, opt.rmax);
  const int brute = std::min<int>(opt.brute_max, static_cast<int>(opt.nmax));
  rep.results.push_back(check_oracle_equivalence(brute));
  for (auto& r : check_brute_identities(d, opt.brute_max)) rep.results.push_back(std::move(r));
  rep.results.push_back(check_ospt_generating_function(d));
  for (auto& r : check_symmetrized(d, opt.rmax)) rep.results.push_back(std::move(r));
  rep.results.push_back(check_even_moment_halving(d, opt.rmax));
  for (auto& r : check_inequalities(d, opt.rmax)) rep.results.push_back(std::move(r));
  rep.results.push_back(check_ramanujan(opt.nmax));
  rep.results.push_back(check_table_shape(d));
  rep.results.push_back(check_parity(d));
  rep.results.push_back(check_parity_mechanism(d));
  return rep;
}

}  // namespace crank
