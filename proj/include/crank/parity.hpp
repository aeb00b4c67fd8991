#pragma once

// Parity of spt and ospt read off the factorization of 24N - 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "crank/bigint.hpp"
#include "crank/error.hpp"
#include "crank/factor.hpp"
#include "crank/moments.hpp"

namespace crank {

/// True (odd) iff 24N - 1 = p^{4a+1} m^2 with p = 23 mod 24 prime, a >= 0, p not dividing m.
inline bool parity_predict(std::uint64_t N) {
  if (N < 1) throw DomainError("parity_predict needs N >= 1");
  if (N > (std::uint64_t{1} << 63) / 24) throw UnsupportedParameter("24N - 1 exceeds the factorization range");
  const auto f = factorize(24 * N - 1);
  std::optional<std::pair<u64, unsigned>> odd;
  for (const auto& pe : f.factors) {
    if (pe.second % 2 == 0) continue;
    if (odd) return false;
    odd = pe;
  }
  return odd && odd->second % 4 == 1 && odd->first % 24 == 23;
}

struct ParityRow {
  std::uint64_t N = 0;
  Factorization factorization;
  bool predicted_odd = false;
  int ospt_mod_2 = 0;
  int spt_mod_2 = 0;

  bool consistent() const { return ospt_mod_2 == spt_mod_2 && static_cast<int>(predicted_odd) == ospt_mod_2; }
};

struct ParityReport {
  std::vector<ParityRow> rows;
  std::optional<std::uint64_t> first_failure;

  bool passed() const { return !first_failure; }
};

/// Checks ospt = spt (mod 2) and the factorization prediction for 1 <= N < spt.size().
inline ParityReport parity_suite(const std::vector<BigInt>& spt, const std::vector<BigInt>& ospt) {
  if (spt.size() != ospt.size()) throw MismatchError("spt and ospt tables differ in length");
  ParityReport rep;
  for (std::size_t N = 1; N < spt.size(); ++N) {
    ParityRow row;
    row.N = N;
    row.factorization = factorize(24 * N - 1);
    row.predicted_odd = parity_predict(N);
    row.ospt_mod_2 = static_cast<int>(boost::multiprecision::bit_test(ospt[N], 0));
    row.spt_mod_2 = static_cast<int>(boost::multiprecision::bit_test(spt[N], 0));
    if (!row.consistent() && !rep.first_failure) rep.first_failure = N;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline ParityReport parity_suite(std::size_t nmax) {
  const auto s = spt_ospt(nmax);
  return parity_suite(s.spt, s.ospt);
}

inline void write_parity_csv(std::ostream& os, const ParityReport& rep) {
  os << "N,24N-1,factorization,predicted_parity,ospt_mod_2,spt_mod_2\n";
  for (const auto& r : rep.rows)
    os << r.N << ',' << 24 * r.N - 1 << ',' << r.factorization.to_string() << ',' << (r.predicted_odd ? 1 : 0) << ','
       << r.ospt_mod_2 << ',' << r.spt_mod_2 << '\n';
}

}  // namespace crank
