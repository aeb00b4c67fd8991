#pragma once

// 64-bit factorization: trial division, then Brent's variant of Pollard rho with
// a deterministic Miller-Rabin test for every cofactor.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "crank/error.hpp"

namespace crank {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, unsigned>> factors;  // primes strictly increasing

  /// e.g. "5^1*19^1"; "1" for n = 1.
  std::string to_string() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : factors) {
      if (!s.empty()) s += '*';
      s += std::to_string(p) + '^' + std::to_string(e);
    }
    return s;
  }
};

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic for all n < 2^64 with the first twelve primes as witnesses.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr u64 witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : witnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : witnesses) {
    u64 x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

/// A nontrivial factor of the odd composite n (Brent's cycle detection, batched gcds).
inline u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    constexpr u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  split(d, primes);
  split(n / d, primes);
}

}  // namespace detail

inline constexpr u64 kTrialDivisionLimit = 1'000'000;

inline Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("factorize needs n >= 1");
  if (n > static_cast<u64>(std::numeric_limits<std::int64_t>::max()))
    throw UnsupportedParameter("factorize supports n <= 2^63 - 1");
  Factorization f;
  f.n = n;
  std::vector<u64> primes;
  u64 m = n;
  for (u64 p = 2; p <= kTrialDivisionLimit && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  detail::split(m, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().first == p)
      ++f.factors.back().second;
    else
      f.factors.emplace_back(p, 1);
  }
  return f;
}

}  // namespace crank
