#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "crank/crank.hpp"
#include "oracles.hpp"

using namespace crank;

namespace {

u64 product(const Factorization& f) {
  u64 v = 1;
  for (const auto& [p, e] : f.factors)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

}  // namespace

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(95).factors, (std::vector<std::pair<u64, unsigned>>{{5, 1}, {19, 1}}));
  EXPECT_EQ(factorize(23).factors, (std::vector<std::pair<u64, unsigned>>{{23, 1}}));
  EXPECT_EQ(factorize(47999).factors, (std::vector<std::pair<u64, unsigned>>{{7, 1}, {6857, 1}}));
  EXPECT_EQ(factorize(1).to_string(), "1");
  EXPECT_EQ(factorize(95).to_string(), "5^1*19^1");
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(~u64{0}), UnsupportedParameter);
}

TEST(Factorize, TrialDivisionOracle) {
  for (u64 n = 1; n <= 20000; ++n) {
    const auto f = factorize(n);
    ASSERT_EQ(product(f), n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      ASSERT_TRUE(oracle::is_prime(f.factors[i].first)) << n;
      if (i > 0) {
        ASSERT_LT(f.factors[i - 1].first, f.factors[i].first);
      }
    }
  }
}

TEST(Factorize, LargeSemiprimesAndPowers) {
  const u64 p = 1000000007, q = 998244353;
  EXPECT_EQ(factorize(p * q).factors, (std::vector<std::pair<u64, unsigned>>{{q, 1}, {p, 1}}));
  const u64 big = 4294967291ULL;  // largest prime below 2^32
  EXPECT_EQ(factorize(big * 3).factors, (std::vector<std::pair<u64, unsigned>>{{3, 1}, {big, 1}}));
  EXPECT_EQ(factorize(u64{1} << 62).factors, (std::vector<std::pair<u64, unsigned>>{{2, 62}}));
  EXPECT_TRUE(is_prime_u64(9223372036854775783ULL));
  EXPECT_EQ(factorize(9223372036854775783ULL).factors.size(), 1u);
}

TEST(Factorize, RandomRoundTrip) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<u64> U(2, (u64{1} << 63) - 1);
  for (int i = 0; i < 200; ++i) {
    const u64 n = U(gen);
    const auto f = factorize(n);
    EXPECT_EQ(product(f), n);
    for (const auto& [pr, e] : f.factors) EXPECT_TRUE(is_prime_u64(pr));
  }
}

TEST(MillerRabin, AgreesWithTrialDivision) {
  for (u64 n = 0; n < 100000; ++n) ASSERT_EQ(is_prime_u64(n), oracle::is_prime(n)) << n;
  EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(ParityPredict, Examples) {
  EXPECT_TRUE(parity_predict(1));
  EXPECT_TRUE(parity_predict(2));
  EXPECT_FALSE(parity_predict(4));
  EXPECT_THROW(parity_predict(0), DomainError);
}

TEST(ParityPredict, SquareTimesPrimePower) {
  // 24N - 1 = 23 * 5^2 = 575 gives N = 24 (odd); 23^3 = 12167 gives N = 507 (even, exponent 3)
  EXPECT_TRUE(parity_predict(24));
  EXPECT_FALSE(parity_predict(507));
  // 23^5 = 6436343, 24 N - 1 = 23^5 gives N = 268181
  EXPECT_TRUE(parity_predict(268181));
}

TEST(ParitySuite, MatchesExactTables) {
  const auto rep = parity_suite(600);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.rows.size(), 600u);
  for (const auto& r : rep.rows) EXPECT_EQ(r.factorization.n, 24 * r.N - 1);
}

TEST(ParitySuite, DetectsFailure) {
  auto s = spt_ospt(10);
  s.ospt[5] += 1;
  const auto rep = parity_suite(s.spt, s.ospt);
  ASSERT_FALSE(rep.passed());
  EXPECT_EQ(*rep.first_failure, 5u);
}

TEST(ParitySuite, Csv) {
  std::ostringstream os;
  write_parity_csv(os, parity_suite(4));
  EXPECT_EQ(os.str(),
            "N,24N-1,factorization,predicted_parity,ospt_mod_2,spt_mod_2\n"
            "1,23,23^1,1,1,1\n2,47,47^1,1,1,1\n3,71,71^1,1,1,1\n4,95,5^1*19^1,0,0,0\n");
}
