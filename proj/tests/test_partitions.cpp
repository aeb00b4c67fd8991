#include <gtest/gtest.h>

#include <set>

#include "crank/crank.hpp"
#include "oracles.hpp"

using namespace crank;

TEST(Partitions, Counts) {
  const auto p = oracle::partition_counts(40);
  for (int n = 0; n <= 40; ++n) {
    std::size_t c = 0;
    for (const auto& lambda : partitions_of(n)) {
      EXPECT_EQ(lambda.n(), n);
      ++c;
    }
    ASSERT_EQ(c, p[static_cast<std::size_t>(n)]) << n;
  }
}

TEST(Partitions, EmptyPartitionOnlyAtZero) {
  std::vector<Partition> all;
  for (const auto& lambda : partitions_of(0)) all.push_back(lambda);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].empty());
}

TEST(Partitions, DistinctAndLexicographicallyIncreasing) {
  for (int n : {7, 12, 20}) {
    std::vector<std::vector<int>> seen;
    for (const auto& lambda : partitions_of(n)) seen.push_back(lambda.parts());
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    EXPECT_EQ(std::set<std::vector<int>>(seen.begin(), seen.end()).size(), seen.size());
    EXPECT_EQ(seen.front(), std::vector<int>(static_cast<std::size_t>(n), 1));
    EXPECT_EQ(seen.back(), std::vector<int>{n});
  }
}

TEST(Partitions, CapRaisesResourceError) {
  EXPECT_THROW(partitions_of(kEnumerationCap + 1), ResourceError);
  EXPECT_THROW(brute_distribution(kEnumerationCap + 1, Statistic::rank), ResourceError);
  EXPECT_THROW(partitions_of(-1), DomainError);
}

TEST(Partitions, RejectsMalformed) {
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, 0}), DomainError);
}

TEST(PartitionStats, Examples) {
  auto s = stats_of(Partition({3, 1}));
  EXPECT_EQ(s.rank, 1);
  EXPECT_EQ(s.crank, 0);
  EXPECT_EQ(s.durfee, 1);
  s = stats_of(Partition({1}));
  EXPECT_EQ(s.crank, -1);
  EXPECT_EQ(s.rank, 0);
  s = stats_of(Partition({2, 2}));
  EXPECT_EQ(s.rank, 0);
  EXPECT_EQ(s.crank, 2);
  EXPECT_EQ(s.durfee, 2);
  EXPECT_EQ(s.smallest_part_count, 2);
}

TEST(StringCount, Examples) {
  EXPECT_EQ(string_count(Partition({3, 1})), 1);
  EXPECT_EQ(string_count(Partition({2, 2})), 1);
  EXPECT_EQ(string_count(Partition({1, 1})), 0);
  EXPECT_EQ(string_count(Partition()), 0);
}

TEST(BruteDistribution, Examples) {
  const Histogram c4{{-4, 1}, {-2, 1}, {0, 1}, {2, 1}, {4, 1}};
  const Histogram r4{{-3, 1}, {-1, 1}, {0, 1}, {1, 1}, {3, 1}};
  EXPECT_EQ(brute_distribution(4, Statistic::crank), c4);
  EXPECT_EQ(brute_distribution(4, Statistic::rank), r4);
  EXPECT_EQ(brute_distribution(0, Statistic::crank), (Histogram{{0, 1}}));
  EXPECT_EQ(brute_distribution(1, Statistic::crank), (Histogram{{-1, 1}}));
}

TEST(BruteDistribution, MatchesRecursiveEnumeration) {
  for (int n = 0; n <= 25; ++n) {
    EXPECT_EQ(brute_distribution(n, Statistic::crank), oracle::histogram(n, true)) << n;
    EXPECT_EQ(brute_distribution(n, Statistic::rank), oracle::histogram(n, false)) << n;
  }
}

TEST(BruteDistribution, RankSymmetric) {
  for (int n = 0; n <= 25; ++n) {
    const auto h = brute_distribution(n, Statistic::rank);
    for (const auto& [m, c] : h) EXPECT_EQ(h.at(-m), c);
  }
}

TEST(BruteAggregates, Examples) {
  auto a = brute_aggregates(4);
  EXPECT_EQ(a.spt, 10);
  EXPECT_EQ(a.ospt_strings, 2);
  EXPECT_EQ(a.durfee_sum, 6);
  a = brute_aggregates(1);
  EXPECT_EQ(a.spt, 1);
  EXPECT_EQ(a.ospt_strings, 1);
  EXPECT_EQ(a.durfee_sum, 1);
  a = brute_aggregates(2);
  EXPECT_EQ(a.spt, 3);
  EXPECT_EQ(a.ospt_strings, 1);
  EXPECT_EQ(a.durfee_sum, 2);
}

TEST(BruteAggregates, SptMatchesOracle) {
  for (int n = 1; n <= 25; ++n) {
    std::int64_t spt = 0;
    for (const auto& l : oracle::partitions(n)) spt += oracle::smallest_part_count(l);
    EXPECT_EQ(brute_aggregates(n).spt, spt) << n;
  }
}

TEST(BivariateGen, Examples) {
  const auto c = bivariate_gen(Statistic::crank, 4);
  const auto r = bivariate_gen(Statistic::rank, 4);
  for (long m = -4; m <= 4; ++m) {
    EXPECT_EQ(c.coeff(4, m), (m % 2 == 0 ? 1 : 0)) << m;
    EXPECT_EQ(r.coeff(4, m), (m == 0 || m == 1 || m == -1 || m == 3 || m == -3) ? 1 : 0) << m;
  }
  EXPECT_EQ(c.coeff(1, -1), 1);
  EXPECT_EQ(c.coeff(1, 0), -1);
  EXPECT_EQ(c.coeff(1, 1), 1);
  EXPECT_EQ(c.coeff(0, 0), 1);
}

TEST(BivariateGen, RowSumsArePartitionCounts) {
  const auto p = oracle::partition_counts(150);
  for (Statistic k : {Statistic::crank, Statistic::rank}) {
    const auto s = bivariate_gen(k, 150);
    for (std::size_t n = 0; n <= 150; ++n) ASSERT_EQ(s.row_sum(n), p[n]) << to_string(k) << ' ' << n;
  }
}
