#include <gtest/gtest.h>

#include "crank/crank.hpp"

using namespace crank;

TEST(IdentitySuite, PassesAtModerateSize) {
  VerifyOptions opt;
  opt.nmax = 300;
  opt.brute_max = 30;
  const auto rep = run_identity_suite(opt);
  for (const auto& r : rep.results) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.counterexample.value_or("");
    EXPECT_GT(r.checked, 0u) << r.name;
  }
  EXPECT_TRUE(rep.passed());
}

TEST(IdentitySuite, NamesAreUnique) {
  VerifyOptions opt;
  opt.nmax = 20;
  opt.brute_max = 10;
  const auto rep = run_identity_suite(opt);
  std::set<std::string> names;
  for (const auto& r : rep.results) EXPECT_TRUE(names.insert(r.name).second) << r.name;
  EXPECT_GE(names.size(), 14u);
}

TEST(IdentitySuite, RejectsDegenerateOptions) {
  VerifyOptions opt;
  opt.nmax = 1;
  EXPECT_THROW(run_identity_suite(opt), UnsupportedParameter);
  opt.nmax = 10;
  opt.rmax = 1;
  EXPECT_THROW(run_identity_suite(opt), UnsupportedParameter);
}

TEST(IdentitySuite, CounterexampleIsReported) {
  MomentData d(20, 4);
  d.so.ospt[7] += 2;  // parity unchanged, value wrong
  const auto r = check_ospt_generating_function(d);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(*r.counterexample, "N=7");
  d.so.spt[9] += 1;
  EXPECT_FALSE(check_parity(d).passed());
}

TEST(IdentitySuite, OracleEquivalenceFortyRows) {
  const auto r = check_oracle_equivalence(40);
  EXPECT_TRUE(r.passed()) << r.counterexample.value_or("");
  EXPECT_EQ(r.checked, 82u);
}
