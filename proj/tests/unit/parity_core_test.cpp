#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "dualmark/parity_core.hpp"

using namespace dualmark;

namespace {

Bits B(const char* s) { return bits_from_string(s); }

ParityCheckMatrix identity(std::size_t n) {
  ParityCheckMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.bits[i][i] = 1;
  return m;
}

// Oracle written independently of the library: plain loops over all 2^n vectors.
std::vector<Bits> brute_force(const ParityCheckMatrix& m, const Bits& c, const ColumnGroups& g, int tau) {
  std::vector<Bits> out;
  for (unsigned v = 0; v < (1U << m.cols); ++v) {
    Bits r(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) r[j] = (v >> (m.cols - 1 - j)) & 1U;
    bool ok = true;
    for (std::size_t i = 0; i < m.rows && ok; ++i) {
      int parity = 0, ones = 0;
      for (std::size_t j = 0; j < m.cols; ++j) parity ^= m.bits[i][j] & r[j];
      for (std::size_t j : g[i]) ones += r[j];
      ok = parity == c[i] && (ones >= tau) == (c[i] == 1);
    }
    if (ok) out.push_back(r);
  }
  return out;
}

}  // namespace

TEST(ParityCore, IdentitySystem) {
  Rng rng(1);
  const auto m = identity(4);
  const auto g = consecutive_groups(4, 1);
  EXPECT_EQ(solve_constrained(m, B("0101"), g, 1, rng), B("0101"));
  EXPECT_EQ(enumerate_solutions(m, B("0101"), g, 1), std::vector<Bits>{B("0101")});
}

TEST(ParityCore, TwoByFourExamples) {
  Rng rng(2);
  const auto m = ParityCheckMatrix::from_rows({B("1010"), B("0101")});
  const ColumnGroups g = {{0, 1}, {2, 3}};
  EXPECT_EQ(solve_constrained(m, B("10"), g, 1, rng), B("1000"));
  EXPECT_EQ(enumerate_solutions(m, B("10"), g, 1), std::vector<Bits>{B("1000")});
  EXPECT_FALSE(solve_constrained(m, B("11"), g, 2, rng).has_value());
  EXPECT_TRUE(enumerate_solutions(m, B("11"), g, 2).empty());
}

TEST(ParityCore, HomogeneousContainsZero) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    ParityCheckMatrix m(3, 9);
    for (auto& row : m.bits)
      for (auto& b : row) b = rng.next() & 1U;
    const auto sols = enumerate_solutions(m, B("000"), consecutive_groups(3, 3), 1);
    EXPECT_TRUE(std::find(sols.begin(), sols.end(), Bits(9, 0)) != sols.end());
  }
}

TEST(ParityCore, ExcludeZero) {
  Rng rng(4);
  const auto m = identity(2);
  EXPECT_FALSE(solve_constrained(m, B("00"), consecutive_groups(2, 1), 1, rng, {true}).has_value());
  EXPECT_EQ(solve_constrained(m, B("00"), consecutive_groups(2, 1), 1, rng, {false}), B("00"));
}

TEST(ParityCore, ThresholdExamples) {
  const auto g = consecutive_groups(2, 3);
  EXPECT_EQ(threshold_groups(B("110000"), g, 2), B("10"));
  EXPECT_EQ(threshold_groups(B("000000"), g, 2), B("00"));
  EXPECT_EQ(threshold_groups(B("101010"), g, 2), B("10"));
  // groups may cover only a prefix
  EXPECT_EQ(threshold_groups(B("11100001"), g, 2), B("10"));
}

TEST(ParityCore, VerifyExamples) {
  const auto m = identity(4);
  EXPECT_TRUE(verify(m, B("0101"), B("0101")));
  EXPECT_FALSE(verify(m, B("0101"), B("0100")));
  EXPECT_THROW(verify(m, B("0101"), B("01")), DimensionMismatch);
  EXPECT_THROW(verify(m, B("01"), B("0101")), DimensionMismatch);
}

TEST(ParityCore, DimensionChecks) {
  Rng rng(5);
  const auto m = identity(4);
  EXPECT_THROW(solve_constrained(m, B("01"), consecutive_groups(2, 1), 1, rng), DimensionMismatch);
  EXPECT_THROW(enumerate_solutions(ParityCheckMatrix(1, 25), B("0"), {{0}}, 1), SizeLimit);
}

TEST(ParityCore, Rank) {
  EXPECT_EQ(gf2_rank(identity(5)), 5U);
  EXPECT_EQ(gf2_rank(ParityCheckMatrix::from_rows({B("110"), B("011"), B("101")})), 2U);
  EXPECT_EQ(gf2_rank(ParityCheckMatrix(3, 4)), 0U);
}

// Random instances against the brute-force oracle: membership, feasibility
// agreement, and soundness of extraction.
TEST(ParityCore, RandomInstancesMatchOracle) {
  Rng rng(20240611);
  std::mt19937 gen(99);
  int feasible = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t l = 1 + gen() % 4;
    const std::size_t alpha = 1 + gen() % 4;
    if (l * alpha > 16) continue;
    const int tau = 1 + static_cast<int>(gen() % alpha);
    ParityCheckMatrix m(l, l * alpha);
    for (auto& row : m.bits)
      for (auto& b : row) b = gen() & 1U;
    Bits c(l);
    for (auto& b : c) b = gen() & 1U;
    const auto groups = consecutive_groups(l, alpha);
    const auto oracle = brute_force(m, c, groups, tau);
    EXPECT_EQ(enumerate_solutions(m, c, groups, tau), oracle);
    const auto r = solve_constrained(m, c, groups, tau, rng);
    ASSERT_EQ(r.has_value(), !oracle.empty()) << "instance " << t;
    if (!r) continue;
    ++feasible;
    EXPECT_TRUE(std::find(oracle.begin(), oracle.end(), *r) != oracle.end());
    EXPECT_EQ(threshold_groups(*r, groups, tau), c);
    EXPECT_TRUE(verify(m, *r, c));
  }
  EXPECT_GT(feasible, 300);
}

TEST(ParityCore, ApproximatelyUniform) {
  Rng rng(77);
  const auto m = ParityCheckMatrix::from_rows({B("101100110"), B("010011011"), B("110010101")});
  const auto groups = consecutive_groups(3, 3);
  const Bits c = B("101");
  const auto all = brute_force(m, c, groups, 2);
  ASSERT_GE(all.size(), 8U);
  std::map<Bits, int> hist;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const auto r = solve_constrained(m, c, groups, 2, rng);
    ASSERT_TRUE(r.has_value());
    ++hist[*r];
  }
  EXPECT_EQ(hist.size(), all.size());
  const double expected = static_cast<double>(draws) / all.size();
  for (const auto& [r, n] : hist) {
    EXPECT_NEAR(n, expected, 0.3 * expected) << to_string(r);
  }
}

// Rejection exhausts its budget on a tight instance; enumeration must still find it.
TEST(ParityCore, EnumerationFallback) {
  Rng rng(8);
  const auto m = identity(3);
  const auto groups = consecutive_groups(3, 1);
  SolveOptions opts;
  opts.max_trials = 0;
  EXPECT_EQ(solve_constrained(m, B("110"), groups, 1, rng, opts), B("110"));
}
