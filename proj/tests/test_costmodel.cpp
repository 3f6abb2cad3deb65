#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "ranklab/costmodel.hpp"
#include "ranklab/errors.hpp"
#include "ranklab/random.hpp"
#include "support.hpp"

namespace ranklab {
namespace {

std::uint64_t ceil_log2(std::uint64_t m) {
  std::uint64_t k = 0;
  while ((std::uint64_t{1} << k) < m) ++k;
  return k;
}

TEST(OpCounts, TotalAndAccumulate) {
  OpCounts a{1, 2, 3, 4};
  EXPECT_EQ(a.total(), 10u);
  a += OpCounts{1, 1, 1, 1};
  EXPECT_EQ(a, (OpCounts{2, 3, 4, 5}));
}

TEST(CountedEvenRankSum, TwoElements) {
  const auto r = counted_even_rank_sum(testing::seq({5, 1}));
  EXPECT_EQ(r.value, Scalar(5));
  EXPECT_EQ(r.counts.comparisons, 1u);
  EXPECT_EQ(r.counts.additions, 0u);
}

TEST(CountedEvenRankSum, ComparisonBoundAndValue) {
  Rng rng(50);
  for (std::size_t m = 1; m <= 300; ++m) {
    const Sequence xs = random_distinct_integers(m, rng);
    const auto r = counted_even_rank_sum(xs);
    EXPECT_LE(r.counts.comparisons, m * ceil_log2(m)) << "m=" << m;
    EXPECT_EQ(r.value, even_rank_sum(xs));
    EXPECT_EQ(r.counts.additions, m / 2 == 0 ? 0 : m / 2 - 1);
    EXPECT_EQ(r.counts.multiplications, 0u);
    EXPECT_EQ(r.counts.divisions, 0u);
  }
  // Worst-case sizes checked against the bound with adversarial (tied and
  // reversed) inputs as well.
  for (std::size_t m : {4u, 1024u}) {
    Sequence rev;
    for (std::size_t i = m; i > 0; --i) rev.emplace_back(i);
    EXPECT_LE(counted_even_rank_sum(rev).counts.comparisons, m * ceil_log2(m));
    EXPECT_LE(counted_even_rank_sum(random_distinct_integers(m, rng)).counts.comparisons, m * ceil_log2(m));
  }
}

TEST(CountedEvenRankSum, Deterministic) {
  Rng a(51), b(51);
  const Sequence xa = random_distinct_integers(500, a);
  const Sequence xb = random_distinct_integers(500, b);
  EXPECT_EQ(xa, xb);
  EXPECT_EQ(counted_even_rank_sum(xa).counts, counted_even_rank_sum(xb).counts);
}

TEST(CountingContext, ConcurrentContextsAreIndependent) {
  Rng rng(54);
  std::vector<Sequence> inputs;
  std::vector<OpCounts> sequential;
  for (int i = 0; i < 8; ++i) {
    inputs.push_back(random_distinct_integers(2000 + 100 * i, rng));
    sequential.push_back(counted_even_rank_sum(inputs.back()).counts);
  }
  std::vector<OpCounts> parallel(inputs.size());
  {
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      workers.emplace_back([&, i] { parallel[i] = counted_even_rank_sum(inputs[i]).counts; });
    }
  }
  EXPECT_EQ(parallel, sequential);
}

TEST(CountedReductionOverhead, ExactCounts) {
  Rng rng(52);
  for (std::size_t n : {1u, 2u, 3u, 10u, 100u, 1000u}) {
    const Sequence xs = testing::random_sequence(rng, n);
    const auto c = counted_reduction_overhead(xs, testing::random_positive_rational(rng));
    EXPECT_EQ(c, (OpCounts{1, 2 * n, 1, 0})) << "n=" << n;
  }
}

TEST(CountedReductionOverhead, EmptyInputCostsOnlyTheFinalAddition) {
  EXPECT_EQ(counted_reduction_overhead(Sequence{}, Scalar(2)), (OpCounts{1, 1, 1, 0}));
}

TEST(CountedReductionOverhead, RejectsNonPositive) {
  EXPECT_THROW(counted_reduction_overhead(testing::seq({1, 2}), Scalar(0)), DomainError);
}

TEST(RandomDistinctIntegers, AreDistinct) {
  Rng rng(53);
  auto xs = random_distinct_integers(2000, rng);
  std::sort(xs.begin(), xs.end());
  EXPECT_EQ(std::adjacent_find(xs.begin(), xs.end()), xs.end());
}

TEST(GrowthReport, TwoElements) {
  const std::vector<std::size_t> sizes{2};
  const auto rows = growth_report(sizes, 1, 0);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_GE(rows[0].comparisons, 1.0);
  EXPECT_GE(rows[0].total, 1.0);
}

TEST(GrowthReport, NormalizedBandAndDeterminism) {
  const std::vector<std::size_t> sizes{256, 512, 1024};
  const auto rows = growth_report(sizes, 20, 7);
  ASSERT_EQ(rows.size(), 3u);
  double lo = rows[0].normalized, hi = rows[0].normalized;
  for (const auto& r : rows) {
    lo = std::min(lo, r.normalized);
    hi = std::max(hi, r.normalized);
    EXPECT_NEAR(r.total, r.comparisons + r.additions + r.multiplications + r.divisions, 1e-9);
  }
  EXPECT_LT(hi, 1.25 * lo);

  std::ostringstream a, b;
  write_growth_csv(a, rows);
  write_growth_csv(b, growth_report(sizes, 20, 7));
  EXPECT_EQ(a.str(), b.str());

  std::ostringstream c;
  write_growth_csv(c, growth_report(sizes, 20, 8));
  EXPECT_NE(a.str(), c.str());
}

TEST(GrowthReport, SingleLargeTrialWithinBound) {
  const std::vector<std::size_t> sizes{1024};
  EXPECT_LE(growth_report(sizes, 1, 1)[0].comparisons, 10240.0);
}

TEST(GrowthReport, CsvLayout) {
  const std::vector<std::size_t> sizes{2, 8};
  std::ostringstream os;
  write_growth_csv(os, growth_report(sizes, 3, 1));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "m,comparisons,additions,multiplications,divisions,total,normalized");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6);
  }
  EXPECT_EQ(rows, 2);
}

TEST(GrowthReport, UsageErrors) {
  const std::vector<std::size_t> none;
  const std::vector<std::size_t> tiny{4, 1};
  const std::vector<std::size_t> ok{4};
  EXPECT_THROW(growth_report(none, 1, 0), UsageError);
  EXPECT_THROW(growth_report(tiny, 1, 0), UsageError);
  EXPECT_THROW(growth_report(ok, 0, 0), UsageError);
}

TEST(WallclockReport, ProducesOneRowPerSize) {
  const std::vector<std::size_t> sizes{16, 64};
  const auto rows = wallclock_report(sizes, 2, 3);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].m, 64u);
  EXPECT_GT(rows[1].exact_ns, 0.0);
}

}  // namespace
}  // namespace ranklab
