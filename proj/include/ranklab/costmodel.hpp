#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ranklab/context.hpp"
#include "ranklab/random.hpp"
#include "ranklab/ranksum.hpp"

namespace ranklab {

struct CountedValue {
  Scalar value;
  OpCounts counts;
};

/// Even-rank-sum through a fresh CountingContext: merge-sort comparisons plus
/// floor(m/2) - 1 additions for the even-position sum.
CountedValue counted_even_rank_sum(std::span<const Scalar> seq);

/// Counts for Steps 1 and 3 of the reduction only (the solver is excluded):
/// 2n additions, 1 multiplication, 1 comparison, 0 divisions for n >= 1.
/// Throws DomainError unless g > 0.
OpCounts counted_reduction_overhead(std::span<const Scalar> xs, const Scalar& g);

/// m distinct integers in random order, deterministic for a given generator
/// state.
Sequence random_distinct_integers(std::size_t m, Rng& rng);

struct GrowthRow {
  std::size_t m = 0;
  double comparisons = 0;
  double additions = 0;
  double multiplications = 0;
  double divisions = 0;
  double total = 0;
  double normalized = 0;  // total / (m log2 m)
};

/// Mean operation counts of counted_even_rank_sum over `trials` random
/// distinct-valued instances per size. Deterministic in `seed`; each (m, trial)
/// draws from its own derived stream. Throws UsageError when sizes is empty,
/// any size is < 2, or trials < 1.
std::vector<GrowthRow> growth_report(std::span<const std::size_t> sizes, std::size_t trials, std::uint64_t seed);

/// Header `m,comparisons,additions,multiplications,divisions,total,normalized`
/// then one row per size, fixed-point formatted.
void write_growth_csv(std::ostream& os, std::span<const GrowthRow> rows);

struct WallclockRow {
  std::size_t m = 0;
  double exact_ns = 0;  // mean ns per even-rank-sum, exact rationals
  double float_ns = 0;  // same instances in double; value-unsound
};

/// Timing only; results vary run to run and are not part of the CSV contract.
std::vector<WallclockRow> wallclock_report(std::span<const std::size_t> sizes, std::size_t trials,
                                           std::uint64_t seed);

}  // namespace ranklab
