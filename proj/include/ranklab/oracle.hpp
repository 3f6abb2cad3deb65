#pragma once

// Quadratic reference implementations. They share no algorithm with the
// sort-based paths: ranks are counted, gaps are taken over all pairs.

#include <cstddef>
#include <span>
#include <vector>

#include "ranklab/context.hpp"
#include "ranklab/reduction.hpp"
#include "ranklab/scalar.hpp"

namespace ranklab::oracle {

/// rank(i) = #{j : a_j < a_i} + #{j < i : a_j == a_i} + 1, 1-based.
/// Exactly m(m - 1) three-way comparisons.
template <ArithmeticContext Ctx>
std::vector<std::size_t> stable_ranks_with(std::span<const typename Ctx::value_type> values, Ctx& ctx) {
  const std::size_t m = values.size();
  std::vector<std::size_t> rank(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const auto ord = ctx.compare(values[j], values[i]);
      if (ord < 0 || (ord == 0 && j < i)) ++rank[i];
    }
  }
  return rank;
}

/// Sum of the elements with even stable rank, without sorting.
template <ArithmeticContext Ctx>
typename Ctx::value_type even_rank_sum_counting_with(std::span<const typename Ctx::value_type> values, Ctx& ctx) {
  const auto rank = stable_ranks_with(values, ctx);
  auto acc = ctx.from_count(0);
  bool any = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (rank[i] % 2 != 0) continue;
    acc = any ? ctx.add(acc, values[i]) : values[i];
    any = true;
  }
  return acc;
}

std::vector<std::size_t> stable_ranks(std::span<const Scalar> seq);
Scalar even_rank_sum_counting(std::span<const Scalar> seq);

/// min over i < j of |x_i - x_j|; infinite below two elements.
ExtendedScalar min_gap_allpairs(std::span<const Scalar> seq);

/// `even_rank_sum_counting` wrapped as a reduction solver.
EvenRankSumSolver counting_solver();

}  // namespace ranklab::oracle
