#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ranklab/context.hpp"
#include "ranklab/scalar.hpp"

namespace ranklab {

using Sequence = std::vector<Scalar>;

/// A sorting permutation of a source sequence together with the sorted values.
/// `permutation` holds 1-based source indices: sorted_values[i] ==
/// source[permutation[i] - 1].
struct SortedView {
  std::vector<std::size_t> permutation;
  Sequence sorted_values;

  std::size_t size() const noexcept { return sorted_values.size(); }
  /// Checks bijection, element correspondence and non-decreasing order.
  bool is_valid_for(std::span<const Scalar> source) const;
};

/// Sums of the sorted sequence at even positions (b_2 + b_4 + ...) and at odd
/// positions (b_1 + b_3 + ...). Positions are 1-based; odd lengths simply end
/// on an odd position.
struct RankSumResult {
  Scalar even_sum;
  Scalar odd_sum;
  std::size_t length = 0;

  friend bool operator==(const RankSumResult&, const RankSumResult&) = default;
};

namespace detail {

template <ArithmeticContext Ctx>
void merge_sort(std::span<const typename Ctx::value_type> values, std::span<std::size_t> idx,
                std::span<std::size_t> scratch, Ctx& ctx) {
  const std::size_t m = idx.size();
  if (m < 2) return;
  const std::size_t half = m / 2;
  merge_sort(values, idx.first(half), scratch.first(half), ctx);
  merge_sort(values, idx.subspan(half), scratch.subspan(half), ctx);

  std::size_t l = 0, r = half, out = 0;
  while (l < half && r < m) {
    // Take from the right only when strictly smaller: keeps the merge stable.
    if (ctx.compare(values[idx[r]], values[idx[l]]) < 0) {
      scratch[out++] = idx[r++];
    } else {
      scratch[out++] = idx[l++];
    }
  }
  while (l < half) scratch[out++] = idx[l++];
  while (r < m) scratch[out++] = idx[r++];
  std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(m), idx.begin());
}

// Sum of values[order[k]] for k = first, first + 2, ...; zero when empty.
template <ArithmeticContext Ctx>
typename Ctx::value_type strided_sum(std::span<const typename Ctx::value_type> values,
                                     std::span<const std::size_t> order, std::size_t first, Ctx& ctx) {
  if (first >= order.size()) return ctx.from_count(0);
  auto acc = values[order[first]];
  for (std::size_t k = first + 2; k < order.size(); k += 2) acc = ctx.add(acc, values[order[k]]);
  return acc;
}

}  // namespace detail

/// 0-based sorting permutation computed by top-down merge sort. Uses at most
/// m * ceil(log2 m) comparisons for every input of length m.
template <ArithmeticContext Ctx>
std::vector<std::size_t> sorting_permutation(std::span<const typename Ctx::value_type> values, Ctx& ctx) {
  std::vector<std::size_t> idx(values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::size_t> scratch(values.size());
  detail::merge_sort(values, std::span(idx), std::span(scratch), ctx);
  return idx;
}

/// Even-position sum of the sorted order of `values`.
template <ArithmeticContext Ctx>
typename Ctx::value_type even_rank_sum_with(std::span<const typename Ctx::value_type> values, Ctx& ctx) {
  const auto order = sorting_permutation(values, ctx);
  return detail::strided_sum(values, std::span<const std::size_t>(order), 1, ctx);
}

/// (even-position sum, odd-position sum) of the sorted order of `values`.
template <ArithmeticContext Ctx>
std::pair<typename Ctx::value_type, typename Ctx::value_type> rank_sums_with(
    std::span<const typename Ctx::value_type> values, Ctx& ctx) {
  const auto order = sorting_permutation(values, ctx);
  const std::span<const std::size_t> o(order);
  return {detail::strided_sum(values, o, 1, ctx), detail::strided_sum(values, o, 0, ctx)};
}

SortedView sort_view(std::span<const Scalar> seq);
RankSumResult rank_sums(std::span<const Scalar> seq);
Scalar even_rank_sum(std::span<const Scalar> seq);

}  // namespace ranklab
