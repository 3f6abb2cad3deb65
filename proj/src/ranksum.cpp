#include "ranklab/ranksum.hpp"

#include <algorithm>

namespace ranklab {

bool SortedView::is_valid_for(std::span<const Scalar> source) const {
  const std::size_t m = source.size();
  if (permutation.size() != m || sorted_values.size() != m) return false;
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t p = permutation[i];
    if (p < 1 || p > m || seen[p - 1]) return false;
    seen[p - 1] = true;
    if (sorted_values[i] != source[p - 1]) return false;
    if (i > 0 && sorted_values[i] < sorted_values[i - 1]) return false;
  }
  return true;
}

SortedView sort_view(std::span<const Scalar> seq) {
  ExactContext ctx;
  const auto order = sorting_permutation(seq, ctx);
  SortedView view;
  view.permutation.reserve(seq.size());
  view.sorted_values.reserve(seq.size());
  for (std::size_t i : order) {
    view.permutation.push_back(i + 1);
    view.sorted_values.push_back(seq[i]);
  }
  return view;
}

RankSumResult rank_sums(std::span<const Scalar> seq) {
  ExactContext ctx;
  auto [even, odd] = rank_sums_with(seq, ctx);
  return {std::move(even), std::move(odd), seq.size()};
}

Scalar even_rank_sum(std::span<const Scalar> seq) {
  ExactContext ctx;
  return even_rank_sum_with(seq, ctx);
}

}  // namespace ranklab
