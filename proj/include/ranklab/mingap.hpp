#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "ranklab/ranksum.hpp"
#include "ranklab/scalar.hpp"

namespace ranklab {

enum class Decision { no, yes };

constexpr std::string_view to_string(Decision d) { return d == Decision::yes ? "YES" : "NO"; }

struct GapReport {
  ExtendedScalar min_gap;  // infinite for fewer than two elements
  Scalar threshold;
  Decision decision;
};

/// Smallest adjacent difference of the sorted order, or nullopt when the gap
/// set is empty (length < 2). Sorts through `ctx`, then one subtraction per
/// gap and one comparison per gap after the first.
template <ArithmeticContext Ctx>
std::optional<typename Ctx::value_type> min_gap_with(std::span<const typename Ctx::value_type> values, Ctx& ctx) {
  if (values.size() < 2) return std::nullopt;
  const auto order = sorting_permutation(values, ctx);
  auto best = ctx.sub(values[order[1]], values[order[0]]);
  for (std::size_t i = 2; i < order.size(); ++i) {
    auto gap = ctx.sub(values[order[i]], values[order[i - 1]]);
    if (ctx.compare(gap, best) < 0) best = std::move(gap);
  }
  return best;
}

ExtendedScalar min_gap(std::span<const Scalar> seq);

/// YES iff every gap is >= g. Vacuously YES below two elements, and always YES
/// for g <= 0 since gaps are non-negative.
GapReport min_gap_at_least(std::span<const Scalar> seq, const Scalar& g);

}  // namespace ranklab
