#include "ranklab/mingap.hpp"

namespace ranklab {

ExtendedScalar min_gap(std::span<const Scalar> seq) {
  ExactContext ctx;
  auto g = min_gap_with(seq, ctx);
  return g ? ExtendedScalar(std::move(*g)) : ExtendedScalar::infinity();
}

GapReport min_gap_at_least(std::span<const Scalar> seq, const Scalar& g) {
  auto gap = min_gap(seq);
  const Decision d = gap.at_least(g) ? Decision::yes : Decision::no;
  return {std::move(gap), g, d};
}

}  // namespace ranklab
