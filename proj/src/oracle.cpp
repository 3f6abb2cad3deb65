#include "ranklab/oracle.hpp"

namespace ranklab::oracle {

std::vector<std::size_t> stable_ranks(std::span<const Scalar> seq) {
  ExactContext ctx;
  return stable_ranks_with(seq, ctx);
}

Scalar even_rank_sum_counting(std::span<const Scalar> seq) {
  ExactContext ctx;
  return even_rank_sum_counting_with(seq, ctx);
}

ExtendedScalar min_gap_allpairs(std::span<const Scalar> seq) {
  if (seq.size() < 2) return ExtendedScalar::infinity();
  bool have = false;
  Scalar best;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      Scalar d = seq[i] - seq[j];
      if (d.sign() < 0) d = -d;
      if (!have || d < best) {
        best = std::move(d);
        have = true;
      }
    }
  }
  return best;
}

EvenRankSumSolver counting_solver() {
  return [](std::span<const Scalar> a) { return even_rank_sum_counting(a); };
}

}  // namespace ranklab::oracle
