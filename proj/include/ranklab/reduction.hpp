#pragma once

// MinGap decided through one call to an arbitrary even-rank-sum solver:
//   1. S = x_1 + ... + x_n, and the interleaved sequence
//      (x_1, x_1 + g, x_2, x_2 + g, ..., x_n, x_n + g);
//   2. R = solver(interleaved);
//   3. YES iff R == S + n*g (exact).
// Steps 1 and 3 cost exactly 2n additions, one multiplication and one
// comparison; the cost model relies on these counts.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ranklab/context.hpp"
#include "ranklab/errors.hpp"
#include "ranklab/mingap.hpp"
#include "ranklab/ranksum.hpp"

namespace ranklab {

/// Must return the exact even-rank-sum of its argument and be re-entrant.
using EvenRankSumSolver = std::function<Scalar(std::span<const Scalar>)>;

/// The merge-sort based solver (`even_rank_sum`).
EvenRankSumSolver sorting_solver();

/// Throws DomainError unless g > 0.
void require_positive_threshold(const Scalar& g);

struct ReductionOutcome {
  Scalar S;       // sum of X
  Scalar R;       // solver output on the interleaved sequence
  Scalar ng;      // n * g
  Scalar target;  // S + ng
  Decision decision;
};

/// n - 1 additions (none for n <= 1).
template <ArithmeticContext Ctx>
Scalar sum_with(std::span<const Scalar> xs, Ctx& ctx) {
  if (xs.empty()) return ctx.from_count(0);
  Scalar acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = ctx.add(acc, xs[i]);
  return acc;
}

/// Exactly n additions.
template <ArithmeticContext Ctx>
Sequence interleave_with(std::span<const Scalar> xs, const Scalar& g, Ctx& ctx) {
  require_positive_threshold(g);
  Sequence a;
  a.reserve(2 * xs.size());
  for (const Scalar& x : xs) {
    a.push_back(x);
    a.push_back(ctx.add(x, g));
  }
  return a;
}

/// Runs all three steps. Only Steps 1 and 3 go through `ctx`; the solver does
/// its own work.
template <ArithmeticContext Ctx>
ReductionOutcome reduce_with(std::span<const Scalar> xs, const Scalar& g, const EvenRankSumSolver& solver,
                             Ctx& ctx) {
  require_positive_threshold(g);
  Scalar s = sum_with(xs, ctx);
  const Sequence a = interleave_with(xs, g, ctx);

  Scalar r = solver(a);

  Scalar ng = ctx.mul(ctx.from_count(xs.size()), g);
  Scalar target = ctx.add(s, ng);
  const Decision d = ctx.compare(r, target) == 0 ? Decision::yes : Decision::no;
  return {std::move(s), std::move(r), std::move(ng), std::move(target), d};
}

/// Throws DomainError unless g > 0.
Sequence interleave(std::span<const Scalar> xs, const Scalar& g);

ReductionOutcome run_reduction(std::span<const Scalar> xs, const Scalar& g,
                               const EvenRankSumSolver& solver = sorting_solver());

Decision mingap_via_evenranksum(std::span<const Scalar> xs, const Scalar& g,
                                const EvenRankSumSolver& solver = sorting_solver());

/// Audit record for one reduction instance.
///   slack = ng - (R - U) >= 0, slack == 0 <=> G >= g, R + U == 2S + ng.
struct Lemma1Certificate {
  std::size_t n = 0;
  Scalar g;
  Scalar S;
  Scalar R;
  Scalar U;
  ExtendedScalar G = ExtendedScalar::infinity();
  Scalar ng;
  Scalar slack;
  Decision decision = Decision::no;
};

/// Fields in serialization order (n, g, S, R, U, G, ng, slack, decision), all
/// as exact text. G is "inf" when infinite.
std::vector<std::pair<std::string, std::string>> certificate_fields(const Lemma1Certificate& c);

/// Raised when a computed certificate breaks one of its invariants. That can
/// only happen with an incorrect solver or broken arithmetic.
class CertificateViolation : public std::logic_error {
 public:
  CertificateViolation(Lemma1Certificate cert, std::vector<std::string> failed);

  const Lemma1Certificate& certificate() const noexcept { return cert_; }
  const std::vector<std::string>& failed_invariants() const noexcept { return failed_; }

 private:
  Lemma1Certificate cert_;
  std::vector<std::string> failed_;
};

/// Builds the certificate from first principles: R from `solver` on the
/// interleaved sequence (merge-sort solver by default), U from the odd
/// positions of an independent sort of it, G from sorting X directly.
/// Throws DomainError for g <= 0 and CertificateViolation when an invariant
/// fails.
Lemma1Certificate lemma1_certificate(std::span<const Scalar> xs, const Scalar& g,
                                     const EvenRankSumSolver& solver = sorting_solver());

}  // namespace ranklab
