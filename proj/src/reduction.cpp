#include "ranklab/reduction.hpp"

#include <sstream>

namespace ranklab {

EvenRankSumSolver sorting_solver() {
  return [](std::span<const Scalar> a) { return even_rank_sum(a); };
}

void require_positive_threshold(const Scalar& g) {
  if (g.sign() <= 0) throw DomainError("reduction requires g > 0 (got " + g.to_string() + ")");
}

Sequence interleave(std::span<const Scalar> xs, const Scalar& g) {
  ExactContext ctx;
  return interleave_with(xs, g, ctx);
}

ReductionOutcome run_reduction(std::span<const Scalar> xs, const Scalar& g, const EvenRankSumSolver& solver) {
  ExactContext ctx;
  return reduce_with(xs, g, solver, ctx);
}

Decision mingap_via_evenranksum(std::span<const Scalar> xs, const Scalar& g, const EvenRankSumSolver& solver) {
  return run_reduction(xs, g, solver).decision;
}

std::vector<std::pair<std::string, std::string>> certificate_fields(const Lemma1Certificate& c) {
  return {
      {"n", std::to_string(c.n)},
      {"g", c.g.to_string()},
      {"S", c.S.to_string()},
      {"R", c.R.to_string()},
      {"U", c.U.to_string()},
      {"G", c.G.to_string()},
      {"ng", c.ng.to_string()},
      {"slack", c.slack.to_string()},
      {"decision", std::string(to_string(c.decision))},
  };
}

namespace {

std::string violation_message(const Lemma1Certificate& cert, const std::vector<std::string>& failed) {
  std::ostringstream os;
  os << "certificate invariant violated:";
  for (const auto& f : failed) os << " [" << f << "]";
  os << " certificate {";
  bool first = true;
  for (const auto& [k, v] : certificate_fields(cert)) {
    os << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

CertificateViolation::CertificateViolation(Lemma1Certificate cert, std::vector<std::string> failed)
    : std::logic_error(violation_message(cert, failed)), cert_(std::move(cert)), failed_(std::move(failed)) {}

Lemma1Certificate lemma1_certificate(std::span<const Scalar> xs, const Scalar& g, const EvenRankSumSolver& solver) {
  require_positive_threshold(g);

  Lemma1Certificate c;
  c.n = xs.size();
  c.g = g;

  const Sequence a = interleave(xs, g);
  c.R = solver(a);
  c.U = rank_sums(a).odd_sum;

  ExactContext ctx;
  c.S = sum_with(xs, ctx);
  c.G = min_gap(xs);
  c.ng = Scalar(c.n) * g;
  c.slack = c.ng - (c.R - c.U);
  c.decision = c.slack.is_zero() ? Decision::yes : Decision::no;

  std::vector<std::string> failed;
  if (c.slack.sign() < 0) failed.emplace_back("slack >= 0");
  if (c.slack.is_zero() != c.G.at_least(g)) failed.emplace_back("slack == 0 <=> G >= g");
  if (c.R + c.U != Scalar(2) * c.S + c.ng) failed.emplace_back("R + U == 2S + ng");
  if (!failed.empty()) throw CertificateViolation(std::move(c), std::move(failed));
  return c;
}

}  // namespace ranklab
