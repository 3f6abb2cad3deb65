#include "ranklab/costmodel.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "ranklab/errors.hpp"
#include "ranklab/reduction.hpp"

namespace ranklab {

std::ostream& operator<<(std::ostream& os, const OpCounts& c) {
  return os << "{comparisons " << c.comparisons << ", additions " << c.additions << ", multiplications "
            << c.multiplications << ", divisions " << c.divisions << "}";
}

CountedValue counted_even_rank_sum(std::span<const Scalar> seq) {
  CountingContext ctx;
  Scalar v = even_rank_sum_with(seq, ctx);
  return {std::move(v), ctx.counts()};
}

OpCounts counted_reduction_overhead(std::span<const Scalar> xs, const Scalar& g) {
  CountingContext ctx;
  reduce_with(xs, g, sorting_solver(), ctx);
  return ctx.counts();
}

Sequence random_distinct_integers(std::size_t m, Rng& rng) {
  Sequence out;
  out.reserve(m);
  std::int64_t x = rng.between(-1'000'000, 1'000'000);
  for (std::size_t i = 0; i < m; ++i) {
    out.emplace_back(x);
    x += 1 + rng.between(0, 999);
  }
  rng.shuffle(out);
  return out;
}

namespace {

void validate_sizes(std::span<const std::size_t> sizes, std::size_t trials) {
  if (sizes.empty()) throw UsageError("sizes must be non-empty");
  for (std::size_t m : sizes) {
    if (m < 2) throw UsageError("every size must be >= 2 (got " + std::to_string(m) + ")");
  }
  if (trials < 1) throw UsageError("trials must be >= 1");
}

Sequence trial_instance(std::size_t m, std::size_t trial, std::uint64_t seed) {
  Rng rng(derive_seed(derive_seed(seed, m), trial));
  return random_distinct_integers(m, rng);
}

}  // namespace

std::vector<GrowthRow> growth_report(std::span<const std::size_t> sizes, std::size_t trials, std::uint64_t seed) {
  validate_sizes(sizes, trials);
  std::vector<GrowthRow> rows;
  rows.reserve(sizes.size());
  for (std::size_t m : sizes) {
    OpCounts sum;
    for (std::size_t t = 0; t < trials; ++t) sum += counted_even_rank_sum(trial_instance(m, t, seed)).counts;

    const double k = static_cast<double>(trials);
    GrowthRow row;
    row.m = m;
    row.comparisons = static_cast<double>(sum.comparisons) / k;
    row.additions = static_cast<double>(sum.additions) / k;
    row.multiplications = static_cast<double>(sum.multiplications) / k;
    row.divisions = static_cast<double>(sum.divisions) / k;
    row.total = static_cast<double>(sum.total()) / k;
    const double md = static_cast<double>(m);
    row.normalized = row.total / (md * std::log2(md));
    rows.push_back(row);
  }
  return rows;
}

void write_growth_csv(std::ostream& os, std::span<const GrowthRow> rows) {
  os << "m,comparisons,additions,multiplications,divisions,total,normalized\n";
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::fixed;
  for (const auto& r : rows) {
    os << r.m << std::setprecision(3) << ',' << r.comparisons << ',' << r.additions << ',' << r.multiplications
       << ',' << r.divisions << ',' << r.total << std::setprecision(6) << ',' << r.normalized << '\n';
  }
  os.flags(flags);
  os.precision(prec);
}

std::vector<WallclockRow> wallclock_report(std::span<const std::size_t> sizes, std::size_t trials,
                                           std::uint64_t seed) {
  validate_sizes(sizes, trials);
  using clock = std::chrono::steady_clock;
  std::vector<WallclockRow> rows;
  for (std::size_t m : sizes) {
    double exact_ns = 0, float_ns = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Sequence exact = trial_instance(m, t, seed);
      std::vector<double> approx;
      approx.reserve(m);
      for (const auto& s : exact) approx.push_back(s.to_double());

      ExactContext ectx;
      auto t0 = clock::now();
      const Scalar ev = even_rank_sum_with(std::span<const Scalar>(exact), ectx);
      auto t1 = clock::now();
      FloatContext fctx;
      volatile double fv = even_rank_sum_with(std::span<const double>(approx), fctx);
      auto t2 = clock::now();
      (void)ev;
      (void)fv;
      exact_ns += std::chrono::duration<double, std::nano>(t1 - t0).count();
      float_ns += std::chrono::duration<double, std::nano>(t2 - t1).count();
    }
    rows.push_back({m, exact_ns / static_cast<double>(trials), float_ns / static_cast<double>(trials)});
  }
  return rows;
}

}  // namespace ranklab
