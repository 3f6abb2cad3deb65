#pragma once

// Arithmetic execution contexts. Every algorithm that the cost model measures
// is written against an ArithmeticContext and performs all order tests and
// arithmetic through it, so swapping ExactContext for CountingContext yields
// the operation counts of the very same code path.

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "ranklab/scalar.hpp"

namespace ranklab {

struct OpCounts {
  std::uint64_t comparisons = 0;
  std::uint64_t additions = 0;  // subtractions included
  std::uint64_t multiplications = 0;
  std::uint64_t divisions = 0;

  std::uint64_t total() const noexcept { return comparisons + additions + multiplications + divisions; }

  OpCounts& operator+=(const OpCounts& o) noexcept {
    comparisons += o.comparisons;
    additions += o.additions;
    multiplications += o.multiplications;
    divisions += o.divisions;
    return *this;
  }

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

std::ostream& operator<<(std::ostream& os, const OpCounts& c);

template <class C>
concept ArithmeticContext = requires(C& ctx, const typename C::value_type& a, std::size_t n) {
  typename C::value_type;
  { ctx.compare(a, a) } -> std::same_as<std::strong_ordering>;
  { ctx.add(a, a) } -> std::same_as<typename C::value_type>;
  { ctx.sub(a, a) } -> std::same_as<typename C::value_type>;
  { ctx.mul(a, a) } -> std::same_as<typename C::value_type>;
  { ctx.div(a, a) } -> std::same_as<typename C::value_type>;
  // Embeds a count as a value; free, like a constant in the computation tree.
  { ctx.from_count(n) } -> std::same_as<typename C::value_type>;
};

/// Plain exact arithmetic, no bookkeeping.
struct ExactContext {
  using value_type = Scalar;

  std::strong_ordering compare(const Scalar& a, const Scalar& b) const { return a <=> b; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
  Scalar from_count(std::size_t n) const { return Scalar(n); }
};

/// Exact arithmetic that tallies one unit per three-way order test and per
/// rational operation, regardless of operand size. One context per execution;
/// contexts share nothing, so independent runs may proceed in parallel.
class CountingContext {
 public:
  using value_type = Scalar;

  std::strong_ordering compare(const Scalar& a, const Scalar& b) {
    ++counts_.comparisons;
    return a <=> b;
  }
  Scalar add(const Scalar& a, const Scalar& b) {
    ++counts_.additions;
    return a + b;
  }
  Scalar sub(const Scalar& a, const Scalar& b) {
    ++counts_.additions;
    return a - b;
  }
  Scalar mul(const Scalar& a, const Scalar& b) {
    ++counts_.multiplications;
    return a * b;
  }
  Scalar div(const Scalar& a, const Scalar& b) {
    ++counts_.divisions;
    return a / b;
  }
  Scalar from_count(std::size_t n) const { return Scalar(n); }

  const OpCounts& counts() const noexcept { return counts_; }
  void reset() noexcept { counts_ = {}; }

 private:
  OpCounts counts_;
};

/// Native double arithmetic for wall-clock comparison only. Rounding makes it
/// unsound for the decision problem; never use it to answer MinGap.
struct FloatContext {
  using value_type = double;

  std::strong_ordering compare(double a, double b) const {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  double add(double a, double b) const { return a + b; }
  double sub(double a, double b) const { return a - b; }
  double mul(double a, double b) const { return a * b; }
  double div(double a, double b) const { return a / b; }
  double from_count(std::size_t n) const { return static_cast<double>(n); }
};

}  // namespace ranklab
