#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ranklab/ranksum.hpp"

namespace ranklab {

enum class GeneratorKind { uniform, progression, near_equal };

/// "uniform" | "progression" | "near-equal"; throws UsageError otherwise.
GeneratorKind parse_generator_kind(std::string_view text);
std::string_view to_string(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::uniform;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<Scalar> g;             // required for progression and near-equal
  Scalar start = 0;                    // x_1 of progression / near-equal
  Scalar epsilon = Scalar::ratio(1, 7);  // near-equal gap reduction
  std::int64_t low = -1000;            // uniform numerator range
  std::int64_t high = 1000;
  std::int64_t max_denominator = 1;    // uniform denominators drawn from [1, max]
};

/// - uniform: x_i = p_i / q_i, p_i in [low, high], q_i in [1, max_denominator].
/// - progression: x_i = start + (i - 1) g, so every gap equals g.
/// - near-equal: the progression with the points after a seed-chosen gap
///   shifted down by epsilon, so exactly that one gap is g - epsilon.
/// Throws UsageError for missing/non-positive g, epsilon outside (0, g],
/// n < 2 for near-equal, or an empty/invalid uniform range.
Sequence generate_instance(const GeneratorSpec& spec);

/// One-line description of the spec, used as the instance file header.
std::string describe(const GeneratorSpec& spec);

}  // namespace ranklab
