#include "ranklab/generator.hpp"

#include <sstream>

#include "ranklab/errors.hpp"
#include "ranklab/random.hpp"

namespace ranklab {

GeneratorKind parse_generator_kind(std::string_view text) {
  if (text == "uniform") return GeneratorKind::uniform;
  if (text == "progression") return GeneratorKind::progression;
  if (text == "near-equal") return GeneratorKind::near_equal;
  throw UsageError("unknown generator kind '" + std::string(text) + "'");
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::uniform: return "uniform";
    case GeneratorKind::progression: return "progression";
    case GeneratorKind::near_equal: return "near-equal";
  }
  return "?";
}

namespace {

const Scalar& positive_g(const GeneratorSpec& spec) {
  if (!spec.g) throw UsageError(std::string(to_string(spec.kind)) + " requires --g");
  if (spec.g->sign() <= 0) throw UsageError("g must be > 0");
  return *spec.g;
}

Sequence progression(std::size_t n, const Scalar& start, const Scalar& g) {
  Sequence xs;
  xs.reserve(n);
  Scalar x = start;
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(x);
    x += g;
  }
  return xs;
}

}  // namespace

Sequence generate_instance(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::uniform: {
      if (spec.low > spec.high) throw UsageError("uniform range is empty");
      if (spec.max_denominator < 1) throw UsageError("max denominator must be >= 1");
      Rng rng(spec.seed);
      Sequence xs;
      xs.reserve(spec.n);
      for (std::size_t i = 0; i < spec.n; ++i) {
        const auto p = rng.between(spec.low, spec.high);
        const auto q = rng.between(1, spec.max_denominator);
        xs.push_back(Scalar::ratio(p, q));
      }
      return xs;
    }
    case GeneratorKind::progression:
      return progression(spec.n, spec.start, positive_g(spec));
    case GeneratorKind::near_equal: {
      const Scalar& g = positive_g(spec);
      if (spec.n < 2) throw UsageError("near-equal requires n >= 2");
      if (spec.epsilon.sign() <= 0 || spec.epsilon > g) throw UsageError("epsilon must lie in (0, g]");
      Sequence xs = progression(spec.n, spec.start, g);
      Rng rng(spec.seed);
      // Gap between positions k-1 and k (0-based) shrinks to g - epsilon.
      const std::size_t k = 1 + static_cast<std::size_t>(rng.below(spec.n - 1));
      for (std::size_t i = k; i < xs.size(); ++i) xs[i] -= spec.epsilon;
      return xs;
    }
  }
  throw UsageError("unknown generator kind");
}

std::string describe(const GeneratorSpec& spec) {
  std::ostringstream os;
  os << "kind=" << to_string(spec.kind) << " n=" << spec.n << " seed=" << spec.seed;
  switch (spec.kind) {
    case GeneratorKind::uniform:
      os << " low=" << spec.low << " high=" << spec.high << " max-den=" << spec.max_denominator;
      break;
    case GeneratorKind::progression:
      os << " g=" << (spec.g ? spec.g->to_string() : "?") << " start=" << spec.start;
      break;
    case GeneratorKind::near_equal:
      os << " g=" << (spec.g ? spec.g->to_string() : "?") << " start=" << spec.start << " epsilon=" << spec.epsilon;
      break;
  }
  return os.str();
}

}  // namespace ranklab
