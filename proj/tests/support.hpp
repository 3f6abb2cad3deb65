#pragma once

// Random instance helpers shared by the unit and acceptance suites.

#include <cstdint>
#include <vector>

#include "ranklab/random.hpp"
#include "ranklab/ranksum.hpp"
#include "ranklab/scalar.hpp"

namespace ranklab::testing {

/// p/q with p in [-num_bound, num_bound], q in [1, den_bound].
inline Scalar random_rational(Rng& rng, std::int64_t num_bound = 1000, std::int64_t den_bound = 50) {
  return Scalar::ratio(rng.between(-num_bound, num_bound), rng.between(1, den_bound));
}

/// p/q with p in [1, num_bound], q in [1, den_bound].
inline Scalar random_positive_rational(Rng& rng, std::int64_t num_bound = 1000, std::int64_t den_bound = 50) {
  return Scalar::ratio(rng.between(1, num_bound), rng.between(1, den_bound));
}

inline Sequence random_sequence(Rng& rng, std::size_t m, std::int64_t num_bound = 1000,
                                std::int64_t den_bound = 50) {
  Sequence xs;
  xs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) xs.push_back(random_rational(rng, num_bound, den_bound));
  return xs;
}

/// Small integer values, so ties are frequent.
inline Sequence random_tied_sequence(Rng& rng, std::size_t m, std::int64_t values = 4) {
  Sequence xs;
  xs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) xs.emplace_back(rng.between(0, values - 1));
  return xs;
}

inline Sequence seq(std::initializer_list<std::int64_t> v) {
  Sequence xs;
  for (auto x : v) xs.emplace_back(x);
  return xs;
}

}  // namespace ranklab::testing
