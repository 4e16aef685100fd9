#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "sympair/rational.hpp"

namespace sympair {

/// Deterministic source for sampled inputs. std::mt19937_64 output is
/// fixed by the standard; draws are reduced by modulo so results do not
/// depend on any library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// p/q with p in [-bound, bound] and q in [1, bound].
  Rational rational(unsigned bound);
  /// p/q with p in [-bound, bound] \ {0} and q in [1, bound].
  Rational nonzero_rational(unsigned bound);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for trial `index` of the check named `tag`, derived from the master seed.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index);

inline constexpr unsigned kDefaultBound = 5;

}  // namespace sympair
