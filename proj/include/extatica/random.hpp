#pragma once

#include <cstdint>
#include <random>

namespace extatica {

/// The single source of randomness: a 64-bit Mersenne twister with a
/// platform-independent range mapping (std::uniform_int_distribution is
/// implementation-defined), so fixtures are byte-for-byte reproducible.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace extatica
