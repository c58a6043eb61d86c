#pragma once

#include <cstdint>
#include <string_view>

namespace detsing {

// Deterministic, platform-independent generator (splitmix64).  Every random
// choice in the library flows through one of these, seeded explicitly, so
// runs replay bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // Uniform on the nonzero integers of [-bound, bound].
  long nonzero_coefficient(long bound) {
    long k = static_cast<long>(below(static_cast<std::uint64_t>(2 * bound)));
    return k < bound ? k - bound : k - bound + 1;
  }

 private:
  std::uint64_t state_;
};

// Child seed for a named sub-computation; independent of call order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  Rng mix(seed ^ h ^ (index * 0xD1B54A32D192ED03ull));
  mix.next();
  return mix.next();
}

}  // namespace detsing
