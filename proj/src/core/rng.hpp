#pragma once

#include <cstdint>

namespace ian {

// splitmix64. Self-contained so that seeded runs reproduce bit-for-bit on
// every platform, independent of the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], inclusive. Rejection sampling keeps the
  // stream identical regardless of the requested range history.
  long uniform(long lo, long hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t bound = ~0ull - ~0ull % range;
    for (;;) {
      std::uint64_t r = next();
      if (r < bound) return lo + static_cast<long>(r % range);
    }
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace ian
