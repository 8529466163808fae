#pragma once

#include <cstdint>

namespace sforge {

// SplitMix64 (Steele/Lea/Vigna).  Catalog records store seeds, so the stream
// must stay bit-stable across platforms and releases; do not swap the
// generator without bumping the catalog format.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform draw in [lo, hi] by modulo reduction.  Consumes exactly one raw
  // draw per call, which keeps the draw order (and therefore seeds) portable.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace sforge
