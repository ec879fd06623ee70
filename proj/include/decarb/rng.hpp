#pragma once

#include <cstdint>

namespace decarb {

// splitmix64 finalizer; full-avalanche 64-bit mix.
std::uint64_t mix64(std::uint64_t x) noexcept;

// splitmix64. One instance per bootstrap resample keeps results independent
// of thread count and scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // [0, 1), 53-bit resolution
  double next_unit() noexcept { return double(next() >> 11) * 0x1.0p-53; }

  // (0, 1); safe as a quantile-function argument
  double next_open_unit() noexcept { return (double(next() >> 11) + 0.5) * 0x1.0p-53; }

  // [0, n); multiplicative range reduction, bias <= n / 2^64
  std::uint64_t next_index(std::uint64_t n) noexcept {
    return std::uint64_t((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // standard normal via inverse CDF
  double next_normal() noexcept;

 private:
  std::uint64_t state_;
};

// Substream k of a master seed. Distinct (seed, k) pairs map to decorrelated
// states via full avalanche, so streams may be consumed in any order.
SplitMix64 substream(std::uint64_t seed, std::uint64_t k) noexcept;

// Inverse of the standard normal CDF (Wichura's AS241, PPND16 precision);
// |error| < 1e-9 over p in (0, 1). Throws for p outside (0, 1).
double normal_quantile(double p);

}  // namespace decarb
