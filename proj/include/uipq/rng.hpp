#pragma once

#include <cstdint>

namespace uipq {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Counter-based splittable stream. The output sequence is a pure function of
// (seed, stream), so replicas with distinct stream ids are reproducible and
// order-independent, and a sampler re-run with a deeper stop rule reproduces
// its shallower run as an exact prefix.
struct RngStream {
  std::uint64_t key = 0;
  std::uint64_t ctr = 0;
  std::uint64_t bitbuf = 0;
  int bitcnt = 0;

  static RngStream from_seed(std::uint64_t seed, std::uint64_t stream = 0) {
    RngStream r;
    r.key = detail::splitmix64(seed ^ detail::splitmix64(stream ^ 0x6A09E667F3BCC909ULL));
    return r;
  }

  // Independent child stream; derivation is deterministic and collision-resistant.
  RngStream derive(std::uint64_t tag) const {
    RngStream r;
    r.key = detail::splitmix64(key ^ detail::splitmix64(tag ^ 0xBB67AE8584CAA73BULL));
    return r;
  }

  std::uint64_t next_u64() { return detail::splitmix64(key + (++ctr) * 0x9E3779B97F4A7C15ULL); }

  int next_bit() {
    if (bitcnt == 0) {
      bitbuf = next_u64();
      bitcnt = 64;
    }
    int b = static_cast<int>(bitbuf & 1u);
    bitbuf >>= 1;
    --bitcnt;
    return b;
  }

  // P(k) = 2^{ -(k+1) }: count of successes before the first failure.
  int geometric_half() {
    int k = 0;
    while (next_bit()) ++k;
    return k;
  }

  // Exact uniform on {-1, 0, +1} via 2-bit rejection.
  int uniform3() {
    for (;;) {
      int hi = next_bit();
      int lo = next_bit();
      int v = (hi << 1) | lo;
      if (v < 3) return v - 1;
    }
  }

  int fair_bit() { return next_bit(); }

  // Exact uniform on [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      std::uint64_t v = next_u64();
      if (v < lim) return v % n;
    }
  }

  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }
};

}  // namespace uipq
