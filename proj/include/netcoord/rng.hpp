#pragma once

#include <cmath>
#include <cstdint>

namespace netcoord {

// Deterministic, splittable pseudo-random generator (splitmix64 core).
// Every stochastic operation in the library draws from an Rng seeded
// explicitly, so runs are reproducible bit-for-bit from a single seed.
// std::random distributions are implementation-defined and are avoided.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed), seed_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound > 0. Multiply-shift mapping; the
  // bias is below 2^-64 per draw and the result is deterministic.
  std::uint64_t next_below(std::uint64_t bound) {
    return std::uint64_t((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  // Fair coin in {-1, +1}.
  int next_sign() { return (next_u64() >> 63) ? +1 : -1; }

  // Unit exponential via inverse CDF, -ln(1 - U).
  double next_exponential() { return -std::log1p(-next_unit()); }

  // Independent child stream. Derived from the original seed and the stream
  // index only, so split results do not depend on how much the parent has
  // already been consumed.
  Rng split(std::uint64_t stream) const {
    std::uint64_t z = seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t seed() const { return seed_; }

private:
  std::uint64_t state_;
  std::uint64_t seed_;
};

}  // namespace netcoord
