#pragma once

#include <cstdint>

namespace negacantor {

// SplitMix64 finalizer (Steele/Lea/Vigna). All randomised routines in this
// library draw through these counter-based helpers: every value is a pure
// function of (seed, stream indices), so output is bit-reproducible across
// platforms and independent of iteration order or partitioning.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t rng_absorb(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ v);
}

constexpr std::uint64_t rng_stream(std::uint64_t seed, std::uint64_t a) {
  return rng_absorb(splitmix64(seed), a);
}
constexpr std::uint64_t rng_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return rng_absorb(rng_stream(seed, a), b);
}
constexpr std::uint64_t rng_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                   std::uint64_t c) {
  return rng_absorb(rng_stream(seed, a, b), c);
}

// Uniform draw from {0,...,bound-1}, bias-free via rejection. The rejection
// attempts are folded into the stream hash, keeping determinism.
constexpr std::uint64_t uniform_below(std::uint64_t bound, std::uint64_t stream) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t u = rng_absorb(stream, attempt);
    if (u < limit) return u % bound;
  }
}

}  // namespace negacantor
