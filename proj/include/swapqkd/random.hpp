#pragma once

#include <cstdint>
#include <random>

namespace swapqkd {

/// All sampling draws from one of these; callers own their stream.
using RandomStream = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine output.
/// Bit-derived rather than distribution-based so identical seeds give
/// identical sequences on any standard library.
inline double next_uniform(RandomStream& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, 4).
inline std::uint32_t next_quarter(RandomStream& rng) {
  return static_cast<std::uint32_t>(rng() >> 62);
}

/// SplitMix64 finalizer; a stable, well-mixed 64-bit hash.
constexpr std::uint64_t splitmix64(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

/// Per-session seed from (master seed, session index). Stable across
/// platforms and independent of execution order, so sessions can run in
/// parallel and still reproduce individually.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed,
                                    std::uint64_t index) {
  return splitmix64(splitmix64(master_seed) ^ splitmix64(index + 1));
}

}  // namespace swapqkd
