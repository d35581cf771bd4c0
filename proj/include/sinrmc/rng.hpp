#pragma once

#include <cstdint>
#include <limits>

namespace sinrmc {

/// SplitMix64 output finalizer (Stafford variant 13). Bijective on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Stream tags separating the independent random inputs of one replicate.
namespace stream {
inline constexpr std::uint64_t kTransmitters = 1;
inline constexpr std::uint64_t kReceivers = 2;
inline constexpr std::uint64_t kInterferers = 3;
}  // namespace stream

struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_tag = 0;
};

/// Per-replicate seed:
///   h = mix64(master + G); h = mix64(h ^ mix64(tag + 2G)); h = mix64(h ^ mix64(index + 3G))
/// with G = 0x9E3779B97F4A7C15. Pure in its three inputs, so a replicate's
/// random stream never depends on which worker runs it.
constexpr std::uint64_t derive_replicate_seed(SeedSpec spec, std::uint64_t replicate_index) noexcept {
  constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  std::uint64_t h = mix64(spec.master_seed + kGolden);
  h = mix64(h ^ mix64(spec.stream_tag + 2 * kGolden));
  h = mix64(h ^ mix64(replicate_index + 3 * kGolden));
  return h;
}

/// xoshiro256++ seeded through SplitMix64. Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : s_) {
      sm += 0x9E3779B97F4A7C15ULL;
      word = mix64(sm);
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1); safe as a logarithm argument.
  double uniform_open() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

}  // namespace sinrmc
