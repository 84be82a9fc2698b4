#ifndef BELL_RANDOM_HPP
#define BELL_RANDOM_HPP

#include <cstdint>

namespace bell {

/// Keyed counter-based pseudorandom generator (SplitMix64 core).
///
/// Two guarantees the trial engine relies on:
///  - the n-th output of a stream is a pure function of (key, n), and
///  - split() derives a child key from the parent key and a stream index
///    alone, never from the number of values already drawn.
///
/// Trial t of a run can therefore be regenerated from (seed, t) no matter
/// which worker executes it or how many draws neighbouring trials consumed.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) noexcept
      : key_(mix64(seed ^ kSeedSalt)), state_(key_) {}

  /// Independent sub-stream identified by (this stream's key, index).
  RandomSource split(std::uint64_t stream_index) const noexcept {
    return RandomSource(FromKey{}, mix64(key_ ^ mix64(stream_index + kGolden)));
  }

  std::uint64_t next_u64() noexcept {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform double in [0, 1), 53 usable bits.
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

private:
  struct FromKey {};
  RandomSource(FromKey, std::uint64_t key) noexcept : key_(key), state_(key) {}

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kSeedSalt = 0xB5297A4D1DF4D761ull;

  // Finalizer from SplitMix64; bijective avalanche on 64 bits.
  static constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;    // stream identity; fixed at construction
  std::uint64_t state_;  // draw counter, pre-mixed
};

}  // namespace bell

#endif
