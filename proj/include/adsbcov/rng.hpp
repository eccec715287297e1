#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace adsbcov {

// Philox4x64-10 counter-based generator. Every (key, counter) pair maps to an
// independent 256-bit block of output, so parallel workers can draw from
// disjoint substreams without sharing state. Output matches numpy's
// np.random.Philox bit for bit (verified by known-answer tests).
class Philox4x64 {
 public:
  using result_type = std::uint64_t;

  Philox4x64(std::array<std::uint64_t, 2> key,
             std::array<std::uint64_t, 4> counter)
      : key_(key), counter_(counter) {}

  /// One 10-round block: 256-bit counter + 128-bit key -> 256-bit output.
  static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> ctr,
                                            std::array<std::uint64_t, 2> key);

  std::uint64_t next_u64() {
    if (pos_ == 4) {
      buffer_ = block(counter_, key_);
      pos_ = 0;
      // little-endian 256-bit increment
      for (int i = 0; i < 4; ++i) {
        if (++counter_[static_cast<std::size_t>(i)] != 0) break;
      }
    }
    return buffer_[pos_++];
  }

  std::uint64_t operator()() { return next_u64(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() {
    return std::numeric_limits<std::uint64_t>::max();
  }

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> buffer_{};
  int pos_ = 4;
};

// Fixed salts keeping unrelated uses of one master seed decorrelated.
enum class StreamPurpose : std::uint64_t {
  kPopulation = 1,
  kFixedDistance = 2,
  kNearest = 3,
  kFading = 4,
  kPropertySuite = 5,
  kSynthetic = 6,
};

/// Substream for (master seed, purpose, index); index is typically a trial
/// number. Streams are disjoint: the index and purpose live in the counter
/// prefix, leaving 2^64 blocks per stream.
inline Philox4x64 substream(std::uint64_t master_seed, StreamPurpose purpose,
                            std::uint64_t index) {
  return Philox4x64({master_seed, static_cast<std::uint64_t>(purpose)},
                    {0, 0, index, static_cast<std::uint64_t>(purpose)});
}

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Philox4x64& rng);

/// Uniform double in [lo, hi).
double uniform(Philox4x64& rng, double lo, double hi);

/// Exponential with the given mean (inversion; strictly positive input to log).
double exponential(Philox4x64& rng, double mean = 1.0);

/// Standard normal draw (Box-Muller, fixed two words per draw).
double normal01(Philox4x64& rng);

/// Gamma with shape k and unit mean, i.e. Gamma(k, scale = 1/k).
/// Marsaglia-Tsang squeeze for k >= 1, boost via U^{1/k} for k < 1.
double gamma_mean_one(Philox4x64& rng, double shape);

/// Poisson count by summing unit exponentials until the mean is exceeded.
std::uint64_t poisson(Philox4x64& rng, double mean);

}  // namespace adsbcov
