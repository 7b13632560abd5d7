#pragma once

#include <cstdint>
#include <random>

namespace mvwald {

/// splitmix64 finalizer; decorrelates nearby (seed, stream) pairs.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// A seeded, splittable random stream. Two streams constructed with the same
/// (seed, stream_id) produce bitwise-identical sequences; distinct stream ids
/// yield decorrelated sequences. Streams are single-owner: concurrent use
/// requires one stream per worker.
class RngStream {
public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id), key_(mix64(mix64(seed) ^ mix64(stream_id) ^ 0xA5A5A5A55A5A5A5AULL)),
        engine_(key_) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Child stream; substream(i) depends only on (seed, stream_id, i).
  RngStream substream(std::uint64_t id) const { return RngStream(key_, id); }

  std::mt19937_64& engine() { return engine_; }

  /// Uniform draw on [0,1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer on [0, bound); bound >= 1.
  std::uint64_t uniform_int(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::mt19937_64 engine_;
};

} // namespace mvwald
