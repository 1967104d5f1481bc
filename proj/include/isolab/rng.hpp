#pragma once

#include <cstdint>

namespace isolab {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based generator: output k of stream (seed, id) is a pure function
// of (seed, id, k), so replays and parallel schedules cannot change results.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : key_(mix64(mix64(master_seed ^ 0x6a09e667f3bcc909ull) ^ stream_id)) {}

  // Substream for one (trial, role) pair of an experiment.
  static RngStream substream(std::uint64_t master_seed, std::uint64_t trial,
                             std::uint64_t role) {
    std::uint64_t id = mix64(trial ^ mix64(role ^ 0xbb67ae8584caa73bull));
    return RngStream(master_seed, id);
  }

  std::uint64_t next_u64() {
    ++counter_;
    return mix64(key_ ^ mix64(counter_ * 0x9e3779b97f4a7c15ull));
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t master_key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace isolab
