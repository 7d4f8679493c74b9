#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace flagp {

// Small counter-style generator used throughout the library. Substreams are
// derived by hashing a (seed, tag) pair so that independent components draw
// from independent streams regardless of evaluation order or thread schedule.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  SplitMix64 m(a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2)));
  m();
  return m() ^ b;
}

inline std::uint64_t hash_tag(std::string_view tag) {
  // FNV-1a
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Named substream: substream(seed, "mcmc"), substream(seed, "fit", j), ...
inline std::uint64_t substream(std::uint64_t seed, std::string_view tag) {
  return hash_combine(seed, hash_tag(tag));
}
inline std::uint64_t substream(std::uint64_t seed, std::string_view tag,
                               std::uint64_t k) {
  return hash_combine(substream(seed, tag), k);
}
inline std::uint64_t substream(std::uint64_t seed, std::string_view tag,
                               std::uint64_t k1, std::uint64_t k2) {
  return hash_combine(substream(seed, tag, k1), k2);
}

}  // namespace flagp
