#pragma once

#include <cstdint>

namespace discrep {

// splitmix64 step (Steele et al.). Used both as a stream generator and,
// via mixing, to derive independent per-index streams so that sample i
// is a pure function of (seed, i) regardless of evaluation order.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double to_unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Deterministic counter-based stream: the state is derived by mixing the
// seed with the stream index, so streams can be created in any order.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index) {
    state_ = seed;
    (void)splitmix64_next(state_);
    state_ ^= 0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL;
    (void)splitmix64_next(state_);
  }

  std::uint64_t next_u64() { return splitmix64_next(state_); }
  double next_unit() { return to_unit_double(next_u64()); }  // [0, 1)

 private:
  std::uint64_t state_;
};

}  // namespace discrep
