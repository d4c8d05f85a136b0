#pragma once

#include <cstdint>
#include <string_view>

namespace genrep {

// Deterministic random stream: xoshiro256++ seeded via splitmix64.
// The integer stream is bit-exact across platforms; floating-point
// derivations (uniform, Box-Muller normal) are deterministic per build.
//
// Seeding: state[0..3] are four consecutive splitmix64 outputs of the seed.
// next_u64 is the reference xoshiro256++ step (rotl(s0+s3,23)+s0).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // [0,1), 53-bit resolution: (next_u64() >> 11) * 2^-53.
  double uniform();
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller; the paired draw is cached.
  double normal();

  // Unbiased integer in [0,n), n >= 1, by rejection.
  int uniform_int(int n);

  // Independent stream derived from this stream's seed and a tag.
  // child("x") is stable: it depends only on the constructor seed, not on
  // how many draws were made.
  Rng child(std::string_view tag) const;

 private:
  std::uint64_t state_[4];
  std::uint64_t seed_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// FNV-1a 64-bit hash of a string, used for deriving child stream seeds.
std::uint64_t fnv1a64(std::string_view s);

}  // namespace genrep
