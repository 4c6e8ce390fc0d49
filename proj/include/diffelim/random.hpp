#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "diffelim/scalar.hpp"

namespace diffelim {

/// Seeded mt19937_64 stream with sampling routines whose output depends only
/// on the raw 64-bit draws, so replays agree across standard libraries.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, n) by rejection; n >= 1.
  Integer uniform_below(const Integer& n);
  /// Uniform on [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// A fresh seed from the system entropy source, for runs without --seed.
  static std::uint64_t entropy_seed();
  /// Independent child seed for sub-task k (splitmix64 of seed and k).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace diffelim
