#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "rspath/rational.hpp"

namespace rspath {

/// Seeded 64-bit generator with independent numbered streams.
///
/// Engine: std::mt19937_64 initialised from std::seed_seq{seed_lo, seed_hi,
/// stream_lo, stream_hi}. All derived draws are computed from raw engine
/// output, so a (seed, stream) pair yields the same sequence on every
/// conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Exponential with the given rate.
  double exponential(double rate);
  /// A child generator whose stream is derived from this one's identity.
  Rng split(std::uint64_t child) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/// Samples letters 1..k with probabilities p using 64-bit thresholds.
class LetterSampler {
 public:
  explicit LetterSampler(const RationalPoint& p);
  int operator()(Rng& rng) const;
  int k() const { return static_cast<int>(thresholds_.size()) + 1; }

 private:
  std::vector<std::uint64_t> thresholds_;  // cumulative, last letter implicit
};

}  // namespace rspath
