#include "rspath/rng.hpp"

#include <algorithm>
#include <cmath>

namespace rspath {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::exponential(double rate) { return -std::log1p(-uniform()) / rate; }

Rng Rng::split(std::uint64_t child) const {
  // splitmix64 finaliser over (stream, child) keeps children of different
  // parents apart
  std::uint64_t z = stream_ * 0x9E3779B97F4A7C15ULL + child + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return Rng(seed_, z);
}

LetterSampler::LetterSampler(const RationalPoint& p) {
  require_positive_distribution(p);
  Rational cumulative = 0;
  const Rational two64 = ipow(Rational(2), 64);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    cumulative += p[i];
    Rational scaled = cumulative * two64;
    Integer floor_value = boost::multiprecision::numerator(scaled) /
                          boost::multiprecision::denominator(scaled);
    thresholds_.push_back(floor_value.convert_to<std::uint64_t>());
  }
}

int LetterSampler::operator()(Rng& rng) const {
  const std::uint64_t u = rng.next();
  auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), u);
  return static_cast<int>(it - thresholds_.begin()) + 1;
}

}  // namespace rspath
