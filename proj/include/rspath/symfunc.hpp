#pragma once

// Exact Schur and skew Schur polynomial evaluation.

#include <map>
#include <mutex>
#include <span>

#include "rspath/rational.hpp"
#include "rspath/tableaux.hpp"

namespace rspath {

/// s_λ(x) as a sum over semistandard tableaux, evaluated by branching on the
/// largest entry. Zero if λ has more parts than x has coordinates.
Rational schur(const Partition& lambda, const RationalPoint& x);

/// det(x_i^{λ_j + k - j}) / det(x_i^{k - j}); needs pairwise distinct x_i.
Rational schur_bialternant(const Partition& lambda, const RationalPoint& x);

/// s_{λ/d}(x); d and λ may have any number of parts.
Rational skew_schur(const Partition& lambda, const Partition& d, const RationalPoint& x);

/// h_r(x) = p^{-x} s_{x*}(r) when x lies in the Weyl chamber, 0 otherwise.
Rational harmonic_h(const RationalPoint& p, const RationalPoint& r, std::span<const Value> x);

/// Memoised s_λ(x) for a fixed point x; safe to share between threads.
class SchurTable {
 public:
  explicit SchurTable(RationalPoint x) : x_(std::move(x)) {}
  Rational operator()(const Partition& lambda) const;
  const RationalPoint& point() const { return x_; }

 private:
  RationalPoint x_;
  mutable std::mutex mutex_;
  mutable std::map<Partition, Rational> cache_;
};

}  // namespace rspath
