#pragma once

// Integer lattice paths and the min-plus / max-plus path operations.
//
//   (x ⊲ y)(n) = min_{0<=m<=n} [x(m) + y(n) - y(m)]      inf_conv
//   (x ⊳ y)(n) = max_{0<=m<=n} [x(m) + y(n) - y(m)]      sup_conv
//
// Neither operation is associative; unparenthesised folds are evaluated
// left to right.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "rspath/rational.hpp"

namespace rspath {

using Value = std::int64_t;
/// General integer time series indexed by n = 0..N (no step constraint).
using Sequence = std::vector<Value>;

/// Path in Λ_1: x(0) = 0 and unit-or-zero steps. Stores cumulative values.
class Path {
 public:
  Path() : values_{0} {}
  explicit Path(std::vector<Value> values);

  static Path zero(std::size_t horizon) { return Path(std::vector<Value>(horizon + 1, 0)); }
  /// steps[n-1] in {0,1} is the increment at time n.
  static Path from_steps(std::span<const int> steps);

  std::size_t horizon() const { return values_.size() - 1; }
  Value operator()(std::size_t n) const { return values_[n]; }
  Value at(std::size_t n) const;
  int step(std::size_t n) const { return static_cast<int>(values_[n] - values_[n - 1]); }
  const std::vector<Value>& values() const { return values_; }

  bool operator==(const Path&) const = default;

 private:
  std::vector<Value> values_;
};

/// k paths on a common horizon.
class MultiPath {
 public:
  MultiPath() = default;
  explicit MultiPath(std::vector<Path> components);

  int k() const { return static_cast<int>(components_.size()); }
  std::size_t horizon() const { return components_.empty() ? 0 : components_.front().horizon(); }
  const Path& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Path>& components() const { return components_; }
  std::vector<Value> at(std::size_t n) const;
  /// Sum of coordinates |x(n)|.
  Value total(std::size_t n) const;

  /// Every step moves exactly one coordinate by one.
  bool in_pi() const;
  /// Every step moves at most one coordinate by one.
  bool in_lambda() const;
  /// x_1(n) <= ... <= x_k(n) for every n.
  bool in_weyl_chamber() const;

  /// Restriction to times 0..n.
  MultiPath prefix(std::size_t n) const;

  bool operator==(const MultiPath&) const = default;

 private:
  std::vector<Path> components_;
};

/// Word a_1...a_n over {1..k}.
class Word {
 public:
  Word(std::vector<int> letters, int k);
  /// Parses a digit string such as "3112322".
  static Word parse(std::string_view digits, int k);

  int k() const { return k_; }
  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }
  Word prefix(std::size_t n) const;
  Word reversed() const;
  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
  int k_;
};

/// X_i(n) = |{m <= n : a_m = i}|; the result lies in Π_k.
MultiPath word_to_walk(const Word& w);
/// Like word_to_walk but letter 0 means "no step", giving paths in Λ_k.
MultiPath lambda_walk(std::span<const int> letters, int k);
/// Inverse of word_to_walk for paths in Π_k.
Word walk_to_word(const MultiPath& x);

Path inf_conv(const Path& x, const Path& y);
Path sup_conv(const Path& x, const Path& y);

/// Queue fed by x and served by y, via the Lindley recursion
/// q(n) = max(q(n-1) + Δx(n) - Δy(n), 0).
Sequence queue_length(const Path& x, const Path& y);

/// x(n, l) = x(l) - x(n).
Value increments(const Path& x, std::size_t n, std::size_t l);

struct WindowMax {
  Value value;
  std::size_t argmax;  // first time attaining the maximum
};

/// max over l in [n, N] of [d(n,l) - t(n,l)]; the finite-window form of the
/// future representation of a queue length.
WindowMax future_max_difference(const Path& d, const Path& t, std::size_t n);

Sequence add(const Path& a, const Path& b);
Sequence subtract(const Path& a, const Path& b);

// JSON path formats: {"k": int, "steps": [letters]}, {"k": int, "components": [[ints]]}
// and {"values": [ints]}.
MultiPath multipath_from_json(const nlohmann::json& j);
Path path_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Path& x);
nlohmann::json to_json(const MultiPath& x);

}  // namespace rspath
