#pragma once

// The maps D, T and G on Λ_k, the triangular array d^(i), and recovery of x
// from G.
//
// For x in Λ_k:
//   D_1 = x_1,  D_i = D_{i-1} ⊲ x_i,
//   T_{i-1} = x_i ⊳ D_{i-1}                 (i = 2..k),
//   G(x) = (D_k(x), G(T(x))),  G of a single path is the path itself.
//
// The triangular array is d^(1) = D(x), t^(1) = T(x), d^(i) = D(t^(i-1)),
// t^(i) = T(t^(i-1)); then G = (d^(1)_k, d^(2)_{k-1}, ..., d^(k)_1).

#include <optional>
#include <vector>

#include "rspath/lattice_paths.hpp"

namespace rspath {

MultiPath dmap(const MultiPath& x);
MultiPath tmap(const MultiPath& x);
MultiPath gmap(const MultiPath& x);

/// x_k ⊳ x_{k-1} ⊳ ... ⊳ x_1, folded left to right.
Path sup_fold(const MultiPath& x);

/// Rows indexed from 1 as in d^(1), ..., d^(k).
using ArrayRows = std::vector<std::vector<Value>>;

class TriangularArray {
 public:
  TriangularArray(std::vector<MultiPath> d_rows, std::vector<MultiPath> t_rows);

  int k() const { return static_cast<int>(d_.size()); }
  std::size_t horizon() const { return d_.empty() ? 0 : d_.front().horizon(); }
  /// d^(i), i = 1..k; has k - i + 1 components.
  const MultiPath& d(int i) const { return d_.at(i - 1); }
  /// t^(i), i = 1..k-1; has k - i components.
  const MultiPath& t(int i) const { return t_.at(i - 1); }

  /// [[d^(1)_1(n), ..., d^(1)_k(n)], ..., [d^(k)_1(n)]]
  ArrayRows at(std::size_t n) const;
  /// [[q^(1)_1(n), ..., q^(1)_{k-1}(n)], ..., [q^(k-1)_1(n)]] with
  /// q^(j)_i = d^(j)_i - d^(j)_{i+1}.
  ArrayRows queues_at(std::size_t n) const;
  /// (d^(1)_k, ..., d^(k)_1)
  MultiPath g() const;

  bool operator==(const TriangularArray&) const = default;

 private:
  std::vector<MultiPath> d_;
  std::vector<MultiPath> t_;
};

/// Direct evaluation by the ⊲/⊳ folds.
TriangularArray triangular(const MultiPath& x);

/// Event-driven evaluation: each series of queues is updated one letter at a
/// time and forwards a letter to the next series.
TriangularArray triangular_incremental(const Word& w);

/// Streaming form of the incremental evaluation.
class TandemCascade {
 public:
  explicit TandemCascade(int k);

  /// Feeds one letter; returns the letter received by each series (0 if
  /// none reached it).
  const std::vector<int>& push(int letter);
  int k() const { return k_; }
  std::size_t time() const { return time_; }
  /// d^(j)_i for the current time.
  const ArrayRows& state() const { return d_; }
  /// G at the current time.
  std::vector<Value> g() const;

 private:
  int k_;
  std::size_t time_ = 0;
  ArrayRows d_;
  std::vector<int> fed_;
};

/// Queue contents of an array row set.
ArrayRows queues_of(const ArrayRows& d);

/// Reconstructs x from G and the terminal array d(N) by running the queue
/// relations backwards in time. Returns nullopt if the data is inconsistent
/// (the reconstruction is not a Π_k path starting at the origin whose image
/// under G is g).
std::optional<MultiPath> recover_path(const MultiPath& g, const ArrayRows& terminal);

/// Every x in Π_k with G(x) = g on the window [0, N].
std::vector<MultiPath> recover_all(const MultiPath& g);

struct Recovery {
  std::vector<Value> values;
  /// certified[i]: every path compatible with g on the window has the same
  /// i-th coordinate at time n.
  std::vector<bool> certified;

  bool all_certified() const;
};

/// x(n) in natural coordinates, with a certification flag per coordinate.
Recovery recover(const MultiPath& g, std::size_t n);
/// Same as recover with the coordinate order reversed.
Recovery recover_reversed(const MultiPath& g, std::size_t n);

// Two tandem queue pairs driven by (w, x, y) and (w, x + u, y - u), where
// d = x ⊲ y and u = y - d. Their outputs agree; the step cases below are
// the five exhaustive event types of (w, x, y - u, u) in Λ_4.
enum class CouplingCase { Idle, W, X, D, U };

struct CouplingStep {
  CouplingCase event;
  Value q1, q2, q1_tilde, q2_tilde, q;
  /// (i): q2~ - q2 >= 0 and q - q2 = 0;  (ii): q2~ - q2 = 0 and q - q2 >= 0.
  bool case_i, case_ii;
  bool holds() const { return q1 + q2 == q1_tilde + q2_tilde && (case_i || case_ii); }
};

/// Step-by-step trace of the coupling for (w, x, y) in Λ_3.
std::vector<CouplingStep> coupling_trace(const Path& w, const Path& x, const Path& y);

}  // namespace rspath
