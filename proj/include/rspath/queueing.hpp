#pragma once

// Tandem M/M/1 queues: simulation driven by a word or by Poisson clocks, and
// the transient law of the departure counts D(t).
//
// Series j has k - j + 1 stations; station 1 of each series never empties.
// A service at station i moves a customer to station i + 1 when one is
// waiting; services of series j are the letters emitted by series j - 1.

#include <map>
#include <vector>

#include "rspath/lattice_paths.hpp"
#include "rspath/rational.hpp"
#include "rspath/rng.hpp"
#include "rspath/tableaux.hpp"
#include "rspath/transform.hpp"

namespace rspath {

/// Service intensities μ; the embedded letter law is p = μ / |μ|.
class PoissonDrive {
 public:
  explicit PoissonDrive(RationalPoint mu);
  const RationalPoint& mu() const { return mu_; }
  const RationalPoint& p() const { return p_; }
  Rational total() const { return total_; }
  int k() const { return static_cast<int>(mu_.size()); }
  const LetterSampler& sampler() const { return sampler_; }

 private:
  RationalPoint mu_, p_;
  Rational total_;
  LetterSampler sampler_;
};

class TandemState {
 public:
  explicit TandemState(int k);

  /// One service event at station `letter` of the first series.
  void serve(int letter);
  int k() const { return k_; }
  std::size_t events() const { return events_; }
  /// d^(j)_i: departures from station i of series j.
  const ArrayRows& departures() const { return d_; }
  /// q^(j)_i: customers waiting at station i + 1 of series j.
  const ArrayRows& queues() const { return q_; }

 private:
  int k_;
  std::size_t events_ = 0;
  ArrayRows d_, q_;
};

struct TandemSnapshot {
  ArrayRows departures;
  ArrayRows queues;
};

/// States after 0, 1, ..., |w| letters.
std::vector<TandemSnapshot> simulate_word(const Word& w);

struct PoissonSample {
  std::vector<Value> departures;  // D(t) = (D_1, ..., D_k)
  std::vector<Value> queues;      // Q_i = D_i - D_{i+1}
  std::size_t events = 0;
};

/// Superposed exponential clocks up to time t.
PoissonSample simulate_poisson(const PoissonDrive& drive, double t, Rng& rng);

using DepartureVector = std::vector<Value>;

/// Exact law of δ(n) = D(X)(n), via the count of i's in row i of the
/// column-insertion tableau.
std::map<DepartureVector, Rational> depoissonized_dist(const RationalPoint& p, int n);
/// P(δ(n) = d) for n = 0..max_n.
std::vector<Rational> delta_law(const RationalPoint& p, const DepartureVector& d, int max_n);

struct SeriesValue {
  double value = 0;
  double tail_bound = 0;  // rigorous bound on the neglected terms
  std::size_t terms = 0;
};

/// e^{-T} T^{N+1}/(N+1)! / (1 - T/(N+2)), an upper bound for the Poisson
/// tail beyond N (needs N + 2 > T).
double poisson_tail_bound(double T, std::size_t N);

/// P(D(t) = d) = e^{-T} Σ_{n<=N} T^n/n! P(δ(n) = d), T = |μ| t. Throws if the
/// tail bound for N = truncation exceeds the tolerance.
SeriesValue transient_dist(const PoissonDrive& drive, double t, const DepartureVector& d, std::size_t truncation,
                           double tolerance);
/// Same, with the smallest truncation meeting the tolerance.
SeriesValue transient_dist(const PoissonDrive& drive, double t, const DepartureVector& d, double tolerance);

/// k = 2 closed form:
///   e^{-T} Σ_{n>=d1+d2} T^n p1^{d1} p2^{n-d1} (n - 2 d2 + 1) / ((n - d2 + 1)! d2!)
double transient_k2(const PoissonDrive& drive, double t, const DepartureVector& d);

/// k = 2 queue length Q = D1 - D2, as a Bessel series in a = √(p1 p2) T:
///   (p1/p2)^q e^{-T} Σ_{m>=q} (m+1) (p2/p1)^{m/2} I_{m+1}(2a) / a
double queuelen_k2(const PoissonDrive& drive, double t, int q);
/// The series with the factor (p2 T)^m in place of (p2/p1)^{m/2}/a; agrees
/// with queuelen_k2 only when p2 T = a = 1.
double queuelen_k2_as_printed(const PoissonDrive& drive, double t, int q);

/// k = 3, p2 = p3, d a partition:  e^{-p1 T} p^d T^{|d|} f_d / |d|!
/// This is the closed form of e^{-T} p^d Σ_l s_{l/d}(p2, p3) T^{|l|} f_l/|l|!
/// over all partitions l ⊇ d; it is offered as the value of
/// P(D1 = d1, D2 >= d2, D3 = d3).
double transient_k3_special(const PoissonDrive& drive, double t, const DepartureVector& d);
/// P(D1 = d1, D2 >= d2, D3 = d3) by summing transient_dist over D2.
SeriesValue transient_event_k3(const PoissonDrive& drive, double t, const DepartureVector& d, double tolerance);

/// Barnes function G(n) = Π_{i<=n} Γ(i) = Π_{i<n} i!.
Integer barnes_g(int n);
/// f_d / |d|! for d = (m, ..., m) with k parts, by the hook-length formula.
Rational constant_factor_hook(int k, int m);
/// G(k) G(m) / G(k + m).
Rational constant_factor_barnes(int k, int m);
/// G(k + m) / (G(k) G(m)).
Rational constant_factor_as_printed(int k, int m);
/// d = (m, ..., m):  e^{-p1 T} Π p_i^m T^{mk} G(k) G(m) / G(k + m).
double transient_constant(const PoissonDrive& drive, double t, int m);

/// Modified Bessel function of the first kind, ascending series.
double bessel_i(int order, double z);

}  // namespace rspath
