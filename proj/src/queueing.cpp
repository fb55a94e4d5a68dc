#include "rspath/queueing.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace rspath {

namespace {

RationalPoint normalise(const RationalPoint& mu) {
  if (mu.empty()) throw DomainError("need at least one intensity");
  Rational total = 0;
  for (const auto& m : mu) {
    if (m <= 0) throw DomainError("intensities must be positive");
    total += m;
  }
  RationalPoint p;
  for (const auto& m : mu) p.push_back(m / total);
  return p;
}

double effective_time(const PoissonDrive& drive, double t) {
  if (!(t >= 0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
  return to_double(drive.total()) * t;
}

// log(e^{-T} T^n / n!)
double log_poisson_weight(double T, std::size_t n) {
  if (T == 0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return -T + static_cast<double>(n) * std::log(T) - std::lgamma(static_cast<double>(n) + 1);
}

struct ChainState {
  std::vector<int> lambda;
  DepartureVector beta;
  auto operator<=>(const ChainState&) const = default;
};

// Sum of p^τ over semistandard tableaux τ with entries <= k and size <= max_n,
// grouped by (shape, β) where β_i is the number of i's in row i. Built from
// the chain of shapes λ^(i) of the entries <= i: each step adds a horizontal
// strip of i's, and β_i = λ^(i)_i. If fixed is non-empty, β must equal it.
std::map<ChainState, Rational> beta_chains(const RationalPoint& p, int max_n, const DepartureVector& fixed) {
  const int k = static_cast<int>(p.size());
  std::map<ChainState, Rational> states{{ChainState{{}, {}}, Rational(1)}};
  for (int i = 1; i <= k; ++i) {
    std::map<ChainState, Rational> next;
    for (const auto& [state, weight] : states) {
      const auto& lambda = state.lambda;
      const int size = std::accumulate(lambda.begin(), lambda.end(), 0);
      std::vector<int> mu(i, 0);
      std::function<void(int, int)> rec = [&](int j, int added) {
        if (j == i) {
          if (!fixed.empty() && mu[i - 1] != fixed[i - 1]) return;
          ChainState s{mu, state.beta};
          while (!s.lambda.empty() && s.lambda.back() == 0) s.lambda.pop_back();
          s.beta.push_back(mu[i - 1]);
          next[s] += weight * ipow(p[i - 1], added);
          return;
        }
        const int old = j < static_cast<int>(lambda.size()) ? lambda[j] : 0;
        const int cap = j == 0 ? old + (max_n - size - added) : std::min(j - 1 < static_cast<int>(lambda.size()) ? lambda[j - 1] : 0, old + (max_n - size - added));
        for (int v = old; v <= cap; ++v) {
          mu[j] = v;
          rec(j + 1, added + v - old);
        }
      };
      rec(0, 0);
    }
    states = std::move(next);
  }
  return states;
}

}  // namespace

PoissonDrive::PoissonDrive(RationalPoint mu) : mu_(std::move(mu)), p_(normalise(mu_)), sampler_(p_) {
  for (const auto& m : mu_) total_ += m;
}

TandemState::TandemState(int k) : k_(k) {
  if (k < 1) throw DomainError("need at least one station");
  for (int j = 0; j < k; ++j) {
    d_.emplace_back(k - j, 0);
    q_.emplace_back(k - j - 1, 0);
  }
  q_.pop_back();
}

void TandemState::serve(int letter) {
  if (letter < 1 || letter > k_) throw DomainError("station outside 1..k");
  ++events_;
  int i = letter;
  for (int j = 0; j < k_ && i != 0; ++j) {
    const int m = k_ - j;
    const bool waiting = i == 1 || q_[j][i - 2] > 0;
    if (waiting) {
      ++d_[j][i - 1];
      if (i > 1) --q_[j][i - 2];
      if (i < m) ++q_[j][i - 1];
      i = i < m ? i : 0;
    } else {
      i = i - 1;
    }
  }
}

std::vector<TandemSnapshot> simulate_word(const Word& w) {
  TandemState state(w.k());
  std::vector<TandemSnapshot> out{{state.departures(), state.queues()}};
  for (int a : w.letters()) {
    state.serve(a);
    out.push_back({state.departures(), state.queues()});
  }
  return out;
}

PoissonSample simulate_poisson(const PoissonDrive& drive, double t, Rng& rng) {
  const double rate = to_double(drive.total());
  if (!(t >= 0)) throw DomainError("time must be non-negative");
  TandemState state(drive.k());
  double clock = rng.exponential(rate);
  while (clock <= t) {
    state.serve(drive.sampler()(rng));
    clock += rng.exponential(rate);
  }
  PoissonSample s;
  s.departures = state.departures().front();
  s.queues = state.queues().empty() ? std::vector<Value>{} : state.queues().front();
  s.events = state.events();
  return s;
}

std::map<DepartureVector, Rational> depoissonized_dist(const RationalPoint& p, int n) {
  require_positive_distribution(p);
  if (n < 0) throw DomainError("n must be non-negative");
  std::map<DepartureVector, Rational> out;
  for (const auto& [state, weight] : beta_chains(p, n, {})) {
    Partition lambda(state.lambda);
    if (lambda.size() != n) continue;
    out[state.beta] += weight * Rational(num_standard(lambda));
  }
  return out;
}

std::vector<Rational> delta_law(const RationalPoint& p, const DepartureVector& d, int max_n) {
  require_positive_distribution(p);
  if (d.size() != p.size()) throw DomainError("departure vector has wrong dimension");
  std::vector<Rational> out(max_n + 1);
  for (const auto& v : d) {
    if (v < 0) return out;
  }
  for (const auto& [state, weight] : beta_chains(p, max_n, d)) {
    Partition lambda(state.lambda);
    out[lambda.size()] += weight * Rational(num_standard(lambda));
  }
  return out;
}

double poisson_tail_bound(double T, std::size_t N) {
  if (T == 0) return 0;
  const double ratio = T / (static_cast<double>(N) + 2);
  if (ratio >= 1) return std::numeric_limits<double>::infinity();
  return std::exp(log_poisson_weight(T, N + 1)) / (1 - ratio);
}

SeriesValue transient_dist(const PoissonDrive& drive, double t, const DepartureVector& d, std::size_t truncation,
                           double tolerance) {
  const double T = effective_time(drive, t);
  SeriesValue out;
  out.tail_bound = poisson_tail_bound(T, truncation);
  if (!(out.tail_bound <= tolerance)) {
    throw DomainError("truncation " + std::to_string(truncation) + " leaves a tail bound above the tolerance");
  }
  const auto law = delta_law(drive.p(), d, static_cast<int>(truncation));
  for (std::size_t n = 0; n <= truncation; ++n) {
    if (law[n] == 0) continue;
    out.value += std::exp(log_poisson_weight(T, n)) * to_double(law[n]);
  }
  out.terms = truncation + 1;
  return out;
}

SeriesValue transient_dist(const PoissonDrive& drive, double t, const DepartureVector& d, double tolerance) {
  const double T = effective_time(drive, t);
  std::size_t N = 0;
  for (auto v : d) N += static_cast<std::size_t>(std::max<Value>(v, 0));
  while (!(poisson_tail_bound(T, N) <= tolerance)) {
    if (++N > 100000) throw DomainError("no truncation meets the tolerance");
  }
  return transient_dist(drive, t, d, N, tolerance);
}

double transient_k2(const PoissonDrive& drive, double t, const DepartureVector& d) {
  if (drive.k() != 2 || d.size() != 2) throw DomainError("transient_k2 needs k = 2");
  const double T = effective_time(drive, t);
  const Value d1 = d[0], d2 = d[1];
  if (d2 < 0 || d1 < d2) return 0;
  if (T == 0) return d1 == 0 ? 1.0 : 0.0;
  const double lp1 = std::log(to_double(drive.p()[0])), lp2 = std::log(to_double(drive.p()[1]));
  double sum = 0;
  for (Value n = d1 + d2;; ++n) {
    const double log_term = -T + n * std::log(T) + d1 * lp1 + (n - d1) * lp2 +
                            std::log(static_cast<double>(n - 2 * d2 + 1)) - std::lgamma(n - d2 + 2.0) -
                            std::lgamma(d2 + 1.0);
    const double term = std::exp(log_term);
    sum += term;
    if (n > T + 1 && term <= 1e-17 * sum) break;
    if (n > d1 + d2 + 100000) break;
  }
  return sum;
}

double bessel_i(int order, double z) {
  if (order < 0) throw DomainError("order must be non-negative");
  if (!(z >= 0)) throw DomainError("argument must be non-negative");
  if (z == 0) return order == 0 ? 1.0 : 0.0;
  const double half = z / 2;
  double term = std::exp(order * std::log(half) - std::lgamma(order + 1.0));
  double sum = term;
  for (int m = 0; m < 100000; ++m) {
    term *= half * half / ((m + 1.0) * (m + 1.0 + order));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

double queuelen_k2(const PoissonDrive& drive, double t, int q) {
  if (drive.k() != 2) throw DomainError("queuelen_k2 needs k = 2");
  if (q < 0) return 0;
  const double T = effective_time(drive, t);
  if (T == 0) return q == 0 ? 1.0 : 0.0;
  const double p1 = to_double(drive.p()[0]), p2 = to_double(drive.p()[1]);
  const double a = std::sqrt(p1 * p2) * T;
  double sum = 0;
  for (int m = q; m < q + 100000; ++m) {
    const double term = (m + 1) * std::exp(0.5 * m * std::log(p2 / p1)) * bessel_i(m + 1, 2 * a) / a;
    sum += term;
    if (m > 2 * a + q && term <= 1e-17 * sum) break;
  }
  return std::pow(p1 / p2, q) * std::exp(-T) * sum;
}

double queuelen_k2_as_printed(const PoissonDrive& drive, double t, int q) {
  if (drive.k() != 2) throw DomainError("queuelen_k2 needs k = 2");
  if (q < 0) return 0;
  const double T = effective_time(drive, t);
  const double p1 = to_double(drive.p()[0]), p2 = to_double(drive.p()[1]);
  const double a = std::sqrt(p1 * p2) * T;
  double sum = 0;
  for (int m = q; m < q + 100000; ++m) {
    const double term = (m + 1) * std::pow(p2 * T, m) * bessel_i(m + 1, 2 * a);
    sum += term;
    if (m > 2 * a + q && term <= 1e-17 * sum) break;
  }
  return std::pow(p1 / p2, q) * std::exp(-T) * sum;
}

double transient_k3_special(const PoissonDrive& drive, double t, const DepartureVector& d) {
  if (drive.k() != 3 || d.size() != 3) throw DomainError("transient_k3_special needs k = 3");
  if (drive.p()[1] != drive.p()[2]) throw DomainError("transient_k3_special needs mu_2 = mu_3");
  if (d[2] < 0 || d[1] < d[2] || d[0] < d[1]) throw DomainError("d must be a partition");
  const double T = effective_time(drive, t);
  const Partition shape({static_cast<int>(d[0]), static_cast<int>(d[1]), static_cast<int>(d[2])});
  const Rational factor = Rational(num_standard(shape)) / Rational(factorial(shape.size()));
  const std::vector<int> exps(d.begin(), d.end());
  const Rational pd = monomial<Rational>(std::span<const Rational>(drive.p()), std::span<const int>(exps));
  return std::exp(-to_double(drive.p()[0]) * T) * to_double(pd * factor) * std::pow(T, shape.size());
}

SeriesValue transient_event_k3(const PoissonDrive& drive, double t, const DepartureVector& d, double tolerance) {
  if (drive.k() != 3 || d.size() != 3) throw DomainError("transient_event_k3 needs k = 3");
  SeriesValue out;
  const Value lo = std::max(d[1], d[2]);
  if (lo > d[0]) return out;
  const double each = tolerance / static_cast<double>(d[0] - lo + 1);
  for (Value v = lo; v <= d[0]; ++v) {
    SeriesValue part = transient_dist(drive, t, {d[0], v, d[2]}, each);
    out.value += part.value;
    out.tail_bound += part.tail_bound;
    out.terms = std::max(out.terms, part.terms);
  }
  return out;
}

Integer barnes_g(int n) {
  if (n < 0) throw DomainError("Barnes G needs n >= 0");
  Integer g = 1;
  for (int i = 2; i <= n; ++i) g *= factorial(static_cast<unsigned>(i - 1));
  return g;
}

Rational constant_factor_hook(int k, int m) {
  const Partition rect(std::vector<int>(k, m));
  return Rational(num_standard(rect)) / Rational(factorial(static_cast<unsigned>(k * m)));
}

Rational constant_factor_barnes(int k, int m) {
  return Rational(barnes_g(k) * barnes_g(m)) / Rational(barnes_g(k + m));
}

Rational constant_factor_as_printed(int k, int m) {
  return Rational(barnes_g(k + m)) / Rational(barnes_g(k) * barnes_g(m));
}

double transient_constant(const PoissonDrive& drive, double t, int m) {
  const int k = drive.k();
  if (k < 2) throw DomainError("transient_constant needs k >= 2");
  if (m < 0) throw DomainError("m must be non-negative");
  const double T = effective_time(drive, t);
  Rational pm = 1;
  for (const auto& pi : drive.p()) pm *= ipow(pi, m);
  return std::exp(-to_double(drive.p()[0]) * T) * to_double(pm * constant_factor_barnes(k, m)) * std::pow(T, k * m);
}

}  // namespace rspath
