#pragma once

// Exact transition matrices and kernels on Z_+^k, the Weyl chamber and the
// cone of partitions, with intertwining checks and the laws of the shape
// process.
//
//   P(x, x + e_i)  = p_i
//   P̂(x, y)        = s_{y*}(p) / s_{x*}(p)          x, y in W
//   Q(x, y)        = s_y(p) / s_x(p)                x, y partitions
//   K(x, y)        = p^y κ_{xy} / s_x(p)
//   J(x, y)        = K(x*, y)

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rspath/lattice_paths.hpp"
#include "rspath/rational.hpp"
#include "rspath/rng.hpp"
#include "rspath/symfunc.hpp"
#include "rspath/tableaux.hpp"

namespace rspath {

/// A lattice point, a Weyl chamber point (x_1 <= ... <= x_k) or a partition
/// padded to k parts, depending on the space it belongs to.
using State = std::vector<int>;

enum class StateSpace { Lattice, Weyl, Partitions };

std::string to_string(StateSpace space);
std::string state_to_string(const State& s);
/// States of total size n in the given space.
std::vector<State> states_of_size(StateSpace space, int k, int n);
bool in_space(StateSpace space, const State& s);

struct Transition {
  State to;
  Rational probability;
};
using Row = std::vector<Transition>;

/// Rows are computed on first use and memoised; lookups are thread-safe and
/// returned references stay valid while any copy of the matrix is alive.
/// Copies share the memo table.
class LazyMatrix {
 public:
  using Rule = std::function<Row(const State&)>;

  LazyMatrix(StateSpace from, StateSpace to, int k, Rule rule);

  const Row& row(const State& x) const;
  Rational operator()(const State& x, const State& y) const;
  StateSpace from() const { return from_; }
  StateSpace to() const { return to_; }
  int k() const { return k_; }

 private:
  StateSpace from_, to_;
  int k_;
  Rule rule_;
  struct Cache {
    std::mutex mutex;
    std::map<State, Row> rows;
  };
  std::shared_ptr<Cache> cache_;
};

using TransitionMatrix = LazyMatrix;
using Kernel = LazyMatrix;

TransitionMatrix walk_matrix(const RationalPoint& p);
TransitionMatrix conditioned_matrix(const RationalPoint& p);
TransitionMatrix shape_matrix(const RationalPoint& p);
Kernel kernel_K(const RationalPoint& p);
Kernel kernel_J(const RationalPoint& p);

struct IntertwiningReport {
  std::string relation;
  bool passed = true;
  int max_size = 0;
  std::size_t entries_checked = 0;
  std::optional<std::pair<State, State>> witness;
  Rational lhs, rhs;
};

/// Checks (left · kernel)(x, z) = (kernel · right)(x, z) for every state x of
/// left's space with |x| <= max_size, block by block in the size of x.
IntertwiningReport check_intertwining(const std::string& relation, const TransitionMatrix& left,
                                      const Kernel& kernel, const TransitionMatrix& right, int max_size);

/// QK = KP, P̂J = JP, and the generator form (P̂ - I)J = J(P - I) on the
/// truncated state space.
std::vector<IntertwiningReport> verify_intertwining(const RationalPoint& p, int max_size);

/// Law of the shape after n letters, three ways.
struct ShapeDistribution {
  std::map<Partition, Rational> formula;      // s_λ(p) f_λ
  std::map<Partition, Rational> pushforward;  // Q-chain from the empty shape
  std::map<Partition, Rational> enumeration;  // sum of p^w over words
  bool consistent() const { return formula == pushforward && formula == enumeration; }
};

ShapeDistribution exact_shape_dist(const RationalPoint& p, int n);

/// Probability that the column-insertion shapes of the first n letters are
/// l(1), ..., l(n).
struct ChainLaw {
  Rational enumeration;  // sum of p^w over words with this recording chain
  Rational formula;      // s_{l(n)}(p)
  Rational q_product;    // product of Q steps from the empty shape
};

ChainLaw exact_joint_shape_path(const RationalPoint& p, const std::vector<Partition>& chain);

struct ConditionalLaw {
  Rational enumeration;  // P(X(n) = y | shapes), by enumeration
  Rational kernel;       // K(l(n), y)
};

ConditionalLaw conditional_given_shapes(const RationalPoint& p, const std::vector<Partition>& chain,
                                        std::span<const int> y);

/// p^w for a word.
Rational word_probability(const RationalPoint& p, const Word& w);
/// Calls visit on every word of length n over 1..k in lexicographic order.
void for_each_word(int k, int n, const std::function<void(const Word&)>& visit);

Word sample_walk(const RationalPoint& p, std::size_t n, Rng& rng);
MultiPath sample_g(const RationalPoint& p, std::size_t n, Rng& rng);
/// G(X)(n) only, without storing the trajectory.
std::vector<Value> sample_g_endpoint(const LetterSampler& sampler, std::size_t n, Rng& rng);

struct SurvivalReport {
  State x, x_prime;
  std::size_t horizon = 0, paths = 0;
  double survival_x = 0, survival_x_prime = 0;
  double ratio = 0, stderr_ratio = 0;
  double target = 0;  // h_p(x) / h_p(x')
  bool passed = false;
};

/// Monte Carlo estimate of P_x(stay in W up to horizon) / P_x'(...), compared
/// with p^{-x} s_{x*}(p) / p^{-x'} s_{x'*}(p). Needs p_1 < ... < p_k.
SurvivalReport survival_ratio_check(const RationalPoint& p, const State& x, const State& x_prime,
                                    std::size_t horizon, std::size_t paths, std::uint64_t seed);

/// φ_q(y) = p^{-y} Σ_z κ^{-1}_{yz} q^z s_z(p) on partitions y of n.
std::map<Partition, Rational> phi_q(const RationalPoint& p, const RationalPoint& q, int n);
/// (Kφ_q)(x) for every partition x of n.
std::map<Partition, Rational> k_phi_q(const RationalPoint& p, const RationalPoint& q, int n);

}  // namespace rspath
