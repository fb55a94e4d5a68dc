#include "rspath/markov.hpp"

#include <algorithm>
#include <cmath>

#include "rspath/transform.hpp"

namespace rspath {

namespace {

Partition partition_of(const State& s) { return Partition(std::vector<int>(s.begin(), s.end())); }

State weyl_of(const Partition& lambda, int k) { return lambda.reversed(k); }

Rational monomial_of(const RationalPoint& p, const State& y) {
  return monomial<Rational>(std::span<const Rational>(p), std::span<const int>(y));
}

std::shared_ptr<SchurTable> schur_table(const RationalPoint& p) {
  require_positive_distribution(p);
  return std::make_shared<SchurTable>(p);
}

RationalMatrix block(const LazyMatrix& m, const std::vector<State>& rows, const std::vector<State>& cols) {
  std::map<State, Eigen::Index> col_index;
  for (std::size_t j = 0; j < cols.size(); ++j) col_index.emplace(cols[j], static_cast<Eigen::Index>(j));
  RationalMatrix out = RationalMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& t : m.row(rows[i])) {
      auto it = col_index.find(t.to);
      if (it == col_index.end()) throw DomainError("row leaves the truncated state space: " + state_to_string(t.to));
      out(static_cast<Eigen::Index>(i), it->second) += t.probability;
    }
  }
  return out;
}

RationalMatrix identity_block(const std::vector<State>& rows, const std::vector<State>& cols) {
  RationalMatrix out = RationalMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto it = std::find(cols.begin(), cols.end(), rows[i]);
    if (it != cols.end()) out(static_cast<Eigen::Index>(i), it - cols.begin()) = 1;
  }
  return out;
}

// First mismatching entry, recorded into the report.
void compare_blocks(const RationalMatrix& lhs, const RationalMatrix& rhs, const std::vector<State>& rows,
                    const std::vector<State>& cols, IntertwiningReport& report) {
  for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
    for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
      ++report.entries_checked;
      if (lhs(i, j) != rhs(i, j) && report.passed) {
        report.passed = false;
        report.witness = std::make_pair(rows[i], cols[j]);
        report.lhs = lhs(i, j);
        report.rhs = rhs(i, j);
      }
    }
  }
}

std::vector<State> states_up_to(StateSpace space, int k, int n) {
  std::vector<State> out;
  for (int s = 0; s <= n; ++s) {
    auto part = states_of_size(space, k, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

std::string to_string(StateSpace space) {
  switch (space) {
    case StateSpace::Lattice: return "lattice";
    case StateSpace::Weyl: return "weyl";
    case StateSpace::Partitions: return "partitions";
  }
  return "?";
}

std::string state_to_string(const State& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

bool in_space(StateSpace space, const State& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) return false;
    if (i == 0) continue;
    if (space == StateSpace::Weyl && s[i - 1] > s[i]) return false;
    if (space == StateSpace::Partitions && s[i - 1] < s[i]) return false;
  }
  return true;
}

std::vector<State> states_of_size(StateSpace space, int k, int n) {
  if (space == StateSpace::Lattice) return compositions_of(n, k);
  std::vector<State> out;
  for (const auto& lambda : partitions_of(n, k)) {
    out.push_back(space == StateSpace::Partitions ? lambda.padded(k) : weyl_of(lambda, k));
  }
  return out;
}

LazyMatrix::LazyMatrix(StateSpace from, StateSpace to, int k, Rule rule)
    : from_(from), to_(to), k_(k), rule_(std::move(rule)), cache_(std::make_shared<Cache>()) {}

const Row& LazyMatrix::row(const State& x) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->rows.find(x); it != cache_->rows.end()) return it->second;
  }
  if (static_cast<int>(x.size()) != k_ || !in_space(from_, x)) {
    throw DomainError("state " + state_to_string(x) + " is not in the " + to_string(from_) + " space");
  }
  Row r = rule_(x);
  std::lock_guard lock(cache_->mutex);
  return cache_->rows.emplace(x, std::move(r)).first->second;
}

Rational LazyMatrix::operator()(const State& x, const State& y) const {
  for (const auto& t : row(x)) {
    if (t.to == y) return t.probability;
  }
  return 0;
}

TransitionMatrix walk_matrix(const RationalPoint& p) {
  require_positive_distribution(p);
  const int k = static_cast<int>(p.size());
  return TransitionMatrix(StateSpace::Lattice, StateSpace::Lattice, k, [p, k](const State& x) {
    Row r;
    for (int i = 0; i < k; ++i) {
      State y = x;
      ++y[i];
      r.push_back({std::move(y), p[i]});
    }
    return r;
  });
}

TransitionMatrix conditioned_matrix(const RationalPoint& p) {
  auto s = schur_table(p);
  const int k = static_cast<int>(p.size());
  return TransitionMatrix(StateSpace::Weyl, StateSpace::Weyl, k, [s, k](const State& x) {
    const Rational base = (*s)(Partition::from_weyl(std::vector<Value>(x.begin(), x.end())));
    Row r;
    for (int i = 0; i < k; ++i) {
      State y = x;
      ++y[i];
      if (!in_space(StateSpace::Weyl, y)) continue;
      r.push_back({y, (*s)(Partition::from_weyl(std::vector<Value>(y.begin(), y.end()))) / base});
    }
    return r;
  });
}

TransitionMatrix shape_matrix(const RationalPoint& p) {
  auto s = schur_table(p);
  const int k = static_cast<int>(p.size());
  return TransitionMatrix(StateSpace::Partitions, StateSpace::Partitions, k, [s, k](const State& x) {
    const Rational base = (*s)(partition_of(x));
    Row r;
    for (int i = 0; i < k; ++i) {
      State y = x;
      ++y[i];
      if (!in_space(StateSpace::Partitions, y)) continue;
      r.push_back({y, (*s)(partition_of(y)) / base});
    }
    return r;
  });
}

Kernel kernel_K(const RationalPoint& p) {
  auto s = schur_table(p);
  const int k = static_cast<int>(p.size());
  return Kernel(StateSpace::Partitions, StateSpace::Lattice, k, [s, p, k](const State& x) {
    const Partition lambda = partition_of(x);
    const Rational base = (*s)(lambda);
    Row r;
    for (auto& y : compositions_of(lambda.size(), k)) {
      Integer kappa = kostka(lambda, y);
      if (kappa == 0) continue;
      Rational value = monomial_of(p, y) * Rational(kappa) / base;
      r.push_back({std::move(y), value});
    }
    return r;
  });
}

Kernel kernel_J(const RationalPoint& p) {
  auto inner = std::make_shared<Kernel>(kernel_K(p));
  const int k = static_cast<int>(p.size());
  return Kernel(StateSpace::Weyl, StateSpace::Lattice, k, [inner](const State& x) {
    State star(x.rbegin(), x.rend());
    return inner->row(star);
  });
}

IntertwiningReport check_intertwining(const std::string& relation, const TransitionMatrix& left,
                                      const Kernel& kernel, const TransitionMatrix& right, int max_size) {
  IntertwiningReport report;
  report.relation = relation;
  report.max_size = max_size;
  const int k = left.k();
  for (int s = 0; s <= max_size; ++s) {
    const auto rows = states_of_size(left.from(), k, s);
    const auto mids = states_of_size(left.from(), k, s + 1);
    const auto cols = states_of_size(StateSpace::Lattice, k, s);
    const auto next_cols = states_of_size(StateSpace::Lattice, k, s + 1);
    RationalMatrix lhs = block(left, rows, mids) * block(kernel, mids, next_cols);
    RationalMatrix rhs = block(kernel, rows, cols) * block(right, cols, next_cols);
    compare_blocks(lhs, rhs, rows, next_cols, report);
  }
  return report;
}

std::vector<IntertwiningReport> verify_intertwining(const RationalPoint& p, int max_size) {
  const int k = static_cast<int>(p.size());
  const auto P = walk_matrix(p);
  const auto Phat = conditioned_matrix(p);
  const auto J = kernel_J(p);
  std::vector<IntertwiningReport> reports;
  reports.push_back(check_intertwining("QK=KP", shape_matrix(p), kernel_K(p), P, max_size));
  reports.push_back(check_intertwining("PhatJ=JP", Phat, J, P, max_size));

  IntertwiningReport gen;
  gen.relation = "(Phat-I)J=J(P-I)";
  gen.max_size = max_size;
  const auto rows = states_up_to(StateSpace::Weyl, k, max_size);
  const auto mids = states_up_to(StateSpace::Weyl, k, max_size + 1);
  const auto cols = states_up_to(StateSpace::Lattice, k, max_size);
  const auto next_cols = states_up_to(StateSpace::Lattice, k, max_size + 1);
  RationalMatrix lhs = (block(Phat, rows, mids) - identity_block(rows, mids)) * block(J, mids, next_cols);
  RationalMatrix rhs = block(J, rows, cols) * (block(P, cols, next_cols) - identity_block(cols, next_cols));
  compare_blocks(lhs, rhs, rows, next_cols, gen);
  reports.push_back(std::move(gen));
  return reports;
}

Rational word_probability(const RationalPoint& p, const Word& w) {
  Rational out = 1;
  for (int a : w.letters()) out *= p.at(a - 1);
  return out;
}

void for_each_word(int k, int n, const std::function<void(const Word&)>& visit) {
  std::vector<int> letters(n, 1);
  while (true) {
    visit(Word(letters, k));
    int i = n - 1;
    while (i >= 0 && letters[i] == k) letters[i--] = 1;
    if (i < 0) return;
    ++letters[i];
  }
}

ShapeDistribution exact_shape_dist(const RationalPoint& p, int n) {
  require_positive_distribution(p);
  const int k = static_cast<int>(p.size());
  ShapeDistribution out;
  for (const auto& lambda : partitions_of(n, k)) out.formula[lambda] = schur(lambda, p) * Rational(num_standard(lambda));

  const auto Q = shape_matrix(p);
  std::map<State, Rational> mass{{State(k, 0), Rational(1)}};
  for (int step = 0; step < n; ++step) {
    std::map<State, Rational> next;
    for (const auto& [x, m] : mass) {
      for (const auto& t : Q.row(x)) next[t.to] += m * t.probability;
    }
    mass = std::move(next);
  }
  for (const auto& [x, m] : mass) out.pushforward[partition_of(x)] += m;

  for_each_word(k, n, [&](const Word& w) {
    out.enumeration[rs(w, InsertionMode::Column).p.shape()] += word_probability(p, w);
  });
  return out;
}

ChainLaw exact_joint_shape_path(const RationalPoint& p, const std::vector<Partition>& chain) {
  require_positive_distribution(p);
  if (!is_growth_chain(chain)) throw DomainError("not a one-box growth chain");
  const int k = static_cast<int>(p.size());
  const int n = static_cast<int>(chain.size());
  ChainLaw law;
  for_each_word(k, n, [&](const Word& w) {
    if (recording_shapes(rs(w, InsertionMode::Column).q) == chain) law.enumeration += word_probability(p, w);
  });
  if (n == 0) {
    law.formula = law.q_product = 1;
    return law;
  }
  const bool fits = chain.back().length() <= k;
  law.formula = fits ? schur(chain.back(), p) : Rational(0);
  law.q_product = fits ? Rational(1) : Rational(0);
  if (fits) {
    const auto Q = shape_matrix(p);
    State x(k, 0);
    for (const auto& shape : chain) {
      State y = shape.padded(k);
      law.q_product *= Q(x, y);
      x = std::move(y);
    }
  }
  return law;
}

ConditionalLaw conditional_given_shapes(const RationalPoint& p, const std::vector<Partition>& chain,
                                        std::span<const int> y) {
  require_positive_distribution(p);
  if (!is_growth_chain(chain) || chain.empty()) throw DomainError("not a one-box growth chain");
  const int k = static_cast<int>(p.size());
  if (static_cast<int>(y.size()) != k) throw DomainError("weight has wrong dimension");
  Rational total = 0, hit = 0;
  const std::vector<int> target(y.begin(), y.end());
  for_each_word(k, static_cast<int>(chain.size()), [&](const Word& w) {
    auto result = rs(w, InsertionMode::Column);
    if (recording_shapes(result.q) != chain) return;
    Rational pw = word_probability(p, w);
    total += pw;
    if (result.p.weight(k) == target) hit += pw;
  });
  if (total == 0) throw DomainError("shape chain has probability zero");
  return {hit / total, kernel_K(p)(chain.back().padded(k), target)};
}

Word sample_walk(const RationalPoint& p, std::size_t n, Rng& rng) {
  LetterSampler sampler(p);
  std::vector<int> letters(n);
  for (auto& a : letters) a = sampler(rng);
  return Word(std::move(letters), sampler.k());
}

MultiPath sample_g(const RationalPoint& p, std::size_t n, Rng& rng) {
  return gmap(word_to_walk(sample_walk(p, n, rng)));
}

std::vector<Value> sample_g_endpoint(const LetterSampler& sampler, std::size_t n, Rng& rng) {
  TandemCascade cascade(sampler.k());
  for (std::size_t i = 0; i < n; ++i) cascade.push(sampler(rng));
  return cascade.g();
}

SurvivalReport survival_ratio_check(const RationalPoint& p, const State& x, const State& x_prime,
                                    std::size_t horizon, std::size_t paths, std::uint64_t seed) {
  require_positive_distribution(p);
  const int k = static_cast<int>(p.size());
  for (int i = 1; i < k; ++i) {
    if (!(p[i - 1] < p[i])) throw DomainError("survival check needs p_1 < ... < p_k");
  }
  if (!in_space(StateSpace::Weyl, x) || !in_space(StateSpace::Weyl, x_prime) ||
      static_cast<int>(x.size()) != k || static_cast<int>(x_prime.size()) != k) {
    throw DomainError("start points must lie in the Weyl chamber");
  }
  if (paths == 0) throw DomainError("need at least one path");
  const LetterSampler sampler(p);

  auto survival = [&](const State& start, std::uint64_t stream) {
    Rng rng(seed, stream);
    std::size_t survived = 0;
    std::vector<long> gap(k > 1 ? k - 1 : 0);
    for (std::size_t path = 0; path < paths; ++path) {
      for (int i = 0; i + 1 < k; ++i) gap[i] = start[i + 1] - start[i];
      bool alive = true;
      for (std::size_t n = 0; n < horizon && alive; ++n) {
        // once every gap exceeds the remaining steps the path cannot exit
        const long remaining = static_cast<long>(horizon - n);
        if (k == 1 || *std::min_element(gap.begin(), gap.end()) >= remaining) break;
        const int a = sampler(rng);
        if (a >= 2) ++gap[a - 2];
        if (a <= k - 1 && --gap[a - 1] < 0) alive = false;
      }
      survived += alive ? 1 : 0;
    }
    return static_cast<double>(survived) / static_cast<double>(paths);
  };

  SurvivalReport r;
  r.x = x;
  r.x_prime = x_prime;
  r.horizon = horizon;
  r.paths = paths;
  r.survival_x = survival(x, 1);
  r.survival_x_prime = survival(x_prime, 2);
  const std::vector<Value> xv(x.begin(), x.end()), xpv(x_prime.begin(), x_prime.end());
  r.target = to_double(harmonic_h(p, p, xv) / harmonic_h(p, p, xpv));
  if (r.survival_x_prime > 0) {
    const double n = static_cast<double>(paths);
    const double a = r.survival_x, b = r.survival_x_prime;
    r.ratio = a / b;
    const double rel_a = a > 0 ? (1 - a) / (n * a) : 0;
    const double rel_b = (1 - b) / (n * b);
    r.stderr_ratio = r.ratio * std::sqrt(rel_a + rel_b);
    r.passed = std::abs(r.ratio - r.target) <= 3 * r.stderr_ratio;
  }
  return r;
}

std::map<Partition, Rational> phi_q(const RationalPoint& p, const RationalPoint& q, int n) {
  require_positive_distribution(p);
  const int k = static_cast<int>(p.size());
  if (static_cast<int>(q.size()) != k) throw DomainError("q has wrong dimension");
  // dominance-decreasing order makes the Kostka matrix unit upper triangular
  const auto shapes = partitions_of(n, k);
  const auto m = static_cast<Eigen::Index>(shapes.size());
  RationalMatrix kappa(m, m);
  RationalVector rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const State z = shapes[i].padded(k);
    rhs(i) = monomial_of(q, z) * schur(shapes[i], p);
    for (Eigen::Index j = 0; j < m; ++j) {
      kappa(i, j) = Rational(kostka(shapes[i], shapes[j].padded(k)));
    }
  }
  RationalVector w = kappa.triangularView<Eigen::UnitUpper>().solve(rhs);
  std::map<Partition, Rational> out;
  for (Eigen::Index i = 0; i < m; ++i) out[shapes[i]] = w(i) / monomial_of(p, shapes[i].padded(k));
  return out;
}

std::map<Partition, Rational> k_phi_q(const RationalPoint& p, const RationalPoint& q, int n) {
  const int k = static_cast<int>(p.size());
  const auto phi = phi_q(p, q, n);
  const auto K = kernel_K(p);
  std::map<Partition, Rational> out;
  for (const auto& lambda : partitions_of(n, k)) {
    Rational sum = 0;
    for (const auto& t : K.row(lambda.padded(k))) {
      if (!in_space(StateSpace::Partitions, t.to)) continue;
      sum += t.probability * phi.at(partition_of(t.to));
    }
    out[lambda] = sum;
  }
  return out;
}

}  // namespace rspath
