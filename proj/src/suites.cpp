#include "rspath/suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rspath/continuous.hpp"
#include "rspath/markov.hpp"
#include "rspath/rng.hpp"
#include "rspath/tableaux.hpp"
#include "rspath/transform.hpp"

namespace rspath {

void SuiteResult::check(bool ok, const std::function<std::string()>& describe) {
  ++cases;
  if (ok) return;
  ++failures;
  if (witnesses.size() < 5) witnesses.push_back(describe());
}

std::vector<RationalPoint> default_distributions(int k) {
  switch (k) {
    case 1:
      return {{Rational(1)}};
    case 2:
      return {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(2, 3)}, {Rational(2, 3), Rational(1, 3)}};
    case 3:
      return {{Rational(1, 6), Rational(1, 3), Rational(1, 2)}, {Rational(1, 2), Rational(1, 3), Rational(1, 6)}};
    default: {
      RationalPoint uniform(k, Rational(1, k));
      RationalPoint ramp;
      const int total = k * (k + 1) / 2;
      for (int i = 1; i <= k; ++i) ramp.emplace_back(i, total);
      return {uniform, ramp};
    }
  }
}

namespace {

std::string point_to_string(const RationalPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + to_wire(p[i]);
  return out + ")";
}

std::string values_to_string(const std::vector<Value>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// Every sequence of length n over {lo, ..., hi}.
void for_each_sequence(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> s(n, lo);
  while (true) {
    visit(s);
    int i = n - 1;
    while (i >= 0 && s[i] == hi) s[i--] = lo;
    if (i < 0) return;
    ++s[i];
  }
}

const std::vector<RationalPoint>& distributions_or_default(const SuiteOptions& options,
                                                           std::vector<RationalPoint>& storage) {
  storage = options.distributions.empty() ? default_distributions(options.k) : options.distributions;
  for (const auto& p : storage) {
    if (static_cast<int>(p.size()) != options.k) throw DomainError("drift vector length differs from k");
    require_positive_distribution(p);
  }
  return storage;
}

std::vector<Partition> shape_chain_of(const Word& w, InsertionMode mode) {
  return w.size() == 0 ? std::vector<Partition>{} : recording_shapes(rs(w, mode).q);
}

}  // namespace

SuiteResult suite_theorem31(const SuiteOptions& options) {
  SuiteResult result{"theorem31"};
  for (int k = 1; k <= options.k; ++k) {
    // Words of the maximal length; every shorter word is checked as a prefix.
    for_each_word(k, options.max_n, [&](const Word& w) {
      const MultiPath x = word_to_walk(w);
      const TriangularArray incremental = triangular_incremental(w);
      result.check(incremental == triangular(x), [&] { return "fold and incremental arrays differ for " + w.to_string(); });
      const MultiPath g = gmap(x);
      const std::vector<Partition> shapes = shape_chain_of(w, InsertionMode::Column);
      Tableau p;
      for (std::size_t n = 1; n <= w.size(); ++n) {
        p = column_insert(p, w[n - 1]);
        const Tableau from_array = tableau_from_array(incremental, n);
        const Partition g_shape = Partition::from_weyl(g.at(n));
        const bool ok = from_array == p && p.shape() == g_shape && shapes[n - 1] == g_shape &&
                        g.total(n) == x.total(n) && g.in_weyl_chamber();
        result.check(ok, [&] {
          return "word " + w.to_string() + " n=" + std::to_string(n) + ": array tableau " + from_array.to_string() +
                 ", insertion " + p.to_string() + ", G " + values_to_string(g.at(n));
        });
      }
    });
  }
  return result;
}

SuiteResult suite_greene(const SuiteOptions& options) {
  SuiteResult result{"greene"};
  for (int k = 1; k <= options.k; ++k) {
    for (int n = 0; n <= options.max_n; ++n) {
      for_each_word(k, n, [&](const Word& w) {
        const MultiPath x = word_to_walk(w);
        const MultiPath g = gmap(x);
        const Partition shape = rs(w, InsertionMode::Column).p.shape();
        const std::vector<Value> top = g.at(w.size());
        Value shape_sum = 0, g_sum = 0;
        for (int i = 1; i <= k; ++i) {
          shape_sum += shape[i - 1];
          g_sum += top[k - i];
          const int m = greene(w, i);
          result.check(m == shape_sum && m == g_sum, [&] {
            return "word " + w.to_string() + " i=" + std::to_string(i) + ": greene " + std::to_string(m) +
                   ", shape " + std::to_string(shape_sum) + ", G " + std::to_string(g_sum);
          });
        }
        if (n > 0) {
          result.check(sup_fold(x) == g[k - 1], [&] { return "sup fold differs from G_k for " + w.to_string(); });
        }
      });
    }
  }
  return result;
}

SuiteResult suite_lemmas(const SuiteOptions& options) {
  SuiteResult result{"lemmas"};
  const int n = options.max_n;

  // Pairs in Λ_2, padded with services so that every queue empties inside
  // the window and the future representation is exact.
  for_each_sequence(n, 0, 2, [&](const std::vector<int>& letters) {
    std::vector<int> padded = letters;
    padded.insert(padded.end(), letters.size() + 1, 2);
    const MultiPath xy = lambda_walk(padded, 2);
    const Path& x = xy[0];
    const Path& y = xy[1];
    const Path d = inf_conv(x, y);
    const Path t = sup_conv(y, x);
    const Sequence q = queue_length(x, y);
    for (std::size_t m = 0; m <= letters.size(); ++m) {
      const bool ok = d(m) + t(m) == x(m) + y(m) && x(m) - d(m) == q[m] &&
                      future_max_difference(d, t, m).value == q[m];
      result.check(ok, [&] { return "pair identity fails at n=" + std::to_string(m); });
    }
  });

  // Triples in Λ_3 of the maximal length; identities are causal so shorter
  // triples are covered as prefixes.
  for_each_sequence(n, 0, 3, [&](const std::vector<int>& letters) {
    const MultiPath abc = lambda_walk(letters, 3);
    const Path &a = abc[0], &b = abc[1], &c = abc[2];
    const bool sup_identity = sup_conv(sup_conv(a, inf_conv(c, b)), sup_conv(b, c)) == sup_conv(sup_conv(a, b), c);
    const bool inf_identity = inf_conv(inf_conv(a, sup_conv(c, b)), inf_conv(b, c)) == inf_conv(inf_conv(a, b), c);
    const MultiPath g = gmap(abc);
    const MultiPath d = dmap(abc);
    const MultiPath t = tmap(abc);
    bool mass = true, xi = true;
    for (std::size_t m = 0; m <= abc.horizon(); ++m) {
      mass = mass && g.total(m) == abc.total(m);
      for (int i = 1; i < 3; ++i) xi = xi && abc[i](m) == d[i](m) - d[i - 1](m) + t[i - 1](m);
    }
    bool coupling = true;
    for (const CouplingStep& step : coupling_trace(a, b, c)) coupling = coupling && step.holds();
    const bool ok = sup_identity && inf_identity && mass && xi && sup_fold(abc) == g[2] && coupling;
    result.check(ok, [&] {
      std::ostringstream out;
      out << "triple from letters ";
      for (int l : letters) out << l;
      out << ": sup " << sup_identity << " inf " << inf_identity << " mass " << mass << " xi " << xi << " coupling "
          << coupling;
      return out.str();
    });
  });

  // Recovery of x(n) from G on certified coordinates.
  const int recovery_length = std::min(n, 8);
  for (int k = 2; k <= std::min(options.k, 3); ++k) {
    for_each_word(k, recovery_length, [&](const Word& w) {
      const MultiPath x = word_to_walk(w);
      const MultiPath g = gmap(x);
      for (std::size_t m = 0; m <= w.size(); ++m) {
        const Recovery r = recover(g, m);
        bool ok = true;
        for (int i = 0; i < k; ++i) ok = ok && (!r.certified[i] || r.values[i] == x[i](m));
        result.check(ok, [&] { return "recovery disagrees for " + w.to_string() + " at n=" + std::to_string(m); });
      }
      result.check(recover(g, 0).all_certified(), [&] { return "time 0 not certified for " + w.to_string(); });
    });
  }
  return result;
}

SuiteResult suite_intertwining(const SuiteOptions& options) {
  SuiteResult result{"intertwining"};
  std::vector<RationalPoint> storage;
  for (const auto& p : distributions_or_default(options, storage)) {
    for (const IntertwiningReport& report : verify_intertwining(p, options.max_n)) {
      result.check(report.passed && report.entries_checked > 0, [&] {
        std::string out = report.relation + " fails for p=" + point_to_string(p);
        if (report.witness) {
          out += " at " + state_to_string(report.witness->first) + " -> " + state_to_string(report.witness->second) +
                 ": " + to_wire(report.lhs) + " vs " + to_wire(report.rhs);
        }
        return out;
      });
    }
  }
  return result;
}

SuiteResult suite_shapechain(const SuiteOptions& options) {
  SuiteResult result{"shapechain"};
  std::vector<RationalPoint> storage;
  const int k = options.k;
  for (const auto& p : distributions_or_default(options, storage)) {
    for (int n = 0; n <= options.max_n; ++n) {
      const ShapeDistribution dist = exact_shape_dist(p, n);
      result.check(dist.consistent(), [&] {
        return "shape law inconsistent for p=" + point_to_string(p) + " n=" + std::to_string(n);
      });
      if (n == 0) continue;
      Rational total = 0;
      for (const Partition& lambda : partitions_of(n, k)) {
        for (const Tableau& q : standard_tableaux(lambda)) {
          const std::vector<Partition> chain = recording_shapes(q);
          const ChainLaw law = exact_joint_shape_path(p, chain);
          total += law.enumeration;
          result.check(law.enumeration == law.formula && law.formula == law.q_product, [&] {
            return "chain law differs for p=" + point_to_string(p) + " Q=" + q.to_string() + ": " +
                   to_wire(law.enumeration) + ", " + to_wire(law.formula) + ", " + to_wire(law.q_product);
          });
        }
      }
      result.check(total == 1, [&] { return "chain laws do not sum to one, n=" + std::to_string(n); });
    }
  }
  return result;
}

SuiteResult suite_theorem11(const SuiteOptions& options) {
  SuiteResult result{"theorem11"};
  std::vector<RationalPoint> storage;
  for (const auto& p : distributions_or_default(options, storage)) {
    const TransitionMatrix phat = conditioned_matrix(p);
    for (int n = 1; n <= options.max_n; ++n) {
      std::map<std::vector<std::vector<Value>>, Rational> law;
      for_each_word(options.k, n, [&](const Word& w) {
        const MultiPath g = gmap(word_to_walk(w));
        std::vector<std::vector<Value>> trajectory;
        for (std::size_t m = 0; m <= w.size(); ++m) trajectory.push_back(g.at(m));
        law[trajectory] += word_probability(p, w);
      });
      Rational total = 0;
      for (const auto& [trajectory, probability] : law) {
        Rational chain = 1;
        for (std::size_t m = 1; m < trajectory.size(); ++m) {
          const State from(trajectory[m - 1].begin(), trajectory[m - 1].end());
          const State to(trajectory[m].begin(), trajectory[m].end());
          chain *= phat(from, to);
        }
        total += chain;
        result.check(chain == probability, [&] {
          return "p=" + point_to_string(p) + " trajectory ending at " + values_to_string(trajectory.back()) + ": " +
                 to_wire(probability) + " vs " + to_wire(chain);
        });
      }
      // With the enumeration summing to one, equal masses on its support leave
      // no conditioned-chain mass elsewhere.
      result.check(total == 1, [&] { return "conditioned chain mass on G support is " + to_wire(total); });
    }
  }
  return result;
}

SuiteResult suite_rowinsert(const SuiteOptions& options) {
  SuiteResult result{"rowinsert"};
  std::vector<RationalPoint> storage;
  for (const auto& p : distributions_or_default(options, storage)) {
    for (int n = 1; n <= options.max_n; ++n) {
      std::map<std::vector<Partition>, Rational> column, row;
      for_each_word(options.k, n, [&](const Word& w) {
        const Rational pw = word_probability(p, w);
        column[shape_chain_of(w, InsertionMode::Column)] += pw;
        row[shape_chain_of(w, InsertionMode::Row)] += pw;
      });
      result.check(column == row, [&] {
        return "row and column shape laws differ for p=" + point_to_string(p) + " n=" + std::to_string(n);
      });
    }
  }
  return result;
}

SuiteResult suite_kernel(const SuiteOptions& options) {
  SuiteResult result{"kernel"};
  std::vector<RationalPoint> storage;
  const int k = options.k;
  Rng rng(options.seed, 7);
  for (const auto& p : distributions_or_default(options, storage)) {
    for (int n = 1; n <= options.max_n; ++n) {
      for (const Partition& lambda : partitions_of(n, k)) {
        for (const Tableau& q : standard_tableaux(lambda)) {
          const std::vector<Partition> chain = recording_shapes(q);
          for (const auto& y : compositions_of(n, k)) {
            const ConditionalLaw law = conditional_given_shapes(p, chain, y);
            result.check(law.enumeration == law.kernel, [&] {
              return "conditional law differs for Q=" + q.to_string() + " y=" + state_to_string(y) + ": " +
                     to_wire(law.enumeration) + " vs " + to_wire(law.kernel);
            });
          }
        }
      }
      // (Kφ_q)(x) = q^x for a random positive q.
      RationalPoint qpoint;
      for (int i = 0; i < k; ++i) qpoint.emplace_back(static_cast<long>(rng.next() % 9 + 1), static_cast<long>(rng.next() % 4 + 1));
      for (const auto& [x, value] : k_phi_q(p, qpoint, n)) {
        const std::vector<int> parts = x.padded(k);
        result.check(value == monomial<Rational>(qpoint, parts), [&] {
          return "K phi_q differs at " + x.to_string() + " for q=" + point_to_string(qpoint);
        });
      }
    }
    // Row sums of every matrix and kernel.
    const std::vector<std::pair<std::string, LazyMatrix>> matrices = {
        {"P", walk_matrix(p)}, {"Phat", conditioned_matrix(p)}, {"Q", shape_matrix(p)},
        {"K", kernel_K(p)},    {"J", kernel_J(p)}};
    for (const auto& [name, matrix] : matrices) {
      for (int n = 0; n <= options.max_n; ++n) {
        for (const State& x : states_of_size(matrix.from(), k, n)) {
          Rational sum = 0;
          for (const Transition& tr : matrix.row(x)) sum += tr.probability;
          result.check(sum == 1, [&] { return name + " row " + state_to_string(x) + " sums to " + to_wire(sum); });
        }
      }
    }
  }
  return result;
}

namespace {

using Exact = Rational;

PiecewiseLinear<Exact> random_component(Rng& rng, const std::vector<Exact>& grid) {
  std::vector<Exact> values{Exact(0)};
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const long numerator = static_cast<long>(rng.next() % 13) - 6;
    const long denominator = static_cast<long>(rng.next() % 4) + 1;
    values.emplace_back(numerator, denominator);
  }
  return PiecewiseLinear<Exact>(grid, std::move(values));
}

std::vector<Exact> random_grid(Rng& rng) {
  const int interior = static_cast<int>(rng.next() % 6) + 1;
  std::vector<long> ticks;
  while (static_cast<int>(ticks.size()) < interior) {
    const long t = static_cast<long>(rng.next() % 59) + 1;
    if (std::find(ticks.begin(), ticks.end(), t) == ticks.end()) ticks.push_back(t);
  }
  std::sort(ticks.begin(), ticks.end());
  std::vector<Exact> grid{Exact(0)};
  for (long t : ticks) grid.emplace_back(t, 60);
  grid.emplace_back(1);
  return grid;
}

// Each coordinate gets its own breakpoints.
PiecewiseLinearPath<Exact> random_path(Rng& rng, int k) {
  std::vector<PiecewiseLinear<Exact>> components;
  for (int i = 0; i < k; ++i) components.push_back(random_component(rng, random_grid(rng)));
  return PiecewiseLinearPath<Exact>(std::move(components));
}

bool same_function(const PiecewiseLinear<Exact>& f, const PiecewiseLinear<Exact>& g) {
  for (const auto& s : merge_breakpoints(f.breakpoints(), g.breakpoints())) {
    if (f(s) != g(s)) return false;
  }
  return true;
}

bool ordered_everywhere(const PiecewiseLinearPath<Exact>& f) {
  for (const auto& s : f.breakpoints()) {
    const auto v = f(s);
    if (!std::is_sorted(v.begin(), v.end())) return false;
  }
  return true;
}

}  // namespace

SuiteResult suite_continuous(const SuiteOptions& options) {
  SuiteResult result{"continuous"};

  // Discrete embedding: interpolate, transform, sample at integer times.
  for (int k = 1; k <= options.k; ++k) {
    for (int n = 1; n <= options.max_n; ++n) {
      for_each_word(k, n, [&](const Word& w) {
        const MultiPath x = word_to_walk(w);
        const PiecewiseLinearPath<Exact> f = interpolate(x);
        bool ok = sample_integer_times(gamma(f)) == gmap(x);
        if (k >= 2) {
          ok = ok && sample_integer_times(PiecewiseLinearPath<Exact>({cinf(f[0], f[1])}))[0] == inf_conv(x[0], x[1]);
          ok = ok && sample_integer_times(PiecewiseLinearPath<Exact>({csup(f[1], f[0])}))[0] == sup_conv(x[1], x[0]);
        }
        result.check(ok, [&] { return "continuous and discrete transforms differ for " + w.to_string(); });
      });
    }
  }

  // (φ, ρ) determines the word.
  const int recovery_length = std::min(options.max_n, 6);
  for (int k = 1; k <= options.k; ++k) {
    for_each_word(k, recovery_length, [&](const Word& w) {
      const MultiPath x = word_to_walk(w);
      const PiecewiseLinearPath<Exact> f = rescale_to_unit(interpolate(x));
      const GelfandCetlinPoint<Exact> phi = gc_phi(f);
      const PiecewiseLinearPath<Exact> rho = gc_rho(f);
      ArrayRows terminal(k);
      for (int j = 1; j <= k; ++j) {
        for (int r = 1; r <= k - j + 1; ++r) {
          terminal[j - 1].push_back(numerator(phi.rows[r + j - 2][r - 1]).convert_to<Value>());
        }
      }
      std::vector<Path> sampled(k);
      std::vector<std::vector<Value>> values(k);
      for (std::size_t m = 0; m <= w.size(); ++m) {
        const auto at = rho(Exact(static_cast<long>(m), static_cast<long>(w.size())));
        for (int i = 0; i < k; ++i) values[i].push_back(numerator(at[i]).convert_to<Value>());
      }
      for (int i = 0; i < k; ++i) sampled[i] = Path(values[i]);
      const auto recovered = recover_path(MultiPath(sampled), terminal);
      result.check(recovered && *recovered == x, [&] { return "(phi, rho) does not recover " + w.to_string(); });
    });
  }

  // Random piecewise-linear paths with exact breakpoints.
  Rng rng(options.seed, 11);
  for (std::size_t s = 0; s < options.samples; ++s) {
    const int k = 2 + static_cast<int>(s % 2);
    const PiecewiseLinearPath<Exact> f = random_path(rng, k);
    bool interlaced = true;
    try {
      gc_phi(f);
    } catch (const std::logic_error&) {
      interlaced = false;
    }
    const PiecewiseLinearPath<Exact> g = gamma(f);
    bool mass = true;
    for (const auto& t : merge_breakpoints(f.breakpoints(), g.breakpoints())) {
      const auto fv = f(t), gv = g(t);
      Exact fs = 0, gs = 0;
      for (int i = 0; i < k; ++i) {
        fs += fv[i];
        gs += gv[i];
      }
      mass = mass && fs == gs;
    }
    const bool top = same_function(g[k - 1], csup_fold(f));
    const bool ordered = ordered_everywhere(g);
    result.check(interlaced && mass && top && ordered, [&] {
      std::ostringstream out;
      out << "random path " << s << ": interlacing " << interlaced << " mass " << mass << " top " << top
          << " ordered " << ordered;
      return out.str();
    });
  }

  // Max-plus integration by parts.
  for (std::size_t s = 0; s < options.samples * 5 / 2; ++s) {
    const auto u = random_component(rng, random_grid(rng));
    const auto v = random_component(rng, random_grid(rng));
    const auto [left, right] = sup_integration_by_parts(u, v);
    result.check(left == right, [&] {
      return "sup-integration by parts fails on sample " + std::to_string(s) + ": " + to_wire(left) + " vs " +
             to_wire(right);
    });
  }
  return result;
}

std::vector<std::string> suite_names() {
  return {"theorem31", "greene", "lemmas", "intertwining", "shapechain", "theorem11", "rowinsert", "kernel",
          "continuous"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.k < 1) throw DomainError("k must be positive");
  if (options.max_n < 0) throw DomainError("size bound must be non-negative");
  static const std::map<std::string, SuiteResult (*)(const SuiteOptions&)> table = {
      {"theorem31", suite_theorem31},       {"greene", suite_greene},         {"lemmas", suite_lemmas},
      {"intertwining", suite_intertwining}, {"shapechain", suite_shapechain}, {"theorem11", suite_theorem11},
      {"rowinsert", suite_rowinsert},       {"kernel", suite_kernel},         {"continuous", suite_continuous}};
  const auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown suite '" + name + "'");
  return it->second(options);
}

}  // namespace rspath
