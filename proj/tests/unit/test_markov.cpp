#include "doctest.h"

#include <cmath>

#include "rspath/markov.hpp"

using namespace rspath;

namespace {

Rational r(long a, long b = 1) { return Rational(a, b); }

const RationalPoint kHalf{r(1, 2), r(1, 2)};
const RationalPoint kThird{r(1, 3), r(2, 3)};
const RationalPoint kThree{r(1, 6), r(1, 3), r(1, 2)};

}  // namespace

TEST_SUITE("markov") {
  TEST_CASE("walk matrix") {
    const auto P = walk_matrix(kThird);
    CHECK(P({0, 0}, {1, 0}) == r(1, 3));
    CHECK(P({1, 2}, {1, 3}) == r(2, 3));
    CHECK(P({1, 2}, {2, 3}) == 0);
    CHECK(P.row({4, 1}).size() == 2);
    CHECK_THROWS_AS(walk_matrix(RationalPoint{r(1, 2), r(1, 3)}), DomainError);
  }

  TEST_CASE("conditioned matrix") {
    const auto Phat = conditioned_matrix(kHalf);
    CHECK(Phat({0, 0}, {0, 1}) == 1);
    CHECK(Phat({0, 1}, {0, 2}) == r(3, 4));
    CHECK(Phat({0, 1}, {1, 1}) == r(1, 4));
    CHECK_THROWS_AS(Phat.row({1, 0}), DomainError);
    const auto a = conditioned_matrix(kThird);
    const auto b = conditioned_matrix(RationalPoint{r(2, 3), r(1, 3)});
    for (int n = 0; n <= 6; ++n) {
      for (const State& x : states_of_size(StateSpace::Weyl, 2, n)) {
        for (const Transition& t : a.row(x)) REQUIRE(b(x, t.to) == t.probability);
      }
    }
  }

  TEST_CASE("shape matrix is the conditioned matrix read through reversal") {
    const auto Q = shape_matrix(kHalf);
    CHECK(Q({1, 0}, {2, 0}) == r(3, 4));
    CHECK(Q({1, 0}, {1, 1}) == r(1, 4));
    const auto Q3 = shape_matrix(kThree);
    const auto Phat3 = conditioned_matrix(kThree);
    for (int n = 0; n <= 5; ++n) {
      for (const State& x : states_of_size(StateSpace::Partitions, 3, n)) {
        for (const Transition& t : Q3.row(x)) {
          const State xs(x.rbegin(), x.rend()), ys(t.to.rbegin(), t.to.rend());
          REQUIRE(Phat3(xs, ys) == t.probability);
        }
      }
    }
  }

  TEST_CASE("kernels") {
    const auto K = kernel_K(kHalf);
    CHECK(K({1, 1}, {1, 1}) == 1);
    CHECK(K({1, 0}, {1, 0}) == r(1, 2));
    CHECK(K({2, 0}, {2, 0}) == r(1, 3));
    const auto K3 = kernel_K(kThird);
    Rational sum = 0;
    for (const Transition& t : K3.row({2, 1})) sum += t.probability;
    CHECK(sum == 1);
    const auto J = kernel_J(kThird);
    CHECK(J({1, 2}, {1, 2}) == K3({2, 1}, {1, 2}));
  }

  TEST_CASE("all rows are stochastic") {
    for (const auto& p : {kHalf, kThird, kThree}) {
      const int k = static_cast<int>(p.size());
      for (const LazyMatrix& m : {walk_matrix(p), conditioned_matrix(p), shape_matrix(p), kernel_K(p), kernel_J(p)}) {
        for (int n = 0; n <= (k == 2 ? 8 : 6); ++n) {
          for (const State& x : states_of_size(m.from(), k, n)) {
            Rational s = 0;
            for (const Transition& t : m.row(x)) {
              REQUIRE(t.probability > 0);
              s += t.probability;
            }
            REQUIRE(s == 1);
          }
        }
      }
    }
  }

  TEST_CASE("intertwining relations") {
    for (const auto& report : verify_intertwining(kHalf, 6)) {
      CAPTURE(report.relation);
      CHECK(report.passed);
      CHECK(report.entries_checked > 0);
    }
    for (const auto& report : verify_intertwining(kThree, 5)) CHECK(report.passed);
  }

  TEST_CASE("a perturbed kernel is caught with a witness") {
    const Kernel K = kernel_K(kHalf);
    const Kernel bad(StateSpace::Partitions, StateSpace::Lattice, 2, [K](const State& x) {
      Row row = K.row(x);
      if (x == State{2, 1}) {
        row[0].probability += r(1, 100);
        row[1].probability -= r(1, 100);
      }
      return row;
    });
    const IntertwiningReport report =
        check_intertwining("QK=KP", shape_matrix(kHalf), bad, walk_matrix(kHalf), 4);
    CHECK_FALSE(report.passed);
    REQUIRE(report.witness.has_value());
    CHECK(report.lhs != report.rhs);
  }

  TEST_CASE("shape law") {
    const ShapeDistribution d = exact_shape_dist(kHalf, 2);
    CHECK(d.consistent());
    CHECK(d.formula.at(Partition{2}) == r(3, 4));
    CHECK(d.formula.at(Partition{1, 1}) == r(1, 4));
    CHECK(exact_shape_dist(kHalf, 1).formula.at(Partition{1}) == 1);
    const RationalPoint uniform{r(1, 3), r(1, 3), r(1, 3)};
    const ShapeDistribution d3 = exact_shape_dist(uniform, 3);
    CHECK(d3.consistent());
    Rational total = 0;
    for (const auto& [shape, mass] : d3.enumeration) total += mass;
    CHECK(total == 1);
  }

  TEST_CASE("chain laws") {
    const ChainLaw two = exact_joint_shape_path(kThird, {{1}, {2}});
    CHECK(two.enumeration == schur(Partition{2}, kThird));
    CHECK(two.formula == two.enumeration);
    CHECK(two.q_product == two.enumeration);
    const ChainLaw column = exact_joint_shape_path(kThird, {{1}, {1, 1}});
    CHECK(column.enumeration == schur(Partition{1, 1}, kThird));
    CHECK_THROWS_AS(exact_joint_shape_path(kThird, {{1}, {3}}), DomainError);
  }

  TEST_CASE("conditional law given the shapes") {
    const std::vector<int> y20{2, 0}, y11{1, 1};
    const ConditionalLaw a = conditional_given_shapes(kHalf, {{1}, {2}}, y20);
    CHECK(a.enumeration == r(1, 3));
    CHECK(a.kernel == r(1, 3));
    const ConditionalLaw b = conditional_given_shapes(kHalf, {{1}, {1, 1}}, y11);
    CHECK(b.enumeration == 1);
    CHECK(b.kernel == 1);
  }

  TEST_CASE("determining functions") {
    const RationalPoint q{r(2), r(3)};
    for (const auto& [x, value] : k_phi_q(kThird, q, 3)) {
      const auto parts = x.padded(2);
      REQUIRE(value == monomial<Rational>(q, parts));
    }
    const RationalPoint q3{r(3, 2), r(1, 5), r(7, 3)};
    for (const auto& [x, value] : k_phi_q(kThree, q3, 4)) REQUIRE(value == monomial<Rational>(q3, x.padded(3)));
    const auto phi1 = phi_q(kThird, q, 1);
    CHECK(k_phi_q(kThird, q, 1).at(Partition{1}) == 2);
    CHECK(phi1.size() == 1);
  }

  TEST_CASE("samplers are reproducible") {
    Rng a(99), b(99);
    CHECK(sample_walk(kThird, 20, a) == sample_walk(kThird, 20, b));
    Rng c(5);
    const MultiPath g = sample_g(kThree, 30, c);
    CHECK(g.in_weyl_chamber());
    CHECK(g.total(30) == 30);
  }

  TEST_CASE("empirical law of G matches the conditioned chain") {
    const int n = 4;
    const auto Phat = conditioned_matrix(kThird);
    std::map<State, Rational> exact{{State{0, 0}, Rational(1)}};
    for (int step = 0; step < n; ++step) {
      std::map<State, Rational> next;
      for (const auto& [x, m] : exact) {
        for (const Transition& t : Phat.row(x)) next[t.to] += m * t.probability;
      }
      exact = std::move(next);
    }
    const LetterSampler sampler(kThird);
    Rng rng(2024);
    const std::size_t runs = 200000;
    std::map<State, double> counts;
    for (std::size_t i = 0; i < runs; ++i) {
      const auto g = sample_g_endpoint(sampler, n, rng);
      counts[State(g.begin(), g.end())] += 1.0 / runs;
    }
    double tv = 0;
    for (const auto& [x, m] : exact) tv += std::abs(to_double(m) - counts[x]);
    CHECK(tv / 2 < 0.01);
  }

  TEST_CASE("survival ratio arguments") {
    CHECK_THROWS_AS(survival_ratio_check(RationalPoint{r(3, 4), r(1, 4)}, {0, 0}, {0, 1}, 10, 10, 1), DomainError);
    CHECK_THROWS_AS(survival_ratio_check(RationalPoint{r(1, 4), r(3, 4)}, {1, 0}, {0, 1}, 10, 10, 1), DomainError);
    const SurvivalReport same = survival_ratio_check(RationalPoint{r(1, 4), r(3, 4)}, {0, 1}, {0, 1}, 200, 2000, 3);
    CHECK(same.target == doctest::Approx(1.0));
    const SurvivalReport r2 = survival_ratio_check(RationalPoint{r(1, 4), r(3, 4)}, {0, 0}, {0, 1}, 200, 20000, 3);
    CHECK(r2.target == doctest::Approx(0.75));
    CHECK(std::abs(r2.ratio - r2.target) < 4 * r2.stderr_ratio);
  }
}
