#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rspath/markov.hpp"
#include "rspath/tableaux.hpp"

using namespace rspath;
using Rows = std::vector<std::vector<int>>;

TEST_SUITE("tableaux") {
  TEST_CASE("partitions") {
    CHECK(Partition{2, 1} == Partition{2, 1, 0});
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, -1}), DomainError);
    const std::vector<Value> weyl{0, 1, 3};
    CHECK(Partition::from_weyl(weyl) == Partition{3, 1});
    CHECK(Partition{3, 1}.reversed(3) == std::vector<int>{0, 1, 3});
    CHECK(Partition{3, 1}.contains(Partition{2, 1}));
    CHECK_FALSE(Partition{3}.contains(Partition{1, 1}));
    CHECK(partitions_of(5, 5).size() == 7);
    CHECK(partitions_of(6, 2).size() == 4);
    CHECK(partitions_of(4, 4).front() == Partition{4});
  }

  TEST_CASE("worked example tableau sequence") {
    const Word w = Word::parse(fixtures::kWord, 3);
    const TriangularArray array = triangular(word_to_walk(w));
    Tableau p;
    for (std::size_t n = 1; n <= 7; ++n) {
      p = column_insert(p, w[n - 1]);
      CAPTURE(n);
      CHECK(p.rows() == fixtures::kTableaux[n - 1]);
      CHECK(tableau_from_array(array, n) == p);
    }
    const RSResult result = rs(w, InsertionMode::Column);
    CHECK(result.p == p);
    const std::vector<Partition> expected{{1}, {2}, {3}, {3, 1}, {3, 1, 1}, {3, 2, 1}, {4, 2, 1}};
    CHECK(recording_shapes(result.q) == expected);
    CHECK(tableau_from_chain(expected) == result.q);
  }

  TEST_CASE("column and row insertion") {
    CHECK(rs(Word::parse("1122", 2), InsertionMode::Column).p.rows() == std::vector<std::vector<int>>{{1, 1}, {2, 2}});
    CHECK(column_insert(Tableau(Rows{{2}}), 1).rows() == std::vector<std::vector<int>>{{1, 2}});
    CHECK(column_insert(Tableau(Rows{{1}}), 2).rows() == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(row_insert(Tableau(Rows{{2}}), 1).rows() == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(row_insert(Tableau(Rows{{1}}), 1).rows() == std::vector<std::vector<int>>{{1, 1}});
    CHECK_THROWS_AS(column_insert(Tableau(), 0), DomainError);
  }

  TEST_CASE("column insertion of w equals row insertion of the reversed word") {
    for_each_word(3, 6, [](const Word& w) {
      const RSResult col = rs(w, InsertionMode::Column);
      REQUIRE(col.p == rs(w.reversed(), InsertionMode::Row).p);
      REQUIRE(col.p.is_semistandard());
      REQUIRE(col.q.is_standard());
      REQUIRE(col.p.shape() == col.q.shape());
    });
  }

  TEST_CASE("insertion is a bijection onto tableau pairs") {
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> seen;
    for_each_word(3, 5, [&](const Word& w) {
      const RSResult r = rs(w, InsertionMode::Column);
      seen.insert({r.p.rows(), r.q.rows()});
    });
    std::size_t pairs = 0;
    for (const Partition& lambda : partitions_of(5, 3)) {
      pairs += semistandard_tableaux(lambda, 3).size() * standard_tableaux(lambda).size();
    }
    CHECK(seen.size() == 243);
    CHECK(pairs == 243);
  }

  TEST_CASE("arrays and tableaux invert each other") {
    for (const Partition& lambda : partitions_of(6, 3)) {
      for (const Tableau& t : semistandard_tableaux(lambda, 3)) REQUIRE(tableau_from_array(array_from_tableau(t, 3)) == t);
    }
    CHECK_THROWS_AS(tableau_from_array(ArrayRows{{0, 1}, {2}}), DomainError);
  }

  TEST_CASE("standard tableau counts") {
    CHECK(num_standard(Partition{2, 1}) == 2);
    CHECK(num_standard(Partition{4, 2, 1}) == 35);
    CHECK(num_standard(Partition{3, 3}) == 5);
    for (int n = 1; n <= 8; ++n) {
      for (const Partition& lambda : partitions_of(n, n)) {
        REQUIRE(num_standard(lambda) == standard_tableaux(lambda).size());
      }
      for (int d2 = 0; 2 * d2 <= n; ++d2) {
        REQUIRE(num_standard_two_row(n, d2) == num_standard(Partition{n - d2, d2}));
      }
    }
  }

  TEST_CASE("Kostka numbers count tableaux by weight") {
    const std::vector<int> ones{1, 1, 1};
    CHECK(kostka(Partition{2, 1}, ones) == 2);
    const std::vector<int> two_one{2, 1};
    CHECK(kostka(Partition{3}, two_one) == 1);
    CHECK(kostka(Partition{1, 1, 1}, two_one) == 0);
    for (const Partition& lambda : partitions_of(5, 3)) {
      std::map<std::vector<int>, int> counts;
      for (const Tableau& t : semistandard_tableaux(lambda, 3)) ++counts[t.weight(3)];
      for (const auto& mu : compositions_of(5, 3)) REQUIRE(kostka(lambda, mu) == counts[mu]);
    }
  }

  TEST_CASE("Greene numbers match the subset oracle") {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 7; ++n) {
        for_each_word(k, n, [k](const Word& w) {
          const auto m = oracle::greene_numbers(w.letters(), k);
          const Partition shape = rs(w, InsertionMode::Column).p.shape();
          int sum = 0;
          for (int i = 1; i <= k; ++i) {
            sum += shape[i - 1];
            REQUIRE(greene(w, i) == m[i]);
            REQUIRE(sum == m[i]);
          }
        });
      }
    }
  }

  TEST_CASE("growth chains") {
    CHECK(is_growth_chain({{1}, {2}, {2, 1}}));
    CHECK_FALSE(is_growth_chain({{1}, {2, 1}}));
    CHECK_FALSE(is_growth_chain({{2}}));
    for (const Tableau& q : standard_tableaux(Partition{3, 2, 1})) REQUIRE(tableau_from_chain(recording_shapes(q)) == q);
  }

  TEST_CASE("tableau json") {
    const Tableau t(Rows{{1, 1, 2, 3}, {2, 2}, {3}});
    CHECK(to_json(t) == nlohmann::json{{"rows", {{1, 1, 2, 3}, {2, 2}, {3}}}});
    CHECK(tableau_from_json(to_json(t)) == t);
    CHECK_THROWS(tableau_from_json(nlohmann::json{{"rows", {{2, 1}}}}));
  }
}
