#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rspath/markov.hpp"
#include "rspath/transform.hpp"

using namespace rspath;

namespace {

MultiPath walk(const char* word, int k) { return word_to_walk(Word::parse(word, k)); }

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("worked example arrays and queues") {
    const Word w = Word::parse(fixtures::kWord, 3);
    const TriangularArray direct = triangular(word_to_walk(w));
    const TriangularArray incremental = triangular_incremental(w);
    CHECK(direct == incremental);
    for (std::size_t n = 1; n <= 7; ++n) {
      CAPTURE(n);
      CHECK(direct.at(n) == fixtures::kDepartures[n - 1]);
      CHECK(direct.queues_at(n) == fixtures::kQueues[n - 1]);
    }
  }

  TEST_CASE("D, T and G on small words") {
    const MultiPath x = walk(fixtures::kWord, 3);
    CHECK(dmap(x).at(7) == std::vector<Value>{2, 2, 1});
    CHECK(tmap(x)[0](7) == 3);
    CHECK(gmap(x).at(7) == std::vector<Value>{1, 2, 4});
    CHECK(gmap(walk("111", 3)).at(3) == std::vector<Value>{0, 0, 3});
    CHECK(gmap(walk("12", 2)).at(2) == std::vector<Value>{1, 1});
    CHECK(tmap(walk("12", 2)).at(2) == std::vector<Value>{1});
    CHECK(dmap(walk("1122", 2)).at(4) == std::vector<Value>{2, 2});
    const MultiPath single = walk("111", 1);
    CHECK(dmap(single) == single);
    CHECK(gmap(single) == single);
    CHECK_THROWS_AS(tmap(single), DomainError);
  }

  TEST_CASE("T of a doubled path is the path") {
    const Path p = walk("1211", 2)[0];
    const MultiPath doubled({p, p});
    CHECK(tmap(doubled)[0] == p);
  }

  TEST_CASE("top component is the sup fold") {
    CHECK(sup_fold(walk(fixtures::kWord, 3))(7) == 4);
    CHECK(sup_fold(walk("111", 3))(3) == 3);
    // x_3 ⊳ x_2 ⊳ x_1 for 321 counts the longest weakly decreasing subsequence
    CHECK(sup_fold(walk("321", 3))(3) == 3);
    CHECK(sup_fold(walk("123", 3))(3) == 1);
    for (int n = 1; n <= 7; ++n) {
      for_each_word(3, n, [](const Word& w) {
        const MultiPath x = word_to_walk(w);
        REQUIRE(sup_fold(x) == gmap(x)[2]);
        REQUIRE(sup_fold(x)(w.size()) == oracle::longest_weakly_decreasing(w.letters()));
      });
    }
  }

  TEST_CASE("G conserves mass and lands in the Weyl chamber") {
    for (int k = 1; k <= 4; ++k) {
      for_each_word(k, 7, [](const Word& w) {
        const MultiPath x = word_to_walk(w);
        const MultiPath g = gmap(x);
        REQUIRE(g.in_pi());
        REQUIRE(g.in_weyl_chamber());
        for (std::size_t n = 0; n <= w.size(); ++n) REQUIRE(g.total(n) == x.total(n));
      });
    }
  }

  TEST_CASE("array rows are non-increasing and queues non-negative") {
    for_each_word(3, 7, [](const Word& w) {
      const TriangularArray a = triangular(word_to_walk(w));
      for (std::size_t n = 0; n <= w.size(); ++n) {
        for (const auto& row : a.queues_at(n)) {
          for (Value q : row) REQUIRE(q >= 0);
        }
      }
      REQUIRE(a.g() == gmap(word_to_walk(w)));
    });
  }

  TEST_CASE("cascade letters") {
    TandemCascade cascade(3);
    CHECK(cascade.push(3) == std::vector<int>{3, 2, 1});
    CHECK(cascade.push(1) == std::vector<int>{1, 1, 1});
    CHECK(cascade.time() == 2);
    CHECK(cascade.g() == std::vector<Value>{0, 0, 2});
  }

  TEST_CASE("recovery from G") {
    const MultiPath x = walk("1122", 2);
    const Recovery r = recover(gmap(x), 2);
    CHECK(r.values == std::vector<Value>{2, 0});
    CHECK(r.all_certified());

    const MultiPath y = walk(fixtures::kWord, 3);
    const Recovery r3 = recover(gmap(y), 3);
    // fifteen preimages share this G, so x(3) = (2, 0, 1) is not pinned down
    CHECK(recover_all(gmap(y)).size() == 15);
    CHECK_FALSE(r3.all_certified());
    CHECK(recover(gmap(y), 0).all_certified());
    const auto with_terminal = recover_path(gmap(y), triangular(y).at(7));
    REQUIRE(with_terminal.has_value());
    CHECK(with_terminal->at(3) == std::vector<Value>{2, 0, 1});

    const Recovery reversed = recover_reversed(gmap(y), 5);
    const Recovery forward = recover(gmap(y), 5);
    CHECK(reversed.values == std::vector<Value>(forward.values.rbegin(), forward.values.rend()));
  }

  TEST_CASE("recovery is never silently wrong") {
    bool some_uncertified = false;
    for (int k = 2; k <= 3; ++k) {
      for_each_word(k, 6, [&](const Word& w) {
        const MultiPath x = word_to_walk(w);
        const MultiPath g = gmap(x);
        const auto all = recover_all(g);
        REQUIRE(std::find(all.begin(), all.end(), x) != all.end());
        for (const auto& candidate : all) REQUIRE(gmap(candidate) == g);
        for (std::size_t n = 0; n <= w.size(); ++n) {
          const Recovery r = recover(g, n);
          for (int i = 0; i < k; ++i) {
            if (r.certified[i]) {
              REQUIRE(r.values[i] == x[i](n));
            } else {
              some_uncertified = true;
            }
          }
        }
      });
    }
    CHECK(some_uncertified);
  }

  TEST_CASE("recover_path rejects inconsistent data") {
    const MultiPath x = walk("2112", 2);
    const TriangularArray a = triangular(x);
    CHECK(recover_path(a.g(), a.at(4)) == x);
    // 1112 has the same G, and its terminal array differs only in d^(1)_1
    ArrayRows other = a.at(4);
    other[0][0] += 1;
    CHECK(recover_path(a.g(), other) == walk("1112", 2));
    ArrayRows wrong = a.at(4);
    wrong[0][1] = 5;
    CHECK_FALSE(recover_path(a.g(), wrong).has_value());
    wrong = a.at(4);
    wrong[1][0] += 1;
    CHECK_FALSE(recover_path(a.g(), wrong).has_value());
  }

  TEST_CASE("identities for triples") {
    oracle::sequences(7, 0, 3, [](const std::vector<int>& letters) {
      const MultiPath abc = lambda_walk(letters, 3);
      const Path &a = abc[0], &b = abc[1], &c = abc[2];
      REQUIRE(sup_conv(sup_conv(a, inf_conv(c, b)), sup_conv(b, c)) == sup_conv(sup_conv(a, b), c));
      REQUIRE(inf_conv(inf_conv(a, sup_conv(c, b)), inf_conv(b, c)) == inf_conv(inf_conv(a, b), c));
    });
  }

  TEST_CASE("coupling hypothesis holds step by step") {
    std::map<CouplingCase, int> seen;
    oracle::sequences(7, 0, 3, [&](const std::vector<int>& letters) {
      const MultiPath wxy = lambda_walk(letters, 3);
      for (const CouplingStep& step : coupling_trace(wxy[0], wxy[1], wxy[2])) {
        REQUIRE(step.holds());
        ++seen[step.event];
      }
    });
    CHECK(seen.size() == 5);
    const MultiPath pi = walk("12", 2);
    CHECK_THROWS_AS(coupling_trace(pi[0], pi[1], Path({0, 1, 2})), DomainError);
  }
}
