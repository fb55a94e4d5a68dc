#include "doctest.h"

#include "oracles.hpp"
#include "rspath/lattice_paths.hpp"

using namespace rspath;

TEST_SUITE("lattice_paths") {
  TEST_CASE("paths enforce the origin and unit steps") {
    CHECK_NOTHROW(Path({0, 1, 1, 2}));
    CHECK_THROWS_AS(Path({1, 1}), DomainError);
    CHECK_THROWS_AS(Path({0, 2}), DomainError);
    CHECK_THROWS_AS(Path({0, 1, 0}), DomainError);
    const std::vector<int> steps{1, 0, 1};
    CHECK(Path::from_steps(steps).values() == std::vector<Value>{0, 1, 1, 2});
  }

  TEST_CASE("words parse and reject letters outside the alphabet") {
    const Word w = Word::parse("3112322", 3);
    CHECK(w.size() == 7);
    CHECK(w[0] == 3);
    CHECK(w.to_string() == "3112322");
    CHECK(w.reversed().to_string() == "2232113");
    CHECK(w.prefix(3).to_string() == "311");
    CHECK_THROWS_AS(Word::parse("4", 3), DomainError);
    CHECK_THROWS_AS(Word::parse("102", 3), DomainError);
    CHECK_THROWS_AS(Word::parse("1a", 3), DomainError);
  }

  TEST_CASE("walks of words lie in Pi_k and invert") {
    const Word w = Word::parse("3112322", 3);
    const MultiPath x = word_to_walk(w);
    CHECK(x.in_pi());
    CHECK(x.at(7) == std::vector<Value>{2, 3, 2});
    CHECK(x.total(5) == 5);
    CHECK(walk_to_word(x) == w);
    CHECK_FALSE(x.in_weyl_chamber());

    const std::vector<int> idle{1, 0, 2, 0};
    const MultiPath y = lambda_walk(idle, 2);
    CHECK(y.in_lambda());
    CHECK_FALSE(y.in_pi());
  }

  TEST_CASE("inf and sup convolution of 1122") {
    const MultiPath x = word_to_walk(Word::parse("1122", 2));
    CHECK(inf_conv(x[0], x[1]).values() == std::vector<Value>{0, 0, 0, 1, 2});
    CHECK(sup_conv(x[1], x[0]).values() == std::vector<Value>{0, 1, 2, 2, 2});
    CHECK(queue_length(x[0], x[1]) == Sequence{0, 1, 2, 1, 0});
  }

  TEST_CASE("monotone and diagonal cases") {
    const MultiPath x = word_to_walk(Word::parse("1212", 2));
    CHECK(sup_conv(x[0], x[0]) == x[0]);
    CHECK(inf_conv(x[0], x[0]) == x[0]);
    const Path zero = Path::zero(4);
    CHECK(inf_conv(zero, x[1]) == zero);
    CHECK(sup_conv(x[1], zero) == x[1]);
  }

  TEST_CASE("convolutions agree with the quadratic definition on Lambda_2") {
    for (int n = 0; n <= 8; ++n) {
      oracle::sequences(n, 0, 2, [](const std::vector<int>& letters) {
        const MultiPath xy = lambda_walk(letters, 2);
        const auto& x = xy[0].values();
        const auto& y = xy[1].values();
        REQUIRE(inf_conv(xy[0], xy[1]).values() == oracle::inf_conv(x, y));
        REQUIRE(sup_conv(xy[0], xy[1]).values() == oracle::sup_conv(x, y));
        REQUIRE(sup_conv(xy[1], xy[0]).values() == oracle::sup_conv(y, x));
      });
    }
  }

  TEST_CASE("Lindley recursion gives x minus x inf-conv y") {
    oracle::sequences(9, 0, 2, [](const std::vector<int>& letters) {
      const MultiPath xy = lambda_walk(letters, 2);
      const Path d = inf_conv(xy[0], xy[1]);
      REQUIRE(queue_length(xy[0], xy[1]) == subtract(xy[0], d));
    });
  }

  TEST_CASE("the operations are not associative") {
    bool found = false;
    oracle::sequences(6, 0, 3, [&](const std::vector<int>& letters) {
      const MultiPath abc = lambda_walk(letters, 3);
      if (inf_conv(inf_conv(abc[0], abc[1]), abc[2]) != inf_conv(abc[0], inf_conv(abc[1], abc[2]))) found = true;
    });
    CHECK(found);
  }

  TEST_CASE("increments and future window maxima") {
    const MultiPath x = word_to_walk(Word::parse("11222", 2));
    CHECK(increments(x[1], 1, 5) == 3);
    const Path d = inf_conv(x[0], x[1]);
    const Path t = sup_conv(x[1], x[0]);
    const WindowMax m = future_max_difference(d, t, 2);
    CHECK(m.value == 2);
    CHECK(m.argmax == 4);
    CHECK(queue_length(x[0], x[1])[2] == 2);
  }

  TEST_CASE("json round trip") {
    const MultiPath x = word_to_walk(Word::parse("2131", 3));
    CHECK(multipath_from_json(to_json(x)) == x);
    const nlohmann::json j = {{"k", 2}, {"steps", {1, 2, 2}}};
    CHECK(multipath_from_json(j).at(3) == std::vector<Value>{1, 2});
    CHECK(path_from_json(to_json(x[0])) == x[0]);
    CHECK_THROWS(multipath_from_json(nlohmann::json{{"k", 2}, {"steps", {3}}}));
  }
}
