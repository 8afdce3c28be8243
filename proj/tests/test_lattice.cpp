#include "semidecay/error.hpp"
#include "semidecay/lattice.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace semidecay;

namespace {

WeightVector wv(std::initializer_list<Rational> xs) {
  WeightVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

Rational r(long a, long b = 1) { return Rational(a, b); }

RepWeights sl3_standard() {
  // w1 = (2a1 + a2)/3, w2 = w1 - a1, w3 = w2 - a2
  return make_rep_weights({{wv({r(-1, 3), r(1, 3)}), 1}, {wv({r(2, 3), r(1, 3)}), 1}, {wv({r(-1, 3), r(-2, 3)}), 1}});
}

}  // namespace

TEST_CASE("rational parsing and helpers") {
  CHECK(parse_rational("3/6") == r(1, 2));
  CHECK(parse_rational(" -4 ") == r(-4));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK(semidecay::ceil(r(7, 2)) == 4);
  CHECK(semidecay::ceil(r(-7, 2)) == -3);
  CHECK(semidecay::ceil(r(4)) == 4);
  CHECK(semidecay::pow(r(1, 3), 3) == r(1, 27));
  CHECK(semidecay::pow(r(2), -2) == r(1, 4));
  CHECK(semidecay::pow(r(5), 0) == 1);
}

TEST_CASE("exact rank") {
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m(2, 3);
  m << r(1), r(2), r(3), r(2), r(4), r(6);
  CHECK(exact_rank(m) == 1);
  m(1, 2) = r(7);
  CHECK(exact_rank(m) == 2);
}

TEST_CASE("order_weights on the SL(3) standard weights") {
  const RepWeights w = sl3_standard();
  REQUIRE(w.distinct() == 3);
  CHECK(w.lambda() == wv({r(2, 3), r(1, 3)}));
  CHECK(w.varrho() == wv({r(-1, 3), r(-2, 3)}));
  CHECK(weight_length(w.lambda(), w.entries[0].weight) == 0);
  CHECK(weight_length(w.lambda(), w.entries[1].weight) == 1);
  CHECK(weight_length(w.lambda(), w.entries[2].weight) == 2);
  CHECK(w.entries[1].weight == wv({r(-1, 3), r(1, 3)}));
  CHECK(descent_coefficients(w.lambda(), w.entries[2].weight) == wv({r(1), r(1)}));
}

TEST_CASE("order_weights on short chains") {
  const RepWeights pair = make_rep_weights({{wv({r(-1)}), 1}, {wv({r(1)}), 1}});
  CHECK(pair.lambda() == wv({r(1)}));
  CHECK(weight_length(pair.lambda(), pair.varrho()) == 2);

  const RepWeights adj = make_rep_weights({{wv({r(0)}), 1}, {wv({r(-1)}), 1}, {wv({r(1)}), 1}});
  for (std::size_t i = 0; i < 3; ++i) CHECK(weight_length(adj.lambda(), adj.entries[i].weight) == Rational(i));
}

TEST_CASE("order_weights ties break lexicographically and ignore input order") {
  // lambda = (1,1); (0,1) and (1,0) both have length 1; (0,1) has coefficients (1,0) > (0,1).
  std::vector<WeightEntry> e{{wv({r(1), r(1)}), 1}, {wv({r(0), r(1)}), 1}, {wv({r(1), r(0)}), 2},
                             {wv({r(0), r(0)}), 1}, {wv({r(-1), r(-1)}), 1}};
  const RepWeights ref = make_rep_weights(e);
  CHECK(ref.entries[1].weight == wv({r(1), r(0)}));
  CHECK(ref.entries[2].weight == wv({r(0), r(1)}));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(e.begin(), e.end(), rng);
    const RepWeights w = make_rep_weights(e);
    for (std::size_t i = 0; i < w.distinct(); ++i) {
      CHECK(w.entries[i].weight == ref.entries[i].weight);
      CHECK(w.entries[i].dim == ref.entries[i].dim);
    }
  }
}

TEST_CASE("order_weights merges repeats and rejects malformed sets") {
  const RepWeights w = make_rep_weights({{wv({r(1)}), 1}, {wv({r(1)}), 2}, {wv({r(-1)}), 3}});
  CHECK(w.distinct() == 2);
  CHECK(w.lambda_dim() == 3);

  // (1,0) and (0,1): neither lies below the other.
  try {
    make_rep_weights({{wv({r(1), r(0)}), 1}, {wv({r(0), r(1)}), 1}});
    FAIL("expected MalformedWeightSet");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_weight_set);
  }
  try {
    make_rep_weights({{wv({r(1), r(0)}), 1}, {wv({r(0)}), 1}});
    FAIL("expected RankMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::rank_mismatch);
  }
  CHECK_THROWS_AS(make_rep_weights({}), Error);
  CHECK_THROWS_AS(make_rep_weights({{wv({r(1)}), 0}}), Error);
}

TEST_CASE("middle_weight") {
  const RepWeights adj = make_rep_weights({{wv({r(1)}), 1}, {wv({r(0)}), 1}, {wv({r(-1)}), 1}});
  CHECK(middle_weight(adj) == wv({r(1)}));
  const RepWeights pair = make_rep_weights({{wv({r(1)}), 1}, {wv({r(-1)}), 1}});
  CHECK(middle_weight(pair) == wv({r(1)}));
  const RepWeights four = make_rep_weights(
      {{wv({r(3, 2)}), 1}, {wv({r(1, 2)}), 1}, {wv({r(-1, 2)}), 1}, {wv({r(-3, 2)}), 1}});
  CHECK(middle_weight(four) == wv({r(1, 2)}));
  try {
    middle_weight(sl3_standard());
    FAIL("expected RankMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::rank_mismatch);
  }
}

TEST_CASE("weight_sum") {
  CHECK(is_zero(weight_sum(sl3_standard())));
  const RepWeights single = make_rep_weights({{wv({r(1), r(2)}), 1}});
  CHECK(weight_sum(single) == wv({r(1), r(2)}));
  const RepWeights adj = make_rep_weights({{wv({r(1)}), 1}, {wv({r(0)}), 1}, {wv({r(-1)}), 1}});
  CHECK(is_zero(weight_sum(adj)));
  const RepWeights lopsided = make_rep_weights({{wv({r(1)}), 2}, {wv({r(-1)}), 1}});
  CHECK(weight_sum(lopsided) == wv({r(1)}));
}
