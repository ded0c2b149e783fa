#include "troplift/barvinok.hpp"
#include "troplift/errors.hpp"
#include "troplift/fixtures.hpp"
#include "troplift/oracle.hpp"
#include "troplift/trees.hpp"
#include "troplift/tropical.hpp"

#include <doctest.h>

#include <random>

using namespace troplift;

TEST_CASE("brute-force factor search") {
  CHECK_FALSE(brute_barvinok2(diagonal_tie_matrix()).holds);
  const BruteFactorization r1 = brute_barvinok2(TropMatrix::from_ints({{0, 1, 2}, {3, 4, 5}}));
  REQUIRE(r1.holds);
  CHECK(trop_mat_mul(*r1.b, *r1.c) == TropMatrix::from_ints({{0, 1, 2}, {3, 4, 5}}));
  const BruteFactorization s = brute_sym_barvinok2(three_leaf_symbic_matrix());
  REQUIRE(s.holds);
  CHECK(trop_mat_mul(*s.b, s.b->transpose()) == three_leaf_symbic_matrix());
  CHECK_THROWS_AS(brute_barvinok2(TropMatrix(5, 2)), Error);
}

TEST_CASE("tree criterion agrees with the factor search on 3 x 3 samples") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 60; ++k) {
    const TropMatrix a = random_rank2_matrix(rng, 3, 3);
    CHECK(is_caterpillar(tree_from_rank2(a)) == brute_barvinok2(a).holds);
  }
}

TEST_CASE("cocircuit matrix of the affine plane") {
  const TropMatrix a = cocircuit_fixture();
  CHECK(a.rows() == 9);
  CHECK(a.cols() == 12);
  // each line holds three points; each point lies on four lines
  for (std::size_t j = 0; j < 12; ++j) {
    int on = 0;
    for (std::size_t i = 0; i < 9; ++i) on += a(i, j) == 1;
    CHECK(on == 3);
  }
  for (std::size_t i = 0; i < 9; ++i) {
    int on = 0;
    for (std::size_t j = 0; j < 12; ++j) on += a(i, j) == 1;
    CHECK(on == 4);
  }
  CHECK(trop_rank(a) == 3);
}

TEST_CASE("verify suite finds no disagreement") {
  for (std::uint64_t seed : {1u, 2u}) {
    for (const auto& r : run_verify_suite(seed, 4)) {
      INFO(r.subject << " " << r.instance);
      CHECK(r.agree);
    }
  }
}

TEST_CASE("random helpers are deterministic") {
  std::mt19937_64 a(7), b(7);
  CHECK(random_int_matrix(a, 3, 4, -2, 2) == random_int_matrix(b, 3, 4, -2, 2));
  const TropMatrix s = random_symmetric_int_matrix(a, 4, 0, 3);
  CHECK(s.is_symmetric_valued());
  CHECK(trop_rank(random_rank2_matrix(a, 4, 4)) <= 2);
}
