#include "troplift/barvinok.hpp"
#include "troplift/errors.hpp"
#include "troplift/fixtures.hpp"
#include "troplift/oracle.hpp"
#include "troplift/permutation.hpp"
#include "troplift/trop_matrix.hpp"
#include "troplift/tropical.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace troplift;

namespace {

std::set<std::string> perms(const TropDetResult& r) {
  std::set<std::string> out;
  for (const auto& c : r.argmin) out.insert(cycle_notation(c.representative));
  return out;
}

TropMatrix identity3() { return TropMatrix::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

}  // namespace

TEST_CASE("permutations: sign, cycles and notation") {
  const Permutation p = parse_cycle_notation("(12)(34)", 4);
  CHECK(permutation_sign(p) == 1);
  CHECK(permutation_sign(parse_cycle_notation("(1234)", 4)) == -1);
  CHECK(cycle_notation(p) == "(12)(34)");
  CHECK(cycle_notation(identity_permutation(3)) == "id");
  CHECK(permutation_compose(p, permutation_inverse(p)) == identity_permutation(4));
}

TEST_CASE("tropical determinant of the diagonal example") {
  const TropDetResult r = trop_det(diagonal_tie_matrix());
  CHECK(r.min_value == 0);
  CHECK(r.tie);
  CHECK(perms(r) == std::set<std::string>{"(123)", "(132)"});
  for (const auto& c : r.argmin) CHECK(c.sign == 1);
  CHECK(trop_det(identity3()).tie);
}

TEST_CASE("one by one determinant") {
  const TropDetResult r = trop_det(TropMatrix::from_ints({{5}}));
  CHECK(r.min_value == 5);
  CHECK_FALSE(r.tie);
}

TEST_CASE("symmetric determinant merges reoriented cycles") {
  const TropDetResult s = sym_trop_det(identity3().as_symmetric());
  CHECK(s.min_value == 0);
  CHECK_FALSE(s.tie);
  REQUIRE(s.argmin.size() == 1);
  CHECK(s.argmin[0].coefficient == 2);
  CHECK(sym_trop_nonsingular(identity3()));
  CHECK_FALSE(trop_nonsingular(identity3()));

  const TropDetResult e = sym_trop_det(four_cycle_matrix());
  CHECK(e.tie);
  std::set<std::vector<int>> types;
  for (const auto& c : e.argmin) types.insert(c.cycle_type);
  CHECK(e.argmin.size() == 3);
  CHECK(types == std::set<std::vector<int>>{{2, 2}, {4}});
}

TEST_CASE("enumeration bound is enforced") {
  std::mt19937_64 rng(5);
  const TropMatrix a = random_int_matrix(rng, 9, 9, 0, 5);
  CHECK_THROWS_AS(trop_det(a), Error);
  CHECK_NOTHROW(trop_det_hungarian(a));
}

TEST_CASE("enumeration agrees with the assignment solver") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + k % 6;
    const TropMatrix a = random_int_matrix(rng, n, n, -5, 5);
    Permutation best;
    const Rational h = trop_det_hungarian(a, &best);
    const TropDetResult e = trop_det(a);
    CHECK(e.min_value == h);
    Rational sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += a(i, static_cast<std::size_t>(best[i]));
    CHECK(sum == h);
  }
}

TEST_CASE("tropical ranks") {
  CHECK(trop_rank(diagonal_tie_matrix()) == 2);
  CHECK(sym_trop_rank(diagonal_tie_matrix()) == 3);
  CHECK(trop_rank(TropMatrix(4, 4)) == 1);
  CHECK(sym_trop_rank(TropMatrix(4, 4)) == 1);
  const RankWitness w = trop_rank_witness(diagonal_tie_matrix());
  CHECK(w.rows.size() == 2);
  CHECK(trop_nonsingular(diagonal_tie_matrix().submatrix(w.rows, w.cols)));
}

TEST_CASE("min-plus products") {
  const TropMatrix col = TropMatrix::from_ints({{0}, {2}, {3}});
  const TropMatrix p = trop_mat_mul(col, col.transpose());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(p(i, j) == col(i, 0) + col(j, 0));
  }
  const TropMatrix m1 = TropMatrix::from_ints({{0, 2}, {2, 0}, {1, 0}});
  CHECK(trop_mat_mul(m1, m1.transpose()) == three_leaf_symbic_matrix(2, 1));
  const TropMatrix b = TropMatrix::from_ints({{3, 1}, {0, 4}});
  const TropMatrix r = trop_mat_mul(b, TropMatrix(2, 1));
  CHECK(r(0, 0) == 1);
  CHECK(r(1, 0) == 0);
  CHECK_THROWS_AS(trop_mat_mul(b, TropMatrix(3, 1)), Error);
}

TEST_CASE("Barvinok rank two") {
  CHECK_FALSE(barvinok_rank2(diagonal_tie_matrix()).holds);
  const BarvinokResult r = barvinok_rank2(three_leaf_symbic_matrix(2, 1));
  REQUIRE(r.holds);
  CHECK(trop_mat_mul(*r.b, *r.c) == three_leaf_symbic_matrix(2, 1));
  const BarvinokResult s = sym_barvinok_rank2(three_leaf_symbic_matrix(2, 1));
  REQUIRE(s.holds);
  CHECK(trop_mat_mul(*s.b, s.b->transpose()) == three_leaf_symbic_matrix(2, 1));
  CHECK_FALSE(sym_barvinok_rank2(fixed_spine_matrix()).holds);
  CHECK(barvinok_rank2(fixed_spine_matrix()).holds);
}

TEST_CASE("matrix construction rejects bad input") {
  CHECK_THROWS_AS(TropMatrix({{Rational(0), Rational(1)}, {Rational(0)}}), Error);
  CHECK_THROWS_AS(TropMatrix::from_ints({{0, 1}, {2, 0}}, true), Error);
}
