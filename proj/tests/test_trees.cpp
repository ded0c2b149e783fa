#include "troplift/barvinok.hpp"
#include "troplift/errors.hpp"
#include "troplift/fixtures.hpp"
#include "troplift/oracle.hpp"
#include "troplift/trees.hpp"
#include "troplift/tropical.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace troplift;

namespace {

// Subtract row and column offsets so the first row and column are zero.
TropMatrix normalized(const TropMatrix& a) {
  TropMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j) - a(i, 0) - a(0, j) + a(0, 0));
  }
  return out;
}

std::vector<Rational> internal_lengths(const BicoloredTree& t) {
  std::vector<Rational> out;
  for (const auto& e : t.internal_edges()) out.push_back(*e.len);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("the diagonal example gives a three-armed tree") {
  const BicoloredTree t = tree_from_rank2(diagonal_tie_matrix(1, 2, 3)).contracted();
  CHECK(internal_lengths(t) == std::vector<Rational>{1, 2, 3});
  const auto internal = t.internal_vertices();
  CHECK(internal.size() == 4);
  // one vertex meets all three arms
  const auto adj = t.internal_adjacency();
  CHECK(std::count_if(internal.begin(), internal.end(), [&](int v) { return adj[static_cast<std::size_t>(v)].size() == 3; }) == 1);
  CHECK_FALSE(is_caterpillar(t));
  CHECK(tree_to_matrix(t) == normalized(diagonal_tie_matrix(1, 2, 3)));
}

TEST_CASE("a rank-one matrix gives a star") {
  const TropMatrix a = TropMatrix::from_ints({{0, 1, 2}, {3, 4, 5}});
  const BicoloredTree t = tree_from_rank2(a).contracted();
  CHECK(t.internal_vertices().size() == 1);
  CHECK(tree_to_matrix(t) == TropMatrix(2, 3));
  CHECK(is_caterpillar(t));
}

TEST_CASE("higher rank is rejected") {
  CHECK_THROWS_AS(tree_from_rank2(four_cycle_matrix()), Error);
}

TEST_CASE("tree to matrix to tree round trip on random trees") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int d = 2 + static_cast<int>(seed % 4), n = 2 + static_cast<int>((seed / 4) % 4);
    const BicoloredTree t = random_bicolored_tree(seed, d, n);
    const TropMatrix a = tree_to_matrix(t);
    CHECK(trop_rank(a) <= 2);
    const BicoloredTree back = tree_from_rank2(a);
    CHECK(same_metric_tree(back, t));
    CHECK(tree_to_matrix(back) == a);
  }
}

TEST_CASE("caterpillars have Barvinok rank two") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 40; ++k) {
    const TropMatrix a = random_rank2_matrix(rng, 2 + k % 3, 2 + (k / 3) % 3);
    CHECK(is_caterpillar(tree_from_rank2(a)) == brute_barvinok2(a).holds);
  }
}

TEST_CASE("caterpillar spine positions") {
  const Spine s = caterpillar_spine(tree_from_rank2(fixed_spine_matrix()));
  CHECK(s.length == 3);
  CHECK_THROWS_AS(caterpillar_spine(tree_from_rank2(diagonal_tie_matrix())), Error);
}

TEST_CASE("colour swap classification") {
  CHECK(symbic_classify(tree_from_rank2(diagonal_tie_matrix())) == SymbicClass::FixedSetNotPath);

  const SymbicInfo a = symbic_info(tree_from_rank2(three_leaf_symbic_matrix()));
  CHECK(a.cls == SymbicClass::Symbic);
  CHECK(a.one_fixed_point);

  const SymbicInfo spine = symbic_info(tree_from_rank2(fixed_spine_matrix()));
  CHECK(spine.cls == SymbicClass::Symbic);
  CHECK_FALSE(spine.one_fixed_point);
  // every internal vertex on the spine is fixed
  CHECK(spine.fixed_vertices.size() == spine.tree.internal_vertices().size());

  // red 1 and red 3 share a point, blue 1 and blue 3 do not
  const TropMatrix nonsym = TropMatrix::from_ints({{0, 0, 0}, {0, 1, 1}, {0, 0, 0}});
  CHECK(symbic_classify(tree_from_rank2(nonsym)) == SymbicClass::SwapNotAutomorphism);
  // unequal leaf counts: no colour swap at all
  CHECK(symbic_classify(tree_from_rank2(TropMatrix::from_ints({{0, 1, 2}, {0, 0, 0}}))) == SymbicClass::NotSymmetricSwap);
}

TEST_CASE("factored fixtures: one fixed point and symmetric factorization") {
  for (const TropMatrix& f : {one_fixed_point_factor(), one_fixed_point_factor_split()}) {
    const TropMatrix m = trop_mat_mul(f, f.transpose());
    const BicoloredTree t = tree_from_rank2(m);
    CHECK(is_caterpillar(t));
    CHECK(one_fixed_point(t));
    const BarvinokResult s = sym_barvinok_rank2(m);
    REQUIRE(s.holds);
    CHECK(trop_mat_mul(*s.b, s.b->transpose()) == m);
  }
}

TEST_CASE("one fixed point matches the symmetric factor search") {
  std::mt19937_64 rng(23);
  int symmetric_rank2 = 0;
  for (int k = 0; k < 120; ++k) {
    const TropMatrix a = random_symmetric_int_matrix(rng, 2 + k % 3, 0, 3);
    if (trop_rank(a) > 2) continue;
    ++symmetric_rank2;
    CHECK(sym_barvinok_rank2(a).holds == brute_sym_barvinok2(a).holds);
  }
  CHECK(symmetric_rank2 > 20);
}

TEST_CASE("invalid trees are rejected") {
  // a leaf edge with a length and a vertex with no leaves of one colour
  CHECK_THROWS_AS(BicoloredTree(2, {{Color::Red, 0, 1}}, {{0, 1, Rational(1)}}), Error);
}

TEST_CASE("DOT output colours leaves") {
  const std::string dot = tree_from_rank2(diagonal_tie_matrix()).to_dot();
  CHECK(dot.find("red") != std::string::npos);
  CHECK(dot.find("blue") != std::string::npos);
}
