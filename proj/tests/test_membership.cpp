#include "troplift/errors.hpp"
#include "troplift/fixtures.hpp"
#include "troplift/membership.hpp"
#include "troplift/oracle.hpp"
#include "troplift/tropical.hpp"

#include <doctest.h>

#include <random>

using namespace troplift;

namespace {

const FieldMode kModes[] = {FieldMode::C, FieldMode::R, FieldMode::CPlus, FieldMode::RPlus};

std::string criterion(const MembershipVerdict& v) { return v.reason.value("criterion", ""); }

// Zero on the given off-diagonal pairs (1-based), `big` elsewhere.
TropMatrix supported_on(std::size_t n, std::initializer_list<std::pair<int, int>> pairs, long big = 5) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, big));
  for (auto [i, j] : pairs) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
      m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = 0;
  return TropMatrix::from_ints(m, true);
}

}  // namespace

TEST_CASE("mode names") {
  CHECK(parse_mode("C+") == FieldMode::CPlus);
  CHECK(parse_mode("R+") == FieldMode::RPlus);
  CHECK(parse_mode("R") == FieldMode::R);
  CHECK(parse_variety("sym_corank1") == Variety::SymCorank1);
  CHECK_THROWS_AS(parse_mode("Q"), Error);
  CHECK_THROWS_AS(parse_variety("rank3"), Error);
  for (auto m : kModes) CHECK(parse_mode(to_string(m)) == m);
}

TEST_CASE("rank two membership") {
  for (auto m : {FieldMode::C, FieldMode::R}) CHECK(member_rank2(diagonal_tie_matrix(), m).verdict);
  for (auto m : {FieldMode::CPlus, FieldMode::RPlus}) CHECK_FALSE(member_rank2(diagonal_tie_matrix(), m).verdict);
  for (auto m : kModes) {
    CHECK(member_rank2(fixed_spine_matrix(), m).verdict);
    CHECK(member_rank2(TropMatrix(3, 4), m).verdict);
  }
  CHECK_FALSE(member_rank2(four_cycle_matrix(), FieldMode::C).verdict);
}

TEST_CASE("symmetric rank two membership") {
  for (auto m : kModes) CHECK(member_sym_rank2(three_leaf_symbic_matrix(), m).verdict);
  for (auto m : {FieldMode::C, FieldMode::R}) CHECK_FALSE(member_sym_rank2(diagonal_tie_matrix().as_symmetric(), m).verdict);
  for (auto m : {FieldMode::CPlus, FieldMode::RPlus}) CHECK(member_sym_rank2(fixed_spine_matrix(), m).verdict);
}

TEST_CASE("corank one membership") {
  const TropMatrix zero2(2, 2);
  for (auto m : kModes) CHECK(member_corank1(zero2, m).verdict);
  const MembershipVerdict same = member_corank1(diagonal_tie_matrix(), FieldMode::CPlus);
  CHECK_FALSE(same.verdict);
  CHECK(criterion(same) == "SameSigns");
  CHECK(member_corank1(diagonal_tie_matrix(), FieldMode::C).verdict);
  const TropMatrix unique = TropMatrix::from_ints({{0, 5}, {5, 0}});
  for (auto m : kModes) {
    const MembershipVerdict v = member_corank1(unique, m);
    CHECK_FALSE(v.verdict);
    CHECK(criterion(v) == "UniqueMinimum");
  }
}

TEST_CASE("Birkhoff edges with opposite signs") {
  const auto e = find_birkhoff_edge(trop_det(TropMatrix(3, 3)), true);
  REQUIRE(e);
  CHECK(permutation_sign(e->first) != permutation_sign(e->second));
  CHECK_FALSE(find_birkhoff_edge(trop_det(diagonal_tie_matrix()), true));
}

TEST_CASE("symmetric corank one on the four-cycle example") {
  const TropMatrix m = four_cycle_matrix();
  CHECK(member_sym_corank1(m, FieldMode::C).verdict);
  CHECK(member_sym_corank1(m, FieldMode::R).verdict);
  const MembershipVerdict cp = member_sym_corank1(m, FieldMode::CPlus);
  CHECK(cp.verdict);
  const MembershipVerdict rp = member_sym_corank1(m, FieldMode::RPlus);
  CHECK_FALSE(rp.verdict);
  CHECK(criterion(rp) == "MinorSignsOpposed");

  const SymCorank1Analysis an = analyze_sym_corank1(m);
  REQUIRE(an.edges.size() == 1);
  const EdgeAssessment& e = an.edges[0];
  CHECK(e.edge.lattice_length == 2);
  CHECK(e.cycle.size() == 4);
  CHECK(e.c_plus);
  CHECK_FALSE(e.r_plus);
  REQUIRE(e.minor_pairs.size() == 4);
  CHECK_FALSE(e.minor_pairs.front().same_sign);
}

TEST_CASE("a six-cycle midpoint is not positive") {
  const TropMatrix m = supported_on(6, {{1, 2}, {3, 4}, {5, 6}, {2, 3}, {4, 5}, {6, 1}});
  const SymCorank1Analysis an = analyze_sym_corank1(m);
  REQUIRE(an.det.argmin.size() == 3);
  CHECK(member_sym_corank1(m, FieldMode::C).verdict);
  CHECK(member_sym_corank1(m, FieldMode::R).verdict);
  CHECK_FALSE(member_sym_corank1(m, FieldMode::CPlus).verdict);
  CHECK_FALSE(member_sym_corank1(m, FieldMode::RPlus).verdict);
}

TEST_CASE("a lattice-one symmetric tie is really positive") {
  // identity against the transposition (12)
  std::vector<std::vector<long>> w{{0, 0, 5}, {0, 0, 5}, {5, 5, 0}};
  const TropMatrix m = TropMatrix::from_ints(w, true);
  for (auto mode : kModes) CHECK(member_sym_corank1(m, mode).verdict);
  const SymCorank1Analysis an = analyze_sym_corank1(m);
  REQUIRE(an.edges.size() == 1);
  CHECK(an.edges[0].edge.lattice_length == 1);
  CHECK(an.edges[0].r_plus);
}

TEST_CASE("mode monotonicity on random matrices") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = 2 + k % 3;
    const TropMatrix a = random_symmetric_int_matrix(rng, n, 0, 2);
    for (Variety v : {Variety::Rank2, Variety::SymRank2, Variety::Corank1, Variety::SymCorank1}) {
      const bool c = member(v, a, FieldMode::C).verdict;
      const bool r = member(v, a, FieldMode::R).verdict;
      const bool cp = member(v, a, FieldMode::CPlus).verdict;
      const bool rp = member(v, a, FieldMode::RPlus).verdict;
      CHECK((!r || c));
      CHECK((!rp || cp));
      CHECK((!rp || r));
      CHECK((!cp || c));
    }
  }
}

TEST_CASE("principal minors") {
  const TropMatrix p = principal_minor(four_cycle_matrix(), 0);
  CHECK(p.rows() == 3);
  CHECK(p(0, 0) == 2);
  CHECK(p(0, 2) == 2);
}
