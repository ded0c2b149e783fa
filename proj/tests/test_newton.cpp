#include "troplift/fixtures.hpp"
#include "troplift/newton.hpp"
#include "troplift/oracle.hpp"
#include "troplift/permutation.hpp"
#include "troplift/tropical.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace troplift;

namespace {

std::vector<std::vector<Rational>> points(const std::vector<SignedMonomialClass>& classes) {
  std::vector<std::vector<Rational>> out;
  for (const auto& c : classes) {
    std::vector<Rational> p;
    for (int x : exponent_point(c)) p.emplace_back(x);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("monomial classes of the symmetric determinant") {
  CHECK(sym_det_monomials(1).size() == 1);
  CHECK(sym_det_monomials(3).size() == 5);
  CHECK(sym_det_monomials(4).size() == 17);
  CHECK(polytope_vertices(1).size() == 1);
  CHECK(polytope_vertices(4).size() == 14);
}

TEST_CASE("vertex and edge predicates agree with the exact hull at n = 3 and 4") {
  for (int n : {3, 4}) {
    const auto classes = sym_det_monomials(n);
    const HullResult h = brute_hull(points(classes));
    std::set<std::size_t> fast_v, hull_v(h.vertices.begin(), h.vertices.end());
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (is_polytope_vertex(classes[k])) fast_v.insert(k);
    }
    CHECK(fast_v == hull_v);
    std::set<std::pair<std::size_t, std::size_t>> fast_e, hull_e;
    for (auto [x, y] : h.edges) hull_e.insert({std::min(x, y), std::max(x, y)});
    for (std::size_t x : fast_v) {
      for (std::size_t y : fast_v) {
        if (x < y && is_polytope_edge(classes[x], classes[y])) fast_e.insert({x, y});
      }
    }
    CHECK(fast_e == hull_e);
  }
}

TEST_CASE("lattice length two edges have a class as midpoint") {
  for (int n : {4, 5}) {
    const auto classes = sym_det_monomials(n);
    for (const auto& e : polytope_edges(n)) {
      CHECK((e.lattice_length == 1 || e.lattice_length == 2));
      if (e.lattice_length != 2) continue;
      REQUIRE(e.midpoint);
      CHECK(std::find(classes.begin(), classes.end(), *e.midpoint) != classes.end());
      std::vector<std::vector<int>> mid(e.u.exponent.size(), std::vector<int>(e.u.exponent.size()));
      for (std::size_t r = 0; r < mid.size(); ++r) {
        for (std::size_t c = 0; c < mid.size(); ++c) CHECK(2 * e.midpoint->exponent[r][c] == e.u.exponent[r][c] + e.v.exponent[r][c]);
      }
    }
  }
}

TEST_CASE("semisimple graphs of the worked monomials") {
  const auto rows = worked_monomials();
  REQUIRE(rows.size() == 5);
  auto kinds = [](const SignedMonomialClass& c) {
    std::multiset<ComponentKind> k;
    for (const auto& g : semisimple_graph(c)) k.insert(g.kind);
    return k;
  };
  CHECK(kinds(rows[0]) == std::multiset<ComponentKind>{ComponentKind::OddCycle, ComponentKind::Loop});
  CHECK(kinds(rows[1]) == std::multiset<ComponentKind>{ComponentKind::Loop, ComponentKind::Loop, ComponentKind::Edge});
  CHECK(kinds(rows[2]) == std::multiset<ComponentKind>{ComponentKind::Edge, ComponentKind::Edge});
  CHECK(kinds(rows[3]) == std::multiset<ComponentKind>{ComponentKind::Edge, ComponentKind::Edge});
  CHECK(kinds(rows[4]) == std::multiset<ComponentKind>{ComponentKind::EvenCycle});
  CHECK(monomial_string(rows[0]) == "2*x12*x13*x23*x44");
  CHECK(monomial_string(rows[1]) == "-x11*x22*x34^2");
  CHECK(monomial_string(rows[4]) == "-2*x12*x14*x23*x34");
  for (int k = 0; k < 4; ++k) CHECK(is_polytope_vertex(rows[static_cast<std::size_t>(k)]));
  CHECK_FALSE(is_polytope_vertex(rows[4]));
}

TEST_CASE("edges among the worked monomials") {
  const auto r = worked_monomials();
  CHECK_FALSE(is_polytope_edge(r[0], r[1]));
  CHECK(is_polytope_edge(r[0], r[2]));
  CHECK(is_polytope_edge(r[0], r[3]));
  CHECK(r[0].sign == r[2].sign);
  const NewtonEdge a = describe_edge(r[1], r[2]);
  CHECK(a.lattice_length == 1);
  CHECK(a.u.sign != a.v.sign);
  CHECK(describe_edge(r[1], r[3]).lattice_length == 1);
  const NewtonEdge m = describe_edge(r[2], r[3]);
  CHECK(m.lattice_length == 2);
  REQUIRE(m.midpoint);
  CHECK(*m.midpoint == r[4]);
}

TEST_CASE("Birkhoff polytope edges") {
  const Permutation id = identity_permutation(4);
  CHECK(birkhoff_edge(id, parse_cycle_notation("(12)", 4)));
  CHECK_FALSE(birkhoff_edge(id, parse_cycle_notation("(12)(34)", 4)));
  CHECK_FALSE(birkhoff_edge(id, id));
  CHECK(birkhoff_edge(id, parse_cycle_notation("(1234)", 4)));
}

TEST_CASE("initial forms") {
  const auto all = sym_det_monomials(4);
  const auto at_ex = initial_form(all, four_cycle_matrix());
  std::set<std::vector<int>> types;
  for (const auto& c : at_ex) types.insert(c.cycle_type);
  CHECK(at_ex.size() == 3);
  CHECK(types == std::set<std::vector<int>>{{2, 2}, {4}});
  CHECK(initial_form(all, TropMatrix(4, 4)).size() == all.size());

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> big(-1000000, 1000000);
  for (int k = 0; k < 20; ++k) {
    std::vector<std::vector<long>> w(4, std::vector<long>(4));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) w[i][j] = w[j][i] = big(rng);
    }
    const auto f = initial_form(all, TropMatrix::from_ints(w, true));
    REQUIRE(f.size() == 1);
    CHECK(is_polytope_vertex(f[0]));
  }
}

TEST_CASE("hull oracle basics") {
  const HullResult sq = brute_hull({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                                    {Rational(1), Rational(1)}});
  CHECK(sq.vertices.size() == 4);
  CHECK(sq.edges.size() == 4);
  std::vector<std::vector<Rational>> birkhoff;
  for (const char* p : {"id", "(12)", "(13)", "(23)", "(123)", "(132)"}) {
    const Permutation s = std::string(p) == "id" ? identity_permutation(3) : parse_cycle_notation(p, 3);
    std::vector<Rational> x(9, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) x[3 * i + static_cast<std::size_t>(s[i])] = 1;
    birkhoff.push_back(x);
  }
  CHECK(brute_hull(birkhoff).vertices.size() == 6);
}
