#include "troplift/errors.hpp"
#include "troplift/fixtures.hpp"
#include "troplift/json_io.hpp"
#include "troplift/lifts.hpp"
#include "troplift/membership.hpp"
#include "troplift/oracle.hpp"
#include "troplift/trees.hpp"

#include <doctest.h>

using namespace troplift;
using nlohmann::json;

TEST_CASE("series schema") {
  const PuiseuxSeries exact({{Rational(0), QuadExt(1)}, {parse_rational("1/2"), QuadExt(parse_rational("-3/4"))}},
                            std::nullopt);
  const json j = to_json(exact);
  CHECK(j["trunc"] == "inf");
  CHECK(j["terms"][1]["exp"] == "1/2");
  CHECK(j["terms"][1]["coef"] == "-3/4");
  CHECK(series_from_json(j) == exact);

  const PuiseuxSeries r = ps_sqrt(PuiseuxSeries::monomial(QuadExt(2), Rational(4)), Rational(10));
  const json k = to_json(r);
  CHECK(k["terms"][0]["coef"]["d"] == "2");
  CHECK(series_from_json(k) == r);

  const PuiseuxSeries trunc = PuiseuxSeries::constant(QuadExt(1)).truncated(Rational(3));
  CHECK(to_json(trunc)["trunc"] == "3");
  CHECK(series_from_json(to_json(trunc)) == trunc);
}

TEST_CASE("matrix schema") {
  const TropMatrix m = four_cycle_matrix();
  const json j = to_json(m);
  CHECK(j["symmetric"] == true);
  CHECK(j["entries"][0][0] == "2");
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(json::parse("[[1, \"1/2\"], [0, 3]]")) ==
        TropMatrix({{Rational(1), parse_rational("1/2")}, {Rational(0), Rational(3)}}));
  CHECK_THROWS_AS(matrix_from_json(json::parse("{\"entries\": [[1, true]]}")), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse("{\"rows\": []}")), Error);
  CHECK_THROWS_AS(parse_json_text("{not json"), Error);
}

TEST_CASE("tree schema round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BicoloredTree t = random_bicolored_tree(seed, 3, 4);
    const BicoloredTree back = tree_from_json(to_json(t));
    CHECK(to_json(back) == to_json(t));
    CHECK(same_metric_tree(back, t));
  }
}

TEST_CASE("certificate round trip") {
  for (const LiftCertificate& c : {lift_sym_caterpillar(three_leaf_symbic_matrix()), lift_sym_corank1(four_cycle_matrix(), FieldMode::R),
                                   lift_rank2_real(diagonal_tie_matrix())}) {
    const json j = to_json(c);
    const LiftCertificate back = certificate_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.lift == c.lift);
    CHECK(back.valid == c.valid);
    CHECK(certificate_from_json(json::parse(j.dump())).lift == c.lift);
  }
}

TEST_CASE("verdict and oracle report round trip") {
  const MembershipVerdict v = member_sym_corank1(four_cycle_matrix(), FieldMode::RPlus);
  const json j = to_json(v);
  CHECK(j["verdict"] == false);
  CHECK(j["reason"]["criterion"] == "MinorSignsOpposed");
  CHECK(to_json(verdict_from_json(j)) == j);
  const OracleReport r{"trop_det", "[[0]]", "0", "0", true};
  CHECK(to_json(oracle_report_from_json(to_json(r))) == to_json(r));
}

TEST_CASE("fixtures") {
  for (const auto& name : fixture_names()) CHECK_FALSE(fixture(name).empty());
  CHECK(matrix_from_json(fixture("ex52")[0].content) == four_cycle_matrix());
  CHECK(matrix_from_json(fixture("eq1")[0].content) == diagonal_tie_matrix(1, 1, 1));
  CHECK(fixture("table2")[0].content["monomials"].size() == 5);
  CHECK(matrix_from_json(fixture("cocircuit-ag23")[0].content).cols() == 12);
  CHECK_THROWS_AS(fixture("fig9"), Error);
}

TEST_CASE("reports re-parse") {
  const json p = polytope_report(4);
  CHECK(p["class_count"] == 17);
  CHECK(p["vertex_count"] == 14);
  CHECK(json::parse(p.dump()) == p);
  const json t = worked_monomials_report();
  CHECK(t["pairs"].size() == 6);
}
