#include "troplift/errors.hpp"
#include "troplift/mpoly.hpp"
#include "troplift/puiseux.hpp"
#include "troplift/quadext.hpp"
#include "troplift/rational.hpp"

#include <doctest.h>

using namespace troplift;

namespace {

Rational q(const char* s) { return parse_rational(s); }

PuiseuxSeries poly(std::vector<std::pair<const char*, long>> terms) {
  std::vector<PuiseuxSeries::Term> out;
  for (auto [e, c] : terms) out.push_back({q(e), QuadExt(c)});
  return PuiseuxSeries(out, std::nullopt);
}

PuiseuxSeries tt(const char* e) { return PuiseuxSeries::monomial(QuadExt(1), q(e)); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("rationals parse, print and split square factors") {
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("-7")) == "-7");
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::ParseError);
  CHECK(exact_sqrt(q("9/4")) == q("3/2"));
  CHECK_FALSE(exact_sqrt(q("2")).has_value());
  const SquareSplit s = split_square(q("8/9"));
  CHECK(s.scale * s.scale * Rational(s.radicand) == q("8/9"));
  CHECK(s.radicand == 2);
}

TEST_CASE("quadratic extension arithmetic and signs") {
  const QuadExt r2 = QuadExt::sqrt_of(q("2"));
  CHECK(r2 * r2 == QuadExt(2));
  CHECK((QuadExt(1) + r2).sign() == 1);
  CHECK((QuadExt(1) - r2).sign() == -1);
  CHECK(((QuadExt(1) + r2) * (QuadExt(1) - r2)) == QuadExt(-1));
  CHECK((QuadExt(1) + r2).inverse() * (QuadExt(1) + r2) == QuadExt(1));
  CHECK(QuadExt::sqrt_of(q("9/4")).is_rational());
  CHECK(kind_of([&] { return r2 + QuadExt::sqrt_of(q("3")); }) == ErrorKind::NestedRadical);
}

TEST_CASE("series addition cancels leading terms") {
  CHECK(poly({{"0", 1}, {"1", 1}}) + poly({{"0", -1}, {"2", 1}}) == poly({{"1", 1}, {"2", 1}}));
  CHECK(tt("1/2") + tt("1/2") == poly({{"1/2", 2}}));
  const auto x = poly({{"0", 3}, {"5/3", -1}});
  CHECK(x + PuiseuxSeries() == x);
}

TEST_CASE("series products and inverses") {
  CHECK(poly({{"0", 1}, {"1", 1}}) * poly({{"0", 1}, {"1", -1}}) == poly({{"0", 1}, {"2", -1}}));
  CHECK(tt("1/3") * tt("2/3") == tt("1"));
  const PuiseuxSeries inv = ps_inv(poly({{"0", 1}, {"1", 1}}), q("6"));
  REQUIRE(inv.trunc() == q("6"));
  REQUIRE(inv.terms().size() == 6);
  for (int k = 0; k < 6; ++k) {
    CHECK(inv.terms()[k].exp == k);
    CHECK(inv.terms()[k].coef == QuadExt(k % 2 == 0 ? 1 : -1));
  }
  CHECK(kind_of([] { ps_inv(PuiseuxSeries(), Rational(4)); }) == ErrorKind::InversionOfZero);
}

TEST_CASE("truncation propagates through products") {
  const PuiseuxSeries a = poly({{"0", 1}}).truncated(q("3"));
  const PuiseuxSeries b = tt("2");
  CHECK((a * b).trunc() == q("5"));
  CHECK((a + b).trunc() == q("3"));
}

TEST_CASE("valuation and leading sign") {
  CHECK(ps_val(poly({{"2", 3}, {"5", 1}})) == q("2"));
  CHECK(ps_lead_sign(poly({{"2", 3}, {"5", 1}})) == 1);
  CHECK(ps_lead_sign(poly({{"2", -8}, {"3", 5}})) == -1);
  CHECK_FALSE(ps_val(PuiseuxSeries()).has_value());
  CHECK(kind_of([&] { ps_val(PuiseuxSeries::unknown_from(q("10"))); }) == ErrorKind::ValuationUnknown);
  const PuiseuxSeries cancelled = (poly({{"0", 1}}) - poly({{"0", 1}})).truncated(q("10"));
  CHECK(kind_of([&] { ps_val(cancelled); }) == ErrorKind::ValuationUnknown);
}

TEST_CASE("square roots of series") {
  CHECK(ps_sqrt(tt("2"), q("10")).terms() == tt("1").terms());
  const PuiseuxSeries r = ps_sqrt(poly({{"0", 4}, {"1", 4}}), q("3"));
  REQUIRE(r.terms().size() == 3);
  CHECK(r.terms()[0].coef == QuadExt(2));
  CHECK(r.terms()[1].coef == QuadExt(1));
  CHECK(r.terms()[2].coef == QuadExt(q("-1/4")));
  const PuiseuxSeries s = ps_sqrt(poly({{"4", 2}}), q("10"));
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms()[0].exp == 2);
  CHECK(s.terms()[0].coef == QuadExt::sqrt_of(q("2")));
  CHECK(kind_of([] { ps_sqrt(poly({{"0", -1}}), Rational(4)); }) == ErrorKind::NegativeLeading);
}

TEST_CASE("quadratic roots over series") {
  const QuadRoots r = quad_roots(poly({{"0", 1}}), poly({{"0", -3}}), poly({{"0", 2}}), q("10"));
  REQUIRE(r.x1);
  REQUIRE(r.x2);
  std::vector<PuiseuxSeries> roots{*r.x1, *r.x2};
  CHECK(std::count(roots.begin(), roots.end(), poly({{"0", 1}})) == 1);
  CHECK(std::count(roots.begin(), roots.end(), poly({{"0", 2}})) == 1);
  const QuadRoots none = quad_roots(poly({{"0", 1}}), PuiseuxSeries(), tt("2"), q("10"));
  CHECK(none.disc_sign == -1);
  CHECK(none.discriminant == poly({{"2", -4}}));
  CHECK_FALSE(none.x1);
}

TEST_CASE("series determinant") {
  const std::vector<std::vector<PuiseuxSeries>> m{{tt("0"), tt("1")}, {tt("2"), tt("0")}};
  CHECK(ps_det(m) == poly({{"0", 1}, {"3", -1}}));
}

TEST_CASE("symbolic determinants agree between methods") {
  const std::size_t nv = 16;
  std::vector<std::vector<MPoly>> m(4, std::vector<MPoly>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = MPoly::variable(nv, 4 * i + j);
  }
  const MPoly cof = mpoly_det_cofactor(m);
  CHECK(cof.size() == 24);
  CHECK(mpoly_det_bareiss(m) == cof);

  std::vector<std::vector<MPoly>> two{{MPoly::variable(4, 0), MPoly::variable(4, 1)},
                                      {MPoly::variable(4, 2), MPoly::variable(4, 3)}};
  CHECK(mpoly_det(two) == MPoly::variable(4, 0) * MPoly::variable(4, 3) - MPoly::variable(4, 1) * MPoly::variable(4, 2));
}

TEST_CASE("symbolic discriminant") {
  // x^2 - 3x + 2 in one variable: disc = 1
  const MPoly x = MPoly::variable(1, 0);
  const MPoly p = x * x - x.scaled(3) + MPoly::constant(1, 2);
  CHECK(mpoly_disc(p, 0) == MPoly::constant(1, 1));
  CHECK(kind_of([&] { mpoly_disc(p * x, 0); }) == ErrorKind::NotQuadratic);
}
