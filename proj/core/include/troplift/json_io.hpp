#pragma once

#include "troplift/lifts.hpp"
#include "troplift/newton.hpp"
#include "troplift/membership.hpp"
#include "troplift/oracle.hpp"
#include "troplift/puiseux.hpp"
#include "troplift/trees.hpp"
#include "troplift/trop_matrix.hpp"

#include <json.hpp>

#include <string>

namespace troplift {

// Rationals travel as "p/q" strings; readers also accept JSON integers.
// Malformed input throws Error(ParseError).

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

/// A plain rational, or {"a","b","d"} for a + b*sqrt(d).
nlohmann::json to_json(const QuadExt& x);
QuadExt quadext_from_json(const nlohmann::json& j);

/// {"terms":[{"exp","coef"}],"trunc"}; an exact series has trunc "inf".
nlohmann::json to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SeriesMatrix& m);
SeriesMatrix series_matrix_from_json(const nlohmann::json& j);

/// {"symmetric":bool,"entries":[[...]]}; a bare array of rows is accepted too.
nlohmann::json to_json(const TropMatrix& a);
TropMatrix matrix_from_json(const nlohmann::json& j);

/// {"vertices":N,"leaves":[{color,index,vertex}],"edges":[{u,v,len}]};
/// leaf edges carry len null.
nlohmann::json to_json(const BicoloredTree& t);
BicoloredTree tree_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LiftCertificate& c);
LiftCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MembershipVerdict& v);
MembershipVerdict verdict_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OracleReport& r);
OracleReport oracle_report_from_json(const nlohmann::json& j);

ClaimedProperty parse_claimed(const std::string& s);
Positivity parse_positivity(const std::string& s);

/// Monomial classes, vertices and edges of the Newton polytope of the
/// symmetric n x n determinant.
nlohmann::json polytope_report(int n);
/// The five 4 x 4 monomials of the worked table with their graph data,
/// vertex flags and the pairwise edge relations between them.
nlohmann::json worked_monomials_report();

/// Parses text, mapping JSON syntax errors to Error(ParseError).
nlohmann::json parse_json_text(const std::string& text);

}  // namespace troplift
