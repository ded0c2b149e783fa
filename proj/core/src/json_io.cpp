#include "troplift/json_io.hpp"

#include "troplift/errors.hpp"

#include <algorithm>

namespace troplift {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const json& array_of(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::string string_of(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected a rational as \"p/q\" or an integer");
}

json to_json(const QuadExt& x) {
  if (x.is_rational()) return to_json(x.a());
  return {{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", to_json(x.d())}};
}

QuadExt quadext_from_json(const json& j) {
  if (j.is_object()) {
    return QuadExt(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")),
                   rational_from_json(field(j, "d")));
  }
  return QuadExt(rational_from_json(j));
}

json to_json(const PuiseuxSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) terms.push_back({{"exp", to_json(t.exp)}, {"coef", to_json(t.coef)}});
  return {{"terms", terms}, {"trunc", s.trunc() ? to_json(*s.trunc()) : json("inf")}};
}

PuiseuxSeries series_from_json(const json& j) {
  std::vector<PuiseuxSeries::Term> terms;
  for (const auto& t : array_of(field(j, "terms"), "terms")) {
    terms.push_back({rational_from_json(field(t, "exp")), quadext_from_json(field(t, "coef"))});
  }
  std::optional<Rational> trunc;
  const json& tr = j.contains("trunc") ? j.at("trunc") : json("inf");
  if (!(tr.is_null() || (tr.is_string() && tr.get<std::string>() == "inf"))) trunc = rational_from_json(tr);
  return PuiseuxSeries(std::move(terms), trunc);
}

json to_json(const SeriesMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& s : row) r.push_back(to_json(s));
    rows.push_back(std::move(r));
  }
  return rows;
}

SeriesMatrix series_matrix_from_json(const json& j) {
  SeriesMatrix m;
  for (const auto& row : array_of(j, "series matrix")) {
    auto& out = m.emplace_back();
    for (const auto& s : array_of(row, "series matrix row")) out.push_back(series_from_json(s));
  }
  return m;
}

json to_json(const TropMatrix& a) {
  json rows = json::array();
  for (const auto& row : a.entries()) {
    json r = json::array();
    for (const auto& q : row) r.push_back(to_json(q));
    rows.push_back(std::move(r));
  }
  return {{"symmetric", a.symmetric()}, {"entries", rows}};
}

TropMatrix matrix_from_json(const json& j) {
  const json& rows = j.is_array() ? j : field(j, "entries");
  bool symmetric = false;
  if (j.is_object() && j.contains("symmetric")) {
    if (!j.at("symmetric").is_boolean()) bad("\"symmetric\" must be a boolean");
    symmetric = j.at("symmetric").get<bool>();
  }
  std::vector<std::vector<Rational>> entries;
  for (const auto& row : array_of(rows, "entries")) {
    auto& out = entries.emplace_back();
    for (const auto& q : array_of(row, "matrix row")) out.push_back(rational_from_json(q));
  }
  if (entries.empty()) bad("matrix has no rows");
  return TropMatrix(std::move(entries), symmetric);
}

json to_json(const BicoloredTree& t) {
  json leaves = json::array();
  for (const auto& l : t.leaves()) {
    leaves.push_back({{"color", l.color == Color::Red ? "red" : "blue"}, {"index", l.index}, {"vertex", l.vertex}});
  }
  json edges = json::array();
  for (const auto& e : t.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"len", e.len ? to_json(*e.len) : json()}});
  return {{"vertices", t.vertex_count()}, {"leaves", leaves}, {"edges", edges}};
}

BicoloredTree tree_from_json(const json& j) {
  auto integer = [](const json& x, const char* what) {
    if (!x.is_number_integer()) bad(std::string(what) + " must be an integer");
    return x.get<int>();
  };
  std::vector<TreeLeaf> leaves;
  for (const auto& l : array_of(field(j, "leaves"), "leaves")) {
    const std::string c = string_of(field(l, "color"), "color");
    if (c != "red" && c != "blue") bad("leaf color must be red or blue");
    leaves.push_back({c == "red" ? Color::Red : Color::Blue, integer(field(l, "index"), "index"),
                      integer(field(l, "vertex"), "vertex")});
  }
  std::vector<TreeEdge> edges;
  for (const auto& e : array_of(field(j, "edges"), "edges")) {
    TreeEdge te{integer(field(e, "u"), "u"), integer(field(e, "v"), "v"), std::nullopt};
    if (e.contains("len") && !e.at("len").is_null()) te.len = rational_from_json(e.at("len"));
    edges.push_back(te);
  }
  return BicoloredTree(integer(field(j, "vertices"), "vertices"), std::move(leaves), std::move(edges));
}

ClaimedProperty parse_claimed(const std::string& s) {
  for (auto p : {ClaimedProperty::Rank2, ClaimedProperty::SymRank2, ClaimedProperty::Singular,
                 ClaimedProperty::SymSingular}) {
    if (to_string(p) == s) return p;
  }
  bad("unknown claimed property \"" + s + "\"");
}

Positivity parse_positivity(const std::string& s) {
  for (auto p : {Positivity::None, Positivity::AllPositive}) {
    if (to_string(p) == s) return p;
  }
  bad("unknown positivity \"" + s + "\"");
}

json to_json(const LiftCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.transcript) steps.push_back({{"check", s.check}, {"passed", s.passed}, {"detail", s.detail}});
  return {{"target", to_json(c.target)},
          {"lift", to_json(c.lift)},
          {"claimed", to_string(c.claimed)},
          {"positivity", to_string(c.positivity)},
          {"construction", c.construction},
          {"transcript", steps},
          {"valid", c.valid}};
}

LiftCertificate certificate_from_json(const json& j) {
  LiftCertificate c;
  c.target = matrix_from_json(field(j, "target"));
  c.lift = series_matrix_from_json(field(j, "lift"));
  c.claimed = parse_claimed(string_of(field(j, "claimed"), "claimed"));
  c.positivity = j.contains("positivity") ? parse_positivity(string_of(j.at("positivity"), "positivity"))
                                          : Positivity::None;
  if (j.contains("construction")) c.construction = string_of(j.at("construction"), "construction");
  if (j.contains("transcript")) {
    for (const auto& s : array_of(j.at("transcript"), "transcript")) {
      const json& p = field(s, "passed");
      if (!p.is_boolean()) bad("\"passed\" must be a boolean");
      c.transcript.push_back({string_of(field(s, "check"), "check"), p.get<bool>(),
                              s.contains("detail") ? string_of(s.at("detail"), "detail") : std::string()});
    }
  }
  if (j.contains("valid")) {
    if (!j.at("valid").is_boolean()) bad("\"valid\" must be a boolean");
    c.valid = j.at("valid").get<bool>();
  }
  return c;
}

json to_json(const MembershipVerdict& v) {
  return {{"variety", to_string(v.variety)}, {"mode", to_string(v.mode)}, {"verdict", v.verdict}, {"reason", v.reason}};
}

MembershipVerdict verdict_from_json(const json& j) {
  MembershipVerdict v;
  v.variety = parse_variety(string_of(field(j, "variety"), "variety"));
  v.mode = parse_mode(string_of(field(j, "mode"), "mode"));
  if (!field(j, "verdict").is_boolean()) bad("\"verdict\" must be a boolean");
  v.verdict = j.at("verdict").get<bool>();
  v.reason = j.contains("reason") ? j.at("reason") : json::object();
  return v;
}

json to_json(const OracleReport& r) {
  return {{"subject", r.subject},
          {"instance", r.instance},
          {"fast", r.fast_result},
          {"brute", r.brute_result},
          {"agree", r.agree}};
}

OracleReport oracle_report_from_json(const json& j) {
  OracleReport r;
  r.subject = string_of(field(j, "subject"), "subject");
  r.instance = string_of(field(j, "instance"), "instance");
  r.fast_result = string_of(field(j, "fast"), "fast");
  r.brute_result = string_of(field(j, "brute"), "brute");
  if (!field(j, "agree").is_boolean()) bad("\"agree\" must be a boolean");
  r.agree = j.at("agree").get<bool>();
  return r;
}

namespace {

json edge_json(const NewtonEdge& e) {
  json j = {{"u", monomial_string(e.u)}, {"v", monomial_string(e.v)}, {"lattice_length", e.lattice_length},
            {"opposite_signs", e.u.sign != e.v.sign}};
  j["midpoint"] = e.midpoint ? json(monomial_string(*e.midpoint)) : json();
  j["even_cycle_length"] = e.union_cycle_length ? json(*e.union_cycle_length) : json();
  return j;
}

}  // namespace

json polytope_report(int n) {
  const auto classes = sym_det_monomials(n);
  json cls = json::array();
  for (const auto& c : classes) {
    json j = class_json(c);
    j["vertex"] = is_polytope_vertex(c);
    cls.push_back(std::move(j));
  }
  json verts = json::array();
  for (const auto& v : polytope_vertices(n)) verts.push_back(monomial_string(v));
  json edges = json::array();
  for (const auto& e : polytope_edges(n)) edges.push_back(edge_json(e));
  return {{"n", n}, {"class_count", classes.size()}, {"vertex_count", verts.size()}, {"edge_count", edges.size()},
          {"classes", cls}, {"vertices", verts}, {"edges", edges}};
}

json worked_monomials_report() {
  const auto rows = worked_monomials();
  json out = json::array();
  for (const auto& c : rows) {
    json j = class_json(c);
    j["vertex"] = is_polytope_vertex(c);
    out.push_back(std::move(j));
  }
  json pairs = json::array();
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (std::size_t y = x + 1; y < rows.size(); ++y) {
      if (!is_polytope_vertex(rows[x]) || !is_polytope_vertex(rows[y])) continue;
      auto ex = graph_edges(rows[x]);
      const auto ey = graph_edges(rows[y]);
      ex.insert(ex.end(), ey.begin(), ey.end());
      std::sort(ex.begin(), ex.end());
      ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
      const bool edge = is_polytope_edge(rows[x], rows[y]);
      json j = {{"u", monomial_string(rows[x])}, {"v", monomial_string(rows[y])}, {"edge", edge},
                {"union_edges", ex.size()}};
      if (edge) j["relation"] = edge_json(describe_edge(rows[x], rows[y]));
      pairs.push_back(std::move(j));
    }
  }
  return {{"n", 4}, {"monomials", out}, {"pairs", pairs}};
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

}  // namespace troplift
