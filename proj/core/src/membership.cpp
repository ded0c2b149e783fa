#include "troplift/membership.hpp"

#include "troplift/barvinok.hpp"
#include "troplift/errors.hpp"
#include "troplift/lp.hpp"

#include <algorithm>
#include <set>

namespace troplift {

using nlohmann::json;

std::string to_string(Variety v) {
  switch (v) {
    case Variety::Rank2: return "rank2";
    case Variety::SymRank2: return "sym_rank2";
    case Variety::Corank1: return "corank1";
    case Variety::SymCorank1: return "sym_corank1";
  }
  return "unknown";
}

std::string to_string(FieldMode m) {
  switch (m) {
    case FieldMode::C: return "C";
    case FieldMode::R: return "R";
    case FieldMode::CPlus: return "C+";
    case FieldMode::RPlus: return "R+";
  }
  return "unknown";
}

Variety parse_variety(const std::string& s) {
  for (Variety v : {Variety::Rank2, Variety::SymRank2, Variety::Corank1, Variety::SymCorank1}) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorKind::ParseError, "unknown variety '" + s + "'");
}

FieldMode parse_mode(const std::string& s) {
  for (FieldMode m : {FieldMode::C, FieldMode::R, FieldMode::CPlus, FieldMode::RPlus}) {
    if (to_string(m) == s) return m;
  }
  if (s == "Cplus" || s == "C_plus") return FieldMode::CPlus;
  if (s == "Rplus" || s == "R_plus") return FieldMode::RPlus;
  throw Error(ErrorKind::ParseError, "unknown field mode '" + s + "'");
}

namespace {

bool positive(FieldMode m) { return m == FieldMode::CPlus || m == FieldMode::RPlus; }

MembershipVerdict make(Variety v, FieldMode m) {
  MembershipVerdict r;
  r.variety = v;
  r.mode = m;
  return r;
}

json matrix_json(const TropMatrix& a) {
  json rows = json::array();
  for (const auto& row : a.entries()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<int> sign_set(const TropDetResult& det) {
  std::set<int> s;
  for (const auto& c : det.argmin) s.insert(c.sign);
  return {s.begin(), s.end()};
}

}  // namespace

json class_json(const SignedMonomialClass& c) {
  json comps = json::array();
  for (const auto& g : semisimple_graph(c)) {
    json verts = json::array();
    for (int v : g.vertices) verts.push_back(v + 1);
    comps.push_back({{"kind", to_string(g.kind)}, {"vertices", verts}});
  }
  return {{"monomial", monomial_string(c)},
          {"permutation", cycle_notation(c.representative)},
          {"sign", c.sign},
          {"coefficient", c.coefficient},
          {"exponent", c.exponent},
          {"graph", comps}};
}

TropMatrix principal_minor(const TropMatrix& a, std::size_t k) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i != k) keep.push_back(i);
  }
  return a.submatrix(keep, keep);
}

MembershipVerdict member_rank2(const TropMatrix& a, FieldMode mode) {
  MembershipVerdict r = make(Variety::Rank2, mode);
  if (!positive(mode)) {
    const RankWitness w = trop_rank_witness(a);
    r.verdict = w.rank <= 2;
    r.reason = {{"criterion", "tropical_rank"}, {"trop_rank", w.rank}};
    if (!r.verdict) {
      json rows = json::array(), cols = json::array();
      for (auto i : w.rows) rows.push_back(i + 1);
      for (auto j : w.cols) cols.push_back(j + 1);
      r.reason["nonsingular_rows"] = rows;
      r.reason["nonsingular_cols"] = cols;
    }
    return r;
  }
  const BarvinokResult b = barvinok_rank2(a);
  r.verdict = b.holds;
  r.reason = {{"criterion", "barvinok_rank2"}, {"trop_rank", b.trop_rank}, {"detail", b.reason}};
  if (b.holds) {
    r.reason["factor_b"] = matrix_json(*b.b);
    r.reason["factor_c"] = matrix_json(*b.c);
  }
  return r;
}

MembershipVerdict member_sym_rank2(const TropMatrix& a, FieldMode mode, int max_n) {
  MembershipVerdict r = make(Variety::SymRank2, mode);
  if (!a.is_symmetric_valued()) throw Error(ErrorKind::InvalidArgument, "sym_rank2 needs a symmetric matrix");
  const int srank = sym_trop_rank(a, max_n);
  if (!positive(mode) || srank > 2) {
    r.verdict = srank <= 2;
    r.reason = {{"criterion", "symmetric_tropical_rank"}, {"sym_trop_rank", srank}};
    return r;
  }
  const BarvinokResult b = barvinok_rank2(a);
  r.verdict = b.holds;
  r.reason = {{"criterion", "barvinok_rank2"}, {"sym_trop_rank", srank}, {"detail", b.reason}};
  if (b.trop_rank >= 2) {
    const SymbicInfo info = symbic_info(tree_from_rank2(a));
    r.reason["tree"] = {{"symbic", to_string(info.cls)},
                        {"caterpillar", is_caterpillar(info.tree)},
                        {"one_fixed_point", info.one_fixed_point}};
  }
  return r;
}

std::optional<std::pair<Permutation, Permutation>> find_birkhoff_edge(const TropDetResult& det, bool opposite_signs) {
  for (std::size_t x = 0; x < det.argmin.size(); ++x) {
    for (std::size_t y = x + 1; y < det.argmin.size(); ++y) {
      const auto& u = det.argmin[x];
      const auto& v = det.argmin[y];
      if (opposite_signs && u.sign == v.sign) continue;
      if (birkhoff_edge(u.representative, v.representative)) return std::make_pair(u.representative, v.representative);
    }
  }
  return std::nullopt;
}

MembershipVerdict member_corank1(const TropMatrix& a, FieldMode mode, int max_n) {
  MembershipVerdict r = make(Variety::Corank1, mode);
  const TropDetResult det = trop_det(a, max_n);
  json arg = json::array();
  for (const auto& c : det.argmin) {
    arg.push_back({{"permutation", cycle_notation(c.representative)}, {"sign", c.sign}});
  }
  r.reason = {{"min_value", to_string(det.min_value)}, {"argmin", arg}};
  if (!det.tie) {
    r.reason["criterion"] = "UniqueMinimum";
    return r;
  }
  if (!positive(mode)) {
    r.verdict = true;
    r.reason["criterion"] = "tie";
    return r;
  }
  const auto edge = find_birkhoff_edge(det, true);
  r.verdict = edge.has_value();
  r.reason["criterion"] = r.verdict ? "opposite_sign_edge" : "SameSigns";
  if (edge) {
    r.reason["edge"] = {cycle_notation(edge->first), cycle_notation(edge->second)};
  }
  return r;
}

namespace {

// Perturbation directions live on the entries k <= l.
struct Directions {
  std::size_t n = 0;
  std::size_t size() const { return n * (n + 1) / 2; }
  std::size_t index(std::size_t r, std::size_t c) const {
    if (r > c) std::swap(r, c);
    return r * n - r * (r - 1) / 2 + (c - r);
  }
  std::vector<Rational> of_class(const SignedMonomialClass& m) const {
    std::vector<Rational> v(size(), Rational(0));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r; c < n; ++c) v[index(r, c)] = m.exponent[r][c];
    }
    return v;
  }
  // a permutation of the principal minor without `skip`
  std::vector<Rational> of_minor_perm(const Permutation& p, std::size_t skip) const {
    auto up = [skip](int k) { return static_cast<std::size_t>(k) < skip ? static_cast<std::size_t>(k) : static_cast<std::size_t>(k) + 1; };
    std::vector<Rational> v(size(), Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) v[index(up(static_cast<int>(k)), up(p[k]))] += 1;
    return v;
  }
  std::vector<std::vector<Rational>> grid(const std::vector<Rational>& d) const {
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) g[r][c] = d[index(r, c)];
    }
    return g;
  }
};

std::vector<Rational> minus(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> d(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) d[k] = x[k] - y[k];
  return d;
}

struct Constraints {
  std::vector<std::vector<Rational>> eq_a, ge_a;
  std::vector<Rational> eq_b, ge_b;
};

// (other - best) . d >= 1 for every entry of `others` with the opposite sign
void dominate(Constraints& k, const std::vector<Rational>& best, int sign, const TropDetResult& minor,
              const Directions& dirs, std::size_t skip) {
  for (const auto& o : minor.argmin) {
    if (o.sign == sign) continue;
    k.ge_a.push_back(minus(dirs.of_minor_perm(o.representative, skip), best));
    k.ge_b.emplace_back(1);
  }
}

}  // namespace

SymCorank1Analysis analyze_sym_corank1(const TropMatrix& a, int max_n) {
  SymCorank1Analysis out;
  out.det = sym_trop_det(a, max_n);
  const auto& arg = out.det.argmin;
  for (std::size_t x = 0; x < arg.size(); ++x) {
    for (std::size_t y = x + 1; y < arg.size(); ++y) {
      if (!is_polytope_edge(arg[x], arg[y])) continue;
      EdgeAssessment e;
      e.edge = describe_edge(arg[x], arg[y]);
      if (e.edge.lattice_length == 1) {
        e.c_plus = arg[x].sign != arg[y].sign;
        e.r_plus = e.c_plus;
      } else {
        for (const auto& g : semisimple_graph(*e.edge.midpoint)) {
          if (g.kind == ComponentKind::EvenCycle) e.cycle = g.vertices;
        }
        e.c_plus = e.cycle.size() % 4 == 0;
        if (e.c_plus) {
          for (std::size_t k = 0; k < e.cycle.size(); ++k) {
            MinorSignPair p;
            p.i = e.cycle[k];
            p.j = e.cycle[(k + 1) % e.cycle.size()];
            p.signs_i = sign_set(trop_det(principal_minor(a, static_cast<std::size_t>(p.i)), max_n));
            p.signs_j = sign_set(trop_det(principal_minor(a, static_cast<std::size_t>(p.j)), max_n));
            for (int s : p.signs_i) {
              if (std::find(p.signs_j.begin(), p.signs_j.end(), s) != p.signs_j.end()) p.same_sign = true;
            }
            e.minor_pairs.push_back(std::move(p));
          }
        }
      }
      // edge constraints: u and v tie, every other optimal class loses
      const Directions dirs{a.rows()};
      Constraints base;
      const auto du = dirs.of_class(e.edge.u);
      base.eq_a.push_back(minus(du, dirs.of_class(e.edge.v)));
      base.eq_b.emplace_back(0);
      for (const auto& w : arg) {
        if (w == e.edge.u || w == e.edge.v || (e.edge.midpoint && w == *e.edge.midpoint)) continue;
        base.ge_a.push_back(minus(dirs.of_class(w), du));
        base.ge_b.emplace_back(1);
      }
      auto solve = [&](const Constraints& k) {
        return lp_feasible_point(dirs.size(), k.eq_a, k.eq_b, k.ge_a, k.ge_b);
      };
      if (e.c_plus && e.edge.lattice_length == 2) {
        // closure: some nearby interior point where the minors of the
        // first adjacent pair are won by permutations of a common sign
        const auto p = static_cast<std::size_t>(e.cycle[0]), q = static_cast<std::size_t>(e.cycle[1]);
        const TropDetResult mp = trop_det(principal_minor(a, p), max_n);
        const TropDetResult mq = trop_det(principal_minor(a, q), max_n);
        for (const auto& x : mp.argmin) {
          for (const auto& y : mq.argmin) {
            if (e.r_plus || x.sign != y.sign) continue;
            Constraints k = base;
            dominate(k, dirs.of_minor_perm(x.representative, p), x.sign, mp, dirs, p);
            dominate(k, dirs.of_minor_perm(y.representative, q), y.sign, mq, dirs, q);
            if (const auto d = solve(k)) {
              e.r_plus = true;
              e.perturbation = dirs.grid(*d);
              e.minor_witness = std::make_pair(x.representative, y.representative);
            }
          }
        }
      }
      if (e.perturbation.empty()) {
        const auto d = solve(base);
        if (!d) throw Error(ErrorKind::NotOnEdge, "optimal classes do not select the edge");
        e.perturbation = dirs.grid(*d);
      }
      out.edges.push_back(std::move(e));
    }
  }
  return out;
}

MembershipVerdict member_sym_corank1(const TropMatrix& a, FieldMode mode, int max_n) {
  MembershipVerdict r = make(Variety::SymCorank1, mode);
  if (!a.is_symmetric_valued()) throw Error(ErrorKind::InvalidArgument, "sym_corank1 needs a symmetric matrix");
  const SymCorank1Analysis an = analyze_sym_corank1(a, max_n);
  json arg = json::array();
  for (const auto& c : an.det.argmin) arg.push_back(class_json(c));
  json edges = json::array();
  for (const auto& e : an.edges) {
    json je = {{"u", monomial_string(e.edge.u)},
               {"v", monomial_string(e.edge.v)},
               {"lattice_length", e.edge.lattice_length},
               {"c_plus", e.c_plus}};
    if (e.edge.midpoint) je["midpoint"] = monomial_string(*e.edge.midpoint);
    if (!e.cycle.empty()) je["cycle_length"] = e.cycle.size();
    if (!e.minor_pairs.empty()) {
      json pairs = json::array();
      for (const auto& p : e.minor_pairs) {
        pairs.push_back({{"pair", {p.i + 1, p.j + 1}},
                         {"minor_signs_i", p.signs_i},
                         {"minor_signs_j", p.signs_j},
                         {"same_sign", p.same_sign}});
      }
      je["minor_sign_report"] = pairs;
      je["r_plus"] = e.r_plus;
      if (e.minor_witness) {
        const auto p = e.cycle[0], q = e.cycle[1];
        je["closure_witness"] = {{"pair", {p + 1, q + 1}},
                                 {"minor_permutation_i", cycle_notation(e.minor_witness->first)},
                                 {"minor_permutation_j", cycle_notation(e.minor_witness->second)}};
      }
    }
    edges.push_back(std::move(je));
  }
  r.reason = {{"min_value", to_string(an.det.min_value)}, {"argmin", arg}, {"edges", edges}};
  if (!an.det.tie) {
    r.reason["criterion"] = "UniqueMinimum";
    return r;
  }
  if (!positive(mode)) {
    r.verdict = true;
    r.reason["criterion"] = "symmetric_tie";
    return r;
  }
  const bool any_c = std::any_of(an.edges.begin(), an.edges.end(), [](const EdgeAssessment& e) { return e.c_plus; });
  const bool any_r = std::any_of(an.edges.begin(), an.edges.end(), [](const EdgeAssessment& e) { return e.r_plus; });
  if (mode == FieldMode::CPlus) {
    r.verdict = any_c;
    r.reason["criterion"] = any_c ? "positive_edge" : "NotOnEdge";
  } else {
    r.verdict = any_r;
    r.reason["criterion"] = any_r ? "really_positive_edge" : (any_c ? "MinorSignsOpposed" : "NotOnEdge");
  }
  return r;
}

MembershipVerdict member(Variety v, const TropMatrix& a, FieldMode mode, int max_n) {
  switch (v) {
    case Variety::Rank2: return member_rank2(a, mode);
    case Variety::SymRank2: return member_sym_rank2(a, mode, max_n);
    case Variety::Corank1: return member_corank1(a, mode, max_n);
    case Variety::SymCorank1: return member_sym_corank1(a, mode, max_n);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown variety");
}

}  // namespace troplift
