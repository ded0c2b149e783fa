#include "troplift/newton.hpp"

#include "troplift/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace troplift {

std::string to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::Loop: return "loop";
    case ComponentKind::Edge: return "edge";
    case ComponentKind::OddCycle: return "odd_cycle";
    case ComponentKind::EvenCycle: return "even_cycle";
  }
  return "unknown";
}

std::vector<GraphComponent> semisimple_graph(const SignedMonomialClass& c) {
  std::vector<GraphComponent> out;
  for (auto& cyc : permutation_cycles(c.representative)) {
    GraphComponent g;
    g.vertices = cyc;
    if (cyc.size() == 1) g.kind = ComponentKind::Loop;
    else if (cyc.size() == 2) g.kind = ComponentKind::Edge;
    else g.kind = cyc.size() % 2 ? ComponentKind::OddCycle : ComponentKind::EvenCycle;
    // unoriented: start at the smallest vertex, then its smaller neighbour
    if (cyc.size() >= 3 && g.vertices[1] > g.vertices.back()) std::reverse(g.vertices.begin() + 1, g.vertices.end());
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::pair<int, int>> graph_edges(const SignedMonomialClass& c) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < c.exponent.size(); ++i) {
    for (std::size_t j = i; j < c.exponent.size(); ++j) {
      if (c.exponent[i][j] > 0) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return e;
}

std::vector<int> exponent_point(const SignedMonomialClass& c) {
  std::vector<int> p;
  for (std::size_t i = 0; i < c.exponent.size(); ++i) {
    for (std::size_t j = i; j < c.exponent.size(); ++j) p.push_back(c.exponent[i][j]);
  }
  return p;
}

std::string monomial_string(const SignedMonomialClass& c) {
  std::string s = c.sign < 0 ? "-" : "";
  bool first = true;
  if (c.coefficient != 1) {
    s += std::to_string(c.coefficient);
    first = false;
  }
  const bool wide = c.exponent.size() >= 10;
  for (std::size_t i = 0; i < c.exponent.size(); ++i) {
    for (std::size_t j = i; j < c.exponent.size(); ++j) {
      const int e = c.exponent[i][j];
      if (e == 0) continue;
      if (!first) s += "*";
      first = false;
      s += "x" + std::to_string(i + 1) + (wide ? "_" : "") + std::to_string(j + 1);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

std::vector<SignedMonomialClass> sym_det_monomials(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (n > kMaxMonomialN) throw Error(ErrorKind::SizeLimit, "monomial enumeration limited to n <= 7");
  std::map<std::vector<std::vector<int>>, SignedMonomialClass> classes;
  Permutation p = identity_permutation(n);
  do {
    auto e = symmetric_exponent(p);
    if (!classes.count(e)) classes.emplace(std::move(e), symmetric_class_of(p));
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<SignedMonomialClass> out;
  for (auto& [e, c] : classes) out.push_back(std::move(c));
  return out;
}

bool is_polytope_vertex(const SignedMonomialClass& c) {
  return std::none_of(c.cycle_type.begin(), c.cycle_type.end(), [](int len) { return len >= 4 && len % 2 == 0; });
}

std::vector<SignedMonomialClass> polytope_vertices(int n) {
  std::vector<SignedMonomialClass> out;
  for (auto& c : sym_det_monomials(n)) {
    if (is_polytope_vertex(c)) out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> union_even_cycles(const SignedMonomialClass& u, const SignedMonomialClass& v) {
  const int n = static_cast<int>(u.exponent.size());
  std::set<std::pair<int, int>> edges;
  for (const auto& e : graph_edges(u)) edges.insert(e);
  for (const auto& e : graph_edges(v)) edges.insert(e);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  // simple cycles, each reported once from its smallest vertex with the
  // second vertex smaller than the last
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  std::function<void(int, int)> dfs = [&](int start, int at) {
    for (int w : adj[static_cast<std::size_t>(at)]) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        if (path.size() % 2 == 0) cycles.push_back(path);
        continue;
      }
      if (w <= start || on[static_cast<std::size_t>(w)]) continue;
      on[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      on[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on[static_cast<std::size_t>(s)] = true;
    dfs(s, s);
    on[static_cast<std::size_t>(s)] = false;
  }
  return cycles;
}

bool is_polytope_edge(const SignedMonomialClass& u, const SignedMonomialClass& v) {
  if (u.exponent.size() != v.exponent.size()) throw Error(ErrorKind::DimensionMismatch, "classes of different size");
  if (u.exponent == v.exponent) return false;
  if (!is_polytope_vertex(u) || !is_polytope_vertex(v)) return false;
  std::set<std::pair<int, int>> edges;
  for (const auto& e : graph_edges(u)) edges.insert(e);
  for (const auto& e : graph_edges(v)) edges.insert(e);
  if (edges.size() > u.exponent.size() + 1) return false;
  return union_even_cycles(u, v).size() <= 1;
}

NewtonEdge describe_edge(const SignedMonomialClass& u, const SignedMonomialClass& v) {
  NewtonEdge e{u, v, 1, std::nullopt, std::nullopt};
  const auto cyc = union_even_cycles(u, v);
  if (!cyc.empty()) e.union_cycle_length = static_cast<int>(cyc.front().size());
  const auto pu = exponent_point(u), pv = exponent_point(v);
  int g = 0;
  for (std::size_t k = 0; k < pu.size(); ++k) g = std::gcd(g, std::abs(pu[k] - pv[k]));
  e.lattice_length = g;
  if (g == 2) {
    const std::size_t n = u.exponent.size();
    std::vector<std::vector<int>> mid(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) mid[i][j] = (u.exponent[i][j] + v.exponent[i][j]) / 2;
    }
    for (auto& c : sym_det_monomials(static_cast<int>(n))) {
      if (c.exponent == mid) {
        e.midpoint = std::move(c);
        break;
      }
    }
  }
  return e;
}

std::vector<NewtonEdge> polytope_edges(int n) {
  const auto verts = polytope_vertices(n);
  std::vector<NewtonEdge> out;
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (is_polytope_edge(verts[a], verts[b])) out.push_back(describe_edge(verts[a], verts[b]));
    }
  }
  return out;
}

bool birkhoff_edge(const Permutation& s1, const Permutation& s2) {
  if (s1.size() != s2.size()) throw Error(ErrorKind::DimensionMismatch, "permutations of different size");
  const Permutation q = permutation_compose(s1, permutation_inverse(s2));
  int nontrivial = 0;
  for (const auto& c : permutation_cycles(q)) {
    if (c.size() >= 2) ++nontrivial;
  }
  return nontrivial == 1;
}

Rational class_weight(const SignedMonomialClass& c, const TropMatrix& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.exponent.size(); ++i) {
    for (std::size_t j = i; j < c.exponent.size(); ++j) {
      if (c.exponent[i][j]) s += c.exponent[i][j] * w(i, j);
    }
  }
  return s;
}

std::vector<SignedMonomialClass> initial_form(const std::vector<SignedMonomialClass>& monomials, const TropMatrix& w) {
  std::vector<SignedMonomialClass> out;
  std::optional<Rational> best;
  for (const auto& c : monomials) {
    if (c.exponent.size() != w.rows() || !w.is_square()) throw Error(ErrorKind::DimensionMismatch, "weight size");
    const Rational v = class_weight(c, w);
    if (!best || v < *best) {
      best = v;
      out.clear();
    }
    if (v == *best) out.push_back(c);
  }
  return out;
}

std::vector<SignedMonomialClass> worked_monomials() {
  std::vector<SignedMonomialClass> out;
  for (const char* cyc : {"(123)", "(34)", "(12)(34)", "(14)(23)", "(1234)"}) {
    out.push_back(symmetric_class_of(parse_cycle_notation(cyc, 4)));
  }
  return out;
}

}  // namespace troplift
