#include "troplift/trees.hpp"

#include "troplift/errors.hpp"
#include "troplift/tropical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace troplift {

namespace {

int count_color(const std::vector<TreeLeaf>& leaves, Color c) {
  return static_cast<int>(std::count_if(leaves.begin(), leaves.end(), [c](const TreeLeaf& l) { return l.color == c; }));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

BicoloredTree::BicoloredTree(int vertex_count, std::vector<TreeLeaf> leaves, std::vector<TreeEdge> edges)
    : vertex_count_(vertex_count), leaves_(std::move(leaves)), edges_(std::move(edges)),
      leaf_at_(static_cast<std::size_t>(std::max(vertex_count, 0)), -1) {
  if (vertex_count_ <= 0) throw Error(ErrorKind::InvalidTree, "empty tree");
  for (std::size_t k = 0; k < leaves_.size(); ++k) {
    const int v = leaves_[k].vertex;
    if (v < 0 || v >= vertex_count_ || leaf_at_[static_cast<std::size_t>(v)] >= 0) {
      throw Error(ErrorKind::InvalidTree, "bad or repeated leaf vertex");
    }
    leaf_at_[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  for (Color c : {Color::Red, Color::Blue}) {
    std::vector<bool> seen(static_cast<std::size_t>(count_color(leaves_, c)), false);
    for (const auto& l : leaves_) {
      if (l.color != c) continue;
      if (l.index < 0 || l.index >= static_cast<int>(seen.size()) || seen[static_cast<std::size_t>(l.index)]) {
        throw Error(ErrorKind::InvalidTree, "leaf indices of one colour must be 0..k-1 without repeats");
      }
      seen[static_cast<std::size_t>(l.index)] = true;
    }
  }
  if (static_cast<int>(edges_.size()) != vertex_count_ - 1) throw Error(ErrorKind::InvalidTree, "edge count is not |V|-1");
  std::vector<int> degree(static_cast<std::size_t>(vertex_count_), 0);
  UnionFind uf(vertex_count_);
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_ || e.u == e.v) {
      throw Error(ErrorKind::InvalidTree, "bad edge endpoint");
    }
    if (uf.find(e.u) == uf.find(e.v)) throw Error(ErrorKind::InvalidTree, "cycle in tree");
    uf.unite(e.u, e.v);
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
    const bool leaf_edge = is_leaf_vertex(e.u) || is_leaf_vertex(e.v);
    if (leaf_edge == e.len.has_value()) {
      throw Error(ErrorKind::InvalidTree, "leaf edges carry no length, internal edges need one");
    }
    if (e.len && *e.len < 0) throw Error(ErrorKind::InvalidTree, "negative edge length");
    if (is_leaf_vertex(e.u) && is_leaf_vertex(e.v)) throw Error(ErrorKind::InvalidTree, "edge between two leaves");
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (is_leaf_vertex(v) && degree[static_cast<std::size_t>(v)] != 1) {
      throw Error(ErrorKind::InvalidTree, "leaf vertex must have degree 1");
    }
  }
  if (leaves_.empty()) throw Error(ErrorKind::InvalidTree, "tree without leaves");
}

int BicoloredTree::red_count() const { return count_color(leaves_, Color::Red); }
int BicoloredTree::blue_count() const { return count_color(leaves_, Color::Blue); }

int BicoloredTree::leaf_vertex(Color c, int index) const {
  for (const auto& l : leaves_) {
    if (l.color == c && l.index == index) return l.vertex;
  }
  throw Error(ErrorKind::InvalidArgument, "no such leaf");
}

int BicoloredTree::attachment(Color c, int index) const {
  const int v = leaf_vertex(c, index);
  for (const auto& e : edges_) {
    if (e.u == v) return e.v;
    if (e.v == v) return e.u;
  }
  throw Error(ErrorKind::InvalidTree, "isolated leaf");
}

std::vector<int> BicoloredTree::internal_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count_; ++v) {
    if (!is_leaf_vertex(v)) out.push_back(v);
  }
  return out;
}

std::vector<TreeEdge> BicoloredTree::internal_edges() const {
  std::vector<TreeEdge> out;
  for (const auto& e : edges_) {
    if (e.len) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<std::pair<int, Rational>>> BicoloredTree::internal_adjacency() const {
  std::vector<std::vector<std::pair<int, Rational>>> adj(static_cast<std::size_t>(vertex_count_));
  for (const auto& e : edges_) {
    if (!e.len) continue;
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, *e.len);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, *e.len);
  }
  return adj;
}

std::vector<std::vector<Rational>> BicoloredTree::internal_distances() const {
  const auto adj = internal_adjacency();
  const std::size_t n = static_cast<std::size_t>(vertex_count_);
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(-1)));
  for (int s : internal_vertices()) {
    auto& d = dist[static_cast<std::size_t>(s)];
    d[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [w, len] : adj[static_cast<std::size_t>(u)]) {
        if (d[static_cast<std::size_t>(w)] >= 0) continue;
        d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(u)] + len;
        stack.push_back(w);
      }
    }
  }
  return dist;
}

BicoloredTree BicoloredTree::contracted() const {
  UnionFind uf(vertex_count_);
  for (const auto& e : edges_) {
    if (e.len && *e.len == 0) uf.unite(e.u, e.v);
  }
  std::vector<int> id(static_cast<std::size_t>(vertex_count_), -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    const int r = uf.find(v);
    if (id[static_cast<std::size_t>(r)] < 0) id[static_cast<std::size_t>(r)] = next++;
  }
  auto map = [&](int v) { return id[static_cast<std::size_t>(uf.find(v))]; };
  std::vector<TreeLeaf> leaves = leaves_;
  for (auto& l : leaves) l.vertex = map(l.vertex);
  std::vector<TreeEdge> edges;
  for (const auto& e : edges_) {
    if (e.len && *e.len == 0) continue;
    edges.push_back({map(e.u), map(e.v), e.len});
  }
  return BicoloredTree(next, std::move(leaves), std::move(edges));
}

void BicoloredTree::check_cuts() const {
  const auto adj = internal_adjacency();
  for (const auto& e : internal_edges()) {
    // colours on the side of e.u after removing e
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count_), false);
    seen[static_cast<std::size_t>(e.u)] = true;
    seen[static_cast<std::size_t>(e.v)] = true;
    std::vector<int> stack{e.u};
    std::vector<int> side{e.u};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [w, len] : adj[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        side.push_back(w);
        stack.push_back(w);
      }
    }
    std::vector<bool> in_side(static_cast<std::size_t>(vertex_count_), false);
    for (int v : side) in_side[static_cast<std::size_t>(v)] = true;
    int colours[2][2] = {{0, 0}, {0, 0}};
    for (const auto& l : leaves_) {
      const int a = attachment(l.color, l.index);
      colours[in_side[static_cast<std::size_t>(a)] ? 0 : 1][l.color == Color::Red ? 0 : 1]++;
    }
    for (auto& s : colours) {
      if (s[0] == 0 || s[1] == 0) {
        throw Error(ErrorKind::InvalidTree, "internal edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                                " has a side missing a colour");
      }
    }
  }
}

std::string BicoloredTree::to_dot() const {
  std::ostringstream os;
  os << "graph tree {\n";
  for (int v = 0; v < vertex_count_; ++v) {
    if (is_leaf_vertex(v)) {
      const TreeLeaf& l = leaves_[static_cast<std::size_t>(leaf_at_[static_cast<std::size_t>(v)])];
      const bool red = l.color == Color::Red;
      os << "  v" << v << " [label=\"" << (red ? "R" : "B") << l.index + 1 << "\", color=" << (red ? "red" : "blue")
         << "];\n";
    } else {
      os << "  v" << v << " [shape=point];\n";
    }
  }
  for (const auto& e : edges_) {
    os << "  v" << e.u << " -- v" << e.v;
    if (e.len) os << " [label=\"" << to_string(*e.len) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<std::vector<Rational>> attachment_metric(const BicoloredTree& t) {
  const int d = t.red_count();
  const int n = t.blue_count();
  std::vector<int> att;
  for (int i = 0; i < d; ++i) att.push_back(t.attachment(Color::Red, i));
  for (int j = 0; j < n; ++j) att.push_back(t.attachment(Color::Blue, j));
  const auto dist = t.internal_distances();
  std::vector<std::vector<Rational>> m(att.size(), std::vector<Rational>(att.size()));
  for (std::size_t x = 0; x < att.size(); ++x) {
    for (std::size_t y = 0; y < att.size(); ++y) {
      m[x][y] = dist[static_cast<std::size_t>(att[x])][static_cast<std::size_t>(att[y])];
    }
  }
  return m;
}

std::vector<std::vector<Rational>> rank2_metric(const TropMatrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  auto spread = [](const std::vector<Rational>& diff) {
    const auto [lo, hi] = std::minmax_element(diff.begin(), diff.end());
    return std::pair<Rational, Rational>(*lo, *hi);
  };
  std::vector<std::vector<Rational>> m(d + n, std::vector<Rational>(d + n, Rational(0)));
  std::vector<Rational> lambda(d, Rational(0)), mu(n, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Rational> diff;
      for (std::size_t j = 0; j < n; ++j) diff.push_back(a(i, j) - a(k, j));
      const auto [lo, hi] = spread(diff);
      m[i][k] = hi - lo;
      if (i == 0) lambda[k] = -(hi + lo);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<Rational> diff;
      for (std::size_t i = 0; i < d; ++i) diff.push_back(a(i, j) - a(i, l));
      const auto [lo, hi] = spread(diff);
      m[d + j][d + l] = hi - lo;
      if (j == 0) mu[l] = -(hi + lo);
    }
  }
  std::optional<Rational> low;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = -2 * a(i, j) + lambda[i] + mu[j];
      m[i][d + j] = v;
      if (!low || v < *low) low = v;
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][d + j] -= *low;
      m[d + j][i] = m[i][d + j];
    }
  }
  return m;
}

BicoloredTree tree_from_metric(const std::vector<std::vector<Rational>>& metric, const std::vector<Color>& colors,
                               const std::vector<int>& indices) {
  const std::size_t k = metric.size();
  if (k == 0 || colors.size() != k || indices.size() != k) throw Error(ErrorKind::DimensionMismatch, "metric size");
  // internal tree: adjacency maps vertex -> (neighbour -> length)
  std::vector<std::map<int, Rational>> adj(1);
  std::vector<int> where(k, -1);
  where[0] = 0;
  auto path = [&adj](int from, int to) {
    std::vector<int> parent(adj.size(), -1);
    std::vector<int> stack{from};
    parent[static_cast<std::size_t>(from)] = from;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [w, len] : adj[static_cast<std::size_t>(u)]) {
        if (parent[static_cast<std::size_t>(w)] >= 0) continue;
        parent[static_cast<std::size_t>(w)] = u;
        stack.push_back(w);
      }
    }
    std::vector<int> p{to};
    while (p.back() != from) p.push_back(parent[static_cast<std::size_t>(p.back())]);
    std::reverse(p.begin(), p.end());
    return p;
  };
  for (std::size_t p = 1; p < k; ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      if (metric[p][q] == 0) {
        where[p] = where[q];
        break;
      }
    }
    if (where[p] >= 0) continue;
    // closest point of the current span: minimise the distance from p to
    // the path between two inserted points
    std::size_t bx = 0, by = 0;
    Rational best = metric[p][0];
    for (std::size_t x = 0; x < p; ++x) {
      for (std::size_t y = x; y < p; ++y) {
        Rational g = (metric[p][x] + metric[p][y] - metric[x][y]) / 2;
        if (g < best) {
          best = g;
          bx = x;
          by = y;
        }
      }
    }
    if (best < 0) throw Error(ErrorKind::InvalidArgument, "input is not a tree metric");
    const Rational along = metric[p][bx] - best;
    const std::vector<int> route = path(where[bx], where[by]);
    Rational walked = 0;
    int anchor = -1;
    for (std::size_t s = 0; s < route.size(); ++s) {
      if (walked == along) {
        anchor = route[s];
        break;
      }
      if (s + 1 == route.size()) break;
      const int u = route[s], w = route[s + 1];
      const Rational len = adj[static_cast<std::size_t>(u)].at(w);
      if (along < walked + len) {
        anchor = static_cast<int>(adj.size());
        adj.emplace_back();
        adj[static_cast<std::size_t>(u)].erase(w);
        adj[static_cast<std::size_t>(w)].erase(u);
        adj[static_cast<std::size_t>(u)][anchor] = along - walked;
        adj[static_cast<std::size_t>(anchor)][u] = along - walked;
        adj[static_cast<std::size_t>(w)][anchor] = walked + len - along;
        adj[static_cast<std::size_t>(anchor)][w] = walked + len - along;
        break;
      }
      walked += len;
    }
    if (anchor < 0) throw Error(ErrorKind::InvalidArgument, "input is not a tree metric");
    if (best == 0) {
      where[p] = anchor;
    } else {
      const int fresh = static_cast<int>(adj.size());
      adj.emplace_back();
      adj[static_cast<std::size_t>(anchor)][fresh] = best;
      adj[static_cast<std::size_t>(fresh)][anchor] = best;
      where[p] = fresh;
    }
  }
  const int internal = static_cast<int>(adj.size());
  std::vector<TreeEdge> edges;
  for (int u = 0; u < internal; ++u) {
    for (const auto& [w, len] : adj[static_cast<std::size_t>(u)]) {
      if (u < w) edges.push_back({u, w, len});
    }
  }
  std::vector<TreeLeaf> leaves;
  for (std::size_t p = 0; p < k; ++p) {
    const int v = internal + static_cast<int>(p);
    leaves.push_back({colors[p], indices[p], v});
    edges.push_back({v, where[p], std::nullopt});
  }
  BicoloredTree t(internal + static_cast<int>(k), std::move(leaves), std::move(edges));
  if (attachment_metric(t) != metric) throw Error(ErrorKind::InvalidArgument, "input is not a tree metric");
  return t;
}

BicoloredTree tree_from_rank2(const TropMatrix& a) {
  const int r = trop_rank(a);
  if (r > 2) throw Error(ErrorKind::RankTooHigh, "tropical rank " + std::to_string(r) + " exceeds 2");
  std::vector<Color> colors;
  std::vector<int> indices;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    colors.push_back(Color::Red);
    indices.push_back(static_cast<int>(i));
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    colors.push_back(Color::Blue);
    indices.push_back(static_cast<int>(j));
  }
  return tree_from_metric(rank2_metric(a), colors, indices);
}

TropMatrix tree_to_matrix(const BicoloredTree& t) {
  t.check_cuts();
  const int d = t.red_count();
  const int n = t.blue_count();
  if (d == 0 || n == 0) throw Error(ErrorKind::InvalidTree, "tree needs both colours");
  const auto m = attachment_metric(t);
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(n)));
  auto raw = [&](std::size_t i, std::size_t j) { return -m[i][static_cast<std::size_t>(d) + j] / 2; };
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] = raw(i, j) - raw(i, 0) - raw(0, j) + raw(0, 0);
  }
  return TropMatrix(std::move(a));
}

bool same_metric_tree(const BicoloredTree& x, const BicoloredTree& y) {
  if (x.red_count() != y.red_count() || x.blue_count() != y.blue_count()) return false;
  if (attachment_metric(x) != attachment_metric(y)) return false;
  const BicoloredTree cx = x.contracted(), cy = y.contracted();
  if (cx.internal_vertices().size() != cy.internal_vertices().size()) return false;
  auto lengths = [](const BicoloredTree& t) {
    std::vector<Rational> l;
    for (const auto& e : t.internal_edges()) l.push_back(*e.len);
    std::sort(l.begin(), l.end());
    return l;
  };
  return lengths(cx) == lengths(cy);
}

bool is_caterpillar(const BicoloredTree& t) {
  const BicoloredTree c = t.contracted();
  const auto adj = c.internal_adjacency();
  return std::all_of(adj.begin(), adj.end(), [](const auto& nb) { return nb.size() <= 2; });
}

Spine caterpillar_spine(const BicoloredTree& t) {
  if (!is_caterpillar(t)) throw Error(ErrorKind::NotCaterpillar, "internal vertices do not lie on a path");
  const BicoloredTree c = t.contracted();
  const auto adj = c.internal_adjacency();
  const auto internal = c.internal_vertices();
  int start = internal.front();
  for (int v : internal) {
    if (adj[static_cast<std::size_t>(v)].size() <= 1) {
      start = v;
      break;
    }
  }
  std::vector<Rational> pos(static_cast<std::size_t>(c.vertex_count()), Rational(0));
  int prev = -1, cur = start;
  Rational at = 0;
  while (true) {
    pos[static_cast<std::size_t>(cur)] = at;
    int next = -1;
    for (const auto& [w, len] : adj[static_cast<std::size_t>(cur)]) {
      if (w != prev) {
        next = w;
        at += len;
      }
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  Spine s;
  s.length = at;
  for (int i = 0; i < c.red_count(); ++i) s.red.push_back(pos[static_cast<std::size_t>(c.attachment(Color::Red, i))]);
  for (int j = 0; j < c.blue_count(); ++j) s.blue.push_back(pos[static_cast<std::size_t>(c.attachment(Color::Blue, j))]);
  return s;
}

std::string to_string(SymbicClass c) {
  switch (c) {
    case SymbicClass::NotSymmetricSwap: return "not_symmetric_swap";
    case SymbicClass::SwapNotAutomorphism: return "swap_not_automorphism";
    case SymbicClass::FixedSetNotPath: return "fixed_set_not_path";
    case SymbicClass::Symbic: return "symbic";
  }
  return "unknown";
}

SymbicInfo symbic_info(const BicoloredTree& t) {
  SymbicInfo info;
  info.tree = t.contracted();
  const BicoloredTree& c = info.tree;
  const int n = c.red_count();
  if (n != c.blue_count()) return info;
  const auto m = attachment_metric(c);
  const std::size_t un = static_cast<std::size_t>(n);
  auto swap = [un](std::size_t k) { return k < un ? k + un : k - un; };
  for (std::size_t x = 0; x < 2 * un; ++x) {
    for (std::size_t y = 0; y < 2 * un; ++y) {
      if (m[x][y] != m[swap(x)][swap(y)]) {
        info.cls = SymbicClass::SwapNotAutomorphism;
        return info;
      }
    }
  }
  std::vector<int> att;
  for (int i = 0; i < n; ++i) att.push_back(c.attachment(Color::Red, i));
  for (int i = 0; i < n; ++i) att.push_back(c.attachment(Color::Blue, i));
  const auto dist = c.internal_distances();
  std::map<std::vector<Rational>, int> by_signature;
  auto signature = [&](int v, bool swapped) {
    std::vector<Rational> s;
    for (std::size_t k = 0; k < att.size(); ++k) {
      s.push_back(dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(att[swapped ? swap(k) : k])]);
    }
    return s;
  };
  const auto internal = c.internal_vertices();
  for (int v : internal) by_signature[signature(v, false)] = v;
  info.vertex_map.assign(static_cast<std::size_t>(c.vertex_count()), -1);
  for (int v : internal) {
    auto it = by_signature.find(signature(v, true));
    if (it == by_signature.end()) {
      info.cls = SymbicClass::SwapNotAutomorphism;
      return info;
    }
    info.vertex_map[static_cast<std::size_t>(v)] = it->second;
  }
  for (int i = 0; i < n; ++i) {
    const int r = c.leaf_vertex(Color::Red, i), b = c.leaf_vertex(Color::Blue, i);
    info.vertex_map[static_cast<std::size_t>(r)] = b;
    info.vertex_map[static_cast<std::size_t>(b)] = r;
  }
  const auto& phi = info.vertex_map;
  for (int v : internal) {
    if (phi[static_cast<std::size_t>(v)] == v) info.fixed_vertices.push_back(v);
  }
  std::vector<int> fixed_degree(static_cast<std::size_t>(c.vertex_count()), 0);
  for (const auto& e : c.internal_edges()) {
    if (phi[static_cast<std::size_t>(e.u)] == e.u && phi[static_cast<std::size_t>(e.v)] == e.v) {
      info.fixed_edges.emplace_back(e.u, e.v);
      ++fixed_degree[static_cast<std::size_t>(e.u)];
      ++fixed_degree[static_cast<std::size_t>(e.v)];
    } else if (phi[static_cast<std::size_t>(e.u)] == e.v && phi[static_cast<std::size_t>(e.v)] == e.u) {
      info.reversed_edge = std::make_pair(e.u, e.v);
    }
  }
  if (info.fixed_vertices.empty()) {
    // an involution of a tree without fixed vertex flips exactly one edge
    info.cls = SymbicClass::Symbic;
    info.one_fixed_point = true;
    return info;
  }
  info.reversed_edge.reset();
  const bool path = std::all_of(fixed_degree.begin(), fixed_degree.end(), [](int d) { return d <= 2; });
  info.cls = path ? SymbicClass::Symbic : SymbicClass::FixedSetNotPath;
  info.one_fixed_point = path && info.fixed_vertices.size() == 1;
  return info;
}

SymbicClass symbic_classify(const BicoloredTree& t) { return symbic_info(t).cls; }

bool one_fixed_point(const BicoloredTree& t) {
  const SymbicInfo info = symbic_info(t);
  return info.cls == SymbicClass::Symbic && info.one_fixed_point;
}

BicoloredTree random_bicolored_tree(std::uint64_t seed, int d, int n, int max_len) {
  if (d < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "need at least one leaf of each colour");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int k = uniform(1, std::max(1, d + n - 2));
  std::vector<std::map<int, Rational>> adj(static_cast<std::size_t>(k));
  for (int v = 1; v < k; ++v) {
    const int p = uniform(0, v - 1);
    const Rational len(uniform(1, max_len));
    adj[static_cast<std::size_t>(v)][p] = len;
    adj[static_cast<std::size_t>(p)][v] = len;
  }
  std::vector<int> red_at, blue_at;
  for (int i = 0; i < d; ++i) red_at.push_back(uniform(0, k - 1));
  for (int j = 0; j < n; ++j) blue_at.push_back(uniform(0, k - 1));
  auto build = [&]() {
    std::vector<TreeEdge> edges;
    for (int u = 0; u < k; ++u) {
      for (const auto& [w, len] : adj[static_cast<std::size_t>(u)]) {
        if (u < w) edges.push_back({u, w, len});
      }
    }
    std::vector<TreeLeaf> leaves;
    int v = k;
    for (int i = 0; i < d; ++i, ++v) {
      leaves.push_back({Color::Red, i, v});
      edges.push_back({v, red_at[static_cast<std::size_t>(i)], std::nullopt});
    }
    for (int j = 0; j < n; ++j, ++v) {
      leaves.push_back({Color::Blue, j, v});
      edges.push_back({v, blue_at[static_cast<std::size_t>(j)], std::nullopt});
    }
    return BicoloredTree(v, std::move(leaves), std::move(edges));
  };
  // Zero out edges whose cut misses a colour; contracting only enlarges
  // the remaining sides, so one pass per edge suffices.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < k && !changed; ++u) {
      for (auto& [w, len] : adj[static_cast<std::size_t>(u)]) {
        if (len == 0 || u > w) continue;
        std::vector<bool> side(static_cast<std::size_t>(k), false);
        std::vector<int> stack{u};
        side[static_cast<std::size_t>(u)] = true;
        while (!stack.empty()) {
          const int x = stack.back();
          stack.pop_back();
          for (const auto& [y, l] : adj[static_cast<std::size_t>(x)]) {
            if ((x == u && y == w) || side[static_cast<std::size_t>(y)]) continue;
            side[static_cast<std::size_t>(y)] = true;
            stack.push_back(y);
          }
        }
        int cnt[2][2] = {{0, 0}, {0, 0}};
        for (int r : red_at) cnt[side[static_cast<std::size_t>(r)] ? 0 : 1][0]++;
        for (int b : blue_at) cnt[side[static_cast<std::size_t>(b)] ? 0 : 1][1]++;
        if (cnt[0][0] && cnt[0][1] && cnt[1][0] && cnt[1][1]) continue;
        len = 0;
        adj[static_cast<std::size_t>(w)][u] = 0;
        changed = true;
        break;
      }
    }
  }
  const BicoloredTree t = build().contracted();
  // Suppress leafless internal vertices of degree two by merging their edges.
  std::vector<bool> has_leaf(static_cast<std::size_t>(t.vertex_count()), false);
  for (const auto& l : t.leaves()) has_leaf[static_cast<std::size_t>(t.attachment(l.color, l.index))] = true;
  std::vector<bool> drop(static_cast<std::size_t>(t.vertex_count()), false);
  std::vector<TreeEdge> edges;
  for (const auto& e : t.edges()) {
    if (!e.len) edges.push_back(e);
  }
  std::vector<std::map<int, Rational>> g(static_cast<std::size_t>(t.vertex_count()));
  for (const auto& e : t.internal_edges()) {
    g[static_cast<std::size_t>(e.u)][e.v] = *e.len;
    g[static_cast<std::size_t>(e.v)][e.u] = *e.len;
  }
  for (int v : t.internal_vertices()) {
    auto& nb = g[static_cast<std::size_t>(v)];
    if (has_leaf[static_cast<std::size_t>(v)] || nb.size() != 2) continue;
    auto it = nb.begin();
    const auto [a, la] = *it++;
    const auto [b, lb] = *it;
    g[static_cast<std::size_t>(a)].erase(v);
    g[static_cast<std::size_t>(b)].erase(v);
    g[static_cast<std::size_t>(a)][b] = la + lb;
    g[static_cast<std::size_t>(b)][a] = la + lb;
    nb.clear();
    drop[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> id(static_cast<std::size_t>(t.vertex_count()), -1);
  int next = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (!drop[static_cast<std::size_t>(v)]) id[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<TreeEdge> out;
  for (const auto& e : edges) out.push_back({id[static_cast<std::size_t>(e.u)], id[static_cast<std::size_t>(e.v)], e.len});
  for (int u = 0; u < t.vertex_count(); ++u) {
    for (const auto& [w, len] : g[static_cast<std::size_t>(u)]) {
      if (u < w) out.push_back({id[static_cast<std::size_t>(u)], id[static_cast<std::size_t>(w)], len});
    }
  }
  std::vector<TreeLeaf> leaves = t.leaves();
  for (auto& l : leaves) l.vertex = id[static_cast<std::size_t>(l.vertex)];
  return BicoloredTree(next, std::move(leaves), std::move(out));
}

}  // namespace troplift
