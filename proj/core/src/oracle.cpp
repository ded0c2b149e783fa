#include "troplift/oracle.hpp"

#include "troplift/barvinok.hpp"
#include "troplift/errors.hpp"
#include "troplift/lp.hpp"
#include "troplift/trees.hpp"
#include "troplift/tropical.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace troplift {

namespace {

bool in_hull(const std::vector<std::vector<Rational>>& pts, const std::vector<std::size_t>& use,
             const std::vector<Rational>& target) {
  const std::size_t dim = target.size();
  std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(use.size(), Rational(0)));
  std::vector<Rational> b(dim + 1);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < use.size(); ++k) a[r][k] = pts[use[k]][r];
    b[r] = target[r];
  }
  for (std::size_t k = 0; k < use.size(); ++k) a[dim][k] = 1;
  b[dim] = 1;
  return lp_maximize(a, b, std::vector<Rational>(use.size(), Rational(0))).status == LpStatus::Optimal;
}

bool on_segment(const std::vector<Rational>& u, const std::vector<Rational>& v, const std::vector<Rational>& q) {
  std::optional<Rational> s;
  for (std::size_t r = 0; r < u.size(); ++r) {
    const Rational d = v[r] - u[r];
    const Rational off = q[r] - u[r];
    if (d == 0) {
      if (off != 0) return false;
      continue;
    }
    const Rational t = off / d;
    if (s && *s != t) return false;
    s = t;
  }
  return s && *s >= 0 && *s <= 1;
}

}  // namespace

HullResult brute_hull(const std::vector<std::vector<Rational>>& points, HullLimits limits) {
  if (points.size() > limits.max_points) throw Error(ErrorKind::SizeLimit, "too many points for the hull oracle");
  const std::size_t dim = points.empty() ? 0 : points[0].size();
  if (dim > limits.max_dim) throw Error(ErrorKind::SizeLimit, "dimension too large for the hull oracle");
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorKind::DimensionMismatch, "points of different dimension");
  }
  if (std::set<std::vector<Rational>>(points.begin(), points.end()).size() != points.size()) {
    throw Error(ErrorKind::InvalidArgument, "hull points must be distinct");
  }
  HullResult h;
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k != p) others.push_back(k);
    }
    if (others.empty() || !in_hull(points, others, points[p])) h.vertices.push_back(p);
  }
  // [u,v] is an edge iff the midpoint cannot put weight on points off the segment
  for (std::size_t x = 0; x < h.vertices.size(); ++x) {
    for (std::size_t y = x + 1; y < h.vertices.size(); ++y) {
      const auto& u = points[h.vertices[x]];
      const auto& v = points[h.vertices[y]];
      std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(points.size(), Rational(0)));
      std::vector<Rational> b(dim + 1), c(points.size(), Rational(0));
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t k = 0; k < points.size(); ++k) a[r][k] = points[k][r];
        b[r] = (u[r] + v[r]) / 2;
      }
      for (std::size_t k = 0; k < points.size(); ++k) {
        a[dim][k] = 1;
        if (!on_segment(u, v, points[k])) c[k] = 1;
      }
      b[dim] = 1;
      const LpResult r = lp_maximize(a, b, c);
      if (r.status == LpStatus::Optimal && r.value == 0) h.edges.emplace_back(h.vertices[x], h.vertices[y]);
    }
  }
  return h;
}

BruteFactorization brute_barvinok2(const TropMatrix& a) {
  const std::size_t d = a.rows(), n = a.cols();
  if (d > 4 || n > 4) throw Error(ErrorKind::SizeLimit, "factor search limited to 4 x 4");
  Integer l = 1;
  for (const auto& row : a.entries()) {
    for (const auto& x : row) l = boost::multiprecision::lcm(l, denominator_of(x));
  }
  std::vector<std::vector<std::int64_t>> v(d, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) v[i][j] = Integer(numerator_of(a(i, j)) * (l / denominator_of(a(i, j)))).convert_to<std::int64_t>();
  }
  // variables: B_ik at 2i+k, C'_kj = -C_kj at 2d + 2j + k
  const std::size_t vars = 2 * d + 2 * n;
  struct Arc {
    std::size_t from, to;
    std::int64_t w;
  };
  std::vector<Arc> arcs;
  std::vector<std::int64_t> dist(vars);
  const std::size_t cells = d * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    arcs.clear();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = (mask >> (i * n + j)) & 1;
        const std::size_t bk = 2 * i + k, ck = 2 * d + 2 * j + k;
        const std::size_t bo = 2 * i + (1 - k), co = 2 * d + 2 * j + (1 - k);
        // x_u - x_v <= w is the arc v -> u of weight w
        arcs.push_back({ck, bk, v[i][j]});   // B - C' <= a
        arcs.push_back({bk, ck, -v[i][j]});  // C' - B <= -a
        arcs.push_back({bo, co, -v[i][j]});  // other product >= a
      }
    }
    std::fill(dist.begin(), dist.end(), 0);
    bool changed = true;
    for (std::size_t it = 0; it <= vars && changed; ++it) {
      changed = false;
      for (const auto& e : arcs) {
        if (dist[e.from] + e.w < dist[e.to]) {
          dist[e.to] = dist[e.from] + e.w;
          changed = true;
        }
      }
    }
    if (changed) continue;  // negative cycle
    BruteFactorization r;
    TropMatrix b(d, 2), c(2, n);
    const Rational scale(Integer(1), l);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < 2; ++k) b.set(i, k, Rational(dist[2 * i + k]) * scale);
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < 2; ++k) c.set(k, j, Rational(-dist[2 * d + 2 * j + k]) * scale);
    }
    if (!(trop_mat_mul(b, c) == a)) throw Error(ErrorKind::InvalidArgument, "factor search produced a bad witness");
    r.holds = true;
    r.b = b;
    r.c = c;
    return r;
  }
  return {};
}

BruteFactorization brute_sym_barvinok2(const TropMatrix& a) {
  if (!a.is_symmetric_valued()) return {};
  const std::size_t n = a.rows();
  if (n > 4) throw Error(ErrorKind::SizeLimit, "symmetric factor search limited to 4 x 4");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  }
  const std::size_t vars = 2 * n;  // B_ik at 2i+k
  // the two inner columns are interchangeable: fix the type of cell (0,0)
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (cells.size() - 1)); ++mask) {
    std::vector<std::vector<Rational>> eq_a, ge_a;
    std::vector<Rational> eq_b, ge_b;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto [i, j] = cells[c];
      const std::size_t k = c == 0 ? 0 : (mask >> (c - 1)) & 1;
      std::vector<Rational> same(vars, Rational(0)), other(vars, Rational(0));
      same[2 * i + k] += 1;
      same[2 * j + k] += 1;
      other[2 * i + 1 - k] += 1;
      other[2 * j + 1 - k] += 1;
      eq_a.push_back(std::move(same));
      eq_b.push_back(a(i, j));
      ge_a.push_back(std::move(other));
      ge_b.push_back(a(i, j));
    }
    auto y = lp_feasible_point(vars, eq_a, eq_b, ge_a, ge_b);
    if (!y) continue;
    TropMatrix b(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < 2; ++k) b.set(i, k, (*y)[2 * i + k]);
    }
    if (!(trop_mat_mul(b, b.transpose()) == a)) {
      throw Error(ErrorKind::InvalidArgument, "symmetric factor search produced a bad witness");
    }
    BruteFactorization r;
    r.holds = true;
    r.b = b;
    return r;
  }
  return {};
}

TropMatrix cocircuit_fixture() {
  // point (x, y) of F_3^2 has index 3x + y
  std::set<std::set<int>> lines;
  const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  for (const auto& dir : dirs) {
    for (int x0 = 0; x0 < 3; ++x0) {
      for (int y0 = 0; y0 < 3; ++y0) {
        std::set<int> line;
        for (int s = 0; s < 3; ++s) line.insert(3 * ((x0 + s * dir[0]) % 3) + (y0 + s * dir[1]) % 3);
        lines.insert(line);
      }
    }
  }
  std::vector<std::vector<Rational>> m(9, std::vector<Rational>(lines.size(), Rational(0)));
  std::size_t col = 0;
  for (const auto& line : lines) {
    for (int p : line) m[static_cast<std::size_t>(p)][col] = 1;
    ++col;
  }
  return TropMatrix(std::move(m));
}

TropMatrix random_int_matrix(std::mt19937_64& rng, std::size_t d, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> u(lo, hi);
  std::vector<std::vector<Rational>> e(d, std::vector<Rational>(n));
  for (auto& row : e) {
    for (auto& x : row) x = u(rng);
  }
  return TropMatrix(std::move(e));
}

TropMatrix random_symmetric_int_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> u(lo, hi);
  std::vector<std::vector<Rational>> e(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) e[i][j] = e[j][i] = u(rng);
  }
  return TropMatrix(std::move(e), true);
}

TropMatrix random_rank2_matrix(std::mt19937_64& rng, int d, int n) {
  const BicoloredTree t = random_bicolored_tree(rng(), d, n);
  TropMatrix a = tree_to_matrix(t);
  std::uniform_int_distribution<long> u(-3, 3);
  std::vector<long> row(static_cast<std::size_t>(d)), col(static_cast<std::size_t>(n));
  for (auto& x : row) x = u(rng);
  for (auto& x : col) x = u(rng);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(i, j, a(i, j) + row[i] + col[j]);
  }
  return a;
}

std::vector<OracleReport> run_verify_suite(std::uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<OracleReport> out;
  auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };
  const int top = std::max(1, std::min(max_n, 7));
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % top);
    const TropMatrix a = random_int_matrix(rng, n, n, -9, 9);
    const Rational fast = trop_det(a, std::max(max_n, static_cast<int>(n))).min_value;
    const Rational brute = trop_det_hungarian(a);
    out.push_back({"trop_det", a.str(), to_string(fast), to_string(brute), fast == brute});
  }
  const int small = std::max(2, std::min(max_n, 4));
  for (int k = 0; k < 30; ++k) {
    const int d = 2 + k % (small - 1), n = 2 + (k / 2) % (small - 1);
    const TropMatrix a = k % 3 == 0 ? random_int_matrix(rng, static_cast<std::size_t>(d), static_cast<std::size_t>(n), 0, 4)
                                    : random_rank2_matrix(rng, d, n);
    const bool fast = barvinok_rank2(a).holds;
    const bool brute = brute_barvinok2(a).holds;
    out.push_back({"barvinok_rank2", a.str(), yes_no(fast), yes_no(brute), fast == brute});
  }
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % (small - 1));
    const TropMatrix a = random_symmetric_int_matrix(rng, n, 0, 4);
    const bool fast = sym_barvinok_rank2(a).holds;
    const bool brute = brute_sym_barvinok2(a).holds;
    out.push_back({"sym_barvinok_rank2", a.str(), yes_no(fast), yes_no(brute), fast == brute});
  }
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    const auto classes = sym_det_monomials(n);
    std::vector<std::vector<Rational>> pts;
    for (const auto& c : classes) {
      std::vector<Rational> p;
      for (int x : exponent_point(c)) p.emplace_back(x);
      pts.push_back(std::move(p));
    }
    const HullResult h = brute_hull(pts);
    std::set<std::pair<std::size_t, std::size_t>> fast_edges, brute_edges(h.edges.begin(), h.edges.end());
    std::set<std::size_t> fast_vertices, brute_vertices(h.vertices.begin(), h.vertices.end());
    for (std::size_t x = 0; x < classes.size(); ++x) {
      if (is_polytope_vertex(classes[x])) fast_vertices.insert(x);
      for (std::size_t y = x + 1; y < classes.size(); ++y) {
        if (is_polytope_edge(classes[x], classes[y])) fast_edges.insert({x, y});
      }
    }
    const std::string inst = "n=" + std::to_string(n);
    out.push_back({"polytope_vertices", inst, std::to_string(fast_vertices.size()), std::to_string(brute_vertices.size()),
                   fast_vertices == brute_vertices});
    out.push_back({"polytope_edges", inst, std::to_string(fast_edges.size()), std::to_string(brute_edges.size()),
                   fast_edges == brute_edges});
  }
  for (int n = 2; n <= std::min(max_n, 4); ++n) {
    std::vector<Permutation> perms;
    Permutation p = identity_permutation(n);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<Rational>> pts;
    for (const auto& q : perms) {
      std::vector<Rational> pt(static_cast<std::size_t>(n * n), Rational(0));
      for (int i = 0; i < n; ++i) pt[static_cast<std::size_t>(i * n + q[static_cast<std::size_t>(i)])] = 1;
      pts.push_back(std::move(pt));
    }
    const HullResult h = brute_hull(pts, {200, 64});
    std::set<std::pair<std::size_t, std::size_t>> fast, brute(h.edges.begin(), h.edges.end());
    for (std::size_t x = 0; x < perms.size(); ++x) {
      for (std::size_t y = x + 1; y < perms.size(); ++y) {
        if (birkhoff_edge(perms[x], perms[y])) fast.insert({x, y});
      }
    }
    out.push_back({"birkhoff_edge", "n=" + std::to_string(n), std::to_string(fast.size()), std::to_string(brute.size()),
                   fast == brute});
  }
  const TropMatrix cc = cocircuit_fixture();
  const int r = trop_rank(cc);
  out.push_back({"cocircuit_rank", "AG(2,3)", std::to_string(r), "3", r == 3});
  return out;
}

}  // namespace troplift
