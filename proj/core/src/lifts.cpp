#include "troplift/lifts.hpp"

#include "troplift/barvinok.hpp"
#include "troplift/errors.hpp"
#include "troplift/trees.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace troplift {

std::string to_string(ClaimedProperty p) {
  switch (p) {
    case ClaimedProperty::Rank2: return "rank<=2";
    case ClaimedProperty::SymRank2: return "symmetric rank<=2";
    case ClaimedProperty::Singular: return "singular";
    case ClaimedProperty::SymSingular: return "symmetric singular";
  }
  return "unknown";
}

std::string to_string(Positivity p) { return p == Positivity::AllPositive ? "all-positive" : "none"; }

namespace {

PuiseuxSeries mono(const Rational& c, const Rational& e) { return PuiseuxSeries::monomial(QuadExt(c), e); }

std::string pos(std::size_t i, std::size_t j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

bool is_symmetric_claim(ClaimedProperty p) {
  return p == ClaimedProperty::SymRank2 || p == ClaimedProperty::SymSingular;
}

SeriesMatrix sub_series(const SeriesMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  SeriesMatrix s;
  for (auto r : rows) {
    std::vector<PuiseuxSeries> row;
    for (auto c : cols) row.push_back(m[r][c]);
    s.push_back(std::move(row));
  }
  return s;
}

// A determinant that is supposed to vanish: exactly, or with no known term
// below its truncation order, which must lie above the tropical value.
struct ZeroCheck {
  bool ok = true;
  bool exact = true;
  std::optional<Rational> order;
};

void check_vanishes(const PuiseuxSeries& det, const Rational& trop_value, ZeroCheck& z) {
  if (!det.has_no_terms()) {
    z.ok = false;
    return;
  }
  if (det.is_exact()) return;
  z.exact = false;
  if (!z.order || *det.trunc() < *z.order) z.order = *det.trunc();
  if (*det.trunc() <= trop_value) z.ok = false;
}

std::string zero_detail(const ZeroCheck& z) {
  if (z.exact) return "exact";
  return "to order t^" + to_string(*z.order);
}

class Coefficients {
 public:
  explicit Coefficients(std::uint64_t seed) : rng_(seed) {}
  Rational draw() {
    const long p = std::uniform_int_distribution<long>(1, 97)(rng_);
    const long q = std::uniform_int_distribution<long>(1, 7)(rng_);
    return Rational(p, q);
  }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

 private:
  std::mt19937_64 rng_;
};

Rational default_trunc(const TropMatrix& a, const LiftOptions& opts) {
  if (opts.trunc) return *opts.trunc;
  return a.max_abs() * Rational(static_cast<long>(a.rows())) + 20;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, const TropMatrix& a) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (int k = 0; k < 8; ++k) mix(static_cast<unsigned char>(master >> (8 * k)));
  for (char ch : a.str()) mix(static_cast<unsigned char>(ch));
  return h;
}

std::vector<TranscriptStep> verify_lift(const LiftCertificate& cert) {
  std::vector<TranscriptStep> out;
  const TropMatrix& a = cert.target;
  const SeriesMatrix& m = cert.lift;
  bool shape = m.size() == a.rows();
  for (const auto& row : m) shape = shape && row.size() == a.cols();
  out.push_back({"shape", shape, std::to_string(a.rows()) + "x" + std::to_string(a.cols())});
  if (!shape) return out;

  bool ok = true;
  std::string detail = "every entry has the target valuation";
  for (std::size_t i = 0; i < a.rows() && ok; ++i) {
    for (std::size_t j = 0; j < a.cols() && ok; ++j) {
      try {
        const auto v = ps_val(m[i][j]);
        if (!v || *v != a(i, j)) {
          ok = false;
          detail = "entry " + pos(i, j) + " has valuation " + (v ? to_string(*v) : "inf") + ", target " +
                   to_string(a(i, j));
        }
      } catch (const Error&) {
        ok = false;
        detail = "entry " + pos(i, j) + " has unknown valuation";
      }
    }
  }
  out.push_back({"valuation", ok, detail});

  if (is_symmetric_claim(cert.claimed)) {
    bool sym = a.is_square();
    for (std::size_t i = 0; i < m.size() && sym; ++i) {
      for (std::size_t j = 0; j < i && sym; ++j) sym = m[i][j] == m[j][i];
    }
    out.push_back({"symmetric", sym, sym ? "lift equals its transpose" : "lift is not symmetric"});
  }

  if (cert.positivity == Positivity::AllPositive) {
    bool positive = true;
    std::string where = "every leading coefficient is positive";
    for (std::size_t i = 0; i < m.size() && positive; ++i) {
      for (std::size_t j = 0; j < m[i].size() && positive; ++j) {
        try {
          positive = ps_lead_sign(m[i][j]) > 0;
        } catch (const Error&) {
          positive = false;
        }
        if (!positive) where = "entry " + pos(i, j) + " is not positive";
      }
    }
    out.push_back({"positivity", positive, where});
  }

  if (cert.claimed == ClaimedProperty::Rank2 || cert.claimed == ClaimedProperty::SymRank2) {
    ZeroCheck z;
    int count = 0;
    for_each_subset(a.rows(), 3, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(a.cols(), 3, [&](const std::vector<std::size_t>& cols) {
        ++count;
        const Rational trop = trop_det_hungarian(a.submatrix(rows, cols));
        check_vanishes(ps_det(sub_series(m, rows, cols)), trop, z);
        return !z.ok;
      });
      return !z.ok;
    });
    out.push_back({"rank<=2", z.ok,
                   std::to_string(count) + " 3x3 minors vanish " + (z.ok ? zero_detail(z) : "(failed)")});
  } else {
    ZeroCheck z;
    bool square = a.is_square();
    if (square) check_vanishes(ps_det(m), trop_det_hungarian(a), z);
    out.push_back({"singular", square && z.ok, square ? "determinant vanishes " + (z.ok ? zero_detail(z) : "(failed)")
                                                      : "matrix is not square"});
  }
  return out;
}

void certify(LiftCertificate& cert) {
  const auto steps = verify_lift(cert);
  bool ok = std::all_of(cert.transcript.begin(), cert.transcript.end(), [](const TranscriptStep& s) { return s.passed; });
  for (const auto& s : steps) {
    ok = ok && s.passed;
    cert.transcript.push_back(s);
  }
  cert.valid = ok;
}

namespace {

LiftCertificate finish(const TropMatrix& a, SeriesMatrix lift, ClaimedProperty claimed, Positivity positivity,
                       std::string construction, std::vector<TranscriptStep> notes = {}) {
  LiftCertificate cert;
  cert.target = a;
  cert.lift = std::move(lift);
  cert.claimed = claimed;
  cert.positivity = positivity;
  cert.construction = std::move(construction);
  cert.transcript = std::move(notes);
  certify(cert);
  return cert;
}

// Vertices of a tree placed as balls {y : val(y - center) >= radius}.
struct Ball {
  PuiseuxSeries center;
  Rational radius;
};

PuiseuxSeries branch(const Ball& b, long direction) { return b.center + mono(Rational(direction), b.radius); }

}  // namespace

LiftCertificate lift_rank2_positive(const TropMatrix& a) {
  const BarvinokResult f = barvinok_rank2(a);
  if (!f.holds) throw Error(ErrorKind::NotBarvinok2, f.reason);
  const TropMatrix& b = *f.b;
  const TropMatrix& c = *f.c;
  SeriesMatrix lift(a.rows(), std::vector<PuiseuxSeries>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.cols(); ++k) lift[i][j] = lift[i][j] + mono(1, b(i, k) + c(k, j));
    }
  }
  return finish(a, std::move(lift), ClaimedProperty::Rank2, Positivity::AllPositive, "monomial factorization product",
                {{"factorization", true, "A = B (.) C with inner dimension " + std::to_string(b.cols())}});
}

LiftCertificate lift_rank2_real(const TropMatrix& a) {
  const BicoloredTree t = tree_from_rank2(a).contracted();
  const auto adj = t.internal_adjacency();
  const auto internal = t.internal_vertices();
  const std::size_t nv = static_cast<std::size_t>(t.vertex_count());
  std::vector<std::optional<Ball>> ball(nv);
  std::vector<long> next(nv, 1);
  std::deque<int> queue{internal.front()};
  ball[static_cast<std::size_t>(internal.front())] = Ball{PuiseuxSeries(), Rational(0)};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const Ball bu = *ball[static_cast<std::size_t>(u)];
    for (const auto& [w, len] : adj[static_cast<std::size_t>(u)]) {
      if (ball[static_cast<std::size_t>(w)]) continue;
      ball[static_cast<std::size_t>(w)] = Ball{branch(bu, next[static_cast<std::size_t>(u)]++), bu.radius + len};
      queue.push_back(w);
    }
  }
  auto leaf_point = [&](Color col, int idx) {
    const auto w = static_cast<std::size_t>(t.attachment(col, idx));
    return branch(*ball[w], next[w]++);
  };
  std::vector<PuiseuxSeries> x, y;
  for (std::size_t i = 0; i < a.rows(); ++i) x.push_back(leaf_point(Color::Red, static_cast<int>(i)));
  for (std::size_t j = 0; j < a.cols(); ++j) y.push_back(leaf_point(Color::Blue, static_cast<int>(j)));
  auto val = [&](std::size_t i, std::size_t j) { return *ps_val(y[j] - x[i]); };
  std::vector<Rational> alpha(a.rows()), beta(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) alpha[i] = a(i, 0) - val(i, 0);
  for (std::size_t j = 0; j < a.cols(); ++j) beta[j] = a(0, j) - val(0, j) - alpha[0];
  SeriesMatrix lift(a.rows(), std::vector<PuiseuxSeries>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (val(i, j) + alpha[i] + beta[j] != a(i, j)) {
        throw Error(ErrorKind::InvalidTree, "tree embedding does not reproduce entry " + pos(i, j));
      }
      lift[i][j] = (y[j] - x[i]).shifted(alpha[i] + beta[j]);
    }
  }
  return finish(a, std::move(lift), ClaimedProperty::Rank2, Positivity::None, "tree embedding (y_j - x_i)",
                {{"embedding", true, std::to_string(internal.size()) + " internal vertices placed as balls"}});
}

namespace {

// Points x_i with val(x_i + x_j) + l_i + l_j = a_ij: the symbic tree is
// placed so that the colour swap acts as negation.
std::vector<PuiseuxSeries> symbic_points(const SymbicInfo& info, std::size_t n, std::string& note) {
  const BicoloredTree& t = info.tree;
  const auto adj = t.internal_adjacency();
  const auto& phi = info.vertex_map;
  const std::size_t nv = static_cast<std::size_t>(t.vertex_count());
  std::vector<std::optional<Ball>> ball(nv);
  std::vector<bool> primary(nv, false), fixed(nv, false);
  std::vector<long> next(nv, 1);
  std::deque<int> queue;
  for (int v : info.fixed_vertices) fixed[static_cast<std::size_t>(v)] = true;

  if (!info.fixed_vertices.empty()) {
    std::vector<std::vector<std::pair<int, Rational>>> path_adj(nv);
    for (const auto& [u, v] : info.fixed_edges) {
      for (const auto& [w, len] : adj[static_cast<std::size_t>(u)]) {
        if (w == v) {
          path_adj[static_cast<std::size_t>(u)].emplace_back(v, len);
          path_adj[static_cast<std::size_t>(v)].emplace_back(u, len);
        }
      }
    }
    int start = info.fixed_vertices.front();
    for (int v : info.fixed_vertices) {
      if (path_adj[static_cast<std::size_t>(v)].size() <= 1) {
        start = v;
        break;
      }
    }
    int prev = -1, cur = start;
    Rational depth = 0;
    while (cur >= 0) {
      ball[static_cast<std::size_t>(cur)] = Ball{PuiseuxSeries(), depth};
      primary[static_cast<std::size_t>(cur)] = true;
      queue.push_back(cur);
      int nxt = -1;
      for (const auto& [w, len] : path_adj[static_cast<std::size_t>(cur)]) {
        if (w != prev) {
          nxt = w;
          depth += len;
        }
      }
      prev = cur;
      cur = nxt;
    }
    note = "fixed path of " + std::to_string(info.fixed_vertices.size()) + " vertices on the line through 0";
  } else {
    const auto [u, v] = *info.reversed_edge;
    Rational len = 0;
    for (const auto& [w, l] : adj[static_cast<std::size_t>(u)]) {
      if (w == v) len = l;
    }
    ball[static_cast<std::size_t>(u)] = Ball{mono(1, 0), len / 2};
    ball[static_cast<std::size_t>(v)] = Ball{mono(-1, 0), len / 2};
    primary[static_cast<std::size_t>(u)] = true;
    queue.push_back(u);
    note = "reversed edge with midpoint on the line through 0";
  }

  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const Ball bu = *ball[static_cast<std::size_t>(u)];
    for (const auto& [w, len] : adj[static_cast<std::size_t>(u)]) {
      const auto sw = static_cast<std::size_t>(w);
      if (ball[sw]) continue;
      const Ball child{branch(bu, next[static_cast<std::size_t>(u)]++), bu.radius + len};
      ball[sw] = child;
      primary[sw] = true;
      ball[static_cast<std::size_t>(phi[sw])] = Ball{-child.center, child.radius};
      queue.push_back(w);
    }
  }

  std::vector<PuiseuxSeries> x;
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = static_cast<std::size_t>(t.attachment(Color::Red, static_cast<int>(i)));
    if (fixed[w] || primary[w]) {
      x.push_back(branch(*ball[w], next[w]++));
    } else {
      const auto p = static_cast<std::size_t>(phi[w]);
      x.push_back(-branch(*ball[p], next[p]++));
    }
  }
  return x;
}

}  // namespace

LiftCertificate lift_sym_caterpillar(const TropMatrix& a, int max_n) {
  if (!a.is_symmetric_valued()) throw Error(ErrorKind::InvalidArgument, "symmetric matrix expected");
  const std::size_t n = a.rows();
  const SymbicInfo info = symbic_info(tree_from_rank2(a));
  if (info.cls != SymbicClass::Symbic || !is_caterpillar(info.tree)) {
    throw Error(ErrorKind::NotCaterpillar, "symmetric tree is " + to_string(info.cls) +
                                               (is_caterpillar(info.tree) ? "" : " and not a caterpillar"));
  }
  SeriesMatrix lift(n, std::vector<PuiseuxSeries>(n));
  if (info.one_fixed_point) {
    const BarvinokResult f = sym_barvinok_rank2(a, max_n);
    if (!f.holds) throw Error(ErrorKind::NotCaterpillar, f.reason);
    const TropMatrix& b = *f.b;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < b.cols(); ++k) lift[i][j] = lift[i][j] + mono(1, b(i, k) + b(j, k));
      }
    }
    return finish(a, std::move(lift), ClaimedProperty::SymRank2, Positivity::AllPositive,
                  "symmetric product t^B (t^B)^T", {{"one fixed point", true, "A = B (.) B^T"}});
  }

  // whole spine fixed: A_ij = min(d_i, d_j) + o_i + o_j with d the spine position
  const Spine spine = caterpillar_spine(info.tree);
  const Rational lo = *std::min_element(spine.red.begin(), spine.red.end());
  std::vector<Rational> d(n), o(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (spine.red[i] != spine.blue[i]) throw Error(ErrorKind::NotCaterpillar, "spine is not fixed by the swap");
    d[i] = spine.red[i] - lo;
    o[i] = (a(i, i) - d[i]) / 2;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::min(d[i], d[j]) + o[i] + o[j] != a(i, j)) {
        throw Error(ErrorKind::NotCaterpillar, "matrix is not of fixed-spine form at " + pos(i, j));
      }
    }
  }
  // order: first the leaf at distance 0, then the farthest, then the rest
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });
  if (n >= 2) {
    std::rotate(order.begin() + 1, order.end() - 1, order.end());
  }
  SeriesMatrix m(n, std::vector<PuiseuxSeries>(n));
  auto dd = [&](std::size_t k) { return d[order[k]]; };
  m[0][0] = mono(1, 0);
  if (n >= 2) {
    m[0][1] = m[1][0] = mono(1, 0);
    m[1][1] = mono(1, dd(1));
  }
  for (std::size_t i = 2; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      m[i][j] = mono(1, dd(i)) * m[0][j] + m[1][j];
      if (j == 0) m[0][i] = m[i][0];
      m[j][i] = m[i][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lift[order[i]][order[j]] = m[i][j].shifted(o[order[i]] + o[order[j]]);
  }
  return finish(a, std::move(lift), ClaimedProperty::SymRank2, Positivity::AllPositive,
                "fixed-spine row recursion",
                {{"spine", true, "leaf " + std::to_string(order[0] + 1) + " at distance 0, leaf " +
                                     std::to_string(order[n >= 2 ? 1 : 0] + 1) + " farthest"}});
}

LiftCertificate lift_sym_rank2_real(const TropMatrix& a, int max_n) {
  if (!a.is_symmetric_valued()) throw Error(ErrorKind::InvalidArgument, "symmetric matrix expected");
  const int srank = sym_trop_rank(a, max_n);
  if (srank > 2) throw Error(ErrorKind::NotRank2, "symmetric tropical rank is " + std::to_string(srank));
  const SymbicInfo info = symbic_info(tree_from_rank2(a));
  if (info.cls != SymbicClass::Symbic) throw Error(ErrorKind::NotRank2, "tree is " + to_string(info.cls));
  if (is_caterpillar(info.tree)) return lift_sym_caterpillar(a, max_n);

  const std::size_t n = a.rows();
  std::string note;
  const std::vector<PuiseuxSeries> x = symbic_points(info, n, note);
  std::vector<Rational> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = (a(i, i) - *ps_val(x[i] + x[i])) / 2;
  SeriesMatrix lift(n, std::vector<PuiseuxSeries>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const PuiseuxSeries s = x[i] + x[j];
      if (*ps_val(s) + l[i] + l[j] != a(i, j)) {
        throw Error(ErrorKind::GenericRetryExhausted, "symmetric embedding does not reproduce entry " + pos(i, j));
      }
      lift[i][j] = s.shifted(l[i] + l[j]);
    }
  }
  return finish(a, std::move(lift), ClaimedProperty::SymRank2, Positivity::None, "symmetric tree embedding D(x1^T + 1x^T)D",
                {{"embedding", true, note}});
}


namespace {

using RationalGrid = std::vector<std::vector<Rational>>;

SeriesMatrix monomial_matrix(const TropMatrix& a, const RationalGrid& coef) {
  SeriesMatrix m(a.rows(), std::vector<PuiseuxSeries>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = mono(coef[i][j], a(i, j));
  }
  return m;
}

SeriesMatrix without(const SeriesMatrix& m, std::size_t r, std::size_t c) {
  SeriesMatrix s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == r) continue;
    std::vector<PuiseuxSeries> row;
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j != c) row.push_back(m[i][j]);
    }
    s.push_back(std::move(row));
  }
  return s;
}

struct Quadratic {
  PuiseuxSeries a, b, c;
};

// det as a polynomial in the symmetric pair (p, q) = (q, p) = x
Quadratic quadratic_in(SeriesMatrix m, std::size_t p, std::size_t q) {
  auto at = [&](long v) {
    m[p][q] = m[q][p] = v == 0 ? PuiseuxSeries() : PuiseuxSeries::constant(QuadExt(v));
    return ps_det(m);
  };
  const PuiseuxSeries c = at(0), plus = at(1), minus = at(-1);
  const QuadExt half(Rational(1, 2));
  return {(plus + minus).scaled(half) - c, (plus - minus).scaled(half), c};
}

bool has_valuation(const PuiseuxSeries& x, const Rational& v) {
  try {
    const auto got = ps_val(x);
    return got && *got == v;
  } catch (const Error&) {
    return false;
  }
}

bool leads_positive(const PuiseuxSeries& x) {
  try {
    return !x.has_no_terms() && ps_lead_sign(x) > 0;
  } catch (const Error&) {
    return false;
  }
}

std::optional<PuiseuxSeries> pick_root(const Quadratic& q, const Rational& target, bool positive, const Rational& cap,
                                       int& disc_sign) {
  std::vector<PuiseuxSeries> candidates;
  if (q.a.is_exact_zero()) {
    disc_sign = 1;
    if (q.b.has_no_terms()) return std::nullopt;
    candidates.push_back(-(q.c * ps_inv(q.b, cap)));
  } else {
    QuadRoots r;
    try {
      r = quad_roots(q.a, q.b, q.c, cap);
    } catch (const Error&) {
      disc_sign = 0;
      return std::nullopt;
    }
    disc_sign = r.disc_sign;
    if (r.x1) candidates.push_back(*r.x1);
    if (r.x2) candidates.push_back(*r.x2);
  }
  for (const auto& x : candidates) {
    if (has_valuation(x, target) && (!positive || leads_positive(x))) return x;
  }
  return std::nullopt;
}

std::string edge_note(const NewtonEdge& e) {
  std::string s = monomial_string(e.u) + " -- " + monomial_string(e.v) + ", lattice length " +
                  std::to_string(e.lattice_length);
  if (e.midpoint) s += ", midpoint " + monomial_string(*e.midpoint);
  return s;
}

Rational eps_for(int attempt) {
  Rational e(1, 100);
  for (int k = 0; k < attempt / 4; ++k) e /= 10;
  return e;
}

}  // namespace

LiftCertificate lift_corank1(const TropMatrix& a, FieldMode mode, const LiftOptions& opts) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "square matrix expected");
  const bool positive = mode == FieldMode::CPlus || mode == FieldMode::RPlus;
  const std::size_t n = a.rows();
  const TropDetResult det = trop_det(a, opts.max_n);
  if (!det.tie) throw Error(ErrorKind::NotOnEdge, "the tropical determinant attains its minimum only once");
  const auto edge = find_birkhoff_edge(det, positive);
  if (!edge) throw Error(ErrorKind::SameSigns, "all optimal permutations have the same sign");
  const auto& [s1, s2] = *edge;
  std::size_t i = 0;
  while (s1[i] == s2[i]) ++i;
  const auto col = static_cast<std::size_t>(s1[i]);
  std::vector<std::vector<bool>> core(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < n; ++k) {
    core[k][static_cast<std::size_t>(s1[k])] = true;
    core[k][static_cast<std::size_t>(s2[k])] = true;
  }
  Coefficients gen(derive_seed(opts.seed, a));
  for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
    const Rational eps = eps_for(attempt);
    RationalGrid coef(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) coef[r][c] = core[r][c] ? gen.draw() : eps * gen.draw();
    }
    SeriesMatrix m = monomial_matrix(a, coef);
    const long cof_sign = (i + col) % 2 == 0 ? 1 : -1;
    const PuiseuxSeries cof = ps_det(without(m, i, col)).scaled(QuadExt(cof_sign));
    m[i][col] = PuiseuxSeries();
    const PuiseuxSeries rest = ps_det(m);
    if (cof.has_no_terms() || rest.has_no_terms()) continue;
    // scale row i by s = +-cof t^{-val(cof)} so the pivot -rest/cof becomes
    // the polynomial -+rest t^{-val(cof)}
    const Rational vc = *ps_val(cof);
    const int flip = positive && ps_lead_sign(cof) < 0 ? -1 : 1;
    const PuiseuxSeries s = cof.shifted(-vc).scaled(QuadExt(flip));
    for (std::size_t c = 0; c < n; ++c) {
      if (c != col) m[i][c] = m[i][c] * s;
    }
    m[i][col] = rest.shifted(-vc).scaled(QuadExt(-flip));
    if (!has_valuation(m[i][col], a(i, col)) || (positive && !leads_positive(m[i][col]))) continue;
    LiftCertificate cert =
        finish(a, std::move(m), ClaimedProperty::Singular, positive ? Positivity::AllPositive : Positivity::None,
               "linear solve on a Birkhoff edge",
               {{"edge", true, cycle_notation(s1) + " / " + cycle_notation(s2)},
                {"pivot", true, "entry " + pos(i, col) + " solved, row " + std::to_string(i + 1) + " rescaled"},
                {"attempts", true, std::to_string(attempt + 1)}});
    if (cert.valid) return cert;
  }
  throw Error(ErrorKind::GenericRetryExhausted, "no generic choice gave a verified singular lift");
}

LiftCertificate lift_sym_corank1(const TropMatrix& a, FieldMode mode, const LiftOptions& opts) {
  if (!a.is_symmetric_valued()) throw Error(ErrorKind::InvalidArgument, "symmetric matrix expected");
  const bool positive = mode == FieldMode::CPlus || mode == FieldMode::RPlus;
  const std::size_t n = a.rows();
  const SymCorank1Analysis an = analyze_sym_corank1(a, opts.max_n);
  if (!an.det.tie) throw Error(ErrorKind::NotOnEdge, "the symmetric tropical determinant attains its minimum once");

  auto diagonal_difference = [](const EdgeAssessment& e) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < e.edge.u.exponent.size(); ++k) {
      if (e.edge.u.exponent[k][k] != e.edge.v.exponent[k][k]) return k;
    }
    return std::nullopt;
  };
  const EdgeAssessment* chosen = nullptr;
  if (positive) {
    for (const auto& e : an.edges) {
      if (e.r_plus && (!chosen || (e.edge.lattice_length == 1 && chosen->edge.lattice_length != 1))) chosen = &e;
    }
    if (!chosen) {
      const bool any_c = std::any_of(an.edges.begin(), an.edges.end(), [](const EdgeAssessment& e) { return e.c_plus; });
      // a positive Puiseux lift is only built when a real positive one exists
      if (any_c) throw Error(ErrorKind::MinorSignsOpposed, "minors along every positive cycle have opposite signs");
      throw Error(ErrorKind::NotOnEdge, "no optimal edge admits a positive root");
    }
  } else {
    int best = 3;
    for (const auto& e : an.edges) {
      const int rank = e.edge.lattice_length == 1 ? (diagonal_difference(e) ? 0 : 1) : 2;
      if (rank < best) {
        best = rank;
        chosen = &e;
      }
    }
  }
  if (!chosen) throw Error(ErrorKind::NotOnEdge, "no polytope edge among the optimal monomials");
  const EdgeAssessment& e = *chosen;

  // coefficients are weighted by S^-d along the edge's perturbation
  // direction d, scaled to integers
  Integer den = 1;
  for (const auto& row : e.perturbation) {
    for (const auto& x : row) den = boost::multiprecision::lcm(den, Integer(boost::multiprecision::denominator(x)));
  }
  std::vector<std::vector<long>> weight(n, std::vector<long>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational scaled = e.perturbation[r][c] * Rational(den);
      weight[r][c] = boost::multiprecision::numerator(scaled).convert_to<long>();
    }
  }
  std::size_t p = 0, q = 0;
  bool linear = false;
  std::string pivot_note;
  if (e.edge.lattice_length == 1) {
    if (const auto k = diagonal_difference(e)) {
      p = q = *k;
      linear = true;
    } else {
      for (std::size_t r = 0; r < n && p == q; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
          const int eu = e.edge.u.exponent[r][c], ev = e.edge.v.exponent[r][c];
          if ((eu == 1) != (ev == 1)) {
            p = r;
            q = c;
            break;
          }
        }
      }
      if (p == q) throw Error(ErrorKind::NotOnEdge, "no entry separates the edge endpoints");
    }
  } else {
    p = static_cast<std::size_t>(e.cycle[0]);
    q = static_cast<std::size_t>(e.cycle[1]);
  }
  pivot_note = "entry " + pos(p, q) + (linear ? " solved linearly" : " solved as a quadratic root");

  const Rational cap = default_trunc(a, opts);
  Coefficients gen(derive_seed(opts.seed, a));
  std::vector<std::pair<std::size_t, std::size_t>> flippable;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      if (!(r == p && c == q)) flippable.emplace_back(r, c);
    }
  }
  for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
    const Rational base(Integer(1) << (3 + attempt / 4));
    RationalGrid coef(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r; c < n; ++c) {
        const long w = weight[r][c];
        const Rational scale = pow_int(base, static_cast<unsigned>(w < 0 ? -w : w));
        const Rational v = w < 0 ? gen.draw() * scale : gen.draw() / scale;
        coef[r][c] = coef[c][r] = v;
      }
    }
    std::string sign_note = "all coefficients positive";
    if (!positive && attempt > 0) {
      // real mode: flip one entry at a time, then redraw signs at random
      const auto k = static_cast<std::size_t>(attempt - 1);
      if (k < flippable.size()) {
        const auto [r, c] = flippable[k];
        coef[r][c] = coef[c][r] = -coef[r][c];
        sign_note = "sign of entry " + pos(r, c) + " flipped";
      } else {
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = r; c < n; ++c) {
            if (gen.coin()) coef[r][c] = coef[c][r] = -coef[r][c];
          }
        }
        sign_note = "random signs";
      }
    }
    SeriesMatrix m = monomial_matrix(a, coef);
    std::vector<TranscriptStep> notes{{"edge", true, edge_note(e.edge)}, {"pivot", true, pivot_note},
                                      {"coefficients", true, sign_note}};
    if (linear) {
      const PuiseuxSeries cof = ps_det(without(m, p, p));
      m[p][p] = PuiseuxSeries();
      const PuiseuxSeries rest = ps_det(m);
      if (cof.has_no_terms() || rest.has_no_terms()) continue;
      const Rational vc = *ps_val(cof);
      const int flip = ps_lead_sign(cof) < 0 ? -1 : 1;
      const PuiseuxSeries s = cof.shifted(-vc).scaled(QuadExt(flip));
      for (std::size_t k = 0; k < n; ++k) {
        if (k == p) continue;
        m[p][k] = m[p][k] * s;
        m[k][p] = m[p][k];
      }
      // s^2 * (-rest/cof) with s/cof = flip * t^{-vc}
      m[p][p] = (s * rest).shifted(-vc).scaled(QuadExt(-flip));
      if (!has_valuation(m[p][p], a(p, p)) || (positive && !leads_positive(m[p][p]))) continue;
    } else {
      const Quadratic quad = quadratic_in(m, p, q);
      int disc_sign = 0;
      const auto x = pick_root(quad, a(p, q), positive, cap, disc_sign);
      if (!x) continue;
      m[p][q] = m[q][p] = *x;
      notes.push_back({"discriminant", disc_sign >= 0, disc_sign > 0 ? "positive" : "zero"});
      notes.push_back({"root", true, "valuation " + to_string(a(p, q)) + ", truncated at t^" + to_string(cap)});
    }
    notes.push_back({"attempts", true, std::to_string(attempt + 1)});
    LiftCertificate cert = finish(a, std::move(m), ClaimedProperty::SymSingular,
                                  positive ? Positivity::AllPositive : Positivity::None,
                                  linear ? "symmetric linear solve" : "symmetric quadratic root", std::move(notes));
    if (cert.valid) return cert;
  }
  throw Error(ErrorKind::GenericRetryExhausted, "no generic choice gave a verified symmetric singular lift");
}

LiftCertificate lift(Variety v, const TropMatrix& a, FieldMode mode, const LiftOptions& opts) {
  const bool positive = mode == FieldMode::CPlus || mode == FieldMode::RPlus;
  switch (v) {
    case Variety::Rank2:
      return positive ? lift_rank2_positive(a) : lift_rank2_real(a);
    case Variety::SymRank2:
      if (positive) {
        const int srank = sym_trop_rank(a, opts.max_n);
        if (srank > 2) throw Error(ErrorKind::NotRank2, "symmetric tropical rank is " + std::to_string(srank));
        return lift_sym_caterpillar(a, opts.max_n);
      }
      return lift_sym_rank2_real(a, opts.max_n);
    case Variety::Corank1:
      return lift_corank1(a, mode, opts);
    case Variety::SymCorank1:
      return lift_sym_corank1(a, mode, opts);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown variety");
}

BorderedRoot bordered_root(const PuiseuxSeries& a, const PuiseuxSeries& b, const PuiseuxSeries& c,
                           const PuiseuxSeries& d, const Rational& cap) {
  BorderedRoot out;
  out.matrix = {{a, b, PuiseuxSeries()}, {b, PuiseuxSeries::constant(QuadExt(1)), c}, {PuiseuxSeries(), c, d}};
  const Quadratic quad = quadratic_in(out.matrix, 0, 2);
  const QuadRoots r = quad_roots(quad.a, quad.b, quad.c, cap);
  out.discriminant = r.discriminant;
  out.disc_sign = r.disc_sign;
  if (r.disc_sign < 0) throw Error(ErrorKind::NegativeLeading, "bordered quadratic has no real root");
  for (const auto& x : {r.x1, r.x2}) {
    if (x && has_valuation(*x, Rational(0))) {
      out.root = *x;
      out.root_valuation = 0;
      out.matrix[0][2] = out.matrix[2][0] = *x;
      return out;
    }
  }
  throw Error(ErrorKind::DegenerateGeneric, "no root of valuation zero");
}

SymbolicDiscriminant symbolic_discriminant(const TropMatrix& a, int i, int j) {
  if (!a.is_symmetric_valued()) throw Error(ErrorKind::InvalidArgument, "symmetric matrix expected");
  const std::size_t n = a.rows();
  const auto si = static_cast<std::size_t>(std::min(i, j)), sj = static_cast<std::size_t>(std::max(i, j));
  if (sj >= n) throw Error(ErrorKind::InvalidArgument, "index out of range");
  SymbolicDiscriminant out;
  std::vector<std::vector<std::size_t>> var(n, std::vector<std::size_t>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      if (r == si && c == sj) continue;
      var[r][c] = var[c][r] = out.names.size();
      out.names.push_back(n >= 10 ? "c" + std::to_string(r + 1) + "_" + std::to_string(c + 1)
                                  : "c" + std::to_string(r + 1) + std::to_string(c + 1));
    }
  }
  const std::size_t xv = out.names.size(), tv = xv + 1, nvars = xv + 2;
  out.names.push_back("x");
  out.names.push_back("t");
  var[si][sj] = var[sj][si] = xv;
  std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(nvars)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& w = a(r, c);
      if (w < 0 || denominator_of(w) != 1) throw Error(ErrorKind::InvalidArgument, "nonnegative integer entries expected");
      MPoly::Exponent e(nvars, 0);
      e[var[r][c]] = 1;
      e[tv] = static_cast<unsigned>(numerator_of(w));
      m[r][c] = MPoly::monomial(e, Rational(1));
    }
  }
  out.discriminant = mpoly_disc(mpoly_det(m), xv);
  out.lowest = out.discriminant.lowest_in(tv);
  if (!out.lowest.is_zero()) out.lowest_degree = out.lowest.terms().begin()->first[tv];
  return out;
}

bool discriminant_factorization_holds(int n, int i, int j) {
  const auto un = static_cast<std::size_t>(n);
  const std::size_t nvars = un * (un + 1) / 2;
  std::vector<std::vector<MPoly>> m(un, std::vector<MPoly>(un));
  std::size_t k = 0;
  for (std::size_t r = 0; r < un; ++r) {
    for (std::size_t c = r; c < un; ++c, ++k) m[r][c] = m[c][r] = MPoly::variable(nvars, k);
  }
  std::size_t xv = 0;
  {
    const auto si = static_cast<std::size_t>(std::min(i, j)), sj = static_cast<std::size_t>(std::max(i, j));
    for (std::size_t r = 0; r < si; ++r) xv += un - r;
    xv += sj - si;
  }
  auto minor = [&](std::size_t skip) {
    std::vector<std::vector<MPoly>> s;
    for (std::size_t r = 0; r < un; ++r) {
      if (r == skip) continue;
      std::vector<MPoly> row;
      for (std::size_t c = 0; c < un; ++c) {
        if (c != skip) row.push_back(m[r][c]);
      }
      s.push_back(std::move(row));
    }
    return s.empty() ? MPoly::constant(nvars, Rational(1)) : mpoly_det(s);
  };
  const MPoly disc = mpoly_disc(mpoly_det(m), xv);
  const MPoly rhs = (minor(static_cast<std::size_t>(i)) * minor(static_cast<std::size_t>(j))).scaled(Rational(4));
  return disc == rhs;
}

GeneratorCheck three_minor_sign_check(const TropMatrix& a) {
  GeneratorCheck out;
  for_each_subset(a.rows(), 3, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(a.cols(), 3, [&](const std::vector<std::size_t>& cols) {
      ++out.minors_checked;
      const TropDetResult d = trop_det(a.submatrix(rows, cols));
      bool plus = false, minus = false;
      for (const auto& c : d.argmin) (c.sign > 0 ? plus : minus) = true;
      if (!(plus && minus)) {
        out.holds = false;
        out.rows = rows;
        out.cols = cols;
      }
      return !out.holds;
    });
    return !out.holds;
  });
  return out;
}

}  // namespace troplift
