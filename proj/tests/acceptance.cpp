// One line per acceptance criterion; exit status is the number of failures.
#include "troplift/barvinok.hpp"
#include "troplift/errors.hpp"
#include "troplift/fixtures.hpp"
#include "troplift/lifts.hpp"
#include "troplift/membership.hpp"
#include "troplift/newton.hpp"
#include "troplift/oracle.hpp"
#include "troplift/trees.hpp"
#include "troplift/tropical.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace troplift;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Targets of every verified all-positive symmetric rank-2 certificate seen so far.
std::vector<TropMatrix> g_positive_sym_targets;

void note_certificate(const LiftCertificate& c) {
  if (c.valid && c.claimed == ClaimedProperty::SymRank2 && c.positivity == Positivity::AllPositive)
    g_positive_sym_targets.push_back(c.target);
}

const FieldMode kModes[] = {FieldMode::C, FieldMode::R, FieldMode::CPlus, FieldMode::RPlus};

Outcome ex52() {
  const TropMatrix m = four_cycle_matrix();
  const char* expect = "TTTF";
  std::string got;
  for (FieldMode mode : kModes) got += member_sym_corank1(m, mode).verdict ? 'T' : 'F';
  const SymbolicDiscriminant d = symbolic_discriminant(m, 0, 1);
  const std::string lead = d.lowest.str(d.names);
  const bool ok = got == expect && d.lowest_degree == 2 && lead == "-8*c13*c14*c23^2*c34*c44*t^2";
  return {ok, "verdicts C,R,C+,R+ = " + got + ", lowest term " + lead};
}

Outcome discriminant() {
  int checked = 0, failed = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        ++checked;
        if (!discriminant_factorization_holds(n, i, j)) ++failed;
      }
    }
  }
  return {failed == 0, std::to_string(checked) + " pairs, " + std::to_string(failed) + " failures"};
}

Outcome table2() {
  const auto rows = worked_monomials();
  if (rows.size() != 5) return {false, "expected five monomials"};
  using Grid = std::vector<std::vector<int>>;
  const std::vector<Grid> exponents{
      {{0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 2}, {0, 0, 0, 0}},
      {{0, 2, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 0, 0}},
      {{0, 0, 0, 2}, {0, 0, 2, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
      {{0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}};
  const std::vector<std::string> names{"2*x12*x13*x23*x44", "-x11*x22*x34^2", "x12^2*x34^2", "x14^2*x23^2",
                                       "-2*x12*x14*x23*x34"};
  const std::vector<int> signs{1, -1, 1, 1, -1};
  const std::vector<long> coefficients{2, 1, 1, 1, 2};
  using K = ComponentKind;
  const std::vector<std::multiset<K>> kinds{{K::OddCycle, K::Loop}, {K::Loop, K::Loop, K::Edge}, {K::Edge, K::Edge},
                                            {K::Edge, K::Edge}, {K::EvenCycle}};
  std::ostringstream bad;
  for (std::size_t k = 0; k < 5; ++k) {
    std::multiset<K> got;
    for (const auto& g : semisimple_graph(rows[k])) got.insert(g.kind);
    if (rows[k].exponent != exponents[k] || monomial_string(rows[k]) != names[k] || rows[k].sign != signs[k] ||
        rows[k].coefficient != coefficients[k] || got != kinds[k])
      bad << " row" << k + 1;
  }
  // vertices: all but the last; every vertex pair is an edge except rows 1 and 2
  for (std::size_t k = 0; k < 5; ++k) {
    if (is_polytope_vertex(rows[k]) != (k < 4)) bad << " vertex" << k + 1;
  }
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = x + 1; y < 4; ++y) {
      if (is_polytope_edge(rows[x], rows[y]) != !(x == 0 && y == 1)) bad << " edge" << x + 1 << y + 1;
    }
  }
  // edges from the 3-cycle monomial to the transposition products join equal signs
  if (rows[0].sign != rows[2].sign || rows[0].sign != rows[3].sign) bad << " same-sign";
  // loop monomial to the transposition products: lattice length 1, opposite signs
  for (std::size_t y : {2u, 3u}) {
    const NewtonEdge e = describe_edge(rows[1], rows[y]);
    if (e.lattice_length != 1 || e.u.sign == e.v.sign) bad << " opposite" << y + 1;
  }
  // the two transposition products: lattice length 2 with the 4-cycle as midpoint
  const NewtonEdge m = describe_edge(rows[2], rows[3]);
  if (m.lattice_length != 2 || !m.midpoint || !(*m.midpoint == rows[4])) bad << " midpoint";
  const std::string b = bad.str();
  return {b.empty(), b.empty() ? "5 rows and edge claims match" : "mismatch:" + b};
}

Outcome polytope4() {
  const auto classes = sym_det_monomials(4);
  std::vector<std::vector<Rational>> pts;
  for (const auto& c : classes) {
    std::vector<Rational> p;
    for (int x : exponent_point(c)) p.emplace_back(x);
    pts.push_back(std::move(p));
  }
  const HullResult h = brute_hull(pts);
  std::set<std::size_t> fast_v, hull_v(h.vertices.begin(), h.vertices.end());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (is_polytope_vertex(classes[k])) fast_v.insert(k);
  }
  std::set<std::pair<std::size_t, std::size_t>> fast_e, hull_e;
  for (auto [x, y] : h.edges) hull_e.insert({std::min(x, y), std::max(x, y)});
  for (std::size_t x : fast_v) {
    for (std::size_t y : fast_v) {
      if (x < y && is_polytope_edge(classes[x], classes[y])) fast_e.insert({x, y});
    }
  }
  int lattice2 = 0, bad_mid = 0;
  for (const auto& e : polytope_edges(4)) {
    if (e.lattice_length != 2) continue;
    ++lattice2;
    if (!e.midpoint || std::find(classes.begin(), classes.end(), *e.midpoint) == classes.end()) ++bad_mid;
  }
  const bool ok = classes.size() == 17 && fast_v.size() == 14 && fast_v == hull_v && fast_e == hull_e && bad_mid == 0;
  std::ostringstream s;
  s << classes.size() << " classes, " << fast_v.size() << " vertices, " << fast_e.size() << " edges (hull "
    << hull_v.size() << "/" << hull_e.size() << "), " << lattice2 << " lattice-2 edges, " << bad_mid
    << " bad midpoints";
  return {ok, s.str()};
}

// Property suite over the four varieties and four modes.
Outcome modes_suite() {
  constexpr int kPerVariety = 500;
  std::ostringstream s;
  bool ok = true;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(2, 5);
  for (Variety v : {Variety::Rank2, Variety::SymRank2, Variety::Corank1, Variety::SymCorank1}) {
    const bool sym = v == Variety::SymRank2 || v == Variety::SymCorank1;
    int monotone_bad = 0, lifted = 0, lift_fail = 0, verdict_bad = 0;
    for (int k = 0; k < kPerVariety; ++k) {
      const std::size_t n = static_cast<std::size_t>(size(rng));
      TropMatrix a;
      if (v == Variety::Rank2) {
        const std::size_t d = static_cast<std::size_t>(size(rng));
        a = k % 2 ? random_rank2_matrix(rng, static_cast<int>(d), static_cast<int>(n))
                  : random_int_matrix(rng, d, n, 0, 2);
      } else if (sym) {
        a = random_symmetric_int_matrix(rng, n, 0, k % 3 == 0 ? 1 : 3);
      } else {
        a = random_int_matrix(rng, n, n, 0, 2);
      }
      bool verdict[4];
      for (int m = 0; m < 4; ++m) verdict[m] = member(v, a, kModes[m]).verdict;
      const bool c = verdict[0], r = verdict[1], cp = verdict[2], rp = verdict[3];
      if ((r && !c) || (rp && !cp) || (rp && !r) || (cp && !c)) ++monotone_bad;

      // which lifts the verdicts promise
      std::vector<FieldMode> want;
      switch (v) {
        case Variety::Rank2:
        case Variety::SymRank2:
          if (c != r) ++verdict_bad;
          if (c) want.push_back(FieldMode::R);
          if (rp) want.push_back(FieldMode::RPlus);
          break;
        case Variety::Corank1:
          if (cp != rp) ++verdict_bad;
          if (cp) want.push_back(FieldMode::RPlus);
          if (r) want.push_back(FieldMode::R);
          break;
        case Variety::SymCorank1:
          if (rp) want.push_back(FieldMode::RPlus);
          if (r) want.push_back(FieldMode::R);
          break;
      }
      for (FieldMode mode : want) {
        try {
          const LiftCertificate cert = lift(v, a, mode, {.seed = static_cast<std::uint64_t>(k)});
          if (!cert.valid) {
            ++lift_fail;
            continue;
          }
          ++lifted;
          note_certificate(cert);
        } catch (const Error& e) {
          ++lift_fail;
          std::printf("  lift failure %s %s %s: %s\n", to_string(v).c_str(), to_string(mode).c_str(),
                      a.str().c_str(), e.what());
        }
      }
    }
    s << to_string(v) << ": " << monotone_bad << " monotonicity, " << verdict_bad << " mode gaps, " << lifted
      << " lifts, " << lift_fail << " failures; ";
    ok = ok && monotone_bad == 0 && verdict_bad == 0 && lift_fail == 0 && lifted > 0;
  }
  return {ok, s.str()};
}

// Checks a certificate came from the named construction and verifies as a
// positive symmetric rank-2 lift of its target.
bool explicit_ok(const TropMatrix& a, const std::string& construction) {
  const LiftCertificate c = lift_sym_caterpillar(a);
  note_certificate(c);
  if (!c.valid || c.construction != construction || c.positivity != Positivity::AllPositive) return false;
  for (const auto& step : verify_lift(c)) {
    if (!step.passed) return false;
  }
  return true;
}

Outcome explicit_lifts() {
  int a_ok = 0, b_ok = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = 3 + static_cast<int>(seed % 4);  // 3..6
    std::uniform_int_distribution<long> len(1, 6);

    // whole spine fixed: d_2 >= ... >= d_n >= 0
    std::vector<long> d(static_cast<std::size_t>(n - 1));
    for (auto& x : d) x = len(rng) - 1;
    std::sort(d.rbegin(), d.rend());
    if (explicit_ok(fixed_spine_matrix(d), "fixed-spine row recursion")) ++a_ok;

    // one fixed point: B = [first row (0, d1); others on one of the two columns]
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<std::vector<long>> rows{{0, len(rng)}};
      for (int i = 1; i < n; ++i) {
        if (rng() % 2) rows.push_back({len(rng), 0});
        else rows.push_back({0, len(rng)});
      }
      const TropMatrix b = TropMatrix::from_ints(rows);
      const TropMatrix m = trop_mat_mul(b, b.transpose());
      if (!one_fixed_point(tree_from_rank2(m))) continue;
      if (explicit_ok(m, "symmetric product t^B (t^B)^T")) ++b_ok;
      break;
    }
  }
  return {a_ok == 20 && b_ok == 20,
          "recursion " + std::to_string(a_ok) + "/20, product " + std::to_string(b_ok) + "/20"};
}

Outcome tree_correspondence() {
  int round_bad = 0, cat_checked = 0, cat_bad = 0, sym_checked = 0, sym_bad = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int d = 2 + static_cast<int>(seed % 4), n = 2 + static_cast<int>((seed / 4) % 4);
    const BicoloredTree t = random_bicolored_tree(seed, d, n);
    const TropMatrix a = tree_to_matrix(t);
    const BicoloredTree back = tree_from_rank2(a);
    if (!same_metric_tree(back, t) || !(tree_to_matrix(back) == a)) ++round_bad;
    if (d <= 4 && n <= 4) {
      ++cat_checked;
      if (is_caterpillar(back) != brute_barvinok2(a).holds) ++cat_bad;
    }
  }
  std::mt19937_64 rng(77);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    TropMatrix a = random_symmetric_int_matrix(rng, n, 0, 3);
    if (k % 2) {
      const TropMatrix b = random_int_matrix(rng, n, 2, 0, 4);
      a = trop_mat_mul(b, b.transpose());
    }
    if (trop_rank(a) > 2) continue;
    ++sym_checked;
    const BicoloredTree t = tree_from_rank2(a);
    const SymbicInfo info = symbic_info(t);
    const bool fast = info.cls == SymbicClass::Symbic && is_caterpillar(info.tree) && info.one_fixed_point;
    if (fast != brute_sym_barvinok2(a).holds || fast != sym_barvinok_rank2(a).holds) ++sym_bad;
  }
  std::ostringstream s;
  s << "300 round trips (" << round_bad << " bad), caterpillar vs search " << cat_checked << " (" << cat_bad
    << " bad), one fixed point vs symmetric search " << sym_checked << " (" << sym_bad << " bad)";
  return {round_bad == 0 && cat_bad == 0 && sym_bad == 0 && cat_checked > 0 && sym_checked > 0, s.str()};
}

Outcome cocircuit() {
  const TropMatrix a = cocircuit_fixture();
  const int r = trop_rank(a);
  return {a.rows() == 9 && a.cols() == 12 && r == 3,
          std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ", tropical rank " + std::to_string(r)};
}

Outcome generator_check() {
  // Criteria 5 and 6 fill the target list; add the named fixtures as well.
  for (const TropMatrix& a : {three_leaf_symbic_matrix(), fixed_spine_matrix(), trop_mat_mul(one_fixed_point_factor(), one_fixed_point_factor().transpose()),
                              trop_mat_mul(one_fixed_point_factor_split(), one_fixed_point_factor_split().transpose())})
    note_certificate(lift_sym_caterpillar(a));
  int bad = 0;
  for (const TropMatrix& a : g_positive_sym_targets) {
    if (!three_minor_sign_check(a).holds) ++bad;
  }
  const int total = static_cast<int>(g_positive_sym_targets.size());
  return {bad == 0 && total > 0, std::to_string(total) + " certificates, " + std::to_string(bad) + " violations"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 means no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "four-cycle example verdicts and discriminant", 5, ex52},
      {2, "discriminant factorization identity", 60, discriminant},
      {3, "symmetric determinant monomial table", 0, table2},
      {4, "Newton polytope n=4 against exact hull", 30, polytope4},
      {5, "membership modes and lifts on random matrices", 0, modes_suite},
      {6, "explicit positive symmetric lift formulas", 0, explicit_lifts},
      {7, "tree correspondence and factor searches", 0, tree_correspondence},
      {8, "affine plane cocircuit matrix", 10, cocircuit},
      {9, "3x3 minor signs of positive symmetric targets", 0, generator_check},
  };
  int failures = 0;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %d %s: %s (%.2fs) %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
