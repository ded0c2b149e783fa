// troplift command-line front end. Every command reads JSON and writes JSON
// (trees may also be written as DOT).
//
// Exit codes: 0 success, 1 negative answer (verdict false, invalid
// certificate, no lift, oracle disagreement), 2 input or usage error,
// 3 size limit exceeded.

#include "troplift/errors.hpp"
#include "troplift/fixtures.hpp"
#include "troplift/json_io.hpp"
#include "troplift/lifts.hpp"
#include "troplift/membership.hpp"
#include "troplift/oracle.hpp"
#include "troplift/trees.hpp"
#include "troplift/tropical.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace troplift;

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kSizeLimit = 3 };

struct Config {
  std::string in = "-";
  std::string out = "-";
  std::uint64_t seed = 0;
  std::string trunc;  // empty: library default
  int max_n = kDefaultEnumerationBound;
  bool allow_large = false;
  std::string format = "json";
};

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

json read_json(const Config& cfg) { return parse_json_text(read_input(cfg.in)); }

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.out == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + cfg.out);
  f << text << "\n";
}

void emit(const Config& cfg, const json& j, const std::string& text_form = {}) {
  if (cfg.format == "text" && !text_form.empty()) {
    write_output(cfg, text_form);
  } else {
    write_output(cfg, j.dump(2));
  }
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::SizeLimit:
      return kSizeLimit;
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InvalidTree:
    case ErrorKind::UnknownFixture:
      return kInputError;
    default:
      return kNegative;
  }
}

LiftOptions lift_options(const Config& cfg) {
  LiftOptions o;
  o.seed = cfg.seed;
  o.max_n = cfg.max_n;
  if (!cfg.trunc.empty()) o.trunc = parse_rational(cfg.trunc);
  return o;
}

json indices(const std::vector<std::size_t>& v) {
  json j = json::array();
  for (auto x : v) j.push_back(x + 1);
  return j;
}

int cmd_trop_det(const Config& cfg, bool symmetric) {
  const TropMatrix a = matrix_from_json(read_json(cfg));
  const TropDetResult r = symmetric ? sym_trop_det(a, cfg.max_n) : trop_det(a, cfg.max_n);
  json arg = json::array();
  for (const auto& c : r.argmin) arg.push_back(class_json(c));
  const json j = {{"symmetric", symmetric}, {"value", to_json(r.min_value)}, {"tie", r.tie}, {"argmin", arg}};
  emit(cfg, j, to_string(r.min_value) + (r.tie ? " (attained at least twice)" : " (attained once)"));
  return kOk;
}

int cmd_rank(const Config& cfg) {
  const TropMatrix a = matrix_from_json(read_json(cfg));
  const RankWitness w = trop_rank_witness(a);
  json j = {{"tropical_rank", w.rank}, {"witness", {{"rows", indices(w.rows)}, {"cols", indices(w.cols)}}}};
  std::string text = "tropical rank " + std::to_string(w.rank);
  if (a.is_symmetric_valued()) {
    const RankWitness s = sym_trop_rank_witness(a, cfg.max_n);
    j["symmetric_rank"] = s.rank;
    j["symmetric_witness"] = {{"rows", indices(s.rows)}, {"cols", indices(s.cols)}};
    text += ", symmetric tropical rank " + std::to_string(s.rank);
  }
  emit(cfg, j, text);
  return kOk;
}

int cmd_tree(const Config& cfg) {
  const TropMatrix a = matrix_from_json(read_json(cfg));
  const BicoloredTree t = tree_from_rank2(a);
  if (cfg.format == "dot") {
    write_output(cfg, t.to_dot());
  } else {
    write_output(cfg, to_json(t).dump(2));
  }
  return kOk;
}

int cmd_member(const Config& cfg, const std::string& variety, const std::string& mode) {
  const TropMatrix a = matrix_from_json(read_json(cfg));
  const MembershipVerdict v = member(parse_variety(variety), a, parse_mode(mode), cfg.max_n);
  std::string criterion = v.reason.contains("criterion") ? v.reason["criterion"].get<std::string>() : "";
  emit(cfg, to_json(v), std::string(v.verdict ? "true" : "false") + (criterion.empty() ? "" : " (" + criterion + ")"));
  return v.verdict ? kOk : kNegative;
}

int cmd_lift(const Config& cfg, const std::string& variety, const std::string& mode) {
  const TropMatrix a = matrix_from_json(read_json(cfg));
  const LiftCertificate c = lift(parse_variety(variety), a, parse_mode(mode), lift_options(cfg));
  emit(cfg, to_json(c));
  return c.valid ? kOk : kNegative;
}

int cmd_verify(const Config& cfg) {
  const LiftCertificate c = certificate_from_json(read_json(cfg));
  const auto steps = verify_lift(c);
  bool ok = true;
  json checks = json::array();
  std::string text;
  for (const auto& s : steps) {
    ok = ok && s.passed;
    checks.push_back({{"check", s.check}, {"passed", s.passed}, {"detail", s.detail}});
    text += (s.passed ? "pass " : "FAIL ") + s.check + ": " + s.detail + "\n";
  }
  emit(cfg, {{"valid", ok}, {"checks", checks}}, text + (ok ? "valid" : "invalid"));
  return ok ? kOk : kNegative;
}

int cmd_polytope(const Config& cfg, int n, bool worked) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  emit(cfg, worked ? worked_monomials_report() : polytope_report(n));
  return kOk;
}

int cmd_verify_suite(const Config& cfg) {
  const auto reports = run_verify_suite(cfg.seed, cfg.max_n);
  json arr = json::array();
  std::size_t disagreements = 0;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    if (!r.agree) ++disagreements;
  }
  emit(cfg, {{"seed", cfg.seed}, {"max_n", cfg.max_n}, {"checked", reports.size()}, {"disagreements", disagreements},
             {"reports", arr}},
       std::to_string(reports.size()) + " checks, " + std::to_string(disagreements) + " disagreements");
  return disagreements == 0 ? kOk : kNegative;
}

int cmd_fixtures(const Config& cfg, const std::vector<std::string>& names) {
  const std::filesystem::path dir = cfg.out == "-" ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
  std::vector<std::string> chosen = names;
  if (chosen.empty() || (chosen.size() == 1 && chosen[0] == "all")) chosen = fixture_names();
  std::vector<FixtureFile> files;
  for (const auto& name : chosen) {
    for (auto& f : fixture(name)) files.push_back(std::move(f));
  }
  std::filesystem::create_directories(dir);
  json written = json::array();
  for (const auto& f : files) {
    const auto path = dir / f.filename;
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << f.content.dump(2) << "\n";
    written.push_back(path.string());
  }
  std::cout << json{{"written", written}}.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical determinants, ranks, trees, membership tests and certified Puiseux lifts"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--in", cfg.in, "input JSON file, - for stdin")->envname("TROPLIFT_IN");
  app.add_option("--out", cfg.out, "output file (directory for fixtures), - for stdout")->envname("TROPLIFT_OUT");
  app.add_option("--seed", cfg.seed, "master seed for randomized constructions")->envname("TROPLIFT_SEED");
  app.add_option("--trunc", cfg.trunc, "series truncation order p/q for root-based lifts")->envname("TROPLIFT_TRUNC");
  app.add_option("--max-n", cfg.max_n, "enumeration bound for permutation-sum algorithms")
      ->envname("TROPLIFT_MAX_N")
      ->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", cfg.allow_large, "acknowledge an enumeration bound above 8");
  app.add_option("--format", cfg.format, "json, text or dot (trees only)")
      ->envname("TROPLIFT_FORMAT")
      ->check(CLI::IsMember({"json", "text", "dot"}));

  bool symmetric = false;
  auto* det = app.add_subcommand("trop-det", "tropical determinant with every optimal permutation");
  det->add_flag("--symmetric", symmetric, "use monomials of the symmetric determinant");
  auto* rank = app.add_subcommand("rank", "tropical rank (and symmetric tropical rank) with witnesses");
  auto* tree = app.add_subcommand("tree", "bicolored metric tree of a tropical rank-2 matrix");

  std::string variety, mode;
  auto* mem = app.add_subcommand("member", "decide membership in a tropicalized variety");
  auto* lft = app.add_subcommand("lift", "construct and verify a Puiseux-series lift");
  for (auto* sc : {mem, lft}) {
    sc->add_option("--variety", variety, "rank2, sym_rank2, corank1 or sym_corank1")->required();
    sc->add_option("--mode", mode, "C, R, C+ or R+")->required();
  }
  auto* ver = app.add_subcommand("verify", "re-check a lift certificate");

  int poly_n = 4;
  bool worked = false;
  auto* poly = app.add_subcommand("polytope", "Newton polytope of the symmetric determinant");
  poly->add_option("--n", poly_n, "matrix size");
  poly->add_flag("--table2", worked, "only the five worked 4 x 4 monomials and their edge relations");
  auto* suite = app.add_subcommand("verify-suite", "cross-check fast algorithms against brute-force oracles");

  std::vector<std::string> names;
  auto* fix = app.add_subcommand("fixtures", "write worked examples as JSON input files");
  fix->add_option("names", names, "fixture names, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (cfg.max_n > kDefaultEnumerationBound && !cfg.allow_large) {
      throw Error(ErrorKind::InvalidArgument, "--max-n above 8 needs --allow-large");
    }
    if (cfg.format == "dot" && !tree->parsed()) throw Error(ErrorKind::InvalidArgument, "dot output is for trees only");
    if (det->parsed()) return cmd_trop_det(cfg, symmetric);
    if (rank->parsed()) return cmd_rank(cfg);
    if (tree->parsed()) return cmd_tree(cfg);
    if (mem->parsed()) return cmd_member(cfg, variety, mode);
    if (lft->parsed()) return cmd_lift(cfg, variety, mode);
    if (ver->parsed()) return cmd_verify(cfg);
    if (poly->parsed()) return cmd_polytope(cfg, poly_n, worked);
    if (suite->parsed()) return cmd_verify_suite(cfg);
    if (fix->parsed()) return cmd_fixtures(cfg, names);
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << "\n";
    return kInputError;
  }
  return kInputError;
}
