#include "troplift/fixtures.hpp"

#include "troplift/errors.hpp"
#include "troplift/json_io.hpp"
#include "troplift/membership.hpp"
#include "troplift/newton.hpp"
#include "troplift/oracle.hpp"

namespace troplift {

TropMatrix diagonal_tie_matrix(long a, long b, long c) { return TropMatrix::from_ints({{a, 0, 0}, {0, b, 0}, {0, 0, c}}); }

TropMatrix three_leaf_symbic_matrix(long d2, long d3) {
  return TropMatrix::from_ints({{0, d2, d3}, {d2, 0, 0}, {d3, 0, 0}}, true);
}

TropMatrix one_fixed_point_factor() { return TropMatrix::from_ints({{0, 3}, {3, 0}, {2, 0}, {1, 0}}); }

TropMatrix one_fixed_point_factor_split() { return TropMatrix::from_ints({{0, 3}, {3, 0}, {2, 0}, {0, 1}}); }

TropMatrix fixed_spine_matrix(const std::vector<long>& d) {
  const std::size_t n = d.size() + 1;
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) m[i][j] = d[std::max(i, j) - 1];
  }
  return TropMatrix::from_ints(m, true);
}

TropMatrix four_cycle_matrix() {
  return TropMatrix::from_ints({{2, 0, 1, 0}, {0, 2, 0, 2}, {1, 0, 2, 0}, {0, 2, 0, 1}}, true);
}

std::vector<std::string> fixture_names() {
  return {"eq1", "fig2a", "fig3b", "fig3c", "fig4a", "ex52", "table2", "cocircuit-ag23"};
}

namespace {

std::vector<FixtureFile> factored(const std::string& name, const TropMatrix& factor) {
  const TropMatrix m = trop_mat_mul(factor, factor.transpose()).as_symmetric();
  return {{name + ".json", to_json(m)}, {name + "-factor.json", to_json(factor)}};
}

}  // namespace

std::vector<FixtureFile> fixture(const std::string& name) {
  if (name == "eq1") return {{"eq1.json", to_json(diagonal_tie_matrix())}};
  if (name == "fig2a") return {{"fig2a.json", to_json(three_leaf_symbic_matrix())}};
  if (name == "fig3b") return factored("fig3b", one_fixed_point_factor());
  if (name == "fig3c") return factored("fig3c", one_fixed_point_factor_split());
  if (name == "fig4a") return {{"fig4a.json", to_json(fixed_spine_matrix())}};
  if (name == "ex52") return {{"ex52.json", to_json(four_cycle_matrix())}};
  if (name == "table2") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : worked_monomials()) rows.push_back(class_json(c));
    return {{"table2.json", {{"n", 4}, {"monomials", rows}}}};
  }
  if (name == "cocircuit-ag23") return {{"cocircuit-ag23.json", to_json(cocircuit_fixture())}};
  throw Error(ErrorKind::UnknownFixture, "no fixture named \"" + name + "\"");
}

}  // namespace troplift
