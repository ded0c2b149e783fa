#pragma once

#include "troplift/trop_matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace troplift {

struct FixtureFile {
  std::string filename;
  nlohmann::json content;
};

/// Names accepted by fixture().
std::vector<std::string> fixture_names();

/// JSON input files for a named worked example. Throws UnknownFixture.
std::vector<FixtureFile> fixture(const std::string& name);

// The matrices behind the fixtures.
TropMatrix diagonal_tie_matrix(long a = 1, long b = 1, long c = 1);  // diagonal a, b, c; tropical rank 2, not a caterpillar
TropMatrix three_leaf_symbic_matrix(long d2 = 2, long d3 = 1);  // [[0,d2,d3],[d2,0,0],[d3,0,0]]
TropMatrix one_fixed_point_factor();  // rows (0,d1),(d2,0),(d3,0),(d4,0)
TropMatrix one_fixed_point_factor_split();  // rows (0,d1),(d2,0),(d3,0),(0,d4)
/// Whole-spine-fixed caterpillar: 0 in the first row and column, d_max(i,j)
/// elsewhere, for d = (d_2 >= ... >= d_n >= 0).
TropMatrix fixed_spine_matrix(const std::vector<long>& d = {3, 2, 1});
TropMatrix four_cycle_matrix();

}  // namespace troplift
