#pragma once

#include "troplift/newton.hpp"
#include "troplift/tropical.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace troplift {

enum class Variety { Rank2, SymRank2, Corank1, SymCorank1 };
enum class FieldMode { C, R, CPlus, RPlus };

std::string to_string(Variety v);
std::string to_string(FieldMode m);
Variety parse_variety(const std::string& s);  // throws ParseError
FieldMode parse_mode(const std::string& s);   // accepts C, R, C+, R+

struct MembershipVerdict {
  Variety variety = Variety::Rank2;
  FieldMode mode = FieldMode::C;
  bool verdict = false;
  nlohmann::json reason;  // structured evidence; reason["criterion"] names the deciding rule
};

MembershipVerdict member_rank2(const TropMatrix& a, FieldMode mode);
MembershipVerdict member_sym_rank2(const TropMatrix& a, FieldMode mode, int max_n = kDefaultEnumerationBound);
MembershipVerdict member_corank1(const TropMatrix& a, FieldMode mode, int max_n = kDefaultEnumerationBound);
MembershipVerdict member_sym_corank1(const TropMatrix& a, FieldMode mode, int max_n = kDefaultEnumerationBound);
MembershipVerdict member(Variety v, const TropMatrix& a, FieldMode mode, int max_n = kDefaultEnumerationBound);

/// A pair of optimal permutations forming an edge of the Birkhoff polytope,
/// with opposite signs when `opposite_signs` is requested.
std::optional<std::pair<Permutation, Permutation>> find_birkhoff_edge(const TropDetResult& det, bool opposite_signs);

/// Sign data of the principal minors with row/column i and j deleted.
struct MinorSignPair {
  int i = 0;
  int j = 0;
  std::vector<int> signs_i;  // signs of optimal permutations of the minor without i
  std::vector<int> signs_j;
  bool same_sign = false;    // some choice of optimal permutations agrees in sign
};

struct EdgeAssessment {
  NewtonEdge edge;
  std::vector<int> cycle;  // even cycle of the midpoint (lattice length 2), in cycle order
  bool c_plus = false;
  std::vector<MinorSignPair> minor_pairs;  // every adjacent pair on a 4k cycle
  bool r_plus = false;                     // decided by the first adjacent pair
  /// Symmetric direction d such that moving the matrix slightly along d
  /// keeps exactly u, v (and the midpoint) optimal; for an r_plus lattice-2
  /// edge it also makes optimal minor permutations of one common sign win.
  std::vector<std::vector<Rational>> perturbation;
  /// The dominating minor permutations (indices of the minors) when r_plus.
  std::optional<std::pair<Permutation, Permutation>> minor_witness;
};

struct SymCorank1Analysis {
  TropDetResult det;
  std::vector<EdgeAssessment> edges;  // polytope edges spanned by optimal classes
};

SymCorank1Analysis analyze_sym_corank1(const TropMatrix& a, int max_n = kDefaultEnumerationBound);

/// Minor with row and column k deleted.
TropMatrix principal_minor(const TropMatrix& a, std::size_t k);

nlohmann::json class_json(const SignedMonomialClass& c);

}  // namespace troplift
