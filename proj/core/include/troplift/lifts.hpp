#pragma once

#include "troplift/membership.hpp"
#include "troplift/mpoly.hpp"
#include "troplift/puiseux.hpp"
#include "troplift/trop_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace troplift {

using SeriesMatrix = std::vector<std::vector<PuiseuxSeries>>;

enum class ClaimedProperty { Rank2, SymRank2, Singular, SymSingular };
enum class Positivity { None, AllPositive };
std::string to_string(ClaimedProperty p);
std::string to_string(Positivity p);

struct TranscriptStep {
  std::string check;
  bool passed = false;
  std::string detail;
};

struct LiftCertificate {
  TropMatrix target;
  SeriesMatrix lift;
  ClaimedProperty claimed = ClaimedProperty::Rank2;
  Positivity positivity = Positivity::None;
  std::string construction;
  std::vector<TranscriptStep> transcript;  // construction notes followed by verification
  bool valid = false;
};

struct LiftOptions {
  std::uint64_t seed = 0;
  std::optional<Rational> trunc;  // series precision for root-based constructions
  int max_retries = 32;
  int max_n = kDefaultEnumerationBound;
};

/// Recomputes valuations, symmetry, positivity and the claimed rank or
/// singularity from the lift alone. Never throws on a bad certificate.
std::vector<TranscriptStep> verify_lift(const LiftCertificate& cert);
/// Appends verify_lift to the transcript and sets `valid`.
void certify(LiftCertificate& cert);

/// t^B times t^C from a Barvinok factorization. Throws NotBarvinok2.
LiftCertificate lift_rank2_positive(const TropMatrix& a);
/// Real rank-2 lift from an embedding of the tree of A into the tree of
/// balls of the series field. Throws RankTooHigh.
LiftCertificate lift_rank2_real(const TropMatrix& a);

/// Explicit positive symmetric lifts for caterpillar symbic trees: the
/// whole-spine-fixed type by the row recursion, the one-fixed-point type as
/// a product t^B (t^B)^T. Throws NotCaterpillar.
LiftCertificate lift_sym_caterpillar(const TropMatrix& a, int max_n = kDefaultEnumerationBound);
/// Real symmetric rank-2 lift. Caterpillar inputs delegate to
/// lift_sym_caterpillar; otherwise the symbic tree is embedded so that the
/// colour swap becomes x -> -x, giving D (x 1^T + 1 x^T) D. Throws NotRank2.
LiftCertificate lift_sym_rank2_real(const TropMatrix& a, int max_n = kDefaultEnumerationBound);

/// Singular lift from a Birkhoff edge of optimal permutations; positive
/// modes need opposite signs. Throws NotOnEdge, SameSigns,
/// GenericRetryExhausted.
LiftCertificate lift_corank1(const TropMatrix& a, FieldMode mode, const LiftOptions& opts = {});
/// Singular symmetric lift along an edge of the Newton polytope of the
/// symmetric determinant. Throws NotOnEdge, MinorSignsOpposed,
/// GenericRetryExhausted.
LiftCertificate lift_sym_corank1(const TropMatrix& a, FieldMode mode, const LiftOptions& opts = {});

LiftCertificate lift(Variety v, const TropMatrix& a, FieldMode mode, const LiftOptions& opts = {});

/// Bordered 3x3 completion: [[a, b, x], [b, 1, c], [x, c, d]] made singular
/// with the valuation-0 root x.
struct BorderedRoot {
  SeriesMatrix matrix;
  PuiseuxSeries root;
  PuiseuxSeries discriminant;
  int disc_sign = 0;
  Rational root_valuation;
};
BorderedRoot bordered_root(const PuiseuxSeries& a, const PuiseuxSeries& b, const PuiseuxSeries& c,
                           const PuiseuxSeries& d, const Rational& cap);

/// Symbolic lift c_ij t^{a_ij} of a symmetric matrix with nonnegative
/// integer entries; entry (i, j) replaced by the variable x. Returns the
/// discriminant of the determinant in x together with its lowest-order
/// part in t. Variables: c_kl for k <= l (except (i, j)), then x, then t.
struct SymbolicDiscriminant {
  MPoly discriminant;
  MPoly lowest;
  unsigned lowest_degree = 0;
  std::vector<std::string> names;
};
SymbolicDiscriminant symbolic_discriminant(const TropMatrix& a, int i, int j);

/// Checks Disc_{m_ij}(det M) == 4 det(M_i) det(M_j) for the generic
/// symmetric n x n matrix of indeterminates.
bool discriminant_factorization_holds(int n, int i, int j);

/// Every 3x3 tropical minor attains its minimum on permutations of both
/// signs. Returns the number of minors checked, or the first failing
/// rows/cols through `failure`.
struct GeneratorCheck {
  bool holds = true;
  int minors_checked = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
GeneratorCheck three_minor_sign_check(const TropMatrix& a);

std::uint64_t derive_seed(std::uint64_t master, const TropMatrix& a);

}  // namespace troplift
