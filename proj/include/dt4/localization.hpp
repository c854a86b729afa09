#pragma once

// Half Euler classes of Serre-duality quadratic forms and the equivariant
// DT4 partition function of points on C^4.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dt4/exact.hpp"
#include "dt4/ext_engine.hpp"
#include "dt4/solid_partition.hpp"

namespace dt4::localization {

using exact::RationalFunction;

/// How the default sign of each fixed point is chosen.
enum class OrientationRule {
  /// Sign +1 on the canonical pairing product at every point.
  PairingOnly,
  /// Canonical product at the smallest point of each orbit under permuting
  /// the first three axes, transported to the other points of the orbit.
  /// Every coefficient of the partition function is then symmetric in l1, l2, l3.
  SymmetricTransport,
};

/// Orientation data: a default rule plus per-point sign flips.  Overrides
/// multiply the default sign and are keyed by the index of the point in the
/// canonical enumeration of its size.
struct OrientationChoice {
  OrientationRule rule = OrientationRule::SymmetricTransport;
  std::map<std::size_t, int> overrides;

  int override_for(std::size_t index) const;
  /// Same rule with every point's sign flipped.
  OrientationChoice reversed(std::size_t fixed_points) const;
};

/// Insertion data (P, gamma).  Only the trivial insertion (1, 1) is evaluated.
struct Insertion {
  std::string polynomial = "1";
  std::string cohomology_class = "1";
  bool is_trivial() const { return polynomial == "1" && cohomology_class == "1"; }
};

/// True when the first nonzero coefficient of the restricted form is positive.
bool is_canonical_representative(const exact::Weight& restricted);

/// Default sign of sp under the given rule (+1 for PairingOnly).
int default_sign(const partitions::SolidPartition& sp, OrientationRule rule,
                 const ext::ExtOptions& options = {});

/// Half Euler class of a restricted (Calabi-Yau subtorus) character.
/// Odd dimension or a zero weight gives 0.  Otherwise each weight is paired
/// with its negative, the canonical representative of each pair is kept,
/// and the product is multiplied by sign.  Throws Unpairable if the
/// multiset is not closed under negation.
exact::MultiPoly half_euler(const exact::TorusCharacter& restricted, int sign);

/// Product of the restricted linear forms of every weight, with multiplicity.
exact::MultiPoly full_euler(const exact::TorusCharacter& character);

struct Contribution {
  std::size_t fixed_point = 0;
  RationalFunction value;
  int sign_used = 1;
  /// Numerator half Euler class and the restricted Ext^1 weights forming the denominator.
  exact::MultiPoly half_euler_class;
  std::vector<exact::Weight> denominator_weights;
};

struct LocalizationOptions {
  ext::ExtOptions ext;
  Insertion insertion;
};

Contribution dt4_point_contribution(const partitions::SolidPartition& sp, std::size_t index,
                                    const OrientationChoice& orient,
                                    const LocalizationOptions& options = {});

struct LevelResult {
  int n = 0;
  std::vector<Contribution> contributions;
  RationalFunction total;
};

/// Coefficient of q^n: sum of contributions over all solid partitions of size n.
LevelResult localize_level(int n, const OrientationChoice& orient,
                           const LocalizationOptions& options = {});

/// Coefficients of q^0..q^n_max.
std::vector<RationalFunction> partition_function(int n_max, const OrientationChoice& orient,
                                                 const LocalizationOptions& options = {});

struct ChernCheck {
  exact::SymmetricForm c3;  // e_3(l1..l4) restricted
  exact::SymmetricForm c4;  // e_4(l1..l4) restricted
  RationalFunction one_point;
  bool c3_matches = false;  // c3 == s3 - s1 s2
  bool c4_matches = false;  // c4 == +-s1 s3
  bool contribution_matches = false;  // one_point == +-c3/c4
  bool ok() const { return c3_matches && c4_matches && contribution_matches; }
};

ChernCheck equivariant_chern_check();

/// JSON document for one level, numbers as strings.
std::string to_json(const LevelResult& level);

}  // namespace dt4::localization
