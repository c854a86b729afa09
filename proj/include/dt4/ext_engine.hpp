#pragma once

// Torus characters of Ext^1(I,I) and Ext^2(I,I) for monomial ideals I on C^4.
//
// Ext^i(I,I) is computed as Ext^{i+1}(O_Z, I), i >= 1, using the Taylor
// resolution F of R/I.  In internal degree d the complex Hom(F_k, I)_d has
// one basis vector for each k-subset S of generators with x^(a_S + d) in I,
// so everything reduces to signed incidence matrices.  A homogeneous class
// of internal degree d carries torus weight -d (the tangent direction
// x_i -> 1 at the origin has weight e_i).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dt4/exact.hpp"
#include "dt4/solid_partition.hpp"

namespace dt4::ext {

using partitions::Box;

class TaylorComplex {
 public:
  struct Summand {
    std::uint32_t subset;  // bitmask over generators
    Box degree;            // componentwise max of the generators in subset
  };
  /// Nonzero entry of d_k : F_k -> F_{k-1}.
  struct Entry {
    std::size_t target;  // index into summands(k - 1)
    std::size_t source;  // index into summands(k)
    int sign;
  };

  explicit TaylorComplex(const partitions::MonomialIdeal& ideal);

  const std::vector<Box>& generators() const { return generators_; }
  int length() const { return static_cast<int>(generators_.size()); }
  const std::vector<Summand>& summands(int k) const { return summands_.at(k); }
  /// Entries of d_k for k = 1..length().
  const std::vector<Entry>& differential(int k) const { return differentials_.at(k); }

  /// Checks d_{k-1} o d_k = 0 for every k on the subset indexing.
  bool d_squared_zero() const;
  /// Sum over k of (-1)^k times the number of summands of F_k with degree <= w.
  long euler_characteristic(const Box& w) const;

 private:
  std::vector<Box> generators_;
  std::vector<std::vector<Summand>> summands_;
  std::vector<std::vector<Entry>> differentials_;
};

/// Largest number of generators accepted by the engine.
inline constexpr int kMaxGenerators = 24;

TaylorComplex taylor_complex(const partitions::MonomialIdeal& ideal);

struct ExtProfile {
  exact::TorusCharacter ext1;
  exact::TorusCharacter ext2;
  int dim_ext1() const { return ext1.dimension(); }
  int dim_ext2() const { return ext2.dimension(); }
};

struct ExtOptions {
  /// Half-width of the weight box; defaults to n + 2.
  std::optional<int> box_bound;
  int max_size = partitions::kDefaultMaxSize;
};

/// Full-torus characters of Ext^1 and Ext^2.  Scans [-B, B]^4 and again
/// [-B-1, B+1]^4; throws BoxInstability if the answers differ.
ExtProfile ext_characters(const partitions::SolidPartition& sp, const ExtOptions& options = {});

/// Same computation over a single box, without the stability re-check.
ExtProfile ext_characters_in_box(const partitions::SolidPartition& sp, int bound);

/// Character of Hom_R(I, R/I) computed from generators and pairwise
/// syzygies alone.
exact::TorusCharacter tangent_character_oracle(const partitions::SolidPartition& sp);
int tangent_dim_oracle(const partitions::SolidPartition& sp);

/// {"ext1": [[w1,w2,w3,w4,m],...], "ext2": [...], "dims": [e1, e2]}
std::string to_json(const ExtProfile& profile);

}  // namespace dt4::ext
