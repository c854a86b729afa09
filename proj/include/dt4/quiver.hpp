#pragma once

// Quivers with relations tracked by counts: King slope stability,
// coprimality, framing, and Ext/virtual-dimension bookkeeping for NCDT4
// and NCDT3 virtual cycles.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dt4/exact.hpp"

namespace dt4::quiver {

using exact::BigRational;

struct Arrow {
  int tail = 0;
  int head = 0;
  bool operator==(const Arrow&) const = default;
};

class QuiverPresentation {
 public:
  QuiverPresentation() = default;
  /// Throws InvalidArgument if an arrow or relation endpoint is out of range.
  QuiverPresentation(int vertex_count, std::vector<Arrow> arrows,
                     std::map<std::pair<int, int>, int> relation_counts);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::map<std::pair<int, int>, int>& relation_counts() const { return relation_counts_; }
  int relation_count(int tail, int head) const;

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
  std::map<std::pair<int, int>, int> relation_counts_;
};

/// The cyclic quiver of K_{P^3}: four arrows each along 0->1->2->3->0 and
/// six relations each between i and i+2.
QuiverPresentation kp3_quiver();
/// The same quiver with the arrows between 3 and 0 removed (the P^3 quiver).
QuiverPresentation kp3_truncated_quiver();

using DimensionVector = std::vector<int>;
using Stability = std::vector<int>;

/// Theta(d) / sum(d); throws ZeroDimension for d = 0.
BigRational slope(const Stability& theta, const DimensionVector& d);
BigRational slope(const std::vector<BigRational>& theta, const DimensionVector& d);

/// Default ceiling on prod(d_i + 1) for coprimality enumeration.
inline constexpr long kMaxCoprimeBox = 1'000'000;

/// No proper nonzero e <= d shares the slope of d.
bool is_coprime(const DimensionVector& d, const Stability& theta, long max_box = kMaxCoprimeBox);

struct ExtDims {
  long ext0 = 0;
  long ext1 = 0;
  long ext2 = 0;
  bool operator==(const ExtDims&) const = default;
};

ExtDims ext_dims(const QuiverPresentation& q, const DimensionVector& d);

/// 2 ext1 - 2 ext0 - ext2 + 2.
long virtual_dim_ncdt4(const QuiverPresentation& q, const DimensionVector& d);
/// Degree of the framed class: v.d + 2 d.e - 2.
long framed_virtual_dim(const QuiverPresentation& q, const DimensionVector& d,
                        const DimensionVector& e);
/// Homological degree of the Poincare dual of a full-rank Euler class of
/// Ext^2 over a space of dimension ext1 - ext0 + 1: 2 ext1 - 2 ext0 + 2 - 2 ext2.
long full_euler_degree(const QuiverPresentation& q, const DimensionVector& d);

struct SplitReport {
  bool paired = false;
  long ext2_half = 0;        // one half of Ext^2, the truncated quiver's obstruction space
  long moduli_dim = 0;       // ext1 - ext0 + 1
  long ncdt4_degree = 0;     // virtual_dim_ncdt4
  long ncdt3_degree = 0;     // 2 moduli_dim - 2 ext2_half
  bool degrees_match() const { return paired && ncdt4_degree == ncdt3_degree; }
};

/// Checks that Ext^2 splits blockwise into (i,j)/(j,i) halves of equal size.
/// Throws NotApplicable if the relation blocks are not paired.
SplitReport isotropic_split_check(const QuiverPresentation& q, const DimensionVector& d);

struct FramedQuiver {
  QuiverPresentation quiver;      // framing vertex is the last one
  DimensionVector d;              // d with a trailing 1
  std::vector<BigRational> theta; // theta with a trailing Theta(d)/sum(d) + epsilon
  BigRational epsilon;
};

/// 1 / (2 sum(d) (1 + max|theta_i| sum(d))).
BigRational default_framing_epsilon(const DimensionVector& d, const Stability& theta);

FramedQuiver framed_quiver(const QuiverPresentation& q, const DimensionVector& d,
                           const DimensionVector& e, const Stability& theta);
FramedQuiver framed_quiver(const QuiverPresentation& q, const DimensionVector& d,
                           const DimensionVector& e, const Stability& theta,
                           const BigRational& epsilon);

/// Representation with every d_i <= 1.  Arrow values are indexed by the
/// arrow's position in the quiver; missing entries are zero.
struct ThinRepresentation {
  std::vector<int> support;
  std::map<std::size_t, BigRational> arrow_values;
};

enum class StabilityClass { Stable, Semistable, Unstable };
const char* to_string(StabilityClass c);

/// Classifies by comparing the slopes of all proper nonzero arrow-closed
/// subsets of the support with the slope of the whole representation.
StabilityClass thin_stability(const QuiverPresentation& q, const ThinRepresentation& rep,
                              const Stability& theta);

/// Quiver files: {"vertices": n, "arrows": [[t,h],...], "relations": [[i,j,count],...]}.
QuiverPresentation parse_quiver_json(const std::string& text);
std::string to_json(const QuiverPresentation& q);

}  // namespace dt4::quiver
