#pragma once

// Torus-fixed points of Hilb^n(C^4): finite order ideals in (Z>=0)^4.

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "dt4/exact.hpp"

namespace dt4::partitions {

using Box = std::array<int, 4>;

/// Default ceiling on n for enumeration and Ext computations.
inline constexpr int kDefaultMaxSize = 8;

/// A finite downward-closed set of lattice points; boxes are kept sorted.
class SolidPartition {
 public:
  SolidPartition() = default;
  /// Throws InvalidArgument unless the boxes form a downward-closed set.
  explicit SolidPartition(std::vector<Box> boxes);

  const std::vector<Box>& boxes() const { return boxes_; }
  std::size_t size() const { return boxes_.size(); }
  bool contains(const Box& b) const;
  /// Points outside the partition whose immediate predecessors are all inside.
  std::vector<Box> addable_boxes() const;
  SolidPartition with_box(const Box& b) const;
  /// Applies the coordinate permutation i -> perm[i] to every box.
  SolidPartition permuted(const std::array<int, 4>& perm) const;

  auto operator<=>(const SolidPartition&) const = default;
  bool operator==(const SolidPartition&) const = default;

 private:
  std::vector<Box> boxes_;
};

bool is_downward_closed(const std::vector<Box>& boxes);

/// Minimal monomial generators of the ideal whose staircase is the partition.
struct MonomialIdeal {
  std::vector<Box> generators;

  /// True when x^p lies in the ideal.
  bool contains(const Box& p) const;
};

/// All solid partitions of size n in canonical (sorted-box) order.
/// Throws ResourceLimit when n exceeds max_size.
std::vector<SolidPartition> enumerate(int n, int max_size = kDefaultMaxSize);

MonomialIdeal min_generators(const SolidPartition& sp);

/// Character of O_Z: the weight of box b is b itself.
exact::TorusCharacter oz_character(const SolidPartition& sp);

/// JSON array of 4-tuples, e.g. [[0,0,0,0],[1,0,0,0]].
std::string to_json(const SolidPartition& sp);

}  // namespace dt4::partitions
