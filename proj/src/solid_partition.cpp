#include "dt4/solid_partition.hpp"

#include <algorithm>
#include <sstream>

#include "dt4/error.hpp"

namespace dt4::partitions {

namespace {

bool leq(const Box& a, const Box& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2] && a[3] <= b[3];
}

}  // namespace

bool is_downward_closed(const std::vector<Box>& boxes) {
  std::set<Box> s(boxes.begin(), boxes.end());
  for (const auto& b : boxes) {
    for (int i = 0; i < 4; ++i) {
      if (b[i] < 0) return false;
      if (b[i] == 0) continue;
      Box prev = b;
      --prev[i];
      if (!s.count(prev)) return false;
    }
  }
  return true;
}

SolidPartition::SolidPartition(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  std::sort(boxes_.begin(), boxes_.end());
  if (std::adjacent_find(boxes_.begin(), boxes_.end()) != boxes_.end())
    throw Error(ErrorKind::InvalidArgument, "duplicate box in solid partition");
  if (!is_downward_closed(boxes_))
    throw Error(ErrorKind::InvalidArgument, "boxes are not downward closed");
}

bool SolidPartition::contains(const Box& b) const {
  return std::binary_search(boxes_.begin(), boxes_.end(), b);
}

std::vector<Box> SolidPartition::addable_boxes() const {
  std::set<Box> out;
  auto addable = [&](const Box& c) {
    if (contains(c)) return false;
    for (int i = 0; i < 4; ++i) {
      if (c[i] == 0) continue;
      Box prev = c;
      --prev[i];
      if (!contains(prev)) return false;
    }
    return true;
  };
  if (boxes_.empty()) return {Box{0, 0, 0, 0}};
  for (const auto& b : boxes_) {
    for (int i = 0; i < 4; ++i) {
      Box c = b;
      ++c[i];
      if (addable(c)) out.insert(c);
    }
  }
  return {out.begin(), out.end()};
}

SolidPartition SolidPartition::with_box(const Box& b) const {
  std::vector<Box> bs = boxes_;
  bs.push_back(b);
  return SolidPartition(std::move(bs));
}

SolidPartition SolidPartition::permuted(const std::array<int, 4>& perm) const {
  std::vector<Box> bs;
  bs.reserve(boxes_.size());
  for (const auto& b : boxes_) {
    Box c{};
    for (int i = 0; i < 4; ++i) c[perm[i]] = b[i];
    bs.push_back(c);
  }
  return SolidPartition(std::move(bs));
}

bool MonomialIdeal::contains(const Box& p) const {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Box& g) { return leq(g, p); });
}

std::vector<SolidPartition> enumerate(int n, int max_size) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative partition size");
  if (n > max_size)
    throw Error(ErrorKind::ResourceLimit,
                "n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_size));
  std::set<SolidPartition> level{SolidPartition()};
  for (int k = 0; k < n; ++k) {
    std::set<SolidPartition> next;
    for (const auto& sp : level)
      for (const auto& b : sp.addable_boxes()) next.insert(sp.with_box(b));
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

MonomialIdeal min_generators(const SolidPartition& sp) {
  // A minimal generator is a point outside sp each of whose predecessors
  // lies in sp; these are exactly the addable boxes.
  MonomialIdeal ideal;
  ideal.generators = sp.addable_boxes();
  return ideal;
}

exact::TorusCharacter oz_character(const SolidPartition& sp) {
  exact::TorusCharacter chi;
  for (const auto& b : sp.boxes()) chi.add(exact::Weight{b});
  return chi;
}

std::string to_json(const SolidPartition& sp) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const auto& b = sp.boxes()[i];
    if (i) out << ',';
    out << '[' << b[0] << ',' << b[1] << ',' << b[2] << ',' << b[3] << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace dt4::partitions
