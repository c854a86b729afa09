#include <doctest.h>

#include <algorithm>
#include <set>

#include "dt4/error.hpp"
#include "dt4/solid_partition.hpp"
#include "partition_oracle.hpp"

using namespace dt4::partitions;

namespace {

const std::array<int, 4> kCycle{1, 2, 3, 0};
const std::array<int, 4> kSwap{1, 0, 2, 3};

bool dominates(const Box& a, const Box& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("counts match the brute-force oracle") {
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long>(enumerate(n).size()) == oracle::count_solid_partitions(n));
  }
}

TEST_CASE("enumeration is sorted and every member is closed") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate(n);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& sp : all) {
      CHECK(sp.size() == static_cast<std::size_t>(n));
      CHECK(is_downward_closed(sp.boxes()));
      CHECK(oz_character(sp).dimension() == n);
    }
  }
}

TEST_CASE("minimal generators form an antichain outside the partition") {
  for (const auto& sp : enumerate(5)) {
    const MonomialIdeal ideal = min_generators(sp);
    const auto& gens = ideal.generators;
    for (const auto& g : gens) {
      CHECK_FALSE(sp.contains(g));
      for (const auto& h : gens)
        if (g != h) CHECK_FALSE(dominates(g, h));
    }
    // Scan [0,5]^4: membership in the ideal is exactly non-membership in sp.
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
          for (int d = 0; d < 6; ++d) {
            const Box p{a, b, c, d};
            CHECK(ideal.contains(p) != sp.contains(p));
          }
  }
}

TEST_CASE("axis permutations permute the fixed-point set") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate(n);
    const std::set<SolidPartition> base(all.begin(), all.end());
    for (const auto& perm : {kCycle, kSwap}) {
      std::set<SolidPartition> image;
      for (const auto& sp : all) image.insert(sp.permuted(perm));
      CHECK(image == base);
    }
  }
}

TEST_CASE("small cases") {
  CHECK(enumerate(0).size() == 1);
  CHECK(enumerate(0)[0].size() == 0);
  const SolidPartition origin({{0, 0, 0, 0}});
  CHECK(origin.addable_boxes().size() == 4);
  CHECK(to_json(origin) == "[[0,0,0,0]]");
  CHECK(SolidPartition().addable_boxes() == std::vector<Box>{{0, 0, 0, 0}});
  CHECK(origin.with_box({0, 0, 1, 0}).size() == 2);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(SolidPartition({{0, 1, 0, 0}}), dt4::Error);
  CHECK_THROWS_AS(SolidPartition({{0, 0, 0, -1}}), dt4::Error);
  try {
    enumerate(9);
    FAIL("expected ResourceLimit");
  } catch (const dt4::Error& e) {
    CHECK(e.kind() == dt4::ErrorKind::ResourceLimit);
  }
  CHECK_THROWS(enumerate(-1));
}
