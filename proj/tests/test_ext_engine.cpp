#include <doctest.h>

#include "dt4/error.hpp"
#include "dt4/ext_engine.hpp"

using namespace dt4::ext;
using dt4::exact::TorusCharacter;
using dt4::exact::Weight;
using dt4::partitions::SolidPartition;
using dt4::partitions::enumerate;
using dt4::partitions::min_generators;

namespace {

TorusCharacter permuted(const TorusCharacter& c, const std::array<int, 4>& perm) {
  TorusCharacter out;
  for (const auto& [w, m] : c.weights()) {
    Weight p;
    for (int i = 0; i < 4; ++i) p.c[perm[i]] = w.c[i];
    out.add(p, m);
  }
  return out;
}

}  // namespace

TEST_CASE("single point") {
  const ExtProfile p = ext_characters(SolidPartition({{0, 0, 0, 0}}));
  TorusCharacter ext1, ext2;
  for (int i = 0; i < 4; ++i) {
    Weight w;
    w.c[i] = 1;
    ext1.add(w);
    for (int j = i + 1; j < 4; ++j) {
      Weight v;
      v.c[i] = v.c[j] = 1;
      ext2.add(v);
    }
  }
  CHECK(p.ext1 == ext1);
  CHECK(p.ext2 == ext2);
  CHECK(to_json(p) ==
        "{\"ext1\":[[0,0,0,1,1],[0,0,1,0,1],[0,1,0,0,1],[1,0,0,0,1]],"
        "\"ext2\":[[0,0,1,1,1],[0,1,0,1,1],[0,1,1,0,1],[1,0,0,1,1],[1,0,1,0,1],[1,1,0,0,1]],"
        "\"dims\":[4,6]}");
}

TEST_CASE("Taylor complex is a complex resolving the quotient") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& sp : enumerate(n)) {
      const TaylorComplex t(min_generators(sp));
      CHECK(t.d_squared_zero());
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
          for (int c = 0; c <= 1; ++c)
            for (int d = 0; d <= 1; ++d) {
              const dt4::partitions::Box w{a, b, c, d};
              CHECK(t.euler_characteristic(w) == (sp.contains(w) ? 1 : 0));
            }
    }
}

TEST_CASE("Ext1 agrees with the tangent-space oracle") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& sp : enumerate(n)) {
      const ExtProfile p = ext_characters(sp);
      CHECK(p.ext1 == tangent_character_oracle(sp));
      CHECK(p.dim_ext1() == 4 * n);
      CHECK(tangent_dim_oracle(sp) == 4 * n);
      CHECK(2 * p.dim_ext1() - p.dim_ext2() == 2 * n);
    }
}

TEST_CASE("Ext2 is self-dual on the subtorus with no trivial weight") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& sp : enumerate(n)) {
      const ExtProfile p = ext_characters(sp);
      const TorusCharacter r = p.ext2.restricted();
      CHECK(r == r.negated());
      CHECK(r.weights().count(Weight{}) == 0);
      CHECK(p.ext1.restricted().weights().count(Weight{}) == 0);
    }
}

TEST_CASE("axis permutations act on the characters") {
  const std::array<std::array<int, 4>, 3> perms{{{1, 2, 3, 0}, {1, 0, 2, 3}, {3, 2, 1, 0}}};
  for (const auto& sp : enumerate(3)) {
    const ExtProfile p = ext_characters(sp);
    for (const auto& perm : perms) {
      const ExtProfile q = ext_characters(sp.permuted(perm));
      CHECK(q.ext1 == permuted(p.ext1, perm));
      CHECK(q.ext2 == permuted(p.ext2, perm));
    }
  }
}

TEST_CASE("too small a box is detected") {
  const SolidPartition column({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 2}});
  ExtOptions opts;
  opts.box_bound = 0;
  try {
    ext_characters(column, opts);
    FAIL("expected BoxInstability");
  } catch (const dt4::Error& e) {
    CHECK(e.kind() == dt4::ErrorKind::BoxInstability);
  }
  CHECK(ext_characters_in_box(column, 5).ext2 == ext_characters(column).ext2);
}
