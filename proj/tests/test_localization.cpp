#include <doctest.h>

#include "dt4/error.hpp"
#include "dt4/localization.hpp"

using namespace dt4::localization;
using dt4::exact::MultiPoly;
using dt4::exact::TorusCharacter;
using dt4::exact::Weight;
using dt4::exact::elementary_symmetric;
using dt4::partitions::SolidPartition;
using dt4::partitions::enumerate;

namespace {

MultiPoly l(int i) { return MultiPoly::variable(i); }

const std::array<std::array<int, 3>, 5> kS3{{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};

}  // namespace

TEST_CASE("half Euler class of the single-point obstruction space") {
  const auto p = dt4::ext::ext_characters(SolidPartition({{0, 0, 0, 0}}));
  const MultiPoly expected = (l(0) + l(1)) * (l(0) + l(2)) * (l(1) + l(2));
  CHECK(half_euler(p.ext2.restricted(), 1) == expected);
  CHECK(half_euler(p.ext2.restricted(), -1) == -expected);
}

TEST_CASE("vanishing and unpairable characters") {
  TorusCharacter odd;
  odd.add(Weight{{1, 0, 0, 0}});
  odd.add(Weight{{-1, 0, 0, 0}});
  odd.add(Weight{{0, 1, 0, 0}});
  CHECK(half_euler(odd, 1).is_zero());

  TorusCharacter trivial;
  trivial.add(Weight{});
  trivial.add(Weight{{1, 0, 0, 0}});
  CHECK(half_euler(trivial, 1).is_zero());

  TorusCharacter lopsided;
  lopsided.add(Weight{{1, 0, 0, 0}}, 2);
  try {
    half_euler(lopsided, 1);
    FAIL("expected Unpairable");
  } catch (const dt4::Error& e) {
    CHECK(e.kind() == dt4::ErrorKind::Unpairable);
  }
}

TEST_CASE("canonical representatives") {
  CHECK(is_canonical_representative(Weight{{1, -1, 0, 0}}));
  CHECK_FALSE(is_canonical_representative(Weight{{-1, 1, 0, 0}}));
  CHECK(is_canonical_representative(Weight{{0, 0, 2, 0}}));
}

TEST_CASE("square of the half Euler class") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& sp : enumerate(n)) {
      const TorusCharacter r = dt4::ext::ext_characters(sp).ext2.restricted();
      const MultiPoly h = half_euler(r, 1);
      if (h.is_zero()) continue;
      const int dim = r.dimension();
      MultiPoly product = (dim / 2) % 2 ? MultiPoly(-1) : MultiPoly(1);
      for (const auto& [w, m] : r.weights()) product *= dt4::exact::restrict_to_cy_torus(w).pow(m);
      CHECK(h * h == product);
      CHECK(full_euler(r) == product * ((dim / 2) % 2 ? MultiPoly(-1) : MultiPoly(1)));
    }
}

TEST_CASE("single point contribution") {
  const LevelResult level = localize_level(1, OrientationChoice{});
  REQUIRE(level.contributions.size() == 1);
  const auto& c = level.contributions[0];
  MultiPoly den(1);
  for (const auto& w : c.denominator_weights) den *= dt4::exact::restrict_to_cy_torus(w);
  CHECK(den == -(elementary_symmetric(1) * elementary_symmetric(3)));

  const RationalFunction expected(elementary_symmetric(1) * elementary_symmetric(2) - elementary_symmetric(3),
                                  elementary_symmetric(1) * elementary_symmetric(3));
  CHECK((level.total == expected || level.total == -expected));
  REQUIRE(level.total.symmetric_string().has_value());
  CHECK(*level.total.symmetric_string() == "(-s1*s2 + s3)/(s1*s3)");
  CHECK(equivariant_chern_check().ok());
}

TEST_CASE("reversing the orientation negates every contribution") {
  for (int n = 1; n <= 3; ++n) {
    const LevelResult base = localize_level(n, OrientationChoice{});
    const LevelResult flipped = localize_level(n, OrientationChoice{}.reversed(base.contributions.size()));
    for (std::size_t i = 0; i < base.contributions.size(); ++i)
      CHECK(flipped.contributions[i].value == -base.contributions[i].value);
    CHECK(flipped.total == -base.total);
  }
  OrientationChoice one;
  one.overrides[0] = -1;
  CHECK(partition_function(1, one)[1] == -partition_function(1, OrientationChoice{})[1]);
}

TEST_CASE("totals are invariant under permuting l1, l2, l3") {
  const auto coeffs = partition_function(3, OrientationChoice{});
  REQUIRE(coeffs.size() == 4);
  CHECK(coeffs[0] == RationalFunction(MultiPoly(1)));
  for (const auto& c : coeffs)
    for (const auto& perm : kS3) CHECK(c.permuted(perm) == c);
}

TEST_CASE("summation order does not matter") {
  const LevelResult level = localize_level(3, OrientationChoice{});
  RationalFunction reversed;
  for (auto it = level.contributions.rbegin(); it != level.contributions.rend(); ++it) reversed = reversed + it->value;
  CHECK(reversed == level.total);
}

TEST_CASE("per-point signs") {
  for (const auto& sp : enumerate(2)) {
    CHECK(default_sign(sp, OrientationRule::PairingOnly) == 1);
    const int s = default_sign(sp, OrientationRule::SymmetricTransport);
    CHECK((s == 1 || s == -1));
  }
}

TEST_CASE("unsupported requests") {
  LocalizationOptions opts;
  opts.insertion.polynomial = "l1";
  try {
    localize_level(1, OrientationChoice{}, opts);
    FAIL("expected NotApplicable");
  } catch (const dt4::Error& e) {
    CHECK(e.kind() == dt4::ErrorKind::NotApplicable);
  }
  OrientationChoice bad;
  bad.overrides[7] = -1;
  CHECK_THROWS_AS(localize_level(1, bad), dt4::Error);
  CHECK_THROWS_AS(partition_function(9, OrientationChoice{}), dt4::Error);
}

TEST_CASE("level serialization") {
  CHECK(to_json(localize_level(0, OrientationChoice{})) ==
        "{\"n\":0,\"fixed_points\":1,\"contributions\":[{\"index\":0,\"value\":\"1\",\"sign\":1}],"
        "\"total\":\"1\",\"symmetric_form\":\"1\"}");
}
