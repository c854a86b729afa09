#include <doctest.h>

#include <functional>
#include <random>

#include "dt4/charclass.hpp"
#include "dt4/error.hpp"

using namespace dt4::charclass;

namespace {

// Number of integer partitions of 0..n by direct enumeration of
// non-increasing part sequences.
std::vector<long> partition_counts(int n) {
  std::vector<long> out(n + 1, 0);
  std::function<void(int, int)> walk = [&](int total, int largest) {
    out[total] += 1;
    for (int p = 1; p <= largest && total + p <= n; ++p) walk(total + p, p);
  };
  walk(0, n);
  return out;
}

// prod_{k=1}^{n} (1 - q^k)^{-e} by repeated multiplication of truncated polynomials.
std::vector<BigInt> product_series(long e, int n) {
  std::vector<BigInt> s(n + 1, 0);
  s[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (long rep = 0; rep < std::labs(e); ++rep) {
      if (e > 0) {
        for (int i = k; i <= n; ++i) s[i] += s[i - k];
      } else {
        for (int i = n; i >= k; --i) s[i] -= s[i - k];
      }
    }
  return s;
}

}  // namespace

TEST_CASE("ambient ring arithmetic") {
  const AmbientRing r({1, 4});
  CHECK(r.dimension() == 5);
  const auto h1 = r.hyperplane(0), h2 = r.hyperplane(1);
  CHECK(r.multiply(h1, h1).empty());
  CHECK(r.integrate(r.multiply(h1, r.multiply(r.multiply(h2, h2), r.multiply(h2, h2)))) == 1);
  CHECK(r.integrate(r.multiply(h1, h2)) == 0);
  // Todd class of P^n integrates to chi(O) = 1.
  CHECK(r.integrate(r.todd_tangent()) == 1);
  CHECK(AmbientRing({2}).integrate(AmbientRing({2}).todd_tangent()) == 1);
  const auto x = r.divisor({1, 1});
  CHECK(r.multiply(r.todd_line(x), r.inverse_todd_line(x)) == r.one());
  CHECK(r.dual(r.dual(r.exp(x))) == r.exp(x));
  CHECK(r.multiply(r.exp(x), r.exp(r.scale(x, -1))) == r.one());
  CHECK_THROWS_AS(AmbientRing({}), dt4::Error);
}

TEST_CASE("Riemann-Roch on projective space matches Bott") {
  // A hyperplane in P^1 x P^4 of degree (1,0) is a copy of P^4.
  const HypersurfaceContext ctx(AmbientRing({1, 4}), {1, 0});
  for (int k = -7; k <= 4; ++k) {
    const auto h = bott_cohomology(4, k);
    const BigInt chi = h[0] + h[4];
    CHECK(hrr_chi(ctx, line_bundle(ctx.ambient, {0, 0}), line_bundle(ctx.ambient, {0, k})) == chi);
  }
}

TEST_CASE("the sextic fourfold") {
  const HypersurfaceContext ctx = p1p4_sextic_context();
  CHECK(ctx.is_calabi_yau());
  CHECK(ctx.dimension() == 4);
  const SheafClass o = line_bundle(ctx.ambient, {0, 0});
  CHECK(hrr_chi(ctx, o, o) == 2);
  CHECK(ctx.integrate(ctx.ambient.multiply(ctx.ambient.hyperplane(1),
                                           ctx.ambient.multiply(ctx.ambient.hyperplane(1),
                                                                ctx.ambient.multiply(ctx.ambient.hyperplane(1),
                                                                                     ctx.ambient.hyperplane(1))))) ==
        2);
  CHECK_FALSE(HypersurfaceContext(AmbientRing({1, 4}), {1, 5}).is_calabi_yau());
}

TEST_CASE("Serre duality on the sextic") {
  const HypersurfaceContext ctx = p1p4_sextic_context();
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> deg(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const SheafClass a = line_bundle(ctx.ambient, {deg(rng), deg(rng)});
    const SheafClass b = line_bundle(ctx.ambient, {deg(rng), deg(rng)});
    CHECK(hrr_chi(ctx, a, b) == hrr_chi(ctx, b, a));
  }
}

TEST_CASE("line bundle cohomology") {
  CHECK(bott_cohomology(4, 1) == std::vector<BigInt>{5, 0, 0, 0, 0});
  CHECK(bott_cohomology(1, -2) == std::vector<BigInt>{0, 1});
  CHECK(bott_cohomology(4, -5) == std::vector<BigInt>{0, 0, 0, 0, 1});
  CHECK(bott_cohomology(4, -3) == std::vector<BigInt>{0, 0, 0, 0, 0});

  const HypersurfaceContext ctx = p1p4_sextic_context();
  CHECK(hypersurface_line_cohomology(ctx, {-2, 1}).dims == std::vector<BigInt>{0, 5, 0, 0, 0});
  CHECK(hypersurface_line_cohomology(ctx, {-3, 1}).dims == std::vector<BigInt>{0, 10, 0, 0, 0});
  CHECK(hypersurface_line_cohomology(ctx, {0, 0}).dims == std::vector<BigInt>{1, 0, 0, 0, 1});
}

TEST_CASE("Koszul dimensions agree with Riemann-Roch") {
  const HypersurfaceContext ctx = p1p4_sextic_context();
  const SheafClass o = line_bundle(ctx.ambient, {0, 0});
  int exact = 0;
  for (int a = -6; a <= 6; ++a)
    for (int b = -8; b <= 8; ++b) {
      const LineCohomology h = hypersurface_line_cohomology(ctx, {a, b});
      if (h.ambiguous) continue;
      ++exact;
      BigInt euler = 0;
      for (std::size_t i = 0; i < h.dims.size(); ++i) euler += (i % 2 ? -1 : 1) * h.dims[i];
      CHECK(euler == hrr_chi(ctx, o, line_bundle(ctx.ambient, {a, b})));
    }
  CHECK(exact > 100);
  CHECK(hypersurface_line_cohomology(ctx, {3, 6}).ambiguous);
}

TEST_CASE("Li-Qin bundles") {
  const auto rows = liqin_table();
  REQUIRE(rows.size() == 4);
  const long chi[] = {-6, -16, -26, -56};
  const long ext[] = {5, 10, 15, 30};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rows[i].chi == chi[i]);
    REQUIRE(rows[i].k_plus_one.has_value());
    CHECK(*rows[i].k_plus_one == ext[i]);
    CHECK(rows[i].closed_form == ext[i]);
    CHECK(rows[i].listed_k + 1 == ext[i]);
    CHECK_FALSE(rows[i].k_offset());
  }
  // chi(O_X) does not depend on the bundle.
  const HypersurfaceContext ctx = p1p4_sextic_context();
  const SheafClass o = line_bundle(ctx.ambient, {0, 0});
  for (int e1 = 0; e1 <= 1; ++e1)
    for (int e2 = 0; e2 <= 1; ++e2) {
      const SheafClass l1 = line_bundle(ctx.ambient, {-1, 1}), l2 = line_bundle(ctx.ambient, {e1 + 1, e2 - 1});
      const SheafClass e = direct_sum(ctx.ambient, l1, l2);
      CHECK(hrr_chi(ctx, e, e) == 2 * hrr_chi(ctx, o, o) + hrr_chi(ctx, l1, l2) + hrr_chi(ctx, l2, l1));
    }
  CHECK_THROWS_AS(liqin_row(2, 0), dt4::Error);
}

TEST_CASE("curve virtual dimensions") {
  CHECK(curve_vd(1, Holonomy::SU4) == 2);
  CHECK(curve_vd(3, Holonomy::SU4) == 6);
  CHECK(curve_vd(0, Holonomy::Sp2) == -1);
}

TEST_CASE("twisted tangent Euler numbers") {
  CHECK(euler_twisted_tangent({9, 3, -3, 1}) == 1);
  CHECK(euler_twisted_tangent({9, 3, 0, 0}) == 3);
  CHECK(euler_twisted_tangent({8, 4, 0, 0}) == 4);
}

TEST_CASE("generating series") {
  const auto p = partition_counts(30);
  const PowerSeries s = gco_series(1, 30);
  for (int k = 0; k <= 30; ++k) CHECK(s.coefficients()[k] == p[k]);
  CHECK(gco_series(0, 5).coefficients() == std::vector<BigInt>{1, 0, 0, 0, 0, 0});
  CHECK(gco_series(-1, 5).coefficients() == std::vector<BigInt>{1, -1, -1, 0, 0, 1});
  for (long e : {-3L, -1L, 2L, 5L}) CHECK(gco_series(e, 15).coefficients() == product_series(e, 15));
  for (long a : {-2L, 1L, 3L})
    for (long b : {-1L, 2L, 4L}) CHECK(gco_series(a, 20) * gco_series(b, 20) == gco_series(a + b, 20));
  CHECK((gco_series(1, 8) * gco_series(1, 5)).order() == 5);
  CHECK_THROWS_AS(gco_series(1, kMaxSeriesOrder + 1), dt4::Error);
}

TEST_CASE("the L1.L2 identity") {
  const L1L2Report a = l1l2_identity_check(p2_input(-1, -2));
  CHECK(a.applicable);
  CHECK(a.lhs == 2);
  CHECK(a.rhs == 2);
  CHECK(a.holds());
  CHECK(l1l2_identity_check(p2_input(-2, -1)).holds());
  const L1L2Report bad = l1l2_identity_check(p2_input(-2, -2));
  CHECK_FALSE(bad.applicable);
  CHECK_FALSE(bad.holds());
  CHECK(l1l2_identity_check(p1p1_input({-1, -1}, {-1, -1})).holds());
  CHECK(l1l2_identity_check(p1p1_input({0, -2}, {-2, 0})).holds());
  L1L2Input custom = p2_input(-1, -2);
  custom.chi_structure_sheaf = BigRational(2);
  CHECK_FALSE(l1l2_identity_check(custom).holds());
}
