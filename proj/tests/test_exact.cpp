#include <doctest.h>

#include <random>

#include "dt4/error.hpp"
#include "dt4/exact.hpp"
#include "dt4/linalg.hpp"

using namespace dt4::exact;

namespace {

MultiPoly random_poly(std::mt19937& rng, int terms = 4, int max_degree = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_degree);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    BigRational c(coeff(rng), 1 + std::abs(coeff(rng)));
    c.canonicalize();
    p += MultiPoly::monomial({deg(rng), deg(rng), deg(rng)}, c);
  }
  return p;
}

MultiPoly l(int i) { return MultiPoly::variable(i); }

// Rank by plain Gaussian elimination over Q, independent of the Bareiss path.
std::size_t rational_rank(const dt4::linalg::IntMatrix& m) {
  std::vector<std::vector<BigRational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const BigRational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * MultiPoly(1) == a);
    if (!b.is_zero()) {
      const auto q = (a * b).divide_exact(b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
  }
}

TEST_CASE("fourth parameter is eliminated") {
  CHECK(l(3) == -(l(0) + l(1) + l(2)));
  CHECK((l(0) + l(1) + l(2) + l(3)).is_zero());
  CHECK(restrict_to_cy_torus(Weight{{1, 1, 1, 1}}).is_zero());
  CHECK(restrict_to_cy_torus(Weight{{0, 0, 0, 1}}) == l(3));
  CHECK(cy_reduce(Weight{{2, 1, 0, 1}}) == Weight{{1, 0, -1, 0}});
}

TEST_CASE("to_symmetric round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const SymmetricForm f(random_poly(rng, 3, 2));
    CHECK(to_symmetric(f.expand()) == f);
  }
  CHECK(to_symmetric(l(0) * l(1) * l(2)).to_string() == "s3");
  CHECK_THROWS_AS(to_symmetric(l(0)), dt4::Error);
  try {
    to_symmetric(l(0) * l(0) + l(1));
  } catch (const dt4::Error& e) {
    CHECK(e.kind() == dt4::ErrorKind::NotSymmetric);
  }
}

TEST_CASE("product of the four parameters") {
  // l1 l2 l3 l4 = -s1 s3 on the subtorus.
  CHECK(to_symmetric(l(0) * l(1) * l(2) * l(3)) == parse_symmetric("-s1*s3"));
}

TEST_CASE("rational function canonical form") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly n = random_poly(rng), d = random_poly(rng);
    if (d.is_zero()) continue;
    const RationalFunction r(n, d);
    const RationalFunction again(r.numerator(), r.denominator());
    CHECK(again.numerator() == r.numerator());
    CHECK(again.denominator() == r.denominator());
    CHECK(r == RationalFunction(n * BigRational(3, 7), d * BigRational(3, 7)));
  }
  CHECK(RationalFunction(l(0), l(0) * l(1)) == RationalFunction(MultiPoly(1), l(1)));
  CHECK(RationalFunction(l(0) + l(1), (l(0) + l(1)) * l(2)).reduced().denominator() == l(2));
  CHECK_THROWS_AS(RationalFunction(MultiPoly(1), MultiPoly()), dt4::Error);
}

TEST_CASE("field operations") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalFunction a(random_poly(rng), random_poly(rng) + MultiPoly(9));
    const RationalFunction b(random_poly(rng), l(trial % 3) + MultiPoly(2));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a + (-a) == RationalFunction());
  }
}

TEST_CASE("render and parse round trip") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly d = random_poly(rng);
    if (d.is_zero()) d = MultiPoly(1);
    const RationalFunction r(random_poly(rng), d);
    const RationalFunction back = parse_rational_function(r.to_string());
    CHECK(back == r);
    CHECK(back.to_string() == r.to_string());
  }
  CHECK(parse_poly("l4") == l(3));
  CHECK(parse_poly("2*l1^2 − l2") == MultiPoly::monomial({2, 0, 0}, 2) - l(1));
  CHECK(parse_rational_function("(l1+l2)/(l1*l2)") ==
        RationalFunction(l(0) + l(1), l(0) * l(1)));
  CHECK(parse_symmetric("s1*s2 - s3").expand() ==
        elementary_symmetric(1) * elementary_symmetric(2) - elementary_symmetric(3));
  CHECK_THROWS_AS(parse_poly("l5"), dt4::Error);
  CHECK_THROWS_AS(parse_poly("(l1"), dt4::Error);
  CHECK(MultiPoly().to_string() == "0");
}

TEST_CASE("symmetric rendering of rational functions") {
  const RationalFunction r(elementary_symmetric(1) * elementary_symmetric(2) - elementary_symmetric(3),
                           elementary_symmetric(1) * elementary_symmetric(3));
  REQUIRE(r.symmetric_string().has_value());
  CHECK(*r.symmetric_string() == "(s1*s2 - s3)/(s1*s3)");
  CHECK_FALSE(RationalFunction(l(0)).symmetric_string().has_value());
}

TEST_CASE("torus characters") {
  TorusCharacter c;
  c.add(Weight{{1, 0, 0, 0}});
  c.add(Weight{{1, 0, 0, 0}}, 2);
  c.add(Weight{{0, 1, 0, 1}});
  CHECK(c.dimension() == 4);
  CHECK(c.weights().at(Weight{{1, 0, 0, 0}}) == 3);
  CHECK(c.negated().negated() == c);
  CHECK(c.restricted().weights().count(Weight{{-1, 0, -1, 0}}) == 1);
}

TEST_CASE("exact rank agrees with rational elimination") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> entry(-2, 2), dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const long rows = dim(rng), cols = dim(rng);
    dt4::linalg::IntMatrix m(rows, std::vector<long>(cols));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    if (trial % 3 == 0 && rows > 1) m[rows - 1] = m[0];
    CHECK(dt4::linalg::exact_rank(m) == rational_rank(m));
  }
  CHECK(dt4::linalg::exact_rank({}) == 0);
}
