#pragma once

// Intersection theory on products of projective spaces and their
// hypersurfaces: Chern characters, Todd classes, Riemann-Roch, line bundle
// cohomology, plus the surface-level generating series.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dt4/exact.hpp"

namespace dt4::charclass {

using exact::BigInt;
using exact::BigRational;

/// Cohomology of P^{n_1} x ... x P^{n_m}: polynomials in the hyperplane
/// classes h_i truncated by h_i^{n_i+1} = 0.
class AmbientRing {
 public:
  using Monomial = std::vector<int>;
  using Element = std::map<Monomial, BigRational>;

  explicit AmbientRing(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int dimension() const;

  Element one() const;
  Element hyperplane(int i) const;
  /// sum_i d_i h_i.
  Element divisor(const std::vector<int>& degrees) const;

  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const BigRational& c) const;
  Element multiply(const Element& a, const Element& b) const;
  /// sum_k coeffs[k] x^k for x without constant term; the series is cut at the ring dimension.
  Element compose(const std::vector<BigRational>& coeffs, const Element& x) const;
  Element exp(const Element& x) const;
  /// Todd class of a line bundle with first Chern class x.
  Element todd_line(const Element& x) const;
  /// Reciprocal Todd class 1/td(x) = (1 - e^{-x}) / x.
  Element inverse_todd_line(const Element& x) const;
  /// Todd class of the tangent bundle, prod_i td(h_i)^{n_i+1}.
  Element todd_tangent() const;
  /// Flips the sign of every odd-degree part.
  Element dual(const Element& a) const;
  /// Coefficient of h_1^{n_1} ... h_m^{n_m}.
  BigRational integrate(const Element& a) const;

 private:
  std::vector<int> factors_;
};

/// Smooth hypersurface X in an ambient product, cut out by a section of O(D).
struct HypersurfaceContext {
  AmbientRing ambient;
  std::vector<int> divisor;

  HypersurfaceContext(AmbientRing ring, std::vector<int> degrees);
  int dimension() const { return ambient.dimension() - 1; }
  /// D equals the anticanonical class (n_1+1, ..., n_m+1).
  bool is_calabi_yau() const;
  /// Integral over X of a class pulled back from the ambient space.
  BigRational integrate(const AmbientRing::Element& a) const;
  /// Todd class of T_X pushed up to the ambient ring: td(T_amb) / td(O(D)).
  AmbientRing::Element todd() const;
};

/// The (2,5) hypersurface in P^1 x P^4.
HypersurfaceContext p1p4_sextic_context();

struct SheafClass {
  AmbientRing::Element chern_character;
  long rank = 0;
};

SheafClass line_bundle(const AmbientRing& ring, const std::vector<int>& degrees);
SheafClass direct_sum(const AmbientRing& ring, const SheafClass& a, const SheafClass& b);

/// chi(a, b) = int_X ch(a)^vee ch(b) td(X).  Throws InvalidArgument if the
/// integral is not an integer (inconsistent input classes).
BigInt hrr_chi(const HypersurfaceContext& ctx, const SheafClass& a, const SheafClass& b);

/// h^0..h^n of O(k) on P^n.
std::vector<BigInt> bott_cohomology(int n, long k);
/// Kunneth: h^0..h^dim of O(d_1, ..., d_m) on the ambient product.
std::vector<BigInt> ambient_line_cohomology(const AmbientRing& ring, const std::vector<int>& degrees);

struct LineCohomology {
  bool ambiguous = false;
  std::vector<BigInt> dims;  // h^0..h^{dim X}; empty when ambiguous
  std::string reason;
};

/// From 0 -> O(a - D) -> O(a) -> O_X(a) -> 0.  When no cohomological degree
/// has both twists nonzero every connecting map is forced and the dims are
/// read off; otherwise the result is marked ambiguous.
LineCohomology hypersurface_line_cohomology(const HypersurfaceContext& ctx,
                                            const std::vector<int>& degrees);

enum class Holonomy { SU4, Sp2 };
/// Real virtual dimension of ideal sheaves of curves: 2n or 2n - 1.
long curve_vd(long n, Holonomy h);

/// Intersection numbers of a surface and a line bundle L on it.
struct SurfaceData {
  long c1_squared = 0;
  long c2 = 0;
  long c1_dot_l = 0;
  long l_squared = 0;
};

/// c2(TS tensor L) = c2 + c1.L + L^2.
long euler_twisted_tangent(const SurfaceData& s);

/// Truncated integer q-series.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(std::vector<BigInt> coeffs, std::size_t order);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  std::size_t order() const { return order_; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;  // coeffs_[k] is the q^k coefficient, k <= order_
  std::size_t order_ = 0;
};

inline constexpr std::size_t kMaxSeriesOrder = 20000;

/// prod_{k>=1} (1 - q^k)^{-exponent} through q^order.
PowerSeries gco_series(long exponent, std::size_t order);

struct DivisorData {
  long c1_dot = 0;   // c1(S).L
  long self = 0;     // L^2
};

struct L1L2Input {
  long c1_squared = 0;
  long c2 = 0;
  DivisorData l1;
  DivisorData l2;
  long l1_dot_l2 = 0;
  long h1_l1 = 0;
  /// Defaults to Noether's (c1^2 + c2) / 12.
  std::optional<BigRational> chi_structure_sheaf;
};

struct L1L2Report {
  bool applicable = false;  // L1 + L2 matches K_S at the level of intersection numbers
  std::string reason;
  long lhs = 0;             // L1.L2
  BigRational rhs;          // 2 (h^1(S, L1) + chi(O_S))
  bool holds() const { return applicable && BigRational(lhs) == rhs; }
};

L1L2Report l1l2_identity_check(const L1L2Input& in);
/// P^2 with L1 = O(a1), L2 = O(a2); h^1 from Bott.
L1L2Input p2_input(int a1, int a2);
/// P^1 x P^1 with L1 = O(a1), L2 = O(a2); h^1 from Kunneth.
L1L2Input p1p1_input(const std::vector<int>& a1, const std::vector<int>& a2);

struct LiQinRow {
  int eps1 = 0;
  int eps2 = 0;
  BigInt chi;
  std::optional<BigInt> k_plus_one;  // dimension of the extension space; empty if ambiguous
  BigInt closed_form;                 // (1 + eps1) C(6 - eps2, 4)
  long listed_k = 0;
  /// True when listed_k + 1 differs from closed_form.
  bool k_offset() const { return BigInt(listed_k + 1) != closed_form; }
};

/// Rank-two bundles O_X(-1,1) + O_X(eps1+1, eps2-1) on the (2,5) hypersurface,
/// in the order (0,1), (1,1), (0,0), (1,0).
std::vector<LiQinRow> liqin_table();
LiQinRow liqin_row(int eps1, int eps2);

}  // namespace dt4::charclass
