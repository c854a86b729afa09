#pragma once

// Exact arithmetic over Q for the equivariant parameters of the Calabi-Yau
// subtorus of (C*)^4.  The fourth parameter l4 is eliminated on ingestion
// via l4 = -l1-l2-l3, so polynomials live in Q[l1,l2,l3] and equality is
// plain coefficient comparison.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dt4::exact {

using BigInt = mpz_class;
using BigRational = mpq_class;

std::string to_string(const BigRational& q);

using Exponent = std::array<int, 3>;

/// Graded lexicographic order with l1 > l2 > l3; sorts larger terms first.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponent, BigRational, GrlexDescending>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly monomial(const Exponent& e, const BigRational& c = 1);
  /// The parameter l_{i+1} for i in 0..3; i == 3 yields -l1-l2-l3.
  static MultiPoly variable(int i);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  std::optional<std::pair<Exponent, BigRational>> leading_term() const;
  BigRational coefficient(const Exponent& e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const BigRational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(unsigned k) const;
  /// Substitutes variable i by variable perm[i].
  MultiPoly permuted(const std::array<int, 3>& perm) const;
  bool is_symmetric() const;

  /// Componentwise minimum exponent over all terms (zero polynomial: all zeros).
  Exponent monomial_content() const;
  MultiPoly divide_monomial(const Exponent& e) const;
  /// Positive rational c such that p / c has coprime integer coefficients.
  BigRational content() const;
  /// Exact quotient p / d when d divides p, std::nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
  BigRational evaluate(const std::array<BigRational, 3>& point) const;

  /// Renders with the given variable names, terms in descending grlex order.
  std::string to_string(const std::array<std::string_view, 3>& names = {"l1", "l2", "l3"}) const;

 private:
  void add_term(const Exponent& e, const BigRational& c);
  Terms terms_;
};

/// Integer weight vector (w1..w4) read as the linear form sum w_i l_i.
struct Weight {
  std::array<int, 4> c{};

  Weight operator+(const Weight& o) const;
  Weight operator-() const;
  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

/// The linear form of w on the subtorus t1 t2 t3 t4 = 1.
MultiPoly restrict_to_cy_torus(const Weight& w);
/// Same form as a weight with vanishing fourth entry (w_i - w_4, 0).
Weight cy_reduce(const Weight& w);

/// Multiset of weights; every stored multiplicity is at least 1.
class TorusCharacter {
 public:
  using Map = std::map<Weight, int>;

  TorusCharacter() = default;
  explicit TorusCharacter(const std::vector<Weight>& ws);

  void add(const Weight& w, int multiplicity = 1);
  const Map& weights() const { return weights_; }
  int dimension() const;
  /// Character of the restriction to the Calabi-Yau subtorus, weights in cy_reduce form.
  TorusCharacter restricted() const;
  TorusCharacter negated() const;
  bool operator==(const TorusCharacter&) const = default;

 private:
  Map weights_;
};

/// Polynomial in the elementary symmetric functions s1, s2, s3 of l1, l2, l3.
class SymmetricForm {
 public:
  SymmetricForm() = default;
  explicit SymmetricForm(MultiPoly in_sigma) : p_(std::move(in_sigma)) {}

  /// Same storage as MultiPoly, with exponents counting s1, s2, s3.
  const MultiPoly& in_sigma() const { return p_; }
  MultiPoly expand() const;
  std::string to_string() const { return p_.to_string({"s1", "s2", "s3"}); }
  bool operator==(const SymmetricForm&) const = default;

 private:
  MultiPoly p_;
};

/// Elementary symmetric polynomials sigma_1..sigma_3 of l1, l2, l3 (index 1..3).
MultiPoly elementary_symmetric(int k);
/// Rewrites a symmetric polynomial in s1, s2, s3; throws NotSymmetric otherwise.
SymmetricForm to_symmetric(const MultiPoly& p);

class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(MultiPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(MultiPoly num, MultiPoly den);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  /// Removes common factors among l1, l2, l3, l4 and l_i + l_j by trial division.
  RationalFunction reduced() const;
  RationalFunction permuted(const std::array<int, 3>& perm) const;
  std::string to_string() const;
  /// "(N)/(D)" in s1, s2, s3 when both parts are symmetric.
  std::optional<std::string> symmetric_string() const;

 private:
  void canonicalize();
  MultiPoly num_;
  MultiPoly den_;
};

/// Cross-multiplication equality a.num * b.den == b.num * a.den.
bool ratfun_equal(const RationalFunction& a, const RationalFunction& b);
inline bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return ratfun_equal(a, b);
}

/// Parses the textual grammar used by to_string: sums of products of
/// rationals p/q and the variables l1..l4 with ^ powers, parentheses, and
/// '/' between rational-function factors.
RationalFunction parse_rational_function(std::string_view text);
MultiPoly parse_poly(std::string_view text);
/// Same grammar over s1, s2, s3.
SymmetricForm parse_symmetric(std::string_view text);

}  // namespace dt4::exact
