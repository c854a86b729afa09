#include "dt4/charclass.hpp"

#include <algorithm>
#include <numeric>

#include "dt4/error.hpp"

namespace dt4::charclass {

namespace {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigRational factorial_inverse(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return BigRational(1) / BigRational(f);
}

// Coefficients of (1 - e^{-x}) / x through x^n.
std::vector<BigRational> inverse_todd_series(int n) {
  std::vector<BigRational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = (k % 2 ? -1 : 1) * factorial_inverse(k + 1);
  return c;
}

// Reciprocal of a series with constant term 1, through x^n.
std::vector<BigRational> reciprocal(const std::vector<BigRational>& f) {
  std::vector<BigRational> g(f.size());
  g[0] = 1;
  for (std::size_t k = 1; k < f.size(); ++k) {
    BigRational s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += f[j] * g[k - j];
    g[k] = -s;
  }
  return g;
}

int degree_of(const AmbientRing::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

}  // namespace

AmbientRing::AmbientRing(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorKind::InvalidArgument, "ambient ring needs a factor");
  for (int n : factors_)
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "projective factor dimension must be positive");
}

int AmbientRing::dimension() const { return std::accumulate(factors_.begin(), factors_.end(), 0); }

AmbientRing::Element AmbientRing::one() const { return {{Monomial(factors_.size(), 0), 1}}; }

AmbientRing::Element AmbientRing::hyperplane(int i) const {
  if (i < 0 || i >= static_cast<int>(factors_.size()))
    throw Error(ErrorKind::InvalidArgument, "hyperplane index out of range");
  Monomial m(factors_.size(), 0);
  m[i] = 1;
  return {{m, 1}};
}

AmbientRing::Element AmbientRing::divisor(const std::vector<int>& degrees) const {
  if (degrees.size() != factors_.size())
    throw Error(ErrorKind::InvalidArgument, "multidegree length does not match the ambient space");
  Element e;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] != 0) e = add(e, scale(hyperplane(static_cast<int>(i)), degrees[i]));
  return e;
}

AmbientRing::Element AmbientRing::add(const Element& a, const Element& b) const {
  Element r = a;
  for (const auto& [m, c] : b) {
    auto [it, inserted] = r.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

AmbientRing::Element AmbientRing::scale(const Element& a, const BigRational& c) const {
  if (c == 0) return {};
  Element r = a;
  for (auto& [m, v] : r) v *= c;
  return r;
}

AmbientRing::Element AmbientRing::multiply(const Element& a, const Element& b) const {
  Element r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(factors_.size());
      bool vanishes = false;
      for (std::size_t i = 0; i < m.size() && !vanishes; ++i) {
        m[i] = ma[i] + mb[i];
        vanishes = m[i] > factors_[i];
      }
      if (vanishes) continue;
      BigRational& slot = r[m];
      slot += ca * cb;
      if (slot == 0) r.erase(m);
    }
  return r;
}

AmbientRing::Element AmbientRing::compose(const std::vector<BigRational>& coeffs, const Element& x) const {
  for (const auto& [m, c] : x)
    if (degree_of(m) == 0) throw Error(ErrorKind::InvalidArgument, "series argument has a constant term");
  Element result;
  Element power = one();
  const int top = std::min<int>(dimension(), static_cast<int>(coeffs.size()) - 1);
  for (int k = 0; k <= top; ++k) {
    result = add(result, scale(power, coeffs[k]));
    power = multiply(power, x);
    if (power.empty()) break;
  }
  return result;
}

AmbientRing::Element AmbientRing::exp(const Element& x) const {
  std::vector<BigRational> c(dimension() + 1);
  for (int k = 0; k <= dimension(); ++k) c[k] = factorial_inverse(k);
  return compose(c, x);
}

AmbientRing::Element AmbientRing::inverse_todd_line(const Element& x) const {
  return compose(inverse_todd_series(dimension()), x);
}

AmbientRing::Element AmbientRing::todd_line(const Element& x) const {
  return compose(reciprocal(inverse_todd_series(dimension())), x);
}

AmbientRing::Element AmbientRing::todd_tangent() const {
  Element td = one();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Element t = todd_line(hyperplane(static_cast<int>(i)));
    for (int k = 0; k <= factors_[i]; ++k) td = multiply(td, t);
  }
  return td;
}

AmbientRing::Element AmbientRing::dual(const Element& a) const {
  Element r = a;
  for (auto& [m, c] : r)
    if (degree_of(m) % 2) c = -c;
  return r;
}

BigRational AmbientRing::integrate(const Element& a) const {
  auto it = a.find(factors_);
  return it == a.end() ? BigRational(0) : it->second;
}

HypersurfaceContext::HypersurfaceContext(AmbientRing ring, std::vector<int> degrees)
    : ambient(std::move(ring)), divisor(std::move(degrees)) {
  if (divisor.size() != ambient.factors().size())
    throw Error(ErrorKind::InvalidArgument, "divisor multidegree does not match the ambient space");
  if (std::all_of(divisor.begin(), divisor.end(), [](int d) { return d == 0; }))
    throw Error(ErrorKind::InvalidArgument, "divisor class must be nonzero");
  for (int d : divisor)
    if (d < 0) throw Error(ErrorKind::InvalidArgument, "divisor class must be effective");
}

bool HypersurfaceContext::is_calabi_yau() const {
  for (std::size_t i = 0; i < divisor.size(); ++i)
    if (divisor[i] != ambient.factors()[i] + 1) return false;
  return true;
}

BigRational HypersurfaceContext::integrate(const AmbientRing::Element& a) const {
  return ambient.integrate(ambient.multiply(a, ambient.divisor(divisor)));
}

AmbientRing::Element HypersurfaceContext::todd() const {
  return ambient.multiply(ambient.todd_tangent(), ambient.inverse_todd_line(ambient.divisor(divisor)));
}

HypersurfaceContext p1p4_sextic_context() { return {AmbientRing({1, 4}), {2, 5}}; }

SheafClass line_bundle(const AmbientRing& ring, const std::vector<int>& degrees) {
  return {ring.exp(ring.divisor(degrees)), 1};
}

SheafClass direct_sum(const AmbientRing& ring, const SheafClass& a, const SheafClass& b) {
  return {ring.add(a.chern_character, b.chern_character), a.rank + b.rank};
}

BigInt hrr_chi(const HypersurfaceContext& ctx, const SheafClass& a, const SheafClass& b) {
  const AmbientRing& r = ctx.ambient;
  const BigRational chi =
      ctx.integrate(r.multiply(r.multiply(r.dual(a.chern_character), b.chern_character), ctx.todd()));
  if (chi.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "Riemann-Roch integral is not an integer");
  return chi.get_num();
}

std::vector<BigInt> bott_cohomology(int n, long k) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "projective dimension must be positive");
  std::vector<BigInt> h(n + 1, 0);
  if (k >= 0) h[0] = binomial(n + k, n);
  if (k <= -n - 1) h[n] = binomial(-k - 1, n);
  return h;
}

std::vector<BigInt> ambient_line_cohomology(const AmbientRing& ring, const std::vector<int>& degrees) {
  if (degrees.size() != ring.factors().size())
    throw Error(ErrorKind::InvalidArgument, "multidegree length does not match the ambient space");
  std::vector<BigInt> total{1};
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const auto h = bott_cohomology(ring.factors()[i], degrees[i]);
    std::vector<BigInt> next(total.size() + h.size() - 1, 0);
    for (std::size_t p = 0; p < total.size(); ++p)
      for (std::size_t q = 0; q < h.size(); ++q) next[p + q] += total[p] * h[q];
    total = std::move(next);
  }
  return total;
}

LineCohomology hypersurface_line_cohomology(const HypersurfaceContext& ctx, const std::vector<int>& degrees) {
  std::vector<int> shifted = degrees;
  if (shifted.size() != ctx.divisor.size())
    throw Error(ErrorKind::InvalidArgument, "multidegree length does not match the ambient space");
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= ctx.divisor[i];
  const auto a = ambient_line_cohomology(ctx.ambient, shifted);
  const auto b = ambient_line_cohomology(ctx.ambient, degrees);

  LineCohomology out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) {
      out.ambiguous = true;
      out.reason = "both Koszul terms have cohomology in degree " + std::to_string(i);
      return out;
    }
  // Every map H^i(O(a-D)) -> H^i(O(a)) has a zero end, so the sequence splits.
  const int dim = ctx.dimension();
  out.dims.assign(dim + 1, 0);
  for (int i = 0; i <= dim; ++i) out.dims[i] = b[i] + a[i + 1];
  return out;
}

long curve_vd(long n, Holonomy h) { return h == Holonomy::SU4 ? 2 * n : 2 * n - 1; }

long euler_twisted_tangent(const SurfaceData& s) { return s.c2 + s.c1_dot_l + s.l_squared; }

PowerSeries::PowerSeries(std::vector<BigInt> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order) {
  coeffs_.resize(order_ + 1, 0);
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order_, b.order_);
  std::vector<BigInt> c(order + 1, 0);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return {std::move(c), order};
}

PowerSeries gco_series(long exponent, std::size_t order) {
  if (order > kMaxSeriesOrder) throw Error(ErrorKind::ResourceLimit, "series order too large");
  // n a_n = exponent sum_{k=1}^n sigma(k) a_{n-k}, from the logarithmic derivative.
  std::vector<BigInt> sigma(order + 1, 0);
  for (std::size_t d = 1; d <= order; ++d)
    for (std::size_t m = d; m <= order; m += d) sigma[m] += static_cast<unsigned long>(d);
  std::vector<BigInt> a(order + 1, 0);
  a[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    BigInt s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += sigma[k] * a[n - k];
    s *= exponent;
    mpz_divexact_ui(a[n].get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return {std::move(a), order};
}

L1L2Report l1l2_identity_check(const L1L2Input& in) {
  L1L2Report r;
  // K = -c1 = L1 + L2 forces these intersection numbers.
  const long k_dot_l1 = -in.l1.c1_dot;
  if (in.l2.c1_dot != -in.c1_squared - in.l1.c1_dot) {
    r.reason = "c1.L2 is inconsistent with L2 = K - L1";
  } else if (in.l2.self != in.c1_squared + 2 * in.l1.c1_dot + in.l1.self) {
    r.reason = "L2^2 is inconsistent with L2 = K - L1";
  } else if (in.l1_dot_l2 != k_dot_l1 - in.l1.self) {
    r.reason = "L1.L2 is inconsistent with L2 = K - L1";
  } else {
    r.applicable = true;
  }
  r.lhs = in.l1_dot_l2;
  BigRational chi = in.chi_structure_sheaf ? *in.chi_structure_sheaf
                                           : BigRational(in.c1_squared + in.c2, 12);
  chi.canonicalize();
  r.rhs = 2 * (BigRational(in.h1_l1) + chi);
  return r;
}

L1L2Input p2_input(int a1, int a2) {
  L1L2Input in;
  in.c1_squared = 9;
  in.c2 = 3;
  in.l1 = {3L * a1, static_cast<long>(a1) * a1};
  in.l2 = {3L * a2, static_cast<long>(a2) * a2};
  in.l1_dot_l2 = static_cast<long>(a1) * a2;
  in.h1_l1 = bott_cohomology(2, a1)[1].get_si();
  return in;
}

L1L2Input p1p1_input(const std::vector<int>& a1, const std::vector<int>& a2) {
  if (a1.size() != 2 || a2.size() != 2) throw Error(ErrorKind::InvalidArgument, "bidegree expected");
  L1L2Input in;
  in.c1_squared = 8;
  in.c2 = 4;
  in.l1 = {2L * (a1[0] + a1[1]), 2L * a1[0] * a1[1]};
  in.l2 = {2L * (a2[0] + a2[1]), 2L * a2[0] * a2[1]};
  in.l1_dot_l2 = static_cast<long>(a1[0]) * a2[1] + static_cast<long>(a1[1]) * a2[0];
  in.h1_l1 = ambient_line_cohomology(AmbientRing({1, 1}), a1)[1].get_si();
  return in;
}

LiQinRow liqin_row(int eps1, int eps2) {
  if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1))
    throw Error(ErrorKind::InvalidArgument, "eps1 and eps2 must be 0 or 1");
  const HypersurfaceContext ctx = p1p4_sextic_context();
  const AmbientRing& ring = ctx.ambient;
  const std::vector<int> l1{-1, 1};
  const std::vector<int> l2{eps1 + 1, eps2 - 1};
  const SheafClass e = direct_sum(ring, line_bundle(ring, l1), line_bundle(ring, l2));

  LiQinRow row;
  row.eps1 = eps1;
  row.eps2 = eps2;
  row.chi = hrr_chi(ctx, e, e);
  const auto ext = hypersurface_line_cohomology(ctx, {l1[0] - l2[0], l1[1] - l2[1]});
  if (!ext.ambiguous) row.k_plus_one = ext.dims[1];
  row.closed_form = (1 + eps1) * binomial(6 - eps2, 4);
  static const std::map<std::pair<int, int>, long> listed{{{0, 1}, 4}, {{1, 1}, 9}, {{0, 0}, 14}, {{1, 0}, 29}};
  row.listed_k = listed.at({eps1, eps2});
  return row;
}

std::vector<LiQinRow> liqin_table() {
  return {liqin_row(0, 1), liqin_row(1, 1), liqin_row(0, 0), liqin_row(1, 0)};
}

}  // namespace dt4::charclass
