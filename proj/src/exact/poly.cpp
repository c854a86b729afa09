#include <algorithm>
#include <sstream>

#include "dt4/error.hpp"
#include "dt4/exact.hpp"

namespace dt4::exact {

std::string to_string(const BigRational& q) {
  return q.get_str();
}

namespace {

int degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

bool divides(const Exponent& a, const Exponent& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

Exponent sub(const Exponent& a, const Exponent& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

}  // namespace

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(long c) : MultiPoly(BigRational(c)) {}

MultiPoly::MultiPoly(const BigRational& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0, 0}, c).first->second.canonicalize();
}

MultiPoly MultiPoly::monomial(const Exponent& e, const BigRational& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0)
    throw Error(ErrorKind::InvalidArgument, "negative exponent");
  MultiPoly p;
  // Callers may hand in p/q built from two integers without reducing it.
  if (c != 0) p.terms_.emplace(e, c).first->second.canonicalize();
  return p;
}

MultiPoly MultiPoly::variable(int i) {
  if (i < 0 || i > 3) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  if (i < 3) {
    Exponent e{0, 0, 0};
    e[i] = 1;
    return monomial(e);
  }
  return -(variable(0) + variable(1) + variable(2));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree(terms_.begin()->first) == 0);
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : degree(terms_.begin()->first);
}

std::optional<std::pair<Exponent, BigRational>> MultiPoly::leading_term() const {
  if (terms_.empty()) return std::nullopt;
  return *terms_.begin();
}

BigRational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::permuted(const std::array<int, 3>& perm) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exponent f{0, 0, 0};
    for (int i = 0; i < 3; ++i) f[perm[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

bool MultiPoly::is_symmetric() const {
  return permuted({1, 0, 2}) == *this && permuted({0, 2, 1}) == *this;
}

Exponent MultiPoly::monomial_content() const {
  if (terms_.empty()) return {0, 0, 0};
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

MultiPoly MultiPoly::divide_monomial(const Exponent& m) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (!divides(m, e)) throw Error(ErrorKind::InvalidArgument, "monomial does not divide polynomial");
    r.terms_.emplace(sub(e, m), c);
  }
  return r;
}

BigRational MultiPoly::content() const {
  if (terms_.empty()) return 1;
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  const auto [lead_e, lead_c] = *d.leading_term();
  MultiPoly rem = *this;
  MultiPoly quot;
  while (!rem.is_zero()) {
    const auto [e, c] = *rem.leading_term();
    // {d} is a Groebner basis of (d), so a non-divisible leading term means d does not divide.
    if (!divides(lead_e, e)) return std::nullopt;
    const MultiPoly t = monomial(sub(e, lead_e), c / lead_c);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

BigRational MultiPoly::evaluate(const std::array<BigRational, 3>& point) const {
  BigRational total = 0;
  for (const auto& [e, c] : terms_) {
    BigRational term = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

std::string MultiPoly::to_string(const std::array<std::string_view, 3>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = degree(e) == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << names[i];
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace dt4::exact
