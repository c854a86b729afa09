#include <algorithm>
#include <vector>

#include "dt4/error.hpp"
#include "dt4/exact.hpp"

namespace dt4::exact {

RationalFunction::RationalFunction(MultiPoly num) : num_(std::move(num)), den_(1) {
  canonicalize();
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  const Exponent mn = num_.monomial_content();
  const Exponent md = den_.monomial_content();
  const Exponent common{std::min(mn[0], md[0]), std::min(mn[1], md[1]), std::min(mn[2], md[2])};
  if (common != Exponent{0, 0, 0}) {
    num_ = num_.divide_monomial(common);
    den_ = den_.divide_monomial(common);
  }
  BigRational scale = den_.content();
  if (den_.leading_term()->second < 0) scale = -scale;
  const BigRational inv = 1 / scale;
  num_ *= inv;
  den_ *= inv;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool ratfun_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

RationalFunction RationalFunction::reduced() const {
  if (num_.is_zero()) return *this;
  std::vector<MultiPoly> candidates;
  for (int i = 0; i < 4; ++i) candidates.push_back(MultiPoly::variable(i));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      candidates.push_back(MultiPoly::variable(i) + MultiPoly::variable(j));
  MultiPoly num = num_;
  MultiPoly den = den_;
  for (const auto& f : candidates) {
    while (true) {
      auto qn = num.divide_exact(f);
      if (!qn) break;
      auto qd = den.divide_exact(f);
      if (!qd) break;
      num = std::move(*qn);
      den = std::move(*qd);
    }
  }
  return {num, den};
}

RationalFunction RationalFunction::permuted(const std::array<int, 3>& perm) const {
  return {num_.permuted(perm), den_.permuted(perm)};
}

std::string RationalFunction::to_string() const {
  if (den_ == MultiPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::optional<std::string> RationalFunction::symmetric_string() const {
  if (!num_.is_symmetric() || !den_.is_symmetric()) return std::nullopt;
  const std::string n = to_symmetric(num_).to_string();
  if (den_ == MultiPoly(1)) return n;
  return "(" + n + ")/(" + to_symmetric(den_).to_string() + ")";
}

}  // namespace dt4::exact
