#include "dt4/error.hpp"
#include "dt4/exact.hpp"

namespace dt4::exact {

MultiPoly elementary_symmetric(int k) {
  const MultiPoly l1 = MultiPoly::variable(0);
  const MultiPoly l2 = MultiPoly::variable(1);
  const MultiPoly l3 = MultiPoly::variable(2);
  switch (k) {
    case 0: return MultiPoly(1);
    case 1: return l1 + l2 + l3;
    case 2: return l1 * l2 + l1 * l3 + l2 * l3;
    case 3: return l1 * l2 * l3;
    default: return MultiPoly();
  }
}

MultiPoly SymmetricForm::expand() const {
  const MultiPoly s[3] = {elementary_symmetric(1), elementary_symmetric(2), elementary_symmetric(3)};
  MultiPoly r;
  for (const auto& [e, c] : p_.terms()) {
    r += s[0].pow(e[0]) * s[1].pow(e[1]) * s[2].pow(e[2]) * c;
  }
  return r;
}

SymmetricForm to_symmetric(const MultiPoly& p) {
  if (!p.is_symmetric()) throw Error(ErrorKind::NotSymmetric, p.to_string());
  const MultiPoly s[3] = {elementary_symmetric(1), elementary_symmetric(2), elementary_symmetric(3)};
  MultiPoly rest = p;
  MultiPoly sigma;
  // The grlex leading term of a symmetric polynomial has a >= b >= c and
  // equals the leading term of s1^(a-b) s2^(b-c) s3^c.
  while (!rest.is_zero()) {
    const auto [e, c] = *rest.leading_term();
    const Exponent se{e[0] - e[1], e[1] - e[2], e[2]};
    sigma += MultiPoly::monomial(se, c);
    rest -= s[0].pow(se[0]) * s[1].pow(se[1]) * s[2].pow(se[2]) * c;
  }
  return SymmetricForm(std::move(sigma));
}

}  // namespace dt4::exact
