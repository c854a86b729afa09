#include "dt4/error.hpp"
#include "dt4/exact.hpp"

namespace dt4::exact {

Weight Weight::operator+(const Weight& o) const {
  Weight r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r;
  for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
  return r;
}

MultiPoly restrict_to_cy_torus(const Weight& w) {
  MultiPoly p;
  for (int i = 0; i < 4; ++i) {
    if (w.c[i] != 0) p += MultiPoly::variable(i) * BigRational(w.c[i]);
  }
  return p;
}

Weight cy_reduce(const Weight& w) {
  return Weight{{w.c[0] - w.c[3], w.c[1] - w.c[3], w.c[2] - w.c[3], 0}};
}

TorusCharacter::TorusCharacter(const std::vector<Weight>& ws) {
  for (const auto& w : ws) add(w);
}

void TorusCharacter::add(const Weight& w, int multiplicity) {
  if (multiplicity < 0) throw Error(ErrorKind::InvalidArgument, "negative multiplicity");
  if (multiplicity == 0) return;
  weights_[w] += multiplicity;
}

int TorusCharacter::dimension() const {
  int total = 0;
  for (const auto& [w, m] : weights_) total += m;
  return total;
}

TorusCharacter TorusCharacter::restricted() const {
  TorusCharacter r;
  for (const auto& [w, m] : weights_) r.add(cy_reduce(w), m);
  return r;
}

TorusCharacter TorusCharacter::negated() const {
  TorusCharacter r;
  for (const auto& [w, m] : weights_) r.add(-w, m);
  return r;
}

}  // namespace dt4::exact
