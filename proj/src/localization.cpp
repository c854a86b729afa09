#include "dt4/localization.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <sstream>
#include <thread>

#include "dt4/error.hpp"

namespace dt4::localization {

using exact::MultiPoly;
using exact::TorusCharacter;
using exact::Weight;

int OrientationChoice::override_for(std::size_t index) const {
  auto it = overrides.find(index);
  return it == overrides.end() ? 1 : it->second;
}

OrientationChoice OrientationChoice::reversed(std::size_t fixed_points) const {
  OrientationChoice r;
  r.rule = rule;
  for (std::size_t i = 0; i < fixed_points; ++i) r.overrides[i] = -override_for(i);
  return r;
}

bool is_canonical_representative(const Weight& restricted) {
  for (int i = 0; i < 3; ++i)
    if (restricted.c[i] != 0) return restricted.c[i] > 0;
  return false;
}

namespace {

Weight reduce(const Weight& w) { return exact::cy_reduce(w); }

bool is_zero_form(const Weight& w) {
  const Weight r = reduce(w);
  return r.c[0] == 0 && r.c[1] == 0 && r.c[2] == 0;
}

}  // namespace

MultiPoly half_euler(const TorusCharacter& restricted, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  if (restricted.dimension() % 2 != 0) return MultiPoly();
  for (const auto& [w, m] : restricted.weights())
    if (is_zero_form(w)) return MultiPoly();

  TorusCharacter reduced;
  for (const auto& [w, m] : restricted.weights()) reduced.add(reduce(w), m);
  MultiPoly product(sign);
  for (const auto& [w, m] : reduced.weights()) {
    auto partner = reduced.weights().find(reduce(-w));
    if (partner == reduced.weights().end() || partner->second != m)
      throw Error(ErrorKind::Unpairable, "weight without a matching negative in the character");
    if (is_canonical_representative(w)) product *= exact::restrict_to_cy_torus(w).pow(m);
  }
  return product;
}

MultiPoly full_euler(const TorusCharacter& character) {
  MultiPoly product(1);
  for (const auto& [w, m] : character.weights())
    product *= exact::restrict_to_cy_torus(w).pow(m);
  return product;
}

namespace {

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

std::array<int, 4> lift(const std::array<int, 3>& perm) { return {perm[0], perm[1], perm[2], 3}; }

// Smallest point of the orbit of sp, and a permutation carrying it to sp.
std::pair<partitions::SolidPartition, std::array<int, 3>> orbit_representative(
    const partitions::SolidPartition& sp) {
  partitions::SolidPartition rep = sp;
  for (const auto& perm : kPermutations) rep = std::min(rep, sp.permuted(lift(perm)));
  for (const auto& perm : kPermutations)
    if (rep.permuted(lift(perm)) == sp) return {rep, perm};
  throw Error(ErrorKind::InvalidArgument, "orbit representative not found");
}

MultiPoly unsigned_half_euler(const partitions::SolidPartition& sp, const ext::ExtOptions& options) {
  return half_euler(ext::ext_characters(sp, options).ext2.restricted(), 1);
}

int transport_sign(const MultiPoly& half_at_point, const MultiPoly& half_at_rep,
                   const std::array<int, 3>& perm) {
  const MultiPoly moved = half_at_rep.permuted(perm);
  if (moved == half_at_point) return 1;
  if (moved == -half_at_point) return -1;
  throw Error(ErrorKind::Unpairable, "half Euler classes of one orbit differ by more than a sign");
}

Contribution assemble(const ext::ExtProfile& profile, const partitions::SolidPartition& sp,
                      std::size_t index, int sign) {
  Contribution c;
  c.fixed_point = index;
  c.sign_used = sign;
  c.half_euler_class = half_euler(profile.ext2.restricted(), sign);
  const TorusCharacter ext1 = profile.ext1.restricted();
  for (const auto& [w, m] : ext1.weights()) {
    if (is_zero_form(w))
      throw Error(ErrorKind::NotApplicable,
                  "Ext^1 has a weight trivial on the subtorus at " + partitions::to_json(sp));
    for (int k = 0; k < m; ++k) c.denominator_weights.push_back(w);
  }
  MultiPoly den(1);
  for (const auto& w : c.denominator_weights) den *= exact::restrict_to_cy_torus(w);
  c.value = RationalFunction(c.half_euler_class, den);
  return c;
}

}  // namespace

int default_sign(const partitions::SolidPartition& sp, OrientationRule rule,
                 const ext::ExtOptions& options) {
  if (rule == OrientationRule::PairingOnly) return 1;
  const auto [rep, perm] = orbit_representative(sp);
  if (rep == sp) return 1;
  const MultiPoly here = unsigned_half_euler(sp, options);
  if (here.is_zero()) return 1;
  return transport_sign(here, unsigned_half_euler(rep, options), perm);
}

Contribution dt4_point_contribution(const partitions::SolidPartition& sp, std::size_t index,
                                    const OrientationChoice& orient,
                                    const LocalizationOptions& options) {
  if (!options.insertion.is_trivial())
    throw Error(ErrorKind::NotApplicable, "only the trivial insertion (1,1) is supported");
  const ext::ExtProfile profile = ext::ext_characters(sp, options.ext);
  const int sign = default_sign(sp, orient.rule, options.ext) * orient.override_for(index);
  return assemble(profile, sp, index, sign);
}

namespace {

template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, F&& fn) {
  std::vector<T> out(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

// Sums contributions over a common denominator built from their linear
// factors, then cancels any of those factors that divide the numerator.
RationalFunction sum_contributions(const std::vector<Contribution>& cs) {
  std::map<Weight, int> lcm;
  std::vector<std::map<Weight, int>> factors(cs.size());
  std::vector<int> flips(cs.size(), 1);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (const auto& w : cs[i].denominator_weights) {
      Weight f = w;
      if (!is_canonical_representative(f)) {
        f = reduce(-f);
        flips[i] = -flips[i];
      }
      ++factors[i][f];
    }
    for (const auto& [f, m] : factors[i]) lcm[f] = std::max(lcm[f], m);
  }
  MultiPoly num;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    MultiPoly term = cs[i].half_euler_class * exact::BigRational(flips[i]);
    for (const auto& [f, m] : lcm) {
      auto it = factors[i].find(f);
      const int have = it == factors[i].end() ? 0 : it->second;
      if (m > have) term *= exact::restrict_to_cy_torus(f).pow(m - have);
    }
    num += term;
  }
  if (num.is_zero()) return RationalFunction();
  MultiPoly den(1);
  for (auto& [f, m] : lcm) {
    const MultiPoly form = exact::restrict_to_cy_torus(f);
    while (m > 0) {
      auto q = num.divide_exact(form);
      if (!q) break;
      num = std::move(*q);
      --m;
    }
    den *= form.pow(m);
  }
  return RationalFunction(num, den);
}

}  // namespace

LevelResult localize_level(int n, const OrientationChoice& orient,
                           const LocalizationOptions& options) {
  if (!options.insertion.is_trivial())
    throw Error(ErrorKind::NotApplicable, "only the trivial insertion (1,1) is supported");
  LevelResult level;
  level.n = n;
  if (n == 0) {
    level.total = RationalFunction(MultiPoly(1));
    return level;
  }
  const auto points = partitions::enumerate(n, options.ext.max_size);
  for (const auto& [index, sign] : orient.overrides) {
    if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "orientation sign must be +1 or -1");
    if (index >= points.size())
      throw Error(ErrorKind::InvalidArgument,
                  "orientation override index " + std::to_string(index) + " out of range");
  }
  const auto profiles = parallel_map<ext::ExtProfile>(
      points.size(), [&](std::size_t i) { return ext::ext_characters(points[i], options.ext); });
  std::vector<int> signs(points.size(), 1);
  if (orient.rule == OrientationRule::SymmetricTransport) {
    std::vector<MultiPoly> halves;
    for (const auto& p : profiles) halves.push_back(half_euler(p.ext2.restricted(), 1));
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto [rep, perm] = orbit_representative(points[i]);
      if (rep == points[i] || halves[i].is_zero()) continue;
      const auto at = std::lower_bound(points.begin(), points.end(), rep) - points.begin();
      signs[i] = transport_sign(halves[i], halves[at], perm);
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    level.contributions.push_back(assemble(profiles[i], points[i], i, signs[i] * orient.override_for(i)));
  level.total = sum_contributions(level.contributions);
  return level;
}

std::vector<RationalFunction> partition_function(int n_max, const OrientationChoice& orient,
                                                 const LocalizationOptions& options) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be nonnegative");
  if (n_max > options.ext.max_size)
    throw Error(ErrorKind::ResourceLimit, "n_max exceeds bound " + std::to_string(options.ext.max_size));
  const std::size_t largest = n_max == 0 ? 1 : partitions::enumerate(n_max, options.ext.max_size).size();
  for (const auto& [index, sign] : orient.overrides)
    if (index >= largest)
      throw Error(ErrorKind::InvalidArgument, "orientation override index out of range");

  std::vector<RationalFunction> coefficients;
  for (int n = 0; n <= n_max; ++n) {
    OrientationChoice level_orient;
    level_orient.rule = orient.rule;
    const std::size_t count = n == 0 ? 1 : partitions::enumerate(n, options.ext.max_size).size();
    for (const auto& [index, sign] : orient.overrides)
      if (index < count) level_orient.overrides[index] = sign;
    coefficients.push_back(localize_level(n, level_orient, options).total);
  }
  return coefficients;
}

ChernCheck equivariant_chern_check() {
  std::vector<MultiPoly> l;
  for (int i = 0; i < 4; ++i) l.push_back(MultiPoly::variable(i));
  MultiPoly e3;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) e3 += l[i] * l[j] * l[k];
  const MultiPoly e4 = l[0] * l[1] * l[2] * l[3];

  ChernCheck check;
  check.c3 = exact::to_symmetric(e3);
  check.c4 = exact::to_symmetric(e4);
  check.c3_matches = check.c3 == exact::parse_symmetric("s3 - s1*s2");
  const exact::SymmetricForm s1s3 = exact::parse_symmetric("s1*s3");
  check.c4_matches = check.c4 == s1s3 || check.c4.in_sigma() == -s1s3.in_sigma();

  check.one_point = localize_level(1, OrientationChoice{}).total;
  const RationalFunction ratio(e3, e4);
  check.contribution_matches =
      exact::ratfun_equal(check.one_point, ratio) || exact::ratfun_equal(check.one_point, -ratio);
  return check;
}

std::string to_json(const LevelResult& level) {
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  std::ostringstream out;
  const std::size_t points = level.n == 0 ? 1 : level.contributions.size();
  out << "{\"n\":" << level.n << ",\"fixed_points\":" << points << ",\"contributions\":[";
  if (level.n == 0) {
    out << "{\"index\":0,\"value\":\"1\",\"sign\":1}";
  }
  for (std::size_t i = 0; i < level.contributions.size(); ++i) {
    const auto& c = level.contributions[i];
    if (i) out << ',';
    out << "{\"index\":" << c.fixed_point << ",\"value\":" << quote(c.value.to_string())
        << ",\"sign\":" << c.sign_used << '}';
  }
  out << "],\"total\":" << quote(level.total.to_string()) << ",\"symmetric_form\":";
  const auto sym = level.total.symmetric_string();
  out << (sym ? quote(*sym) : std::string("null")) << '}';
  return out.str();
}

}  // namespace dt4::localization
