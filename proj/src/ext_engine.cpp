#include "dt4/ext_engine.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "dt4/error.hpp"
#include "dt4/linalg.hpp"

namespace dt4::ext {

using exact::TorusCharacter;
using exact::Weight;
using partitions::SolidPartition;

namespace {

Box box_max(const Box& a, const Box& b) {
  return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2]), std::max(a[3], b[3])};
}

bool leq(const Box& a, const Box& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2] && a[3] <= b[3];
}

}  // namespace

TaylorComplex::TaylorComplex(const partitions::MonomialIdeal& ideal)
    : generators_(ideal.generators) {
  const int r = length();
  if (r > kMaxGenerators)
    throw Error(ErrorKind::ResourceLimit, std::to_string(r) + " generators exceed Taylor bound");
  summands_.assign(r + 1, {});
  const std::uint32_t total = r == 0 ? 1U : (1U << r);
  std::vector<std::size_t> index_of(total);
  for (std::uint32_t s = 0; s < total; ++s) {
    Box deg{0, 0, 0, 0};
    for (int i = 0; i < r; ++i)
      if (s & (1U << i)) deg = box_max(deg, generators_[i]);
    const int k = std::popcount(s);
    index_of[s] = summands_[k].size();
    summands_[k].push_back({s, deg});
  }
  differentials_.assign(r + 1, {});
  for (int k = 1; k <= r; ++k) {
    for (std::size_t src = 0; src < summands_[k].size(); ++src) {
      const std::uint32_t s = summands_[k][src].subset;
      int position = 0;
      for (int i = 0; i < r; ++i) {
        if (!(s & (1U << i))) continue;
        const int sign = (position % 2 == 0) ? 1 : -1;
        differentials_[k].push_back({index_of[s & ~(1U << i)], src, sign});
        ++position;
      }
    }
  }
}

bool TaylorComplex::d_squared_zero() const {
  for (int k = 2; k <= length(); ++k) {
    // (target in F_{k-2}, source in F_k) -> accumulated sign
    std::map<std::pair<std::size_t, std::size_t>, long> composed;
    std::vector<std::vector<const Entry*>> lower_by_source(summands_[k - 1].size());
    for (const auto& e : differentials_[k - 1]) lower_by_source[e.source].push_back(&e);
    for (const auto& upper : differentials_[k])
      for (const Entry* lower : lower_by_source[upper.target])
        composed[{lower->target, upper.source}] += upper.sign * lower->sign;
    for (const auto& [key, v] : composed)
      if (v != 0) return false;
  }
  return true;
}

long TaylorComplex::euler_characteristic(const Box& w) const {
  long chi = 0;
  for (int k = 0; k <= length(); ++k) {
    const long sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& s : summands_[k])
      if (leq(s.degree, w)) chi += sign;
  }
  return chi;
}

TaylorComplex taylor_complex(const partitions::MonomialIdeal& ideal) {
  return TaylorComplex(ideal);
}

namespace {

// Cohomology of Hom(F, I) in one internal degree, for the only two
// cohomological degrees needed: H^2 (= Ext^1(I,I)) and H^3 (= Ext^2(I,I)).
class DegreeCohomology {
 public:
  explicit DegreeCohomology(const TaylorComplex& complex) : complex_(complex) {}

  std::pair<int, int> compute(const std::vector<std::vector<char>>& present) {
    std::string key;
    for (int k = 1; k <= 4; ++k) key.append(present[k].begin(), present[k].end());
    if (std::all_of(key.begin(), key.end(), [](char c) { return c == 0; })) return {0, 0};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    long count[5] = {0, 0, 0, 0, 0};
    for (int k = 1; k <= 4; ++k)
      count[k] = std::count(present[k].begin(), present[k].end(), 1);
    const long r1 = coboundary_rank(1, present);
    const long r2 = coboundary_rank(2, present);
    const long r3 = coboundary_rank(3, present);
    const std::pair<int, int> result{static_cast<int>(count[2] - r2 - r1),
                                     static_cast<int>(count[3] - r3 - r2)};
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Rank of delta^k : C^k -> C^{k+1}, the transpose of d_{k+1} restricted to present summands.
  long coboundary_rank(int k, const std::vector<std::vector<char>>& present) const {
    if (k + 1 > complex_.length()) return 0;
    const auto& lo = present[k];
    const auto& hi = present[k + 1];
    std::vector<long> col(lo.size(), -1);
    std::vector<long> row(hi.size(), -1);
    long cols = 0;
    long rows = 0;
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (lo[i]) col[i] = cols++;
    for (std::size_t i = 0; i < hi.size(); ++i)
      if (hi[i]) row[i] = rows++;
    if (rows == 0 || cols == 0) return 0;
    linalg::IntMatrix m(rows, std::vector<long>(cols, 0));
    for (const auto& e : complex_.differential(k + 1)) {
      if (row[e.source] >= 0 && col[e.target] >= 0) m[row[e.source]][col[e.target]] = e.sign;
    }
    return static_cast<long>(linalg::exact_rank(m));
  }

  const TaylorComplex& complex_;
  std::unordered_map<std::string, std::pair<int, int>> memo_;
};

}  // namespace

ExtProfile ext_characters_in_box(const SolidPartition& sp, int bound) {
  if (sp.size() == 0) throw Error(ErrorKind::InvalidArgument, "Ext of the empty partition is not defined");
  const TaylorComplex complex(partitions::min_generators(sp));
  DegreeCohomology cohomology(complex);
  const int top = std::min(4, complex.length());

  std::vector<std::vector<char>> present(5);
  for (int k = 1; k <= 4; ++k)
    present[k].assign(k <= top ? complex.summands(k).size() : 0, 0);

  ExtProfile profile;
  Box d{};
  for (d[0] = -bound; d[0] <= bound; ++d[0])
    for (d[1] = -bound; d[1] <= bound; ++d[1])
      for (d[2] = -bound; d[2] <= bound; ++d[2])
        for (d[3] = -bound; d[3] <= bound; ++d[3]) {
          for (int k = 1; k <= top; ++k) {
            const auto& sums = complex.summands(k);
            for (std::size_t i = 0; i < sums.size(); ++i) {
              const Box& a = sums[i].degree;
              const Box u{a[0] + d[0], a[1] + d[1], a[2] + d[2], a[3] + d[3]};
              present[k][i] = (u[0] >= 0 && u[1] >= 0 && u[2] >= 0 && u[3] >= 0 && !sp.contains(u)) ? 1 : 0;
            }
          }
          const auto [h2, h3] = cohomology.compute(present);
          const Weight w{{-d[0], -d[1], -d[2], -d[3]}};
          if (h2 < 0 || h3 < 0) throw Error(ErrorKind::InvalidArgument, "negative cohomology dimension");
          profile.ext1.add(w, h2);
          profile.ext2.add(w, h3);
        }
  return profile;
}

ExtProfile ext_characters(const SolidPartition& sp, const ExtOptions& options) {
  const int n = static_cast<int>(sp.size());
  if (n > options.max_size)
    throw Error(ErrorKind::ResourceLimit,
                "n = " + std::to_string(n) + " exceeds bound " + std::to_string(options.max_size));
  const int bound = options.box_bound.value_or(n + 2);
  ExtProfile inner = ext_characters_in_box(sp, bound);
  ExtProfile outer = ext_characters_in_box(sp, bound + 1);
  if (!(inner.ext1 == outer.ext1) || !(inner.ext2 == outer.ext2))
    throw Error(ErrorKind::BoxInstability,
                "Ext characters change between box bounds " + std::to_string(bound) + " and " +
                    std::to_string(bound + 1) + " for " + partitions::to_json(sp));
  return inner;
}

TorusCharacter tangent_character_oracle(const SolidPartition& sp) {
  const auto gens = partitions::min_generators(sp).generators;
  const std::size_t r = gens.size();
  // Only degrees d with g + d in sp for some generator g can carry homomorphisms.
  std::set<Box> degrees;
  for (const auto& b : sp.boxes())
    for (const auto& g : gens)
      degrees.insert({b[0] - g[0], b[1] - g[1], b[2] - g[2], b[3] - g[3]});

  TorusCharacter chi;
  for (const auto& d : degrees) {
    auto shifted = [&](const Box& a) {
      return Box{a[0] + d[0], a[1] + d[1], a[2] + d[2], a[3] + d[3]};
    };
    auto in_quotient = [&](const Box& u) {
      return u[0] >= 0 && u[1] >= 0 && u[2] >= 0 && u[3] >= 0 && sp.contains(u);
    };
    std::vector<long> unknown(r, -1);
    long unknowns = 0;
    for (std::size_t k = 0; k < r; ++k)
      if (in_quotient(shifted(gens[k]))) unknown[k] = unknowns++;
    if (unknowns == 0) continue;
    // Syzygy (k,l): m_kl * f_k = m_lk * f_l in R/I, nontrivial iff x^(lcm + d) survives.
    linalg::IntMatrix eqs;
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t l = k + 1; l < r; ++l) {
        if (!in_quotient(shifted(box_max(gens[k], gens[l])))) continue;
        // A generator whose shifted degree leaves the quadrant has image zero.
        std::vector<long> row(unknowns, 0);
        if (unknown[k] >= 0) row[unknown[k]] += 1;
        if (unknown[l] >= 0) row[unknown[l]] -= 1;
        eqs.push_back(std::move(row));
      }
    const long dim = unknowns - static_cast<long>(linalg::exact_rank(eqs));
    chi.add(Weight{{-d[0], -d[1], -d[2], -d[3]}}, static_cast<int>(dim));
  }
  return chi;
}

int tangent_dim_oracle(const SolidPartition& sp) {
  return tangent_character_oracle(sp).dimension();
}

std::string to_json(const ExtProfile& profile) {
  auto list = [](const TorusCharacter& c) {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (const auto& [w, m] : c.weights()) {
      if (!first) out << ',';
      first = false;
      out << '[' << w.c[0] << ',' << w.c[1] << ',' << w.c[2] << ',' << w.c[3] << ',' << m << ']';
    }
    out << ']';
    return out.str();
  };
  return "{\"ext1\":" + list(profile.ext1) + ",\"ext2\":" + list(profile.ext2) + ",\"dims\":[" +
         std::to_string(profile.dim_ext1()) + "," + std::to_string(profile.dim_ext2()) + "]}";
}

}  // namespace dt4::ext
