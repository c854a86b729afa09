#include "dt4/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include <json.hpp>

#include "dt4/error.hpp"

namespace dt4::quiver {

namespace {

void check_length(const QuiverPresentation& q, const std::vector<int>& v, const char* what) {
  if (static_cast<int>(v.size()) != q.vertex_count())
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " length does not match the quiver");
}

long total(const DimensionVector& d) { return std::accumulate(d.begin(), d.end(), 0L); }

}  // namespace

QuiverPresentation::QuiverPresentation(int vertex_count, std::vector<Arrow> arrows,
                                       std::map<std::pair<int, int>, int> relation_counts)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)), relation_counts_(std::move(relation_counts)) {
  if (vertex_count_ < 1) throw Error(ErrorKind::InvalidArgument, "quiver needs at least one vertex");
  auto in_range = [&](int v) { return v >= 0 && v < vertex_count_; };
  for (const auto& a : arrows_)
    if (!in_range(a.tail) || !in_range(a.head))
      throw Error(ErrorKind::InvalidArgument, "arrow endpoint out of range");
  for (const auto& [key, count] : relation_counts_) {
    if (!in_range(key.first) || !in_range(key.second))
      throw Error(ErrorKind::InvalidArgument, "relation endpoint out of range");
    if (count < 0) throw Error(ErrorKind::InvalidArgument, "negative relation count");
  }
}

int QuiverPresentation::relation_count(int tail, int head) const {
  auto it = relation_counts_.find({tail, head});
  return it == relation_counts_.end() ? 0 : it->second;
}

QuiverPresentation kp3_quiver() {
  std::vector<Arrow> arrows;
  for (int v = 0; v < 4; ++v)
    for (int k = 0; k < 4; ++k) arrows.push_back({v, (v + 1) % 4});
  std::map<std::pair<int, int>, int> relations;
  for (int v = 0; v < 4; ++v) relations[{v, (v + 2) % 4}] = 6;
  return {4, std::move(arrows), std::move(relations)};
}

QuiverPresentation kp3_truncated_quiver() {
  std::vector<Arrow> arrows;
  for (int v = 0; v < 3; ++v)
    for (int k = 0; k < 4; ++k) arrows.push_back({v, v + 1});
  return {4, std::move(arrows), {{{0, 2}, 6}, {{1, 3}, 6}}};
}

BigRational slope(const std::vector<BigRational>& theta, const DimensionVector& d) {
  if (theta.size() != d.size()) throw Error(ErrorKind::InvalidArgument, "theta and d differ in length");
  const long n = total(d);
  if (n == 0) throw Error(ErrorKind::ZeroDimension, "slope of the zero dimension vector");
  BigRational num = 0;
  for (std::size_t i = 0; i < d.size(); ++i) num += theta[i] * d[i];
  return num / n;
}

BigRational slope(const Stability& theta, const DimensionVector& d) {
  return slope(std::vector<BigRational>(theta.begin(), theta.end()), d);
}

bool is_coprime(const DimensionVector& d, const Stability& theta, long max_box) {
  if (total(d) == 0) throw Error(ErrorKind::ZeroDimension, "coprimality of the zero dimension vector");
  long box = 1;
  for (int di : d) {
    if (di < 0) throw Error(ErrorKind::InvalidArgument, "negative dimension");
    box *= di + 1;
    if (box > max_box) throw Error(ErrorKind::ResourceLimit, "sub-dimension box too large");
  }
  const BigRational mu = slope(theta, d);
  DimensionVector e(d.size(), 0);
  // Odometer over 0 <= e <= d, skipping e = 0 and e = d.
  while (true) {
    std::size_t i = 0;
    while (i < e.size() && e[i] == d[i]) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
    if (e == d) continue;
    if (slope(theta, e) == mu) return false;
  }
  return true;
}

ExtDims ext_dims(const QuiverPresentation& q, const DimensionVector& d) {
  check_length(q, d, "dimension vector");
  ExtDims x;
  for (int di : d) x.ext0 += static_cast<long>(di) * di;
  for (const auto& a : q.arrows()) x.ext1 += static_cast<long>(d[a.tail]) * d[a.head];
  for (const auto& [key, count] : q.relation_counts())
    x.ext2 += static_cast<long>(count) * d[key.first] * d[key.second];
  return x;
}

long virtual_dim_ncdt4(const QuiverPresentation& q, const DimensionVector& d) {
  const ExtDims x = ext_dims(q, d);
  return 2 * x.ext1 - 2 * x.ext0 - x.ext2 + 2;
}

long framed_virtual_dim(const QuiverPresentation& q, const DimensionVector& d,
                        const DimensionVector& e) {
  check_length(q, e, "framing vector");
  long dot = 0;
  for (std::size_t i = 0; i < d.size(); ++i) dot += static_cast<long>(d[i]) * e[i];
  return virtual_dim_ncdt4(q, d) + 2 * dot - 2;
}

long full_euler_degree(const QuiverPresentation& q, const DimensionVector& d) {
  const ExtDims x = ext_dims(q, d);
  return 2 * x.ext1 - 2 * x.ext0 + 2 - 2 * x.ext2;
}

SplitReport isotropic_split_check(const QuiverPresentation& q, const DimensionVector& d) {
  check_length(q, d, "dimension vector");
  SplitReport r;
  for (const auto& [key, count] : q.relation_counts()) {
    const auto [i, j] = key;
    const long block = static_cast<long>(count) * d[i] * d[j];
    if (block == 0) continue;
    if (i == j) throw Error(ErrorKind::NotApplicable, "self-paired relation block at vertex " + std::to_string(i));
    const long partner = static_cast<long>(q.relation_count(j, i)) * d[j] * d[i];
    if (block != partner)
      throw Error(ErrorKind::NotApplicable, "relation blocks (" + std::to_string(i) + "," +
                                                std::to_string(j) + ") and their transpose differ");
    if (i < j) r.ext2_half += block;
  }
  const ExtDims x = ext_dims(q, d);
  r.paired = true;
  r.moduli_dim = x.ext1 - x.ext0 + 1;
  r.ncdt4_degree = virtual_dim_ncdt4(q, d);
  r.ncdt3_degree = 2 * r.moduli_dim - 2 * r.ext2_half;
  return r;
}

BigRational default_framing_epsilon(const DimensionVector& d, const Stability& theta) {
  const long n = total(d);
  if (n == 0) throw Error(ErrorKind::ZeroDimension, "framing of the zero dimension vector");
  long max_abs = 0;
  for (int t : theta) max_abs = std::max<long>(max_abs, std::labs(t));
  BigRational eps(1, 2 * n * (1 + max_abs * n));
  eps.canonicalize();
  return eps;
}

FramedQuiver framed_quiver(const QuiverPresentation& q, const DimensionVector& d,
                           const DimensionVector& e, const Stability& theta) {
  return framed_quiver(q, d, e, theta, default_framing_epsilon(d, theta));
}

FramedQuiver framed_quiver(const QuiverPresentation& q, const DimensionVector& d,
                           const DimensionVector& e, const Stability& theta,
                           const BigRational& epsilon) {
  check_length(q, d, "dimension vector");
  check_length(q, e, "framing vector");
  check_length(q, theta, "stability");
  if (total(e) == 0) throw Error(ErrorKind::InvalidArgument, "framing vector must be nonzero");
  if (epsilon <= 0) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");

  const int infinity = q.vertex_count();
  std::vector<Arrow> arrows = q.arrows();
  for (int i = 0; i < q.vertex_count(); ++i) {
    if (e[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative framing entry");
    for (int k = 0; k < e[i]; ++k) arrows.push_back({infinity, i});
  }
  FramedQuiver f{QuiverPresentation(infinity + 1, std::move(arrows), q.relation_counts()), d,
                 std::vector<BigRational>(theta.begin(), theta.end()), epsilon};
  f.d.push_back(1);
  f.theta.push_back(slope(theta, d) + epsilon);
  return f;
}

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable: return "stable";
    case StabilityClass::Semistable: return "semistable";
    case StabilityClass::Unstable: return "unstable";
  }
  return "unknown";
}

StabilityClass thin_stability(const QuiverPresentation& q, const ThinRepresentation& rep,
                              const Stability& theta) {
  check_length(q, theta, "stability");
  std::vector<int> support = rep.support;
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.empty()) throw Error(ErrorKind::ZeroDimension, "empty representation");
  if (support.size() > 20) throw Error(ErrorKind::ResourceLimit, "support too large for subset enumeration");
  std::vector<int> position(q.vertex_count(), -1);
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k] < 0 || support[k] >= q.vertex_count())
      throw Error(ErrorKind::InvalidArgument, "support vertex out of range");
    position[support[k]] = static_cast<int>(k);
  }

  // Arrows with a nonzero value, as (tail bit, head bit) within the support.
  std::vector<std::pair<int, int>> live;
  for (const auto& [index, value] : rep.arrow_values) {
    if (index >= q.arrows().size()) throw Error(ErrorKind::InvalidArgument, "arrow index out of range");
    if (value == 0) continue;
    const Arrow& a = q.arrows()[index];
    if (position[a.tail] < 0 || position[a.head] < 0)
      throw Error(ErrorKind::InvalidArgument, "arrow value on an arrow leaving the support");
    live.emplace_back(position[a.tail], position[a.head]);
  }

  auto mu = [&](std::uint32_t mask) -> BigRational {
    BigRational num = 0;
    long count = 0;
    for (std::size_t k = 0; k < support.size(); ++k)
      if (mask & (1U << k)) {
        num += theta[support[k]];
        ++count;
      }
    return num / count;
  };
  const std::uint32_t full = (1U << support.size()) - 1;
  const BigRational mu_total = mu(full);
  bool strict = true;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const bool closed = std::all_of(live.begin(), live.end(), [&](const auto& a) {
      return !(mask & (1U << a.first)) || (mask & (1U << a.second));
    });
    if (!closed) continue;
    const BigRational m = mu(mask);
    if (m > mu_total) return StabilityClass::Unstable;
    if (m == mu_total) strict = false;
  }
  return strict ? StabilityClass::Stable : StabilityClass::Semistable;
}

QuiverPresentation parse_quiver_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  try {
    const int vertices = j.at("vertices").get<int>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    std::map<std::pair<int, int>, int> relations;
    if (j.contains("relations"))
      for (const auto& r : j.at("relations"))
        relations[{r.at(0).get<int>(), r.at(1).get<int>()}] += r.at(2).get<int>();
    return {vertices, std::move(arrows), std::move(relations)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed quiver file: ") + e.what());
  }
}

std::string to_json(const QuiverPresentation& q) {
  nlohmann::json j;
  j["vertices"] = q.vertex_count();
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : q.arrows()) j["arrows"].push_back({a.tail, a.head});
  j["relations"] = nlohmann::json::array();
  for (const auto& [key, count] : q.relation_counts())
    j["relations"].push_back({key.first, key.second, count});
  return j.dump();
}

}  // namespace dt4::quiver
