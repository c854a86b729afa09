#pragma once

// Brute-force order-ideal count: size-n subsets of the candidate region
// prod(b_i + 1) <= n, kept when downward closed.

#include <array>
#include <functional>
#include <vector>

namespace oracle {

inline std::vector<std::array<int, 4>> candidate_boxes(int n) {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if ((a + 1) * (b + 1) * (c + 1) * (d + 1) <= n) out.push_back({a, b, c, d});
  return out;
}

inline bool closed(const std::vector<std::array<int, 4>>& s) {
  auto has = [&](const std::array<int, 4>& p) {
    for (const auto& q : s)
      if (q == p) return true;
    return false;
  };
  for (const auto& p : s)
    for (int i = 0; i < 4; ++i) {
      if (p[i] == 0) continue;
      auto q = p;
      --q[i];
      if (!has(q)) return false;
    }
  return true;
}

inline long count_solid_partitions(int n) {
  if (n == 0) return 1;
  const auto boxes = candidate_boxes(n);
  std::vector<std::array<int, 4>> chosen;
  long count = 0;
  std::function<void(std::size_t)> pick = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == n) {
      count += closed(chosen);
      return;
    }
    for (std::size_t i = from; i + (n - chosen.size()) <= boxes.size(); ++i) {
      chosen.push_back(boxes[i]);
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return count;
}

}  // namespace oracle
