#pragma once

// Small helpers over sorted int vectors, used as canonical id sets everywhere.

#include <algorithm>
#include <vector>

namespace leancut::detail {

inline bool sorted_contains(const std::vector<int>& xs, int x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

inline bool is_sorted_unique(const std::vector<int>& xs) {
  for (size_t i = 1; i < xs.size(); ++i)
    if (xs[i - 1] >= xs[i]) return false;
  return true;
}

inline std::vector<int> sorted_unique(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline std::vector<int> sorted_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool sorted_is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace leancut::detail
