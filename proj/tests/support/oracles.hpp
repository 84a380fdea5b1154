#pragma once

// Reference implementations used to cross-check the library. Everything here
// is recomputed from first principles on plain ordered pair sets and shares
// no representation or code with the library under test. Feasible only for
// small n; the test suites keep oracle-backed checks at n <= 6.

#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Arrow = std::pair<int, int>;
using ArrowSet = std::set<Arrow>;

inline bool valid_system(int n, const ArrowSet& rel) {
  for (const auto& [i, j] : rel)
    if (i < 1 || j > n || i >= j) return false;
  for (const auto& [i, j] : rel)
    for (const auto& [a, b] : rel)
      if (j == a && !rel.count({i, b})) return false;  // transitivity
  for (const auto& [i, j] : rel)
    for (int k = i + 1; k < j; ++k)
      if (!rel.count({i, k})) return false;  // restriction
  return true;
}

inline std::vector<Arrow> all_arrows(int n) {
  std::vector<Arrow> out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

// Every valid transfer system on [n], by filtering all arrow subsets.
inline std::set<ArrowSet> all_systems(int n) {
  std::vector<Arrow> arrows = all_arrows(n);
  std::set<ArrowSet> out;
  for (unsigned long mask = 0; mask < (1ul << arrows.size()); ++mask) {
    ArrowSet rel;
    for (std::size_t b = 0; b < arrows.size(); ++b)
      if (mask >> b & 1) rel.insert(arrows[b]);
    if (valid_system(n, rel)) out.insert(rel);
  }
  return out;
}

// Direct reading of the compatibility condition: every arrow i -> j of the
// multiplicative system forces k -> j in the additive one for i <= k <= j.
inline bool compatible(const ArrowSet& additive, const ArrowSet& multiplicative) {
  for (const auto& [i, j] : multiplicative)
    for (int k = i; k < j; ++k)
      if (!additive.count({k, j})) return false;
  return true;
}

inline ArrowSet restrict_to(const ArrowSet& rel, int k) {
  ArrowSet out;
  for (const auto& [i, j] : rel)
    if (j <= k) out.insert({i, j});
  return out;
}

inline ArrowSet top_segment(const ArrowSet& rel, int k) {
  ArrowSet out;
  for (const auto& [i, j] : rel)
    if (i > k) out.insert({i - k, j - k});
  return out;
}

// Transitive closure of the adjacent arrows present: complete blocks on the
// maximal runs of consecutive adjacent arrows.
inline ArrowSet adjacent_closure(int n, const ArrowSet& rel) {
  ArrowSet out;
  int start = 1;
  for (int k = 1; k <= n; ++k) {
    bool run_continues = k < n && rel.count({k, k + 1}) > 0;
    if (run_continues) continue;
    for (int i = start; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) out.insert({i, j});
    start = k + 1;
  }
  return out;
}

inline ArrowSet shifted_union(const ArrowSet& lhs, int shift, const ArrowSet& rhs) {
  ArrowSet out = lhs;
  for (const auto& [i, j] : rhs) out.insert({i + shift, j + shift});
  return out;
}

inline ArrowSet complete_set(int n) {
  ArrowSet out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.insert({i, j});
  return out;
}

}  // namespace oracle
