#include "tsys/enumerate.hpp"

#include <deque>
#include <mutex>
#include <string>

namespace tsys {

namespace {

std::mutex cache_mutex;
// cache[m] = all systems on [m]. A deque so handed-out references survive
// later growth.
std::deque<std::vector<TransferSystem>> cache;

// Fills cache levels 0..n. Every system on [n] arises uniquely by splitting
// off its last wrapped summand: sys = concat(L, wrap(R)).
void fill_locked(int n) {
  if (cache.empty()) cache.push_back({TransferSystem{}});
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    std::vector<TransferSystem> level;
    for (int left = 0; left < m; ++left)
      for (const TransferSystem& l : cache[left])
        for (const TransferSystem& r : cache[m - left - 1])
          level.push_back(concat(l, wrap(r)));
    cache.push_back(std::move(level));
  }
}

}  // namespace

const std::vector<TransferSystem>& enumerate_all(int n) {
  if (n < 0) throw BoundsError("cannot enumerate systems on negative size " + std::to_string(n));
  std::lock_guard<std::mutex> lock(cache_mutex);
  fill_locked(n);
  return cache[n];
}

}  // namespace tsys
