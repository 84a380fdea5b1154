#pragma once

// Shared fixtures and bridges between the library types and the oracle's
// plain pair sets.

#include <set>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "tsys/transfer_system.hpp"

namespace fixtures {

inline oracle::ArrowSet to_set(const tsys::TransferSystem& sys) {
  auto rel = sys.relations();
  return oracle::ArrowSet(rel.begin(), rel.end());
}

inline tsys::TransferSystem from_set(int n, const oracle::ArrowSet& rel) {
  return tsys::make_transfer_system(n, {rel.begin(), rel.end()});
}

// A system on [7] whose core blocks are (4, 1, 2): complete below 4, with 1
// and 2 transferring all the way up to 7, and a lone adjacent arrow 6 -> 7.
inline tsys::TransferSystem blocks412_full() {
  return tsys::make_transfer_system(7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
                                        {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7},
                                        {3, 4}, {6, 7}});
}

// The saturated system with blocks (4, 1, 2): the core of blocks412_full.
inline tsys::TransferSystem blocks412_saturated() {
  return tsys::make_transfer_system(
      7, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {6, 7}});
}

// concat(complete(4), {(1,2),(1,3)} on [3]): two summands on [7].
inline tsys::TransferSystem two_summands() {
  return tsys::concat(tsys::complete(4),
                      tsys::make_transfer_system(3, {{1, 2}, {1, 3}}));
}

}  // namespace fixtures
