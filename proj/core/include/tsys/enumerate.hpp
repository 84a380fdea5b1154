#pragma once

#include <vector>

#include "tsys/transfer_system.hpp"

namespace tsys {

/// All transfer systems on [n] in the canonical order: split point m
/// ascending, then left factor index, then wrapped factor index, where every
/// system is produced exactly once as concat(L, wrap(R)) with L on [m] and R
/// on [n - m - 1]. The count is the n-th Catalan number.
///
/// Results are memoized; the returned reference stays valid for the process
/// lifetime. Thread safe. Requires n >= 0.
const std::vector<TransferSystem>& enumerate_all(int n);

}  // namespace tsys
