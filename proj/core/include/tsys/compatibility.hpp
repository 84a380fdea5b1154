#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "tsys/bigcount.hpp"
#include "tsys/transfer_system.hpp"

namespace tsys {

/// Three equivalent routes to the same relation; definition is the direct
/// quantifier check, the others go through the saturation operators.
enum class CompatMode {
  definition,  // every arrow i -> j of multiplicative forces k -> j in additive, i <= k <= j
  core,        // multiplicative <= core(additive)
  hull,        // hull(multiplicative) <= additive
};

/// Whether (additive, multiplicative) form a compatible pair. Both systems
/// must live on the same poset (SizeMismatch otherwise).
bool is_compatible(const TransferSystem& additive, const TransferSystem& multiplicative,
                   CompatMode mode = CompatMode::core);

/// All multiplicative partners of the given additive system, i.e. all
/// systems <= core(additive). Enumerated as the product of enumerate_all
/// over the core block sizes (index shifted), last block varying fastest.
/// Count is the product of the block Catalan numbers. Requires size() >= 1.
std::vector<TransferSystem> compatible_partners(const TransferSystem& additive);

/// Streams every compatible pair on [n]: additive systems in enumeration
/// order, partners in compatible_partners order. Requires n >= 1.
void for_each_compatible_pair(
    int n, const std::function<void(const TransferSystem&, const TransferSystem&)>& fn);

/// The largest i such that the system is an i-fold wrap, i.e. (s, n) is an
/// arrow for all 1 <= s <= min(i, n - 1), capped at n for the complete
/// system. Throws EmptyPoset on the unit.
int filtration_level(const TransferSystem& sys);

/// Memoized table of d(n, i): the number of compatible pairs on [n] whose
/// additive part is an i-fold wrap. Satisfies
///   d(n, n) = d(n, n-1) = Catalan(n)
///   d(n, i) = d(n, i+1) + sum_{j=1..n-i-1} d(n-j, i) * d(j, 1)
/// so d(n, 0) counts all compatible pairs on [n]. Entries are computed on
/// demand, filling i downward; the table behaves as a single atomic
/// get-or-compute map.
class CountTable {
 public:
  // Throws BoundsError unless n >= 1 and 0 <= i <= n.
  BigCount d(int n, int i);

  // CSV rows "n,i,d", ascending (n, i), no header. Loading validates every
  // row whose dependencies are also present and throws Error on corruption.
  void load_csv(std::istream& in);
  void save_csv(std::ostream& out) const;

 private:
  BigCount d_locked(int n, int i);

  mutable std::mutex mutex_;
  std::map<std::pair<int, int>, BigCount> memo_;
};

/// d(n, i) from a process-wide shared CountTable.
BigCount count_d(int n, int i);

enum class CountMethod {
  brute,       // stream the pairs and count them
  recurrence,  // CountTable d(n, 0)
  cores,       // sum over compositions of tuple count * Catalan product
};

/// Number of compatible pairs on [n] by the requested method. brute and
/// cores enumerate exhaustively and throw InfeasibleSize for n > bound.
/// Requires n >= 1.
BigCount count_pairs(int n, CountMethod method, int bound = 8);

}  // namespace tsys
