#pragma once

#include <vector>

#include "tsys/bigcount.hpp"
#include "tsys/catalan_tuple.hpp"
#include "tsys/composition.hpp"
#include "tsys/transfer_system.hpp"

namespace tsys {

struct ExtensionSpec {
  TransferSystem base;  // on [m], m >= 1
  int block = 1;        // k >= 1, size of the complete block appended
  int level = 0;        // 0 <= level <= r, r = number of proper transfers into m
};

/// The level-indexed core-preserving extension of base by a complete block:
/// on [m + k], keeps base on [m], is complete on {m+1, ..., m+k}, and sends
/// exactly the first r - level of the elements d_1 < ... < d_r < m that
/// transfer to m in base across to every element of the new block. level = r
/// gives concat(base, complete(k)). The core of the result is always
/// concat(core(base), complete(k)).
/// Throws EmptyPoset for an empty base, InvalidParams for block < 1,
/// LevelOutOfRange outside 0..r.
TransferSystem build_extension(const TransferSystem& base, int block, int level);
TransferSystem build_extension(const ExtensionSpec& spec);

/// All r + 1 core-preserving extensions of base by a complete block of size
/// block, level ascending. Pairwise distinct.
std::vector<TransferSystem> list_extensions(const TransferSystem& base, int block);

/// The bijection from transfer systems on [n] to Catalan tuples of length n:
/// the core block sizes become the nonzero entries, and the zero run before
/// the entry for block t records the level of the extension step that
/// attached block t. The excess of the result equals the number of elements
/// below n transferring to n. Throws EmptyPoset on the unit.
CatalanTuple sigma(const TransferSystem& sys);

/// Inverse of sigma: folds build_extension over the tuple's blocks and zero
/// runs, starting from the complete system on the first entry. Throws
/// InvalidTuple on the empty tuple.
TransferSystem sigma_inverse(const CatalanTuple& tuple);

struct CoreBreakdownRow {
  Composition blocks;       // the core composition
  BigCount tuple_count;     // number of Catalan tuples with that core
  BigCount catalan_product; // product of Catalan numbers of the parts
  BigCount contribution;    // tuple_count * catalan_product
};

struct CoreCount {
  BigCount total;
  std::vector<CoreBreakdownRow> rows;  // compositions_of order
};

/// Counts compatible pairs on [n] grouped by the core of the additive
/// system: each composition contributes (number of tuples with that core) *
/// (product of block Catalan numbers). Exhaustive over compositions, so
/// exponential in n; see tuple_catalan_sum for the same total at scale.
/// Requires n >= 1.
CoreCount count_by_cores(int n);

/// sum over all Catalan tuples of length n of the product of Catalan
/// numbers of their entries, computed by an O(n^3) prefix dynamic program.
/// Equals count_by_cores(n).total. Requires n >= 1.
BigCount tuple_catalan_sum(int n);

}  // namespace tsys
