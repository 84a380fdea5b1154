#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "tsys/errors.hpp"

namespace tsys {

using Relation = std::pair<int, int>;

/// A transfer system on the linear poset [n] = {1 < 2 < ... < n}.
///
/// The stored relations are the non-reflexive arrows i -> j with i < j of a
/// partial order refining <= that is
///   * transitive: i -> j and j -> k imply i -> k, and
///   * closed under restriction: i -> j implies i -> k for every i <= k <= j.
/// Reflexive arrows are implicit. n = 0 is the unit: the unique (empty)
/// system on the empty poset.
///
/// Values are immutable after construction and canonical: two systems are
/// equal iff they have the same n and the same relation set. Construct
/// through make_transfer_system (validating) or one of the operations below,
/// all of which produce valid systems.
class TransferSystem {
 public:
  TransferSystem() = default;  // the unit, n = 0

  int size() const { return n_; }

  // True iff the arrow i -> j is present. Requires 1 <= i <= j <= size();
  // reflexive arrows count as present.
  bool has(int i, int j) const;

  int relation_count() const;

  // All stored arrows, sorted lexicographically.
  std::vector<Relation> relations() const;

  friend bool operator==(const TransferSystem&, const TransferSystem&) = default;
  // Canonical total order (by n, then by packed relation bits); used for
  // set-valued comparisons, not for anything semantic.
  friend auto operator<=>(const TransferSystem&, const TransferSystem&) = default;

 private:
  friend TransferSystem make_transfer_system(int, const std::vector<Relation>&);

  TransferSystem(int n, std::vector<std::uint64_t> bits)
      : n_(n), bits_(std::move(bits)) {}

  int n_ = 0;
  std::vector<std::uint64_t> bits_;  // triangular bit matrix, column-major by target
};

/// Validates and builds a transfer system on [n] from an explicit arrow list.
/// Duplicates are tolerated. Throws BoundsError for n < 0 or a pair outside
/// 1 <= i < j <= n; NotTransitive / RestrictionViolated name the first
/// missing arrow (transitivity is checked first, scanning lexicographically).
TransferSystem make_transfer_system(int n, const std::vector<Relation>& relations);

/// Smallest transfer system on [n] containing the given arrows: repeatedly
/// closes under restriction and transitivity. Never reports closure errors;
/// only BoundsError for out-of-range input.
TransferSystem generate_from(int n, const std::vector<Relation>& relations);

/// Subset order on systems of equal size. Throws SizeMismatch otherwise.
bool leq(const TransferSystem& lhs, const TransferSystem& rhs);

/// Disjoint union on [n_L + n_R]: arrows of lhs, plus arrows of rhs shifted
/// up by lhs.size(). Associative, with the unit as identity.
TransferSystem concat(const TransferSystem& lhs, const TransferSystem& rhs);

/// Restriction to the bottom segment [k]: keeps exactly the arrows with
/// target <= k. Requires 0 <= k <= size().
TransferSystem restrict(const TransferSystem& sys, int k);

/// Passage to the top segment: the system on [n - k] whose arrow i -> j
/// records (i + k) -> (j + k) in sys. Requires 0 <= k <= size().
TransferSystem fixed_points(const TransferSystem& sys, int k);

/// Adds a new minimum transferring to everything: the system on [n + 1] with
/// all arrows 1 -> j plus the arrows of sys shifted up by one.
/// fixed_points(wrap(sys), 1) == sys always holds.
TransferSystem wrap(const TransferSystem& sys);

/// The complete system on [n]: every arrow i -> j, i < j. Requires n >= 0.
TransferSystem complete(int n);

struct Classification {
  bool wrapped = false;    // 1 -> n (every system on [1] counts as wrapped)
  bool complete = false;   // all arrows present; implies wrapped
  bool saturated = false;  // i -> j present implies (j-1) -> j present
};

/// Structural flags. Throws EmptyPoset on the unit.
Classification classify(const TransferSystem& sys);

/// Largest saturated system below sys: the transitive closure of the
/// adjacent arrows k -> k+1 that sys contains. A disjoint union of complete
/// blocks; the block boundaries are exactly the missing adjacent arrows.
TransferSystem core(const TransferSystem& sys);

/// Sizes of the complete blocks of core(sys), in order. Requires size() >= 1.
std::vector<int> core_blocks(const TransferSystem& sys);

/// Smallest saturated system above sys: completes each indecomposable
/// summand of sys. core(sys) <= sys <= hull(sys) always holds, and both
/// bounds are monotone in sys.
TransferSystem hull(const TransferSystem& sys);

/// The unique sequence O_1, ..., O_k with sys = wrap(O_1) + ... + wrap(O_k)
/// (+ meaning concat). Summand boundaries are the points no arrow crosses.
/// Throws EmptyPoset on the unit.
std::vector<TransferSystem> decompose_wrapped(const TransferSystem& sys);

}  // namespace tsys
