#pragma once

#include <vector>

#include "tsys/errors.hpp"
#include "tsys/transfer_system.hpp"

namespace tsys {

/// An ordered sequence of positive parts. Used for the block sizes of a
/// saturated system and for the nonzero entries of a Catalan tuple.
class Composition {
 public:
  // Throws InvalidParams on an empty sequence or a non-positive part.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const& { return parts_; }
  // rvalue overload so iterating parts() of a temporary does not dangle
  std::vector<int> parts() && { return std::move(parts_); }
  int total() const { return total_; }

  // Partial sum of the first s parts, 0 <= s <= parts().size().
  int partial_sum(int s) const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// All compositions of n, first part descending, then recursively the same
/// order on the remainder: for n = 3 this yields (3), (2,1), (1,2), (1,1,1).
/// Requires n >= 1.
std::vector<Composition> compositions_of(int n);

/// The saturated system with the given block sizes: a disjoint union of
/// complete systems.
TransferSystem saturated_from_composition(const Composition& blocks);

}  // namespace tsys
