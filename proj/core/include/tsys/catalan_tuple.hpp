#pragma once

#include <vector>

#include "tsys/composition.hpp"
#include "tsys/errors.hpp"

namespace tsys {

/// A Catalan tuple: entries (s_0, ..., s_r) of non-negative integers whose
/// prefix sums strictly dominate their position (sum_{i<=j} s_i > j for
/// every j) and whose last entry is positive when the total is. The total
/// sum n is called the length. The empty tuple (n = 0) is representable but
/// rejected by every operation that needs an entry.
class CatalanTuple {
 public:
  CatalanTuple() = default;  // the empty tuple

  const std::vector<int>& entries() const& { return entries_; }
  // rvalue overload so iterating entries() of a temporary does not dangle
  std::vector<int> entries() && { return std::move(entries_); }
  int length() const { return length_; }  // n, the sum of the entries

  friend bool operator==(const CatalanTuple&, const CatalanTuple&) = default;
  friend auto operator<=>(const CatalanTuple&, const CatalanTuple&) = default;

 private:
  friend CatalanTuple make_catalan_tuple(std::vector<int>);

  std::vector<int> entries_;
  int length_ = 0;
};

/// Validates and builds a Catalan tuple. Throws NegativeEntry, then
/// PrefixDominanceViolated naming the first failing position, then
/// TrailingZero, in that order of checks.
CatalanTuple make_catalan_tuple(std::vector<int> entries);

/// n - r - 1 for a tuple of r + 1 entries summing to n: the number of
/// additional zeros the tuple can absorb. Always >= 0. Throws EmptyTuple on
/// the empty tuple.
int excess(const CatalanTuple& tuple);

/// The nonzero entries in order. Throws EmptyTuple on the empty tuple.
Composition tuple_core(const CatalanTuple& tuple);

/// Appends zeros zero entries followed by the entry k >= 1. Valid whenever
/// 0 <= zeros <= excess(tuple); the result has excess
/// k - 1 + excess(tuple) - zeros. Throws ExcessExceeded outside that range,
/// InvalidParams for k < 1, EmptyTuple on the empty tuple.
CatalanTuple extend_tuple(const CatalanTuple& tuple, int k, int zeros);

/// All Catalan tuples whose core is the given composition, built by
/// extending through its parts; zero runs chosen shortest first at each
/// step.
std::vector<CatalanTuple> enumerate_tuples_with_core(const Composition& blocks);

/// All Catalan tuples of length n, grouped by core in the compositions_of
/// order. There are Catalan(n) of them. Requires n >= 1.
std::vector<CatalanTuple> enumerate_tuples(int n);

}  // namespace tsys
