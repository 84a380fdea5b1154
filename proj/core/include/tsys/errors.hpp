#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tsys {

// Base of every domain error thrown by this library. Callers that only care
// about "the input was bad" can catch this; tests catch the concrete types.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An index or size is outside the poset or outside the declared domain.
struct BoundsError : Error {
  using Error::Error;
};

// Two systems that must live on the same poset do not.
struct SizeMismatch : Error {
  using Error::Error;
};

// A relation set is missing the composite of two of its arrows.
struct NotTransitive : Error {
  NotTransitive(std::pair<int, int> missing_pair, const std::string& what)
      : Error(what), missing(missing_pair) {}
  std::pair<int, int> missing;
};

// A relation set contains i -> j but not i -> k for some i <= k <= j.
struct RestrictionViolated : Error {
  RestrictionViolated(std::pair<int, int> missing_pair, const std::string& what)
      : Error(what), missing(missing_pair) {}
  std::pair<int, int> missing;
};

// An operation that needs at least one poset element was given the unit.
struct EmptyPoset : Error {
  using Error::Error;
};

// An exhaustive method was requested beyond the configured size bound.
struct InfeasibleSize : Error {
  using Error::Error;
};

// A parameter is outside the stated domain of the requested computation.
struct InvalidParams : Error {
  using Error::Error;
};

// Catalan tuple validation.
struct NegativeEntry : Error {
  using Error::Error;
};

struct PrefixDominanceViolated : Error {
  PrefixDominanceViolated(int index_j, const std::string& what)
      : Error(what), index(index_j) {}
  int index;  // first prefix position whose partial sum fails to dominate
};

struct TrailingZero : Error {
  using Error::Error;
};

struct EmptyTuple : Error {
  using Error::Error;
};

// extend_tuple was asked to insert more zeros than the tuple's excess allows.
struct ExcessExceeded : Error {
  using Error::Error;
};

// build_extension was given a level outside 0..r.
struct LevelOutOfRange : Error {
  using Error::Error;
};

// sigma_inverse was given a tuple it cannot realize.
struct InvalidTuple : Error {
  using Error::Error;
};

}  // namespace tsys
