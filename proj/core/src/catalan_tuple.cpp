#include "tsys/catalan_tuple.hpp"

#include <string>

namespace tsys {

CatalanTuple make_catalan_tuple(std::vector<int> entries) {
  for (int e : entries)
    if (e < 0) throw NegativeEntry("tuple entry must be non-negative, got " + std::to_string(e));

  long long prefix = 0;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    prefix += entries[j];
    if (prefix <= static_cast<long long>(j))
      throw PrefixDominanceViolated(static_cast<int>(j),
                                    "prefix sum " + std::to_string(prefix) +
                                        " does not dominate position " + std::to_string(j));
  }
  if (!entries.empty() && prefix > 0 && entries.back() == 0)
    throw TrailingZero("a nonempty tuple must end in a positive entry");

  CatalanTuple t;
  t.length_ = static_cast<int>(prefix);
  t.entries_ = std::move(entries);
  return t;
}

int excess(const CatalanTuple& tuple) {
  if (tuple.entries().empty()) throw EmptyTuple("the empty tuple has no excess");
  return tuple.length() - static_cast<int>(tuple.entries().size());
}

Composition tuple_core(const CatalanTuple& tuple) {
  if (tuple.entries().empty()) throw EmptyTuple("the empty tuple has no core");
  std::vector<int> parts;
  for (int e : tuple.entries())
    if (e > 0) parts.push_back(e);
  return Composition(std::move(parts));
}

CatalanTuple extend_tuple(const CatalanTuple& tuple, int k, int zeros) {
  if (k < 1) throw InvalidParams("extension entry must be positive, got " + std::to_string(k));
  int avail = excess(tuple);  // EmptyTuple on the empty tuple
  if (zeros < 0 || zeros > avail)
    throw ExcessExceeded("zero run " + std::to_string(zeros) + " outside 0.." +
                         std::to_string(avail));
  std::vector<int> entries = tuple.entries();
  entries.insert(entries.end(), zeros, 0);
  entries.push_back(k);
  return make_catalan_tuple(std::move(entries));
}

std::vector<CatalanTuple> enumerate_tuples_with_core(const Composition& blocks) {
  const std::vector<int>& parts = blocks.parts();
  std::vector<CatalanTuple> frontier{make_catalan_tuple({parts[0]})};
  for (std::size_t t = 1; t < parts.size(); ++t) {
    std::vector<CatalanTuple> next;
    for (const CatalanTuple& tuple : frontier)
      for (int zeros = 0; zeros <= excess(tuple); ++zeros)
        next.push_back(extend_tuple(tuple, parts[t], zeros));
    frontier = std::move(next);
  }
  return frontier;
}

std::vector<CatalanTuple> enumerate_tuples(int n) {
  if (n < 1) throw BoundsError("tuple enumeration needs n >= 1, got " + std::to_string(n));
  std::vector<CatalanTuple> out;
  for (const Composition& blocks : compositions_of(n))
    for (CatalanTuple& tuple : enumerate_tuples_with_core(blocks))
      out.push_back(std::move(tuple));
  return out;
}

}  // namespace tsys
