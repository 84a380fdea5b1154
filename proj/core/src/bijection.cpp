#include "tsys/bijection.hpp"

#include <cassert>
#include <string>

#include "tsys/fuss_catalan.hpp"

namespace tsys {

namespace {

// d_1 < ... < d_r: the elements strictly below m transferring to m.
std::vector<int> proper_transfers_to_top(const TransferSystem& base) {
  std::vector<int> d;
  int m = base.size();
  for (int i = 1; i < m; ++i)
    if (base.has(i, m)) d.push_back(i);
  return d;
}

}  // namespace

TransferSystem build_extension(const TransferSystem& base, int block, int level) {
  int m = base.size();
  if (m < 1) throw EmptyPoset("extensions need a nonempty base");
  if (block < 1)
    throw InvalidParams("extension block size must be positive, got " + std::to_string(block));
  std::vector<int> d = proper_transfers_to_top(base);
  int r = static_cast<int>(d.size());
  if (level < 0 || level > r)
    throw LevelOutOfRange("extension level " + std::to_string(level) + " outside 0.." +
                          std::to_string(r));

  std::vector<Relation> out = base.relations();
  for (int i = m + 1; i < m + block; ++i)
    for (int j = i + 1; j <= m + block; ++j) out.emplace_back(i, j);
  // the first r - level transfer sources cross into the whole new block
  for (int s = 0; s < r - level; ++s)
    for (int j = m + 1; j <= m + block; ++j) out.emplace_back(d[s], j);
  return make_transfer_system(m + block, out);
}

TransferSystem build_extension(const ExtensionSpec& spec) {
  return build_extension(spec.base, spec.block, spec.level);
}

std::vector<TransferSystem> list_extensions(const TransferSystem& base, int block) {
  int r = static_cast<int>(proper_transfers_to_top(base).size());
  std::vector<TransferSystem> out;
  out.reserve(r + 1);
  for (int level = 0; level <= r; ++level) out.push_back(build_extension(base, block, level));
  return out;
}

CatalanTuple sigma(const TransferSystem& sys) {
  int n = sys.size();
  if (n == 0) throw EmptyPoset("sigma is undefined on the unit");
  std::vector<int> blocks = core_blocks(sys);

  // Peel the blocks top down: block t was attached to the prefix [K_{t-1}]
  // at level r - c, where r counts transfers into K_{t-1} within the prefix
  // and c counts crossing arrows into block t. Recorded bottom up as
  // (k_1, zeros(level_1), k_2, zeros(level_2), ..., k_N).
  std::vector<int> entries{blocks[0]};
  int prefix_top = blocks[0];
  for (std::size_t t = 1; t < blocks.size(); ++t) {
    int r = 0;
    for (int i = 1; i < prefix_top; ++i)
      if (sys.has(i, prefix_top)) ++r;
    int crossing = 0;
    for (int i = 1; i <= prefix_top; ++i)
      if (sys.has(i, prefix_top + 1)) ++crossing;
    int level = r - crossing;
    assert(level >= 0);
    entries.insert(entries.end(), level, 0);
    entries.push_back(blocks[t]);
    prefix_top += blocks[t];
  }
  return make_catalan_tuple(std::move(entries));
}

TransferSystem sigma_inverse(const CatalanTuple& tuple) {
  if (tuple.entries().empty())
    throw InvalidTuple("sigma_inverse needs a tuple with at least one entry");
  const std::vector<int>& entries = tuple.entries();
  TransferSystem sys = complete(entries[0]);
  std::size_t pos = 1;
  while (pos < entries.size()) {
    int zeros = 0;
    while (entries[pos] == 0) {
      ++zeros;
      ++pos;  // a valid tuple never ends in zero, so this stays in range
    }
    sys = build_extension(sys, entries[pos], zeros);
    ++pos;
  }
  return sys;
}

CoreCount count_by_cores(int n) {
  if (n < 1) throw BoundsError("core-indexed counting needs n >= 1, got " + std::to_string(n));
  CoreCount result;
  result.total = 0;
  for (Composition& blocks : compositions_of(n)) {
    CoreBreakdownRow row{blocks, 0, 1, 0};
    row.tuple_count = static_cast<long long>(enumerate_tuples_with_core(blocks).size());
    for (int b : blocks.parts()) row.catalan_product *= catalan(b);
    row.contribution = row.tuple_count * row.catalan_product;
    result.total += row.contribution;
    result.rows.push_back(std::move(row));
  }
  return result;
}

BigCount tuple_catalan_sum(int n) {
  if (n < 1) throw BoundsError("tuple sum needs n >= 1, got " + std::to_string(n));
  // weight[c][t]: sum over valid prefixes of c entries with sum t of the
  // product of entry Catalan numbers; validity needs t >= c at every step.
  std::vector<BigCount> cat(n + 1);
  for (int s = 0; s <= n; ++s) cat[s] = catalan(s);
  std::vector<std::vector<BigCount>> weight(n + 1, std::vector<BigCount>(n + 1, 0));
  weight[0][0] = 1;
  for (int c = 1; c <= n; ++c)
    for (int t = c; t <= n; ++t)
      for (int prev = c - 1; prev <= t; ++prev)
        if (weight[c - 1][prev] != 0) weight[c][t] += weight[c - 1][prev] * cat[t - prev];

  // close with the final entry, which must be positive
  BigCount total = 0;
  for (int c = 1; c <= n; ++c)
    for (int prev = c - 1; prev < n; ++prev)
      if (weight[c - 1][prev] != 0) total += weight[c - 1][prev] * cat[n - prev];
  return total;
}

}  // namespace tsys
