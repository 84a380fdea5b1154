#include "tsys/transfer_system.hpp"

#include <cassert>
#include <string>

namespace tsys {

namespace {

std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

std::size_t word_count(int n) {
  return (pair_count(n) + 63) / 64;
}

// Column-major by target: arrows into j occupy a contiguous bit range.
std::size_t pair_index(int i, int j) {
  return static_cast<std::size_t>(j - 1) * (j - 2) / 2 + (i - 1);
}

bool get_bit(const std::vector<std::uint64_t>& bits, int i, int j) {
  std::size_t idx = pair_index(i, j);
  return (bits[idx >> 6] >> (idx & 63)) & 1u;
}

void set_bit(std::vector<std::uint64_t>& bits, int i, int j) {
  std::size_t idx = pair_index(i, j);
  bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
}

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_pairs_in_bounds(int n, const std::vector<Relation>& relations) {
  if (n < 0) throw BoundsError("poset size must be non-negative, got " + std::to_string(n));
  for (const auto& [i, j] : relations) {
    if (i < 1 || j > n || i >= j)
      throw BoundsError("relation " + pair_str(i, j) + " is not a pair 1 <= i < j <= " +
                        std::to_string(n));
  }
}

std::vector<std::uint64_t> pack(int n, const std::vector<Relation>& relations) {
  std::vector<std::uint64_t> bits(word_count(n), 0);
  for (const auto& [i, j] : relations) set_bit(bits, i, j);
  return bits;
}

}  // namespace

bool TransferSystem::has(int i, int j) const {
  assert(1 <= i && i <= j && j <= n_);
  if (i == j) return true;
  return get_bit(bits_, i, j);
}

int TransferSystem::relation_count() const {
  int total = 0;
  for (std::uint64_t w : bits_) total += __builtin_popcountll(w);
  return total;
}

std::vector<Relation> TransferSystem::relations() const {
  std::vector<Relation> out;
  out.reserve(relation_count());
  for (int i = 1; i < n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (get_bit(bits_, i, j)) out.emplace_back(i, j);
  return out;
}

TransferSystem make_transfer_system(int n, const std::vector<Relation>& relations) {
  check_pairs_in_bounds(n, relations);
  std::vector<std::uint64_t> bits = pack(n, relations);

  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!get_bit(bits, i, j)) continue;
      for (int k = j + 1; k <= n; ++k)
        if (get_bit(bits, j, k) && !get_bit(bits, i, k))
          throw NotTransitive({i, k}, "not transitive: has " + pair_str(i, j) + " and " +
                                          pair_str(j, k) + " but not " + pair_str(i, k));
    }

  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!get_bit(bits, i, j)) continue;
      for (int k = i + 1; k < j; ++k)
        if (!get_bit(bits, i, k))
          throw RestrictionViolated({i, k}, "restriction violated: has " + pair_str(i, j) +
                                                " but not " + pair_str(i, k));
    }

  return TransferSystem(n, std::move(bits));
}

TransferSystem generate_from(int n, const std::vector<Relation>& relations) {
  check_pairs_in_bounds(n, relations);
  std::vector<std::uint64_t> bits = pack(n, relations);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (!get_bit(bits, i, j)) continue;
        for (int k = i + 1; k < j; ++k)
          if (!get_bit(bits, i, k)) {
            set_bit(bits, i, k);
            changed = true;
          }
        for (int k = j + 1; k <= n; ++k)
          if (get_bit(bits, j, k) && !get_bit(bits, i, k)) {
            set_bit(bits, i, k);
            changed = true;
          }
      }
  }
  std::vector<Relation> closed;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (get_bit(bits, i, j)) closed.emplace_back(i, j);
  return make_transfer_system(n, closed);
}

bool leq(const TransferSystem& lhs, const TransferSystem& rhs) {
  if (lhs.size() != rhs.size())
    throw SizeMismatch("cannot compare systems on [" + std::to_string(lhs.size()) +
                       "] and [" + std::to_string(rhs.size()) + "]");
  for (const auto& [i, j] : lhs.relations())
    if (!rhs.has(i, j)) return false;
  return true;
}

TransferSystem concat(const TransferSystem& lhs, const TransferSystem& rhs) {
  std::vector<Relation> out = lhs.relations();
  int shift = lhs.size();
  for (const auto& [i, j] : rhs.relations()) out.emplace_back(i + shift, j + shift);
  return make_transfer_system(lhs.size() + rhs.size(), out);
}

TransferSystem restrict(const TransferSystem& sys, int k) {
  if (k < 0 || k > sys.size())
    throw BoundsError("restriction point " + std::to_string(k) + " outside [0, " +
                      std::to_string(sys.size()) + "]");
  std::vector<Relation> out;
  for (const auto& [i, j] : sys.relations())
    if (j <= k) out.emplace_back(i, j);
  return make_transfer_system(k, out);
}

TransferSystem fixed_points(const TransferSystem& sys, int k) {
  if (k < 0 || k > sys.size())
    throw BoundsError("fixed point level " + std::to_string(k) + " outside [0, " +
                      std::to_string(sys.size()) + "]");
  std::vector<Relation> out;
  for (const auto& [i, j] : sys.relations())
    if (i > k) out.emplace_back(i - k, j - k);
  return make_transfer_system(sys.size() - k, out);
}

TransferSystem wrap(const TransferSystem& sys) {
  std::vector<Relation> out;
  int n = sys.size();
  for (int j = 2; j <= n + 1; ++j) out.emplace_back(1, j);
  for (const auto& [i, j] : sys.relations()) out.emplace_back(i + 1, j + 1);
  return make_transfer_system(n + 1, out);
}

TransferSystem complete(int n) {
  if (n < 0) throw BoundsError("poset size must be non-negative, got " + std::to_string(n));
  std::vector<Relation> out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return make_transfer_system(n, out);
}

Classification classify(const TransferSystem& sys) {
  int n = sys.size();
  if (n == 0) throw EmptyPoset("classify is undefined on the unit");
  Classification c;
  c.wrapped = (n == 1) || sys.has(1, n);
  c.complete = sys.relation_count() == n * (n - 1) / 2;
  c.saturated = true;
  for (const auto& [i, j] : sys.relations())
    if (!sys.has(j - 1, j)) {
      c.saturated = false;
      break;
    }
  return c;
}

std::vector<int> core_blocks(const TransferSystem& sys) {
  int n = sys.size();
  if (n == 0) throw EmptyPoset("the unit has no core blocks");
  std::vector<int> blocks;
  int current = 1;
  for (int k = 1; k < n; ++k) {
    if (sys.has(k, k + 1)) {
      ++current;
    } else {
      blocks.push_back(current);
      current = 1;
    }
  }
  blocks.push_back(current);
  return blocks;
}

namespace {

TransferSystem blocks_to_saturated(const std::vector<int>& blocks) {
  std::vector<Relation> out;
  int offset = 0;
  int total = 0;
  for (int b : blocks) total += b;
  for (int b : blocks) {
    for (int i = 1; i < b; ++i)
      for (int j = i + 1; j <= b; ++j) out.emplace_back(offset + i, offset + j);
    offset += b;
  }
  return make_transfer_system(total, out);
}

// k is a cut point when no arrow spans it; cut points delimit the
// indecomposable summands.
std::vector<bool> spanned(const TransferSystem& sys) {
  int n = sys.size();
  std::vector<bool> covered(n, false);  // covered[k] for 1 <= k <= n-1
  for (const auto& [i, j] : sys.relations())
    for (int k = i; k < j; ++k) covered[k] = true;
  return covered;
}

}  // namespace

TransferSystem core(const TransferSystem& sys) {
  if (sys.size() == 0) return TransferSystem{};
  return blocks_to_saturated(core_blocks(sys));
}

TransferSystem hull(const TransferSystem& sys) {
  int n = sys.size();
  if (n == 0) return TransferSystem{};
  std::vector<bool> covered = spanned(sys);
  std::vector<int> blocks;
  int current = 1;
  for (int k = 1; k < n; ++k) {
    if (covered[k]) {
      ++current;
    } else {
      blocks.push_back(current);
      current = 1;
    }
  }
  blocks.push_back(current);
  return blocks_to_saturated(blocks);
}

std::vector<TransferSystem> decompose_wrapped(const TransferSystem& sys) {
  int n = sys.size();
  if (n == 0) throw EmptyPoset("the unit has no wrapped decomposition");
  std::vector<bool> covered = spanned(sys);
  std::vector<TransferSystem> out;
  int start = 1;
  for (int k = 1; k <= n; ++k) {
    if (k < n && covered[k]) continue;
    // piece [start..k]; shift to [1..k-start+1], then strip the wrapped minimum
    std::vector<Relation> piece;
    for (const auto& [i, j] : sys.relations())
      if (start <= i && j <= k) piece.emplace_back(i - start + 1, j - start + 1);
    TransferSystem p = make_transfer_system(k - start + 1, piece);
    out.push_back(fixed_points(p, 1));
    start = k + 1;
  }
  return out;
}

}  // namespace tsys
