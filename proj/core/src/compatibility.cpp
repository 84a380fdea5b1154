#include "tsys/compatibility.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tsys/bijection.hpp"
#include "tsys/enumerate.hpp"
#include "tsys/fuss_catalan.hpp"

namespace tsys {

bool is_compatible(const TransferSystem& additive, const TransferSystem& multiplicative,
                   CompatMode mode) {
  if (additive.size() != multiplicative.size())
    throw SizeMismatch("compatibility needs equal sizes, got [" +
                       std::to_string(additive.size()) + "] and [" +
                       std::to_string(multiplicative.size()) + "]");
  switch (mode) {
    case CompatMode::definition:
      for (const auto& [i, j] : multiplicative.relations())
        for (int k = i; k < j; ++k)
          if (!additive.has(k, j)) return false;
      return true;
    case CompatMode::core:
      return leq(multiplicative, core(additive));
    case CompatMode::hull:
      return leq(hull(multiplicative), additive);
  }
  return false;  // unreachable
}

std::vector<TransferSystem> compatible_partners(const TransferSystem& additive) {
  std::vector<int> blocks = core_blocks(additive);  // EmptyPoset on the unit
  std::vector<const std::vector<TransferSystem>*> levels;
  levels.reserve(blocks.size());
  for (int b : blocks) levels.push_back(&enumerate_all(b));

  std::vector<TransferSystem> out;
  std::vector<std::size_t> index(blocks.size(), 0);
  while (true) {
    TransferSystem partner;
    for (std::size_t t = 0; t < levels.size(); ++t)
      partner = concat(partner, (*levels[t])[index[t]]);
    out.push_back(std::move(partner));
    // advance the mixed-radix counter, last block fastest
    std::size_t pos = levels.size();
    while (pos > 0) {
      --pos;
      if (++index[pos] < levels[pos]->size()) break;
      index[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

void for_each_compatible_pair(
    int n, const std::function<void(const TransferSystem&, const TransferSystem&)>& fn) {
  if (n < 1) throw BoundsError("pair enumeration needs n >= 1, got " + std::to_string(n));
  for (const TransferSystem& additive : enumerate_all(n))
    for (const TransferSystem& multiplicative : compatible_partners(additive))
      fn(additive, multiplicative);
}

int filtration_level(const TransferSystem& sys) {
  int n = sys.size();
  if (n == 0) throw EmptyPoset("filtration level is undefined on the unit");
  int level = 0;
  while (level < n - 1 && sys.has(level + 1, n)) ++level;
  // all of 1..n-1 transferring to n forces completeness, the n-fold wrap
  return level == n - 1 ? n : level;
}

BigCount CountTable::d(int n, int i) {
  if (n < 1 || i < 0 || i > n)
    throw BoundsError("d(n, i) needs n >= 1 and 0 <= i <= n, got n = " + std::to_string(n) +
                      ", i = " + std::to_string(i));
  std::lock_guard<std::mutex> lock(mutex_);
  return d_locked(n, i);
}

BigCount CountTable::d_locked(int n, int i) {
  auto it = memo_.find({n, i});
  if (it != memo_.end()) return it->second;
  BigCount value;
  if (i >= n - 1) {
    value = catalan(n);
  } else {
    value = d_locked(n, i + 1);
    for (int j = 1; j <= n - i - 1; ++j) value += d_locked(n - j, i) * d_locked(j, 1);
  }
  return memo_.emplace(std::make_pair(n, i), std::move(value)).first->second;
}

void CountTable::load_csv(std::istream& in) {
  std::map<std::pair<int, int>, BigCount> loaded;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string n_str, i_str, d_str;
    if (!std::getline(row, n_str, ',') || !std::getline(row, i_str, ',') ||
        !std::getline(row, d_str))
      throw Error("count table row " + std::to_string(lineno) + " is not n,i,d");
    int n = 0, i = 0;
    BigCount value;
    try {
      n = std::stoi(n_str);
      i = std::stoi(i_str);
      value = BigCount(d_str);
    } catch (const std::exception&) {
      throw Error("count table row " + std::to_string(lineno) + " is not n,i,d");
    }
    if (n < 1 || i < 0 || i > n || value < 0)
      throw Error("count table row " + std::to_string(lineno) + " out of domain");
    loaded[{n, i}] = value;
  }

  // Rows whose dependencies are all present must satisfy the recurrence.
  for (const auto& [key, value] : loaded) {
    auto [n, i] = key;
    if (i >= n - 1) {
      if (value != catalan(n))
        throw Error("count table entry d(" + std::to_string(n) + "," + std::to_string(i) +
                    ") contradicts the Catalan base case");
      continue;
    }
    bool have_all = loaded.count({n, i + 1}) > 0;
    for (int j = 1; have_all && j <= n - i - 1; ++j)
      have_all = loaded.count({n - j, i}) > 0 && loaded.count({j, 1}) > 0;
    if (!have_all) continue;
    BigCount expect = loaded.at({n, i + 1});
    for (int j = 1; j <= n - i - 1; ++j) expect += loaded.at({n - j, i}) * loaded.at({j, 1});
    if (value != expect)
      throw Error("count table entry d(" + std::to_string(n) + "," + std::to_string(i) +
                  ") contradicts the recurrence");
  }

  std::lock_guard<std::mutex> lock(mutex_);
  for (auto& [key, value] : loaded) {
    auto it = memo_.find(key);
    if (it != memo_.end() && it->second != value)
      throw Error("count table entry d(" + std::to_string(key.first) + "," +
                  std::to_string(key.second) + ") conflicts with the in-memory value");
    memo_[key] = std::move(value);
  }
}

void CountTable::save_csv(std::ostream& out) const {
  std::lock_guard<std::mutex> lock(mutex_);
  for (const auto& [key, value] : memo_)
    out << key.first << ',' << key.second << ',' << value << '\n';
}

BigCount count_d(int n, int i) {
  static CountTable shared;
  return shared.d(n, i);
}

BigCount count_pairs(int n, CountMethod method, int bound) {
  if (n < 1) throw BoundsError("pair counting needs n >= 1, got " + std::to_string(n));
  switch (method) {
    case CountMethod::brute: {
      if (n > bound)
        throw InfeasibleSize("brute-force pair counting bounded at n <= " +
                             std::to_string(bound) + ", got n = " + std::to_string(n));
      BigCount total = 0;
      for_each_compatible_pair(n, [&](const TransferSystem&, const TransferSystem&) { ++total; });
      return total;
    }
    case CountMethod::recurrence:
      return count_d(n, 0);
    case CountMethod::cores: {
      if (n > bound)
        throw InfeasibleSize("core-indexed pair counting bounded at n <= " +
                             std::to_string(bound) + ", got n = " + std::to_string(n));
      return count_by_cores(n).total;
    }
  }
  throw InvalidParams("unknown counting method");
}

}  // namespace tsys
