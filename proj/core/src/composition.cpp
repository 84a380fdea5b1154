#include "tsys/composition.hpp"

#include <string>

namespace tsys {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidParams("a composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw InvalidParams("composition part must be positive, got " + std::to_string(p));
    total_ += p;
  }
}

int Composition::partial_sum(int s) const {
  int sum = 0;
  for (int t = 0; t < s; ++t) sum += parts_[t];
  return sum;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw BoundsError("compositions are defined for n >= 1, got " + std::to_string(n));
  std::vector<Composition> out;
  std::vector<int> parts;
  auto emit = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Composition(parts));
      return;
    }
    for (int first = remaining; first >= 1; --first) {
      parts.push_back(first);
      self(self, remaining - first);
      parts.pop_back();
    }
  };
  emit(emit, n);
  return out;
}

TransferSystem saturated_from_composition(const Composition& blocks) {
  std::vector<Relation> out;
  int offset = 0;
  for (int b : blocks.parts()) {
    for (int i = 1; i < b; ++i)
      for (int j = i + 1; j <= b; ++j) out.emplace_back(offset + i, offset + j);
    offset += b;
  }
  return make_transfer_system(blocks.total(), out);
}

}  // namespace tsys
