#include "eoc/multiset.hpp"

#include <string>

#include "eoc/error.hpp"

namespace eoc {

Multiset::Multiset(std::map<Value, int> counts) : counts_(std::move(counts)) {
  for (const auto& [v, m] : counts_) {
    if (v < 1) throw ParseError("multiset value must be positive, got " + std::to_string(v));
    if (m < 1) throw ParseError("multiplicity must be positive for value " + std::to_string(v));
    size_ += static_cast<std::size_t>(m);
  }
}

Multiset Multiset::of(std::span<const Value> values) {
  std::map<Value, int> counts;
  for (Value v : values) ++counts[v];
  return Multiset(std::move(counts));
}

Multiset Multiset::uniform(int n, int k) {
  if (n < 1 || k < 1) throw ParseError("uniform multiset needs n >= 1 and k >= 1");
  std::map<Value, int> counts;
  for (Value v = 1; v <= n; ++v) counts[v] = k;
  return Multiset(std::move(counts));
}

int Multiset::multiplicity(Value v) const {
  auto it = counts_.find(v);
  return it == counts_.end() ? 0 : it->second;
}

Value Multiset::min() const {
  if (counts_.empty()) throw DomainError("empty multiset has no minimum");
  return counts_.begin()->first;
}

Value Multiset::max() const {
  if (counts_.empty()) throw DomainError("empty multiset has no maximum");
  return counts_.rbegin()->first;
}

bool Multiset::is_interval_set(int n) const {
  if (size_ != static_cast<std::size_t>(n) || counts_.size() != size_) return false;
  return n == 0 || (min() == 1 && max() == n);
}

std::vector<Value> Multiset::elements() const {
  std::vector<Value> out;
  out.reserve(size_);
  for (const auto& [v, m] : counts_) out.insert(out.end(), static_cast<std::size_t>(m), v);
  return out;
}

}  // namespace eoc
