#include "eoc/cycle.hpp"

#include <algorithm>
#include <string>

#include "eoc/error.hpp"

namespace eoc {

bool is_least_rotation(std::span<const Value> s) {
  return s.empty() || least_rotation(s) == 0;
}

Cycle Cycle::canonical(std::vector<Value> seq) {
  if (seq.empty()) throw DomainError("empty cycle");
  for (Value v : seq)
    if (v < 1) throw ParseError("cycle entries must be positive, got " + std::to_string(v));
  const auto start = least_rotation(std::span<const Value>(seq));
  std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(start), seq.end());
  return Cycle(std::move(seq));
}

CompactCycle::CompactCycle(std::vector<Bundle> bundles) : bundles_(std::move(bundles)) {
  if (bundles_.empty()) throw DomainError("empty cycle");
  const std::size_t k = bundles_.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (bundles_[i].value < 1) throw ParseError("bundle value must be positive");
    if (bundles_[i].mult < 1) throw ParseError("bundle multiplicity must be positive");
    if (k >= 2 && bundles_[i].value == bundles_[(i + 1) % k].value)
      throw DomainError("adjacent bundles share value " + std::to_string(bundles_[i].value));
  }
  const auto start = least_rotation(std::span<const Bundle>(bundles_));
  std::rotate(bundles_.begin(), bundles_.begin() + static_cast<std::ptrdiff_t>(start), bundles_.end());
}

Cycle CompactCycle::expand() const {
  std::vector<Value> seq;
  for (const auto& b : bundles_) seq.insert(seq.end(), static_cast<std::size_t>(b.mult), b.value);
  return Cycle::canonical(std::move(seq));
}

std::vector<Bundle> cyclic_runs(std::span<const Value> seq) {
  std::vector<Bundle> runs;
  for (Value v : seq) {
    if (!runs.empty() && runs.back().value == v)
      ++runs.back().mult;
    else
      runs.push_back({v, 1});
  }
  if (runs.size() >= 2 && runs.front().value == runs.back().value) {
    runs.front().mult += runs.back().mult;
    runs.pop_back();
  }
  return runs;
}

CompactCycle compact(const Cycle& c) { return CompactCycle(cyclic_runs(c.seq())); }

}  // namespace eoc
