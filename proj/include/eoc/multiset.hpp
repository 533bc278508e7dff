#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace eoc {

using Value = int;

/// Finite multiset of positive integers, stored as value -> multiplicity.
class Multiset {
 public:
  Multiset() = default;
  /// Throws ParseError on a value < 1 or a multiplicity < 1.
  explicit Multiset(std::map<Value, int> counts);

  static Multiset of(std::span<const Value> values);
  /// {1^k, 2^k, ..., n^k}
  static Multiset uniform(int n, int k);

  const std::map<Value, int>& counts() const { return counts_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int multiplicity(Value v) const;
  Value min() const;
  Value max() const;
  /// Is this exactly the set {1, ..., n}?
  bool is_interval_set(int n) const;
  /// Sorted expansion, e.g. {1^2,3} -> 1,1,3.
  std::vector<Value> elements() const;

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::map<Value, int> counts_;
  std::size_t size_ = 0;
};

}  // namespace eoc
