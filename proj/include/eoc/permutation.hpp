#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "eoc/multiset.hpp"

namespace eoc {

/// A permutation of [n] in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ParseError unless `word` is an arrangement of 1..n.
  explicit Permutation(std::vector<Value> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<Value>& word() const { return word_; }
  /// 1-based access; at(0) and at(n+1) are the zero boundary.
  Value at(int i) const { return (i < 1 || i > size()) ? 0 : word_[static_cast<std::size_t>(i - 1)]; }
  /// 1-based position of value v.
  int position_of(Value v) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Value> word_;
};

}  // namespace eoc
