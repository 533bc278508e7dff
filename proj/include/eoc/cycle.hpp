#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "eoc/multiset.hpp"

namespace eoc {

/// Start index of the lexicographically least rotation of `s` (two-pointer
/// minimum-rotation scan, linear time). `s` must be nonempty.
template <typename T>
std::size_t least_rotation(std::span<const T> s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const T& a = s[(i + k) % n];
    const T& b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return i < j ? i : j;
}

/// True iff `s` is its own least rotation.
bool is_least_rotation(std::span<const Value> s);

/// A cyclic arrangement of positive integers, held in its least rotation.
class Cycle {
 public:
  /// Throws DomainError("empty cycle") on an empty sequence.
  static Cycle canonical(std::vector<Value> seq);

  const std::vector<Value>& seq() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  /// Cyclic 0-based access.
  Value at(std::size_t i) const { return seq_[i % seq_.size()]; }
  Multiset ground() const { return Multiset::of(seq_); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  explicit Cycle(std::vector<Value> seq) : seq_(std::move(seq)) {}
  std::vector<Value> seq_;
};

inline Cycle canonicalize(std::vector<Value> seq) { return Cycle::canonical(std::move(seq)); }

struct Bundle {
  Value value = 0;
  int mult = 0;

  friend bool operator==(const Bundle&, const Bundle&) = default;
  friend auto operator<=>(const Bundle&, const Bundle&) = default;
};

/// Run-length form of a cycle. Bundles are kept in the least rotation of the
/// bundle sequence, ordered by (value, mult). A single bundle is the
/// all-equal degenerate case.
class CompactCycle {
 public:
  /// Validates mult >= 1 and distinct cyclic neighbours (k >= 2), then rotates
  /// to canonical position.
  explicit CompactCycle(std::vector<Bundle> bundles);

  const std::vector<Bundle>& bundles() const { return bundles_; }
  std::size_t size() const { return bundles_.size(); }
  Cycle expand() const;

  friend bool operator==(const CompactCycle&, const CompactCycle&) = default;

 private:
  std::vector<Bundle> bundles_;
};

CompactCycle compact(const Cycle& c);

/// Maximal runs of a linear sequence, merging the last run into the first when
/// they carry the same value (cyclic reading). Order follows `seq` from the
/// start of its first full run.
std::vector<Bundle> cyclic_runs(std::span<const Value> seq);

}  // namespace eoc
