#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace eoc {

// Declaration order is the generator order: U < D < L0 < L1.
enum class Step : std::uint8_t { U, D, L0, L1 };

/// Start height of every step: h[i] = #U - #D among steps before i. The result
/// has one extra trailing entry holding the final height.
std::vector<int> step_heights(std::span<const Step> steps);

/// 2-Motzkin path: never below the axis and ending on it.
class TwoMotzkinWord {
 public:
  TwoMotzkinWord() = default;
  /// Throws DomainError if the path dips below zero or does not return to 0.
  explicit TwoMotzkinWord(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }
  /// 0-based: height at the start of step i.
  int height(int i) const { return heights_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const TwoMotzkinWord& a, const TwoMotzkinWord& b) { return a.steps_ == b.steps_; }
  friend auto operator<=>(const TwoMotzkinWord& a, const TwoMotzkinWord& b) { return a.steps_ <=> b.steps_; }

 private:
  std::vector<Step> steps_;
  std::vector<int> heights_{0};
};

/// A 2-Motzkin word with weights 0 <= mu_i <= h_i.
class LaguerreHistory {
 public:
  LaguerreHistory() = default;
  /// Throws DomainError on a length mismatch or an out-of-range weight.
  LaguerreHistory(TwoMotzkinWord word, std::vector<int> weights);
  LaguerreHistory(std::vector<Step> steps, std::vector<int> weights)
      : LaguerreHistory(TwoMotzkinWord(std::move(steps)), std::move(weights)) {}

  const TwoMotzkinWord& word() const { return word_; }
  const std::vector<Step>& steps() const { return word_.steps(); }
  const std::vector<int>& weights() const { return weights_; }
  int size() const { return word_.size(); }

  friend bool operator==(const LaguerreHistory&, const LaguerreHistory&) = default;
  friend auto operator<=>(const LaguerreHistory&, const LaguerreHistory&) = default;

 private:
  TwoMotzkinWord word_;
  std::vector<int> weights_;
};

}  // namespace eoc
