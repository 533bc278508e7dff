#include "eoc/laguerre.hpp"

#include <string>

#include "eoc/error.hpp"

namespace eoc {

std::vector<int> step_heights(std::span<const Step> steps) {
  std::vector<int> h;
  h.reserve(steps.size() + 1);
  int cur = 0;
  for (Step s : steps) {
    h.push_back(cur);
    if (s == Step::U) ++cur;
    if (s == Step::D) --cur;
  }
  h.push_back(cur);
  return h;
}

TwoMotzkinWord::TwoMotzkinWord(std::vector<Step> steps)
    : steps_(std::move(steps)), heights_(step_heights(steps_)) {
  for (std::size_t i = 1; i < heights_.size(); ++i)
    if (heights_[i] < 0) throw DomainError("Motzkin path goes below the axis after step " + std::to_string(i));
  if (heights_.back() != 0) throw DomainError("Motzkin path ends at height " + std::to_string(heights_.back()));
}

LaguerreHistory::LaguerreHistory(TwoMotzkinWord word, std::vector<int> weights)
    : word_(std::move(word)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != word_.size())
    throw DomainError("Laguerre history has " + std::to_string(word_.size()) + " steps but " +
                      std::to_string(weights_.size()) + " weights");
  for (int i = 0; i < word_.size(); ++i) {
    const int mu = weights_[static_cast<std::size_t>(i)];
    if (mu < 0 || mu > word_.height(i))
      throw DomainError("weight " + std::to_string(mu) + " at step " + std::to_string(i + 1) +
                        " exceeds height " + std::to_string(word_.height(i)));
  }
}

}  // namespace eoc
