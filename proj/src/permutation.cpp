#include "eoc/permutation.hpp"

#include <numeric>
#include <string>

#include "eoc/error.hpp"

namespace eoc {

Permutation::Permutation(std::vector<Value> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Value v : word_) {
    if (v < 1 || v > n) throw ParseError("permutation entry " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v)]) throw ParseError("permutation repeats " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Value> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::position_of(Value v) const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] == v) return static_cast<int>(i) + 1;
  throw ParseError("value " + std::to_string(v) + " not in permutation of size " + std::to_string(size()));
}

}  // namespace eoc
