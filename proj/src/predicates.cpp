#include "eoc/predicates.hpp"

#include <string>

#include "eoc/error.hpp"

namespace eoc {

namespace {

void require_letter(const Permutation& p, Value v) {
  if (v < 1 || v > p.size())
    throw ParseError("letter " + std::to_string(v) + " outside [1," + std::to_string(p.size()) + "]");
}

template <typename Rule>
bool all_cyclic_pairs(std::span<const Value> s, Rule ok) {
  const std::size_t m = s.size();
  for (std::size_t i = 0; i < m; ++i)
    if (!ok(s[i], s[(i + 1) % m])) return false;
  return true;
}

void require_even_length(const LaguerreHistory& h) {
  if (h.size() % 2 != 0) throw DomainError("M / M* membership needs even length, got " + std::to_string(h.size()));
}

}  // namespace

LetterClass classify_letter(const Permutation& p, Value v) {
  require_letter(p, v);
  const int i = p.position_of(v);
  const bool rise_in = p.at(i - 1) < v;
  const bool rise_out = v < p.at(i + 1);
  if (!rise_in && rise_out) return LetterClass::Valley;
  if (rise_in && !rise_out) return LetterClass::Peak;
  return rise_in ? LetterClass::DoubleAscent : LetterClass::DoubleDescent;
}

int stat_2_13(const Permutation& p, Value k) {
  require_letter(p, k);
  const int j = p.position_of(k);
  int count = 0;
  for (int i = j + 2; i <= p.size(); ++i)
    if (p.at(i - 1) < k && k < p.at(i)) ++count;
  return count;
}

bool is_even_odd_drop(std::span<const Value> s) { return all_cyclic_pairs(s, even_odd_drop_ok); }

bool is_d_cycle(std::span<const Value> s) { return all_cyclic_pairs(s, d_cycle_ok); }

bool is_dumont(const Permutation& p) {
  for (int i = 1; i < p.size(); ++i)
    if ((p.at(i) > p.at(i + 1)) != (p.at(i) % 2 == 0)) return false;
  return true;
}

bool is_soe(const Permutation& p) {
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1) && !(p.at(i) % 2 == 1 && p.at(i + 1) % 2 == 0)) return false;
  return p.size() == 0 || p.at(p.size()) % 2 == 1;
}

bool in_M(const LaguerreHistory& h) {
  require_even_length(h);
  const auto& w = h.steps();
  for (std::size_t i = 0; i < w.size(); ++i) {
    // i is 0-based, so even i is an odd step of the path.
    const bool ok = (i % 2 == 0) ? (w[i] == Step::D || w[i] == Step::L0) : (w[i] == Step::U || w[i] == Step::L0);
    if (!ok) return false;
  }
  return true;
}

bool in_Mstar(const LaguerreHistory& h) {
  require_even_length(h);
  const auto& w = h.steps();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i % 2 == 0) {
      if (w[i] != Step::U && w[i] != Step::L0) return false;
    } else {
      if (w[i] != Step::D && w[i] != Step::L1) return false;
      if (h.weights()[i] < 1) return false;
    }
  }
  return true;
}

std::set<Value> descent_tops(const Permutation& p) {
  std::set<Value> tops;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) tops.insert(p.at(i));
  return tops;
}

}  // namespace eoc
