#pragma once

#include <set>
#include <span>

#include "eoc/cycle.hpp"
#include "eoc/laguerre.hpp"
#include "eoc/permutation.hpp"

namespace eoc {

enum class LetterClass { Valley, Peak, DoubleAscent, DoubleDescent };

// Adjacency rules shared by the predicates and the pruned generators.
// a -> b is allowed in an even-odd-drop cycle iff it is not a drop, or it is an
// even-to-odd drop.
constexpr bool even_odd_drop_ok(Value a, Value b) { return a <= b || (a % 2 == 0 && b % 2 == 1); }
// D-cycle step: odd letters weakly ascend, even letters weakly descend.
constexpr bool d_cycle_ok(Value a, Value b) { return a % 2 == 1 ? a <= b : a >= b; }

/// Classifies letter v of p under the zero boundary p(0) = p(n+1) = 0.
/// Throws ParseError when v is outside [1, n].
LetterClass classify_letter(const Permutation& p, Value v);

/// (2-13)_k: with j = position of k, the number of i with i-1 > j and
/// p(i-1) < k < p(i). Throws ParseError when k is outside [1, n].
int stat_2_13(const Permutation& p, Value k);

bool is_even_odd_drop(std::span<const Value> cyclic_seq);
bool is_d_cycle(std::span<const Value> cyclic_seq);
inline bool is_even_odd_drop(const Cycle& c) { return is_even_odd_drop(c.seq()); }
inline bool is_d_cycle(const Cycle& c) { return is_d_cycle(c.seq()); }

/// p(i) > p(i+1) iff p(i) is even, for every i in [n-1].
bool is_dumont(const Permutation& p);
/// Only odd-even descents, and the last entry is odd.
bool is_soe(const Permutation& p);

/// Step/weight restrictions of the even-length families M_{2n} and M*_{2n}.
/// Both throw DomainError on odd length.
bool in_M(const LaguerreHistory& h);
bool in_Mstar(const LaguerreHistory& h);

std::set<Value> descent_tops(const Permutation& p);

}  // namespace eoc
