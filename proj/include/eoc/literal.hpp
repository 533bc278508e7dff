#pragma once

// Text grammars for every object family.
//
//   multiset     1^2,2^2,3,4           tokens v or v^m, v >= 1, m >= 1
//   cycle        (1,2^2,4^3,6)         exponents expand in place
//   permutation  3,4,2,1,5 or 34215    digit-string form only when n <= 9
//   laguerre     (UUL0UDDL1D; 0,1,0,0,3,1,1,1)
//                also accepted: (L0UDL0,(0,0,1,0))
//
// Formatting always produces the first form listed above; cycles are printed in
// canonical rotation.

#include <set>
#include <string>
#include <string_view>

#include "eoc/cycle.hpp"
#include "eoc/laguerre.hpp"
#include "eoc/multiset.hpp"
#include "eoc/permutation.hpp"

namespace eoc {

Multiset parse_multiset(std::string_view text);
Cycle parse_cycle(std::string_view text);
Permutation parse_permutation(std::string_view text);
LaguerreHistory parse_laguerre(std::string_view text);
std::vector<Step> parse_steps(std::string_view text);

std::string format(const Multiset& m);
std::string format(const Cycle& c);
std::string format(const CompactCycle& c);
std::string format(const Permutation& p);
std::string format(const LaguerreHistory& h);
std::string format_steps(std::span<const Step> steps);
std::string format_set(const std::set<Value>& s);

}  // namespace eoc
