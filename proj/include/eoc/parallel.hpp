#pragma once

// OpenMP counting kernels. Each one splits the serial reference's search tree
// (or summation range) into independent pieces and must return exactly the
// serial result; the tests hold them to that.

#include <cstdint>

#include "eoc/bigint.hpp"
#include "eoc/counting.hpp"
#include "eoc/enumerate.hpp"

namespace eoc::parallel {

/// Number of worker threads OpenMP will use (1 without OpenMP).
int max_threads();

/// Cycle families split on the first `split_depth` letters.
std::uint64_t count_cycles(const Multiset& m, Family family, std::size_t split_depth = 4);
/// Dumont / Soe split on the first `split_depth` letters.
std::uint64_t count_permutations(Family family, int n, std::size_t split_depth = 3);
/// Dispatch on family; Laguerre families run the serial generator.
std::uint64_t count(const FamilyId& f);

BigInt genocchi_dumont(int n);
BigInt f_eq_ie(const DescentSpec& spec);
BigInt gen_genocchi_k(int n, int k, bool unguarded = false);

}  // namespace eoc::parallel
