#pragma once

// Deterministic generators for every object family, plus unpruned brute-force
// counters that serve as their oracles.
//
// Order contract (golden files depend on it):
//   cycles        lexicographic in canonical (least-rotation) form
//   permutations  lexicographic
//   histories     by word with U < D < L0 < L1, then by weight vector

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "eoc/bigint.hpp"
#include "eoc/cycle.hpp"
#include "eoc/laguerre.hpp"
#include "eoc/multiset.hpp"
#include "eoc/permutation.hpp"

namespace eoc {

enum class Family { EC, DC, Dumont, Soe, LagM, LagMstar, LagAll };

/// A family plus its parameter: a multiset for EC/DC, a length n otherwise.
struct FamilyId {
  Family family = Family::EC;
  Multiset multiset;
  int n = 0;

  static FamilyId cycles(Family f, Multiset m) { return {f, std::move(m), 0}; }
  static FamilyId sized(Family f, int n) { return {f, {}, n}; }
};

bool is_cycle_family(Family f);
std::string family_name(Family f);
/// Accepts ec, dc, dumont, soe, lag-m, lag-mstar, lag-all.
Family parse_family(std::string_view name);

// Size limits for exhaustive work. Callers may bypass them explicitly.
inline constexpr std::size_t kMaxBruteMultisetSize = 10;
inline constexpr int kMaxBruteN = 10;
inline constexpr std::size_t kMaxPrunedCycleSize = 18;
inline constexpr int kMaxPrunedPermutationN = 13;
inline constexpr int kMaxPrunedLaguerreN = 12;
inline constexpr int kMaxPrunedLaguerreAllN = 10;

/// Throws GuardError when the pruned generator for `f` would exceed its limit.
void check_pruned_guard(const FamilyId& f);

using CycleVisitor = std::function<void(std::span<const Value>)>;
using PermutationVisitor = std::function<void(std::span<const Value>)>;
using HistoryVisitor = std::function<void(const LaguerreHistory&)>;

/// Depth-first generation of canonical cycles on `m` whose cyclic adjacencies
/// all satisfy the family rule, extending a fixed `prefix` (which must itself
/// respect the rule and start with min(m)). An empty prefix means "all".
void visit_cycles(const Multiset& m, Family family, std::span<const Value> prefix, const CycleVisitor& visit);
/// Valid prefixes of length `depth` (or complete cycles if shorter), in order.
/// Used to split the search tree for parallel counting.
std::vector<std::vector<Value>> cycle_prefixes(const Multiset& m, Family family, std::size_t depth);

void visit_permutations(Family family, int n, std::span<const Value> prefix, const PermutationVisitor& visit);
std::vector<std::vector<Value>> permutation_prefixes(Family family, int n, std::size_t depth);

void visit_histories(Family family, int n, const HistoryVisitor& visit);

std::vector<Cycle> gen_ec(const Multiset& m);
std::vector<Cycle> gen_dc(const Multiset& m);
std::vector<Permutation> gen_dumont(int n);
std::vector<Permutation> gen_soe(int n);
std::vector<LaguerreHistory> gen_laguerre(int n, Family family);

/// Pruned-generator count (serial reference).
std::uint64_t count(const FamilyId& f);

/// Exhaustive count without pruning: every arrangement or word is generated and
/// filtered by the membership predicate. Throws GuardError past the brute-force
/// limits unless `unguarded`.
BigInt brute_count(const FamilyId& f, bool unguarded = false);

}  // namespace eoc
