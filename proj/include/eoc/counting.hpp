#pragma once

// Genocchi numbers by two independent routes, descent-top counting, and the
// uniform-multiset generalization |EC^{(k)}_{2n}|.

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "eoc/bigint.hpp"
#include "eoc/multiset.hpp"

namespace eoc {

/// A set S of candidate descent tops inside [2, n], sorted decreasing
/// s_1 > ... > s_k, with gaps d_i = s_i - s_{i+1} and d_k = s_k - 1.
class DescentSpec {
 public:
  /// Throws ParseError unless every s satisfies 2 <= s <= n.
  DescentSpec(int n, const std::set<Value>& tops);

  int n() const { return n_; }
  int k() const { return static_cast<int>(tops_.size()); }
  /// s_1 > s_2 > ... > s_k
  const std::vector<Value>& tops() const { return tops_; }
  const std::vector<int>& gaps() const { return gaps_; }
  std::set<Value> as_set() const { return {tops_.begin(), tops_.end()}; }

 private:
  int n_;
  std::vector<Value> tops_;
  std::vector<int> gaps_;
};

/// Every subset of [2, n], ordered by size then lexicographically.
std::vector<std::set<Value>> descent_sets(int n);

/// Calls `visit` with every sequence u_1..u_len where u_1 = `start` and each
/// step adds 0 or 1. Sequences are produced in binary-counter order of their
/// steps.
void for_each_u_sequence(int len, int start, const std::function<void(std::span<const int>)>& visit);

/// g_{n+1} = sum over u (u_1 = 1, steps 0/1, length n) of (-1)^{n-u_n} (u_1...u_n)^2.
BigInt genocchi_dumont(int n);

/// g_1..g_N, 1-based through at(n).
struct GenocchiTable {
  std::vector<BigInt> values;
  const BigInt& at(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

/// Exact rational series of x tan(x/2) = x sin(x/2)/cos(x/2) up to x^{2N};
/// g_n = (2n)! [x^{2n}]. Throws InternalError on a non-integral coefficient.
GenocchiTable genocchi_egf(int N);

/// Permutations of [n] whose descent tops lie in T, for T a subset of S:
/// prod u_i^{d_i(S)} with u_i = 1 + |{t in T : t >= s_i}|.
/// Throws DomainError if T is not a subset of S.
BigInt f_leq(const DescentSpec& spec, const std::set<Value>& subset);

/// Permutations with descent-top set exactly S, by inclusion-exclusion over
/// the subsets of S.
BigInt f_eq_ie(const DescentSpec& spec);

/// Same count by the signed sum over u_0 = 1, u_1..u_k:
/// sum (-1)^{k+1-u_k} prod u_i^{d_i(S)}. For k = 0 the value is 1.
BigInt f_eq_cmy(const DescentSpec& spec);

enum class DescentMode { Exact, Subset };

inline constexpr int kMaxBruteDescentN = 8;

/// Filters all n! permutations on their descent-top set.
BigInt brute_f(const DescentSpec& spec, DescentMode mode, bool unguarded = false);

/// |EC_M| for M = {1^k, ..., (2n)^k}, by pruned enumeration.
BigInt gen_genocchi_k(int n, int k, bool unguarded = false);

}  // namespace eoc
