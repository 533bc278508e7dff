#include "eoc/parallel.hpp"

#include <set>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eoc/error.hpp"

namespace eoc::parallel {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::uint64_t count_cycles(const Multiset& m, Family family, std::size_t split_depth) {
  if (m.empty()) return 0;
  const auto prefixes = cycle_prefixes(m, family, split_depth);
  const auto jobs = static_cast<std::int64_t>(prefixes.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t i = 0; i < jobs; ++i) {
    const auto& prefix = prefixes[static_cast<std::size_t>(i)];
    std::uint64_t local = 0;
    if (prefix.size() == m.size())
      local = 1;  // already a complete canonical cycle
    else
      visit_cycles(m, family, prefix, [&](std::span<const Value>) { ++local; });
    total += local;
  }
  return total;
}

std::uint64_t count_permutations(Family family, int n, std::size_t split_depth) {
  const auto prefixes = permutation_prefixes(family, n, split_depth);
  const auto jobs = static_cast<std::int64_t>(prefixes.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t i = 0; i < jobs; ++i) {
    const auto& prefix = prefixes[static_cast<std::size_t>(i)];
    std::uint64_t local = 0;
    if (static_cast<int>(prefix.size()) == n)
      local = 1;
    else
      visit_permutations(family, n, prefix, [&](std::span<const Value>) { ++local; });
    total += local;
  }
  return total;
}

std::uint64_t count(const FamilyId& f) {
  if (is_cycle_family(f.family)) return count_cycles(f.multiset, f.family);
  if (f.family == Family::Dumont || f.family == Family::Soe) return count_permutations(f.family, f.n);
  return eoc::count(f);
}

BigInt genocchi_dumont(int n) {
  if (n < 1) throw ParseError("genocchi_dumont needs n >= 1");
  // Term index bits pick the +1 steps of u_2..u_n.
  const auto terms = static_cast<std::int64_t>(std::uint64_t{1} << (n - 1));
  BigInt total = 0;
#pragma omp parallel
  {
    BigInt local = 0;
    std::vector<int> u(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < terms; ++mask) {
      u[0] = 1;
      BigInt prod = 1;
      for (int i = 1; i < n; ++i) {
        u[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i - 1)] + static_cast<int>((mask >> (i - 1)) & 1);
        prod *= u[static_cast<std::size_t>(i)];
      }
      if ((n - u.back()) % 2 == 0)
        local += prod * prod;
      else
        local -= prod * prod;
    }
#pragma omp critical
    total += local;
  }
  return total;
}

BigInt f_eq_ie(const DescentSpec& spec) {
  const auto& s = spec.tops();
  const int k = spec.k();
  const auto subsets = static_cast<std::int64_t>(std::uint64_t{1} << k);
  BigInt total = 0;
#pragma omp parallel
  {
    BigInt local = 0;
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < subsets; ++mask) {
      std::set<Value> t;
      for (int b = 0; b < k; ++b)
        if (mask & (std::int64_t{1} << b)) t.insert(s[static_cast<std::size_t>(b)]);
      if ((k - static_cast<int>(t.size())) % 2 == 1)
        local -= f_leq(spec, t);
      else
        local += f_leq(spec, t);
    }
#pragma omp critical
    total += local;
  }
  return total;
}

BigInt gen_genocchi_k(int n, int k, bool unguarded) {
  const auto id = FamilyId::cycles(Family::EC, Multiset::uniform(2 * n, k));
  if (!unguarded) check_pruned_guard(id);
  return BigInt(count_cycles(id.multiset, Family::EC));
}

}  // namespace eoc::parallel
