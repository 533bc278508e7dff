#include <doctest.h>

#include "eoc/counting.hpp"
#include "eoc/error.hpp"
#include "oracles.hpp"

using namespace eoc;

namespace {
std::set<int> to_int_set(const std::set<Value>& s) { return {s.begin(), s.end()}; }
}  // namespace

TEST_CASE("DescentSpec gaps") {
  const DescentSpec spec(5, {2, 4});
  CHECK(spec.tops() == std::vector<Value>{4, 2});
  CHECK(spec.gaps() == std::vector<int>{2, 1});
  const DescentSpec spec7(9, {3, 7, 8});
  int sum = 0;
  for (int d : spec7.gaps()) sum += d;
  CHECK(sum == 8 - 1);
  CHECK_THROWS_AS(DescentSpec(5, {1}), ParseError);
  CHECK_THROWS_AS(DescentSpec(5, {6}), ParseError);
}

TEST_CASE("u-sequences") {
  std::vector<std::vector<int>> seen;
  for_each_u_sequence(3, 1, [&](std::span<const int> u) { seen.emplace_back(u.begin(), u.end()); });
  CHECK(seen == std::vector<std::vector<int>>{{1, 1, 1}, {1, 2, 2}, {1, 1, 2}, {1, 2, 3}});
}

TEST_CASE("Dumont's signed sum") {
  // 1 - 4 - 16 + 36
  CHECK(genocchi_dumont(3) == 17);
  CHECK(genocchi_dumont(1) == 1);
  CHECK(genocchi_dumont(7) == 929569);
  CHECK_THROWS_AS(genocchi_dumont(0), ParseError);
}

TEST_CASE("Genocchi numbers from x tan(x/2)") {
  const auto t = genocchi_egf(8);
  const std::vector<BigInt> want{1, 1, 3, 17, 155, 2073, 38227, 929569};
  CHECK(t.values == want);
  CHECK(t.at(1) == 1);
  const auto t10 = genocchi_egf(10);
  for (int n = 1; n <= 9; ++n) CHECK(t10.at(n + 1) == genocchi_dumont(n));
}

TEST_CASE("Genocchi routes agree into multi-word territory") {
  const auto t = genocchi_egf(20);
  for (int n = 1; n < 20; ++n) CHECK(t.at(n + 1) == genocchi_dumont(n));
  CHECK(t.at(17) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("f_leq") {
  const DescentSpec spec(5, {4, 2});
  CHECK(f_leq(spec, {}) == 1);
  CHECK(f_leq(spec, {4, 2}) == 12);
  CHECK(f_leq(spec, {4}) == 8);
  CHECK(f_leq(spec, {2}) == 2);
  CHECK_THROWS_AS(f_leq(spec, {3}), DomainError);
  CHECK(f_leq(DescentSpec(7, {6, 3}), {}) == 1);
}

TEST_CASE("f_leq matches the descent-top filter for every T in every S, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& s : descent_sets(n)) {
      const DescentSpec spec(n, s);
      for (const auto& t : descent_sets(n)) {
        if (!std::includes(s.begin(), s.end(), t.begin(), t.end())) continue;
        const auto tt = to_int_set(t);
        const auto want = oracle::count_by_descent_tops(n, [&](const std::set<int>& dt) {
          return std::includes(tt.begin(), tt.end(), dt.begin(), dt.end());
        });
        REQUIRE(f_leq(spec, t) == want);
      }
    }
  }
}

TEST_CASE("f_eq examples") {
  CHECK(f_eq_ie(DescentSpec(5, {2, 4})) == 3);
  CHECK(f_eq_cmy(DescentSpec(5, {2, 4})) == 3);
  CHECK(brute_f(DescentSpec(5, {2, 4}), DescentMode::Exact) == 3);
  for (int n = 1; n <= 6; ++n) {
    CHECK(f_eq_ie(DescentSpec(n, {})) == 1);
    CHECK(f_eq_cmy(DescentSpec(n, {})) == 1);
  }
  CHECK(brute_f(DescentSpec(4, {}), DescentMode::Exact) == 1);
  CHECK(f_eq_ie(DescentSpec(7, {2, 4, 6})) == 17);
  CHECK(f_eq_cmy(DescentSpec(7, {2, 4, 6})) == 17);
  CHECK(brute_f(DescentSpec(5, {2, 4}), DescentMode::Subset) == 12);
  CHECK_THROWS_AS(brute_f(DescentSpec(9, {2}), DescentMode::Exact), GuardError);
}

TEST_CASE("f_eq routes agree with each other and with brute force, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    BigInt total = 0;
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& s : descent_sets(n)) {
      const DescentSpec spec(n, s);
      const auto ie = f_eq_ie(spec);
      const auto tt = to_int_set(s);
      const auto want = oracle::count_by_descent_tops(n, [&](const std::set<int>& dt) { return dt == tt; });
      REQUIRE(ie == want);
      REQUIRE(f_eq_cmy(spec) == want);
      REQUIRE(brute_f(spec, DescentMode::Exact) == want);
      total += ie;
    }
    CHECK(total == fact);
  }
}

TEST_CASE("Dumont permutations as a descent-top class") {
  const std::vector<int> g{1, 1, 3, 17, 155, 2073, 38227};
  for (int n = 1; n <= 6; ++n) {
    std::set<Value> evens;
    for (int e = 2; e <= 2 * n; e += 2) evens.insert(e);
    const DescentSpec spec(2 * n + 1, evens);
    CHECK(f_eq_ie(spec) == g[static_cast<std::size_t>(n)]);
    CHECK(f_eq_cmy(spec) == g[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("descent_sets") {
  const auto sets = descent_sets(5);
  CHECK(sets.size() == 16);
  CHECK(sets.front().empty());
  CHECK(sets.back() == std::set<Value>{2, 3, 4, 5});
  CHECK(descent_sets(1).size() == 1);
}

TEST_CASE("uniform-multiset generalization") {
  const std::vector<int> g{1, 1, 3, 17, 155};
  for (int n = 1; n <= 5; ++n) CHECK(gen_genocchi_k(n, 1) == g[static_cast<std::size_t>(n - 1)]);

  // n = 1: M = {1^k, 2^k}; frozen from the all-arrangements oracle.
  const std::vector<int> n1{1, 2, 4, 10, 26};
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> elems(static_cast<std::size_t>(k), 1);
    elems.insert(elems.end(), static_cast<std::size_t>(k), 2);
    const auto brute = oracle::cycles_brute(elems, oracle::eo_pair).size();
    CHECK(brute == static_cast<std::size_t>(n1[static_cast<std::size_t>(k - 1)]));
    CHECK(gen_genocchi_k(1, k) == n1[static_cast<std::size_t>(k - 1)]);
  }
  CHECK(gen_genocchi_k(2, 2) == 14);
  CHECK_THROWS_AS(gen_genocchi_k(5, 2), GuardError);
}

TEST_CASE("Burnside oracle agrees with the all-arrangements oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const auto elems = oracle::random_eo_multiset(rng, 9);
    std::map<int, int> counts;
    for (int v : elems) ++counts[v];
    CHECK(oracle::cycles_burnside(counts, oracle::eo_pair) == oracle::cycles_brute(elems, oracle::eo_pair).size());
    CHECK(oracle::cycles_burnside(counts, oracle::d_pair) == oracle::cycles_brute(elems, oracle::d_pair).size());
  }
}
