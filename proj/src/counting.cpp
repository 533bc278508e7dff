#include "eoc/counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eoc/enumerate.hpp"
#include "eoc/error.hpp"
#include "eoc/predicates.hpp"

namespace eoc {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt power(const BigInt& base, int exp) { return boost::multiprecision::pow(base, static_cast<unsigned>(exp)); }

}  // namespace

DescentSpec::DescentSpec(int n, const std::set<Value>& tops) : n_(n), tops_(tops.rbegin(), tops.rend()) {
  if (n < 1) throw ParseError("descent spec needs n >= 1");
  for (Value s : tops_)
    if (s < 2 || s > n) throw ParseError("descent top " + std::to_string(s) + " outside [2," + std::to_string(n) + "]");
  for (std::size_t i = 0; i < tops_.size(); ++i)
    gaps_.push_back(i + 1 < tops_.size() ? tops_[i] - tops_[i + 1] : tops_[i] - 1);
}

std::vector<std::set<Value>> descent_sets(int n) {
  const int width = std::max(0, n - 1);
  std::vector<std::set<Value>> out;
  for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
    std::set<Value> s;
    for (int b = 0; b < width; ++b)
      if (mask & (1u << b)) s.insert(b + 2);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

void for_each_u_sequence(int len, int start, const std::function<void(std::span<const int>)>& visit) {
  if (len <= 0) {
    visit({});
    return;
  }
  std::vector<int> u(static_cast<std::size_t>(len));
  const int free_steps = len - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_steps); ++mask) {
    u[0] = start;
    for (int i = 1; i < len; ++i) u[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i - 1)] + static_cast<int>((mask >> (i - 1)) & 1u);
    visit(u);
  }
}

BigInt genocchi_dumont(int n) {
  if (n < 1) throw ParseError("genocchi_dumont needs n >= 1");
  BigInt total = 0;
  for_each_u_sequence(n, 1, [&](std::span<const int> u) {
    BigInt prod = 1;
    for (int x : u) prod *= x;
    const BigInt term = prod * prod;
    if ((n - u.back()) % 2 == 0)
      total += term;
    else
      total -= term;
  });
  return total;
}

GenocchiTable genocchi_egf(int N) {
  if (N < 1) throw ParseError("genocchi_egf needs N >= 1");
  const int deg = 2 * N;  // tan(x/2) is needed through x^{2N-1}
  std::vector<Rational> sine(static_cast<std::size_t>(deg)), cosine(static_cast<std::size_t>(deg));
  for (int j = 0; j < deg; ++j) {
    // sin(x/2) and cos(x/2): [x^j] = (+-1) / (2^j j!) on odd / even j.
    const Rational mag = Rational(1) / (Rational(power(BigInt(2), j)) * Rational(factorial(j)));
    const Rational sign = (j / 2) % 2 == 0 ? 1 : -1;
    (j % 2 == 1 ? sine : cosine)[static_cast<std::size_t>(j)] = sign * mag;
  }
  // Series division tan = sine / cosine.
  std::vector<Rational> tan(static_cast<std::size_t>(deg));
  for (int j = 0; j < deg; ++j) {
    Rational acc = sine[static_cast<std::size_t>(j)];
    for (int i = 1; i <= j; ++i) acc -= cosine[static_cast<std::size_t>(i)] * tan[static_cast<std::size_t>(j - i)];
    tan[static_cast<std::size_t>(j)] = acc / cosine[0];
  }
  GenocchiTable table;
  for (int n = 1; n <= N; ++n) {
    const Rational g = Rational(factorial(2 * n)) * tan[static_cast<std::size_t>(2 * n - 1)];
    if (boost::multiprecision::denominator(g) != 1 || g < 0)
      throw InternalError("x tan(x/2) coefficient for n = " + std::to_string(n) + " is not a nonnegative integer");
    table.values.push_back(boost::multiprecision::numerator(g));
  }
  return table;
}

BigInt f_leq(const DescentSpec& spec, const std::set<Value>& subset) {
  const auto& s = spec.tops();
  for (Value t : subset)
    if (std::find(s.begin(), s.end(), t) == s.end())
      throw DomainError("descent top " + std::to_string(t) + " is not in S");
  BigInt prod = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto u = 1 + std::count_if(subset.begin(), subset.end(), [&](Value t) { return t >= s[i]; });
    prod *= power(BigInt(u), spec.gaps()[i]);
  }
  return prod;
}

BigInt f_eq_ie(const DescentSpec& spec) {
  const auto& s = spec.tops();
  const int k = spec.k();
  BigInt total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::set<Value> t;
    for (int b = 0; b < k; ++b)
      if (mask & (std::uint64_t{1} << b)) t.insert(s[static_cast<std::size_t>(b)]);
    const bool negative = (k - static_cast<int>(t.size())) % 2 == 1;
    if (negative)
      total -= f_leq(spec, t);
    else
      total += f_leq(spec, t);
  }
  return total;
}

BigInt f_eq_cmy(const DescentSpec& spec) {
  const int k = spec.k();
  if (k == 0) return 1;
  BigInt total = 0;
  // u_0 = 1 is fixed; u_1..u_k each add 0 or 1 to their predecessor.
  for_each_u_sequence(k + 1, 1, [&](std::span<const int> u) {
    BigInt prod = 1;
    for (int i = 1; i <= k; ++i) prod *= power(BigInt(u[static_cast<std::size_t>(i)]), spec.gaps()[static_cast<std::size_t>(i - 1)]);
    if ((k + 1 - u.back()) % 2 == 0)
      total += prod;
    else
      total -= prod;
  });
  return total;
}

BigInt brute_f(const DescentSpec& spec, DescentMode mode, bool unguarded) {
  if (!unguarded && spec.n() > kMaxBruteDescentN)
    throw GuardError("descent-top brute force limited to n <= " + std::to_string(kMaxBruteDescentN));
  const auto target = spec.as_set();
  std::vector<Value> w(static_cast<std::size_t>(spec.n()));
  std::iota(w.begin(), w.end(), 1);
  BigInt total = 0;
  do {
    const auto dt = descent_tops(Permutation(w));
    const bool hit = mode == DescentMode::Exact ? dt == target : std::includes(target.begin(), target.end(), dt.begin(), dt.end());
    if (hit) ++total;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

BigInt gen_genocchi_k(int n, int k, bool unguarded) {
  const auto id = FamilyId::cycles(Family::EC, Multiset::uniform(2 * n, k));
  if (!unguarded) check_pruned_guard(id);
  return BigInt(count(id));
}

}  // namespace eoc
