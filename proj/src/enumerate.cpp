#include "eoc/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "eoc/error.hpp"
#include "eoc/predicates.hpp"

namespace eoc {

namespace {

bool cycle_pair_ok(Family f, Value a, Value b) { return f == Family::EC ? even_odd_drop_ok(a, b) : d_cycle_ok(a, b); }

bool permutation_pair_ok(Family f, Value a, Value b) {
  if (f == Family::Dumont) return (a > b) == (a % 2 == 0);
  return a < b || (a % 2 == 1 && b % 2 == 0);
}

void require_cycle_family(Family f) {
  if (!is_cycle_family(f)) throw ParseError("family " + family_name(f) + " is not a cycle family");
}

void require_odd_permutation_family(Family f, int n) {
  if (f != Family::Dumont && f != Family::Soe) throw ParseError("family " + family_name(f) + " is not a permutation family");
  if (n < 1 || n % 2 == 0) throw DomainError(family_name(f) + " needs an odd length n >= 1, got " + std::to_string(n));
}

void require_history_family(Family f, int n) {
  if (f != Family::LagAll && f != Family::LagM && f != Family::LagMstar)
    throw ParseError("family " + family_name(f) + " is not a Laguerre family");
  if (n < 0) throw ParseError("history length must be nonnegative");
  if (f != Family::LagAll && n % 2 != 0) throw DomainError(family_name(f) + " needs an even length, got " + std::to_string(n));
}

// Depth-first search over arrangements of a multiset anchored at its minimum.
// Canonicity is tracked with the Fredricksen-Kessler-Maiorana prenecklace test:
// `period` is the length of the longest Lyndon prefix, and the word is the
// least rotation of itself exactly when it is a prenecklace whose length is a
// multiple of that period.
class CycleSearch {
 public:
  CycleSearch(const Multiset& m, Family family, const CycleVisitor* visit, std::size_t stop_depth)
      : family_(family), size_(m.size()), visit_(visit), stop_depth_(stop_depth) {
    for (const auto& [v, k] : m.counts()) {
      values_.push_back(v);
      remaining_.push_back(k);
    }
  }

  // Returns false if the prefix is not a viable start of a canonical cycle.
  bool seed(std::span<const Value> prefix) {
    if (values_.empty()) return false;
    std::vector<Value> start(prefix.begin(), prefix.end());
    if (start.empty()) start.push_back(values_.front());
    if (start.front() != values_.front() || start.size() > size_) return false;
    for (Value v : start) {
      if (!take(v)) return false;
      if (!seq_.empty()) {
        if (!cycle_pair_ok(family_, seq_.back(), v)) return false;
        const std::size_t t = seq_.size();
        const Value ref = seq_[t - period_];
        if (v < ref) return false;
        if (v > ref) period_ = t + 1;
      } else {
        period_ = 1;
      }
      seq_.push_back(v);
    }
    return true;
  }

  void run() {
    if (seq_.size() == size_) {
      if (cycle_pair_ok(family_, seq_.back(), seq_.front()) && size_ % period_ == 0) emit();
      return;
    }
    if (seq_.size() == stop_depth_) {
      emit();
      return;
    }
    const Value last = seq_.back();
    const std::size_t t = seq_.size();
    const Value ref = seq_[t - period_];
    const std::size_t saved = period_;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const Value v = values_[i];
      if (remaining_[i] == 0 || v < ref || !cycle_pair_ok(family_, last, v)) continue;
      period_ = v > ref ? t + 1 : saved;
      --remaining_[i];
      seq_.push_back(v);
      run();
      seq_.pop_back();
      ++remaining_[i];
    }
    period_ = saved;
  }

  std::vector<std::vector<Value>> prefixes;

 private:
  bool take(Value v) {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v) return false;
    auto& r = remaining_[static_cast<std::size_t>(it - values_.begin())];
    if (r == 0) return false;
    --r;
    return true;
  }

  void emit() {
    if (visit_)
      (*visit_)(seq_);
    else
      prefixes.push_back(seq_);
  }

  Family family_;
  std::size_t size_;
  const CycleVisitor* visit_;
  std::size_t stop_depth_;
  std::vector<Value> values_;
  std::vector<int> remaining_;
  std::vector<Value> seq_;
  std::size_t period_ = 1;
};

class PermutationSearch {
 public:
  PermutationSearch(Family family, int n, const PermutationVisitor* visit, std::size_t stop_depth)
      : family_(family), n_(n), used_(static_cast<std::size_t>(n) + 1, false), visit_(visit), stop_depth_(stop_depth) {}

  bool seed(std::span<const Value> prefix) {
    for (Value v : prefix) {
      if (v < 1 || v > n_ || used_[static_cast<std::size_t>(v)]) return false;
      if (!word_.empty() && !permutation_pair_ok(family_, word_.back(), v)) return false;
      used_[static_cast<std::size_t>(v)] = true;
      word_.push_back(v);
    }
    return static_cast<int>(word_.size()) <= n_;
  }

  void run() {
    if (static_cast<int>(word_.size()) == n_) {
      if (family_ == Family::Soe && n_ > 0 && word_.back() % 2 == 0) return;
      emit();
      return;
    }
    if (word_.size() == stop_depth_) {
      emit();
      return;
    }
    for (Value v = 1; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      if (!word_.empty() && !permutation_pair_ok(family_, word_.back(), v)) continue;
      used_[static_cast<std::size_t>(v)] = true;
      word_.push_back(v);
      run();
      word_.pop_back();
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  std::vector<std::vector<Value>> prefixes;

 private:
  void emit() {
    if (visit_)
      (*visit_)(word_);
    else
      prefixes.push_back(word_);
  }

  Family family_;
  int n_;
  std::vector<bool> used_;
  std::vector<Value> word_;
  const PermutationVisitor* visit_;
  std::size_t stop_depth_;
};

bool step_allowed(Family f, std::size_t index, Step s) {
  const bool odd_step = index % 2 == 0;  // 0-based index, 1-based parity
  switch (f) {
    case Family::LagM:
      return odd_step ? (s == Step::D || s == Step::L0) : (s == Step::U || s == Step::L0);
    case Family::LagMstar:
      return odd_step ? (s == Step::U || s == Step::L0) : (s == Step::D || s == Step::L1);
    default:
      return true;
  }
}

int weight_floor(Family f, std::size_t index) { return (f == Family::LagMstar && index % 2 == 1) ? 1 : 0; }

void visit_weights(Family f, const std::vector<Step>& steps, const HistoryVisitor& visit) {
  const auto h = step_heights(steps);
  const std::size_t n = steps.size();
  std::vector<int> mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    mu[i] = weight_floor(f, i);
    if (mu[i] > h[i]) return;
  }
  while (true) {
    visit(LaguerreHistory(steps, mu));
    // Odometer increment, last position fastest, for lexicographic order.
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (mu[i] < h[i]) {
        ++mu[i];
        for (std::size_t j = i + 1; j < n; ++j) mu[j] = weight_floor(f, j);
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

void visit_words(Family f, int n, std::vector<Step>& steps, int height, const HistoryVisitor& visit) {
  const auto len = static_cast<int>(steps.size());
  if (len == n) {
    if (height == 0) visit_weights(f, steps, visit);
    return;
  }
  for (Step s : {Step::U, Step::D, Step::L0, Step::L1}) {
    if (!step_allowed(f, steps.size(), s)) continue;
    const int next = height + (s == Step::U) - (s == Step::D);
    if (next < 0 || next > n - len - 1) continue;
    steps.push_back(s);
    visit_words(f, n, steps, next, visit);
    steps.pop_back();
  }
}

}  // namespace

bool is_cycle_family(Family f) { return f == Family::EC || f == Family::DC; }

std::string family_name(Family f) {
  switch (f) {
    case Family::EC: return "ec";
    case Family::DC: return "dc";
    case Family::Dumont: return "dumont";
    case Family::Soe: return "soe";
    case Family::LagM: return "lag-m";
    case Family::LagMstar: return "lag-mstar";
    case Family::LagAll: return "lag-all";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::EC, Family::DC, Family::Dumont, Family::Soe, Family::LagM, Family::LagMstar, Family::LagAll})
    if (family_name(f) == name) return f;
  throw ParseError("unknown family '" + std::string(name) + "'");
}

void check_pruned_guard(const FamilyId& f) {
  if (is_cycle_family(f.family)) {
    if (f.multiset.size() > kMaxPrunedCycleSize)
      throw GuardError("multiset size " + std::to_string(f.multiset.size()) + " exceeds the enumeration limit " +
                       std::to_string(kMaxPrunedCycleSize) + "; try a smaller instance or --unsafe-no-guard");
  } else if (f.family == Family::Dumont || f.family == Family::Soe) {
    if (f.n > kMaxPrunedPermutationN)
      throw GuardError("n = " + std::to_string(f.n) + " exceeds the enumeration limit " +
                       std::to_string(kMaxPrunedPermutationN) + "; try a smaller instance or --unsafe-no-guard");
  } else {
    const int limit = f.family == Family::LagAll ? kMaxPrunedLaguerreAllN : kMaxPrunedLaguerreN;
    if (f.n > limit)
      throw GuardError("n = " + std::to_string(f.n) + " exceeds the enumeration limit " + std::to_string(limit) +
                       "; try a smaller instance or --unsafe-no-guard");
  }
}

void visit_cycles(const Multiset& m, Family family, std::span<const Value> prefix, const CycleVisitor& visit) {
  require_cycle_family(family);
  CycleSearch search(m, family, &visit, static_cast<std::size_t>(-1));
  if (search.seed(prefix)) search.run();
}

std::vector<std::vector<Value>> cycle_prefixes(const Multiset& m, Family family, std::size_t depth) {
  require_cycle_family(family);
  CycleSearch search(m, family, nullptr, std::max<std::size_t>(depth, 1));
  if (search.seed({})) search.run();
  return std::move(search.prefixes);
}

void visit_permutations(Family family, int n, std::span<const Value> prefix, const PermutationVisitor& visit) {
  require_odd_permutation_family(family, n);
  PermutationSearch search(family, n, &visit, static_cast<std::size_t>(-1));
  if (search.seed(prefix)) search.run();
}

std::vector<std::vector<Value>> permutation_prefixes(Family family, int n, std::size_t depth) {
  require_odd_permutation_family(family, n);
  PermutationSearch search(family, n, nullptr, std::max<std::size_t>(depth, 1));
  if (search.seed({})) search.run();
  return std::move(search.prefixes);
}

void visit_histories(Family family, int n, const HistoryVisitor& visit) {
  require_history_family(family, n);
  std::vector<Step> steps;
  visit_words(family, n, steps, 0, visit);
}

std::vector<Cycle> gen_ec(const Multiset& m) {
  std::vector<Cycle> out;
  visit_cycles(m, Family::EC, {}, [&](std::span<const Value> s) { out.push_back(Cycle::canonical({s.begin(), s.end()})); });
  return out;
}

std::vector<Cycle> gen_dc(const Multiset& m) {
  std::vector<Cycle> out;
  visit_cycles(m, Family::DC, {}, [&](std::span<const Value> s) { out.push_back(Cycle::canonical({s.begin(), s.end()})); });
  return out;
}

std::vector<Permutation> gen_dumont(int n) {
  std::vector<Permutation> out;
  visit_permutations(Family::Dumont, n, {}, [&](std::span<const Value> w) { out.emplace_back(std::vector<Value>(w.begin(), w.end())); });
  return out;
}

std::vector<Permutation> gen_soe(int n) {
  std::vector<Permutation> out;
  visit_permutations(Family::Soe, n, {}, [&](std::span<const Value> w) { out.emplace_back(std::vector<Value>(w.begin(), w.end())); });
  return out;
}

std::vector<LaguerreHistory> gen_laguerre(int n, Family family) {
  std::vector<LaguerreHistory> out;
  visit_histories(family, n, [&](const LaguerreHistory& h) { out.push_back(h); });
  return out;
}

std::uint64_t count(const FamilyId& f) {
  std::uint64_t total = 0;
  if (is_cycle_family(f.family)) {
    if (f.multiset.empty()) return 0;
    visit_cycles(f.multiset, f.family, {}, [&](std::span<const Value>) { ++total; });
  } else if (f.family == Family::Dumont || f.family == Family::Soe) {
    visit_permutations(f.family, f.n, {}, [&](std::span<const Value>) { ++total; });
  } else {
    visit_histories(f.family, f.n, [&](const LaguerreHistory&) { ++total; });
  }
  return total;
}

BigInt brute_count(const FamilyId& f, bool unguarded) {
  BigInt total = 0;
  if (is_cycle_family(f.family)) {
    if (!unguarded && f.multiset.size() > kMaxBruteMultisetSize)
      throw GuardError("brute force limited to multisets of size " + std::to_string(kMaxBruteMultisetSize));
    auto arr = f.multiset.elements();
    if (arr.empty()) return 0;
    const bool ec = f.family == Family::EC;
    // Each rotation class contains exactly one least rotation.
    do {
      if (is_least_rotation(arr) && (ec ? is_even_odd_drop(arr) : is_d_cycle(arr))) ++total;
    } while (std::next_permutation(arr.begin(), arr.end()));
    return total;
  }

  if (!unguarded && f.n > kMaxBruteN) throw GuardError("brute force limited to n <= " + std::to_string(kMaxBruteN));

  if (f.family == Family::Dumont || f.family == Family::Soe) {
    require_odd_permutation_family(f.family, f.n);
    std::vector<Value> w(static_cast<std::size_t>(f.n));
    std::iota(w.begin(), w.end(), 1);
    do {
      const Permutation p(w);
      if (f.family == Family::Dumont ? is_dumont(p) : is_soe(p)) ++total;
    } while (std::next_permutation(w.begin(), w.end()));
    return total;
  }

  require_history_family(f.family, f.n);
  // All 4^n words, filtered; then every weight vector inside the height box.
  const auto n = static_cast<std::size_t>(f.n);
  std::vector<Step> steps(n, Step::U);
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) steps[i] = static_cast<Step>(digits[i]);
    const auto h = step_heights(steps);
    const bool path = std::all_of(h.begin(), h.end(), [](int x) { return x >= 0; }) && h.back() == 0;
    if (path) {
      std::vector<int> mu(n, 0);
      while (true) {
        const LaguerreHistory hist(steps, mu);
        const bool member = f.family == Family::LagAll || (f.family == Family::LagM ? in_M(hist) : in_Mstar(hist));
        if (member) ++total;
        std::size_t i = 0;
        while (i < n && mu[i] == h[i]) mu[i++] = 0;
        if (i == n) break;
        ++mu[i];
      }
    }
    std::size_t i = 0;
    while (i < n && digits[i] == 3) digits[i++] = 0;
    if (i == n) break;
    ++digits[i];
  }
  return total;
}

}  // namespace eoc
