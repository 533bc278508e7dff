#include "eoc/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eoc/error.hpp"
#include "eoc/predicates.hpp"

namespace eoc {

namespace {

// Rotation of a cycle on a set that starts at 1.
std::vector<Value> starting_at_one(const Cycle& c) {
  std::vector<Value> s = c.seq();
  auto it = std::find(s.begin(), s.end(), 1);
  std::rotate(s.begin(), it, s.end());
  return s;
}

void require_interval_ground(const Cycle& c, std::string_view map) {
  const auto m = static_cast<int>(c.size());
  if (m % 2 != 0 || !c.ground().is_interval_set(m))
    throw DomainError(std::string(map) + " needs a cycle on the set [2n], got " + std::to_string(m) + " letters");
}

// ---- bundle moves ---------------------------------------------------------

struct TaggedBundle {
  Bundle bundle;
  std::size_t tag;  // clockwise rank among movable bundles, or npos
};

constexpr std::size_t kNotMovable = static_cast<std::size_t>(-1);

enum class MoveKind { DoubleAscent, DoubleDescent };

std::vector<TaggedBundle> tag_bundles(const Cycle& c, MoveKind kind) {
  const auto runs = cyclic_runs(c.seq());
  const std::size_t k = runs.size();
  std::vector<TaggedBundle> out;
  out.reserve(k);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Value prev = runs[(i + k - 1) % k].value;
    const Value cur = runs[i].value;
    const Value next = runs[(i + 1) % k].value;
    const bool shape = kind == MoveKind::DoubleAscent ? (prev < cur && cur < next) : (prev > cur && cur > next);
    const bool movable = k >= 3 && cur % 2 == 0 && shape;
    out.push_back({runs[i], movable ? rank++ : kNotMovable});
  }
  return out;
}

// Move the bundle carrying `tag`. Ascent moves scan clockwise and land before
// the first smaller bundle; descent moves scan anticlockwise and land after it.
void move_bundle(std::vector<TaggedBundle>& ring, std::size_t tag, MoveKind kind) {
  auto it = std::find_if(ring.begin(), ring.end(), [&](const TaggedBundle& t) { return t.tag == tag; });
  if (it == ring.end()) throw InternalError("movable bundle vanished");
  const TaggedBundle moving = *it;
  const std::size_t pos = static_cast<std::size_t>(it - ring.begin());
  ring.erase(it);
  const std::size_t k = ring.size();
  for (std::size_t step = 0; step < k; ++step) {
    if (kind == MoveKind::DoubleAscent) {
      const std::size_t j = (pos + step) % k;
      if (ring[j].bundle.value < moving.bundle.value) {
        ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(j), moving);
        return;
      }
    } else {
      const std::size_t j = (pos + k - 1 - step) % k;
      if (ring[j].bundle.value < moving.bundle.value) {
        ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(j + 1), moving);
        return;
      }
    }
  }
  throw InternalError("no smaller bundle found while moving " + std::to_string(moving.bundle.value));
}

Cycle apply_moves(const Cycle& c, MoveKind kind, std::span<const std::size_t> order) {
  auto ring = tag_bundles(c, kind);
  const auto movable = static_cast<std::size_t>(
      std::count_if(ring.begin(), ring.end(), [](const TaggedBundle& t) { return t.tag != kNotMovable; }));
  std::vector<std::size_t> check(order.begin(), order.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i) check.clear();
  if (check.size() != movable) throw ParseError("move order must be a permutation of 0.." + std::to_string(movable) + "-1");

  for (std::size_t tag : order) move_bundle(ring, tag, kind);

  std::vector<Value> seq;
  seq.reserve(c.size());
  for (const auto& t : ring) seq.insert(seq.end(), static_cast<std::size_t>(t.bundle.mult), t.bundle.value);
  return Cycle::canonical(std::move(seq));
}

std::vector<Bundle> movable_of(const Cycle& c, MoveKind kind) {
  std::vector<Bundle> out;
  for (const auto& t : tag_bundles(c, kind))
    if (t.tag != kNotMovable) out.push_back(t.bundle);
  return out;
}

std::vector<std::size_t> clockwise_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

Permutation eta(const Cycle& c) {
  require_interval_ground(c, "eta");
  if (!is_even_odd_drop(c)) throw DomainError("eta needs a cycle with only even-odd drops");
  const auto s = starting_at_one(c);
  std::vector<Value> word;
  word.reserve(s.size() - 1);
  for (std::size_t i = 1; i < s.size(); ++i) word.push_back(s[i] - 1);
  return Permutation(std::move(word));
}

Cycle eta_inv(const Permutation& p) {
  if (p.size() % 2 == 0 || !is_soe(p)) throw DomainError("eta_inv needs an odd-length permutation with only odd-even descents ending odd");
  std::vector<Value> seq{1};
  for (Value v : p.word()) seq.push_back(v + 1);
  return Cycle::canonical(std::move(seq));
}

LaguerreHistory phi_fv(const Permutation& p) {
  if (p.size() < 1) throw DomainError("phi_fv needs n >= 1");
  std::vector<Step> steps;
  std::vector<int> weights;
  for (Value i = 1; i < p.size(); ++i) {
    switch (classify_letter(p, i)) {
      case LetterClass::Valley: steps.push_back(Step::U); break;
      case LetterClass::Peak: steps.push_back(Step::D); break;
      case LetterClass::DoubleAscent: steps.push_back(Step::L0); break;
      case LetterClass::DoubleDescent: steps.push_back(Step::L1); break;
    }
    weights.push_back(stat_2_13(p, i));
  }
  return LaguerreHistory(std::move(steps), std::move(weights));
}

std::vector<std::vector<Value>> phi_fv_inv_trace(const LaguerreHistory& h) {
  constexpr Value kSlot = 0;
  std::vector<Value> state{kSlot};
  std::vector<std::vector<Value>> trace{state};
  const auto& steps = h.steps();
  for (int i = 0; i < h.size(); ++i) {
    const Value letter = i + 1;
    const int wanted = h.weights()[static_cast<std::size_t>(i)] + 1;  // counted from the right
    const auto slots = std::count(state.begin(), state.end(), kSlot);
    if (slots != h.word().height(i) + 1) throw InternalError("slot count disagrees with path height");
    int seen = 0;
    auto pos = state.end();
    for (auto it = state.rbegin(); it != state.rend(); ++it) {
      if (*it == kSlot && ++seen == wanted) {
        pos = std::prev(it.base());
        break;
      }
    }
    if (pos == state.end()) throw InternalError("weight exceeds available slots");
    std::vector<Value> repl;
    switch (steps[static_cast<std::size_t>(i)]) {
      case Step::U: repl = {kSlot, letter, kSlot}; break;
      case Step::L0: repl = {letter, kSlot}; break;
      case Step::L1: repl = {kSlot, letter}; break;
      case Step::D: repl = {letter}; break;
    }
    pos = state.erase(pos);
    state.insert(pos, repl.begin(), repl.end());
    trace.push_back(state);
  }
  auto last = std::find(state.begin(), state.end(), kSlot);
  if (last == state.end() || std::count(state.begin(), state.end(), kSlot) != 1)
    throw InternalError("expected exactly one open slot at the end");
  *last = h.size() + 1;
  trace.push_back(state);
  return trace;
}

Permutation phi_fv_inv(const LaguerreHistory& h) { return Permutation(phi_fv_inv_trace(h).back()); }

std::string format_slots(std::span<const Value> state) {
  const bool digits = state.size() <= 9;
  std::string s;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!digits && i) s += ',';
    s += state[i] == 0 ? std::string("∘") : std::to_string(state[i]);
  }
  return s;
}

LaguerreHistory rho(const LaguerreHistory& h) {
  if (!in_M(h)) throw DomainError("rho needs a history in M_2n");
  std::vector<Step> out(h.steps().size());
  std::vector<int> mu = h.weights();
  for (std::size_t i = 0; i < out.size(); i += 2) {
    const Step a = h.steps()[i], b = h.steps()[i + 1];
    if (a == Step::L0 && b == Step::L0) {
      out[i] = Step::U, out[i + 1] = Step::D;
    } else if (a == Step::D && b == Step::U) {
      out[i] = Step::L0, out[i + 1] = Step::L1;
    } else if (a == Step::L0 && b == Step::U) {
      out[i] = Step::U, out[i + 1] = Step::L1;
    } else {  // (D, L0)
      out[i] = Step::L0, out[i + 1] = Step::D;
    }
    ++mu[i + 1];
  }
  return LaguerreHistory(std::move(out), std::move(mu));
}

LaguerreHistory rho_inv(const LaguerreHistory& h) {
  if (!in_Mstar(h)) throw DomainError("rho_inv needs a history in M*_2n");
  std::vector<Step> out(h.steps().size());
  std::vector<int> mu = h.weights();
  for (std::size_t i = 0; i < out.size(); i += 2) {
    const Step a = h.steps()[i], b = h.steps()[i + 1];
    if (a == Step::U && b == Step::D) {
      out[i] = Step::L0, out[i + 1] = Step::L0;
    } else if (a == Step::L0 && b == Step::L1) {
      out[i] = Step::D, out[i + 1] = Step::U;
    } else if (a == Step::U && b == Step::L1) {
      out[i] = Step::L0, out[i + 1] = Step::U;
    } else {  // (L0, D)
      out[i] = Step::D, out[i + 1] = Step::L0;
    }
    --mu[i + 1];
  }
  return LaguerreHistory(std::move(out), std::move(mu));
}

std::vector<Bundle> psi_movable(const Cycle& c) { return movable_of(c, MoveKind::DoubleAscent); }
std::vector<Bundle> psi_inv_movable(const Cycle& c) { return movable_of(c, MoveKind::DoubleDescent); }

Cycle psi_in_order(const Cycle& c, std::span<const std::size_t> order) {
  if (!is_even_odd_drop(c)) throw DomainError("psi needs a cycle with only even-odd drops");
  return apply_moves(c, MoveKind::DoubleAscent, order);
}

Cycle psi_inv_in_order(const Cycle& c, std::span<const std::size_t> order) {
  if (!is_d_cycle(c)) throw DomainError("psi_inv needs a D-cycle");
  return apply_moves(c, MoveKind::DoubleDescent, order);
}

Cycle psi(const Cycle& c) { return psi_in_order(c, clockwise_order(psi_movable(c).size())); }

Cycle psi_inv(const Cycle& c) { return psi_inv_in_order(c, clockwise_order(psi_inv_movable(c).size())); }

Permutation theta(const Cycle& c) {
  require_interval_ground(c, "theta");
  if (!is_d_cycle(c)) throw DomainError("theta needs a D-cycle");
  const auto s = starting_at_one(c);
  const auto top = static_cast<Value>(s.size());
  const auto k = static_cast<std::size_t>(std::find(s.begin(), s.end(), top) - s.begin());
  std::vector<Value> word(s.begin() + static_cast<std::ptrdiff_t>(k) + 1, s.end());
  word.insert(word.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
  return Permutation(std::move(word));
}

Cycle theta_inv(const Permutation& p) {
  if (p.size() % 2 == 0 || !is_dumont(p)) throw DomainError("theta_inv needs a Dumont permutation of odd length");
  std::vector<Value> seq = p.word();
  seq.push_back(p.size() + 1);
  return Cycle::canonical(std::move(seq));
}

Permutation Phi(const Cycle& c) {
  const Permutation soe = eta(c);
  try {
    return phi_fv_inv(rho(phi_fv(soe)));
  } catch (const DomainError& e) {
    throw InternalError(std::string("Phi stage left its codomain: ") + e.what());
  }
}

Cycle Phi_inv(const Permutation& p) {
  if (p.size() % 2 == 0 || !is_dumont(p)) throw DomainError("Phi_inv needs a Dumont permutation of odd length");
  try {
    return eta_inv(phi_fv_inv(rho_inv(phi_fv(p))));
  } catch (const DomainError& e) {
    throw InternalError(std::string("Phi_inv stage left its codomain: ") + e.what());
  }
}

Permutation Psi(const Cycle& c) {
  require_interval_ground(c, "Psi");
  const Cycle d = psi(c);
  try {
    return theta(d);
  } catch (const DomainError& e) {
    throw InternalError(std::string("Psi stage left its codomain: ") + e.what());
  }
}

Cycle Psi_inv(const Permutation& p) {
  const Cycle d = theta_inv(p);
  try {
    return psi_inv(d);
  } catch (const DomainError& e) {
    throw InternalError(std::string("Psi_inv stage left its codomain: ") + e.what());
  }
}

}  // namespace eoc
