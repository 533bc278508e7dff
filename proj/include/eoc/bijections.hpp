#pragma once

// Maps between the object families:
//
//   EC_2n --eta--> S^oe_{2n-1} --phi_fv--> M_{2n-2} --rho--> M*_{2n-2} --phi_fv_inv--> D_{2n-1}
//   EC_M  --psi--> DC_M
//   DC_2n --theta--> D_{2n-1}
//
// Phi and Psi are the two composite routes from EC_2n onto the Dumont
// permutations D_{2n-1}. Every map checks its domain and throws DomainError
// on inputs outside it; a failure inside a composite whose input passed the
// domain check is reported as InternalError.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eoc/cycle.hpp"
#include "eoc/laguerre.hpp"
#include "eoc/permutation.hpp"

namespace eoc {

Permutation eta(const Cycle& c);
Cycle eta_inv(const Permutation& p);

LaguerreHistory phi_fv(const Permutation& p);
Permutation phi_fv_inv(const LaguerreHistory& h);

/// Slot-insertion states of phi_fv_inv, from the single initial slot to the
/// finished permutation. A 0 entry is an open slot.
std::vector<std::vector<Value>> phi_fv_inv_trace(const LaguerreHistory& h);
/// Renders a trace state with U+2218 for open slots, e.g. "43∘2156".
std::string format_slots(std::span<const Value> state);

LaguerreHistory rho(const LaguerreHistory& h);
LaguerreHistory rho_inv(const LaguerreHistory& h);

// psi moves every even cyclic double ascent bundle to just before the nearest
// clockwise bundle of smaller value. psi_inv moves every even cyclic double
// descent bundle to just after the nearest anticlockwise bundle of smaller
// value.
Cycle psi(const Cycle& c);
Cycle psi_inv(const Cycle& c);

/// Bundles (in canonical clockwise order) that psi would move.
std::vector<Bundle> psi_movable(const Cycle& c);
/// Bundles (in canonical clockwise order) that psi_inv would move.
std::vector<Bundle> psi_inv_movable(const Cycle& c);
/// psi with an explicit processing order: `order` is a permutation of
/// 0..psi_movable(c).size()-1, naming movable bundles by clockwise rank.
Cycle psi_in_order(const Cycle& c, std::span<const std::size_t> order);
Cycle psi_inv_in_order(const Cycle& c, std::span<const std::size_t> order);

Permutation theta(const Cycle& c);
Cycle theta_inv(const Permutation& p);

Permutation Phi(const Cycle& c);
Cycle Phi_inv(const Permutation& p);
Permutation Psi(const Cycle& c);
Cycle Psi_inv(const Permutation& p);

}  // namespace eoc
