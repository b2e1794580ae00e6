#pragma once

#include <vector>

#include "deltaring/element_set.hpp"
#include "deltaring/finite_ring.hpp"
#include "deltaring/structure.hpp"

namespace deltaring {

/// Two-sided inverse table; -1 for non-units.
std::vector<int> inverse_table(const FiniteRing& ring);

ElementSet units(const FiniteRing& ring);
ElementSet idempotents(const FiniteRing& ring);
/// q with q^k = 0 for some k <= |R|.
ElementSet nilpotents(const FiniteRing& ring);
/// e with e^3 = e.
ElementSet tripotent_elements(const FiniteRing& ring);

/// {a : 1 - r·a is a unit for every r}. The result is checked to be a
/// two-sided ideal; `paranoid` additionally recomputes it with the right
/// criterion (1 - a·r) and compares. Throws InternalInconsistency.
ElementSet jacobson_radical(const FiniteRing& ring, bool paranoid = false);

/// {r : r + u is a unit for every unit u}. Checks J ⊆ Δ and that Δ is
/// closed under multiplication by units on either side.
ElementSet delta_set(const FiniteRing& ring);

/// The unital subring generated by the units, with its own ring structure.
struct UnitSubring {
  ElementSet members;
  InducedRing induced;
};
UnitSubring unit_subring_T(const FiniteRing& ring);

/// Δ computed as J(T), mapped back into R. Independent of delta_set().
ElementSet delta_via_unit_subring(const FiniteRing& ring);

/// Least semiprime ideal (intersection of prime ideals), by fixpoint.
ElementSet prime_radical(const FiniteRing& ring);

/// {a : 1 + a·x is a unit for every x commuting with a}.
ElementSet quasinilpotents(const FiniteRing& ring);

/// Literal sumset Nil(R) + J(R).
ElementSet nil_plus_jacobson(const FiniteRing& ring, const ElementSet& nil, const ElementSet& jac);

// Single-element tests that go straight to the definitions. They share no
// code with the set computations above and back the witness re-validator.
namespace direct {
bool is_unit(const FiniteRing& ring, Element a);
bool in_jacobson(const FiniteRing& ring, Element a);
bool in_delta(const FiniteRing& ring, Element a);
bool is_nilpotent(const FiniteRing& ring, Element a);
bool in_quasinilpotents(const FiniteRing& ring, Element a);
}  // namespace direct

}  // namespace deltaring
