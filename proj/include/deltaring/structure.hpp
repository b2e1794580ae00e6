#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltaring/element_set.hpp"
#include "deltaring/finite_ring.hpp"

namespace deltaring {

// Sub-objects of a finite ring: subrings, ideals, quotients, corners, centers
// and matrix-unit systems. Every function re-checks the semantic property it
// relies on; nothing trusts a caller's claim that a set is an ideal.

/// Least subset containing `gens` (and 0) closed under subtraction and
/// multiplication; also contains 1 when `unital`.
ElementSet subring_generated(const FiniteRing& ring, const ElementSet& gens, bool unital);

/// Least two-sided ideal containing `gens`.
ElementSet ideal_generated(const FiniteRing& ring, const ElementSet& gens);

/// Sum of two ideals, I + K = {a + b}.
ElementSet ideal_sum(const FiniteRing& ring, const ElementSet& lhs, const ElementSet& rhs);

bool is_additive_subgroup(const FiniteRing& ring, const ElementSet& set);
bool is_two_sided_ideal(const FiniteRing& ring, const ElementSet& set);
bool is_unital_subring(const FiniteRing& ring, const ElementSet& set);

/// Ring structure on a unital subring. `embedding[i]` is the element of the
/// parent ring represented by index i of the induced ring (ascending).
struct InducedRing {
  RingPtr ring;
  std::vector<Element> embedding;
};

/// Builds the ring on a validated unital subring, with elements in ascending
/// parent order and names inherited from the parent.
InducedRing induced_subring(const FiniteRing& ring, const ElementSet& subring, std::string label);

struct Quotient {
  RingPtr ring;
  RingHom projection;
};

/// R/I on canonical coset representatives (smallest index in each coset).
/// Cosets are ordered by representative. Throws NotAnIdeal.
Quotient quotient_ring(const RingPtr& ring, const ElementSet& ideal);

/// eRe with identity e. Throws NotIdempotent for e^2 != e or e = 0.
InducedRing corner_ring(const FiniteRing& ring, Element e);

ElementSet center(const FiniteRing& ring);

/// Verdict for ab = 0 <=> a·alpha(b) = 0 over all pairs.
struct CompatibilityResult {
  bool compatible = true;
  std::optional<std::pair<Element, Element>> counterexample;
};
CompatibilityResult alpha_compatible(const FiniteRing& ring, const RingHom& alpha);

/// A unit of f's target that is not f(u) for any unit u of the source.
/// nullopt when every unit lifts (always the case for quotient maps of
/// finite rings).
std::optional<Element> non_lifting_unit(const RingHom& f);

/// All ring endomorphisms, found by assigning images to an additive
/// generating set and propagating. Only offered up to order 64.
std::vector<RingHom> find_endomorphisms(const RingPtr& ring);

/// e_ij with e_ij e_st = delta_js e_it, all nonzero.
struct MatrixUnitSystem {
  std::size_t n = 0;
  std::vector<Element> units;  // row-major n x n
  Element corner_identity = 0;

  Element at(std::size_t i, std::size_t j) const { return units[i * n + j]; }
};

/// Re-checks all n^4 product relations and nonzeroness.
bool verify_matrix_units(const FiniteRing& ring, const MatrixUnitSystem& system);

/// Deterministic backtracking search (ascending element order) for a system
/// of n x n matrix units inside `within`. n >= 2.
std::optional<MatrixUnitSystem> find_matrix_units(const FiniteRing& ring, std::size_t n,
                                                  const ElementSet& within);

}  // namespace deltaring
