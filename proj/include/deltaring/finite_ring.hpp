#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deltaring/element_set.hpp"

namespace deltaring {

// ---------------------------------------------------------------------------
// Global limits
// ---------------------------------------------------------------------------

/// Largest ring order any construction may produce. Defaults to 4096.
std::size_t order_guard() noexcept;
void set_order_guard(std::size_t limit);

/// Throws OrderGuardExceeded when `requested` exceeds the guard. Callers size
/// constructions with the saturating helpers below before allocating.
void enforce_order_guard(std::size_t requested);

/// Saturating product used to size constructions before allocating them.
std::size_t guarded_power(std::size_t base, std::size_t exponent);
std::size_t guarded_product(std::size_t a, std::size_t b);

/// Rings up to this order are validated with the naive O(n^3) triple scan;
/// larger rings use the generator-reduced scan. Both are complete checks.
std::size_t exhaustive_validation_bound() noexcept;
void set_exhaustive_validation_bound(std::size_t bound) noexcept;

enum class ValidationMode { automatic, exhaustive, reduced };

// ---------------------------------------------------------------------------
// FiniteRing
// ---------------------------------------------------------------------------

/// Raw Cayley tables, row-major: add[a * order + b] = a + b.
struct RingTables {
  std::size_t order = 0;
  std::vector<Element> add;
  std::vector<Element> mul;
  Element zero = 0;
  Element one = 0;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A unital ring given by exact addition and multiplication tables.
///
/// Instances are only produced by validate_ring() and are immutable; every
/// ring axiom has been verified on construction.
class FiniteRing {
 public:
  std::size_t order() const noexcept { return n_; }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }
  const std::string& label() const noexcept { return label_; }

  Element add(Element a, Element b) const noexcept { return add_[a * n_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * n_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg_[b]); }
  Element pow(Element a, std::uint64_t k) const noexcept;

  /// The element n·1 (additive multiple of the identity).
  Element multiple_of_one(std::uint64_t k) const noexcept;

  std::span<const Element> add_row(Element a) const noexcept {
    return {add_.data() + a * n_, n_};
  }
  std::span<const Element> mul_row(Element a) const noexcept {
    return {mul_.data() + a * n_, n_};
  }
  const std::vector<Element>& add_table() const noexcept { return add_; }
  const std::vector<Element>& mul_table() const noexcept { return mul_; }

  bool is_commutative() const noexcept { return commutative_; }

  /// Display name of an element ("3", "(1,0)", "[[0,1],[1,1]]", ...).
  const std::string& element_name(Element a) const { return names_[a]; }
  const std::vector<std::string>& element_names() const noexcept { return names_; }

  /// Looks an element up by display name.
  std::optional<Element> find_element(const std::string& name) const;

  RingTables tables() const;

 private:
  friend RingPtr validate_ring(RingTables, std::string, std::vector<std::string>, ValidationMode);
  FiniteRing() = default;

  std::size_t n_ = 0;
  Element zero_ = 0;
  Element one_ = 0;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<std::string> names_;
  std::string label_;
  bool commutative_ = false;
};

/// Validates every ring axiom and returns the immutable ring.
///
/// Throws InvalidTables for shape/range problems and AxiomViolation naming
/// the first failing axiom together with a witness triple. Order-1 tables
/// are rejected (zero must differ from one). Empty `names` defaults to the
/// decimal element indices.
RingPtr validate_ring(RingTables tables, std::string label,
                      std::vector<std::string> names = {},
                      ValidationMode mode = ValidationMode::automatic);

// ---------------------------------------------------------------------------
// Element arithmetic
// ---------------------------------------------------------------------------

enum class ArithOp { add, neg, sub, mul, pow };

/// Range-checked arithmetic entry point for untrusted callers (CLI, Python).
/// `pow` takes (element, exponent); `neg` takes one argument.
Element element_arith(const FiniteRing& ring, ArithOp op, std::span<const std::uint64_t> args);

/// Two-sided inverse, if any.
std::optional<Element> inverse(const FiniteRing& ring, Element a);

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
  bool is_surjective() const;
  ElementSet kernel() const;
};

/// Checks map(0)=0, map(1)=1, additivity and multiplicativity exhaustively.
/// Throws HomViolation with a witness pair.
RingHom validate_hom(RingPtr source, RingPtr target, std::vector<Element> map);

RingHom identity_hom(const RingPtr& ring);

// ---------------------------------------------------------------------------
// Dumps
// ---------------------------------------------------------------------------

/// JSON dump: {label, order, add, mul, zero, one}.
std::string dump_ring(const FiniteRing& ring, int indent = -1);
RingPtr load_ring(const std::string& json_text);

}  // namespace deltaring
