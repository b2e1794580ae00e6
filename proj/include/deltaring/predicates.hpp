#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "deltaring/element_set.hpp"
#include "deltaring/profile.hpp"

namespace deltaring {

/// QN has more than one definition in the literature; reports that use it
/// carry this line.
inline constexpr const char* kQuasinilpotentDefinition =
    "QN(R) = {a : 1 + ax is a unit for every x commuting with a}";

struct WitnessEntry {
  std::string role;
  Element element = 0;
  std::string display;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

/// Verdict of one predicate on one ring. A false verdict for a universally
/// quantified class always carries a witness that re-checks by arithmetic.
struct CheckReport {
  std::string subject;
  std::string predicate;
  bool verdict = false;
  std::vector<WitnessEntry> witness;
  std::string notes;
};

enum class UnitClass { uj, uu, delta_u, uq, unj, uuc, two_uj, two_uu, two_delta_u, two_uq, two_unj };

enum class RegularityKind { regular, unit_regular, strongly_regular, pi_regular, strongly_pi_regular, semiregular };

enum class CleanKind {
  clean,
  exchange,
  j_clean,
  delta_clean,
  strongly_nil_clean,
  strongly_two_nil_clean,
  semi_tripotent,
};

enum class StructuralKind {
  boolean,
  two_boolean,
  tripotent,
  reduced,
  abelian,
  dedekind_finite,
  local,
  division,
  semisimple,
  semipotent,
  potent,
  two_primal,
};

CheckReport unit_class_check(const RingProfile& profile, UnitClass cls);
CheckReport regularity_check(const RingProfile& profile, RegularityKind kind);
CheckReport clean_check(const RingProfile& profile, CleanKind kind);
CheckReport structural_check(const RingProfile& profile, StructuralKind kind);

/// 1 - ab ∈ Δ(R) <=> 1 - ba ∈ Δ(R) for all pairs. The notes record whether
/// the ring is ΔU (the hypothesis under which this is expected to hold).
CheckReport jacobson_pair_check(const RingProfile& profile);

// ---------------------------------------------------------------------------
// Class registry
// ---------------------------------------------------------------------------

struct RingClassInfo {
  std::string name;        // kebab-case, used by the CLI and search
  std::string definition;  // short defining condition
  std::function<CheckReport(const RingProfile&)> evaluate;
};

const std::vector<RingClassInfo>& ring_classes();

/// Throws UnknownClass.
const RingClassInfo& find_class(std::string_view name);

CheckReport check_class(const RingProfile& profile, std::string_view name);

/// Re-validates a report's witness with single-element arithmetic, without
/// consulting any cached element set. Returns true for true verdicts with
/// no witness.
bool witness_is_sound(const FiniteRing& ring, const CheckReport& report);

}  // namespace deltaring
