#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltaring/dsl.hpp"
#include "deltaring/predicates.hpp"
#include "deltaring/profile.hpp"

namespace deltaring {

struct Counterexample {
  std::string ring;
  std::string detail;
  std::vector<WitnessEntry> witness;
};

/// Result of one theorem check over a ring set.
struct CheckOutcome {
  std::string check_id;
  std::string statement;
  std::string specialization;
  std::size_t scope_size = 0;
  bool verdict = true;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> warnings;
  /// Per-ring evidence printed even on pass (e.g. the matrix witness of T3.8).
  std::vector<std::string> notes;
  std::optional<double> runtime_ms;
};

struct HarnessConfig {
  /// Catalog rings above this order are left out of every scope.
  std::size_t max_order = 1024;
  unsigned threads = 1;
  /// Fill runtime_ms. Off by default so reports are byte-reproducible.
  bool timing = false;
  /// Passed to every profile (mutation tests inject a corrupted delta here).
  RingProfile::Overrides overrides;
};

/// Profiles shared by all checks of one run, keyed by canonical label. Only
/// rings with unique labels (DSL builds) belong here.
class ProfileCache {
 public:
  explicit ProfileCache(RingProfile::Overrides overrides = {}) : overrides_(std::move(overrides)) {}

  const RingProfile& get(const RingExpr& expr);
  const RingProfile& get(const RingPtr& ring);
  const RingProfile::Overrides& overrides() const noexcept { return overrides_; }

 private:
  RingProfile::Overrides overrides_;
  std::mutex mutex_;
  std::map<std::string, ProfilePtr, std::less<>> profiles_;
};

struct TheoremCheck {
  std::string id;
  std::string statement;
  std::string specialization;
  /// Per-check ceiling on ring order (some checks enumerate ideals or corners).
  std::size_t max_order = 1024;
  /// Structural filter on the expression (e.g. only products).
  std::function<bool(const RingExpr&)> applies;
  /// Runs on one ring. nullopt means the hypothesis does not apply.
  std::function<std::optional<std::vector<Counterexample>>(const RingExpr&, ProfileCache&)> run;
  /// Optional evidence line for rings that passed.
  std::function<std::string(const RingExpr&, ProfileCache&)> note = nullptr;
};

const std::vector<TheoremCheck>& theorem_checks();

/// Exact id, or one of the ids a combined check covers ("T3.6" finds
/// "T3.5/3.6"). Throws UnknownCheckId.
const TheoremCheck& find_check(std::string_view id);

/// Runs one check on the given rings. An empty ring set is a vacuous pass
/// with a warning.
CheckOutcome run_check(std::string_view id, const std::vector<RingExpr>& rings, const HarnessConfig& config = {});

/// Runs one check on its default scope: catalog rings within both limits.
CheckOutcome run_check_on_catalog(std::string_view id, const HarnessConfig& config = {});

struct RunSummary {
  std::vector<CheckOutcome> outcomes;
  bool all_passed() const;
};

RunSummary run_all(const HarnessConfig& config = {});

/// Rings (canonical labels, ascending order, ties in catalog order) that
/// are in every `include` class and in no `exclude` class. `extended` adds
/// every Z_m and every product Z_a x Z_b up to max_order.
std::vector<std::string> search_classes(const std::vector<std::string>& include,
                                        const std::vector<std::string>& exclude, std::size_t max_order,
                                        bool extended = false);

/// Catalog entries within the order limit, in catalog order.
std::vector<RingExpr> catalog_scope(std::size_t max_order);

}  // namespace deltaring
