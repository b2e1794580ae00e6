#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "deltaring/element_set.hpp"
#include "deltaring/finite_ring.hpp"
#include "deltaring/structure.hpp"

namespace deltaring {

namespace detail {

/// Value computed on first use, thread-safe.
template <typename T>
class Lazy {
 public:
  template <typename Fn>
  const T& get(Fn&& compute) const {
    std::call_once(once_, [&] { value_.emplace(compute()); });
    return *value_;
  }

 private:
  mutable std::once_flag once_;
  mutable std::optional<T> value_;
};

}  // namespace detail

/// Memoized element sets of one ring. Predicates and theorem checks share a
/// profile so each set is computed once per ring.
class RingProfile {
 public:
  /// Test hook: replaces the Δ computation (used for mutation tests).
  struct Overrides {
    std::function<ElementSet(const FiniteRing&)> delta;
  };

  explicit RingProfile(RingPtr ring, Overrides overrides = {});
  RingProfile(const RingProfile&) = delete;
  RingProfile& operator=(const RingProfile&) = delete;

  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }

  const std::vector<int>& inverses() const;
  const ElementSet& units() const;
  const std::vector<Element>& unit_list() const;
  const ElementSet& idempotents() const;
  const std::vector<Element>& idempotent_list() const;
  const ElementSet& nilpotents() const;
  const ElementSet& tripotents() const;
  const ElementSet& center() const;
  const ElementSet& jacobson() const;
  const ElementSet& delta() const;
  const ElementSet& prime_radical() const;
  const ElementSet& quasinilpotents() const;
  const ElementSet& nil_plus_jacobson() const;

  /// R/J(R) with its projection, and the profile of R/J(R).
  const Quotient& radical_quotient() const;
  const RingProfile& radical_quotient_profile() const;

 private:
  RingPtr ring_;
  Overrides overrides_;

  detail::Lazy<std::vector<int>> inverses_;
  detail::Lazy<ElementSet> units_;
  detail::Lazy<std::vector<Element>> unit_list_;
  detail::Lazy<ElementSet> idempotents_;
  detail::Lazy<std::vector<Element>> idempotent_list_;
  detail::Lazy<ElementSet> nilpotents_;
  detail::Lazy<ElementSet> tripotents_;
  detail::Lazy<ElementSet> center_;
  detail::Lazy<ElementSet> jacobson_;
  detail::Lazy<ElementSet> delta_;
  detail::Lazy<ElementSet> prime_radical_;
  detail::Lazy<ElementSet> quasinilpotents_;
  detail::Lazy<ElementSet> nil_plus_jacobson_;
  detail::Lazy<Quotient> radical_quotient_;
  detail::Lazy<std::unique_ptr<RingProfile>> radical_quotient_profile_;
};

using ProfilePtr = std::shared_ptr<const RingProfile>;

inline ProfilePtr make_profile(RingPtr ring, RingProfile::Overrides overrides = {}) {
  return std::make_shared<const RingProfile>(std::move(ring), std::move(overrides));
}

}  // namespace deltaring
