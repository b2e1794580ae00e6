#include "deltaring/profile.hpp"

#include "deltaring/subsets.hpp"

namespace deltaring {

RingProfile::RingProfile(RingPtr ring, Overrides overrides)
    : ring_(std::move(ring)), overrides_(std::move(overrides)) {}

const std::vector<int>& RingProfile::inverses() const {
  return inverses_.get([&] { return inverse_table(*ring_); });
}

const ElementSet& RingProfile::units() const {
  return units_.get([&] {
    const auto& inv = inverses();
    ElementSet u(ring_->order());
    for (std::size_t a = 0; a < inv.size(); ++a)
      if (inv[a] >= 0) u.insert(a);
    return u;
  });
}

const std::vector<Element>& RingProfile::unit_list() const {
  return unit_list_.get([&] { return units().members(); });
}

const ElementSet& RingProfile::idempotents() const {
  return idempotents_.get([&] { return deltaring::idempotents(*ring_); });
}

const std::vector<Element>& RingProfile::idempotent_list() const {
  return idempotent_list_.get([&] { return idempotents().members(); });
}

const ElementSet& RingProfile::nilpotents() const {
  return nilpotents_.get([&] { return deltaring::nilpotents(*ring_); });
}

const ElementSet& RingProfile::tripotents() const {
  return tripotents_.get([&] { return tripotent_elements(*ring_); });
}

const ElementSet& RingProfile::center() const {
  return center_.get([&] { return deltaring::center(*ring_); });
}

const ElementSet& RingProfile::jacobson() const {
  return jacobson_.get([&] { return jacobson_radical(*ring_); });
}

const ElementSet& RingProfile::delta() const {
  return delta_.get([&] {
    if (overrides_.delta) return overrides_.delta(*ring_);
    return delta_set(*ring_);
  });
}

const ElementSet& RingProfile::prime_radical() const {
  return prime_radical_.get([&] { return deltaring::prime_radical(*ring_); });
}

const ElementSet& RingProfile::quasinilpotents() const {
  return quasinilpotents_.get([&] { return deltaring::quasinilpotents(*ring_); });
}

const ElementSet& RingProfile::nil_plus_jacobson() const {
  return nil_plus_jacobson_.get([&] { return deltaring::nil_plus_jacobson(*ring_, nilpotents(), jacobson()); });
}

const Quotient& RingProfile::radical_quotient() const {
  return radical_quotient_.get([&] { return quotient_ring(ring_, jacobson()); });
}

const RingProfile& RingProfile::radical_quotient_profile() const {
  return *radical_quotient_profile_.get(
      [&] { return std::make_unique<RingProfile>(radical_quotient().ring, overrides_); });
}

}  // namespace deltaring
