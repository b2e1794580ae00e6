#include <gtest/gtest.h>

#include "deltaring/constructions.hpp"
#include "deltaring/dsl.hpp"
#include "deltaring/errors.hpp"
#include "deltaring/predicates.hpp"
#include "deltaring/profile.hpp"
#include "deltaring/structure.hpp"
#include "deltaring/subsets.hpp"
#include "oracles.hpp"

using namespace deltaring;
using oracle::Set;

namespace {

Set S(const ElementSet& s) { return oracle::to_set(s.members()); }

std::vector<RingPtr> small_catalog(std::size_t max_order) {
  std::vector<RingPtr> out;
  for (const auto& entry : catalog()) {
    RingPtr r = build_ring(entry.expr);
    if (r->order() <= max_order) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST(Units, Examples) {
  EXPECT_EQ(S(units(*integers_mod(6))), (Set{1, 5}));
  EXPECT_EQ(S(units(*integers_mod(8))), (Set{1, 3, 5, 7}));
  EXPECT_EQ(S(units(*galois_field(4))), (Set{1, 2, 3}));
}

TEST(Units, InverseTableMatchesScan) {
  for (const auto& r : small_catalog(128)) {
    const auto inv = inverse_table(*r);
    for (std::size_t a = 0; a < r->order(); ++a) {
      EXPECT_EQ(inv[a] >= 0, oracle::is_unit(*r, a)) << r->label() << " " << a;
      if (inv[a] >= 0) EXPECT_EQ(r->mul(a, inv[a]), r->one());
    }
  }
}

TEST(ElementClasses, Examples) {
  EXPECT_EQ(S(idempotents(*integers_mod(6))), (Set{0, 1, 3, 4}));
  EXPECT_EQ(S(nilpotents(*integers_mod(12))), (Set{0, 6}));
  EXPECT_EQ(S(tripotent_elements(*integers_mod(3))), (Set{0, 1, 2}));
}

TEST(ElementClasses, MatchOracleOnCatalog) {
  for (const auto& r : small_catalog(256)) {
    EXPECT_EQ(S(units(*r)), oracle::units(*r)) << r->label();
    EXPECT_EQ(S(idempotents(*r)), oracle::idempotents(*r)) << r->label();
    EXPECT_EQ(S(nilpotents(*r)), oracle::nilpotents(*r)) << r->label();
    EXPECT_EQ(S(delta_set(*r)), oracle::delta(*r)) << r->label();
  }
}

TEST(Jacobson, Examples) {
  EXPECT_EQ(S(jacobson_radical(*integers_mod(12))), (Set{0, 6}));
  EXPECT_EQ(S(jacobson_radical(*integers_mod(6))), (Set{0}));
  // T(2,Z2) codes 4a+2b+d: strictly upper triangular = {0, e12 = 2}.
  EXPECT_EQ(S(jacobson_radical(*build_ring("T(2,Z2)"))), (Set{0, 2}));
}

TEST(Jacobson, MatchesTwoSidedOracleAndParanoidMode) {
  for (const auto& r : small_catalog(64)) {
    const ElementSet j = jacobson_radical(*r, true);
    EXPECT_EQ(S(j), oracle::jacobson(*r)) << r->label();
    EXPECT_TRUE(is_two_sided_ideal(*r, j));
  }
}

TEST(Delta, Examples) {
  EXPECT_EQ(S(delta_set(*integers_mod(4))), (Set{0, 2}));
  EXPECT_EQ(S(delta_set(*integers_mod(6))), (Set{0}));
  EXPECT_EQ(S(delta_set(*integers_mod(8))), (Set{0, 2, 4, 6}));
}

TEST(Delta, ContainsJacobsonAndIsUnitStable) {
  for (const auto& r : small_catalog(256)) {
    const ElementSet d = delta_set(*r);
    const ElementSet j = jacobson_radical(*r);
    EXPECT_TRUE(j.is_subset_of(d)) << r->label();
    for (Element u : units(*r).members())
      d.for_each([&](Element x) {
        EXPECT_TRUE(d.contains(r->mul(u, x)) && d.contains(r->mul(x, u))) << r->label();
      });
    // J = Delta exactly when Delta is an ideal.
    EXPECT_EQ(is_two_sided_ideal(*r, d), d == j) << r->label();
  }
}

TEST(Delta, OracleViaUnitSubring) {
  for (const auto& r : small_catalog(256)) {
    EXPECT_EQ(delta_via_unit_subring(*r), delta_set(*r)) << r->label();
  }
}

TEST(Delta, ProjectsOntoDeltaOfRadicalQuotient) {
  for (const auto& r : small_catalog(256)) {
    const Quotient q = quotient_ring(r, jacobson_radical(*r));
    ElementSet image(q.ring->order());
    delta_set(*r).for_each([&](Element x) { image.insert(q.projection(x)); });
    EXPECT_EQ(image, delta_set(*q.ring)) << r->label();
  }
}

TEST(UnitSubring, Examples) {
  EXPECT_EQ(unit_subring_T(*integers_mod(8)).members, ElementSet::full(8));
  EXPECT_EQ(unit_subring_T(*build_ring("Prod(Z2,Z3)")).members, ElementSet::full(6));
  EXPECT_EQ(unit_subring_T(*galois_field(4)).members, ElementSet::full(4));
  // Z2 x Z2 has the single unit (1,1), so T is the diagonal copy of Z2.
  EXPECT_EQ(S(unit_subring_T(*build_ring("Prod(Z2,Z2)")).members), (Set{0, 3}));
}

TEST(PrimeRadical, Examples) {
  EXPECT_EQ(S(prime_radical(*integers_mod(12))), (Set{0, 6}));
  EXPECT_EQ(S(prime_radical(*build_ring("M(2,Z2)"))), (Set{0}));
  EXPECT_EQ(S(prime_radical(*build_ring("T(2,Z2)"))), (Set{0, 2}));
}

TEST(PrimeRadical, InsideNilAndTwoPrimalIsEquality) {
  for (const auto& r : small_catalog(256)) {
    const RingProfile p(r);
    EXPECT_TRUE(p.prime_radical().is_subset_of(p.nilpotents())) << r->label();
    EXPECT_EQ(structural_check(p, StructuralKind::two_primal).verdict, p.prime_radical() == p.nilpotents())
        << r->label();
  }
}

TEST(Quasinilpotents, Examples) {
  EXPECT_EQ(S(quasinilpotents(*integers_mod(4))), (Set{0, 2}));
  EXPECT_EQ(S(quasinilpotents(*integers_mod(6))), (Set{0}));
  EXPECT_EQ(S(quasinilpotents(*galois_field(4))), (Set{0}));
}

TEST(Quasinilpotents, MatchCommutantDefinition) {
  for (const auto& r : small_catalog(64)) {
    const Set u = oracle::units(*r);
    Set expected;
    for (std::size_t a = 0; a < r->order(); ++a) {
      bool ok = true;
      for (std::size_t x = 0; x < r->order() && ok; ++x)
        if (r->mul(a, x) == r->mul(x, a)) ok = u.count(r->add(r->one(), r->mul(a, x))) > 0;
      if (ok) expected.insert(a);
    }
    EXPECT_EQ(S(quasinilpotents(*r)), expected) << r->label();
  }
}

TEST(Direct, AgreesWithSets) {
  for (const auto& r : small_catalog(128)) {
    const RingProfile p(r);
    for (std::size_t x = 0; x < r->order(); ++x) {
      const auto a = static_cast<Element>(x);
      EXPECT_EQ(direct::is_unit(*r, a), p.units().contains(a));
      EXPECT_EQ(direct::in_jacobson(*r, a), p.jacobson().contains(a));
      EXPECT_EQ(direct::in_delta(*r, a), p.delta().contains(a));
      EXPECT_EQ(direct::is_nilpotent(*r, a), p.nilpotents().contains(a));
      EXPECT_EQ(direct::in_quasinilpotents(*r, a), p.quasinilpotents().contains(a));
    }
  }
}

TEST(DeltaU, UnitSumsAvoidIdempotents) {
  for (const auto& r : small_catalog(256)) {
    const RingProfile p(r);
    if (!unit_class_check(p, UnitClass::delta_u).verdict) continue;
    for (Element u : p.unit_list())
      for (Element v : p.unit_list()) {
        const Element s = r->add(u, v);
        EXPECT_FALSE(s != r->zero() && p.idempotents().contains(s)) << r->label();
      }
  }
}
