#include <gtest/gtest.h>

#include "deltaring/constructions.hpp"
#include "deltaring/dsl.hpp"
#include "deltaring/errors.hpp"
#include "deltaring/predicates.hpp"
#include "deltaring/profile.hpp"
#include "oracles.hpp"

using namespace deltaring;

namespace {

bool verdict(const char* ring, const char* cls) {
  const RingProfile p(build_ring(ring));
  return check_class(p, cls).verdict;
}

struct CatalogProfiles {
  std::vector<ProfilePtr> profiles;
  CatalogProfiles() {
    for (const auto& entry : catalog()) {
      RingPtr r = build_ring(entry.expr);
      if (r->order() <= 256) profiles.push_back(make_profile(r));
    }
  }
};

const CatalogProfiles& profiles() {
  static const CatalogProfiles c;
  return c;
}

bool has(const RingProfile& p, const char* cls) { return check_class(p, cls).verdict; }

}  // namespace

TEST(UnitClass, Examples) {
  const RingProfile z12(integers_mod(12));
  EXPECT_TRUE(unit_class_check(z12, UnitClass::two_delta_u).verdict);

  const RingProfile z5(integers_mod(5));
  const CheckReport r5 = unit_class_check(z5, UnitClass::two_delta_u);
  EXPECT_FALSE(r5.verdict);
  ASSERT_EQ(r5.witness.size(), 2u);
  EXPECT_EQ(r5.witness[0].role, "unit");
  EXPECT_EQ(r5.witness[0].element, 2);
  EXPECT_EQ(r5.witness[1].element, 3);
  EXPECT_TRUE(witness_is_sound(z5.ring(), r5));

  const RingProfile z3(integers_mod(3));
  EXPECT_FALSE(unit_class_check(z3, UnitClass::delta_u).verdict);
  EXPECT_TRUE(unit_class_check(z3, UnitClass::two_delta_u).verdict);
}

TEST(UnitClass, MatchOracle) {
  for (const auto& p : profiles().profiles) {
    EXPECT_EQ(unit_class_check(*p, UnitClass::two_delta_u).verdict, oracle::two_delta_u(p->ring()))
        << p->ring().label();
    EXPECT_EQ(unit_class_check(*p, UnitClass::delta_u).verdict, oracle::delta_u(p->ring())) << p->ring().label();
  }
}

TEST(UnitClass, UucCountsDecompositions) {
  for (const auto& p : profiles().profiles) {
    if (p->ring().order() > 64) continue;
    const FiniteRing& r = p->ring();
    const auto u = oracle::units(r);
    const auto id = oracle::idempotents(r);
    bool uuc = true;
    for (std::size_t v : u) {
      std::size_t count = 0;
      for (std::size_t e : id) count += u.count(r.sub(v, e));
      uuc = uuc && count == 1;
    }
    EXPECT_EQ(unit_class_check(*p, UnitClass::uuc).verdict, uuc) << r.label();
  }
}

TEST(Regularity, Examples) {
  EXPECT_TRUE(verdict("Z6", "regular"));
  const RingProfile z4(integers_mod(4));
  const CheckReport r = regularity_check(z4, RegularityKind::regular);
  EXPECT_FALSE(r.verdict);
  ASSERT_FALSE(r.witness.empty());
  EXPECT_EQ(r.witness[0].element, 2);
  EXPECT_TRUE(regularity_check(z4, RegularityKind::semiregular).verdict);
}

TEST(Clean, Examples) {
  EXPECT_TRUE(verdict("Z4", "semi-tripotent"));
  EXPECT_TRUE(verdict("Z2", "j-clean"));
  EXPECT_TRUE(verdict("Z6", "clean"));
}

TEST(Structural, Examples) {
  EXPECT_TRUE(verdict("Prod(Z2,Z2)", "boolean"));
  EXPECT_TRUE(verdict("Z6", "tripotent"));
  EXPECT_TRUE(verdict("Z4", "local"));
  EXPECT_TRUE(verdict("T(2,Z2)", "2-primal"));
  EXPECT_FALSE(verdict("Z6", "local"));
  EXPECT_FALSE(verdict("M(2,Z2)", "abelian"));
  EXPECT_TRUE(verdict("GF(9)", "division"));
}

TEST(JacobsonPair, Examples) {
  EXPECT_TRUE(verdict("Z4", "jacobson-pair"));
  EXPECT_TRUE(verdict("Prod(Z2,Z2)", "jacobson-pair"));
  for (const auto& p : profiles().profiles)
    if (p->ring().is_commutative()) EXPECT_TRUE(has(*p, "jacobson-pair")) << p->ring().label();
}

TEST(Registry, NamesAndErrors) {
  EXPECT_GE(ring_classes().size(), 36u);
  EXPECT_THROW(find_class("no-such-class"), UnknownClass);
  for (const auto& c : ring_classes()) {
    EXPECT_EQ(&find_class(c.name), &c);
    EXPECT_FALSE(c.definition.empty());
  }
}

// Every false verdict of every class carries a witness that re-validates by
// single-element arithmetic.
TEST(Witness, EveryFalseVerdictIsSound) {
  for (const auto& p : profiles().profiles) {
    if (p->ring().order() > 128) continue;
    for (const auto& c : ring_classes()) {
      const CheckReport rep = c.evaluate(*p);
      EXPECT_EQ(rep.subject, p->ring().label());
      EXPECT_EQ(rep.predicate, c.name);
      if (rep.verdict) continue;
      EXPECT_FALSE(rep.witness.empty()) << c.name << " on " << p->ring().label();
      EXPECT_TRUE(witness_is_sound(p->ring(), rep)) << c.name << " on " << p->ring().label();
    }
  }
}

TEST(Witness, ForgedWitnessesAreRejected) {
  const RingPtr z5 = integers_mod(5);
  CheckReport forged;
  forged.subject = "Z5";
  forged.predicate = "2-delta-u";
  forged.verdict = false;
  forged.witness = {{"unit", 4, "4"}, {"u^2-1", 0, "0"}};  // 4^2 - 1 = 0 is in Delta
  EXPECT_FALSE(witness_is_sound(*z5, forged));
  forged.witness = {{"unit", 0, "0"}, {"u^2-1", 4, "4"}};  // 0 is not a unit
  EXPECT_FALSE(witness_is_sound(*z5, forged));
}

// Implication diagram, as subset relations between verdict sets.
TEST(Properties, ImplicationDiagram) {
  const std::pair<const char*, const char*> arrows[] = {
      {"uj", "2-uj"}, {"uj", "delta-u"}, {"2-uj", "2-delta-u"}, {"delta-u", "2-delta-u"}, {"delta-u", "uuc"},
      {"uu", "2-uu"}, {"uj", "unj"},     {"2-uj", "2-unj"},
  };
  for (const auto& p : profiles().profiles)
    for (const auto& [from, to] : arrows)
      if (has(*p, from)) EXPECT_TRUE(has(*p, to)) << from << " => " << to << " fails on " << p->ring().label();
}

TEST(Properties, RegularSemiregularExchange) {
  for (const auto& p : profiles().profiles) {
    if (has(*p, "regular")) EXPECT_TRUE(has(*p, "semiregular")) << p->ring().label();
    if (has(*p, "semiregular")) EXPECT_TRUE(has(*p, "exchange")) << p->ring().label();
    if (has(*p, "strongly-regular")) EXPECT_TRUE(has(*p, "unit-regular")) << p->ring().label();
    if (has(*p, "unit-regular")) EXPECT_TRUE(has(*p, "regular")) << p->ring().label();
  }
}

TEST(Properties, CleanIffExchangeOnAbelianRings) {
  std::size_t abelian = 0;
  for (const auto& p : profiles().profiles) {
    if (!has(*p, "abelian")) continue;
    ++abelian;
    EXPECT_EQ(has(*p, "clean"), has(*p, "exchange")) << p->ring().label();
  }
  EXPECT_GT(abelian, 50u);
}

TEST(Properties, FiniteRingsAreDedekindFinite) {
  for (const auto& p : profiles().profiles) EXPECT_TRUE(has(*p, "dedekind-finite")) << p->ring().label();
}

TEST(Properties, ZmClassificationOfTwoDeltaU) {
  for (std::size_t m = 2; m <= 120; ++m) {
    const RingProfile p(integers_mod(m));
    EXPECT_EQ(unit_class_check(p, UnitClass::two_delta_u).verdict, oracle::is_2_3_smooth(m)) << "Z" << m;
  }
}

TEST(Profile, DeltaOverrideIsUsed) {
  RingProfile::Overrides o;
  o.delta = [](const FiniteRing& r) { return ElementSet(r.order(), {0}); };
  const RingProfile p(integers_mod(4), o);
  EXPECT_EQ(p.delta(), ElementSet(4, {0}));
  // With Delta(Z4) forced to {0}, 3^2 - 1 = 0 still passes but u = 3 breaks delta-u.
  EXPECT_FALSE(unit_class_check(p, UnitClass::delta_u).verdict);
}
