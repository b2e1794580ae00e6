#include <gtest/gtest.h>

#include <random>

#include "deltaring/constructions.hpp"
#include "deltaring/dsl.hpp"
#include "deltaring/errors.hpp"
#include "deltaring/finite_ring.hpp"
#include "deltaring/structure.hpp"
#include "deltaring/subsets.hpp"
#include "oracles.hpp"

using namespace deltaring;

namespace {

ElementSet set_of(std::size_t n, std::initializer_list<std::size_t> xs) { return ElementSet(n, xs); }

std::vector<std::uint64_t> args(std::initializer_list<std::uint64_t> xs) { return xs; }

}  // namespace

TEST(ValidateRing, AcceptsZ6) {
  const RingPtr r = validate_ring(oracle::zn_tables(6), "Z6");
  EXPECT_EQ(r->order(), 6u);
  EXPECT_TRUE(r->is_commutative());
  EXPECT_EQ(r->one(), 1);
}

TEST(ValidateRing, CorruptedZ4CellIsRejectedWithWitness) {
  RingTables t = oracle::zn_tables(4);
  t.mul[2 * 4 + 2] = 1;
  try {
    validate_ring(t, "bad");
    FAIL() << "corrupted table accepted";
  } catch (const AxiomViolation& e) {
    EXPECT_FALSE(e.kind().empty());
    // The witness triple must actually violate the named axiom family.
    const auto w = e.witness();
    EXPECT_LT(w[0], 4u);
    EXPECT_LT(w[1], 4u);
    EXPECT_LT(w[2], 4u);
  }
}

TEST(ValidateRing, OrderOneIsRejected) {
  EXPECT_THROW(validate_ring(oracle::zn_tables(1), "zero"), RingError);
}

TEST(ValidateRing, ShapeErrors) {
  RingTables t = oracle::zn_tables(3);
  t.mul.pop_back();
  EXPECT_THROW(validate_ring(t, "short"), InvalidTables);
  t = oracle::zn_tables(3);
  t.add[0] = 7;
  EXPECT_THROW(validate_ring(t, "range"), InvalidTables);
}

TEST(ValidateRing, ExhaustiveAndReducedModesAgree) {
  for (const char* name : {"M(2,Z2)", "T(2,Z3)", "TruncSkew(GF(4),frob,2)", "GR(Z2,S3)"}) {
    const RingTables t = build_ring(name)->tables();
    EXPECT_NO_THROW(validate_ring(t, name, {}, ValidationMode::exhaustive));
    EXPECT_NO_THROW(validate_ring(t, name, {}, ValidationMode::reduced));
    RingTables bad = t;
    bad.mul[3 * t.order + 5] = static_cast<Element>((bad.mul[3 * t.order + 5] + 1) % t.order);
    EXPECT_THROW(validate_ring(bad, name, {}, ValidationMode::exhaustive), AxiomViolation);
    EXPECT_THROW(validate_ring(bad, name, {}, ValidationMode::reduced), AxiomViolation);
  }
}

// Every single cell of every small catalog ring, corrupted to the next value,
// must be caught by the validator.
TEST(Mutation, EverySingleCellOfSmallCatalogRingsIsCaught) {
  std::size_t mutations = 0;
  for (const auto& entry : catalog()) {
    const RingPtr ring = build_ring(entry.expr);
    if (ring->order() > 16) continue;
    const RingTables base = ring->tables();
    const std::size_t n = base.order;
    for (int which = 0; which < 2; ++which) {
      for (std::size_t cell = 0; cell < n * n; ++cell) {
        RingTables t = base;
        auto& table = which == 0 ? t.add : t.mul;
        table[cell] = static_cast<Element>((table[cell] + 1) % n);
        EXPECT_THROW(validate_ring(t, "mutant"), AxiomViolation)
            << entry.label << (which == 0 ? " add" : " mul") << " cell " << cell;
        ++mutations;
      }
    }
  }
  EXPECT_GT(mutations, 1000u);
}

TEST(Mutation, RandomCellsOfMidSizeCatalogRingsAreCaught) {
  std::mt19937 rng(20261016);
  for (const auto& entry : catalog()) {
    const RingPtr ring = build_ring(entry.expr);
    if (ring->order() <= 16 || ring->order() > 81) continue;
    const RingTables base = ring->tables();
    const std::size_t n = base.order;
    for (int trial = 0; trial < 20; ++trial) {
      RingTables t = base;
      auto& table = trial % 2 == 0 ? t.add : t.mul;
      const std::size_t cell = rng() % (n * n);
      const auto shift = static_cast<Element>(1 + rng() % (n - 1));
      table[cell] = static_cast<Element>((table[cell] + shift) % n);
      EXPECT_THROW(validate_ring(t, "mutant"), AxiomViolation) << entry.label << " cell " << cell;
    }
  }
}

TEST(Mutation, WrongIdentityIsCaught) {
  RingTables t = oracle::zn_tables(5);
  t.one = 2;
  EXPECT_THROW(validate_ring(t, "bad one"), AxiomViolation);
  t = oracle::zn_tables(5);
  t.zero = 1;
  EXPECT_THROW(validate_ring(t, "bad zero"), RingError);
}

TEST(ElementArith, Examples) {
  const RingPtr z6 = integers_mod(6);
  const RingPtr z12 = integers_mod(12);
  EXPECT_EQ(element_arith(*z6, ArithOp::mul, args({4, 4})), 4);
  EXPECT_EQ(element_arith(*z12, ArithOp::pow, args({6, 2})), 0);
  EXPECT_EQ(element_arith(*z12, ArithOp::pow, args({7, 0})), z12->one());
  for (std::uint64_t a = 0; a < 12; ++a) {
    const Element n = element_arith(*z12, ArithOp::neg, args({a}));
    EXPECT_EQ(element_arith(*z12, ArithOp::add, args({a, n})), z12->zero());
  }
  EXPECT_EQ(element_arith(*z12, ArithOp::sub, args({3, 5})), 10);
  EXPECT_THROW(element_arith(*z6, ArithOp::add, args({6, 1})), IndexOutOfRange);
  EXPECT_THROW(element_arith(*z6, ArithOp::add, args({1})), RingError);
}

TEST(Inverse, MatchesScan) {
  const RingPtr z6 = integers_mod(6);
  EXPECT_EQ(inverse(*z6, 5), std::optional<Element>(5));
  EXPECT_EQ(inverse(*z6, 2), std::nullopt);
  for (const char* name : {"M(2,Z2)", "T(2,Z3)", "GR(Z2,S3)", "Z12"}) {
    const RingPtr r = build_ring(name);
    EXPECT_EQ(inverse(*r, r->one()), std::optional<Element>(r->one()));
    for (std::size_t a = 0; a < r->order(); ++a) {
      const auto inv = inverse(*r, static_cast<Element>(a));
      EXPECT_EQ(inv.has_value(), oracle::is_unit(*r, a)) << name << " " << a;
      if (inv) {
        EXPECT_EQ(r->mul(static_cast<Element>(a), *inv), r->one());
        EXPECT_EQ(r->mul(*inv, static_cast<Element>(a)), r->one());
      }
    }
  }
}

TEST(SubringGenerated, Examples) {
  const RingPtr z8 = integers_mod(8);
  EXPECT_EQ(subring_generated(*z8, set_of(8, {1, 3, 5, 7}), true), ElementSet::full(8));
  const RingPtr z6 = integers_mod(6);
  EXPECT_EQ(subring_generated(*z6, set_of(6, {3}), false), set_of(6, {0, 3}));
  // Empty generators, unital: the prime subring. In M(2,Z3) that is {0, I, 2I}.
  const RingPtr m = build_ring("M(2,Z3)");
  const Element i = m->one();
  const ElementSet prime = subring_generated(*m, ElementSet(m->order()), true);
  EXPECT_EQ(prime, ElementSet(m->order(), {0, i, m->add(i, i)}));
}

TEST(SubringGenerated, IsIdempotent) {
  for (const char* name : {"M(2,Z2)", "T(2,Z4)", "GR(Z3,C3)", "DT(Z2,Z2)"}) {
    const RingPtr r = build_ring(name);
    const ElementSet gens(r->order(), {1, 2});
    const ElementSet s = subring_generated(*r, gens, true);
    EXPECT_EQ(subring_generated(*r, s, true), s) << name;
    EXPECT_TRUE(is_unital_subring(*r, s));
  }
}

TEST(IdealGenerated, Examples) {
  const RingPtr z12 = integers_mod(12);
  EXPECT_EQ(ideal_generated(*z12, set_of(12, {6})), set_of(12, {0, 6}));
  // T(2,Z2) codes (a,b,d) = 4a+2b+d; e12 is 2.
  const RingPtr t = build_ring("T(2,Z2)");
  EXPECT_EQ(ideal_generated(*t, set_of(8, {2})), set_of(8, {0, 2}));
  for (const char* name : {"M(2,Z2)", "Z9", "GR(Z2,C3)"}) {
    const RingPtr r = build_ring(name);
    EXPECT_EQ(ideal_generated(*r, ElementSet(r->order(), {r->one()})), ElementSet::full(r->order()));
  }
}

TEST(Quotient, Examples) {
  const RingPtr z12 = integers_mod(12);
  const Quotient q = quotient_ring(z12, set_of(12, {0, 6}));
  EXPECT_EQ(q.ring->order(), 6u);
  EXPECT_EQ(q.ring->tables().add, oracle::zn_tables(6).add);
  EXPECT_EQ(q.ring->tables().mul, oracle::zn_tables(6).mul);

  const Quotient same = quotient_ring(z12, set_of(12, {0}));
  EXPECT_EQ(same.ring->tables().mul, z12->tables().mul);
  for (Element a = 0; a < 12; ++a) EXPECT_EQ(same.projection(a), a);

  const RingPtr z6 = integers_mod(6);
  const Quotient q3 = quotient_ring(z6, set_of(6, {0, 3}));
  EXPECT_EQ(q3.ring->order(), 3u);
  EXPECT_EQ(q3.ring->multiple_of_one(3), q3.ring->zero());

  EXPECT_THROW(quotient_ring(z6, set_of(6, {0, 2})), NotAnIdeal);
}

// Projection is a surjective hom whose kernel is the ideal, for every ideal
// of small catalog rings (ideals found as all additive subgroups closed under
// both multiplications among the principal-ideal sums).
TEST(Quotient, ProjectionKernelIsTheIdeal) {
  for (const auto& entry : catalog()) {
    const RingPtr r = build_ring(entry.expr);
    if (r->order() > 64) continue;
    std::set<std::vector<Element>> seen;
    for (std::size_t a = 0; a < r->order(); ++a) {
      const ElementSet ideal = ideal_generated(*r, ElementSet(r->order(), {a}));
      if (ideal.size() == r->order()) continue;  // R/R is the zero ring
      if (!seen.insert(ideal.members()).second) continue;
      const Quotient q = quotient_ring(r, ideal);
      EXPECT_TRUE(q.projection.is_surjective()) << entry.label;
      EXPECT_EQ(q.projection.kernel(), ideal) << entry.label;
      EXPECT_EQ(q.ring->order() * ideal.size(), r->order());
    }
  }
}

TEST(Corner, Examples) {
  const RingPtr z2z3 = build_ring("Prod(Z2,Z3)");
  const InducedRing c = corner_ring(*z2z3, 3);  // (1,0)
  EXPECT_EQ(c.ring->order(), 2u);
  EXPECT_EQ(c.ring->tables().mul, oracle::zn_tables(2).mul);

  const RingPtr m = build_ring("M(2,Z2)");
  const InducedRing e11 = corner_ring(*m, 8);
  EXPECT_EQ(e11.ring->order(), 2u);
  EXPECT_EQ(e11.ring->tables().mul, oracle::zn_tables(2).mul);

  EXPECT_THROW(corner_ring(*m, 0), NotIdempotent);
  EXPECT_THROW(corner_ring(*m, 6), NotIdempotent);
}

TEST(Corner, OneGivesTheRingBack) {
  for (const auto& entry : catalog()) {
    const RingPtr r = build_ring(entry.expr);
    if (r->order() > 256) continue;
    const InducedRing c = corner_ring(*r, r->one());
    EXPECT_EQ(c.ring->tables().add, r->tables().add) << entry.label;
    EXPECT_EQ(c.ring->tables().mul, r->tables().mul) << entry.label;
    EXPECT_EQ(c.ring->element_names(), r->element_names()) << entry.label;
  }
}

TEST(Center, Examples) {
  const RingPtr m = build_ring("M(2,Z2)");
  EXPECT_EQ(center(*m), set_of(16, {0, 9}));  // 0 and I = e11 + e22
  const RingPtr t = build_ring("T(2,Z2)");
  EXPECT_EQ(center(*t), set_of(8, {0, 5}));  // 0 and (1,0,1)
  const RingPtr z = integers_mod(10);
  EXPECT_EQ(center(*z), ElementSet::full(10));
  for (const char* name : {"GR(Z2,S3)", "TruncSkew(GF(4),frob,2)", "T(2,Z3)"}) {
    const RingPtr r = build_ring(name);
    EXPECT_EQ(oracle::to_set(center(*r).members()), oracle::center(*r)) << name;
  }
}

TEST(Hom, Examples) {
  const RingPtr z4 = integers_mod(4);
  const RingPtr z2 = integers_mod(2);
  EXPECT_NO_THROW(identity_hom(z4));
  const RingHom red = validate_hom(z4, z2, {0, 1, 0, 1});
  EXPECT_TRUE(red.is_surjective());
  EXPECT_EQ(red.kernel(), set_of(4, {0, 2}));
  EXPECT_THROW(validate_hom(z4, z2, {0, 1, 1, 1}), HomViolation);
  EXPECT_THROW(validate_hom(z2, z4, {0, 1}), HomViolation);  // 1+1 = 0 must map to 2

  const RingPtr gf4 = galois_field(4);
  const RingHom frob = frobenius(gf4);
  for (Element a = 0; a < 4; ++a) EXPECT_EQ(frob(a), gf4->mul(a, a));
  EXPECT_TRUE(alpha_compatible(*gf4, frob).compatible);
  EXPECT_TRUE(alpha_compatible(*z4, identity_hom(z4)).compatible);
}

TEST(Hom, SwapOnZ2xZ2IsAnEndomorphism) {
  // Swap (a,b) -> (b,a) with code 2a+b. Compatibility is reported as found.
  const RingPtr p = build_ring("Prod(Z2,Z2)");
  const RingHom swap = validate_hom(p, p, {0, 2, 1, 3});
  const CompatibilityResult res = alpha_compatible(*p, swap);
  // (1,0)(0,1) = 0 but (1,0)·swap(0,1) = (1,0) != 0.
  EXPECT_FALSE(res.compatible);
  ASSERT_TRUE(res.counterexample.has_value());
  const auto [a, b] = *res.counterexample;
  EXPECT_NE(p->mul(a, b) == p->zero(), p->mul(a, swap(b)) == p->zero());
}

TEST(Endomorphisms, FoundBySearch) {
  const auto gf4 = find_endomorphisms(galois_field(4));
  EXPECT_EQ(gf4.size(), 2u);  // identity and Frobenius
  const auto z6 = find_endomorphisms(integers_mod(6));
  EXPECT_EQ(z6.size(), 1u);  // unital endomorphisms of Z_n: identity only
  const auto p = find_endomorphisms(build_ring("Prod(Z2,Z2)"));
  EXPECT_EQ(p.size(), 4u);  // identity, swap, and the two maps onto the diagonal
}

TEST(UnitLifting, QuotientMapsLiftInclusionsNeedNot) {
  for (const char* name : {"Z12", "T(2,Z3)", "GR(Z4,C2)", "M(2,Z2)"}) {
    const RingPtr r = build_ring(name);
    for (std::size_t a = 0; a < r->order(); ++a) {
      const ElementSet ideal = ideal_generated(*r, ElementSet(r->order(), {a}));
      if (ideal.size() == r->order()) continue;
      EXPECT_EQ(non_lifting_unit(quotient_ring(r, ideal).projection), std::nullopt) << name << " " << a;
    }
  }
  // Z2 inside GF(4): the two generators of GF(4)* are units with no preimage.
  const RingPtr gf4 = galois_field(4);
  const RingHom inc = validate_hom(integers_mod(2), gf4, {gf4->zero(), gf4->one()});
  const auto v = non_lifting_unit(inc);
  ASSERT_TRUE(v.has_value());
  EXPECT_NE(*v, gf4->zero());
  EXPECT_NE(*v, gf4->one());
  EXPECT_TRUE(inverse(*gf4, *v).has_value());
  EXPECT_EQ(non_lifting_unit(identity_hom(gf4)), std::nullopt);
}

TEST(MatrixUnits, Examples) {
  const RingPtr m = build_ring("M(2,Z2)");
  const auto sys = find_matrix_units(*m, 2, ElementSet::full(16));
  ASSERT_TRUE(sys.has_value());
  EXPECT_TRUE(verify_matrix_units(*m, *sys));
  EXPECT_EQ(sys->corner_identity, m->one());

  const RingPtr z6 = integers_mod(6);
  EXPECT_FALSE(find_matrix_units(*z6, 2, ElementSet::full(6)).has_value());
  const RingPtr t = build_ring("T(2,Z2)");
  EXPECT_FALSE(find_matrix_units(*t, 2, ElementSet::full(8)).has_value());

  const RingPtr m3 = build_ring("M(2,Z3)");
  const auto sys3 = find_matrix_units(*m3, 2, ElementSet::full(81));
  ASSERT_TRUE(sys3.has_value());
  EXPECT_TRUE(verify_matrix_units(*m3, *sys3));
}

TEST(Dump, RoundTripIsBitExact) {
  for (const auto& entry : catalog()) {
    const RingPtr r = build_ring(entry.expr);
    if (r->order() > 128) continue;
    const std::string text = dump_ring(*r);
    const RingPtr back = load_ring(text);
    EXPECT_EQ(back->label(), r->label());
    EXPECT_EQ(back->tables().add, r->tables().add);
    EXPECT_EQ(back->tables().mul, r->tables().mul);
    EXPECT_EQ(dump_ring(*back), text);
  }
  EXPECT_THROW(load_ring("{"), InvalidTables);
  EXPECT_THROW(load_ring(R"({"label":"x","order":2})"), InvalidTables);
}

TEST(OrderGuard, RejectsOversizedConstructions) {
  EXPECT_EQ(order_guard(), 4096u);
  EXPECT_THROW(matrix_ring(integers_mod(4), 3), OrderGuardExceeded);  // 4^9
  set_order_guard(64);
  clear_build_cache();
  EXPECT_THROW(build_ring("M(2,Z3)"), OrderGuardExceeded);
  EXPECT_NO_THROW(build_ring("M(2,Z2)"));
  set_order_guard(4096);
  clear_build_cache();
  EXPECT_EQ(guarded_power(2, 200), std::numeric_limits<std::size_t>::max());
}
