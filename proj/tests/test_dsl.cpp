#include <gtest/gtest.h>

#include <random>

#include "deltaring/dsl.hpp"
#include "deltaring/errors.hpp"
#include "deltaring/predicates.hpp"
#include "deltaring/profile.hpp"
#include "deltaring/subsets.hpp"
#include "oracles.hpp"

using namespace deltaring;

TEST(Parse, Examples) {
  const RingExpr m = parse_ring_expr("M(2, Z3)");
  EXPECT_EQ(m.kind, ExprKind::matrix);
  EXPECT_EQ(m.numbers, std::vector<std::uint64_t>{2});
  ASSERT_EQ(m.children.size(), 1u);
  EXPECT_EQ(m.children[0].kind, ExprKind::integers);
  EXPECT_EQ(m.children[0].numbers, std::vector<std::uint64_t>{3});

  const RingExpr g = parse_ring_expr("GR(Z4, C2)");
  EXPECT_EQ(g.kind, ExprKind::group_ring);
  EXPECT_EQ(g.symbol, "C2");

  const RingExpr k = parse_ring_expr("K(Z4, s=2)");
  EXPECT_EQ(k.kind, ExprKind::ks);
  EXPECT_EQ(k.numbers, std::vector<std::uint64_t>{2});
}

TEST(Parse, WhitespaceInsensitive) {
  EXPECT_EQ(parse_ring_expr(" Prod ( Z2 ,GF( 4 ) ) "), parse_ring_expr("Prod(Z2,GF(4))"));
  EXPECT_EQ(parse_ring_expr("Z 12"), parse_ring_expr("Z12"));
}

TEST(Parse, Errors) {
  try {
    parse_ring_expr("M(2,");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    parse_ring_expr("Prod(Z2 Z3)");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  EXPECT_THROW(parse_ring_expr("Q7"), UnknownName);
  EXPECT_THROW(parse_ring_expr("GR(Z2,D4)"), UnknownName);
  EXPECT_THROW(parse_ring_expr("TruncSkew(Z2,sigma,2)"), UnknownName);
  EXPECT_THROW(parse_ring_expr("M(Z2)"), BadArity);
  EXPECT_THROW(parse_ring_expr("Triv(Z2,Z2,Z2)"), BadArity);
  EXPECT_THROW(parse_ring_expr(""), SyntaxError);
  EXPECT_THROW(parse_ring_expr("Z2)"), SyntaxError);
}

TEST(Build, Examples) {
  const RingPtr z12 = build_ring("Z12");
  EXPECT_EQ(z12->order(), 12u);
  EXPECT_TRUE(unit_class_check(RingProfile(z12), UnitClass::two_delta_u).verdict);
  EXPECT_EQ(build_ring("T(3, Z3)")->order(), 729u);
  const RingPtr gf4 = build_ring("GF(4)");
  EXPECT_EQ(oracle::units(*gf4).size(), 3u);
  EXPECT_EQ(gf4->label(), "GF(4)");
}

TEST(Build, BindingErrors) {
  EXPECT_THROW(build_ring("TruncSkew(Z4,frob,2)"), BindingError);
  EXPECT_THROW(build_ring("GF(6)"), UnsupportedField);
  EXPECT_THROW(build_ring("K(M(2,Z2),s=8)"), NotCentral);
  EXPECT_THROW(build_ring("K(Z4,s=9)"), BindingError);
  EXPECT_THROW(build_ring("Triv(Z2,Z3)"), BindingError);
  EXPECT_THROW(build_ring("Quot(Z6,1)"), AxiomViolation);  // Z6/Z6 is the zero ring
  EXPECT_THROW(build_ring("Corner(Z6,2)"), NotIdempotent);
}

TEST(Build, MemoizedAndDeterministic) {
  const RingPtr a = build_ring("DT(Z2,Z2)");
  const RingPtr b = build_ring(" DT( Z2 , Z2 ) ");
  EXPECT_EQ(a.get(), b.get());
  const std::string dump = dump_ring(*a);
  clear_build_cache();
  const RingPtr c = build_ring("DT(Z2,Z2)");
  EXPECT_NE(a.get(), c.get());
  EXPECT_EQ(dump_ring(*c), dump);
}

TEST(Build, QuotientsAndCorners) {
  EXPECT_EQ(build_ring("Quot(Z12,6)")->tables().mul, build_ring("Z6")->tables().mul);
  EXPECT_EQ(build_ring("Quot(T(2,Z2),J)")->order(), 4u);
  EXPECT_EQ(build_ring("Corner(M(2,Z2),8)")->order(), 2u);
}

TEST(Catalog, ContainsRequiredEntriesAndBuilds) {
  std::set<std::string> labels;
  for (const auto& entry : catalog()) {
    EXPECT_EQ(entry.label, print_ring_expr(entry.expr));
    EXPECT_TRUE(labels.insert(entry.label).second) << "duplicate " << entry.label;
    const RingPtr r = build_ring(entry.expr);
    EXPECT_EQ(r->label(), entry.label);
    EXPECT_LE(r->order(), order_guard());
  }
  for (std::size_t m = 2; m <= 120; ++m) EXPECT_TRUE(labels.count("Z" + std::to_string(m)));
  for (int q : {2, 3, 4, 5, 7, 8, 9}) EXPECT_TRUE(labels.count("GF(" + std::to_string(q) + ")"));
  for (const char* name : {"Z6", "M(2,Z2)", "M(2,Z3)", "T(2,Z2)", "T(2,Z3)", "T(2,Z4)", "T(3,Z2)", "T(3,Z3)",
                           "GR(Z2,C2)", "GR(Z4,C2)", "GR(Z2,V4)", "GR(Z9,C3)", "GR(Z2,C3)", "K(Z4,s=2)",
                           "FM(2,Z4,s=2)", "Triv(Z3,Z3)", "Triv(Z5,Z5)"})
    EXPECT_TRUE(labels.count(name)) << name;
}

TEST(RoundTrip, CatalogAndRandomExpressions) {
  for (const auto& entry : catalog()) {
    EXPECT_EQ(parse_ring_expr(print_ring_expr(entry.expr)), entry.expr) << entry.label;
  }
  // Random syntactically valid expressions (not necessarily buildable).
  std::mt19937 rng(7);
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    const int pick = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 14);
    const std::string n = std::to_string(2 + rng() % 5);
    switch (pick) {
      case 0: return "Z" + n;
      case 1: return "GF(" + std::string(rng() % 2 ? "4" : "9") + ")";
      case 2: return "Prod(" + gen(depth - 1) + ", " + gen(depth - 1) + ")";
      case 3: return "M(" + n + "," + gen(depth - 1) + ")";
      case 4: return "T( " + n + " ," + gen(depth - 1) + ")";
      case 5: return "TruncSkew(" + gen(depth - 1) + (rng() % 2 ? ",id," : ",frob,") + n + ")";
      case 6: return "Triv(" + gen(depth - 1) + (rng() % 2 ? ",0)" : ")");
      case 7: return "DT(" + gen(depth - 1) + "," + gen(depth - 1) + ")";
      case 8: return "FT(" + gen(depth - 1) + "," + gen(depth - 1) + ",0)";
      case 9: return "K(" + gen(depth - 1) + ", s = " + n + ")";
      case 10: return "FM(" + n + "," + gen(depth - 1) + ",s=0)";
      case 11: return "GR(" + gen(depth - 1) + (rng() % 2 ? ",S3)" : ",C4)");
      case 12: return "Quot(" + gen(depth - 1) + (rng() % 2 ? ",J)" : ",3,5)");
      default: return "Corner(" + gen(depth - 1) + "," + n + ")";
    }
  };
  for (int i = 0; i < 500; ++i) {
    const std::string text = gen(3);
    const RingExpr e = parse_ring_expr(text);
    const std::string printed = print_ring_expr(e);
    EXPECT_EQ(parse_ring_expr(printed), e) << text;
    EXPECT_EQ(printed.find(' '), std::string::npos);
  }
}
