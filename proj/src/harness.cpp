#include "deltaring/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "deltaring/constructions.hpp"
#include "deltaring/errors.hpp"
#include "deltaring/structure.hpp"
#include "deltaring/subsets.hpp"

namespace deltaring {

// ---------------------------------------------------------------------------
// Profile cache
// ---------------------------------------------------------------------------

const RingProfile& ProfileCache::get(const RingExpr& expr) { return get(build_ring(expr)); }

const RingProfile& ProfileCache::get(const RingPtr& ring) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = profiles_.find(ring->label());
  if (it == profiles_.end()) it = profiles_.emplace(ring->label(), make_profile(ring, overrides_)).first;
  return *it->second;
}

namespace {

using Cex = std::vector<Counterexample>;
using Result = std::optional<Cex>;

bool two_delta_u(const RingProfile& p) { return unit_class_check(p, UnitClass::two_delta_u).verdict; }
bool delta_u(const RingProfile& p) { return unit_class_check(p, UnitClass::delta_u).verdict; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

WitnessEntry entry(const FiniteRing& r, std::string role, Element x) {
  return WitnessEntry{std::move(role), x, r.element_name(x)};
}

/// All reports must agree; otherwise one counterexample listing every side,
/// carrying the witness of the first false side.
Cex agree(const RingProfile& p, const std::vector<CheckReport>& sides) {
  const bool first = sides.front().verdict;
  if (std::all_of(sides.begin(), sides.end(), [&](const CheckReport& r) { return r.verdict == first; })) return {};
  Counterexample c;
  c.ring = p.ring().label();
  for (const auto& r : sides) {
    if (!c.detail.empty()) c.detail += ", ";
    c.detail += r.predicate + "=" + yes_no(r.verdict);
  }
  for (const auto& r : sides)
    if (!r.verdict) {
      c.witness = r.witness;
      break;
    }
  return {c};
}

CheckReport named(std::string name, bool verdict) {
  CheckReport r;
  r.predicate = std::move(name);
  r.verdict = verdict;
  return r;
}

Cex single(const RingProfile& p, std::string detail, std::vector<WitnessEntry> witness = {}) {
  return {Counterexample{p.ring().label(), std::move(detail), std::move(witness)}};
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// p when n = p^k with k >= 1, else 0.
std::size_t prime_power_base(std::size_t n) {
  for (std::size_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
  }
  return 0;
}

bool is_kind(const RingExpr& e, ExprKind k) { return e.kind == k; }

// -- ideal enumeration ---------------------------------------------------------

/// Every two-sided ideal contained in `within` (itself an ideal), as sums of
/// principal ideals.
std::vector<ElementSet> ideals_inside(const FiniteRing& r, const ElementSet& within) {
  std::vector<ElementSet> principal;
  std::set<std::vector<Element>> seen_principal;
  within.for_each([&](Element a) {
    ElementSet g(r.order());
    g.insert(a);
    ElementSet p = ideal_generated(r, g);
    if (seen_principal.insert(p.members()).second) principal.push_back(std::move(p));
  });
  std::vector<ElementSet> ideals;
  std::set<std::vector<Element>> seen;
  ElementSet zero(r.order());
  zero.insert(r.zero());
  ideals.push_back(zero);
  seen.insert(zero.members());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (const auto& p : principal) {
      if (p.is_subset_of(ideals[i])) continue;
      ElementSet s = ideal_sum(r, ideals[i], p);
      if (seen.insert(s.members()).second) ideals.push_back(std::move(s));
    }
  }
  return ideals;
}

// -- individual checks ---------------------------------------------------------

Result check_oracle_delta(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  const ElementSet oracle = delta_via_unit_subring(p.ring());
  if (oracle == p.delta()) return Cex{};
  ElementSet diff = (oracle - p.delta()) | (p.delta() - oracle);
  return single(p, "delta_set differs from J(T) on " + std::to_string(diff.size()) + " element(s)",
                {entry(p.ring(), "differs", diff.members().front())});
}

Result check_2_1(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  if (!delta_u(p)) return Cex{};
  const FiniteRing& r = p.ring();
  for (Element u : p.unit_list())
    for (Element v : p.unit_list()) {
      const Element s = r.add(u, v);
      if (!p.delta().contains(s)) return single(p, "u1 + u2 outside Delta", {entry(r, "u1", u), entry(r, "u2", v)});
      if (p.idempotents().contains(s) && s != r.zero()) {
        return single(p, "u1 + u2 is a nonzero idempotent", {entry(r, "u1", u), entry(r, "u2", v)});
      }
    }
  const CheckReport uuc = unit_class_check(p, UnitClass::uuc);
  if (!uuc.verdict) return single(p, "not UUC", uuc.witness);
  return Cex{};
}

Cex no_units_summing_to_one(const RingProfile& p, const std::string& where) {
  const FiniteRing& r = p.ring();
  for (Element u : p.unit_list()) {
    const Element v = r.sub(r.one(), u);
    if (p.units().contains(v)) return single(p, "u1 + u2 = 1 in " + where, {entry(r, "u1", u), entry(r, "u2", v)});
  }
  return {};
}

Result check_2_2(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  if (!delta_u(p)) return Cex{};
  Cex out = no_units_summing_to_one(p, "R");
  if (!out.empty()) return out;
  out = no_units_summing_to_one(p.radical_quotient_profile(), "R/J(R)");
  for (auto& c : out) c.ring = p.ring().label();
  return out;
}

Result check_2_4(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  const RingProfile& q = p.radical_quotient_profile();
  CheckReport boolean_q = structural_check(q, StructuralKind::boolean);
  boolean_q.predicate = "boolean(R/J)";
  boolean_q.witness.clear();
  CheckReport uu_q = unit_class_check(q, UnitClass::uu);
  uu_q.predicate = "uu(R/J)";
  uu_q.witness.clear();
  return agree(p, {unit_class_check(p, UnitClass::delta_u), boolean_q, unit_class_check(p, UnitClass::uj), uu_q});
}

Result check_2_8(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  return agree(p, {unit_class_check(p, UnitClass::delta_u), unit_class_check(p, UnitClass::uj),
                   unit_class_check(p, UnitClass::uu)});
}

Result check_2_9(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  return agree(p, {unit_class_check(p, UnitClass::delta_u), clean_check(p, CleanKind::j_clean)});
}

Result check_2_11(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  if (!delta_u(p)) return Cex{};
  const CheckReport pair = jacobson_pair_check(p);
  if (!pair.verdict) return single(p, "1-ab and 1-ba disagree on Delta membership", pair.witness);
  return Cex{};
}

Result check_3_1(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  bool all = true;
  std::string detail;
  for (const auto& c : e.children) {
    const bool v = two_delta_u(cache.get(c));
    all = all && v;
    detail += print_ring_expr(c) + "=" + yes_no(v) + " ";
  }
  const bool whole = two_delta_u(p);
  if (whole == all) return Cex{};
  return single(p, "2-delta-u(product)=" + yes_no(whole) + " but factors: " + detail);
}

Result check_3_5(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  const bool whole = two_delta_u(p);
  for (const ElementSet& ideal : ideals_inside(p.ring(), p.jacobson())) {
    const Quotient q = quotient_ring(p.ring_ptr(), ideal);
    const RingProfile qp(q.ring, cache.overrides());
    if (two_delta_u(qp) != whole) {
      const auto gens = ideal.members();
      return single(p, "2-delta-u(R)=" + yes_no(whole) + " but not for R/I with |I|=" + std::to_string(ideal.size()),
                    {entry(p.ring(), "ideal element", gens.back())});
    }
  }
  return Cex{};
}

// Factor rings whose units lift inherit 2-delta-u. Every proper ideal is
// tried, not only those inside J.
Result check_3_2(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  if (!two_delta_u(p)) return std::nullopt;
  const FiniteRing& r = p.ring();
  for (const ElementSet& ideal : ideals_inside(r, ElementSet::full(r.order()))) {
    if (ideal.size() == r.order()) continue;
    const Quotient q = quotient_ring(p.ring_ptr(), ideal);
    if (non_lifting_unit(q.projection)) continue;
    const RingProfile qp(q.ring, cache.overrides());
    if (!two_delta_u(qp)) {
      return single(p, "R/I is not 2-delta-u although units lift, |I|=" + std::to_string(ideal.size()),
                    {entry(r, "ideal element", ideal.members().back())});
    }
  }
  return Cex{};
}

Result check_3_7(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  if (!two_delta_u(p)) return Cex{};
  for (Element idem : p.idempotent_list()) {
    if (idem == p.ring().zero()) continue;
    const InducedRing corner = corner_ring(p.ring(), idem);
    const RingProfile cp(corner.ring, cache.overrides());
    if (!two_delta_u(cp)) return single(p, "corner eRe is not 2-delta-u", {entry(p.ring(), "idempotent", idem)});
  }
  return Cex{};
}

/// [[0,1],[1,1]] over the base ring, as an element of M(2, base).
Element standard_witness(const FiniteRing& base) {
  const std::size_t b = base.order();
  const std::size_t z = base.zero();
  const std::size_t o = base.one();
  return static_cast<Element>(((z * b + o) * b + o) * b + o);
}

Result check_3_8(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  const FiniteRing& r = p.ring();
  const CheckReport rep = unit_class_check(p, UnitClass::two_delta_u);
  if (rep.verdict) return single(p, "matrix ring reported 2-delta-u");
  if (!witness_is_sound(r, rep)) return single(p, "witness does not re-validate", rep.witness);
  if (e.numbers[0] != 2) return Cex{};

  const Element a = standard_witness(*build_ring(e.children[0]));
  const Element a2_minus_1 = r.sub(r.mul(a, a), r.one());
  CheckReport fixed;
  fixed.subject = r.label();
  fixed.predicate = "2-delta-u";
  fixed.verdict = false;
  fixed.witness = {entry(r, "unit", a), entry(r, "u^2-1", a2_minus_1)};
  if (a2_minus_1 != a) return single(p, "A^2 - I differs from A for A = [[0,1],[1,1]]", fixed.witness);
  if (!witness_is_sound(r, fixed)) return single(p, "A = [[0,1],[1,1]] is rejected as a witness", fixed.witness);
  return Cex{};
}

std::string note_3_8(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  const FiniteRing& r = p.ring();
  const CheckReport rep = unit_class_check(p, UnitClass::two_delta_u);
  std::string line = r.label() + ": not 2-delta-u, witness";
  for (const auto& w : rep.witness) line += " " + w.role + "=" + w.display;
  if (e.numbers[0] == 2) {
    const Element a = standard_witness(*build_ring(e.children[0]));
    line += "; A=" + r.element_name(a) + " gives A^2-I=" + r.element_name(r.sub(r.mul(a, a), r.one())) +
            " outside Delta";
  }
  return line;
}

Result check_3_15(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  const FiniteRing& r = p.ring();
  const bool two_in_delta = p.delta().contains(r.multiple_of_one(2));
  bool square_closed = true;
  for (std::size_t x = 0; x < r.order() && square_closed; ++x) {
    const auto a = static_cast<Element>(x);
    if (p.delta().contains(r.mul(a, a)) && !p.delta().contains(a)) square_closed = false;
  }
  return agree(p, {unit_class_check(p, UnitClass::delta_u),
                   named("2-in-delta and 2-delta-u and square-closed",
                         two_in_delta && two_delta_u(p) && square_closed)});
}

Result check_3_13(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  if (!regularity_check(p, RegularityKind::regular).verdict) return std::nullopt;
  const bool t = two_delta_u(p);
  return agree(p, {unit_class_check(p, UnitClass::two_delta_u), structural_check(p, StructuralKind::tripotent),
                   named("unit-regular and 2-delta-u", t && regularity_check(p, RegularityKind::unit_regular).verdict)});
}

Result check_3_16(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  return agree(p, {unit_class_check(p, UnitClass::two_delta_u), clean_check(p, CleanKind::semi_tripotent)});
}

Result check_3_17(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  if (!two_delta_u(p)) return Cex{};
  for (const CheckReport& rep : {regularity_check(p, RegularityKind::semiregular), clean_check(p, CleanKind::exchange),
                                 clean_check(p, CleanKind::clean)}) {
    if (!rep.verdict) return single(p, "2-delta-u but not " + rep.predicate, rep.witness);
  }
  return Cex{};
}

Result check_3_18(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  return agree(p, {unit_class_check(p, UnitClass::two_delta_u), clean_check(p, CleanKind::strongly_two_nil_clean)});
}

bool is_field_expr(const RingExpr& e) {
  return e.kind == ExprKind::galois || (e.kind == ExprKind::integers && is_prime(e.numbers[0]));
}

Result check_3_26(const RingExpr& e, ProfileCache& cache) {
  std::vector<RingExpr> factors;
  if (is_field_expr(e)) {
    factors.push_back(e);
  } else {
    factors = e.children;
  }
  bool all_small = true;
  for (const auto& f : factors) {
    const RingProfile& fp = cache.get(f);
    if (!structural_check(fp, StructuralKind::division).verdict) return std::nullopt;
    all_small = all_small && (fp.ring().order() == 2 || fp.ring().order() == 3);
  }
  const RingProfile& p = cache.get(e);
  if (two_delta_u(p) == all_small) return Cex{};
  return single(p, "2-delta-u=" + yes_no(two_delta_u(p)) + " but every factor in {Z2,Z3} is " + yes_no(all_small));
}

Result check_3_27(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  const FiniteRing& r = p.ring();
  if (!two_delta_u(p) || !p.delta().contains(r.multiple_of_one(2))) return Cex{};
  ElementSet squares(r.order());
  for (Element u : p.unit_list()) squares.insert(r.mul(u, u));
  const auto sq = squares.members();
  for (Element a : sq)
    for (Element b : sq) {
      const Element t = r.add(a, b);
      if (!p.delta().contains(t)) return single(p, "u^2 + v^2 outside Delta", {entry(r, "u^2", a), entry(r, "v^2", b)});
      if (t != r.zero() && p.idempotents().contains(t)) {
        return single(p, "u^2 + v^2 is a nonzero idempotent", {entry(r, "u^2", a), entry(r, "v^2", b)});
      }
    }
  return Cex{};
}

Result check_3_28(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  if (!two_delta_u(p)) return Cex{};
  const CheckReport df = structural_check(p, StructuralKind::dedekind_finite);
  if (!df.verdict) return single(p, "2-delta-u but not Dedekind-finite", df.witness);
  return Cex{};
}

/// 2-delta-u(extension) <=> 2-delta-u(base).
Cex preserve_reflect(const RingProfile& ext, const RingProfile& base) {
  const bool a = two_delta_u(ext);
  const bool b = two_delta_u(base);
  if (a == b) return {};
  return single(ext, "2-delta-u(extension)=" + yes_no(a) + ", 2-delta-u(" + base.ring().label() + ")=" + yes_no(b));
}

Result check_4_5(const RingExpr& e, ProfileCache& cache) {
  return preserve_reflect(cache.get(e), cache.get(e.children[0]));
}

Result check_4_5x(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& p = cache.get(e);
  const RingProfile& base = cache.get(e.children[0]);
  const std::size_t n = e.numbers[0];
  const std::size_t tail = guarded_power(base.ring().order(), n - 1);
  for (std::size_t code = 0; code < p.ring().order(); ++code) {
    const bool expected = base.delta().contains(code / tail);
    if (p.delta().contains(code) != expected) {
      return single(p, "Delta membership differs from the constant-term criterion",
                    {entry(p.ring(), "element", static_cast<Element>(code))});
    }
  }
  return Cex{};
}

Result check_dt(const RingExpr& e, ProfileCache& cache) {
  if (e.zero_module || (e.children.size() > 1 && e.children[1] != e.children[0])) return std::nullopt;
  return preserve_reflect(cache.get(e), cache.get(e.children[0]));
}

/// s in C(R) and s in J(R).
bool central_radical(const RingProfile& base, std::uint64_t s) {
  return s < base.ring().order() && base.center().contains(s) && base.jacobson().contains(s);
}

Result check_4_9(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& base = cache.get(e.children[0]);
  if (!central_radical(base, e.numbers[0])) return std::nullopt;
  return preserve_reflect(cache.get(e), base);
}

Result check_4_10(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& base = cache.get(e.children[0]);
  if (!central_radical(base, e.numbers[1])) return std::nullopt;
  return preserve_reflect(cache.get(e), base);
}

Result check_4_11(const RingExpr& e, ProfileCache& cache) {
  const RingProfile& base = cache.get(e.children[0]);
  if (e.numbers[0] != base.ring().zero()) return std::nullopt;
  // Trivial context with A = B = R: 2-delta-u iff A and B are.
  return preserve_reflect(cache.get(e), base);
}

struct GroupRingParts {
  const RingProfile& ring;
  const RingProfile& base;
  FiniteGroup group;
  std::size_t p;  // prime with |G| = p^k, or 0
};

GroupRingParts group_parts(const RingExpr& e, ProfileCache& cache) {
  FiniteGroup g = group_by_name(e.symbol);
  const std::size_t p = prime_power_base(g.order);
  return GroupRingParts{cache.get(e), cache.get(e.children[0]), std::move(g), p};
}

bool p_in_radical(const GroupRingParts& gp) {
  return gp.p != 0 && gp.base.jacobson().contains(gp.base.ring().multiple_of_one(gp.p));
}

Result check_g1(const RingExpr& e, ProfileCache& cache) {
  const auto gp = group_parts(e, cache);
  if (two_delta_u(gp.ring) && !two_delta_u(gp.base)) return single(gp.ring, "RG is 2-delta-u but R is not");
  return Cex{};
}

Result check_g2(const RingExpr& e, ProfileCache& cache) {
  const auto gp = group_parts(e, cache);
  if (!p_in_radical(gp) || !two_delta_u(gp.base)) return std::nullopt;
  const CheckReport rep = unit_class_check(gp.ring, UnitClass::two_delta_u);
  if (!rep.verdict) return single(gp.ring, "R is 2-delta-u, G a p-group with p in J(R), but RG is not", rep.witness);
  return Cex{};
}

Result check_g3(const RingExpr& e, ProfileCache& cache) {
  const auto gp = group_parts(e, cache);
  const FiniteRing& r = gp.ring.ring();
  if (!two_delta_u(gp.ring) || !gp.ring.delta().contains(r.multiple_of_one(2))) return Cex{};
  if (gp.group.order == 1 || gp.p == 2) return Cex{};
  return single(gp.ring, "RG is 2-delta-u with 2 in Delta(RG) but " + gp.group.label + " is not a 2-group");
}

Result check_l4_14(const RingExpr& e, ProfileCache& cache) {
  const auto gp = group_parts(e, cache);
  if (!p_in_radical(gp)) return std::nullopt;
  const Augmentation aug = augmentation(gp.ring.ring_ptr(), gp.base.ring_ptr(), gp.group);
  const ElementSet outside = aug.kernel - gp.ring.jacobson();
  if (outside.empty()) return Cex{};
  return single(gp.ring, "augmentation ideal not inside J(RG)", {entry(gp.ring.ring(), "element", outside.members().front())});
}

auto any_ring = [](const RingExpr&) { return true; };

std::vector<TheoremCheck> make_checks() {
  std::vector<TheoremCheck> c;
  auto add = [&](std::string id, std::string statement, std::string special, std::size_t max_order,
                 std::function<bool(const RingExpr&)> applies,
                 std::function<Result(const RingExpr&, ProfileCache&)> run) {
    c.push_back(TheoremCheck{std::move(id), std::move(statement), std::move(special), max_order, std::move(applies),
                             std::move(run)});
  };
  constexpr std::size_t all = 1024;
  add("TDELTA", "Delta(R) = J(T) with T the subring generated by U(R)", "two independent computations", 256, any_ring,
      check_oracle_delta);
  add("T2.1", "delta-u implies U(R)+U(R) in Delta(R), UUC, and (U(R)+U(R)) meets Id(R) only in 0", "", all, any_ring,
      check_2_1);
  add("T2.2", "delta-u implies u1 + u2 != 1 for units of R and of R/J(R)", "", all, any_ring, check_2_2);
  add("T2.4", "delta-u <=> R/J(R) Boolean <=> uj <=> R/J(R) uu",
      "finite rings are semi-potent and idempotents lift modulo J(R)", all, any_ring, check_2_4);
  add("T2.8", "delta-u <=> uj <=> uu", "finite rings are Artinian", all, any_ring, check_2_8);
  add("T2.9", "delta-u <=> j-clean", "finite rings", all, any_ring, check_2_9);
  add("T2.11", "delta-u implies 1-ab in Delta(R) <=> 1-ba in Delta(R)", "", all, any_ring, check_2_11);
  add("T3.1", "a direct product is 2-delta-u iff every factor is", "", all,
      [](const RingExpr& e) { return is_kind(e, ExprKind::product); }, check_3_1);
  add("T3.2", "R 2-delta-u and units of R/I lift to units of R imply R/I 2-delta-u",
      "factor rings R/I over every proper ideal I", 256, any_ring, check_3_2);
  add("T3.5/3.6", "for every ideal I in J(R): R is 2-delta-u iff R/I is", "ideals enumerated as sums of principal ideals",
      256, any_ring, check_3_5);
  add("T3.7", "2-delta-u passes to every corner eRe", "", 256, any_ring, check_3_7);
  add("T3.8", "M_n(R) is not 2-delta-u; A = [[0,1],[1,1]] has A^2 - I = A outside Delta", "", all,
      [](const RingExpr& e) { return is_kind(e, ExprKind::matrix) && e.numbers[0] >= 2; }, check_3_8);
  c.back().note = note_3_8;
  add("T3.13/3.14", "for regular R: 2-delta-u <=> x^3 = x <=> unit-regular 2-delta-u", "applies to rings verified regular",
      all, any_ring, check_3_13);
  add("T3.15", "delta-u <=> 2 in Delta(R), 2-delta-u, and x^2 in Delta(R) implies x in Delta(R)", "", all, any_ring,
      check_3_15);
  add("T3.16", "2-delta-u <=> semi-tripotent", "finite rings are exchange", all, any_ring, check_3_16);
  add("T3.17", "2-delta-u implies semiregular, exchange and clean", "finite rings", all, any_ring, check_3_17);
  add("T3.18", "2-delta-u <=> strongly 2-nil-clean", "finite rings have nil J(R)", all, any_ring, check_3_18);
  add("T3.26", "a product of fields is 2-delta-u iff every factor is Z2 or Z3", "finite fields only", all,
      [](const RingExpr& e) {
        if (is_field_expr(e)) return true;
        return is_kind(e, ExprKind::product) && std::all_of(e.children.begin(), e.children.end(), is_field_expr);
      },
      check_3_26);
  add("T3.27", "2-delta-u and 2 in Delta(R) imply U(R)^2 + U(R)^2 in Delta(R), meeting Id(R) only in 0", "", all,
      any_ring, check_3_27);
  add("T3.28", "2-delta-u implies Dedekind-finite", "vacuous for finite rings", all, any_ring, check_3_28);
  add("T4.5", "T(R,M), R[x;alpha]/<x^n> and T_n(R) are 2-delta-u iff R is", "", all,
      [](const RingExpr& e) {
        return is_kind(e, ExprKind::triv) || is_kind(e, ExprKind::trunc_skew) || is_kind(e, ExprKind::triangular);
      },
      check_4_5);
  add("T4.5x", "Delta(R[x;alpha]/<x^n>) = {a_0 + ... : a_0 in Delta(R)}", "finite truncation of the polynomial identity",
      all, [](const RingExpr& e) { return is_kind(e, ExprKind::trunc_skew); }, check_4_5x);
  add("TDT", "DT(R,R) is 2-delta-u iff R is", "", all, [](const RingExpr& e) { return is_kind(e, ExprKind::dt); },
      check_dt);
  add("T4.9", "for s in C(R) and J(R): K_s(R) is 2-delta-u iff R is", "", all,
      [](const RingExpr& e) { return is_kind(e, ExprKind::ks); }, check_4_9);
  add("T4.10", "for s in C(R) and J(R): M_n(R;s) is 2-delta-u iff R is", "", all,
      [](const RingExpr& e) { return is_kind(e, ExprKind::fmns); }, check_4_10);
  add("T4.11", "a trivial Morita context is 2-delta-u iff both corners are", "trivial contexts as K_0(R)", all,
      [](const RingExpr& e) { return is_kind(e, ExprKind::ks); }, check_4_11);
  auto group_rings = [](const RingExpr& e) { return is_kind(e, ExprKind::group_ring); };
  add("TG1", "RG 2-delta-u implies R 2-delta-u", "", all, group_rings, check_g1);
  add("TG2", "R 2-delta-u, G a p-group, p in J(R) imply RG 2-delta-u", "finite p-groups", all, group_rings, check_g2);
  add("TG3", "RG 2-delta-u and 2 in Delta(RG) imply G is a 2-group", "", all, group_rings, check_g3);
  add("TL4.14", "p in J(R), G a p-group imply ker(epsilon) in J(RG)", "finite p-groups", all, group_rings,
      check_l4_14);
  return c;
}

CheckOutcome run_with(const TheoremCheck& check, const std::vector<RingExpr>& rings, const HarnessConfig& config,
                      ProfileCache& cache) {
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome out;
  out.check_id = check.id;
  out.statement = check.statement;
  out.specialization = check.specialization;

  std::vector<const RingExpr*> scope;
  for (const auto& e : rings)
    if (check.applies(e)) scope.push_back(&e);

  std::vector<Result> results(scope.size());
  std::vector<std::string> notes(scope.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scope.size(); i = next++) {
      try {
        results[i] = check.run(*scope[i], cache);
        if (check.note && results[i] && results[i]->empty()) notes[i] = check.note(*scope[i], cache);
      } catch (const RingError& err) {
        results[i] = Cex{Counterexample{print_ring_expr(*scope[i]), std::string("error: ") + err.what(), {}}};
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(scope.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& r = results[i];
    if (!notes[i].empty()) out.notes.push_back(std::move(notes[i]));
    if (!r) continue;
    ++out.scope_size;
    for (auto& c : *r) out.counterexamples.push_back(std::move(c));
  }
  std::stable_sort(out.counterexamples.begin(), out.counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) { return a.ring < b.ring; });
  out.verdict = out.counterexamples.empty();
  if (out.scope_size == 0) out.warnings.push_back("empty ring set: vacuous pass");
  if (config.timing) {
    out.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

std::vector<RingExpr> scope_for(const TheoremCheck& check, std::size_t max_order) {
  return catalog_scope(std::min(max_order, check.max_order));
}

}  // namespace

const std::vector<TheoremCheck>& theorem_checks() {
  static const std::vector<TheoremCheck> checks = make_checks();
  return checks;
}

const TheoremCheck& find_check(std::string_view id) {
  for (const auto& c : theorem_checks()) {
    if (c.id == id) return c;
  }
  for (const auto& c : theorem_checks()) {
    // "T3.5/3.6" also answers to "T3.5" and "T3.6".
    const auto slash = c.id.find('/');
    if (slash == std::string::npos) continue;
    const std::string head = c.id.substr(0, slash);
    const std::string prefix = head.substr(0, head.find_first_of("0123456789"));
    if (id == head || id == prefix + c.id.substr(slash + 1)) return c;
  }
  throw UnknownCheckId("unknown check id '" + std::string(id) + "'");
}

CheckOutcome run_check(std::string_view id, const std::vector<RingExpr>& rings, const HarnessConfig& config) {
  const TheoremCheck& check = find_check(id);
  ProfileCache cache(config.overrides);
  return run_with(check, rings, config, cache);
}

CheckOutcome run_check_on_catalog(std::string_view id, const HarnessConfig& config) {
  const TheoremCheck& check = find_check(id);
  ProfileCache cache(config.overrides);
  return run_with(check, scope_for(check, config.max_order), config, cache);
}

bool RunSummary::all_passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return o.verdict; });
}

RunSummary run_all(const HarnessConfig& config) {
  RunSummary summary;
  ProfileCache cache(config.overrides);
  for (const auto& check : theorem_checks()) {
    summary.outcomes.push_back(run_with(check, scope_for(check, config.max_order), config, cache));
  }
  return summary;
}

std::vector<RingExpr> catalog_scope(std::size_t max_order) {
  std::vector<RingExpr> out;
  for (const auto& entry : catalog()) {
    try {
      if (build_ring(entry.expr)->order() <= max_order) out.push_back(entry.expr);
    } catch (const OrderGuardExceeded&) {
      // Larger than the current guard, so outside any scope anyway.
    }
  }
  return out;
}

std::vector<std::string> search_classes(const std::vector<std::string>& include,
                                        const std::vector<std::string>& exclude, std::size_t max_order,
                                        bool extended) {
  std::vector<const RingClassInfo*> inc;
  std::vector<const RingClassInfo*> exc;
  for (const auto& n : include) inc.push_back(&find_class(n));
  for (const auto& n : exclude) exc.push_back(&find_class(n));

  std::vector<RingExpr> candidates;
  std::set<std::string> seen;
  auto consider = [&](RingExpr e) {
    if (seen.insert(print_ring_expr(e)).second) candidates.push_back(std::move(e));
  };
  for (auto& e : catalog_scope(max_order)) consider(std::move(e));
  if (extended) {
    for (std::size_t m = 2; m <= max_order; ++m) consider(parse_ring_expr("Z" + std::to_string(m)));
    for (std::size_t a = 2; a * a <= max_order; ++a)
      for (std::size_t b = a; a * b <= max_order; ++b)
        consider(parse_ring_expr("Prod(Z" + std::to_string(a) + ",Z" + std::to_string(b) + ")"));
  }

  std::vector<std::pair<std::size_t, std::string>> hits;
  for (const auto& e : candidates) {
    const RingPtr ring = build_ring(e);
    const RingProfile profile(ring);
    const bool ok = std::all_of(inc.begin(), inc.end(), [&](auto* c) { return c->evaluate(profile).verdict; }) &&
                    std::none_of(exc.begin(), exc.end(), [&](auto* c) { return c->evaluate(profile).verdict; });
    if (ok) hits.emplace_back(ring->order(), ring->label());
  }
  std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (auto& h : hits) out.push_back(std::move(h.second));
  return out;
}

}  // namespace deltaring
