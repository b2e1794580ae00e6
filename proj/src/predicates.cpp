#include "deltaring/predicates.hpp"

#include <algorithm>
#include <map>

#include "deltaring/errors.hpp"
#include "deltaring/subsets.hpp"

namespace deltaring {

namespace {

WitnessEntry entry(const FiniteRing& r, std::string role, Element x) {
  return WitnessEntry{std::move(role), x, r.element_name(x)};
}

CheckReport start(const RingProfile& p, std::string predicate) {
  CheckReport rep;
  rep.subject = p.ring().label();
  rep.predicate = std::move(predicate);
  rep.verdict = true;
  return rep;
}

CheckReport fail(CheckReport rep, std::vector<WitnessEntry> witness) {
  rep.verdict = false;
  rep.witness = std::move(witness);
  return rep;
}

std::string unit_class_name(UnitClass cls) {
  switch (cls) {
    case UnitClass::uj: return "uj";
    case UnitClass::uu: return "uu";
    case UnitClass::delta_u: return "delta-u";
    case UnitClass::uq: return "uq";
    case UnitClass::unj: return "unj";
    case UnitClass::uuc: return "uuc";
    case UnitClass::two_uj: return "2-uj";
    case UnitClass::two_uu: return "2-uu";
    case UnitClass::two_delta_u: return "2-delta-u";
    case UnitClass::two_uq: return "2-uq";
    case UnitClass::two_unj: return "2-unj";
  }
  return "?";
}

std::string regularity_name(RegularityKind k) {
  switch (k) {
    case RegularityKind::regular: return "regular";
    case RegularityKind::unit_regular: return "unit-regular";
    case RegularityKind::strongly_regular: return "strongly-regular";
    case RegularityKind::pi_regular: return "pi-regular";
    case RegularityKind::strongly_pi_regular: return "strongly-pi-regular";
    case RegularityKind::semiregular: return "semiregular";
  }
  return "?";
}

std::string clean_name(CleanKind k) {
  switch (k) {
    case CleanKind::clean: return "clean";
    case CleanKind::exchange: return "exchange";
    case CleanKind::j_clean: return "j-clean";
    case CleanKind::delta_clean: return "delta-clean";
    case CleanKind::strongly_nil_clean: return "strongly-nil-clean";
    case CleanKind::strongly_two_nil_clean: return "strongly-2-nil-clean";
    case CleanKind::semi_tripotent: return "semi-tripotent";
  }
  return "?";
}

std::string structural_name(StructuralKind k) {
  switch (k) {
    case StructuralKind::boolean: return "boolean";
    case StructuralKind::two_boolean: return "2-boolean";
    case StructuralKind::tripotent: return "tripotent";
    case StructuralKind::reduced: return "reduced";
    case StructuralKind::abelian: return "abelian";
    case StructuralKind::dedekind_finite: return "dedekind-finite";
    case StructuralKind::local: return "local";
    case StructuralKind::division: return "division";
    case StructuralKind::semisimple: return "semisimple";
    case StructuralKind::semipotent: return "semipotent";
    case StructuralKind::potent: return "potent";
    case StructuralKind::two_primal: return "2-primal";
  }
  return "?";
}

bool is_squared(UnitClass cls) {
  switch (cls) {
    case UnitClass::two_uj:
    case UnitClass::two_uu:
    case UnitClass::two_delta_u:
    case UnitClass::two_uq:
    case UnitClass::two_unj: return true;
    default: return false;
  }
}

const ElementSet& unit_class_set(const RingProfile& p, UnitClass cls) {
  switch (cls) {
    case UnitClass::uj:
    case UnitClass::two_uj: return p.jacobson();
    case UnitClass::uu:
    case UnitClass::two_uu: return p.nilpotents();
    case UnitClass::delta_u:
    case UnitClass::two_delta_u: return p.delta();
    case UnitClass::uq:
    case UnitClass::two_uq: return p.quasinilpotents();
    case UnitClass::unj:
    case UnitClass::two_unj: return p.nil_plus_jacobson();
    case UnitClass::uuc: break;
  }
  throw std::logic_error("unit_class_set: no set for uuc");
}

/// Smallest preimage of each quotient element.
std::vector<Element> smallest_preimages(const Quotient& q) {
  std::vector<Element> rep(q.ring->order(), 0);
  std::vector<char> seen(q.ring->order(), 0);
  for (std::size_t a = 0; a < q.projection.map.size(); ++a) {
    const Element c = q.projection.map[a];
    if (!seen[c]) {
      seen[c] = 1;
      rep[c] = static_cast<Element>(a);
    }
  }
  return rep;
}

/// An idempotent of R/J (as its smallest preimage) with no idempotent
/// preimage, if any.
std::optional<Element> non_lifting_idempotent(const RingProfile& p) {
  const Quotient& q = p.radical_quotient();
  const RingProfile& qp = p.radical_quotient_profile();
  ElementSet lifted(q.ring->order());
  for (Element e : p.idempotent_list()) lifted.insert(q.projection.map[e]);
  const auto reps = smallest_preimages(q);
  for (Element e : qp.idempotent_list()) {
    if (!lifted.contains(e)) return reps[e];
  }
  return std::nullopt;
}

ElementSet right_multiples(const FiniteRing& r, Element a) {
  ElementSet s(r.order());
  for (Element x : r.mul_row(a)) s.insert(x);
  return s;
}

/// Distinct powers a, a^2, ... (the sequence is eventually periodic).
std::vector<Element> distinct_powers(const FiniteRing& r, Element a) {
  std::vector<Element> out;
  ElementSet seen(r.order());
  for (Element p = a; !seen.contains(p); p = r.mul(p, a)) {
    seen.insert(p);
    out.push_back(p);
  }
  return out;
}

bool has_inner_inverse(const FiniteRing& r, Element a, const ElementSet* restrict_to) {
  for (std::size_t x = 0; x < r.order(); ++x) {
    if (restrict_to && !restrict_to->contains(x)) continue;
    if (r.mul(r.mul(a, static_cast<Element>(x)), a) == a) return true;
  }
  return false;
}

bool in_square_right_ideal(const FiniteRing& r, Element a) {
  const Element a2 = r.mul(a, a);
  for (Element v : r.mul_row(a2))
    if (v == a) return true;
  return false;
}

bool pi_regular_element(const FiniteRing& r, Element a) {
  for (Element p : distinct_powers(r, a))
    if (has_inner_inverse(r, p, nullptr)) return true;
  return false;
}

bool strongly_pi_regular_element(const FiniteRing& r, Element a) {
  for (Element p : distinct_powers(r, a)) {
    const Element next = r.mul(p, a);
    for (Element v : r.mul_row(next))
      if (v == p) return true;
  }
  return false;
}

bool exchange_element(const FiniteRing& r, const std::vector<Element>& idem, Element a) {
  const ElementSet ar = right_multiples(r, a);
  const ElementSet comp = right_multiples(r, r.sub(r.one(), a));
  for (Element e : idem)
    if (ar.contains(e) && comp.contains(r.sub(r.one(), e))) return true;
  return false;
}

bool commute(const FiniteRing& r, Element a, Element b) { return r.mul(a, b) == r.mul(b, a); }

bool strongly_two_nil_clean_element(const FiniteRing& r, const ElementSet& nil, const std::vector<Element>& idem,
                                    Element a) {
  std::vector<Element> local;
  for (Element e : idem)
    if (commute(r, e, a)) local.push_back(e);
  for (std::size_t i = 0; i < local.size(); ++i) {
    const Element e = local[i];
    for (std::size_t j = i; j < local.size(); ++j) {
      const Element f = local[j];
      if (!commute(r, e, f)) continue;
      const Element q = r.sub(r.sub(a, e), f);
      if (nil.contains(q) && commute(r, q, e) && commute(r, q, f)) return true;
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

CheckReport unit_class_check(const RingProfile& p, UnitClass cls) {
  const FiniteRing& r = p.ring();
  CheckReport rep = start(p, unit_class_name(cls));

  if (cls == UnitClass::uuc) {
    rep.notes = "counts decompositions u = e + v (e idempotent, v unit); u = 0 + u counts as one";
    for (Element u : p.unit_list()) {
      for (Element e : p.idempotent_list()) {
        if (e == r.zero()) continue;
        const Element v = r.sub(u, e);
        if (p.units().contains(v)) {
          return fail(std::move(rep), {entry(r, "unit", u), entry(r, "idempotent", e), entry(r, "unit-part", v)});
        }
      }
    }
    return rep;
  }

  const ElementSet& target = unit_class_set(p, cls);
  if (cls == UnitClass::uq || cls == UnitClass::two_uq) rep.notes = kQuasinilpotentDefinition;
  if (cls == UnitClass::unj || cls == UnitClass::two_unj) rep.notes = "Nil(R) + J(R) taken as the literal sumset";

  const bool squared = is_squared(cls);
  for (Element u : p.unit_list()) {
    const Element v = squared ? r.mul(u, u) : u;
    const Element s = r.sub(v, r.one());
    if (!target.contains(s)) {
      return fail(std::move(rep), {entry(r, "unit", u), entry(r, squared ? "u^2-1" : "u-1", s)});
    }
  }
  if (!squared) {
    for (Element s : target.members()) {
      const Element t = r.add(r.one(), s);
      if (!p.units().contains(t)) {
        return fail(std::move(rep), {entry(r, "element", s), entry(r, "1+element", t)});
      }
    }
  }
  return rep;
}

CheckReport regularity_check(const RingProfile& p, RegularityKind kind) {
  const FiniteRing& r = p.ring();
  CheckReport rep = start(p, regularity_name(kind));

  if (kind == RegularityKind::semiregular) {
    const RingProfile& qp = p.radical_quotient_profile();
    const CheckReport quotient = regularity_check(qp, RegularityKind::regular);
    const auto reps = smallest_preimages(p.radical_quotient());
    if (!quotient.verdict) {
      return fail(std::move(rep), {entry(r, "non-regular mod J", reps[quotient.witness.front().element])});
    }
    if (auto e = non_lifting_idempotent(p)) {
      return fail(std::move(rep), {entry(r, "non-lifting idempotent mod J", *e)});
    }
    return rep;
  }

  for (std::size_t x = 0; x < r.order(); ++x) {
    const auto a = static_cast<Element>(x);
    bool ok = false;
    switch (kind) {
      case RegularityKind::regular: ok = has_inner_inverse(r, a, nullptr); break;
      case RegularityKind::unit_regular: ok = has_inner_inverse(r, a, &p.units()); break;
      case RegularityKind::strongly_regular: ok = in_square_right_ideal(r, a); break;
      case RegularityKind::pi_regular: ok = pi_regular_element(r, a); break;
      case RegularityKind::strongly_pi_regular: ok = strongly_pi_regular_element(r, a); break;
      case RegularityKind::semiregular: break;
    }
    if (!ok) return fail(std::move(rep), {entry(r, "a", a)});
  }
  return rep;
}

CheckReport clean_check(const RingProfile& p, CleanKind kind) {
  const FiniteRing& r = p.ring();
  CheckReport rep = start(p, clean_name(kind));
  const auto& idem = p.idempotent_list();

  for (std::size_t x = 0; x < r.order(); ++x) {
    const auto a = static_cast<Element>(x);
    bool ok = false;
    switch (kind) {
      case CleanKind::clean:
        ok = std::any_of(idem.begin(), idem.end(), [&](Element e) { return p.units().contains(r.sub(a, e)); });
        break;
      case CleanKind::exchange: ok = exchange_element(r, idem, a); break;
      case CleanKind::j_clean:
        ok = std::any_of(idem.begin(), idem.end(), [&](Element e) { return p.jacobson().contains(r.sub(a, e)); });
        break;
      case CleanKind::delta_clean:
        ok = std::any_of(idem.begin(), idem.end(), [&](Element e) { return p.delta().contains(r.sub(a, e)); });
        break;
      case CleanKind::strongly_nil_clean:
        ok = std::any_of(idem.begin(), idem.end(), [&](Element e) {
          const Element q = r.sub(a, e);
          return p.nilpotents().contains(q) && commute(r, e, q);
        });
        break;
      case CleanKind::strongly_two_nil_clean:
        ok = strongly_two_nil_clean_element(r, p.nilpotents(), idem, a);
        break;
      case CleanKind::semi_tripotent: {
        const auto& trip = p.tripotents();
        trip.for_each([&](Element e) {
          if (!ok && p.jacobson().contains(r.sub(a, e))) ok = true;
        });
        break;
      }
    }
    if (!ok) return fail(std::move(rep), {entry(r, "a", a)});
  }
  return rep;
}

CheckReport structural_check(const RingProfile& p, StructuralKind kind) {
  const FiniteRing& r = p.ring();
  const std::size_t n = r.order();
  CheckReport rep = start(p, structural_name(kind));

  auto elementwise = [&](auto&& holds) -> CheckReport {
    for (std::size_t x = 0; x < n; ++x) {
      const auto a = static_cast<Element>(x);
      if (!holds(a)) return fail(std::move(rep), {entry(r, "a", a)});
    }
    return std::move(rep);
  };

  switch (kind) {
    case StructuralKind::boolean:
      return elementwise([&](Element a) { return r.mul(a, a) == a; });
    case StructuralKind::two_boolean:
      return elementwise([&](Element a) {
        const Element sq = r.mul(a, a);
        return r.mul(sq, sq) == sq;
      });
    case StructuralKind::tripotent:
      return elementwise([&](Element a) { return r.mul(r.mul(a, a), a) == a; });
    case StructuralKind::reduced:
      return elementwise([&](Element a) { return a == r.zero() || !p.nilpotents().contains(a); });
    case StructuralKind::abelian:
      for (Element e : p.idempotent_list()) {
        if (p.center().contains(e)) continue;
        for (std::size_t x = 0; x < n; ++x) {
          const auto y = static_cast<Element>(x);
          if (!commute(r, e, y)) return fail(std::move(rep), {entry(r, "idempotent", e), entry(r, "element", y)});
        }
      }
      return rep;
    case StructuralKind::dedekind_finite:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const auto a = static_cast<Element>(x);
          const auto b = static_cast<Element>(y);
          if (r.mul(a, b) == r.one() && r.mul(b, a) != r.one()) {
            return fail(std::move(rep), {entry(r, "a", a), entry(r, "b", b)});
          }
        }
      return rep;
    case StructuralKind::local:
      // Units lift modulo J, so a + J is a unit of R/J exactly when a is a unit.
      return elementwise([&](Element a) { return p.jacobson().contains(a) || p.units().contains(a); });
    case StructuralKind::division:
      return elementwise([&](Element a) { return a == r.zero() || p.units().contains(a); });
    case StructuralKind::semisimple:
      return elementwise([&](Element a) { return a == r.zero() || !p.jacobson().contains(a); });
    case StructuralKind::semipotent:
    case StructuralKind::potent: {
      rep.notes = "semipotency tested on principal right ideals aR for a outside J(R)";
      for (std::size_t x = 0; x < n; ++x) {
        const auto a = static_cast<Element>(x);
        if (p.jacobson().contains(a)) continue;
        const ElementSet ar = right_multiples(r, a);
        const bool found = std::any_of(p.idempotent_list().begin(), p.idempotent_list().end(),
                                       [&](Element e) { return e != r.zero() && ar.contains(e); });
        if (!found) return fail(std::move(rep), {entry(r, "a", a)});
      }
      if (kind == StructuralKind::potent) {
        if (auto e = non_lifting_idempotent(p)) {
          return fail(std::move(rep), {entry(r, "non-lifting idempotent mod J", *e)});
        }
      }
      return rep;
    }
    case StructuralKind::two_primal: {
      const ElementSet extra = p.nilpotents() - p.prime_radical();
      if (!extra.empty()) return fail(std::move(rep), {entry(r, "a", extra.members().front())});
      return rep;
    }
  }
  return rep;
}

CheckReport jacobson_pair_check(const RingProfile& p) {
  const FiniteRing& r = p.ring();
  CheckReport rep = start(p, "jacobson-pair");
  const bool hypothesis = unit_class_check(p, UnitClass::delta_u).verdict;
  rep.notes = std::string("hypothesis (delta-u): ") + (hypothesis ? "holds" : "fails");
  const ElementSet& delta = p.delta();
  for (std::size_t x = 0; x < r.order(); ++x)
    for (std::size_t y = 0; y < r.order(); ++y) {
      const auto a = static_cast<Element>(x);
      const auto b = static_cast<Element>(y);
      const bool lhs = delta.contains(r.sub(r.one(), r.mul(a, b)));
      const bool rhs = delta.contains(r.sub(r.one(), r.mul(b, a)));
      if (lhs != rhs) return fail(std::move(rep), {entry(r, "a", a), entry(r, "b", b)});
    }
  return rep;
}

// ---------------------------------------------------------------------------

const std::vector<RingClassInfo>& ring_classes() {
  static const std::vector<RingClassInfo> classes = [] {
    std::vector<RingClassInfo> out;
    auto unit = [&](UnitClass c, std::string def) {
      out.push_back({unit_class_name(c), std::move(def), [c](const RingProfile& p) { return unit_class_check(p, c); }});
    };
    unit(UnitClass::uj, "U(R) = 1 + J(R)");
    unit(UnitClass::uu, "U(R) = 1 + Nil(R)");
    unit(UnitClass::delta_u, "U(R) = 1 + Delta(R)");
    unit(UnitClass::uq, "U(R) = 1 + QN(R)");
    unit(UnitClass::unj, "U(R) = 1 + Nil(R) + J(R)");
    unit(UnitClass::uuc, "every unit is uniquely an idempotent plus a unit");
    unit(UnitClass::two_uj, "u^2 - 1 in J(R) for every unit u");
    unit(UnitClass::two_uu, "u^2 - 1 nilpotent for every unit u");
    unit(UnitClass::two_delta_u, "u^2 - 1 in Delta(R) for every unit u");
    unit(UnitClass::two_uq, "u^2 - 1 in QN(R) for every unit u");
    unit(UnitClass::two_unj, "u^2 - 1 in Nil(R) + J(R) for every unit u");

    auto regular = [&](RegularityKind k, std::string def) {
      out.push_back({regularity_name(k), std::move(def), [k](const RingProfile& p) { return regularity_check(p, k); }});
    };
    regular(RegularityKind::regular, "a = axa for some x");
    regular(RegularityKind::unit_regular, "a = axa for some unit x");
    regular(RegularityKind::strongly_regular, "a in a^2 R");
    regular(RegularityKind::pi_regular, "a^n in a^n R a^n for some n >= 1");
    regular(RegularityKind::strongly_pi_regular, "a^n in a^(n+1) R for some n >= 1");
    regular(RegularityKind::semiregular, "R/J(R) regular and idempotents lift modulo J(R)");

    auto clean = [&](CleanKind k, std::string def) {
      out.push_back({clean_name(k), std::move(def), [k](const RingProfile& p) { return clean_check(p, k); }});
    };
    clean(CleanKind::clean, "every element is idempotent + unit");
    clean(CleanKind::exchange, "for each a some idempotent e in aR has 1 - e in (1 - a)R");
    clean(CleanKind::j_clean, "every element is idempotent + element of J(R)");
    clean(CleanKind::delta_clean, "every element is idempotent + element of Delta(R)");
    clean(CleanKind::strongly_nil_clean, "every element is e + q, e idempotent, q nilpotent, eq = qe");
    clean(CleanKind::strongly_two_nil_clean, "every element is e + f + q, e, f idempotent, q nilpotent, all commuting");
    clean(CleanKind::semi_tripotent, "every element is e + j with e^3 = e and j in J(R)");

    auto structural = [&](StructuralKind k, std::string def) {
      out.push_back(
          {structural_name(k), std::move(def), [k](const RingProfile& p) { return structural_check(p, k); }});
    };
    structural(StructuralKind::boolean, "x^2 = x for all x");
    structural(StructuralKind::two_boolean, "x^2 is idempotent for all x");
    structural(StructuralKind::tripotent, "x^3 = x for all x");
    structural(StructuralKind::reduced, "no nonzero nilpotents");
    structural(StructuralKind::abelian, "every idempotent is central");
    structural(StructuralKind::dedekind_finite, "ab = 1 implies ba = 1");
    structural(StructuralKind::local, "R/J(R) is a division ring");
    structural(StructuralKind::division, "every nonzero element is a unit");
    structural(StructuralKind::semisimple, "J(R) = 0 (finite rings)");
    structural(StructuralKind::semipotent, "aR contains a nonzero idempotent for every a outside J(R)");
    structural(StructuralKind::potent, "semipotent and idempotents lift modulo J(R)");
    structural(StructuralKind::two_primal, "prime radical equals Nil(R)");

    out.push_back({"jacobson-pair", "1 - ab in Delta(R) iff 1 - ba in Delta(R)",
                   [](const RingProfile& p) { return jacobson_pair_check(p); }});
    return out;
  }();
  return classes;
}

const RingClassInfo& find_class(std::string_view name) {
  for (const auto& c : ring_classes())
    if (c.name == name) return c;
  throw UnknownClass("unknown ring class '" + std::string(name) + "'");
}

CheckReport check_class(const RingProfile& profile, std::string_view name) {
  return find_class(name).evaluate(profile);
}

// ---------------------------------------------------------------------------
// Witness re-validation
// ---------------------------------------------------------------------------

namespace {

using direct::in_delta;
using direct::in_jacobson;
using direct::in_quasinilpotents;
using direct::is_nilpotent;
using direct::is_unit;

const WitnessEntry* role(const CheckReport& rep, std::string_view name) {
  for (const auto& w : rep.witness)
    if (w.role == name) return &w;
  return nullptr;
}

bool idempotent(const FiniteRing& r, Element e) { return r.mul(e, e) == e; }

bool exists_element(const FiniteRing& r, auto&& pred) {
  for (std::size_t x = 0; x < r.order(); ++x)
    if (pred(static_cast<Element>(x))) return true;
  return false;
}

bool in_named_set(const FiniteRing& r, std::string_view set, Element x) {
  if (set == "j") return in_jacobson(r, x);
  if (set == "nil") return is_nilpotent(r, x);
  if (set == "delta") return in_delta(r, x);
  if (set == "qn") return in_quasinilpotents(r, x);
  // Nil(R) + J(R)
  return exists_element(r, [&](Element q) { return is_nilpotent(r, q) && in_jacobson(r, r.sub(x, q)); });
}

std::string_view set_of(std::string_view predicate) {
  if (predicate.starts_with("2-")) predicate.remove_prefix(2);
  if (predicate == "uj") return "j";
  if (predicate == "uu") return "nil";
  if (predicate == "delta-u") return "delta";
  if (predicate == "uq") return "qn";
  if (predicate == "unj") return "nilj";
  return "";
}

/// Element outside J whose class mod J is not regular.
bool not_regular_mod_j(const FiniteRing& r, Element a) {
  return !exists_element(r, [&](Element x) { return in_jacobson(r, r.sub(r.mul(r.mul(a, x), a), a)); });
}

bool idempotent_mod_j_without_lift(const FiniteRing& r, Element a) {
  if (!in_jacobson(r, r.sub(r.mul(a, a), a))) return false;
  return !exists_element(r, [&](Element e) { return idempotent(r, e) && in_jacobson(r, r.sub(e, a)); });
}

}  // namespace

bool witness_is_sound(const FiniteRing& r, const CheckReport& rep) {
  if (rep.verdict) return true;
  if (rep.witness.empty()) return false;
  for (const auto& w : rep.witness)
    if (w.element >= r.order()) return false;
  const std::string& pred = rep.predicate;
  const Element a = rep.witness.front().element;

  if (pred == "uuc") {
    const auto* u = role(rep, "unit");
    const auto* e = role(rep, "idempotent");
    const auto* v = role(rep, "unit-part");
    return u && e && v && is_unit(r, u->element) && idempotent(r, e->element) && e->element != r.zero() &&
           is_unit(r, v->element) && r.add(e->element, v->element) == u->element;
  }
  if (const std::string_view set = set_of(pred); !set.empty()) {
    const bool squared = pred.starts_with("2-");
    if (const auto* u = role(rep, "unit")) {
      const auto* s = role(rep, squared ? "u^2-1" : "u-1");
      const Element base = squared ? r.mul(u->element, u->element) : u->element;
      return s && is_unit(r, u->element) && s->element == r.sub(base, r.one()) && !in_named_set(r, set, s->element);
    }
    const auto* s = role(rep, "element");
    return !squared && s && in_named_set(r, set, s->element) && !is_unit(r, r.add(r.one(), s->element));
  }
  if (pred == "regular") return !exists_element(r, [&](Element x) { return r.mul(r.mul(a, x), a) == a; });
  if (pred == "unit-regular") {
    return !exists_element(r, [&](Element x) { return is_unit(r, x) && r.mul(r.mul(a, x), a) == a; });
  }
  if (pred == "strongly-regular") {
    return !exists_element(r, [&](Element x) { return r.mul(r.mul(a, a), x) == a; });
  }
  if (pred == "pi-regular" || pred == "strongly-pi-regular") {
    Element p = a;
    for (std::size_t k = 1; k <= r.order() + 1; ++k, p = r.mul(p, a)) {
      const Element next = r.mul(p, a);
      const bool ok = pred == "pi-regular" ? exists_element(r, [&](Element x) { return r.mul(r.mul(p, x), p) == p; })
                                           : exists_element(r, [&](Element x) { return r.mul(next, x) == p; });
      if (ok) return false;
    }
    return true;
  }
  if (pred == "semiregular" || pred == "potent") {
    if (rep.witness.front().role == "non-regular mod J") return not_regular_mod_j(r, a);
    if (rep.witness.front().role == "non-lifting idempotent mod J") return idempotent_mod_j_without_lift(r, a);
  }
  if (pred == "semipotent" || pred == "potent") {
    return !in_jacobson(r, a) && !exists_element(r, [&](Element x) {
      const Element e = r.mul(a, x);
      return e != r.zero() && idempotent(r, e);
    });
  }
  auto no_decomposition = [&](auto&& summand_ok) {
    return !exists_element(r, [&](Element e) { return idempotent(r, e) && summand_ok(e, r.sub(a, e)); });
  };
  if (pred == "clean") return no_decomposition([&](Element, Element v) { return is_unit(r, v); });
  if (pred == "j-clean") return no_decomposition([&](Element, Element v) { return in_jacobson(r, v); });
  if (pred == "delta-clean") return no_decomposition([&](Element, Element v) { return in_delta(r, v); });
  if (pred == "strongly-nil-clean") {
    return no_decomposition([&](Element e, Element q) { return is_nilpotent(r, q) && commute(r, e, q); });
  }
  if (pred == "strongly-2-nil-clean") {
    return !exists_element(r, [&](Element e) {
      return idempotent(r, e) && exists_element(r, [&](Element f) {
               const Element q = r.sub(r.sub(a, e), f);
               return idempotent(r, f) && commute(r, e, f) && commute(r, e, q) && commute(r, f, q) &&
                      is_nilpotent(r, q);
             });
    });
  }
  if (pred == "semi-tripotent") {
    return !exists_element(r, [&](Element e) { return r.mul(r.mul(e, e), e) == e && in_jacobson(r, r.sub(a, e)); });
  }
  if (pred == "exchange") {
    return !exists_element(r, [&](Element x) {
      const Element e = r.mul(a, x);
      if (!idempotent(r, e)) return false;
      const Element target = r.sub(r.one(), e);
      const Element comp = r.sub(r.one(), a);
      return exists_element(r, [&](Element y) { return r.mul(comp, y) == target; });
    });
  }
  if (pred == "boolean") return r.mul(a, a) != a;
  if (pred == "2-boolean") {
    const Element sq = r.mul(a, a);
    return r.mul(sq, sq) != sq;
  }
  if (pred == "tripotent") return r.mul(r.mul(a, a), a) != a;
  if (pred == "reduced") return a != r.zero() && is_nilpotent(r, a);
  if (pred == "abelian") {
    const auto* e = role(rep, "idempotent");
    const auto* y = role(rep, "element");
    return e && y && idempotent(r, e->element) && !commute(r, e->element, y->element);
  }
  if (pred == "dedekind-finite") {
    const auto* b = role(rep, "b");
    return b && r.mul(a, b->element) == r.one() && r.mul(b->element, a) != r.one();
  }
  if (pred == "local") return !in_jacobson(r, a) && !is_unit(r, a);
  if (pred == "division") return a != r.zero() && !is_unit(r, a);
  if (pred == "semisimple") return a != r.zero() && in_jacobson(r, a);
  if (pred == "2-primal") return is_nilpotent(r, a) && !prime_radical(r).contains(a);
  if (pred == "jacobson-pair") {
    const auto* b = role(rep, "b");
    if (!b) return false;
    return in_delta(r, r.sub(r.one(), r.mul(a, b->element))) != in_delta(r, r.sub(r.one(), r.mul(b->element, a)));
  }
  return false;
}

}  // namespace deltaring
