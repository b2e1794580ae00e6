#include "deltaring/subsets.hpp"

#include "deltaring/errors.hpp"

namespace deltaring {

std::vector<int> inverse_table(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  std::vector<int> inv(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (inv[a] >= 0) continue;
    const auto row = ring.mul_row(static_cast<Element>(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (row[b] == ring.one() && ring.mul(static_cast<Element>(b), static_cast<Element>(a)) == ring.one()) {
        inv[a] = static_cast<int>(b);
        inv[b] = static_cast<int>(a);
        break;
      }
    }
  }
  return inv;
}

ElementSet units(const FiniteRing& ring) {
  const auto inv = inverse_table(ring);
  ElementSet u(ring.order());
  for (std::size_t a = 0; a < inv.size(); ++a)
    if (inv[a] >= 0) u.insert(a);
  return u;
}

ElementSet idempotents(const FiniteRing& ring) {
  ElementSet s(ring.order());
  for (std::size_t a = 0; a < ring.order(); ++a) {
    const auto x = static_cast<Element>(a);
    if (ring.mul(x, x) == x) s.insert(a);
  }
  return s;
}

ElementSet nilpotents(const FiniteRing& ring) {
  // The nilpotency index never exceeds |R|, so a^|R| = 0 decides it.
  ElementSet s(ring.order());
  for (std::size_t a = 0; a < ring.order(); ++a)
    if (ring.pow(static_cast<Element>(a), ring.order()) == ring.zero()) s.insert(a);
  return s;
}

ElementSet tripotent_elements(const FiniteRing& ring) {
  ElementSet s(ring.order());
  for (std::size_t a = 0; a < ring.order(); ++a) {
    const auto x = static_cast<Element>(a);
    if (ring.mul(ring.mul(x, x), x) == x) s.insert(a);
  }
  return s;
}

namespace {

ElementSet radical_by_criterion(const FiniteRing& ring, const ElementSet& u, bool left) {
  const std::size_t n = ring.order();
  ElementSet jac(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    bool member = true;
    for (std::size_t r = 0; r < n && member; ++r) {
      const auto y = static_cast<Element>(r);
      member = u.contains(ring.sub(ring.one(), left ? ring.mul(y, x) : ring.mul(x, y)));
    }
    if (member) jac.insert(a);
  }
  return jac;
}

}  // namespace

ElementSet jacobson_radical(const FiniteRing& ring, bool paranoid) {
  const ElementSet u = units(ring);
  ElementSet jac = radical_by_criterion(ring, u, /*left=*/true);
  if (!is_two_sided_ideal(ring, jac)) {
    throw InternalInconsistency("Jacobson radical of " + ring.label() + " is not a two-sided ideal");
  }
  if (paranoid && radical_by_criterion(ring, u, /*left=*/false) != jac) {
    throw InternalInconsistency("left and right Jacobson criteria disagree on " + ring.label());
  }
  return jac;
}

ElementSet delta_set(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  const ElementSet u = units(ring);
  const auto unit_list = u.members();
  ElementSet delta(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    bool member = true;
    for (std::size_t i = 0; i < unit_list.size() && member; ++i) {
      member = u.contains(ring.add(x, unit_list[i]));
    }
    if (member) delta.insert(a);
  }

  if (!jacobson_radical(ring).is_subset_of(delta)) {
    throw InternalInconsistency("J is not contained in Delta for " + ring.label());
  }
  bool closed = true;
  delta.for_each([&](Element r) {
    for (Element v : unit_list) {
      if (!delta.contains(ring.mul(v, r)) || !delta.contains(ring.mul(r, v))) closed = false;
    }
  });
  if (!closed) {
    throw InternalInconsistency("Delta is not closed under multiplication by units for " + ring.label());
  }
  return delta;
}

UnitSubring unit_subring_T(const FiniteRing& ring) {
  ElementSet t = subring_generated(ring, units(ring), /*unital=*/true);
  auto induced = induced_subring(ring, t, "T(" + ring.label() + ")");
  return UnitSubring{std::move(t), std::move(induced)};
}

ElementSet delta_via_unit_subring(const FiniteRing& ring) {
  const UnitSubring t = unit_subring_T(ring);
  const ElementSet jt = jacobson_radical(*t.induced.ring);
  ElementSet out(ring.order());
  jt.for_each([&](Element x) { out.insert(t.induced.embedding[x]); });
  return out;
}

ElementSet prime_radical(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  ElementSet current(n);
  current.insert(ring.zero());
  for (;;) {
    ElementSet next = current;
    for (std::size_t a = 0; a < n; ++a) {
      if (current.contains(a)) continue;
      const auto x = static_cast<Element>(a);
      bool absorbed = true;
      for (std::size_t r = 0; r < n && absorbed; ++r) {
        absorbed = current.contains(ring.mul(ring.mul(x, static_cast<Element>(r)), x));
      }
      if (absorbed) next.insert(a);
    }
    next = ideal_generated(ring, next);
    if (next == current) break;
    current = std::move(next);
  }
  if (!current.is_subset_of(nilpotents(ring))) {
    throw InternalInconsistency("prime radical of " + ring.label() + " contains a non-nilpotent");
  }
  return current;
}

ElementSet quasinilpotents(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  const ElementSet u = units(ring);
  ElementSet qn(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    bool member = true;
    for (std::size_t c = 0; c < n && member; ++c) {
      const auto y = static_cast<Element>(c);
      if (ring.mul(x, y) != ring.mul(y, x)) continue;
      member = u.contains(ring.add(ring.one(), ring.mul(x, y)));
    }
    if (member) qn.insert(a);
  }
  return qn;
}

ElementSet nil_plus_jacobson(const FiniteRing& ring, const ElementSet& nil, const ElementSet& jac) {
  ElementSet out(ring.order());
  const auto j = jac.members();
  nil.for_each([&](Element q) {
    for (Element x : j) out.insert(ring.add(q, x));
  });
  return out;
}

namespace direct {

bool is_unit(const FiniteRing& ring, Element a) {
  for (std::size_t b = 0; b < ring.order(); ++b) {
    const auto y = static_cast<Element>(b);
    if (ring.mul(a, y) == ring.one() && ring.mul(y, a) == ring.one()) return true;
  }
  return false;
}

bool in_jacobson(const FiniteRing& ring, Element a) {
  for (std::size_t r = 0; r < ring.order(); ++r) {
    if (!is_unit(ring, ring.sub(ring.one(), ring.mul(static_cast<Element>(r), a)))) return false;
  }
  return true;
}

bool in_delta(const FiniteRing& ring, Element a) {
  for (std::size_t v = 0; v < ring.order(); ++v) {
    const auto y = static_cast<Element>(v);
    if (is_unit(ring, y) && !is_unit(ring, ring.add(a, y))) return false;
  }
  return true;
}

bool is_nilpotent(const FiniteRing& ring, Element a) {
  Element p = a;
  for (std::size_t k = 1; k <= ring.order(); ++k) {
    if (p == ring.zero()) return true;
    p = ring.mul(p, a);
  }
  return p == ring.zero();
}

bool in_quasinilpotents(const FiniteRing& ring, Element a) {
  for (std::size_t c = 0; c < ring.order(); ++c) {
    const auto y = static_cast<Element>(c);
    if (ring.mul(a, y) == ring.mul(y, a) && !is_unit(ring, ring.add(ring.one(), ring.mul(a, y)))) return false;
  }
  return true;
}

}  // namespace direct

}  // namespace deltaring
