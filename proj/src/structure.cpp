#include "deltaring/structure.hpp"

#include <algorithm>

#include "deltaring/errors.hpp"

namespace deltaring {

namespace {

/// Worklist closure: `list` holds members in discovery order.
struct Closure {
  explicit Closure(std::size_t n) : set(n) {}

  void push(Element x) {
    if (!set.contains(x)) {
      set.insert(x);
      list.push_back(x);
    }
  }

  ElementSet set;
  std::vector<Element> list;
};

/// Ring on a subset closed under + and ·, with the given identity.
RingPtr ring_on_subset(const FiniteRing& ring, const std::vector<Element>& members, Element identity,
                       std::string label) {
  const std::size_t m = members.size();
  std::vector<int> index(ring.order(), -1);
  for (std::size_t i = 0; i < m; ++i) index[members[i]] = static_cast<int>(i);
  auto lookup = [&](Element x) {
    if (index[x] < 0) throw InternalInconsistency("subset is not closed under the ring operations");
    return static_cast<Element>(index[x]);
  };
  RingTables t;
  t.order = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      t.add[i * m + j] = lookup(ring.add(members[i], members[j]));
      t.mul[i * m + j] = lookup(ring.mul(members[i], members[j]));
    }
  t.zero = lookup(ring.zero());
  t.one = lookup(identity);
  std::vector<std::string> names;
  names.reserve(m);
  for (Element x : members) names.push_back(ring.element_name(x));
  return validate_ring(std::move(t), std::move(label), std::move(names));
}

std::vector<Element> additive_group_generators(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  ElementSet reached(n);
  reached.insert(ring.zero());
  std::vector<Element> members{ring.zero()};
  std::vector<Element> gens;
  for (std::size_t c = 0; c < n; ++c) {
    const auto cand = static_cast<Element>(c);
    if (reached.contains(cand)) continue;
    gens.push_back(cand);
    // Subgroup generated by the old subgroup and cand: add multiples of cand.
    std::vector<Element> coset_shifts;
    for (Element k = cand; !reached.contains(k); k = ring.add(k, cand)) coset_shifts.push_back(k);
    const std::size_t old_size = members.size();
    for (Element shift : coset_shifts)
      for (std::size_t i = 0; i < old_size; ++i) {
        const Element x = ring.add(members[i], shift);
        if (!reached.contains(x)) {
          reached.insert(x);
          members.push_back(x);
        }
      }
  }
  return gens;
}

}  // namespace

ElementSet subring_generated(const FiniteRing& ring, const ElementSet& gens, bool unital) {
  Closure c(ring.order());
  c.push(ring.zero());
  gens.for_each([&](Element x) { c.push(x); });
  if (unital) c.push(ring.one());
  for (std::size_t i = 0; i < c.list.size(); ++i) {
    const Element x = c.list[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element y = c.list[j];
      c.push(ring.sub(x, y));
      c.push(ring.sub(y, x));
      c.push(ring.mul(x, y));
      c.push(ring.mul(y, x));
    }
  }
  return c.set;
}

ElementSet ideal_generated(const FiniteRing& ring, const ElementSet& gens) {
  const std::size_t n = ring.order();
  Closure c(n);
  c.push(ring.zero());
  gens.for_each([&](Element x) { c.push(x); });
  for (std::size_t i = 0; i < c.list.size(); ++i) {
    const Element x = c.list[i];
    for (std::size_t r = 0; r < n; ++r) {
      c.push(ring.mul(static_cast<Element>(r), x));
      c.push(ring.mul(x, static_cast<Element>(r)));
    }
    for (std::size_t j = 0; j <= i; ++j) c.push(ring.add(x, c.list[j]));
  }
  return c.set;
}

ElementSet ideal_sum(const FiniteRing& ring, const ElementSet& lhs, const ElementSet& rhs) {
  ElementSet out(ring.order());
  const auto right = rhs.members();
  lhs.for_each([&](Element a) {
    for (Element b : right) out.insert(ring.add(a, b));
  });
  return out;
}

bool is_additive_subgroup(const FiniteRing& ring, const ElementSet& set) {
  if (set.universe() != ring.order() || !set.contains(ring.zero())) return false;
  const auto m = set.members();
  for (Element a : m)
    for (Element b : m)
      if (!set.contains(ring.sub(a, b))) return false;
  return true;
}

bool is_two_sided_ideal(const FiniteRing& ring, const ElementSet& set) {
  if (!is_additive_subgroup(ring, set)) return false;
  const std::size_t n = ring.order();
  bool ok = true;
  set.for_each([&](Element x) {
    for (std::size_t r = 0; r < n && ok; ++r) {
      if (!set.contains(ring.mul(static_cast<Element>(r), x)) ||
          !set.contains(ring.mul(x, static_cast<Element>(r)))) {
        ok = false;
      }
    }
  });
  return ok;
}

bool is_unital_subring(const FiniteRing& ring, const ElementSet& set) {
  if (!is_additive_subgroup(ring, set) || !set.contains(ring.one())) return false;
  const auto m = set.members();
  for (Element a : m)
    for (Element b : m)
      if (!set.contains(ring.mul(a, b))) return false;
  return true;
}

InducedRing induced_subring(const FiniteRing& ring, const ElementSet& subring, std::string label) {
  if (!is_unital_subring(ring, subring)) {
    throw std::invalid_argument("induced_subring: set is not a unital subring");
  }
  auto members = subring.members();
  auto sub = ring_on_subset(ring, members, ring.one(), std::move(label));
  return InducedRing{std::move(sub), std::move(members)};
}

Quotient quotient_ring(const RingPtr& ring, const ElementSet& ideal) {
  const FiniteRing& r = *ring;
  if (!is_two_sided_ideal(r, ideal)) throw NotAnIdeal("quotient_ring: set is not a two-sided ideal");
  if (ideal.size() == 1) return Quotient{ring, identity_hom(ring)};

  const std::size_t n = r.order();
  const auto ideal_members = ideal.members();
  std::vector<int> coset(n, -1);
  std::vector<Element> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<Element>(a));
    for (Element i : ideal_members) coset[r.add(static_cast<Element>(a), i)] = id;
  }
  const std::size_t m = reps.size();
  RingTables t;
  t.order = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      t.add[i * m + j] = static_cast<Element>(coset[r.add(reps[i], reps[j])]);
      t.mul[i * m + j] = static_cast<Element>(coset[r.mul(reps[i], reps[j])]);
    }
  t.zero = static_cast<Element>(coset[r.zero()]);
  t.one = static_cast<Element>(coset[r.one()]);
  std::vector<std::string> names;
  names.reserve(m);
  for (Element rep : reps) names.push_back("[" + r.element_name(rep) + "]");
  auto q = validate_ring(std::move(t), r.label() + "/I", std::move(names));
  std::vector<Element> map(n);
  for (std::size_t a = 0; a < n; ++a) map[a] = static_cast<Element>(coset[a]);
  return Quotient{q, RingHom{ring, q, std::move(map)}};
}

InducedRing corner_ring(const FiniteRing& ring, Element e) {
  if (e >= ring.order()) throw IndexOutOfRange("corner_ring: element out of range");
  if (ring.mul(e, e) != e || e == ring.zero()) {
    throw NotIdempotent("corner_ring: element " + ring.element_name(e) + " is not a nonzero idempotent");
  }
  ElementSet corner(ring.order());
  for (std::size_t r = 0; r < ring.order(); ++r) {
    corner.insert(ring.mul(ring.mul(e, static_cast<Element>(r)), e));
  }
  auto members = corner.members();
  auto sub = ring_on_subset(ring, members, e, "Corner(" + ring.label() + "," + ring.element_name(e) + ")");
  return InducedRing{std::move(sub), std::move(members)};
}

ElementSet center(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  if (ring.is_commutative()) return ElementSet::full(n);
  ElementSet c(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    bool central = true;
    for (std::size_t r = 0; r < n && central; ++r) {
      central = ring.mul(x, static_cast<Element>(r)) == ring.mul(static_cast<Element>(r), x);
    }
    if (central) c.insert(a);
  }
  return c;
}

std::optional<Element> non_lifting_unit(const RingHom& f) {
  const FiniteRing& s = *f.source;
  const FiniteRing& t = *f.target;
  std::vector<char> hit(t.order(), 0);
  for (std::size_t a = 0; a < s.order(); ++a)
    if (inverse(s, static_cast<Element>(a))) hit[f.map[a]] = 1;
  for (std::size_t v = 0; v < t.order(); ++v)
    if (!hit[v] && inverse(t, static_cast<Element>(v))) return static_cast<Element>(v);
  return std::nullopt;
}

CompatibilityResult alpha_compatible(const FiniteRing& ring, const RingHom& alpha) {
  const std::size_t n = ring.order();
  if (alpha.map.size() != n || alpha.target.get() != alpha.source.get()) {
    throw InvalidEndomorphism("alpha_compatible: map is not an endomorphism of the ring");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto x = static_cast<Element>(a);
      const auto y = static_cast<Element>(b);
      const bool lhs = ring.mul(x, y) == ring.zero();
      const bool rhs = ring.mul(x, alpha.map[y]) == ring.zero();
      if (lhs != rhs) return {false, std::make_pair(x, y)};
    }
  return {};
}

std::vector<RingHom> find_endomorphisms(const RingPtr& ring) {
  const FiniteRing& r = *ring;
  const std::size_t n = r.order();
  if (n > 64) throw OrderGuardExceeded(n, 64);
  const auto gens = additive_group_generators(r);

  // Forces map(a+b) = map(a)+map(b) and map(ab) = map(a)map(b) to a fixpoint.
  auto propagate = [&](std::vector<int>& img) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (img[a] < 0) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (img[b] < 0) continue;
          const auto x = static_cast<Element>(a);
          const auto y = static_cast<Element>(b);
          const auto ia = static_cast<Element>(img[a]);
          const auto ib = static_cast<Element>(img[b]);
          const std::pair<Element, Element> forced[] = {{r.add(x, y), r.add(ia, ib)},
                                                        {r.mul(x, y), r.mul(ia, ib)}};
          for (auto [src, dst] : forced) {
            if (img[src] < 0) {
              img[src] = dst;
              changed = true;
            } else if (img[src] != dst) {
              return false;
            }
          }
        }
      }
    }
    return true;
  };

  std::vector<RingHom> found;
  std::vector<int> start(n, -1);
  start[r.zero()] = r.zero();
  start[r.one()] = r.one();
  if (!propagate(start)) return found;

  auto search = [&](auto&& self, std::size_t depth, const std::vector<int>& img) -> void {
    if (depth == gens.size()) {
      std::vector<Element> map(n);
      for (std::size_t a = 0; a < n; ++a) map[a] = static_cast<Element>(img[a]);
      found.push_back(validate_hom(ring, ring, std::move(map)));
      return;
    }
    const Element g = gens[depth];
    if (img[g] >= 0) {
      self(self, depth + 1, img);
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      auto next = img;
      next[g] = static_cast<int>(t);
      if (propagate(next)) self(self, depth + 1, next);
    }
  };
  search(search, 0, start);
  return found;
}

bool verify_matrix_units(const FiniteRing& ring, const MatrixUnitSystem& s) {
  const std::size_t n = s.n;
  if (s.units.size() != n * n) return false;
  for (Element u : s.units)
    if (u == ring.zero()) return false;
  Element e = ring.zero();
  for (std::size_t i = 0; i < n; ++i) e = ring.add(e, s.at(i, i));
  if (e != s.corner_identity) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t t = 0; t < n; ++t) {
          const Element expected = j == a ? s.at(i, t) : ring.zero();
          if (ring.mul(s.at(i, j), s.at(a, t)) != expected) return false;
        }
  return true;
}

std::optional<MatrixUnitSystem> find_matrix_units(const FiniteRing& ring, std::size_t n,
                                                  const ElementSet& within) {
  if (n < 2) throw std::invalid_argument("find_matrix_units: n must be at least 2");
  const auto pool = within.members();
  const Element zero = ring.zero();

  // A system is determined by e_11, the first row e_1j and first column e_j1:
  // e_ij = e_i1 e_1j. Search those and verify the full relations at the end.
  std::vector<Element> row(n), col(n);
  std::optional<MatrixUnitSystem> result;

  auto complete = [&]() -> bool {
    MatrixUnitSystem s;
    s.n = n;
    s.units.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Element u = i == 0 ? row[j] : (j == 0 ? col[i] : ring.mul(col[i], row[j]));
        if (!within.contains(u)) return false;
        s.units[i * n + j] = u;
      }
    Element e = zero;
    for (std::size_t i = 0; i < n; ++i) e = ring.add(e, s.at(i, i));
    s.corner_identity = e;
    if (!verify_matrix_units(ring, s)) return false;
    result = std::move(s);
    return true;
  };

  auto extend = [&](auto&& self, std::size_t j) -> bool {
    if (j == n) return complete();
    const Element e11 = row[0];
    for (Element a : pool) {
      if (a == zero || ring.mul(e11, a) != a || ring.mul(a, e11) != zero) continue;
      for (Element b : pool) {
        if (b == zero || ring.mul(b, e11) != b || ring.mul(e11, b) != zero) continue;
        if (ring.mul(a, b) != e11) continue;
        const Element ejj = ring.mul(b, a);
        if (ring.mul(ejj, ejj) != ejj) continue;
        bool orthogonal = true;
        for (std::size_t k = 1; k < j && orthogonal; ++k) {
          const Element ekk = ring.mul(col[k], row[k]);
          orthogonal = ring.mul(ejj, ekk) == zero && ring.mul(ekk, ejj) == zero;
        }
        if (!orthogonal) continue;
        row[j] = a;
        col[j] = b;
        if (self(self, j + 1)) return true;
      }
    }
    return false;
  };

  for (Element e : pool) {
    if (e == zero || ring.mul(e, e) != e) continue;
    // e_11 = 1 would force e_22 = e_22 e_11 = 0.
    if (e == ring.one()) continue;
    row[0] = e;
    col[0] = e;
    if (extend(extend, 1)) return result;
  }
  return std::nullopt;
}

}  // namespace deltaring
