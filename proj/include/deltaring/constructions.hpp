#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "deltaring/finite_ring.hpp"

namespace deltaring {

// Element encodings. Every construction numbers its elements by a mixed-radix
// tuple code with the first component most significant:
//   direct_product     (x_1, ..., x_k)
//   matrix_ring        entries row-major
//   upper_triangular   entries (i <= j) row-major
//   truncated_skew     coefficients (a_0, ..., a_{n-1})
//   trivial_extension  (r, m)
//   dt_extension       (a, m, b, n)
//   formal_triangular  (r, m, s)
//   generalized Ks     (a, x, y, b) for [[a, x], [y, b]]
//   formal Mn(R;s)     entries row-major
//   group_ring         coefficients indexed by group element, identity first
// GF(p^k) numbers the polynomial c_0 + c_1 x + ... as sum c_i p^i.

// ---------------------------------------------------------------------------
// Bimodules and groups
// ---------------------------------------------------------------------------

/// Finite (R, S)-bimodule given by tables.
struct Bimodule {
  RingPtr left;
  RingPtr right;
  std::size_t order = 0;
  Element zero = 0;
  std::vector<Element> add;        // order x order
  std::vector<Element> left_act;   // |R| x order, r·m
  std::vector<Element> right_act;  // order x |S|, m·s
  std::vector<std::string> names;
  std::string label;

  Element plus(Element a, Element b) const { return add[a * order + b]; }
  Element act_left(Element r, Element m) const { return left_act[r * order + m]; }
  Element act_right(Element m, Element s) const { return right_act[m * right->order() + s]; }
};

/// Checks the abelian group, both module structures (including 1·m = m = m·1)
/// and balance (rm)s = r(ms). Throws InvalidBimodule.
Bimodule validate_bimodule(Bimodule module);

/// M = T with r·m = f(r)m and m·s = m g(s) for unital homs f: R -> T, g: S -> T.
Bimodule bimodule_via_homs(const RingHom& f, const RingHom& g, std::string label = {});

/// R as an (R, R)-bimodule.
Bimodule regular_bimodule(const RingPtr& ring);

Bimodule zero_bimodule(const RingPtr& left, const RingPtr& right);

Bimodule direct_sum(const Bimodule& lhs, const Bimodule& rhs);

struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::size_t> table;  // row-major, table[g * order + h] = gh
  std::size_t identity = 0;
  std::string label;
  std::vector<std::string> names;

  std::size_t op(std::size_t g, std::size_t h) const { return table[g * order + h]; }
};

/// Checks closure, associativity, identity and inverses. Throws InvalidGroup.
FiniteGroup validate_group(FiniteGroup group);

FiniteGroup cyclic_group(std::size_t n);  // 1 <= n <= 6
FiniteGroup klein_group();
/// Permutations of {0,1,2} in lexicographic order, product s·t = s(t(x)).
FiniteGroup symmetric_group3();

/// Looks up "C<n>", "V4" or "S3". Throws InvalidGroup.
FiniteGroup group_by_name(const std::string& name);

// ---------------------------------------------------------------------------
// Base rings
// ---------------------------------------------------------------------------

RingPtr integers_mod(std::size_t n);

/// GF(q) for q in {2, 3, 4, 5, 7, 8, 9}, using x^2+x+1, x^3+x+1 and x^2+1
/// for q = 4, 8, 9. Throws UnsupportedField.
RingPtr galois_field(std::size_t q);

/// Additive order of 1.
std::size_t characteristic(const FiniteRing& ring);

/// a -> a^p on a ring of prime characteristic p that is commutative.
RingHom frobenius(const RingPtr& ring);

// ---------------------------------------------------------------------------
// Constructions. An empty label selects the canonical one.
// ---------------------------------------------------------------------------

RingPtr direct_product(const std::vector<RingPtr>& factors, std::string label = {});

RingPtr matrix_ring(const RingPtr& ring, std::size_t n, std::string label = {});
RingPtr upper_triangular(const RingPtr& ring, std::size_t n, std::string label = {});

/// R[x; alpha]/<x^n> with x r = alpha(r) x. Throws InvalidEndomorphism when
/// alpha is not an endomorphism of `ring`.
RingPtr truncated_skew_poly(const RingPtr& ring, const RingHom& alpha, std::size_t n,
                            std::string label = {});

/// (r, m)(s, n) = (rs, rn + ms). Verifies U(T) = T(U(R), M) and
/// Delta(T) = T(Delta(R), M) before returning.
RingPtr trivial_extension(const RingPtr& ring, const Bimodule& module, std::string label = {});

/// 4-tuples (a, m, b, n); verified equal, table for table, to T(T(R,M), T(R,M)).
RingPtr dt_extension(const RingPtr& ring, const Bimodule& module, std::string label = {});

/// [[r, m], [0, s]] with M an (R, S)-bimodule.
RingPtr formal_triangular(const RingPtr& r, const RingPtr& s, const Bimodule& module,
                          std::string label = {});

/// K_s(R): [[a, x], [y, b]] with off-diagonal products scaled by central s.
RingPtr generalized_matrix_ks(const RingPtr& ring, Element s, std::string label = {});

/// M_n(R; s): c_ij = sum_k s^(1 + d_ij - d_ik - d_kj) a_ik b_kj.
RingPtr formal_matrix_mns(const RingPtr& ring, std::size_t n, Element s, std::string label = {});

/// Exponent 1 + d_ij - d_ik - d_kj used by M_n(R; s), as a function of (i, k, j).
int formal_matrix_exponent(std::size_t i, std::size_t k, std::size_t j);

RingPtr group_ring(const RingPtr& ring, const FiniteGroup& group, std::string label = {});

/// The augmentation map RG -> R and its kernel.
struct Augmentation {
  RingHom epsilon;
  ElementSet kernel;
};
Augmentation augmentation(const RingPtr& group_ring, const RingPtr& base, const FiniteGroup& group);

}  // namespace deltaring
