#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "deltaring/finite_ring.hpp"

namespace deltaring {

// Ring expressions:
//   Z<n> | GF(q)
//   Prod(e, ...)            M(n, e)            T(n, e)
//   TruncSkew(e, id|frob, n)
//   Triv(e [, m | 0])       DT(e [, m | 0])    FT(r, s, m | 0)
//   K(e, s=k)               FM(n, e, s=k)      GR(e, C<n> | V4 | S3)
//   Quot(e, J | g, ...)     Corner(e, k)
// A module argument m is a ring S made into a bimodule through the canonical
// map e -> S (identity when S is e, reduction when e is Z_m and char S | m).
// Element arguments (s=k, g, k) are element indices of the built ring.

enum class ExprKind {
  integers,       // Z<n>
  galois,         // GF(q)
  product,        // Prod
  matrix,         // M
  triangular,     // T
  trunc_skew,     // TruncSkew
  triv,           // Triv
  dt,             // DT
  formal_tri,     // FT
  ks,             // K
  fmns,           // FM
  group_ring,     // GR
  quotient,       // Quot
  corner,         // Corner
};

struct RingExpr {
  ExprKind kind = ExprKind::integers;
  std::vector<RingExpr> children;
  /// Integer parameters in source order: n, q, sizes, s, generators, k.
  std::vector<std::uint64_t> numbers;
  /// Endomorphism name, group name, or "J".
  std::string symbol;
  /// Explicit zero module ("0") in Triv / DT / FT.
  bool zero_module = false;

  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

/// Throws SyntaxError (with position), UnknownName or BadArity.
RingExpr parse_ring_expr(std::string_view text);

/// Canonical form: no whitespace, parse(print(e)) == e.
std::string print_ring_expr(const RingExpr& expr);

/// Builds (memoized by canonical string) and returns the validated ring.
/// The ring's label is the canonical string.
RingPtr build_ring(const RingExpr& expr);
RingPtr build_ring(std::string_view text);

/// Drops all memoized rings (used by tests that change the order guard).
void clear_build_cache();

struct CatalogEntry {
  std::string label;
  RingExpr expr;
};

/// Default verification catalog, in a fixed order.
const std::vector<CatalogEntry>& catalog();

}  // namespace deltaring
