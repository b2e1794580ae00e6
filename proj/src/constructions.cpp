#include "deltaring/constructions.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "deltaring/errors.hpp"
#include "deltaring/structure.hpp"
#include "deltaring/subsets.hpp"

namespace deltaring {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// Mixed-radix codes, first component most significant.
class Codec {
 public:
  explicit Codec(std::vector<std::size_t> radix) : radix_(std::move(radix)) {
    size_ = 1;
    for (std::size_t r : radix_) size_ = guarded_product(size_, r);
    enforce_order_guard(size_);
    const std::size_t k = radix_.size();
    digits_.resize(size_ * k);
    for (std::size_t code = 0; code < size_; ++code) {
      std::size_t rest = code;
      for (std::size_t i = k; i-- > 0;) {
        digits_[code * k + i] = static_cast<Element>(rest % radix_[i]);
        rest /= radix_[i];
      }
    }
  }

  std::size_t size() const { return size_; }
  std::size_t width() const { return radix_.size(); }
  const Element* digits(std::size_t code) const { return digits_.data() + code * radix_.size(); }

  std::size_t encode(const Element* d) const {
    std::size_t code = 0;
    for (std::size_t i = 0; i < radix_.size(); ++i) code = code * radix_[i] + d[i];
    return code;
  }

 private:
  std::vector<std::size_t> radix_;
  std::size_t size_ = 1;
  std::vector<Element> digits_;
};

/// Additive structure of one tuple component.
struct Component {
  std::size_t order;
  const std::vector<Element>* add;
  Element zero;
  const std::vector<std::string>* names;
};

Component component(const FiniteRing& r) { return {r.order(), &r.add_table(), r.zero(), &r.element_names()}; }
Component component(const Bimodule& m) { return {m.order, &m.add, m.zero, &m.names}; }

using MulFn = std::function<void(const Element* a, const Element* b, Element* out)>;
using NameFn = std::function<std::string(const Element* d)>;

/// Builds and validates the ring on tuples of `parts` with componentwise
/// addition and the given product.
RingPtr build_tuple_ring(const std::vector<Component>& parts, const MulFn& mul, const std::vector<Element>& one,
                         const NameFn& name, std::string label) {
  std::vector<std::size_t> radix;
  for (const auto& c : parts) radix.push_back(c.order);
  const Codec codec(radix);
  const std::size_t n = codec.size();
  const std::size_t k = codec.width();

  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<Element> out(k);
  for (std::size_t a = 0; a < n; ++a) {
    const Element* da = codec.digits(a);
    for (std::size_t b = 0; b < n; ++b) {
      const Element* db = codec.digits(b);
      for (std::size_t i = 0; i < k; ++i) out[i] = (*parts[i].add)[da[i] * parts[i].order + db[i]];
      t.add[a * n + b] = static_cast<Element>(codec.encode(out.data()));
      mul(da, db, out.data());
      t.mul[a * n + b] = static_cast<Element>(codec.encode(out.data()));
    }
  }
  std::vector<Element> zero(k);
  for (std::size_t i = 0; i < k; ++i) zero[i] = parts[i].zero;
  t.zero = static_cast<Element>(codec.encode(zero.data()));
  t.one = static_cast<Element>(codec.encode(one.data()));

  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t a = 0; a < n; ++a) names.push_back(name(codec.digits(a)));
  return validate_ring(std::move(t), std::move(label), std::move(names));
}

NameFn tuple_names(const std::vector<Component>& parts) {
  return [parts](const Element* d) {
    std::vector<std::string> items;
    for (std::size_t i = 0; i < parts.size(); ++i) items.push_back((*parts[i].names)[d[i]]);
    return "(" + join(items, ",") + ")";
  };
}

NameFn square_matrix_names(const FiniteRing& r, std::size_t n) {
  return [&r, n](const Element* d) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j < n; ++j) row.push_back(r.element_name(d[i * n + j]));
      rows.push_back("[" + join(row, ",") + "]");
    }
    return "[" + join(rows, ",") + "]";
  };
}

std::vector<Component> repeat(const FiniteRing& r, std::size_t count) {
  return std::vector<Component>(count, component(r));
}

std::vector<Element> identity_matrix(const FiniteRing& r, std::size_t n) {
  std::vector<Element> one(n * n, r.zero());
  for (std::size_t i = 0; i < n; ++i) one[i * n + i] = r.one();
  return one;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (a != b && (a->order() != b->order() || a->add_table() != b->add_table() || a->mul_table() != b->mul_table())) {
    throw InvalidBimodule(std::string(what) + ": bimodule is over a different ring");
  }
}

std::string alpha_name(const RingPtr& ring, const RingHom& alpha) {
  bool identity = true;
  for (std::size_t a = 0; a < alpha.map.size(); ++a) identity = identity && alpha.map[a] == a;
  if (identity) return "id";
  try {
    if (frobenius(ring).map == alpha.map) return "frob";
  } catch (const RingError&) {
  }
  return "alpha";
}

[[noreturn]] void group_error(const std::string& what) { throw InvalidGroup(what); }

}  // namespace

// ---------------------------------------------------------------------------
// Bimodules
// ---------------------------------------------------------------------------

Bimodule validate_bimodule(Bimodule m) {
  if (!m.left || !m.right) throw InvalidBimodule("bimodule needs both rings");
  const std::size_t n = m.order;
  const FiniteRing& r = *m.left;
  const FiniteRing& s = *m.right;
  if (n == 0 || m.add.size() != n * n || m.left_act.size() != r.order() * n ||
      m.right_act.size() != n * s.order() || m.zero >= n) {
    throw InvalidBimodule("bimodule tables have the wrong shape");
  }
  auto in_range = [n](Element e) { return e < n; };
  if (!std::all_of(m.add.begin(), m.add.end(), in_range) || !std::all_of(m.left_act.begin(), m.left_act.end(), in_range) ||
      !std::all_of(m.right_act.begin(), m.right_act.end(), in_range)) {
    throw InvalidBimodule("bimodule table entry out of range");
  }
  auto fail = [&](const std::string& axiom) { throw InvalidBimodule("bimodule " + m.label + ": " + axiom + " fails"); };

  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    if (m.plus(m.zero, x) != x) fail("additive identity");
    bool has_neg = false;
    for (std::size_t b = 0; b < n; ++b) {
      const auto y = static_cast<Element>(b);
      if (m.plus(x, y) != m.plus(y, x)) fail("additive commutativity");
      if (m.plus(x, y) == m.zero) has_neg = true;
      for (std::size_t c = 0; c < n; ++c) {
        const auto z = static_cast<Element>(c);
        if (m.plus(m.plus(x, y), z) != m.plus(x, m.plus(y, z))) fail("additive associativity");
      }
    }
    if (!has_neg) fail("additive inverse");
  }

  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    if (m.act_left(r.one(), x) != x) fail("unital left action");
    if (m.act_right(x, s.one()) != x) fail("unital right action");
    for (std::size_t i = 0; i < r.order(); ++i) {
      const auto p = static_cast<Element>(i);
      for (std::size_t b = 0; b < n; ++b) {
        const auto y = static_cast<Element>(b);
        if (m.act_left(p, m.plus(x, y)) != m.plus(m.act_left(p, x), m.act_left(p, y))) fail("left distributivity over M");
      }
      for (std::size_t j = 0; j < r.order(); ++j) {
        const auto q = static_cast<Element>(j);
        if (m.act_left(r.add(p, q), x) != m.plus(m.act_left(p, x), m.act_left(q, x))) fail("left distributivity over R");
        if (m.act_left(r.mul(p, q), x) != m.act_left(p, m.act_left(q, x))) fail("left associativity");
      }
      for (std::size_t j = 0; j < s.order(); ++j) {
        const auto q = static_cast<Element>(j);
        if (m.act_right(m.act_left(p, x), q) != m.act_left(p, m.act_right(x, q))) fail("balance (rm)s = r(ms)");
      }
    }
    for (std::size_t i = 0; i < s.order(); ++i) {
      const auto p = static_cast<Element>(i);
      for (std::size_t b = 0; b < n; ++b) {
        const auto y = static_cast<Element>(b);
        if (m.act_right(m.plus(x, y), p) != m.plus(m.act_right(x, p), m.act_right(y, p))) fail("right distributivity over M");
      }
      for (std::size_t j = 0; j < s.order(); ++j) {
        const auto q = static_cast<Element>(j);
        if (m.act_right(x, s.add(p, q)) != m.plus(m.act_right(x, p), m.act_right(x, q))) fail("right distributivity over S");
        if (m.act_right(x, s.mul(p, q)) != m.act_right(m.act_right(x, p), q)) fail("right associativity");
      }
    }
  }
  if (m.names.empty()) {
    for (std::size_t a = 0; a < n; ++a) m.names.push_back(std::to_string(a));
  }
  if (m.names.size() != n) throw InvalidBimodule("bimodule name list has the wrong length");
  return m;
}

Bimodule bimodule_via_homs(const RingHom& f, const RingHom& g, std::string label) {
  if (f.target->order() != g.target->order() || f.target->mul_table() != g.target->mul_table()) {
    throw InvalidBimodule("both homs must land in the same ring");
  }
  const FiniteRing& t = *f.target;
  const std::size_t n = t.order();
  Bimodule m;
  m.left = f.source;
  m.right = g.source;
  m.order = n;
  m.zero = t.zero();
  m.add = t.add_table();
  m.left_act.resize(f.source->order() * n);
  m.right_act.resize(n * g.source->order());
  for (std::size_t r = 0; r < f.source->order(); ++r)
    for (std::size_t x = 0; x < n; ++x)
      m.left_act[r * n + x] = t.mul(f.map[r], static_cast<Element>(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < g.source->order(); ++s)
      m.right_act[x * g.source->order() + s] = t.mul(static_cast<Element>(x), g.map[s]);
  m.names = t.element_names();
  m.label = label.empty() ? t.label() : std::move(label);
  return validate_bimodule(std::move(m));
}

Bimodule regular_bimodule(const RingPtr& ring) {
  const RingHom id = identity_hom(ring);
  return bimodule_via_homs(id, id);
}

Bimodule zero_bimodule(const RingPtr& left, const RingPtr& right) {
  Bimodule m;
  m.left = left;
  m.right = right;
  m.order = 1;
  m.add = {0};
  m.left_act.assign(left->order(), 0);
  m.right_act.assign(right->order(), 0);
  m.names = {"0"};
  m.label = "0";
  return validate_bimodule(std::move(m));
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
  require_same_ring(a.left, b.left, "direct_sum");
  require_same_ring(a.right, b.right, "direct_sum");
  const std::size_t n = guarded_product(a.order, b.order);
  enforce_order_guard(n);
  Bimodule m;
  m.left = a.left;
  m.right = a.right;
  m.order = n;
  auto code = [&](Element x, Element y) { return static_cast<Element>(x * b.order + y); };
  auto first = [&](std::size_t c) { return static_cast<Element>(c / b.order); };
  auto second = [&](std::size_t c) { return static_cast<Element>(c % b.order); };
  m.zero = code(a.zero, b.zero);
  m.add.resize(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      m.add[p * n + q] = code(a.plus(first(p), first(q)), b.plus(second(p), second(q)));
  const std::size_t rl = a.left->order();
  const std::size_t rr = a.right->order();
  m.left_act.resize(rl * n);
  m.right_act.resize(n * rr);
  for (std::size_t r = 0; r < rl; ++r)
    for (std::size_t p = 0; p < n; ++p)
      m.left_act[r * n + p] =
          code(a.act_left(static_cast<Element>(r), first(p)), b.act_left(static_cast<Element>(r), second(p)));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t s = 0; s < rr; ++s)
      m.right_act[p * rr + s] =
          code(a.act_right(first(p), static_cast<Element>(s)), b.act_right(second(p), static_cast<Element>(s)));
  for (std::size_t p = 0; p < n; ++p) m.names.push_back("(" + a.names[first(p)] + "," + b.names[second(p)] + ")");
  m.label = a.label + "+" + b.label;
  return validate_bimodule(std::move(m));
}

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

FiniteGroup validate_group(FiniteGroup g) {
  const std::size_t n = g.order;
  if (n == 0 || g.table.size() != n * n || g.identity >= n) group_error("group table has the wrong shape");
  for (std::size_t x : g.table)
    if (x >= n) group_error("group table entry out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (g.op(g.identity, a) != a || g.op(a, g.identity) != a) group_error("identity fails");
    bool inv = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (g.op(a, b) == g.identity && g.op(b, a) == g.identity) inv = true;
      for (std::size_t c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) group_error("associativity fails");
    }
    if (!inv) group_error("inverse fails");
  }
  if (g.names.empty())
    for (std::size_t a = 0; a < n; ++a) g.names.push_back(std::to_string(a));
  if (g.names.size() != n) group_error("group name list has the wrong length");
  return g;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1 || n > 6) group_error("cyclic groups are built in for 1 <= n <= 6");
  FiniteGroup g;
  g.order = n;
  g.label = "C" + std::to_string(n);
  g.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
  for (std::size_t a = 0; a < n; ++a) g.names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
  return validate_group(std::move(g));
}

FiniteGroup klein_group() {
  FiniteGroup g;
  g.order = 4;
  g.label = "V4";
  g.table.resize(16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) g.table[a * 4 + b] = a ^ b;
  g.names = {"e", "a", "b", "ab"};
  return validate_group(std::move(g));
}

FiniteGroup symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  g.order = perms.size();
  g.label = "S3";
  g.table.resize(g.order * g.order);
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      g.table[a * g.order + b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  g.names = {"e", "(12)", "(01)", "(012)", "(021)", "(02)"};
  return validate_group(std::move(g));
}

FiniteGroup group_by_name(const std::string& name) {
  if (name == "V4") return klein_group();
  if (name == "S3") return symmetric_group3();
  if (name.size() >= 2 && name[0] == 'C' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    return cyclic_group(std::stoul(name.substr(1)));
  }
  group_error("unknown group '" + name + "'");
}

// ---------------------------------------------------------------------------
// Base rings
// ---------------------------------------------------------------------------

RingPtr integers_mod(std::size_t n) {
  if (n < 2) throw InvalidTables("Z_n needs n >= 2");
  enforce_order_guard(n);
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Element>((a + b) % n);
      t.mul[a * n + b] = static_cast<Element>((a * b) % n);
    }
  t.zero = 0;
  t.one = 1;
  return validate_ring(std::move(t), "Z" + std::to_string(n));
}

RingPtr galois_field(std::size_t q) {
  std::size_t p = 0;
  std::size_t k = 1;
  std::vector<std::size_t> modulus;  // monic irreducible, low degree first, without the leading 1
  switch (q) {
    case 2: case 3: case 5: case 7: p = q; break;
    case 4: p = 2; k = 2; modulus = {1, 1}; break;        // x^2 + x + 1
    case 8: p = 2; k = 3; modulus = {1, 1, 0}; break;     // x^3 + x + 1
    case 9: p = 3; k = 2; modulus = {1, 0}; break;        // x^2 + 1
    default: throw UnsupportedField("GF(" + std::to_string(q) + ") is not supported; use q in {2,3,4,5,7,8,9}");
  }
  if (k == 1) {
    RingPtr z = integers_mod(p);
    RingTables t = z->tables();
    return validate_ring(std::move(t), "GF(" + std::to_string(q) + ")");
  }

  auto coeffs = [&](std::size_t a) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i, a /= p) c[i] = a % p;
    return c;
  };
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t a = 0;
    for (std::size_t i = k; i-- > 0;) a = a * p + c[i];
    return static_cast<Element>(a);
  };
  RingTables t;
  t.order = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      const auto ca = coeffs(a);
      const auto cb = coeffs(b);
      std::vector<std::size_t> sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
      t.add[a * q + b] = encode(sum);
      std::vector<std::size_t> prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      // Reduce with x^k = -(modulus).
      for (std::size_t d = prod.size(); d-- > k;) {
        const std::size_t c = prod[d];
        prod[d] = 0;
        for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - modulus[i]) * c) % p;
      }
      prod.resize(k);
      t.mul[a * q + b] = encode(prod);
    }
  t.zero = 0;
  t.one = 1;

  std::vector<std::string> names;
  for (std::size_t a = 0; a < q; ++a) {
    const auto c = coeffs(a);
    std::vector<std::string> terms;
    for (std::size_t i = k; i-- > 0;) {
      if (c[i] == 0) continue;
      const std::string coef = (c[i] == 1 && i > 0) ? "" : std::to_string(c[i]);
      const std::string mono = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
      terms.push_back(coef + mono);
    }
    names.push_back(terms.empty() ? "0" : join(terms, "+"));
  }
  return validate_ring(std::move(t), "GF(" + std::to_string(q) + ")", std::move(names));
}

std::size_t characteristic(const FiniteRing& ring) {
  std::size_t k = 1;
  for (Element x = ring.one(); x != ring.zero(); x = ring.add(x, ring.one())) ++k;
  return k;
}

RingHom frobenius(const RingPtr& ring) {
  const std::size_t p = characteristic(*ring);
  std::vector<Element> map(ring->order());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = ring->pow(static_cast<Element>(a), p);
  try {
    return validate_hom(ring, ring, std::move(map));
  } catch (const HomViolation& e) {
    throw InvalidEndomorphism("a -> a^" + std::to_string(p) + " is not an endomorphism of " + ring->label());
  }
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

RingPtr direct_product(const std::vector<RingPtr>& factors, std::string label) {
  if (factors.empty()) throw InvalidTables("direct product needs at least one factor");
  if (factors.size() == 1 && label.empty()) return factors.front();
  std::vector<Component> parts;
  std::vector<std::string> labels;
  std::vector<Element> one;
  for (const auto& f : factors) {
    parts.push_back(component(*f));
    labels.push_back(f->label());
    one.push_back(f->one());
  }
  const MulFn mul = [&](const Element* a, const Element* b, Element* out) {
    for (std::size_t i = 0; i < factors.size(); ++i) out[i] = factors[i]->mul(a[i], b[i]);
  };
  if (label.empty()) label = "Prod(" + join(labels, ",") + ")";
  return build_tuple_ring(parts, mul, one, tuple_names(parts), std::move(label));
}

RingPtr matrix_ring(const RingPtr& ring, std::size_t n, std::string label) {
  if (n < 1) throw InvalidTables("matrix size must be >= 1");
  enforce_order_guard(guarded_power(ring->order(), n * n));
  const FiniteRing& r = *ring;
  const MulFn mul = [&](const Element* a, const Element* b, Element* out) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Element acc = r.zero();
        for (std::size_t k = 0; k < n; ++k) acc = r.add(acc, r.mul(a[i * n + k], b[k * n + j]));
        out[i * n + j] = acc;
      }
  };
  if (label.empty()) label = "M(" + std::to_string(n) + "," + r.label() + ")";
  return build_tuple_ring(repeat(r, n * n), mul, identity_matrix(r, n), square_matrix_names(r, n), std::move(label));
}

RingPtr upper_triangular(const RingPtr& ring, std::size_t n, std::string label) {
  if (n < 1) throw InvalidTables("matrix size must be >= 1");
  const std::size_t k = n * (n + 1) / 2;
  enforce_order_guard(guarded_power(ring->order(), k));
  const FiniteRing& r = *ring;
  // slot[i][j] for i <= j in row-major order.
  std::vector<std::size_t> slot(n * n, 0);
  for (std::size_t i = 0, s = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) slot[i * n + j] = s++;
  const MulFn mul = [&](const Element* a, const Element* b, Element* out) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Element acc = r.zero();
        for (std::size_t m = i; m <= j; ++m) acc = r.add(acc, r.mul(a[slot[i * n + m]], b[slot[m * n + j]]));
        out[slot[i * n + j]] = acc;
      }
  };
  std::vector<Element> one(k, r.zero());
  for (std::size_t i = 0; i < n; ++i) one[slot[i * n + i]] = r.one();
  const NameFn name = [&](const Element* d) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j < n; ++j) row.push_back(j < i ? r.element_name(r.zero()) : r.element_name(d[slot[i * n + j]]));
      rows.push_back("[" + join(row, ",") + "]");
    }
    return "[" + join(rows, ",") + "]";
  };
  if (label.empty()) label = "T(" + std::to_string(n) + "," + r.label() + ")";
  return build_tuple_ring(repeat(r, k), mul, one, name, std::move(label));
}

RingPtr truncated_skew_poly(const RingPtr& ring, const RingHom& alpha, std::size_t n, std::string label) {
  if (n < 2) throw InvalidTables("truncation degree must be >= 2");
  if (alpha.source->order() != ring->order() || alpha.target->order() != ring->order()) {
    throw InvalidEndomorphism("alpha must map " + ring->label() + " to itself");
  }
  try {
    validate_hom(ring, ring, alpha.map);
  } catch (const HomViolation& e) {
    throw InvalidEndomorphism(std::string("alpha is not an endomorphism: ") + e.what());
  }
  enforce_order_guard(guarded_power(ring->order(), n));
  const FiniteRing& r = *ring;
  // powers[i][x] = alpha^i(x)
  std::vector<std::vector<Element>> powers(n, std::vector<Element>(r.order()));
  for (std::size_t x = 0; x < r.order(); ++x) powers[0][x] = static_cast<Element>(x);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t x = 0; x < r.order(); ++x) powers[i][x] = alpha.map[powers[i - 1][x]];
  const MulFn mul = [&](const Element* a, const Element* b, Element* out) {
    for (std::size_t d = 0; d < n; ++d) out[d] = r.zero();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) out[i + j] = r.add(out[i + j], r.mul(a[i], powers[i][b[j]]));
  };
  std::vector<Element> one(n, r.zero());
  one[0] = r.one();
  if (label.empty()) label = "TruncSkew(" + r.label() + "," + alpha_name(ring, alpha) + "," + std::to_string(n) + ")";
  const auto parts = repeat(r, n);
  return build_tuple_ring(parts, mul, one, tuple_names(parts), std::move(label));
}

RingPtr trivial_extension(const RingPtr& ring, const Bimodule& module, std::string label) {
  require_same_ring(ring, module.left, "trivial_extension");
  require_same_ring(ring, module.right, "trivial_extension");
  const FiniteRing& r = *ring;
  const Bimodule& m = module;
  const MulFn mul = [&](const Element* a, const Element* b, Element* out) {
    out[0] = r.mul(a[0], b[0]);
    out[1] = m.plus(m.act_left(a[0], b[1]), m.act_right(a[1], b[0]));
  };
  if (label.empty()) label = "Triv(" + r.label() + "," + m.label + ")";
  const std::vector<Component> parts{component(r), component(m)};
  RingPtr t = build_tuple_ring(parts, mul, {r.one(), m.zero}, tuple_names(parts), std::move(label));

  // U(T) = T(U(R), M) and Delta(T) = T(Delta(R), M), elementwise.
  const ElementSet ur = units(r);
  const ElementSet dr = delta_set(r);
  const ElementSet ut = units(*t);
  const ElementSet dt = delta_set(*t);
  for (std::size_t code = 0; code < t->order(); ++code) {
    const std::size_t first = code / m.order;
    if (ut.contains(code) != ur.contains(first)) {
      throw InternalInconsistency("U(T(R,M)) != T(U(R),M) for " + t->label());
    }
    if (dt.contains(code) != dr.contains(first)) {
      throw InternalInconsistency("Delta(T(R,M)) != T(Delta(R),M) for " + t->label());
    }
  }
  return t;
}

RingPtr dt_extension(const RingPtr& ring, const Bimodule& module, std::string label) {
  require_same_ring(ring, module.left, "dt_extension");
  require_same_ring(ring, module.right, "dt_extension");
  const FiniteRing& r = *ring;
  const Bimodule& m = module;
  enforce_order_guard(guarded_power(guarded_product(r.order(), m.order), 2));
  const MulFn mul = [&](const Element* x, const Element* y, Element* out) {
    const Element a1 = x[0], m1 = x[1], b1 = x[2], n1 = x[3];
    const Element a2 = y[0], m2 = y[1], b2 = y[2], n2 = y[3];
    out[0] = r.mul(a1, a2);
    out[1] = m.plus(m.act_left(a1, m2), m.act_right(m1, a2));
    out[2] = r.add(r.mul(a1, b2), r.mul(b1, a2));
    out[3] = m.plus(m.plus(m.act_left(a1, n2), m.act_right(m1, b2)), m.plus(m.act_left(b1, m2), m.act_right(n1, a2)));
  };
  if (label.empty()) label = "DT(" + r.label() + "," + m.label + ")";
  const std::vector<Component> parts{component(r), component(m), component(r), component(m)};
  RingPtr dt = build_tuple_ring(parts, mul, {r.one(), m.zero, r.zero(), m.zero}, tuple_names(parts), std::move(label));

  // With A = T(R,M) coded as (a,m), the code of ((a,m),(b,n)) in T(A,A)
  // coincides with the code of (a,m,b,n), so the tables must be identical.
  const RingPtr a = trivial_extension(ring, module);
  const RingPtr nested = trivial_extension(a, regular_bimodule(a));
  if (nested->add_table() != dt->add_table() || nested->mul_table() != dt->mul_table() ||
      nested->one() != dt->one() || nested->zero() != dt->zero()) {
    throw InternalInconsistency("DT(R,M) differs from T(T(R,M),T(R,M)) for " + dt->label());
  }
  return dt;
}

RingPtr formal_triangular(const RingPtr& rp, const RingPtr& sp, const Bimodule& module, std::string label) {
  require_same_ring(rp, module.left, "formal_triangular");
  require_same_ring(sp, module.right, "formal_triangular");
  const FiniteRing& r = *rp;
  const FiniteRing& s = *sp;
  const Bimodule& m = module;
  const MulFn mul = [&](const Element* x, const Element* y, Element* out) {
    out[0] = r.mul(x[0], y[0]);
    out[1] = m.plus(m.act_left(x[0], y[1]), m.act_right(x[1], y[2]));
    out[2] = s.mul(x[2], y[2]);
  };
  if (label.empty()) label = "FT(" + r.label() + "," + s.label() + "," + m.label + ")";
  const std::vector<Component> parts{component(r), component(m), component(s)};
  return build_tuple_ring(parts, mul, {r.one(), m.zero, s.one()}, tuple_names(parts), std::move(label));
}

RingPtr generalized_matrix_ks(const RingPtr& ring, Element s, std::string label) {
  const FiniteRing& r = *ring;
  if (s >= r.order()) throw IndexOutOfRange("s is not an element of " + r.label());
  if (!center(r).contains(s)) throw NotCentral(r.element_name(s) + " is not central in " + r.label());
  enforce_order_guard(guarded_power(r.order(), 4));
  const MulFn mul = [&](const Element* x, const Element* y, Element* out) {
    const Element a1 = x[0], x1 = x[1], y1 = x[2], b1 = x[3];
    const Element a2 = y[0], x2 = y[1], y2 = y[2], b2 = y[3];
    out[0] = r.add(r.mul(a1, a2), r.mul(s, r.mul(x1, y2)));
    out[1] = r.add(r.mul(a1, x2), r.mul(x1, b2));
    out[2] = r.add(r.mul(y1, a2), r.mul(b1, y2));
    out[3] = r.add(r.mul(s, r.mul(y1, x2)), r.mul(b1, b2));
  };
  if (label.empty()) label = "K(" + r.label() + ",s=" + r.element_name(s) + ")";
  return build_tuple_ring(repeat(r, 4), mul, identity_matrix(r, 2), square_matrix_names(r, 2), std::move(label));
}

int formal_matrix_exponent(std::size_t i, std::size_t k, std::size_t j) {
  return 1 + static_cast<int>(i == j) - static_cast<int>(i == k) - static_cast<int>(k == j);
}

RingPtr formal_matrix_mns(const RingPtr& ring, std::size_t n, Element s, std::string label) {
  const FiniteRing& r = *ring;
  if (n < 1) throw InvalidTables("matrix size must be >= 1");
  if (s >= r.order()) throw IndexOutOfRange("s is not an element of " + r.label());
  if (!center(r).contains(s)) throw NotCentral(r.element_name(s) + " is not central in " + r.label());
  enforce_order_guard(guarded_power(r.order(), n * n));
  const std::array<Element, 3> spow{r.one(), s, r.mul(s, s)};
  std::vector<Element> scale(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) scale[(i * n + k) * n + j] = spow[formal_matrix_exponent(i, k, j)];
  const MulFn mul = [&](const Element* a, const Element* b, Element* out) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Element acc = r.zero();
        for (std::size_t k = 0; k < n; ++k)
          acc = r.add(acc, r.mul(scale[(i * n + k) * n + j], r.mul(a[i * n + k], b[k * n + j])));
        out[i * n + j] = acc;
      }
  };
  if (label.empty()) label = "FM(" + std::to_string(n) + "," + r.label() + ",s=" + r.element_name(s) + ")";
  return build_tuple_ring(repeat(r, n * n), mul, identity_matrix(r, n), square_matrix_names(r, n), std::move(label));
}

namespace {

/// Group elements in coefficient order: identity first, then ascending.
std::vector<std::size_t> coefficient_order(const FiniteGroup& g) {
  std::vector<std::size_t> pos{g.identity};
  for (std::size_t x = 0; x < g.order; ++x)
    if (x != g.identity) pos.push_back(x);
  return pos;
}

}  // namespace

RingPtr group_ring(const RingPtr& ring, const FiniteGroup& group, std::string label) {
  const FiniteRing& r = *ring;
  const std::size_t k = group.order;
  enforce_order_guard(guarded_power(r.order(), k));
  const auto pos = coefficient_order(group);
  std::vector<std::size_t> slot_of(k);
  for (std::size_t i = 0; i < k; ++i) slot_of[pos[i]] = i;
  // prod[i][j] = slot of pos[i]·pos[j]
  std::vector<std::size_t> prod(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i * k + j] = slot_of[group.op(pos[i], pos[j])];
  const MulFn mul = [&](const Element* a, const Element* b, Element* out) {
    for (std::size_t i = 0; i < k; ++i) out[i] = r.zero();
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i] == r.zero()) continue;
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t t = prod[i * k + j];
        out[t] = r.add(out[t], r.mul(a[i], b[j]));
      }
    }
  };
  std::vector<Element> one(k, r.zero());
  one[0] = r.one();
  const NameFn name = [&](const Element* d) {
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < k; ++i) {
      if (d[i] == r.zero()) continue;
      if (i == 0) {
        terms.push_back(r.element_name(d[i]));
      } else {
        const std::string coef = d[i] == r.one() ? "" : r.element_name(d[i]);
        terms.push_back(coef + group.names[pos[i]]);
      }
    }
    return terms.empty() ? r.element_name(r.zero()) : join(terms, "+");
  };
  if (label.empty()) label = "GR(" + r.label() + "," + group.label + ")";
  return build_tuple_ring(repeat(r, k), mul, one, name, std::move(label));
}

Augmentation augmentation(const RingPtr& rg, const RingPtr& base, const FiniteGroup& group) {
  const FiniteRing& r = *base;
  const std::size_t k = group.order;
  if (guarded_power(r.order(), k) != rg->order()) {
    throw InvalidTables(rg->label() + " is not a group ring of " + group.label + " over " + r.label());
  }
  std::vector<Element> map(rg->order());
  for (std::size_t code = 0; code < rg->order(); ++code) {
    std::size_t rest = code;
    Element sum = r.zero();
    for (std::size_t i = 0; i < k; ++i, rest /= r.order()) sum = r.add(sum, static_cast<Element>(rest % r.order()));
    map[code] = sum;
  }
  RingHom eps = validate_hom(rg, base, std::move(map));
  ElementSet ker = eps.kernel();
  return Augmentation{std::move(eps), std::move(ker)};
}

}  // namespace deltaring
