#include "deltaring/finite_ring.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "deltaring/errors.hpp"
#include "json.hpp"

namespace deltaring {

namespace {

std::atomic<std::size_t> g_order_guard{4096};
std::atomic<std::size_t> g_exhaustive_bound{128};

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

[[noreturn]] void violation(const char* kind, std::size_t a, std::size_t b, std::size_t c) {
  throw AxiomViolation(kind, {a, b, c});
}

void check_shape(const RingTables& t) {
  const std::size_t n = t.order;
  if (n == 0) throw InvalidTables("ring tables must have order >= 1");
  if (n > kMaxRepresentableOrder) {
    throw InvalidTables("ring order " + std::to_string(n) + " exceeds the index type");
  }
  if (t.add.size() != n * n || t.mul.size() != n * n) {
    throw InvalidTables("ring tables must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  auto in_range = [n](Element e) { return e < n; };
  if (!std::all_of(t.add.begin(), t.add.end(), in_range) ||
      !std::all_of(t.mul.begin(), t.mul.end(), in_range)) {
    throw InvalidTables("table entry out of range");
  }
  if (t.zero >= n || t.one >= n) throw InvalidTables("zero/one index out of range");
}

/// Greedy generating set of the magma (R, +): every element is a sum of
/// generators once the loop finishes.
std::vector<Element> additive_generators(const RingTables& t) {
  const std::size_t n = t.order;
  std::vector<char> reached(n, 0);
  std::vector<Element> closure;
  std::vector<Element> gens;
  closure.reserve(n);
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (reached[cand]) continue;
    gens.push_back(static_cast<Element>(cand));
    reached[cand] = 1;
    closure.push_back(static_cast<Element>(cand));
    // Combine every new element with every reached element in both orders.
    for (std::size_t i = closure.size() - 1; i < closure.size(); ++i) {
      const Element x = closure[i];
      for (std::size_t j = 0; j <= i; ++j) {
        const Element y = closure[j];
        for (Element s : {t.add[x * n + y], t.add[y * n + x]}) {
          if (!reached[s]) {
            reached[s] = 1;
            closure.push_back(s);
          }
        }
      }
    }
  }
  return gens;
}

void check_additive_basics(const RingTables& t) {
  const std::size_t n = t.order;
  const auto& add = t.add;
  for (std::size_t a = 0; a < n; ++a) {
    if (add[t.zero * n + a] != a || add[a * n + t.zero] != a) {
      violation("additive-identity", t.zero, a, 0);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (add[a * n + b] != add[b * n + a]) violation("additive-commutativity", a, b, 0);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const auto row = add.begin() + static_cast<std::ptrdiff_t>(a * n);
    if (std::find(row, row + static_cast<std::ptrdiff_t>(n), t.zero) == row + static_cast<std::ptrdiff_t>(n)) {
      violation("additive-inverse", a, 0, 0);
    }
  }
}

void check_multiplicative_identity(const RingTables& t) {
  const std::size_t n = t.order;
  for (std::size_t a = 0; a < n; ++a) {
    if (t.mul[t.one * n + a] != a || t.mul[a * n + t.one] != a) {
      violation("multiplicative-identity", t.one, a, 0);
    }
  }
}

void validate_exhaustive(const RingTables& t) {
  const std::size_t n = t.order;
  const auto& add = t.add;
  const auto& mul = t.mul;
  check_additive_basics(t);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = add[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (add[ab * n + c] != add[a * n + add[b * n + c]]) violation("additive-associativity", a, b, c);
    }
  check_multiplicative_identity(t);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]])
          violation("left-distributivity", a, b, c);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[add[a * n + b] * n + c] != add[mul[a * n + c] * n + mul[b * n + c]])
          violation("right-distributivity", a, b, c);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = mul[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (mul[ab * n + c] != mul[a * n + mul[b * n + c]]) violation("multiplicative-associativity", a, b, c);
    }
}

// Complete check with fewer triples: Light's associativity test for +, then
// distributivity against additive generators, then associativity of the
// (now bi-additive) product on generator triples.
void validate_reduced(const RingTables& t) {
  const std::size_t n = t.order;
  const auto& add = t.add;
  const auto& mul = t.mul;
  check_additive_basics(t);
  const std::vector<Element> gens = additive_generators(t);
  for (Element g : gens)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xg = add[x * n + g];
      for (std::size_t y = 0; y < n; ++y)
        if (add[xg * n + y] != add[x * n + add[g * n + y]]) violation("additive-associativity", x, g, y);
    }
  check_multiplicative_identity(t);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (Element g : gens)
        if (mul[a * n + add[b * n + g]] != add[mul[a * n + b] * n + mul[a * n + g]])
          violation("left-distributivity", a, b, g);
  for (std::size_t a = 0; a < n; ++a)
    for (Element g : gens)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[add[a * n + g] * n + c] != add[mul[a * n + c] * n + mul[g * n + c]])
          violation("right-distributivity", a, g, c);
  for (Element a : gens)
    for (Element b : gens)
      for (Element c : gens)
        if (mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]])
          violation("multiplicative-associativity", a, b, c);
}

}  // namespace

std::size_t order_guard() noexcept { return g_order_guard.load(); }

void set_order_guard(std::size_t limit) {
  if (limit < 2 || limit > kMaxRepresentableOrder) {
    throw std::invalid_argument("order guard must lie in [2, " +
                                std::to_string(kMaxRepresentableOrder) + "]");
  }
  g_order_guard.store(limit);
}

void enforce_order_guard(std::size_t requested) {
  const std::size_t limit = order_guard();
  if (requested > limit) throw OrderGuardExceeded(requested, limit);
}

std::size_t guarded_product(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t guarded_power(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result = guarded_product(result, base);
  return result;
}

std::size_t exhaustive_validation_bound() noexcept { return g_exhaustive_bound.load(); }
void set_exhaustive_validation_bound(std::size_t bound) noexcept { g_exhaustive_bound.store(bound); }

Element FiniteRing::pow(Element a, std::uint64_t k) const noexcept {
  Element result = one_;
  Element base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Element FiniteRing::multiple_of_one(std::uint64_t k) const noexcept {
  Element result = zero_;
  Element base = one_;
  while (k > 0) {
    if (k & 1u) result = add(result, base);
    base = add(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Element> FiniteRing::find_element(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

RingTables FiniteRing::tables() const { return RingTables{n_, add_, mul_, zero_, one_}; }

RingPtr validate_ring(RingTables tables, std::string label, std::vector<std::string> names,
                      ValidationMode mode) {
  check_shape(tables);
  if (tables.order == 1 || tables.zero == tables.one) {
    violation("zero-equals-one", tables.zero, tables.one, 0);
  }
  if (mode == ValidationMode::automatic) {
    mode = tables.order <= exhaustive_validation_bound() ? ValidationMode::exhaustive
                                                         : ValidationMode::reduced;
  }
  if (mode == ValidationMode::exhaustive) {
    validate_exhaustive(tables);
  } else {
    validate_reduced(tables);
  }

  const std::size_t n = tables.order;
  if (!names.empty() && names.size() != n) {
    throw InvalidTables("element name list must have one entry per element");
  }

  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->n_ = n;
  ring->zero_ = tables.zero;
  ring->one_ = tables.one;
  ring->add_ = std::move(tables.add);
  ring->mul_ = std::move(tables.mul);
  ring->label_ = std::move(label);
  ring->neg_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (ring->add_[a * n + b] == ring->zero_) {
        ring->neg_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  ring->commutative_ = true;
  for (std::size_t a = 0; a < n && ring->commutative_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (ring->mul_[a * n + b] != ring->mul_[b * n + a]) {
        ring->commutative_ = false;
        break;
      }
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t a = 0; a < n; ++a) names.push_back(std::to_string(a));
  }
  ring->names_ = std::move(names);
  return ring;
}

Element element_arith(const FiniteRing& ring, ArithOp op, std::span<const std::uint64_t> args) {
  const std::size_t n = ring.order();
  auto element = [&](std::size_t i) {
    if (args[i] >= n) {
      throw IndexOutOfRange("element index " + std::to_string(args[i]) + " out of range for order " +
                            std::to_string(n));
    }
    return static_cast<Element>(args[i]);
  };
  const std::size_t expected = op == ArithOp::neg ? 1 : 2;
  if (args.size() != expected) throw BadArity("element_arith: expected " + std::to_string(expected) + " arguments");
  switch (op) {
    case ArithOp::add: return ring.add(element(0), element(1));
    case ArithOp::neg: return ring.neg(element(0));
    case ArithOp::sub: return ring.sub(element(0), element(1));
    case ArithOp::mul: return ring.mul(element(0), element(1));
    case ArithOp::pow: return ring.pow(element(0), args[1]);
  }
  throw BadArity("element_arith: unknown operation");
}

std::optional<Element> inverse(const FiniteRing& ring, Element a) {
  const auto row = ring.mul_row(a);
  for (std::size_t b = 0; b < row.size(); ++b) {
    if (row[b] == ring.one() && ring.mul(static_cast<Element>(b), a) == ring.one()) {
      return static_cast<Element>(b);
    }
  }
  return std::nullopt;
}

bool RingHom::is_surjective() const {
  ElementSet image(target->order());
  for (Element b : map) image.insert(b);
  return image.size() == target->order();
}

ElementSet RingHom::kernel() const {
  ElementSet k(source->order());
  for (std::size_t a = 0; a < map.size(); ++a)
    if (map[a] == target->zero()) k.insert(a);
  return k;
}

RingHom validate_hom(RingPtr source, RingPtr target, std::vector<Element> map) {
  const std::size_t n = source->order();
  if (map.size() != n) throw HomViolation("domain-size", map.size(), n);
  for (std::size_t a = 0; a < n; ++a)
    if (map[a] >= target->order()) throw HomViolation("image-out-of-range", a, map[a]);
  if (map[source->zero()] != target->zero()) throw HomViolation("zero", source->zero(), 0);
  if (map[source->one()] != target->one()) throw HomViolation("one", source->one(), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto x = static_cast<Element>(a);
      const auto y = static_cast<Element>(b);
      if (map[source->add(x, y)] != target->add(map[x], map[y])) throw HomViolation("additive", a, b);
      if (map[source->mul(x, y)] != target->mul(map[x], map[y])) throw HomViolation("multiplicative", a, b);
    }
  return RingHom{std::move(source), std::move(target), std::move(map)};
}

RingHom identity_hom(const RingPtr& ring) {
  std::vector<Element> map(ring->order());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = static_cast<Element>(a);
  return RingHom{ring, ring, std::move(map)};
}

std::string dump_ring(const FiniteRing& ring, int indent) {
  const std::size_t n = ring.order();
  nlohmann::ordered_json j;
  j["label"] = ring.label();
  j["order"] = n;
  auto table = [n](const std::vector<Element>& flat) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t a = 0; a < n; ++a) {
      rows.push_back(std::vector<Element>(flat.begin() + static_cast<std::ptrdiff_t>(a * n),
                                          flat.begin() + static_cast<std::ptrdiff_t>((a + 1) * n)));
    }
    return rows;
  };
  j["add"] = table(ring.add_table());
  j["mul"] = table(ring.mul_table());
  j["zero"] = ring.zero();
  j["one"] = ring.one();
  return j.dump(indent);
}

RingPtr load_ring(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidTables(std::string("ring dump is not valid JSON: ") + e.what());
  }
  try {
    RingTables t;
    t.order = j.at("order").get<std::size_t>();
    if (t.order == 0 || t.order > kMaxRepresentableOrder) throw InvalidTables("ring dump order out of range");
    auto flatten = [&](const nlohmann::json& rows, std::vector<Element>& out) {
      if (!rows.is_array() || rows.size() != t.order) throw InvalidTables("ring dump table has wrong row count");
      out.reserve(t.order * t.order);
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != t.order) throw InvalidTables("ring dump table row has wrong length");
        for (const auto& v : row) {
          const auto x = v.get<std::uint64_t>();
          if (x >= t.order) throw InvalidTables("ring dump entry out of range");
          out.push_back(static_cast<Element>(x));
        }
      }
    };
    flatten(j.at("add"), t.add);
    flatten(j.at("mul"), t.mul);
    const auto zero = j.at("zero").get<std::uint64_t>();
    const auto one = j.at("one").get<std::uint64_t>();
    if (zero >= t.order || one >= t.order) throw InvalidTables("ring dump zero/one out of range");
    t.zero = static_cast<Element>(zero);
    t.one = static_cast<Element>(one);
    return validate_ring(std::move(t), j.at("label").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidTables(std::string("malformed ring dump: ") + e.what());
  }
}

}  // namespace deltaring
