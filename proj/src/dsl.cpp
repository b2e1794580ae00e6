#include "deltaring/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "deltaring/constructions.hpp"
#include "deltaring/errors.hpp"
#include "deltaring/structure.hpp"
#include "deltaring/subsets.hpp"

namespace deltaring {

namespace {

constexpr std::uint64_t kMaxLiteral = 1'000'000;

const std::map<std::string, ExprKind, std::less<>>& constructors() {
  static const std::map<std::string, ExprKind, std::less<>> table{
      {"Prod", ExprKind::product},     {"M", ExprKind::matrix},       {"T", ExprKind::triangular},
      {"TruncSkew", ExprKind::trunc_skew}, {"Triv", ExprKind::triv},  {"DT", ExprKind::dt},
      {"FT", ExprKind::formal_tri},    {"K", ExprKind::ks},           {"FM", ExprKind::fmns},
      {"GR", ExprKind::group_ring},    {"Quot", ExprKind::quotient},  {"Corner", ExprKind::corner},
  };
  return table;
}

std::string ctor_name(ExprKind kind) {
  for (const auto& [name, k] : constructors())
    if (k == kind) return name;
  return kind == ExprKind::galois ? "GF" : "Z";
}

bool is_group_name(const std::string& w) {
  if (w == "V4" || w == "S3") return true;
  return w.size() == 2 && w[0] == 'C' && w[1] >= '1' && w[1] <= '6';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingExpr parse() {
    RingExpr e = parse_expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input");
    return e;
  }

 private:
  struct Arg {
    enum class Kind { expr, number, word, keyed } kind;
    std::size_t pos = 0;
    RingExpr expr;
    std::uint64_t number = 0;
    std::string word;  // word, or key of a keyed argument
  };

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool at_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  bool at_alpha() {
    skip();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }
  void expect(char c) {
    if (!at(c)) throw SyntaxError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    if (!at_alpha()) throw SyntaxError(pos_, "identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    if (!at_digit()) throw SyntaxError(pos_, "integer");
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > kMaxLiteral) throw SyntaxError(start, "integer <= " + std::to_string(kMaxLiteral));
      ++pos_;
    }
    return value;
  }

  static bool is_z_name(const std::string& id) {
    return id.size() >= 2 && id[0] == 'Z' &&
           std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  bool starts_expr(const std::string& id) {
    return id == "Z" || is_z_name(id) || id == "GF" || constructors().count(id) > 0;
  }

  RingExpr parse_expr() {
    skip();
    const std::size_t start = pos_;
    if (!at_alpha()) throw SyntaxError(pos_, "ring expression");
    const std::string id = identifier();
    if (!starts_expr(id)) throw UnknownName("unknown ring name '" + id + "' at position " + std::to_string(start));
    return finish_expr(id, start);
  }

  RingExpr finish_expr(const std::string& id, std::size_t start) {
    RingExpr e;
    if (id == "Z" || is_z_name(id)) {
      e.kind = ExprKind::integers;
      if (id == "Z") {
        e.numbers.push_back(integer());
      } else {
        if (id.size() > 8) throw SyntaxError(start + 1, "integer <= " + std::to_string(kMaxLiteral));
        const std::uint64_t n = std::stoull(id.substr(1));
        if (n > kMaxLiteral) throw SyntaxError(start + 1, "integer <= " + std::to_string(kMaxLiteral));
        e.numbers.push_back(n);
      }
      return e;
    }
    if (id == "GF") {
      e.kind = ExprKind::galois;
      expect('(');
      e.numbers.push_back(integer());
      expect(')');
      return e;
    }
    e.kind = constructors().find(id)->second;
    expect('(');
    std::vector<Arg> args;
    if (!at(')')) {
      args.push_back(parse_arg());
      while (at(',')) {
        ++pos_;
        args.push_back(parse_arg());
      }
    }
    expect(')');
    bind(e, id, args);
    return e;
  }

  Arg parse_arg() {
    skip();
    Arg a;
    a.pos = pos_;
    if (at_digit()) {
      a.kind = Arg::Kind::number;
      a.number = integer();
      return a;
    }
    if (!at_alpha()) throw SyntaxError(pos_, "argument");
    const std::string id = identifier();
    if (at('=')) {
      ++pos_;
      a.kind = Arg::Kind::keyed;
      a.word = id;
      a.number = integer();
      return a;
    }
    if (starts_expr(id)) {
      a.kind = Arg::Kind::expr;
      a.expr = finish_expr(id, a.pos);
      return a;
    }
    a.kind = Arg::Kind::word;
    a.word = id;
    return a;
  }

  // -- binding ---------------------------------------------------------------

  static void arity(const std::string& ctor, const std::vector<Arg>& args, std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      const std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
      throw BadArity(ctor + " expects " + want + " argument(s), got " + std::to_string(args.size()));
    }
  }
  static RingExpr take_expr(const Arg& a) {
    if (a.kind != Arg::Kind::expr) throw SyntaxError(a.pos, "ring expression");
    return a.expr;
  }
  static std::uint64_t take_number(const Arg& a) {
    if (a.kind != Arg::Kind::number) throw SyntaxError(a.pos, "integer");
    return a.number;
  }
  static std::uint64_t take_keyed(const Arg& a, const std::string& key) {
    if (a.kind != Arg::Kind::keyed || a.word != key) throw SyntaxError(a.pos, key + "=<integer>");
    return a.number;
  }
  static std::string take_word(const Arg& a, const std::string& expected) {
    if (a.kind != Arg::Kind::word) throw SyntaxError(a.pos, expected);
    return a.word;
  }
  /// Module slot: a ring expression or the literal 0.
  static void take_module(RingExpr& e, const Arg& a) {
    if (a.kind == Arg::Kind::number && a.number == 0) {
      e.zero_module = true;
    } else if (a.kind == Arg::Kind::expr) {
      e.children.push_back(a.expr);
    } else {
      throw SyntaxError(a.pos, "module (ring expression or 0)");
    }
  }

  static void bind(RingExpr& e, const std::string& ctor, const std::vector<Arg>& args) {
    switch (e.kind) {
      case ExprKind::product:
        arity(ctor, args, 1, 16);
        for (const auto& a : args) e.children.push_back(take_expr(a));
        break;
      case ExprKind::matrix:
      case ExprKind::triangular:
        arity(ctor, args, 2, 2);
        e.numbers.push_back(take_number(args[0]));
        e.children.push_back(take_expr(args[1]));
        break;
      case ExprKind::trunc_skew: {
        arity(ctor, args, 3, 3);
        e.children.push_back(take_expr(args[0]));
        e.symbol = take_word(args[1], "endomorphism (id or frob)");
        if (e.symbol != "id" && e.symbol != "frob") throw UnknownName("unknown endomorphism '" + e.symbol + "'");
        e.numbers.push_back(take_number(args[2]));
        break;
      }
      case ExprKind::triv:
      case ExprKind::dt:
        arity(ctor, args, 1, 2);
        e.children.push_back(take_expr(args[0]));
        if (args.size() == 2) take_module(e, args[1]);
        break;
      case ExprKind::formal_tri:
        arity(ctor, args, 3, 3);
        e.children.push_back(take_expr(args[0]));
        e.children.push_back(take_expr(args[1]));
        take_module(e, args[2]);
        break;
      case ExprKind::ks:
        arity(ctor, args, 2, 2);
        e.children.push_back(take_expr(args[0]));
        e.numbers.push_back(take_keyed(args[1], "s"));
        break;
      case ExprKind::fmns:
        arity(ctor, args, 3, 3);
        e.numbers.push_back(take_number(args[0]));
        e.children.push_back(take_expr(args[1]));
        e.numbers.push_back(take_keyed(args[2], "s"));
        break;
      case ExprKind::group_ring:
        arity(ctor, args, 2, 2);
        e.children.push_back(take_expr(args[0]));
        e.symbol = take_word(args[1], "group (C1..C6, V4, S3)");
        if (!is_group_name(e.symbol)) throw UnknownName("unknown group '" + e.symbol + "'");
        break;
      case ExprKind::quotient:
        arity(ctor, args, 2, 64);
        e.children.push_back(take_expr(args[0]));
        if (args[1].kind == Arg::Kind::word) {
          if (args[1].word != "J") throw UnknownName("unknown ideal '" + args[1].word + "'");
          arity(ctor + "(e,J)", args, 2, 2);
          e.symbol = "J";
        } else {
          for (std::size_t i = 1; i < args.size(); ++i) e.numbers.push_back(take_number(args[i]));
        }
        break;
      case ExprKind::corner:
        arity(ctor, args, 2, 2);
        e.children.push_back(take_expr(args[0]));
        e.numbers.push_back(take_number(args[1]));
        break;
      case ExprKind::integers:
      case ExprKind::galois:
        break;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join_children(const RingExpr& e, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < e.children.size(); ++i) {
    if (i > from) out += ",";
    out += print_ring_expr(e.children[i]);
  }
  return out;
}

// -- building -----------------------------------------------------------------

std::mutex g_cache_mutex;
std::map<std::string, RingPtr, std::less<>> g_cache;

RingPtr relabel(const RingPtr& ring, const std::string& label) {
  return validate_ring(ring->tables(), label, ring->element_names());
}

Element element_param(const FiniteRing& ring, std::uint64_t k, const char* what) {
  if (k >= ring.order()) {
    throw BindingError(std::string(what) + " " + std::to_string(k) + " is not an element index of " + ring.label());
  }
  return static_cast<Element>(k);
}

std::size_t size_param(std::uint64_t n, const char* what) {
  if (n < 1 || n > 64) throw BindingError(std::string(what) + " must be between 1 and 64");
  return static_cast<std::size_t>(n);
}

/// The canonical unital map R -> S: identity when the tables agree, otherwise
/// k·1_R -> k·1_S when R is additively generated by 1.
RingHom canonical_hom(const RingPtr& r, const RingPtr& s) {
  if (r == s || (r->order() == s->order() && r->add_table() == s->add_table() && r->mul_table() == s->mul_table() &&
                 r->one() == s->one() && r->zero() == s->zero())) {
    return RingHom{r, s, identity_hom(r).map};
  }
  if (characteristic(*r) != r->order()) {
    throw BindingError("no canonical map " + r->label() + " -> " + s->label() + " (" + r->label() +
                       " is not cyclic)");
  }
  std::vector<Element> map(r->order());
  Element x = r->zero();
  Element y = s->zero();
  for (std::size_t k = 0; k < r->order(); ++k) {
    map[x] = y;
    x = r->add(x, r->one());
    y = s->add(y, s->one());
  }
  try {
    return validate_hom(r, s, std::move(map));
  } catch (const HomViolation&) {
    throw BindingError("no canonical map " + r->label() + " -> " + s->label());
  }
}

/// Module of Triv / DT: regular by default, 0, or S via the canonical map.
Bimodule module_for(const RingExpr& e, const RingPtr& base) {
  if (e.zero_module) return zero_bimodule(base, base);
  if (e.children.size() < 2) return regular_bimodule(base);
  const RingPtr s = build_ring(e.children[1]);
  const RingHom f = canonical_hom(base, s);
  return bimodule_via_homs(f, f, print_ring_expr(e.children[1]));
}

RingPtr build_uncached(const RingExpr& e, const std::string& label) {
  switch (e.kind) {
    case ExprKind::integers: {
      if (e.numbers[0] < 2) throw BindingError("Z<n> needs n >= 2");
      enforce_order_guard(e.numbers[0]);
      return integers_mod(e.numbers[0]);
    }
    case ExprKind::galois:
      return galois_field(e.numbers[0]);
    case ExprKind::product: {
      std::vector<RingPtr> factors;
      for (const auto& c : e.children) factors.push_back(build_ring(c));
      return direct_product(factors, label);
    }
    case ExprKind::matrix:
      return matrix_ring(build_ring(e.children[0]), size_param(e.numbers[0], "matrix size"), label);
    case ExprKind::triangular:
      return upper_triangular(build_ring(e.children[0]), size_param(e.numbers[0], "matrix size"), label);
    case ExprKind::trunc_skew: {
      const RingPtr base = build_ring(e.children[0]);
      RingHom alpha = identity_hom(base);
      if (e.symbol == "frob") {
        if (e.children[0].kind != ExprKind::galois) {
          throw BindingError("frob binds only on GF(q), not on " + print_ring_expr(e.children[0]));
        }
        alpha = frobenius(base);
      }
      if (e.numbers[0] < 2 || e.numbers[0] > 64) throw BindingError("truncation degree must be between 2 and 64");
      return truncated_skew_poly(base, alpha, e.numbers[0], label);
    }
    case ExprKind::triv: {
      const RingPtr base = build_ring(e.children[0]);
      return trivial_extension(base, module_for(e, base), label);
    }
    case ExprKind::dt: {
      const RingPtr base = build_ring(e.children[0]);
      return dt_extension(base, module_for(e, base), label);
    }
    case ExprKind::formal_tri: {
      const RingPtr r = build_ring(e.children[0]);
      const RingPtr s = build_ring(e.children[1]);
      if (e.zero_module) return formal_triangular(r, s, zero_bimodule(r, s), label);
      const RingPtr m = build_ring(e.children[2]);
      return formal_triangular(r, s, bimodule_via_homs(canonical_hom(r, m), canonical_hom(s, m), print_ring_expr(e.children[2])),
                               label);
    }
    case ExprKind::ks: {
      const RingPtr base = build_ring(e.children[0]);
      return generalized_matrix_ks(base, element_param(*base, e.numbers[0], "s"), label);
    }
    case ExprKind::fmns: {
      const RingPtr base = build_ring(e.children[0]);
      return formal_matrix_mns(base, size_param(e.numbers[0], "matrix size"), element_param(*base, e.numbers[1], "s"),
                               label);
    }
    case ExprKind::group_ring:
      return group_ring(build_ring(e.children[0]), group_by_name(e.symbol), label);
    case ExprKind::quotient: {
      const RingPtr base = build_ring(e.children[0]);
      ElementSet ideal(base->order());
      if (e.symbol == "J") {
        ideal = jacobson_radical(*base);
      } else {
        for (std::uint64_t g : e.numbers) ideal.insert(element_param(*base, g, "generator"));
        ideal = ideal_generated(*base, ideal);
      }
      return relabel(quotient_ring(base, ideal).ring, label);
    }
    case ExprKind::corner: {
      const RingPtr base = build_ring(e.children[0]);
      return relabel(corner_ring(*base, element_param(*base, e.numbers[0], "idempotent")).ring, label);
    }
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace

RingExpr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_ring_expr(const RingExpr& e) {
  auto num = [&](std::size_t i) { return std::to_string(e.numbers.at(i)); };
  const std::string name = ctor_name(e.kind);
  switch (e.kind) {
    case ExprKind::integers: return "Z" + num(0);
    case ExprKind::galois: return "GF(" + num(0) + ")";
    case ExprKind::product: return name + "(" + join_children(e, 0) + ")";
    case ExprKind::matrix:
    case ExprKind::triangular: return name + "(" + num(0) + "," + print_ring_expr(e.children[0]) + ")";
    case ExprKind::trunc_skew: return name + "(" + print_ring_expr(e.children[0]) + "," + e.symbol + "," + num(0) + ")";
    case ExprKind::triv:
    case ExprKind::dt: {
      std::string out = name + "(" + print_ring_expr(e.children[0]);
      if (e.zero_module) out += ",0";
      if (e.children.size() > 1) out += "," + print_ring_expr(e.children[1]);
      return out + ")";
    }
    case ExprKind::formal_tri:
      return name + "(" + join_children(e, 0) + (e.zero_module ? ",0" : "") + ")";
    case ExprKind::ks: return name + "(" + print_ring_expr(e.children[0]) + ",s=" + num(0) + ")";
    case ExprKind::fmns: return name + "(" + num(0) + "," + print_ring_expr(e.children[0]) + ",s=" + num(1) + ")";
    case ExprKind::group_ring: return name + "(" + print_ring_expr(e.children[0]) + "," + e.symbol + ")";
    case ExprKind::quotient: {
      std::string out = name + "(" + print_ring_expr(e.children[0]);
      if (!e.symbol.empty()) out += "," + e.symbol;
      for (std::uint64_t g : e.numbers) out += "," + std::to_string(g);
      return out + ")";
    }
    case ExprKind::corner: return name + "(" + print_ring_expr(e.children[0]) + "," + num(0) + ")";
  }
  return {};
}

RingPtr build_ring(const RingExpr& expr) {
  const std::string label = print_ring_expr(expr);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (auto it = g_cache.find(label); it != g_cache.end()) return it->second;
  }
  RingPtr ring = build_uncached(expr, label);
  if (ring->label() != label) ring = relabel(ring, label);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  // A concurrent build of the same expression may have won; keep the first.
  return g_cache.emplace(label, std::move(ring)).first->second;
}

RingPtr build_ring(std::string_view text) { return build_ring(parse_ring_expr(text)); }

void clear_build_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.clear();
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<std::string> texts;
    for (int m = 2; m <= 120; ++m) texts.push_back("Z" + std::to_string(m));
    for (int q : {2, 3, 4, 5, 7, 8, 9}) texts.push_back("GF(" + std::to_string(q) + ")");
    for (const char* t : {
             // products
             "Prod(Z2,Z2)", "Prod(Z2,Z3)", "Prod(Z3,Z3)", "Prod(Z2,Z2,Z2)", "Prod(Z3,Z5)", "Prod(Z2,GF(4))",
             "Prod(Z3,GF(4))", "Prod(GF(4),GF(4))", "Prod(Z4,Z3)", "Prod(Z2,Z3,Z5)", "Prod(Z4,Z9)",
             "Prod(T(2,Z2),Z3)", "Prod(M(2,Z2),Z2)", "Prod(Z2,Z2,Z2,Z2,Z2,Z2,Z2,Z2,Z2,Z2)",
             // matrix and triangular rings
             "M(2,Z2)", "M(2,Z3)", "M(2,Z4)", "M(2,GF(4))", "M(3,Z2)",
             "T(1,Z3)", "T(2,Z2)", "T(2,Z3)", "T(2,Z4)", "T(2,GF(4))", "T(3,Z2)", "T(3,Z3)",
             // truncated skew polynomials
             "TruncSkew(Z2,id,2)", "TruncSkew(Z2,id,3)", "TruncSkew(Z2,id,4)", "TruncSkew(Z3,id,2)",
             "TruncSkew(Z3,id,3)", "TruncSkew(Z4,id,2)", "TruncSkew(Z5,id,2)", "TruncSkew(GF(4),frob,2)",
             "TruncSkew(GF(4),frob,3)", "TruncSkew(GF(9),frob,2)", "TruncSkew(GF(8),frob,2)",
             // trivial and DT extensions
             "Triv(Z2,Z2)", "Triv(Z3,Z3)", "Triv(Z4,Z4)", "Triv(Z5,Z5)", "Triv(Z6,Z6)", "Triv(Z9,Z9)",
             "Triv(GF(4),GF(4))", "Triv(Z4,Z2)", "Triv(Z9,Z3)", "Triv(T(2,Z2),T(2,Z2))", "Triv(M(2,Z2),M(2,Z2))",
             "DT(Z2,Z2)", "DT(Z3,Z3)", "DT(Z4,Z4)", "DT(Z5,Z5)", "DT(GF(4),GF(4))", "DT(Z4,Z2)",
             // formal triangular, Morita contexts, formal matrix rings
             "FT(Z2,Z2,Z2)", "FT(Z2,Z3,0)", "FT(Z4,Z2,Z2)", "FT(Z3,Z3,Z3)", "FT(Z4,Z4,Z4)",
             "K(Z2,s=0)", "K(Z2,s=1)", "K(Z3,s=0)", "K(Z3,s=1)", "K(Z4,s=0)", "K(Z4,s=2)",
             "FM(2,Z2,s=0)", "FM(2,Z2,s=1)", "FM(2,Z3,s=0)", "FM(2,Z4,s=2)", "FM(3,Z2,s=0)", "FM(3,Z2,s=1)",
             // group rings
             "GR(Z2,C2)", "GR(Z2,C3)", "GR(Z2,C4)", "GR(Z2,C5)", "GR(Z2,C6)", "GR(Z2,V4)", "GR(Z2,S3)",
             "GR(Z3,C2)", "GR(Z3,C3)", "GR(Z4,C2)", "GR(Z4,C4)", "GR(Z4,V4)", "GR(Z5,C2)", "GR(Z6,C2)",
             "GR(GF(4),C2)", "GR(Z9,C3)", "GR(Z3,S3)",
             // quotients and corners
             "Quot(Z12,6)", "Quot(Z8,4)", "Quot(T(2,Z2),J)", "Quot(DT(Z2,Z2),J)", "Quot(GR(Z4,C2),J)",
             "Quot(T(3,Z2),J)", "Corner(M(2,Z2),8)", "Corner(Prod(Z2,Z3),3)", "Corner(T(2,Z3),9)",
             "Corner(M(2,Z3),27)"}) {
      texts.emplace_back(t);
    }
    std::vector<CatalogEntry> out;
    for (const auto& t : texts) {
      RingExpr e = parse_ring_expr(t);
      out.push_back({print_ring_expr(e), std::move(e)});
    }
    return out;
  }();
  return entries;
}

}  // namespace deltaring
