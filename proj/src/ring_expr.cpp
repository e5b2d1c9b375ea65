#include "morphic/ring_expr.hpp"

#include <cctype>
#include <fstream>
#include <limits>

#include "morphic/constructions.hpp"
#include "morphic/errors.hpp"
#include "morphic/ideals.hpp"

namespace morphic {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RingExpr parse() {
    RingExpr e = expr();
    skip_ws();
    if (i_ != s_.size()) throw ParseError("unexpected trailing input", i_);
    return e;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (i_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", i_);
    if (s_[i_] != c) {
      throw ParseError(std::string("expected '") + c + "', found '" + s_[i_] + "'", i_);
    }
    ++i_;
  }

  /// ',' between the arguments of `name`; a ')' here means too few.
  void separator(const std::string& name, std::size_t arity) {
    if (peek(')')) {
      throw ParseError("arity mismatch: " + name + " takes " + std::to_string(arity) + " arguments",
                       i_);
    }
    expect(',');
  }

  /// Closing ')' of `name`; a ',' here means too many.
  void close(const std::string& name, std::size_t arity) {
    if (peek(',')) {
      throw ParseError("arity mismatch: " + name + " takes " + std::to_string(arity) +
                           (arity == 1 ? " argument" : " arguments"),
                       i_);
    }
    expect(')');
  }

  std::size_t integer() {
    skip_ws();
    const std::size_t start = i_;
    std::size_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      const std::size_t d = static_cast<std::size_t>(s_[i_] - '0');
      if (v > (std::numeric_limits<std::size_t>::max() - d) / 10) {
        throw ParseError("integer too large", start);
      }
      v = v * 10 + d;
      ++i_;
    }
    if (i_ == start) throw ParseError("expected an integer", start);
    return v;
  }

  std::string word() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  std::size_t positive(const std::string& what, std::size_t at) {
    const std::size_t v = integer();
    if (v == 0) throw ParseError(what + " must be at least 1", at);
    return v;
  }

  RingExpr expr() {
    skip_ws();
    RingExpr e;
    e.position = i_;
    if (i_ + 1 < s_.size() && s_[i_] == 'z' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
      ++i_;
      e.kind = RingExpr::Kind::Zmod;
      e.n = integer();
      if (e.n == 0) throw ParseError("z0 is not a finite ring", e.position);
      return e;
    }
    const std::string name = word();
    if (name.empty()) {
      if (i_ >= s_.size()) throw ParseError("expected a ring expression but input ended", i_);
      throw ParseError("expected a ring expression", i_);
    }
    if (name == "gf") {
      e.kind = RingExpr::Kind::Gf;
      expect('(');
      const std::size_t at = i_;
      e.n = integer();
      if (!is_prime(e.n)) throw ParseError("gf: " + std::to_string(e.n) + " is not prime", at);
      separator(name, 2);
      e.k = positive("gf degree", i_);
      close(name, 2);
    } else if (name == "prod") {
      e.kind = RingExpr::Kind::Prod;
      expect('(');
      e.args.push_back(expr());
      while (peek(',')) {
        expect(',');
        e.args.push_back(expr());
      }
      expect(')');
    } else if (name == "mat" || name == "tri" || name == "poly") {
      e.kind = name == "mat"   ? RingExpr::Kind::Mat
               : name == "tri" ? RingExpr::Kind::Tri
                               : RingExpr::Kind::Poly;
      expect('(');
      e.args.push_back(expr());
      separator(name, 2);
      e.n = positive(name == "poly" ? "truncation length" : "matrix size", i_);
      close(name, 2);
    } else if (name == "trivext") {
      e.kind = RingExpr::Kind::TrivExt;
      expect('(');
      e.args.push_back(expr());
      separator(name, 2);
      e.module = module();
      close(name, 2);
    } else if (name == "opp") {
      e.kind = RingExpr::Kind::Opp;
      expect('(');
      e.args.push_back(expr());
      close(name, 1);
    } else {
      throw ParseError("unknown constructor '" + name + "'", e.position);
    }
    return e;
  }

  ModuleExpr module() {
    skip_ws();
    const std::size_t at = i_;
    const std::string name = word();
    ModuleExpr m;
    if (name == "self") {
      m.kind = ModuleExpr::Kind::Self;
    } else if (name == "ideal") {
      m.kind = ModuleExpr::Kind::Ideal;
      expect('(');
      m.generator = integer();
      close(name, 1);
    } else if (name == "tables") {
      m.kind = ModuleExpr::Kind::Tables;
      expect('(');
      skip_ws();
      const std::size_t start = i_;
      while (i_ < s_.size() && s_[i_] != ')') ++i_;
      std::string_view raw = s_.substr(start, i_ - start);
      while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
      if (raw.empty()) throw ParseError("tables() needs a file path", start);
      m.path = std::string(raw);
      expect(')');
    } else if (name.empty()) {
      throw ParseError("expected a bimodule (self, ideal(d) or tables(path))", at);
    } else {
      throw ParseError("unknown bimodule '" + name + "'", at);
    }
    return m;
  }
};

std::string serialize_module(const ModuleExpr& m) {
  switch (m.kind) {
    case ModuleExpr::Kind::Self:
      return "self";
    case ModuleExpr::Kind::Ideal:
      return "ideal(" + std::to_string(m.generator) + ")";
    case ModuleExpr::Kind::Tables:
      return "tables(" + m.path + ")";
  }
  return {};
}

std::size_t table_file_order(const RingExpr& e) {
  std::ifstream in(e.module.path);
  std::size_t m = 0;
  if (!in || !(in >> m)) {
    throw ParseError("cannot read bimodule table file '" + e.module.path + "'", e.position);
  }
  return m;
}

}  // namespace

RingExpr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string serialize(const RingExpr& e) {
  using K = RingExpr::Kind;
  switch (e.kind) {
    case K::Zmod:
      return "z" + std::to_string(e.n);
    case K::Gf:
      return "gf(" + std::to_string(e.n) + "," + std::to_string(e.k) + ")";
    case K::Prod: {
      std::string out = "prod(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ",";
        out += serialize(e.args[i]);
      }
      return out + ")";
    }
    case K::Mat:
      return "mat(" + serialize(e.args[0]) + "," + std::to_string(e.n) + ")";
    case K::Tri:
      return "tri(" + serialize(e.args[0]) + "," + std::to_string(e.n) + ")";
    case K::Poly:
      return "poly(" + serialize(e.args[0]) + "," + std::to_string(e.n) + ")";
    case K::TrivExt:
      return "trivext(" + serialize(e.args[0]) + "," + serialize_module(e.module) + ")";
    case K::Opp:
      return "opp(" + serialize(e.args[0]) + ")";
  }
  return {};
}

std::size_t projected_order(const RingExpr& e) {
  using K = RingExpr::Kind;
  switch (e.kind) {
    case K::Zmod:
      return e.n;
    case K::Gf:
      return saturating_pow(e.n, e.k);
    case K::Prod: {
      std::size_t n = 1;
      for (const auto& a : e.args) n = saturating_mul(n, projected_order(a));
      return n;
    }
    case K::Mat:
      return saturating_pow(projected_order(e.args[0]), saturating_mul(e.n, e.n));
    case K::Tri:
      return saturating_pow(projected_order(e.args[0]), saturating_mul(e.n, e.n + 1) / 2);
    case K::Poly:
      return saturating_pow(projected_order(e.args[0]), e.n);
    case K::Opp:
      return projected_order(e.args[0]);
    case K::TrivExt: {
      const std::size_t base = projected_order(e.args[0]);
      switch (e.module.kind) {
        case ModuleExpr::Kind::Self:
          return saturating_mul(base, base);
        case ModuleExpr::Kind::Tables:
          return saturating_mul(base, table_file_order(e));
        case ModuleExpr::Kind::Ideal: {
          // Too large a base already exceeds any cap on its own.
          if (base > kScanOrderCap || e.module.generator >= base) return base;
          const FiniteRing r = evaluate(e.args[0], kScanOrderCap);
          return saturating_mul(base,
                                principal_ideal(r, Side::Left, static_cast<Element>(e.module.generator))
                                    .count());
        }
      }
    }
  }
  return 0;
}

FiniteRing evaluate(const RingExpr& e, std::size_t cap) {
  using K = RingExpr::Kind;
  const std::size_t projected = projected_order(e);
  if (projected > cap) throw CapExceeded(projected, cap);
  switch (e.kind) {
    case K::Zmod:
      return make_zmod(e.n, cap);
    case K::Gf:
      return make_gf(e.n, e.k, cap);
    case K::Prod: {
      std::vector<FiniteRing> parts;
      for (const auto& a : e.args) parts.push_back(evaluate(a, cap));
      return direct_product(parts, cap);
    }
    case K::Mat:
      return matrix_ring(evaluate(e.args[0], cap), e.n, MatrixShape::Full, cap);
    case K::Tri:
      return matrix_ring(evaluate(e.args[0], cap), e.n, MatrixShape::LowerTriangular, cap);
    case K::Poly:
      return truncated_poly(evaluate(e.args[0], cap), e.n, cap);
    case K::Opp:
      return opposite(evaluate(e.args[0], cap));
    case K::TrivExt: {
      const FiniteRing base = evaluate(e.args[0], cap);
      switch (e.module.kind) {
        case ModuleExpr::Kind::Self:
          return trivial_extension(base, regular_bimodule(base), cap);
        case ModuleExpr::Kind::Ideal:
          if (e.module.generator >= base.order()) {
            throw ParseError("ideal generator " + std::to_string(e.module.generator) +
                                 " is not an element of " + base.construction(),
                             e.position);
          }
          if (!base.is_commutative()) {
            throw ParseError("ideal(...) needs a commutative base ring", e.position);
          }
          return trivial_extension(
              base, principal_ideal_bimodule(base, static_cast<Element>(e.module.generator)), cap);
        case ModuleExpr::Kind::Tables: {
          std::ifstream in(e.module.path);
          if (!in) {
            throw ParseError("cannot read bimodule table file '" + e.module.path + "'", e.position);
          }
          return trivial_extension(
              base, read_bimodule_tables(in, base, "tables(" + e.module.path + ")"), cap);
        }
      }
    }
  }
  throw ParseError("unhandled expression", e.position);
}

FiniteRing build_ring(std::string_view text, std::size_t cap) {
  return evaluate(parse_ring_expr(text), cap);
}

}  // namespace morphic
