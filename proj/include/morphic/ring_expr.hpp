#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "morphic/ring.hpp"

namespace morphic {

/// Bimodule argument of trivext.
struct ModuleExpr {
  enum class Kind { Self, Ideal, Tables };
  Kind kind = Kind::Self;
  std::size_t generator = 0;  // Ideal
  std::string path;           // Tables

  friend bool operator==(const ModuleExpr&, const ModuleExpr&) = default;
};

/// Syntax tree of a ring construction.
///
///   expr := "z" INT | "gf(" INT "," INT ")" | "prod(" expr {"," expr} ")"
///         | "mat(" expr "," INT ")" | "tri(" expr "," INT ")"
///         | "poly(" expr "," INT ")" | "trivext(" expr "," mod ")" | "opp(" expr ")"
///   mod  := "self" | "ideal(" INT ")" | "tables(" path ")"
struct RingExpr {
  enum class Kind { Zmod, Gf, Prod, Mat, Tri, Poly, TrivExt, Opp };
  Kind kind = Kind::Zmod;
  std::size_t n = 0;  // modulus, prime, or matrix size / truncation length
  std::size_t k = 0;  // gf degree
  std::vector<RingExpr> args;
  ModuleExpr module;
  std::size_t position = 0;  // column of the constructor, not part of equality

  friend bool operator==(const RingExpr& a, const RingExpr& b) {
    return a.kind == b.kind && a.n == b.n && a.k == b.k && a.args == b.args && a.module == b.module;
  }
};

/// Throws ParseError with the 0-based column of the problem.
RingExpr parse_ring_expr(std::string_view text);

/// Canonical text with no spaces; matches FiniteRing::construction().
std::string serialize(const RingExpr& expr);

/// Order of the ring the expression builds, saturating. Small sub-rings
/// may be built to size ideal(...) bimodules.
std::size_t projected_order(const RingExpr& expr);

/// Builds the ring. Throws CapExceeded before building anything too large,
/// ParseError for semantic problems (bad generator, non-commutative base).
FiniteRing evaluate(const RingExpr& expr, std::size_t cap);

/// parse + evaluate.
FiniteRing build_ring(std::string_view text, std::size_t cap);

}  // namespace morphic
