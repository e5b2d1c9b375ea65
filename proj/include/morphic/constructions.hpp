#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "morphic/ring.hpp"

namespace morphic {

enum class MatrixShape { Full, LowerTriangular };

/// Saturating product used for order projections before anything is built.
std::size_t saturating_mul(std::size_t a, std::size_t b);
std::size_t saturating_pow(std::size_t base, std::size_t exponent);

bool is_prime(std::size_t n);

/// Z/nZ with element i the residue i.
FiniteRing make_zmod(std::size_t n, std::size_t cap = kScanOrderCap);

/// Monic irreducible polynomial of degree k over Z_p that is least when
/// monic polynomials are ordered by their code sum(c_i p^i), i < k.
/// Returns the k lower coefficients c_0..c_{k-1}.
std::vector<Element> gf_modulus(std::size_t p, std::size_t k);

/// GF(p^k) = Z_p[t]/(f) with f = gf_modulus(p, k). Element index is
/// sum(c_i p^i) for the residue c_0 + c_1 t + ... .
FiniteRing make_gf(std::size_t p, std::size_t k, std::size_t cap = kScanOrderCap);

/// Componentwise product. Index is mixed radix with the first ring as the
/// least significant digit.
FiniteRing direct_product(std::span<const FiniteRing> rings, std::size_t cap = kScanOrderCap);

/// k x k matrices (or lower-triangular ones). Stored entries are taken
/// row-major; the first stored entry is the least significant digit.
FiniteRing matrix_ring(const FiniteRing& base, std::size_t k, MatrixShape shape,
                       std::size_t cap = kScanOrderCap);

/// base[x]/(x^n), x central. Index is sum(r_i |base|^i).
FiniteRing truncated_poly(const FiniteRing& base, std::size_t n, std::size_t cap = kScanOrderCap);

/// base ⋉ M on pairs (r, m), index r + |base| * m, with
/// (r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 r2).
FiniteRing trivial_extension(const FiniteRing& base, const BimoduleSpec& module,
                             std::size_t cap = kScanOrderCap);

/// Formal triangular ring [[R, V], [0, S]] on triples (r, v, s),
/// index r + |R| * (v + |V| * s).
FiniteRing formal_triangular(const FiniteRing& r, const FiniteRing& s, const BimoduleSpec& v,
                             std::size_t cap = kScanOrderCap);

/// eRe with identity e. Elements keep their relative order from the parent.
FiniteRing pierce_corner(const FiniteRing& ring, Element e);

/// Same elements, multiplication reversed.
FiniteRing opposite(const FiniteRing& ring);

// Bimodules ---------------------------------------------------------------

/// R as an R-R bimodule.
BimoduleSpec regular_bimodule(const FiniteRing& ring);

/// The principal ideal R d of a commutative ring as an R-R bimodule.
BimoduleSpec principal_ideal_bimodule(const FiniteRing& ring, Element generator);

/// The zero (left, right)-bimodule.
BimoduleSpec zero_bimodule(const FiniteRing& left, const FiniteRing& right);

/// Reads "m |R|", then the m x m addition table, the |R| x m left action and
/// the m x |R| right action, all whitespace separated. The zero is the
/// additive identity of the table. Throws StructuralError on bad input.
BimoduleSpec read_bimodule_tables(std::istream& in, const FiniteRing& ring,
                                  std::string description);

}  // namespace morphic
