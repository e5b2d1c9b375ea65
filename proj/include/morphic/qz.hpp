#pragma once

#include <cstdint>
#include <utility>

#include "morphic/report.hpp"

/// Exact arithmetic in Q/Z and in the trivial extension Z x (Q/Z).
namespace morphic::qz {

/// r/c + Z with gcd(r, c) = 1 and 0 <= r < c.
struct QFrac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Reduces r/c; throws std::invalid_argument for c = 0.
  static QFrac make(std::int64_t r, std::int64_t c);
  bool is_zero() const noexcept { return den == 1; }

  friend bool operator==(const QFrac&, const QFrac&) = default;
};

QFrac operator+(const QFrac& a, const QFrac& b);
QFrac operator-(const QFrac& a);
QFrac operator*(std::int64_t n, const QFrac& q);

/// The cyclic submodule (1/den)Z/Z, or all of Q/Z.
struct CyclicSub {
  bool full = false;
  std::int64_t den = 1;  // ignored when full

  static CyclicSub of(std::int64_t den) { return CyclicSub{false, den}; }
  static CyclicSub whole() { return CyclicSub{true, 0}; }
  bool contains(const QFrac& q) const noexcept { return full || den % q.den == 0; }

  friend bool operator==(const CyclicSub& a, const CyclicSub& b) {
    return a.full == b.full && (a.full || a.den == b.den);
  }
};

/// dZ x part inside Z x (Q/Z). Nonzero d forces part = Q/Z.
struct TEIdeal {
  std::int64_t base = 0;
  CyclicSub part;

  bool contains(std::int64_t n, const QFrac& q) const noexcept;
  friend bool operator==(const TEIdeal&, const TEIdeal&) = default;
};

/// Z-submodule generated by r/c. Throws std::invalid_argument for c = 0.
CyclicSub cyclic_submodule(std::int64_t r, std::int64_t c);

/// (1/b)Z/Z inside (1/a)Z/Z.
bool submodule_leq(std::int64_t a, std::int64_t b);

/// Meet and join of (1/a)Z/Z and (1/b)Z/Z.
std::pair<CyclicSub, CyclicSub> lattice_meet_join(std::int64_t a, std::int64_t b);

/// Positive generator of the annihilator of q in Z.
std::int64_t base_annihilator(const QFrac& q);

/// T (n, q) for T = Z x (Q/Z).
TEIdeal te_principal_ideal(std::int64_t n, const QFrac& q);
/// Left annihilator of (n, q) in T.
TEIdeal te_left_annihilator(std::int64_t n, const QFrac& q);
/// beta with T alpha = l(beta) and l(alpha) = T beta.
std::pair<std::int64_t, QFrac> te_morphic_witness(std::int64_t n, const QFrac& q);

/// Brute-force cross-check of everything above for parameters up to N.
VerificationReport verify_qz_suite(std::int64_t bound);

}  // namespace morphic::qz
