#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "morphic/classifier.hpp"
#include "morphic/report.hpp"

namespace morphic {

struct VerifyOptions {
  std::size_t threads = 1;
  std::size_t lattice_cap = kDefaultIdealCap;
  /// Largest truncation length tried by reduced-equivalences.
  std::size_t nmax = 2;
  /// Order cap for rings built inside a suite (truncated polynomials).
  std::size_t scan_cap = kScanOrderCap;
};

// Per-ring suites. Each covers both sides unless noted.

/// Three descriptions of a pseudo-morphic element agree elementwise.
VerificationReport verify_lemma_equivalences(const RingAnalysis& analysis);
/// Constructive witnesses for sums of principal ideals and intersections
/// of annihilators, over every element pair.
VerificationReport verify_witness_identities(const RingAnalysis& analysis);
/// Consequences of left pseudo-morphic (vacuous otherwise).
VerificationReport verify_pseudo_consequences(const RingAnalysis& analysis);
/// pseudo <=> quasi (two-sided), commutative pseudo => morphic,
/// exchange laws, and one-sided quasi <=> pseudo + Bezout.
VerificationReport verify_quasi_equivalence(const RingAnalysis& analysis,
                                            const VerifyOptions& opts = {});
/// Pseudo-morphic finite rings are dual, principal, elemental-annihilator
/// and strongly clean.
VerificationReport verify_finite_qf(const RingAnalysis& analysis, const VerifyOptions& opts = {});
/// semiprime + pseudo <=> regular <=> J = 0, and the p.p. criteria.
VerificationReport verify_regular_criteria(const RingAnalysis& analysis);
/// Reduced rings: nine-way equivalence, plus the transfer from R[x]/(x^n)
/// to R for any ring.
VerificationReport verify_reduced_equivalences(const RingAnalysis& analysis,
                                               const VerifyOptions& opts = {});
/// Units preserve pseudo-morphic elements; r(a) = 0 forces Ra = R.
VerificationReport verify_unit_translation(const RingAnalysis& analysis);

enum class ExtensionKind { Triangular, TrivialExt, Corner };

/// Ring pieces for the heredity suite. For Triangular, `whole` is
/// formal_triangular(first, second, V); for TrivialExt it is first x M;
/// for Corner only `whole` is used and every idempotent e with
/// (1-e)Re = 0 is tried.
struct ExtensionCase {
  ExtensionKind kind;
  FiniteRing whole;
  std::optional<FiniteRing> first;
  std::optional<FiniteRing> second;
};

VerificationReport verify_extension_heredity(const ExtensionCase& c);

/// The lower-triangular 2x2 example over Z2: headline claims plus the
/// displayed intersection under both multiplication conventions.
VerificationReport verify_t2_example();

/// Ids accepted by run_theorem, in execution order.
const std::vector<std::string>& theorem_ids();

/// Runs one suite by id on a ring. extension-heredity uses the Corner
/// variant plus TrivialExt when the ring was built by trivext.
/// Throws std::invalid_argument for an unknown id.
VerificationReport run_theorem(const std::string& id, const RingAnalysis& analysis,
                               const VerifyOptions& opts = {});

struct SearchHit {
  std::string expression;
  Side side = Side::Left;
  Element element = 0;           // pseudo but not generalized
  bool revalidated = false;      // confirmed by recomputation from raw tables
};

struct SearchReport {
  std::size_t rings = 0;
  std::string fingerprint;  // FNV-1a of the expressions, one per line
  std::vector<SearchHit> hits;
  std::vector<std::string> skipped;  // over the cap
  double elapsed_ms = 0.0;
};

/// Rings that are one-sided pseudo-morphic but not quasi-morphic on that side.
SearchReport search_counterexample(const std::vector<std::string>& expressions,
                                   std::size_t order_cap, std::size_t threads = 1);

std::string corpus_fingerprint(const std::vector<std::string>& expressions);

}  // namespace morphic
