#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morphic/ideals.hpp"

namespace morphic {

enum class Status { True, False, Indeterminate };
const char* status_name(Status s);

/// A decided predicate. False carries a counterexample, true existentials
/// carry their witnesses, indeterminate comes only from lattice overflow.
struct Flag {
  Status status = Status::Indeterminate;
  std::vector<Element> witness;
  std::string note;

  static Flag yes(std::vector<Element> w = {}, std::string note = {}) {
    return Flag{Status::True, std::move(w), std::move(note)};
  }
  static Flag no(std::vector<Element> w, std::string note = {}) {
    return Flag{Status::False, std::move(w), std::move(note)};
  }
  static Flag unknown(std::string note) { return Flag{Status::Indeterminate, {}, std::move(note)}; }
  bool holds() const noexcept { return status == Status::True; }
  bool fails() const noexcept { return status == Status::False; }
};

/// Hierarchy membership of one element on one side. Witnesses are the least
/// element index satisfying the defining equations.
struct ElementClass {
  Element element = 0;
  Side side = Side::Left;
  std::optional<Element> pseudo;       // R a = l(b)
  std::optional<Element> generalized;  // l(a) = R b
  std::optional<Element> morphic;      // both with one b

  bool is_pseudo() const noexcept { return pseudo.has_value(); }
  bool is_generalized() const noexcept { return generalized.has_value(); }
  /// Quasi witnesses are (pseudo, generalized).
  bool is_quasi() const noexcept { return is_pseudo() && is_generalized(); }
  bool is_morphic() const noexcept { return morphic.has_value(); }
};

bool operator==(const ElementClass& a, const ElementClass& b);

/// Uses the cached tables.
ElementClass element_class(const RingAnalysis& analysis, Side side, Element a);
/// Recomputes every mask from the multiplication table.
ElementClass element_class(const FiniteRing& ring, Side side, Element a);

struct SideHierarchy {
  Flag morphic;
  Flag quasi;
  Flag pseudo;
  Flag generalized;
};

struct MorphicProfile {
  std::array<SideHierarchy, 2> sides;  // indexed by Side
  const SideHierarchy& at(Side s) const { return sides[static_cast<std::size_t>(s)]; }
};

MorphicProfile ring_morphic_profile(const RingAnalysis& analysis, std::size_t threads = 1);
SideHierarchy side_hierarchy(const RingAnalysis& analysis, Side side, std::size_t threads = 1);

struct RegularityProfile {
  Flag regular;
  Flag unit_regular;
  Flag strongly_regular;
};
RegularityProfile regularity_profile(const RingAnalysis& analysis, std::size_t threads = 1);

struct CommutationProfile {
  Flag reduced;
  Flag reversible;
  Flag symmetric;
  Flag semiprime;
  Flag directly_finite;
};
CommutationProfile commutation_profile(const RingAnalysis& analysis, std::size_t threads = 1);

struct ClassifyOptions {
  std::size_t threads = 1;
  std::size_t lattice_cap = kDefaultIdealCap;
  /// Largest number of ideal pairs examined for the Ikeda-Nakayama law.
  std::size_t pair_budget = 250000;
};

struct StructuralProfile {
  std::array<Flag, 2> bezout;
  std::array<Flag, 2> p_injective;
  Flag dual_ring;
  Flag qf_finite;
  std::array<Flag, 2> lear;
  std::array<Flag, 2> pp;
  Flag strongly_clean;
  std::array<Flag, 2> ikeda_nakayama;
};
StructuralProfile structural_profile(const RingAnalysis& analysis, const ClassifyOptions& opts = {});

// Single predicates, also used by the verifier.
Flag bezout_flag(const RingAnalysis& analysis, Side side);
/// Right P-injective (side = Right): l(r(a)) = R a for all a.
Flag p_injective_flag(const RingAnalysis& analysis, Side side);
Flag pp_flag(const RingAnalysis& analysis, Side side);
Flag strongly_clean_flag(const RingAnalysis& analysis);
/// Every side-ideal in the lattice equals a single-element annihilator.
Flag lear_flag(const RingAnalysis& analysis, Side side, const IdealEnumeration& lattice);
Flag dual_ring_flag(const RingAnalysis& analysis, const IdealEnumeration& left,
                    const IdealEnumeration& right);

/// Every flag of a ring, in report order.
struct ClassProfile {
  std::string expression;
  std::size_t order = 0;
  std::vector<std::pair<std::string, Flag>> flags;

  const Flag& flag(const std::string& name) const;
};

ClassProfile classify(const RingAnalysis& analysis, const ClassifyOptions& opts = {});

}  // namespace morphic
