#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "morphic/element_mask.hpp"
#include "morphic/ring.hpp"

namespace morphic {

/// Left computations use x*a, right computations use a*x. Right-side results
/// on R coincide with left-side results on opposite(R).
enum class Side { Left, Right };

inline Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
const char* side_name(Side s);

inline constexpr std::size_t kDefaultIdealCap = 20000;

/// Order cap for full classification; RING_ORDER_CAP overrides the default.
std::size_t ring_order_cap();
/// Ideal lattice cap; IDEAL_LATTICE_CAP overrides the default.
std::size_t ideal_lattice_cap();

/// {x : x s = 0 for all s} (Left) or {x : s x = 0 for all s} (Right).
/// An empty S gives the whole ring.
ElementMask annihilator(const FiniteRing& ring, Side side, std::span<const Element> s);
ElementMask annihilator(const FiniteRing& ring, Side side, const ElementMask& s);

/// R a (Left) or a R (Right).
ElementMask principal_ideal(const FiniteRing& ring, Side side, Element a);

/// A + B for additive subgroups A, B.
ElementMask subgroup_sum(const FiniteRing& ring, const ElementMask& a, const ElementMask& b);

/// Smallest additive subgroup containing `mask`.
ElementMask additive_closure(const FiniteRing& ring, const ElementMask& mask);

/// Sum of the principal ideals of the generators. Throws on an empty list.
ElementMask fg_ideal(const FiniteRing& ring, Side side, std::span<const Element> generators);

bool is_additive_subgroup(const FiniteRing& ring, const ElementMask& mask);
bool is_ideal(const FiniteRing& ring, Side side, const ElementMask& mask);

struct IdealEnumeration {
  std::vector<ElementMask> ideals;  // canonical order; empty when overflow is set
  bool overflow = false;
};

/// Every one-sided ideal, by closing {0} under I -> I + R g.
IdealEnumeration all_ideals(const FiniteRing& ring, Side side, std::size_t cap = kDefaultIdealCap);

struct Census {
  ElementMask units;
  ElementMask idempotents;
  ElementMask nilpotents;
  std::vector<std::optional<Element>> inverse;  // two-sided inverse, if any
};

Census element_census(const FiniteRing& ring);

/// {a : 1 - x a is a unit for every x}.
ElementMask jacobson_radical(const FiniteRing& ring);

/// Every nonzero principal side-ideal meets `mask` nontrivially.
/// Throws std::invalid_argument if `mask` is not a side-ideal.
bool is_essential(const FiniteRing& ring, Side side, const ElementMask& mask);

/// Right: {a : r(a) essential as a right ideal}. Left: {a : l(a) essential}.
ElementMask singular_ideal(const FiniteRing& ring, Side side);

/// Sum of the minimal side-ideals.
ElementMask socle(const FiniteRing& ring, Side side);

/// Per-element left annihilators and principal left ideals of one ring,
/// with indexes from a mask to every element producing it (ascending).
class SideTables {
 public:
  explicit SideTables(const FiniteRing& ring);

  const ElementMask& annihilator(Element b) const { return ann_[b]; }
  const ElementMask& principal(Element a) const { return prin_[a]; }

  /// Elements b with l(b) == mask, ascending. Empty if none.
  std::span<const Element> annihilator_generators(const ElementMask& mask) const;
  /// Elements a with R a == mask, ascending. Empty if none.
  std::span<const Element> principal_generators(const ElementMask& mask) const;

  std::optional<Element> least_annihilator_generator(const ElementMask& mask) const;
  std::optional<Element> least_principal_generator(const ElementMask& mask) const;

  /// Left annihilator of an arbitrary set, as an intersection of table rows.
  ElementMask annihilator_of(const ElementMask& s) const;

  std::size_t order() const noexcept { return ann_.size(); }

 private:
  using Index = std::unordered_map<ElementMask, std::vector<Element>, ElementMaskHash>;
  std::vector<ElementMask> ann_;
  std::vector<ElementMask> prin_;
  Index ann_index_;
  Index prin_index_;
  std::size_t n_;
};

/// A ring together with its opposite and the cached tables for both sides.
class RingAnalysis {
 public:
  explicit RingAnalysis(FiniteRing ring);

  const FiniteRing& ring() const noexcept { return ring_; }
  const FiniteRing& opposite_ring() const noexcept { return opp_; }
  /// The ring whose left side is `side` of ring().
  const FiniteRing& view(Side side) const noexcept { return side == Side::Left ? ring_ : opp_; }
  const SideTables& tables(Side side) const noexcept { return side == Side::Left ? left_ : right_; }
  const Census& census() const noexcept { return census_; }

 private:
  FiniteRing ring_;
  FiniteRing opp_;
  SideTables left_;
  SideTables right_;
  Census census_;
};

}  // namespace morphic
