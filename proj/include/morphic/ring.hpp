#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace morphic {

/// Index of an element inside a FiniteRing (or a bimodule).
using Element = std::uint32_t;

/// Order caps. Full classification builds lattices and O(n^3) scans, element
/// scans only need the per-element annihilator tables.
inline constexpr std::size_t kClassifyOrderCap = 512;
inline constexpr std::size_t kScanOrderCap = 4096;

/// Raw Cayley tables, row-major n x n.
struct RingTables {
  std::size_t order = 0;
  std::vector<Element> add;
  std::vector<Element> mul;
  Element zero = 0;
  Element one = 0;
};

/// Outcome of check_ring_axioms. On failure `axiom` names the first violated
/// law and `witness` holds the offending elements.
struct AxiomReport {
  bool ok = true;
  std::string axiom;
  std::vector<Element> witness;
};

/// A finite ring stored as explicit addition and multiplication tables.
/// Immutable after construction; safe to share between threads.
class FiniteRing {
 public:
  FiniteRing(RingTables tables, std::vector<std::string> labels, std::string construction);

  std::size_t order() const noexcept { return n_; }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }

  Element add(Element a, Element b) const noexcept { return add_[a * n_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * n_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  std::span<const Element> add_table() const noexcept { return add_; }
  std::span<const Element> mul_table() const noexcept { return mul_; }

  const std::string& label(Element a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Expression (or description) of the construction that produced this ring.
  const std::string& construction() const noexcept { return construction_; }

  std::optional<Element> find_label(const std::string& label) const;

  bool is_commutative() const noexcept;
  RingTables tables() const;

 private:
  std::size_t n_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  Element zero_;
  Element one_;
  std::vector<std::string> labels_;
  std::string construction_;
};

/// An abelian group with a left action of one ring and a right action of
/// another. For an R-R bimodule both ring orders coincide.
struct BimoduleSpec {
  std::size_t order = 0;
  std::vector<Element> add;           // order x order
  std::vector<Element> left_action;   // |R| x order, (r, m) -> r m
  std::vector<Element> right_action;  // order x |S|, (m, s) -> m s
  Element zero = 0;
  std::vector<std::string> labels;
  std::string description;  // "self", "ideal(2)", ... used in construction strings

  Element plus(Element a, Element b) const { return add[a * order + b]; }
  Element act_left(Element r, Element m) const { return left_action[r * order + m]; }
  Element act_right(Element m, Element s, std::size_t s_order) const {
    return right_action[m * s_order + s];
  }
};

/// Checks abelian group, associativity, identity and both distributive laws.
/// Throws StructuralError if the tables are not well formed.
AxiomReport check_ring_axioms(const RingTables& tables);
AxiomReport check_ring_axioms(const FiniteRing& ring);

/// Checks that `module` is a unital (left ring, right ring)-bimodule.
AxiomReport check_bimodule(const FiniteRing& left, const FiniteRing& right,
                           const BimoduleSpec& module);

}  // namespace morphic
