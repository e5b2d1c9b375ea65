#pragma once

// Invariant checks shared by the unit and acceptance suites. Each returns the
// first violation found, or an empty string.

#include <random>
#include <string>
#include <vector>

#include "morphic/classifier.hpp"
#include "morphic/constructions.hpp"
#include "morphic/corpus.hpp"
#include "morphic/ring_expr.hpp"

namespace props {

using namespace morphic;

inline std::string hierarchy_monotone(const RingAnalysis& a) {
  const FiniteRing& r = a.ring();
  for (Side side : {Side::Left, Side::Right}) {
    for (Element x = 0; x < r.order(); ++x) {
      const ElementClass c = element_class(a, side, x);
      if (c.is_morphic() && !(c.is_pseudo() && c.is_generalized())) {
        return std::string(side_name(side)) + " morphic element " + r.label(x) + " is not quasi";
      }
      if (c.morphic && *c.morphic < *c.pseudo) return "morphic witness precedes pseudo witness";
    }
    const SideHierarchy h = side_hierarchy(a, side);
    if (h.morphic.holds() && !h.quasi.holds()) return "morphic ring not quasi";
    if (h.quasi.holds() != (h.pseudo.holds() && h.generalized.holds())) {
      return "quasi flag differs from pseudo and generalized";
    }
  }
  return {};
}

inline bool same_flag(const Flag& x, const Flag& y) {
  return x.status == y.status && x.witness == y.witness;
}

inline std::string opposite_duality(const RingAnalysis& a) {
  const RingAnalysis op(opposite(a.ring()));
  const FiniteRing& r = a.ring();
  for (Element x = 0; x < r.order(); ++x) {
    const ElementClass right = element_class(a, Side::Right, x);
    const ElementClass left_op = element_class(op, Side::Left, x);
    if (right.pseudo != left_op.pseudo || right.generalized != left_op.generalized ||
        right.morphic != left_op.morphic) {
      return "right class of " + r.label(x) + " differs from left class in the opposite ring";
    }
  }
  const ClassProfile p = classify(a);
  const ClassProfile q = classify(op);
  for (const auto& [name, flag] : p.flags) {
    std::string mirrored = name;
    if (name.rfind("left_", 0) == 0) {
      mirrored = "right_" + name.substr(5);
    } else if (name.rfind("right_", 0) == 0) {
      mirrored = "left_" + name.substr(6);
    }
    if (flag.status != q.flag(mirrored).status) return name + " differs from " + mirrored + " of the opposite";
  }
  return {};
}

inline std::string annihilator_triple(const RingAnalysis& a) {
  const FiniteRing& r = a.ring();
  const SideTables& left = a.tables(Side::Left);
  const SideTables& right = a.tables(Side::Right);
  for (Element x = 0; x < r.order(); ++x) {
    const ElementMask l = left.annihilator(x);
    if (left.annihilator_of(right.annihilator_of(l)) != l) return "l r l != l at " + r.label(x);
    const ElementMask rr = right.annihilator(x);
    if (right.annihilator_of(left.annihilator_of(rr)) != rr) return "r l r != r at " + r.label(x);
  }
  return {};
}

inline std::string parallel_determinism(const RingAnalysis& a) {
  ClassifyOptions one, many;
  many.threads = 4;
  const ClassProfile p = classify(a, one);
  const ClassProfile q = classify(a, many);
  if (p.flags.size() != q.flags.size()) return "flag count depends on threads";
  for (std::size_t i = 0; i < p.flags.size(); ++i) {
    if (p.flags[i].first != q.flags[i].first || !same_flag(p.flags[i].second, q.flags[i].second) ||
        p.flags[i].second.note != q.flags[i].second.note) {
      return p.flags[i].first + " depends on the thread count";
    }
  }
  return {};
}

/// `count` corpus expressions drawn with a fixed seed.
inline std::vector<std::string> sample_corpus(std::size_t count, std::size_t max_order,
                                              std::uint64_t seed) {
  const std::vector<std::string> corpus = default_corpus(max_order);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(corpus[pick(rng)]);
  return out;
}

}  // namespace props
