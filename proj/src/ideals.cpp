#include "morphic/ideals.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "morphic/constructions.hpp"

namespace morphic {

namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) return fallback;
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

Element side_mul(const FiniteRing& ring, Side side, Element x, Element a) {
  return side == Side::Left ? ring.mul(x, a) : ring.mul(a, x);
}

std::vector<ElementMask> all_principal(const FiniteRing& ring, Side side) {
  std::vector<ElementMask> out;
  out.reserve(ring.order());
  for (Element a = 0; a < ring.order(); ++a) out.push_back(principal_ideal(ring, side, a));
  return out;
}

ElementMask cyclic_subgroup(const FiniteRing& ring, Element g) {
  ElementMask m(ring.order());
  Element x = ring.zero();
  do {
    m.set(x);
    x = ring.add(x, g);
  } while (x != ring.zero());
  return m;
}

}  // namespace

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

std::size_t ring_order_cap() { return env_size("RING_ORDER_CAP", kClassifyOrderCap); }
std::size_t ideal_lattice_cap() { return env_size("IDEAL_LATTICE_CAP", kDefaultIdealCap); }

ElementMask annihilator(const FiniteRing& ring, Side side, std::span<const Element> s) {
  ElementMask out(ring.order());
  for (Element x = 0; x < ring.order(); ++x) {
    bool kills = true;
    for (Element e : s) {
      if (side_mul(ring, side, x, e) != ring.zero()) {
        kills = false;
        break;
      }
    }
    if (kills) out.set(x);
  }
  return out;
}

ElementMask annihilator(const FiniteRing& ring, Side side, const ElementMask& s) {
  const std::vector<Element> elems = s.elements();
  return annihilator(ring, side, elems);
}

ElementMask principal_ideal(const FiniteRing& ring, Side side, Element a) {
  ElementMask out(ring.order());
  for (Element x = 0; x < ring.order(); ++x) out.set(side_mul(ring, side, x, a));
  return out;
}

ElementMask subgroup_sum(const FiniteRing& ring, const ElementMask& a, const ElementMask& b) {
  ElementMask out = a;
  const std::vector<Element> as = a.elements();
  b.for_each([&](Element y) {
    // out is a union of cosets of A, so a covered y adds nothing new.
    if (out.test(y)) return;
    for (Element x : as) out.set(ring.add(x, y));
  });
  return out;
}

ElementMask additive_closure(const FiniteRing& ring, const ElementMask& mask) {
  ElementMask out(ring.order());
  out.set(ring.zero());
  mask.for_each([&](Element g) {
    if (!out.test(g)) out = subgroup_sum(ring, out, cyclic_subgroup(ring, g));
  });
  return out;
}

ElementMask fg_ideal(const FiniteRing& ring, Side side, std::span<const Element> generators) {
  if (generators.empty()) throw std::invalid_argument("fg_ideal needs at least one generator");
  ElementMask out = principal_ideal(ring, side, generators[0]);
  for (std::size_t i = 1; i < generators.size(); ++i) {
    out = subgroup_sum(ring, out, principal_ideal(ring, side, generators[i]));
  }
  return out;
}

bool is_additive_subgroup(const FiniteRing& ring, const ElementMask& mask) {
  if (!mask.test(ring.zero())) return false;
  const std::vector<Element> elems = mask.elements();
  for (Element x : elems) {
    for (Element y : elems) {
      if (!mask.test(ring.add(x, y))) return false;
    }
  }
  return true;
}

bool is_ideal(const FiniteRing& ring, Side side, const ElementMask& mask) {
  if (mask.universe() != ring.order()) return false;
  if (!is_additive_subgroup(ring, mask)) return false;
  bool closed = true;
  mask.for_each([&](Element a) {
    for (Element r = 0; r < ring.order() && closed; ++r) closed = mask.test(side_mul(ring, side, r, a));
  });
  return closed;
}

IdealEnumeration all_ideals(const FiniteRing& ring, Side side, std::size_t cap) {
  const std::size_t n = ring.order();
  const std::vector<ElementMask> prin = all_principal(ring, side);

  std::vector<ElementMask> found;
  std::unordered_set<ElementMask, ElementMaskHash> seen;
  ElementMask zero(n);
  zero.set(ring.zero());
  found.push_back(zero);
  seen.insert(zero);

  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    const ElementMask ideal = found[idx];
    const std::vector<Element> members = ideal.elements();
    ElementMask covered = ideal;
    for (Element g = 0; g < n; ++g) {
      if (covered.test(g)) continue;
      // I + Rg only depends on the coset g + I.
      for (Element i : members) covered.set(ring.add(g, i));
      ElementMask next = subgroup_sum(ring, ideal, prin[g]);
      if (seen.insert(next).second) {
        if (found.size() >= cap) return IdealEnumeration{{}, true};
        found.push_back(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return IdealEnumeration{std::move(found), false};
}

Census element_census(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  Census c{ElementMask(n), ElementMask(n), ElementMask(n), std::vector<std::optional<Element>>(n)};
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (ring.mul(a, b) == ring.one() && ring.mul(b, a) == ring.one()) {
        c.inverse[a] = b;
        c.units.set(a);
        break;
      }
    }
    if (ring.mul(a, a) == a) c.idempotents.set(a);
    Element p = a;
    for (std::size_t k = 0; k < n; ++k) {
      if (p == ring.zero()) {
        c.nilpotents.set(a);
        break;
      }
      p = ring.mul(p, a);
    }
  }
  return c;
}

ElementMask jacobson_radical(const FiniteRing& ring) {
  const Census census = element_census(ring);
  ElementMask out(ring.order());
  for (Element a = 0; a < ring.order(); ++a) {
    bool inside = true;
    for (Element x = 0; x < ring.order() && inside; ++x) {
      inside = census.units.test(ring.sub(ring.one(), ring.mul(x, a)));
    }
    if (inside) out.set(a);
  }
  return out;
}

bool is_essential(const FiniteRing& ring, Side side, const ElementMask& mask) {
  if (!is_ideal(ring, side, mask)) {
    throw std::invalid_argument(std::string("mask is not a ") + side_name(side) + " ideal");
  }
  ElementMask nonzero = mask;
  nonzero.reset(ring.zero());
  for (Element a = 0; a < ring.order(); ++a) {
    if (a == ring.zero()) continue;
    if (!principal_ideal(ring, side, a).intersects(nonzero)) return false;
  }
  return true;
}

ElementMask singular_ideal(const FiniteRing& ring, Side side) {
  const std::vector<ElementMask> prin = all_principal(ring, side);
  ElementMask out(ring.order());
  for (Element a = 0; a < ring.order(); ++a) {
    const Element single[] = {a};
    ElementMask ann = annihilator(ring, side, single);
    ann.reset(ring.zero());
    bool essential = true;
    for (Element b = 0; b < ring.order() && essential; ++b) {
      if (b != ring.zero()) essential = prin[b].intersects(ann);
    }
    if (essential) out.set(a);
  }
  return out;
}

ElementMask socle(const FiniteRing& ring, Side side) {
  const std::vector<ElementMask> prin = all_principal(ring, side);
  ElementMask out(ring.order());
  out.set(ring.zero());
  for (Element a = 0; a < ring.order(); ++a) {
    if (a == ring.zero() || out.test(a)) continue;
    bool minimal = true;
    prin[a].for_each([&](Element b) {
      if (minimal && b != ring.zero() && !(prin[b] == prin[a])) minimal = false;
    });
    if (minimal) out = subgroup_sum(ring, out, prin[a]);
  }
  return out;
}

SideTables::SideTables(const FiniteRing& ring) : n_(ring.order()) {
  ann_.assign(n_, ElementMask(n_));
  prin_.assign(n_, ElementMask(n_));
  for (Element x = 0; x < n_; ++x) {
    for (Element b = 0; b < n_; ++b) {
      const Element p = ring.mul(x, b);
      if (p == ring.zero()) ann_[b].set(x);
      prin_[b].set(p);
    }
  }
  for (Element b = 0; b < n_; ++b) {
    ann_index_[ann_[b]].push_back(b);
    prin_index_[prin_[b]].push_back(b);
  }
}

std::span<const Element> SideTables::annihilator_generators(const ElementMask& mask) const {
  auto it = ann_index_.find(mask);
  if (it == ann_index_.end()) return {};
  return it->second;
}

std::span<const Element> SideTables::principal_generators(const ElementMask& mask) const {
  auto it = prin_index_.find(mask);
  if (it == prin_index_.end()) return {};
  return it->second;
}

std::optional<Element> SideTables::least_annihilator_generator(const ElementMask& mask) const {
  auto gens = annihilator_generators(mask);
  if (gens.empty()) return std::nullopt;
  return gens.front();
}

std::optional<Element> SideTables::least_principal_generator(const ElementMask& mask) const {
  auto gens = principal_generators(mask);
  if (gens.empty()) return std::nullopt;
  return gens.front();
}

ElementMask SideTables::annihilator_of(const ElementMask& s) const {
  ElementMask out = ElementMask::full(n_);
  s.for_each([&](Element e) { out &= ann_[e]; });
  return out;
}

RingAnalysis::RingAnalysis(FiniteRing ring)
    : ring_(std::move(ring)),
      opp_(opposite(ring_)),
      left_(ring_),
      right_(opp_),
      census_(element_census(ring_)) {}

}  // namespace morphic
