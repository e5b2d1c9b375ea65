#include "morphic/ring.hpp"

#include <string>

#include "morphic/errors.hpp"

namespace morphic {

namespace {

void check_square(std::span<const Element> table, std::size_t n, const char* name) {
  if (table.size() != n * n) {
    throw StructuralError(std::string(name) + " table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(n * n));
  }
  for (Element v : table) {
    if (v >= n) {
      throw StructuralError(std::string(name) + " table entry " + std::to_string(v) +
                            " out of range");
    }
  }
}

void check_structure(std::size_t order, std::span<const Element> add,
                     std::span<const Element> mul, Element zero, Element one) {
  if (order == 0) throw StructuralError("ring order must be positive");
  check_square(add, order, "addition");
  check_square(mul, order, "multiplication");
  if (zero >= order || one >= order) throw StructuralError("zero or one index out of range");
}

AxiomReport fail(std::string axiom, std::vector<Element> witness) {
  return AxiomReport{false, std::move(axiom), std::move(witness)};
}

}  // namespace

FiniteRing::FiniteRing(RingTables tables, std::vector<std::string> labels,
                       std::string construction)
    : n_(tables.order),
      add_(std::move(tables.add)),
      mul_(std::move(tables.mul)),
      zero_(tables.zero),
      one_(tables.one),
      labels_(std::move(labels)),
      construction_(std::move(construction)) {
  check_structure(n_, add_, mul_, zero_, one_);
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != n_) throw StructuralError("label count does not match ring order");

  neg_.assign(n_, static_cast<Element>(n_));
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      if (add(a, b) == zero_) {
        neg_[a] = b;
        break;
      }
    }
    if (neg_[a] == n_) {
      throw StructuralError("element " + std::to_string(a) + " has no additive inverse");
    }
  }
}

std::optional<Element> FiniteRing::find_label(const std::string& label) const {
  for (Element a = 0; a < n_; ++a) {
    if (labels_[a] == label) return a;
  }
  return std::nullopt;
}

bool FiniteRing::is_commutative() const noexcept {
  for (Element a = 0; a < n_; ++a) {
    for (Element b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

RingTables FiniteRing::tables() const { return RingTables{n_, add_, mul_, zero_, one_}; }

AxiomReport check_ring_axioms(const RingTables& t) {
  check_structure(t.order, t.add, t.mul, t.zero, t.one);
  const std::size_t n = t.order;
  auto add = [&](Element a, Element b) { return t.add[a * n + b]; };
  auto mul = [&](Element a, Element b) { return t.mul[a * n + b]; };

  for (Element a = 0; a < n; ++a) {
    if (add(t.zero, a) != a || add(a, t.zero) != a) return fail("additive identity", {a});
  }
  for (Element a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (Element b = 0; b < n && !has_inverse; ++b) has_inverse = add(a, b) == t.zero;
    if (!has_inverse) return fail("additive inverse", {a});
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) return fail("additive commutativity", {a, b});
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) {
          return fail("additive associativity", {a, b, c});
        }
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (mul(t.one, a) != a || mul(a, t.one) != a) return fail("identity axiom", {a});
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          return fail("multiplicative associativity", {a, b, c});
        }
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          return fail("left distributivity", {a, b, c});
        }
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) {
          return fail("right distributivity", {a, b, c});
        }
      }
    }
  }
  return {};
}

AxiomReport check_ring_axioms(const FiniteRing& ring) { return check_ring_axioms(ring.tables()); }

AxiomReport check_bimodule(const FiniteRing& left, const FiniteRing& right,
                           const BimoduleSpec& m) {
  const std::size_t k = m.order;
  const std::size_t nl = left.order();
  const std::size_t nr = right.order();
  if (k == 0) throw StructuralError("bimodule order must be positive");
  if (m.add.size() != k * k || m.left_action.size() != nl * k ||
      m.right_action.size() != k * nr) {
    throw StructuralError("bimodule tables have wrong dimensions");
  }
  for (const auto* table : {&m.add, &m.left_action, &m.right_action}) {
    for (Element v : *table) {
      if (v >= k) throw StructuralError("bimodule table entry out of range");
    }
  }
  if (m.zero >= k) throw StructuralError("bimodule zero out of range");
  if (!m.labels.empty() && m.labels.size() != k) {
    throw StructuralError("bimodule label count does not match order");
  }

  for (Element a = 0; a < k; ++a) {
    if (m.plus(m.zero, a) != a || m.plus(a, m.zero) != a) {
      return fail("module additive identity", {a});
    }
    bool inv = false;
    for (Element b = 0; b < k && !inv; ++b) inv = m.plus(a, b) == m.zero;
    if (!inv) return fail("module additive inverse", {a});
    for (Element b = 0; b < k; ++b) {
      if (m.plus(a, b) != m.plus(b, a)) return fail("module additive commutativity", {a, b});
      for (Element c = 0; c < k; ++c) {
        if (m.plus(m.plus(a, b), c) != m.plus(a, m.plus(b, c))) {
          return fail("module additive associativity", {a, b, c});
        }
      }
    }
  }

  auto lact = [&](Element r, Element x) { return m.act_left(r, x); };
  auto ract = [&](Element x, Element s) { return m.act_right(x, s, nr); };

  for (Element x = 0; x < k; ++x) {
    if (lact(left.one(), x) != x) return fail("left unital", {x});
    if (ract(x, right.one()) != x) return fail("right unital", {x});
  }
  for (Element r = 0; r < nl; ++r) {
    for (Element x = 0; x < k; ++x) {
      for (Element y = 0; y < k; ++y) {
        if (lact(r, m.plus(x, y)) != m.plus(lact(r, x), lact(r, y))) {
          return fail("left action additive in module", {r, x, y});
        }
      }
      for (Element r2 = 0; r2 < nl; ++r2) {
        if (lact(left.add(r, r2), x) != m.plus(lact(r, x), lact(r2, x))) {
          return fail("left action additive in ring", {r, r2, x});
        }
        if (lact(left.mul(r, r2), x) != lact(r, lact(r2, x))) {
          return fail("left action associativity", {r, r2, x});
        }
      }
    }
  }
  for (Element s = 0; s < nr; ++s) {
    for (Element x = 0; x < k; ++x) {
      for (Element y = 0; y < k; ++y) {
        if (ract(m.plus(x, y), s) != m.plus(ract(x, s), ract(y, s))) {
          return fail("right action additive in module", {x, y, s});
        }
      }
      for (Element s2 = 0; s2 < nr; ++s2) {
        if (ract(x, right.add(s, s2)) != m.plus(ract(x, s), ract(x, s2))) {
          return fail("right action additive in ring", {x, s, s2});
        }
        if (ract(x, right.mul(s, s2)) != ract(ract(x, s), s2)) {
          return fail("right action associativity", {x, s, s2});
        }
      }
    }
  }
  for (Element r = 0; r < nl; ++r) {
    for (Element x = 0; x < k; ++x) {
      for (Element s = 0; s < nr; ++s) {
        if (ract(lact(r, x), s) != lact(r, ract(x, s))) {
          return fail("bimodule compatibility", {r, x, s});
        }
      }
    }
  }
  return {};
}

}  // namespace morphic
