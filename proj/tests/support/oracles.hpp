#pragma once

// Brute-force references built only from the Cayley tables.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "morphic/ring.hpp"

namespace oracle {

using morphic::Element;
using morphic::FiniteRing;
using Set = std::vector<bool>;

enum class Hand { Left, Right };

/// x*y on the chosen hand: Left keeps x*y, Right swaps to y*x.
inline Element act(const FiniteRing& r, Hand h, Element x, Element y) {
  return h == Hand::Left ? r.mul(x, y) : r.mul(y, x);
}

inline std::size_t size(const Set& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

/// {x : x a = 0} on the left, {x : a x = 0} on the right.
inline Set ann(const FiniteRing& r, Hand h, Element a) {
  Set s(r.order(), false);
  for (Element x = 0; x < r.order(); ++x) s[x] = act(r, h, x, a) == r.zero();
  return s;
}

inline Set ann_of(const FiniteRing& r, Hand h, const Set& t) {
  Set s(r.order(), true);
  for (Element x = 0; x < r.order(); ++x) {
    for (Element a = 0; a < r.order(); ++a) {
      if (t[a] && act(r, h, x, a) != r.zero()) s[x] = false;
    }
  }
  return s;
}

/// {x a} on the left, {a x} on the right.
inline Set mult(const FiniteRing& r, Hand h, Element a) {
  Set s(r.order(), false);
  for (Element x = 0; x < r.order(); ++x) s[act(r, h, x, a)] = true;
  return s;
}

/// Closes a set under addition and multiplication by the ring on one hand.
inline Set ideal_closure(const FiniteRing& r, Hand h, Set s) {
  s[r.zero()] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (Element a = 0; a < r.order(); ++a) {
      if (!s[a]) continue;
      for (Element b = 0; b < r.order(); ++b) {
        if (s[b] && !s[r.add(a, b)]) s[r.add(a, b)] = grew = true;
        if (!s[act(r, h, b, a)]) s[act(r, h, b, a)] = grew = true;
      }
    }
  }
  return s;
}

/// All one-sided ideals, each as generated by some set of elements.
inline std::set<Set> ideals(const FiniteRing& r, Hand h) {
  std::set<Set> out;
  std::vector<Set> frontier{ideal_closure(r, h, Set(r.order(), false))};
  out.insert(frontier.front());
  while (!frontier.empty()) {
    Set cur = frontier.back();
    frontier.pop_back();
    for (Element g = 0; g < r.order(); ++g) {
      if (cur[g]) continue;
      Set next = cur;
      next[g] = true;
      next = ideal_closure(r, h, next);
      if (out.insert(next).second) frontier.push_back(next);
    }
  }
  return out;
}

struct Kinds {
  std::optional<Element> pseudo, generalized, morphic;
};

/// Least witnesses for R a = l(b), l(a) = R b, and both at once.
inline Kinds kinds(const FiniteRing& r, Hand h, Element a) {
  Kinds k;
  const Set ra = mult(r, h, a);
  const Set la = ann(r, h, a);
  for (Element b = 0; b < r.order(); ++b) {
    const bool p = ra == ann(r, h, b);
    const bool g = la == mult(r, h, b);
    if (p && !k.pseudo) k.pseudo = b;
    if (g && !k.generalized) k.generalized = b;
    if (p && g && !k.morphic) k.morphic = b;
  }
  return k;
}

inline bool is_unit(const FiniteRing& r, Element a) {
  for (Element b = 0; b < r.order(); ++b) {
    if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) return true;
  }
  return false;
}

inline std::size_t units(const FiniteRing& r) {
  std::size_t n = 0;
  for (Element a = 0; a < r.order(); ++a) n += is_unit(r, a);
  return n;
}

inline std::size_t idempotents(const FiniteRing& r) {
  std::size_t n = 0;
  for (Element a = 0; a < r.order(); ++a) n += r.mul(a, a) == a;
  return n;
}

inline bool is_nilpotent(const FiniteRing& r, Element a) {
  Element p = a;
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (p == r.zero()) return true;
    p = r.mul(p, a);
  }
  return false;
}

/// {a : 1 - x a is a unit for all x}.
inline Set jacobson(const FiniteRing& r) {
  Set s(r.order(), false);
  for (Element a = 0; a < r.order(); ++a) {
    bool in = true;
    for (Element x = 0; x < r.order() && in; ++x) in = is_unit(r, r.sub(r.one(), r.mul(x, a)));
    s[a] = in;
  }
  return s;
}

inline bool is_regular(const FiniteRing& r) {
  for (Element a = 0; a < r.order(); ++a) {
    bool ok = false;
    for (Element x = 0; x < r.order() && !ok; ++x) ok = r.mul(r.mul(a, x), a) == a;
    if (!ok) return false;
  }
  return true;
}

}  // namespace oracle
