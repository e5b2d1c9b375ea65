#pragma once

// Backtracking ring isomorphism test for small rings.

#include <cstddef>
#include <optional>
#include <vector>

#include "morphic/ring.hpp"

namespace oracle {

namespace detail {

struct Invariant {
  std::size_t add_order, nil_index, left_ann, right_ann;
  bool idem;
  bool operator==(const Invariant&) const = default;
};

inline std::vector<Invariant> invariants(const morphic::FiniteRing& r) {
  std::vector<Invariant> out;
  for (morphic::Element a = 0; a < r.order(); ++a) {
    Invariant v{};
    morphic::Element s = a;
    for (v.add_order = 1; s != r.zero(); ++v.add_order) s = r.add(s, a);
    morphic::Element p = a;
    for (v.nil_index = 1; p != r.zero() && v.nil_index <= r.order(); ++v.nil_index) p = r.mul(p, a);
    for (morphic::Element x = 0; x < r.order(); ++x) {
      v.left_ann += r.mul(x, a) == r.zero();
      v.right_ann += r.mul(a, x) == r.zero();
    }
    v.idem = r.mul(a, a) == a;
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// A bijection f with f(a+b) = f(a)+f(b) and f(ab) = f(a)f(b), if any.
inline std::optional<std::vector<morphic::Element>> isomorphism(const morphic::FiniteRing& a,
                                                               const morphic::FiniteRing& b) {
  using morphic::Element;
  const std::size_t n = a.order();
  if (b.order() != n) return std::nullopt;
  const auto ia = detail::invariants(a);
  const auto ib = detail::invariants(b);
  constexpr Element kNone = ~Element{0};
  std::vector<Element> f(n, kNone);
  std::vector<bool> used(n, false);

  auto consistent = [&](Element x) {
    for (Element y = 0; y < n; ++y) {
      if (f[y] == kNone) continue;
      for (int side = 0; side < 2; ++side) {
        const Element u = side ? y : x, v = side ? x : y;
        const Element s = a.add(u, v), p = a.mul(u, v);
        if (f[s] != kNone && f[s] != b.add(f[u], f[v])) return false;
        if (f[p] != kNone && f[p] != b.mul(f[u], f[v])) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, Element x) -> bool {
    if (x == n) return true;
    for (Element y = 0; y < n; ++y) {
      if (used[y] || !(ia[x] == ib[y])) continue;
      f[x] = y;
      used[y] = true;
      if (consistent(x) && self(self, x + 1)) return true;
      used[y] = false;
      f[x] = kNone;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return f;
}

}  // namespace oracle
