#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "morphic/ring.hpp"

namespace morphic {

/// Subset of the elements {0..n-1} of a ring, stored as packed 64-bit words.
class ElementMask {
 public:
  ElementMask() = default;
  explicit ElementMask(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static ElementMask full(std::size_t universe) {
    ElementMask m(universe);
    for (std::size_t i = 0; i < universe; ++i) m.set(static_cast<Element>(i));
    return m;
  }
  static ElementMask of(std::size_t universe, std::span<const Element> elements) {
    ElementMask m(universe);
    for (Element e : elements) m.set(e);
    return m;
  }
  static ElementMask of(std::size_t universe, std::initializer_list<Element> elements) {
    return of(universe, std::span<const Element>(elements.begin(), elements.size()));
  }

  std::size_t universe() const noexcept { return n_; }

  bool test(Element i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(Element i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(Element i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  /// Subset test, `this` inside `other`.
  bool subset_of(const ElementMask& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }
  bool intersects(const ElementMask& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  ElementMask& operator&=(const ElementMask& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementMask& operator|=(const ElementMask& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementMask operator&(ElementMask a, const ElementMask& b) { return a &= b; }
  friend ElementMask operator|(ElementMask a, const ElementMask& b) { return a |= b; }

  friend bool operator==(const ElementMask&, const ElementMask&) = default;

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
        out.push_back(static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
    return out;
  }

  /// Calls f(e) for every member, ascending.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic on (count, words); gives a canonical order for ideal lists.
inline bool canonical_less(const ElementMask& a, const ElementMask& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  const auto wa = a.words(), wb = b.words();
  return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
}

struct ElementMaskHash {
  std::size_t operator()(const ElementMask& m) const noexcept { return m.hash(); }
};

}  // namespace morphic
