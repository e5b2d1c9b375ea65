#include "morphic/qz.hpp"

#include <chrono>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace morphic::qz {

QFrac QFrac::make(std::int64_t r, std::int64_t c) {
  if (c == 0) throw std::invalid_argument("zero denominator");
  if (c < 0) {
    r = -r;
    c = -c;
  }
  r %= c;
  if (r < 0) r += c;
  const std::int64_t g = std::gcd(r, c);
  return QFrac{r / g, c / g};
}

QFrac operator+(const QFrac& a, const QFrac& b) {
  const std::int64_t l = std::lcm(a.den, b.den);
  return QFrac::make(a.num * (l / a.den) + b.num * (l / b.den), l);
}

QFrac operator-(const QFrac& a) { return QFrac::make(-a.num, a.den); }

QFrac operator*(std::int64_t n, const QFrac& q) { return QFrac::make((n % q.den) * q.num, q.den); }

bool TEIdeal::contains(std::int64_t n, const QFrac& q) const noexcept {
  if (base == 0) return n == 0 && part.contains(q);
  return n % base == 0 && part.contains(q);
}

CyclicSub cyclic_submodule(std::int64_t r, std::int64_t c) {
  if (c == 0) throw std::invalid_argument("cyclic_submodule: zero denominator");
  return CyclicSub::of(std::abs(c) / std::gcd(std::abs(r), std::abs(c)));
}

bool submodule_leq(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("submodule_leq: denominators must be positive");
  return a % b == 0;
}

std::pair<CyclicSub, CyclicSub> lattice_meet_join(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) {
    throw std::invalid_argument("lattice_meet_join: denominators must be positive");
  }
  return {CyclicSub::of(std::gcd(a, b)), CyclicSub::of(std::lcm(a, b))};
}

std::int64_t base_annihilator(const QFrac& q) { return q.den; }

TEIdeal te_principal_ideal(std::int64_t n, const QFrac& q) {
  if (n != 0) return TEIdeal{std::abs(n), CyclicSub::whole()};
  return TEIdeal{0, CyclicSub::of(q.den)};
}

TEIdeal te_left_annihilator(std::int64_t n, const QFrac& q) {
  if (n != 0) return TEIdeal{0, CyclicSub::of(std::abs(n))};
  if (!q.is_zero()) return TEIdeal{q.den, CyclicSub::whole()};
  return TEIdeal{1, CyclicSub::whole()};
}

std::pair<std::int64_t, QFrac> te_morphic_witness(std::int64_t n, const QFrac& q) {
  if (n != 0) return {0, QFrac::make(1, std::abs(n))};
  if (!q.is_zero()) return {q.den, QFrac{}};
  return {1, QFrac{}};
}

namespace {

struct Elem {
  std::int64_t n;
  QFrac q;
};

/// (m, p)(n, q) = (mn, mq + pn).
Elem times(const Elem& x, const Elem& y) { return Elem{x.n * y.n, x.n * y.q + y.n * x.q}; }

/// Whether x y = 0, from unreduced integer arithmetic.
bool kills(const Elem& x, const Elem& y) {
  if (x.n * y.n != 0) return false;
  return (x.n * y.q.num * x.q.den + y.n * x.q.num * y.q.den) % (x.q.den * y.q.den) == 0;
}

/// Every reduced fraction with denominator at most `bound`, zero included.
std::vector<QFrac> fractions(std::int64_t bound) {
  std::vector<QFrac> out{QFrac{}};
  for (std::int64_t c = 2; c <= bound; ++c) {
    for (std::int64_t r = 1; r < c; ++r) {
      if (std::gcd(r, c) == 1) out.push_back(QFrac{r, c});
    }
  }
  return out;
}

std::string pair_text(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string elem_text(const Elem& e) {
  return "(" + std::to_string(e.n) + ", " + std::to_string(e.q.num) + "/" + std::to_string(e.q.den) +
         ")";
}

}  // namespace

VerificationReport verify_qz_suite(std::int64_t bound) {
  if (bound < 2) throw std::invalid_argument("qz bound must be at least 2");
  const auto t0 = std::chrono::steady_clock::now();
  const std::int64_t N = bound;
  VerificationReport r;
  r.theorem = "qz";
  r.expression = "Z x Q/Z, bound " + std::to_string(N);

  // Submodules of Q/Z as sets of fractions, containment against divisibility.
  std::size_t pairs = 0;
  for (std::int64_t a = 1; a <= N; ++a) {
    for (std::int64_t b = 1; b <= N; ++b) {
      ++pairs;
      bool inside = true;
      for (std::int64_t k = 0; k < b && inside; ++k) {
        const QFrac x = QFrac::make(k, b);
        bool found = false;
        for (std::int64_t j = 0; j < a && !found; ++j) found = QFrac::make(j, a) == x;
        inside = found;
      }
      ++r.checked;
      if (inside != submodule_leq(a, b)) r.fail("containment differs from divisibility " + pair_text(a, b));
      ++r.checked;
      if (inside != CyclicSub::of(a).contains(QFrac::make(1, b))) {
        r.fail("CyclicSub membership differs from containment " + pair_text(a, b));
      }

      // Meet and join on the common grid Z/L, L = lcm(a, b).
      const std::int64_t L = std::lcm(a, b);
      std::vector<char> in_a(static_cast<std::size_t>(L), 0), in_b(in_a), meet(in_a), join(in_a);
      for (std::int64_t k = 0; k < a; ++k) in_a[static_cast<std::size_t>(k * (L / a))] = 1;
      for (std::int64_t k = 0; k < b; ++k) in_b[static_cast<std::size_t>(k * (L / b))] = 1;
      for (std::int64_t x = 0; x < L; ++x) {
        meet[static_cast<std::size_t>(x)] = in_a[static_cast<std::size_t>(x)] && in_b[static_cast<std::size_t>(x)];
      }
      for (std::int64_t x = 0; x < L; x += L / a) {
        for (std::int64_t y = 0; y < L; y += L / b) join[static_cast<std::size_t>((x + y) % L)] = 1;
      }
      const auto [m, j] = lattice_meet_join(a, b);
      for (std::int64_t x = 0; x < L; ++x) {
        const QFrac f = QFrac::make(x, L);
        if (static_cast<bool>(meet[static_cast<std::size_t>(x)]) != m.contains(f) ||
            static_cast<bool>(join[static_cast<std::size_t>(x)]) != j.contains(f)) {
          r.fail("meet or join differs from the set computation " + pair_text(a, b));
          break;
        }
      }
      ++r.checked;

      // Isomorphic cyclic submodules share an annihilator: only when a = b.
      ++r.checked;
      if ((base_annihilator(QFrac::make(1, a)) == base_annihilator(QFrac::make(1, b))) != (a == b)) {
        r.fail("annihilator rigidity fails " + pair_text(a, b));
      }
      ++r.checked;
      if (submodule_leq(a, b) !=
          (base_annihilator(QFrac::make(1, a)) % base_annihilator(QFrac::make(1, b)) == 0)) {
        r.fail("annihilator map is not inclusion reversing " + pair_text(a, b));
      }
    }
  }
  r.facts.push_back(std::to_string(pairs) + " submodule pairs");

  // Annihilators in Z, by brute force.
  const std::vector<QFrac> qs = fractions(N);
  for (const QFrac& q : qs) {
    std::int64_t least = 1;
    while (!(least * q).is_zero()) ++least;
    ++r.checked;
    if (least != base_annihilator(q)) {
      r.fail("base annihilator of " + std::to_string(q.num) + "/" + std::to_string(q.den));
    }
  }

  // Symbolic witness identities, every (n, q) with |n|, den(q) <= N.
  std::size_t elements = 0;
  for (std::int64_t n = -N; n <= N; ++n) {
    for (const QFrac& q : qs) {
      ++elements;
      const auto [wn, wq] = te_morphic_witness(n, q);
      r.checked += 2;
      if (!(te_principal_ideal(n, q) == te_left_annihilator(wn, wq)) ||
          !(te_left_annihilator(n, q) == te_principal_ideal(wn, wq))) {
        r.fail("witness identity fails at " + elem_text({n, q}));
      }
    }
  }
  r.facts.push_back(std::to_string(elements) + " ring elements with symbolic witnesses");

  // Brute-force ideal membership.
  std::vector<Elem> small;  // sigma box for principal ideals
  for (std::int64_t m = -2; m <= 2; ++m) {
    for (const QFrac& p : fractions(3)) small.push_back({m, p});
  }
  std::size_t products = 0;
  for (std::int64_t n = -N; n <= N; ++n) {
    for (const QFrac& q : qs) {
      const Elem alpha{n, q};
      const TEIdeal prin = te_principal_ideal(n, q);
      const TEIdeal ann = te_left_annihilator(n, q);
      // Everything sigma alpha lies in T alpha.
      for (const Elem& s : small) {
        const Elem prod = times(s, alpha);
        ++products;
        if (!prin.contains(prod.n, prod.q)) {
          r.fail("product " + elem_text(prod) + " outside T" + elem_text(alpha));
        }
      }
      // Annihilator membership over (m, 0).
      for (std::int64_t m = -N; m <= N; ++m) {
        const Elem tau{m, QFrac{}};
        ++products;
        if (kills(tau, alpha) != ann.contains(m, QFrac{})) {
          r.fail("annihilator of " + elem_text(alpha) + " wrong at " + elem_text(tau));
        }
      }
      // T alpha is all of its symbolic description.
      if (n == 0) {
        for (std::int64_t j = 0; j < q.den; ++j) {
          const QFrac target = QFrac::make(j, q.den);
          bool hit = false;
          for (std::int64_t k = 0; k < q.den && !hit; ++k) hit = (k * q) == target;
          ++r.checked;
          if (!hit) r.fail("T" + elem_text(alpha) + " misses " + elem_text({0, target}));
        }
      } else {
        for (std::int64_t k : {-1, 1, 2}) {
          for (std::int64_t d : {1, 2, 3, 5}) {
            // (k sign(n), (t - k sign(n) q)/n) alpha = (k|n|, t).
            const QFrac t = QFrac::make(1, d);
            const std::int64_t m = n > 0 ? k : -k;
            const QFrac x = t + -(m * q);
            const Elem sigma{m, QFrac::make(x.num, x.den * n)};
            const Elem got = times(sigma, alpha);
            ++r.checked;
            if (got.n != k * std::abs(n) || !(got.q == t)) {
              r.fail("T" + elem_text(alpha) + " misses " + elem_text({k * std::abs(n), t}));
            }
          }
        }
      }
    }
  }

  // Module elements up to denominator N^2, numerators 1 and c - 1 of each q.
  std::size_t wide = 0;
  for (std::int64_t n = -N; n <= N; ++n) {
    for (std::int64_t c = 1; c <= N; ++c) {
      for (std::int64_t num : {std::int64_t{1}, c - 1}) {
        const QFrac q = QFrac::make(num, c);
        const Elem alpha{n, q};
        const TEIdeal ann = te_left_annihilator(n, q);
        for (std::int64_t D = 1; D <= N * N; ++D) {
          // (0, 1/D) alpha = (0, n/D)
          ++wide;
          const bool kills = n % D == 0;
          if (kills != ann.contains(0, QFrac{1 % D, D})) {
            r.fail("annihilator of " + elem_text(alpha) + " wrong at (0, 1/" + std::to_string(D) + ")");
          }
        }
        for (std::int64_t m : {-2, -1, 1, 2}) {
          for (std::int64_t D = 1; D <= N; ++D) {
            const Elem tau{m, QFrac::make(1, D)};
            ++wide;
            if (kills(tau, alpha) != ann.contains(tau.n, tau.q)) {
              r.fail("annihilator of " + elem_text(alpha) + " wrong at " + elem_text(tau));
            }
          }
        }
      }
    }
  }
  r.checked += products + wide;
  r.facts.push_back(std::to_string(products + wide) + " brute-force products");
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace morphic::qz
