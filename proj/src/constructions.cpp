#include "morphic/constructions.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <stdexcept>

#include "morphic/errors.hpp"

namespace morphic {

namespace {

void enforce_cap(std::size_t projected, std::size_t cap) {
  if (projected > cap) throw CapExceeded(projected, cap);
}

/// Mixed-radix digits of `index`, least significant first.
std::vector<Element> digits(std::size_t index, std::size_t radix, std::size_t count) {
  std::vector<Element> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = static_cast<Element>(index % radix);
    index /= radix;
  }
  return out;
}

Element encode(const std::vector<Element>& ds, std::size_t radix) {
  std::size_t index = 0;
  for (std::size_t i = ds.size(); i-- > 0;) index = index * radix + ds[i];
  return static_cast<Element>(index);
}

/// A label is "atomic" if it can be juxtaposed with x^i without brackets.
bool atomic_label(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string poly_label(const std::vector<std::string>& coeffs, const std::string& zero,
                       const std::string& one, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string& c = coeffs[i];
    if (c == zero) continue;
    std::string term;
    std::string power = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0) {
      term = c;
    } else if (c == one) {
      term = power;
    } else if (atomic_label(c)) {
      term = c + power;
    } else {
      term = "(" + c + ")" + power;
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? zero : out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

std::size_t saturating_pow(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out = saturating_mul(out, base);
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteRing make_zmod(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("z0 is not a finite ring");
  enforce_cap(n, cap);
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Element>((a + b) % n);
      t.mul[a * n + b] = static_cast<Element>((a * b) % n);
    }
  }
  t.zero = 0;
  t.one = static_cast<Element>(1 % n);
  return FiniteRing(std::move(t), {}, "z" + std::to_string(n));
}

namespace {

// Polynomials over Z_p as coefficient vectors, lowest degree first, trimmed.
using Poly = std::vector<std::size_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::size_t inverse_mod(std::size_t a, std::size_t p) {
  for (std::size_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw std::logic_error("no inverse mod p");
}

Poly poly_mod(Poly f, const Poly& g, std::size_t p) {
  trim(f);
  const std::size_t lead_inv = inverse_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::size_t shift = f.size() - g.size();
    const std::size_t factor = f.back() * lead_inv % p;
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = (f[shift + i] + p - factor * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

Poly monic_from_code(std::size_t code, std::size_t p, std::size_t degree) {
  Poly f(degree + 1, 0);
  for (std::size_t i = 0; i < degree; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[degree] = 1;
  return f;
}

bool irreducible(const Poly& f, std::size_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    const std::size_t count = saturating_pow(p, d);
    for (std::size_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, p, d), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Element> gf_modulus(std::size_t p, std::size_t k) {
  if (!is_prime(p)) throw std::invalid_argument("gf: " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("gf: degree must be at least 1");
  const std::size_t count = saturating_pow(p, k);
  for (std::size_t code = 0; code < count; ++code) {
    Poly f = monic_from_code(code, p, k);
    if (irreducible(f, p)) {
      return std::vector<Element>(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteRing make_gf(std::size_t p, std::size_t k, std::size_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("gf: " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("gf: degree must be at least 1");
  const std::size_t n = saturating_pow(p, k);
  enforce_cap(n, cap);

  const std::vector<Element> low = gf_modulus(p, k);
  Poly modulus(low.begin(), low.end());
  modulus.push_back(1);

  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<std::vector<Element>> coeff(n);
  for (std::size_t a = 0; a < n; ++a) coeff[a] = digits(a, p, k);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Element> sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = static_cast<Element>((coeff[a][i] + coeff[b][i]) % p);
      t.add[a * n + b] = encode(sum, p);

      Poly prod(2 * k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + coeff[a][i] * coeff[b][j]) % p;
      }
      Poly rem = poly_mod(prod, modulus, p);
      std::vector<Element> rd(k, 0);
      for (std::size_t i = 0; i < rem.size(); ++i) rd[i] = static_cast<Element>(rem[i]);
      t.mul[a * n + b] = encode(rd, p);
    }
  }
  t.zero = 0;
  t.one = 1;

  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (k == 1) {
      labels[a] = std::to_string(a);
      continue;
    }
    std::vector<std::string> cs;
    for (Element c : coeff[a]) cs.push_back(std::to_string(c));
    labels[a] = poly_label(cs, "0", "1", "t");
  }
  return FiniteRing(std::move(t), std::move(labels),
                    "gf(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

FiniteRing direct_product(std::span<const FiniteRing> rings, std::size_t cap) {
  if (rings.empty()) throw std::invalid_argument("direct product of no rings");
  std::size_t n = 1;
  for (const auto& r : rings) n = saturating_mul(n, r.order());
  enforce_cap(n, cap);

  const std::size_t parts = rings.size();
  std::vector<std::vector<Element>> comp(n, std::vector<Element>(parts));
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t rest = a;
    for (std::size_t i = 0; i < parts; ++i) {
      comp[a][i] = static_cast<Element>(rest % rings[i].order());
      rest /= rings[i].order();
    }
  }
  auto encode_parts = [&](const std::vector<Element>& xs) {
    std::size_t index = 0;
    for (std::size_t i = parts; i-- > 0;) index = index * rings[i].order() + xs[i];
    return static_cast<Element>(index);
  };

  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<Element> s(parts), p(parts);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < parts; ++i) {
        s[i] = rings[i].add(comp[a][i], comp[b][i]);
        p[i] = rings[i].mul(comp[a][i], comp[b][i]);
      }
      t.add[a * n + b] = encode_parts(s);
      t.mul[a * n + b] = encode_parts(p);
    }
  }
  std::vector<Element> zeros(parts), ones(parts);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < parts; ++i) {
    zeros[i] = rings[i].zero();
    ones[i] = rings[i].one();
    names.push_back(rings[i].construction());
  }
  t.zero = encode_parts(zeros);
  t.one = encode_parts(ones);

  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::string> ls;
    for (std::size_t i = 0; i < parts; ++i) ls.push_back(rings[i].label(comp[a][i]));
    labels[a] = "(" + join(ls, ",") + ")";
  }
  return FiniteRing(std::move(t), std::move(labels), "prod(" + join(names, ",") + ")");
}

FiniteRing matrix_ring(const FiniteRing& base, std::size_t k, MatrixShape shape,
                       std::size_t cap) {
  if (k == 0) throw std::invalid_argument("matrix size must be at least 1");
  // Stored positions in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  std::vector<std::vector<int>> slot(k, std::vector<int>(k, -1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (shape == MatrixShape::LowerTriangular && j > i) continue;
      slot[i][j] = static_cast<int>(positions.size());
      positions.emplace_back(i, j);
    }
  }
  const std::size_t q = base.order();
  const std::size_t n = saturating_pow(q, positions.size());
  enforce_cap(n, cap);

  const Element zero = base.zero();
  auto entry = [&](const std::vector<Element>& m, std::size_t i, std::size_t j) {
    const int s = slot[i][j];
    return s < 0 ? zero : m[static_cast<std::size_t>(s)];
  };

  std::vector<std::vector<Element>> ent(n);
  for (std::size_t a = 0; a < n; ++a) ent[a] = digits(a, q, positions.size());

  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<Element> sum(positions.size()), prod(positions.size());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t s = 0; s < positions.size(); ++s) {
        sum[s] = base.add(ent[a][s], ent[b][s]);
        const auto [i, j] = positions[s];
        Element acc = zero;
        for (std::size_t l = 0; l < k; ++l) {
          acc = base.add(acc, base.mul(entry(ent[a], i, l), entry(ent[b], l, j)));
        }
        prod[s] = acc;
      }
      t.add[a * n + b] = encode(sum, q);
      t.mul[a * n + b] = encode(prod, q);
    }
  }
  std::vector<Element> zeros(positions.size(), zero), ident(positions.size(), zero);
  for (std::size_t i = 0; i < k; ++i) ident[static_cast<std::size_t>(slot[i][i])] = base.one();
  t.zero = encode(zeros, q);
  t.one = encode(ident, q);

  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::string> cells;
      for (std::size_t j = 0; j < k; ++j) cells.push_back(base.label(entry(ent[a], i, j)));
      rows.push_back("[" + join(cells, ",") + "]");
    }
    labels[a] = "[" + join(rows, ",") + "]";
  }
  const std::string head = shape == MatrixShape::Full ? "mat(" : "tri(";
  return FiniteRing(std::move(t), std::move(labels),
                    head + base.construction() + "," + std::to_string(k) + ")");
}

FiniteRing truncated_poly(const FiniteRing& base, std::size_t len, std::size_t cap) {
  if (len == 0) throw std::invalid_argument("truncation degree must be at least 1");
  const std::size_t q = base.order();
  const std::size_t n = saturating_pow(q, len);
  enforce_cap(n, cap);

  std::vector<std::vector<Element>> co(n);
  for (std::size_t a = 0; a < n; ++a) co[a] = digits(a, q, len);

  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<Element> sum(len), prod(len);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < len; ++i) {
        sum[i] = base.add(co[a][i], co[b][i]);
        Element acc = base.zero();
        for (std::size_t j = 0; j <= i; ++j) acc = base.add(acc, base.mul(co[a][j], co[b][i - j]));
        prod[i] = acc;
      }
      t.add[a * n + b] = encode(sum, q);
      t.mul[a * n + b] = encode(prod, q);
    }
  }
  std::vector<Element> zeros(len, base.zero()), ident(len, base.zero());
  ident[0] = base.one();
  t.zero = encode(zeros, q);
  t.one = encode(ident, q);

  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::string> cs;
    for (Element c : co[a]) cs.push_back(base.label(c));
    labels[a] = poly_label(cs, base.label(base.zero()), base.label(base.one()), "x");
  }
  return FiniteRing(std::move(t), std::move(labels),
                    "poly(" + base.construction() + "," + std::to_string(len) + ")");
}

FiniteRing trivial_extension(const FiniteRing& base, const BimoduleSpec& module, std::size_t cap) {
  const std::size_t q = base.order();
  const std::size_t k = module.order;
  const std::size_t n = saturating_mul(q, k);
  enforce_cap(n, cap);
  if (const AxiomReport rep = check_bimodule(base, base, module); !rep.ok) {
    throw std::invalid_argument("invalid bimodule: " + rep.axiom);
  }

  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element r1 = static_cast<Element>(a % q), m1 = static_cast<Element>(a / q);
    for (std::size_t b = 0; b < n; ++b) {
      const Element r2 = static_cast<Element>(b % q), m2 = static_cast<Element>(b / q);
      t.add[a * n + b] = static_cast<Element>(base.add(r1, r2) + q * module.plus(m1, m2));
      const Element m = module.plus(module.act_left(r1, m2), module.act_right(m1, r2, q));
      t.mul[a * n + b] = static_cast<Element>(base.mul(r1, r2) + q * m);
    }
  }
  t.zero = static_cast<Element>(base.zero() + q * module.zero);
  t.one = static_cast<Element>(base.one() + q * module.zero);

  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element m = static_cast<Element>(a / q);
    const std::string ml = module.labels.empty() ? std::to_string(m) : module.labels[m];
    labels[a] = "(" + base.label(static_cast<Element>(a % q)) + "," + ml + ")";
  }
  return FiniteRing(std::move(t), std::move(labels),
                    "trivext(" + base.construction() + "," + module.description + ")");
}

FiniteRing formal_triangular(const FiniteRing& r, const FiniteRing& s, const BimoduleSpec& v,
                             std::size_t cap) {
  const std::size_t nr = r.order(), nv = v.order, ns = s.order();
  const std::size_t n = saturating_mul(saturating_mul(nr, nv), ns);
  enforce_cap(n, cap);
  if (const AxiomReport rep = check_bimodule(r, s, v); !rep.ok) {
    throw std::invalid_argument("invalid bimodule: " + rep.axiom);
  }

  struct Triple {
    Element r, v, s;
  };
  auto split = [&](std::size_t a) {
    return Triple{static_cast<Element>(a % nr), static_cast<Element>(a / nr % nv),
                  static_cast<Element>(a / (nr * nv))};
  };
  auto join3 = [&](Element x, Element y, Element z) {
    return static_cast<Element>(x + nr * (y + nv * z));
  };

  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Triple x = split(a);
    for (std::size_t b = 0; b < n; ++b) {
      const Triple y = split(b);
      t.add[a * n + b] = join3(r.add(x.r, y.r), v.plus(x.v, y.v), s.add(x.s, y.s));
      const Element mid = v.plus(v.act_left(x.r, y.v), v.act_right(x.v, y.s, ns));
      t.mul[a * n + b] = join3(r.mul(x.r, y.r), mid, s.mul(x.s, y.s));
    }
  }
  t.zero = join3(r.zero(), v.zero, s.zero());
  t.one = join3(r.one(), v.zero, s.one());

  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Triple x = split(a);
    const std::string vl = v.labels.empty() ? std::to_string(x.v) : v.labels[x.v];
    labels[a] = "[[" + r.label(x.r) + "," + vl + "],[0," + s.label(x.s) + "]]";
  }
  return FiniteRing(std::move(t), std::move(labels),
                    "ftri(" + r.construction() + "," + s.construction() + "," + v.description +
                        ")");
}

FiniteRing pierce_corner(const FiniteRing& ring, Element e) {
  if (e >= ring.order()) throw std::invalid_argument("corner: element out of range");
  if (ring.mul(e, e) != e) throw std::invalid_argument("corner: element is not idempotent");

  const std::size_t n = ring.order();
  std::vector<bool> member(n, false);
  for (Element x = 0; x < n; ++x) member[ring.mul(ring.mul(e, x), e)] = true;
  std::vector<Element> elems;
  std::vector<Element> index_of(n, 0);
  for (Element x = 0; x < n; ++x) {
    if (member[x]) {
      index_of[x] = static_cast<Element>(elems.size());
      elems.push_back(x);
    }
  }
  const std::size_t k = elems.size();
  RingTables t;
  t.order = k;
  t.add.resize(k * k);
  t.mul.resize(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      t.add[a * k + b] = index_of[ring.add(elems[a], elems[b])];
      t.mul[a * k + b] = index_of[ring.mul(elems[a], elems[b])];
    }
  }
  t.zero = index_of[ring.zero()];
  t.one = index_of[e];
  std::vector<std::string> labels;
  for (Element x : elems) labels.push_back(ring.label(x));
  return FiniteRing(std::move(t), std::move(labels),
                    "corner(" + ring.construction() + "," + ring.label(e) + ")");
}

FiniteRing opposite(const FiniteRing& ring) {
  RingTables t = ring.tables();
  const std::size_t n = t.order;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t.mul[a * n + b] = ring.mul(static_cast<Element>(b), static_cast<Element>(a));
  }
  return FiniteRing(std::move(t), ring.labels(), "opp(" + ring.construction() + ")");
}

BimoduleSpec regular_bimodule(const FiniteRing& ring) {
  BimoduleSpec m;
  m.order = ring.order();
  m.add.assign(ring.add_table().begin(), ring.add_table().end());
  m.left_action.assign(ring.mul_table().begin(), ring.mul_table().end());
  m.right_action = m.left_action;
  m.zero = ring.zero();
  m.labels = ring.labels();
  m.description = "self";
  return m;
}

BimoduleSpec principal_ideal_bimodule(const FiniteRing& ring, Element generator) {
  if (generator >= ring.order()) throw std::invalid_argument("ideal generator out of range");
  if (!ring.is_commutative()) {
    throw std::invalid_argument("ideal(...) bimodules need a commutative base ring");
  }
  const std::size_t n = ring.order();
  std::vector<bool> member(n, false);
  for (Element x = 0; x < n; ++x) member[ring.mul(x, generator)] = true;
  std::vector<Element> elems;
  std::vector<Element> index_of(n, 0);
  for (Element x = 0; x < n; ++x) {
    if (member[x]) {
      index_of[x] = static_cast<Element>(elems.size());
      elems.push_back(x);
    }
  }
  const std::size_t k = elems.size();
  BimoduleSpec m;
  m.order = k;
  m.add.resize(k * k);
  m.left_action.resize(n * k);
  m.right_action.resize(k * n);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) m.add[a * k + b] = index_of[ring.add(elems[a], elems[b])];
  }
  for (Element r = 0; r < n; ++r) {
    for (std::size_t a = 0; a < k; ++a) {
      m.left_action[r * k + a] = index_of[ring.mul(r, elems[a])];
      m.right_action[a * n + r] = index_of[ring.mul(elems[a], r)];
    }
  }
  m.zero = index_of[ring.zero()];
  for (Element x : elems) m.labels.push_back(ring.label(x));
  m.description = "ideal(" + std::to_string(generator) + ")";
  return m;
}

BimoduleSpec zero_bimodule(const FiniteRing& left, const FiniteRing& right) {
  BimoduleSpec m;
  m.order = 1;
  m.add = {0};
  m.left_action.assign(left.order(), 0);
  m.right_action.assign(right.order(), 0);
  m.zero = 0;
  m.labels = {"0"};
  m.description = "zero";
  return m;
}

BimoduleSpec read_bimodule_tables(std::istream& in, const FiniteRing& ring,
                                  std::string description) {
  std::size_t m = 0, r = 0;
  if (!(in >> m >> r)) throw StructuralError("bimodule file: missing header 'm |R|'");
  if (m == 0) throw StructuralError("bimodule file: module order must be positive");
  if (r != ring.order()) {
    throw StructuralError("bimodule file: header ring order " + std::to_string(r) +
                          " does not match base ring order " + std::to_string(ring.order()));
  }
  auto read_table = [&](std::size_t count, const char* what) {
    std::vector<Element> out(count);
    for (auto& v : out) {
      long long x = 0;
      if (!(in >> x)) throw StructuralError(std::string("bimodule file: truncated ") + what);
      if (x < 0 || static_cast<std::size_t>(x) >= m) {
        throw StructuralError(std::string("bimodule file: entry out of range in ") + what);
      }
      v = static_cast<Element>(x);
    }
    return out;
  };
  BimoduleSpec spec;
  spec.order = m;
  spec.add = read_table(m * m, "addition table");
  spec.left_action = read_table(r * m, "left action");
  spec.right_action = read_table(m * r, "right action");
  std::string extra;
  if (in >> extra) throw StructuralError("bimodule file: trailing data");

  bool found = false;
  for (Element z = 0; z < m && !found; ++z) {
    bool identity = true;
    for (Element x = 0; x < m && identity; ++x) identity = spec.plus(z, x) == x;
    if (identity) {
      spec.zero = z;
      found = true;
    }
  }
  if (!found) throw StructuralError("bimodule file: addition table has no identity");
  for (std::size_t i = 0; i < m; ++i) spec.labels.push_back("m" + std::to_string(i));
  spec.description = std::move(description);
  if (const AxiomReport rep = check_bimodule(ring, ring, spec); !rep.ok) {
    throw StructuralError("bimodule file: " + rep.axiom + " fails");
  }
  return spec;
}

}  // namespace morphic
