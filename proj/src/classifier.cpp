#include "morphic/classifier.hpp"

#include <stdexcept>

#include "morphic/parallel.hpp"

namespace morphic {

namespace {

std::size_t idx(Side s) { return static_cast<std::size_t>(s); }

std::string side_prefix(Side s) { return std::string(side_name(s)) + "_"; }

/// Greedy generating set: ascending members not already in the ideal so far.
std::vector<Element> generators_of(const FiniteRing& ring, Side side, const ElementMask& ideal) {
  std::vector<Element> gens;
  ElementMask span(ring.order());
  span.set(ring.zero());
  ideal.for_each([&](Element g) {
    if (span.test(g)) return;
    gens.push_back(g);
    span = subgroup_sum(ring, span, principal_ideal(ring, side, g));
  });
  return gens;
}

std::string describe(const FiniteRing& ring, const std::vector<Element>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += ring.label(gens[i]);
  }
  return out + ")";
}

Flag from_scan(std::optional<std::size_t> failure, const std::string& note) {
  if (!failure) return Flag::yes();
  return Flag::no({static_cast<Element>(*failure)}, note);
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::True:
      return "true";
    case Status::False:
      return "false";
    case Status::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

bool operator==(const ElementClass& a, const ElementClass& b) {
  return a.element == b.element && a.side == b.side && a.pseudo == b.pseudo &&
         a.generalized == b.generalized && a.morphic == b.morphic;
}

ElementClass element_class(const RingAnalysis& analysis, Side side, Element a) {
  const SideTables& t = analysis.tables(side);
  ElementClass c;
  c.element = a;
  c.side = side;
  const ElementMask& ra = t.principal(a);
  const ElementMask& la = t.annihilator(a);
  c.pseudo = t.least_annihilator_generator(ra);
  c.generalized = t.least_principal_generator(la);
  for (Element b : t.annihilator_generators(ra)) {
    if (t.principal(b) == la) {
      c.morphic = b;
      break;
    }
  }
  return c;
}

ElementClass element_class(const FiniteRing& ring, Side side, Element a) {
  ElementClass c;
  c.element = a;
  c.side = side;
  const Element single[] = {a};
  const ElementMask ra = principal_ideal(ring, side, a);
  const ElementMask la = annihilator(ring, side, single);
  for (Element b = 0; b < ring.order(); ++b) {
    const Element sb[] = {b};
    const bool p = annihilator(ring, side, sb) == ra;
    const bool g = principal_ideal(ring, side, b) == la;
    if (p && !c.pseudo) c.pseudo = b;
    if (g && !c.generalized) c.generalized = b;
    if (p && g && !c.morphic) c.morphic = b;
  }
  return c;
}

SideHierarchy side_hierarchy(const RingAnalysis& analysis, Side side, std::size_t threads) {
  const std::size_t n = analysis.ring().order();
  std::vector<ElementClass> classes(n);
  parallel_for(n, threads, [&](std::size_t a) {
    classes[a] = element_class(analysis, side, static_cast<Element>(a));
  });
  auto first = [&](auto pred) -> std::optional<std::size_t> {
    for (std::size_t a = 0; a < n; ++a) {
      if (!pred(classes[a])) return a;
    }
    return std::nullopt;
  };
  SideHierarchy h;
  h.morphic = from_scan(first([](const ElementClass& c) { return c.is_morphic(); }),
                        "no b with Ra = l(b) and l(a) = Rb");
  h.quasi = from_scan(first([](const ElementClass& c) { return c.is_quasi(); }),
                      "Ra is not an annihilator or l(a) is not principal");
  h.pseudo = from_scan(first([](const ElementClass& c) { return c.is_pseudo(); }),
                       "Ra is not l(b) for any b");
  h.generalized = from_scan(first([](const ElementClass& c) { return c.is_generalized(); }),
                            "l(a) is not principal");
  return h;
}

MorphicProfile ring_morphic_profile(const RingAnalysis& analysis, std::size_t threads) {
  MorphicProfile p;
  p.sides[idx(Side::Left)] = side_hierarchy(analysis, Side::Left, threads);
  p.sides[idx(Side::Right)] = side_hierarchy(analysis, Side::Right, threads);
  return p;
}

RegularityProfile regularity_profile(const RingAnalysis& analysis, std::size_t threads) {
  const FiniteRing& r = analysis.ring();
  const std::size_t n = r.order();
  const ElementMask& units = analysis.census().units;
  RegularityProfile p;
  p.regular = from_scan(least_failure(n, threads,
                                      [&](std::size_t a) {
                                        const auto e = static_cast<Element>(a);
                                        for (Element x = 0; x < n; ++x) {
                                          if (r.mul(r.mul(e, x), e) == e) return false;
                                        }
                                        return true;
                                      }),
                        "no x with axa = a");
  p.unit_regular = from_scan(least_failure(n, threads,
                                           [&](std::size_t a) {
                                             const auto e = static_cast<Element>(a);
                                             bool found = false;
                                             units.for_each([&](Element u) {
                                               if (!found && r.mul(r.mul(e, u), e) == e) found = true;
                                             });
                                             return !found;
                                           }),
                             "no unit u with aua = a");
  p.strongly_regular = from_scan(least_failure(n, threads,
                                               [&](std::size_t a) {
                                                 const auto e = static_cast<Element>(a);
                                                 const Element sq = r.mul(e, e);
                                                 for (Element x = 0; x < n; ++x) {
                                                   if (r.mul(sq, x) == e) return false;
                                                 }
                                                 return true;
                                               }),
                                 "no x with a = a^2 x");
  return p;
}

CommutationProfile commutation_profile(const RingAnalysis& analysis, std::size_t threads) {
  const FiniteRing& r = analysis.ring();
  const std::size_t n = r.order();
  const Element zero = r.zero();
  CommutationProfile p;

  p.reduced = Flag::yes();
  analysis.census().nilpotents.for_each([&](Element a) {
    if (a != zero && p.reduced.holds()) p.reduced = Flag::no({a}, "nonzero nilpotent");
  });

  auto reversible_fail = [&](std::size_t a) {
    const auto e = static_cast<Element>(a);
    for (Element b = 0; b < n; ++b) {
      if (r.mul(e, b) == zero && r.mul(b, e) != zero) return true;
    }
    return false;
  };
  if (auto a = least_failure(n, threads, reversible_fail)) {
    const auto e = static_cast<Element>(*a);
    Element b = 0;
    while (!(r.mul(e, b) == zero && r.mul(b, e) != zero)) ++b;
    p.reversible = Flag::no({e, b}, "ab = 0 but ba != 0");
  } else {
    p.reversible = Flag::yes();
  }

  auto symmetric_bad = [&](Element a, Element b, Element c) {
    return r.mul(r.mul(a, b), c) == zero &&
           (r.mul(r.mul(a, c), b) != zero || r.mul(r.mul(b, a), c) != zero);
  };
  auto symmetric_fail = [&](std::size_t a) {
    const auto e = static_cast<Element>(a);
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (symmetric_bad(e, b, c)) return true;
      }
    }
    return false;
  };
  if (auto a = least_failure(n, threads, symmetric_fail)) {
    const auto e = static_cast<Element>(*a);
    for (Element b = 0; b < n && p.symmetric.status != Status::False; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (symmetric_bad(e, b, c)) {
          p.symmetric = Flag::no({e, b, c}, "abc = 0 but acb != 0 or bac != 0");
          break;
        }
      }
    }
  } else {
    p.symmetric = Flag::yes();
  }

  p.semiprime = from_scan(least_failure(n, threads,
                                        [&](std::size_t a) {
                                          const auto e = static_cast<Element>(a);
                                          if (e == zero) return false;
                                          for (Element x = 0; x < n; ++x) {
                                            if (r.mul(r.mul(e, x), e) != zero) return false;
                                          }
                                          return true;
                                        }),
                          "aRa = 0 with a != 0");

  auto df_fail = [&](std::size_t a) {
    const auto e = static_cast<Element>(a);
    for (Element b = 0; b < n; ++b) {
      if (r.mul(b, e) == r.one() && r.mul(e, b) != r.one()) return true;
    }
    return false;
  };
  if (auto a = least_failure(n, threads, df_fail)) {
    const auto e = static_cast<Element>(*a);
    Element b = 0;
    while (!(r.mul(b, e) == r.one() && r.mul(e, b) != r.one())) ++b;
    p.directly_finite = Flag::no({e, b}, "ba = 1 but ab != 1");
  } else {
    p.directly_finite = Flag::yes();
  }
  return p;
}

Flag bezout_flag(const RingAnalysis& analysis, Side side) {
  // Ra1 + ... + Rak is principal once every two-term sum of principal
  // ideals is: fold the sum two terms at a time.
  const FiniteRing& r = analysis.ring();
  const SideTables& t = analysis.tables(side);
  std::vector<Element> reps;
  for (Element a = 0; a < r.order(); ++a) {
    if (t.least_principal_generator(t.principal(a)) == a) reps.push_back(a);
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      const ElementMask sum = subgroup_sum(r, t.principal(reps[i]), t.principal(reps[j]));
      if (t.principal_generators(sum).empty()) {
        return Flag::no({reps[i], reps[j]}, "sum of the two principal ideals is not principal");
      }
    }
  }
  return Flag::yes();
}

Flag p_injective_flag(const RingAnalysis& analysis, Side side) {
  const SideTables& inner = analysis.tables(side);
  const SideTables& outer = analysis.tables(other(side));
  for (Element a = 0; a < analysis.ring().order(); ++a) {
    if (!(outer.annihilator_of(inner.annihilator(a)) == outer.principal(a))) {
      return Flag::no({a}, "double annihilator of a differs from the principal ideal");
    }
  }
  return Flag::yes();
}

Flag pp_flag(const RingAnalysis& analysis, Side side) {
  const SideTables& t = analysis.tables(side);
  const std::vector<Element> idem = analysis.census().idempotents.elements();
  for (Element a = 0; a < analysis.ring().order(); ++a) {
    bool found = false;
    for (Element e : idem) {
      if (t.principal(e) == t.annihilator(a)) {
        found = true;
        break;
      }
    }
    if (!found) return Flag::no({a}, "annihilator not generated by an idempotent");
  }
  return Flag::yes();
}

Flag strongly_clean_flag(const RingAnalysis& analysis) {
  const FiniteRing& r = analysis.ring();
  const Census& c = analysis.census();
  const std::vector<Element> idem = c.idempotents.elements();
  for (Element a = 0; a < r.order(); ++a) {
    bool found = false;
    for (Element e : idem) {
      const Element u = r.sub(a, e);
      if (c.units.test(u) && r.mul(e, u) == r.mul(u, e)) {
        found = true;
        break;
      }
    }
    if (!found) return Flag::no({a}, "no commuting idempotent + unit decomposition");
  }
  return Flag::yes();
}

Flag lear_flag(const RingAnalysis& analysis, Side side, const IdealEnumeration& lattice) {
  if (lattice.overflow) return Flag::unknown("lattice overflow");
  const SideTables& t = analysis.tables(side);
  for (const ElementMask& ideal : lattice.ideals) {
    if (t.annihilator_generators(ideal).empty()) {
      auto gens = generators_of(analysis.ring(), side, ideal);
      return Flag::no(gens, "ideal " + describe(analysis.ring(), gens) +
                                " is not the annihilator of one element");
    }
  }
  return Flag::yes();
}

Flag dual_ring_flag(const RingAnalysis& analysis, const IdealEnumeration& left,
                    const IdealEnumeration& right) {
  if (left.overflow || right.overflow) return Flag::unknown("lattice overflow");
  for (Side side : {Side::Left, Side::Right}) {
    const SideTables& same = analysis.tables(side);
    const SideTables& opp = analysis.tables(other(side));
    for (const ElementMask& ideal : side == Side::Left ? left.ideals : right.ideals) {
      if (!(same.annihilator_of(opp.annihilator_of(ideal)) == ideal)) {
        auto gens = generators_of(analysis.ring(), side, ideal);
        return Flag::no(gens, std::string(side_name(side)) + " ideal " +
                                  describe(analysis.ring(), gens) +
                                  " differs from its double annihilator");
      }
    }
  }
  return Flag::yes();
}

namespace {

Flag ikeda_nakayama_flag(const RingAnalysis& analysis, Side side, const IdealEnumeration& lattice,
                         std::size_t budget) {
  if (lattice.overflow) return Flag::unknown("lattice overflow");
  const std::size_t k = lattice.ideals.size();
  const std::size_t pairs = k * (k + 1) / 2;
  if (pairs > budget) {
    return Flag::unknown("lattice overflow: " + std::to_string(pairs) +
                         " ideal pairs exceed budget " + std::to_string(budget));
  }
  const FiniteRing& r = analysis.ring();
  const SideTables& opp = analysis.tables(other(side));
  std::vector<ElementMask> ann;
  ann.reserve(k);
  for (const auto& ideal : lattice.ideals) ann.push_back(opp.annihilator_of(ideal));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const ElementMask meet = lattice.ideals[i] & lattice.ideals[j];
      if (!(opp.annihilator_of(meet) == subgroup_sum(r, ann[i], ann[j]))) {
        auto g1 = generators_of(r, side, lattice.ideals[i]);
        auto g2 = generators_of(r, side, lattice.ideals[j]);
        std::vector<Element> w = g1;
        w.insert(w.end(), g2.begin(), g2.end());
        return Flag::no(w, "ideals " + describe(r, g1) + " and " + describe(r, g2) +
                               " break the annihilator exchange law");
      }
    }
  }
  return Flag::yes();
}

}  // namespace

StructuralProfile structural_profile(const RingAnalysis& analysis, const ClassifyOptions& opts) {
  StructuralProfile p;
  const IdealEnumeration left = all_ideals(analysis.ring(), Side::Left, opts.lattice_cap);
  const IdealEnumeration right = all_ideals(analysis.ring(), Side::Right, opts.lattice_cap);
  for (Side s : {Side::Left, Side::Right}) {
    const IdealEnumeration& lattice = s == Side::Left ? left : right;
    p.bezout[idx(s)] = bezout_flag(analysis, s);
    p.p_injective[idx(s)] = p_injective_flag(analysis, s);
    p.lear[idx(s)] = lear_flag(analysis, s, lattice);
    p.pp[idx(s)] = pp_flag(analysis, s);
    p.ikeda_nakayama[idx(s)] = ikeda_nakayama_flag(analysis, s, lattice, opts.pair_budget);
  }
  p.dual_ring = dual_ring_flag(analysis, left, right);
  p.qf_finite = p.dual_ring;
  p.strongly_clean = strongly_clean_flag(analysis);
  return p;
}

const Flag& ClassProfile::flag(const std::string& name) const {
  for (const auto& [key, value] : flags) {
    if (key == name) return value;
  }
  throw std::out_of_range("no flag named " + name);
}

ClassProfile classify(const RingAnalysis& analysis, const ClassifyOptions& opts) {
  ClassProfile out;
  out.expression = analysis.ring().construction();
  out.order = analysis.ring().order();
  auto& f = out.flags;

  const MorphicProfile hier = ring_morphic_profile(analysis, opts.threads);
  for (Side s : {Side::Left, Side::Right}) {
    const SideHierarchy& h = hier.at(s);
    f.emplace_back(side_prefix(s) + "morphic", h.morphic);
    f.emplace_back(side_prefix(s) + "quasi_morphic", h.quasi);
    f.emplace_back(side_prefix(s) + "pseudo_morphic", h.pseudo);
    f.emplace_back(side_prefix(s) + "generalized_morphic", h.generalized);
  }
  const RegularityProfile reg = regularity_profile(analysis, opts.threads);
  f.emplace_back("regular", reg.regular);
  f.emplace_back("unit_regular", reg.unit_regular);
  f.emplace_back("strongly_regular", reg.strongly_regular);

  const CommutationProfile com = commutation_profile(analysis, opts.threads);
  f.emplace_back("reduced", com.reduced);
  f.emplace_back("reversible", com.reversible);
  f.emplace_back("symmetric", com.symmetric);
  f.emplace_back("semiprime", com.semiprime);
  f.emplace_back("directly_finite", com.directly_finite);

  const StructuralProfile st = structural_profile(analysis, opts);
  for (Side s : {Side::Left, Side::Right}) f.emplace_back(side_prefix(s) + "bezout", st.bezout[idx(s)]);
  for (Side s : {Side::Left, Side::Right}) {
    f.emplace_back(side_prefix(s) + "p_injective", st.p_injective[idx(s)]);
  }
  f.emplace_back("dual_ring", st.dual_ring);
  f.emplace_back("qf_finite", st.qf_finite);
  for (Side s : {Side::Left, Side::Right}) f.emplace_back(side_prefix(s) + "lear", st.lear[idx(s)]);
  for (Side s : {Side::Left, Side::Right}) f.emplace_back(side_prefix(s) + "pp", st.pp[idx(s)]);
  f.emplace_back("strongly_clean", st.strongly_clean);
  for (Side s : {Side::Left, Side::Right}) {
    f.emplace_back(side_prefix(s) + "ikeda_nakayama", st.ikeda_nakayama[idx(s)]);
  }
  return out;
}

}  // namespace morphic
