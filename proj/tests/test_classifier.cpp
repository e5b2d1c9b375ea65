#include <doctest.h>

#include <stdexcept>

#include "morphic/classifier.hpp"
#include "morphic/constructions.hpp"
#include "morphic/corpus.hpp"
#include "morphic/ring_expr.hpp"
#include "support/oracles.hpp"

using namespace morphic;

namespace {

oracle::Hand hand(Side s) { return s == Side::Left ? oracle::Hand::Left : oracle::Hand::Right; }

Status profile_status(const std::string& text, const std::string& name) {
  const RingAnalysis a(build_ring(text, 512));
  return classify(a).flag(name).status;
}

}  // namespace

TEST_CASE("element classes match brute force on small corpus rings") {
  for (const auto& text : default_corpus(32)) {
    const RingAnalysis a(build_ring(text, 512));
    const FiniteRing& r = a.ring();
    CAPTURE(text);
    for (Side side : {Side::Left, Side::Right}) {
      for (Element x = 0; x < r.order(); ++x) {
        const ElementClass c = element_class(a, side, x);
        const oracle::Kinds k = oracle::kinds(r, hand(side), x);
        CHECK(c.pseudo == k.pseudo);
        CHECK(c.generalized == k.generalized);
        CHECK(c.morphic == k.morphic);
        CHECK(c == element_class(r, side, x));
      }
    }
  }
}

TEST_CASE("T2 classification") {
  const RingAnalysis a(build_ring("tri(z2,2)", 512));
  const MorphicProfile p = ring_morphic_profile(a);
  CHECK(p.at(Side::Left).generalized.holds());
  CHECK(p.at(Side::Left).pseudo.fails());
  const Element e21 = *a.ring().find_label("[[0,0],[1,0]]");
  CHECK(p.at(Side::Left).pseudo.witness == std::vector<Element>{e21});
  const ElementClass c = element_class(a, Side::Left, e21);
  CHECK(c.generalized == Element{1});  // least b with l(E21) = R b is E11
  CHECK_FALSE(c.is_pseudo());
}

TEST_CASE("hierarchy examples") {
  CHECK(profile_status("z4", "left_morphic") == Status::True);
  CHECK(profile_status("z12", "right_morphic") == Status::True);
  CHECK(profile_status("poly(z4,2)", "left_generalized_morphic") == Status::False);
  CHECK(profile_status("poly(z4,2)", "left_pseudo_morphic") == Status::False);
  CHECK(profile_status("poly(z2,2)", "left_pseudo_morphic") == Status::True);
  CHECK(profile_status("poly(z2,2)", "regular") == Status::False);
  CHECK(profile_status("poly(z2,2)", "symmetric") == Status::True);
  CHECK(profile_status("mat(z2,2)", "regular") == Status::True);
  CHECK(profile_status("mat(z2,2)", "unit_regular") == Status::True);
  CHECK(profile_status("mat(z2,2)", "strongly_regular") == Status::False);
  CHECK(profile_status("mat(z2,2)", "left_morphic") == Status::True);
  CHECK(profile_status("mat(z2,2)", "reversible") == Status::False);
  CHECK(profile_status("gf(2,3)", "strongly_regular") == Status::True);
  CHECK(profile_status("prod(z2,z3)", "reduced") == Status::True);
  CHECK(profile_status("z8", "reduced") == Status::False);
  CHECK(profile_status("z8", "semiprime") == Status::False);
}

TEST_CASE("the hidden Z4 x 2Z4 counterexample") {
  const RingAnalysis a(build_ring("trivext(z4,ideal(2))", 512));
  const ClassProfile p = classify(a);
  CHECK(p.flag("left_morphic").fails());
  CHECK(a.ring().label(p.flag("left_morphic").witness.front()) == "(2,0)");
}

TEST_CASE("structural predicates against brute force") {
  for (const char* text : {"z12", "z8", "tri(z2,2)", "mat(z2,2)", "poly(z4,2)", "prod(z2,z4)"}) {
    const RingAnalysis a(build_ring(text, 512));
    const FiniteRing& r = a.ring();
    CAPTURE(text);
    // Left P-injective: r l(a) = a R for all a.
    bool pinj = true;
    for (Element x = 0; x < r.order(); ++x) {
      pinj = pinj && oracle::ann_of(r, oracle::Hand::Right, oracle::ann(r, oracle::Hand::Left, x)) ==
                         oracle::mult(r, oracle::Hand::Right, x);
    }
    CHECK((p_injective_flag(a, Side::Left).status == Status::True) == pinj);
    // Left Bezout over principal pairs.
    bool bez = true;
    const auto left_ideals = oracle::ideals(r, oracle::Hand::Left);
    for (Element x = 0; x < r.order() && bez; ++x) {
      for (Element y = 0; y < r.order() && bez; ++y) {
        oracle::Set s = oracle::mult(r, oracle::Hand::Left, x);
        const oracle::Set t = oracle::mult(r, oracle::Hand::Left, y);
        for (Element e = 0; e < r.order(); ++e) s[e] = s[e] || t[e];
        s = oracle::ideal_closure(r, oracle::Hand::Left, s);
        bool principal = false;
        for (Element g = 0; g < r.order() && !principal; ++g) principal = s == oracle::mult(r, oracle::Hand::Left, g);
        bez = principal;
      }
    }
    CHECK((bezout_flag(a, Side::Left).status == Status::True) == bez);
    CHECK((classify(a).flag("regular").status == Status::True) == oracle::is_regular(r));
  }
}

TEST_CASE("flag witnesses are genuine counterexamples") {
  const RingAnalysis a(build_ring("tri(z2,2)", 512));
  const ClassProfile p = classify(a);
  const FiniteRing& r = a.ring();
  const Flag& rev = p.flag("reversible");
  REQUIRE(rev.witness.size() == 2);
  CHECK(r.mul(rev.witness[0], rev.witness[1]) == r.zero());
  CHECK(r.mul(rev.witness[1], rev.witness[0]) != r.zero());
  const Flag& red = p.flag("reduced");
  CHECK(oracle::is_nilpotent(r, red.witness.front()));
  CHECK(red.witness.front() != r.zero());
}

TEST_CASE("profile shape") {
  const RingAnalysis a(build_ring("z6", 512));
  const ClassProfile p = classify(a);
  CHECK(p.expression == "z6");
  CHECK(p.order == 6);
  CHECK(p.flags.size() == 29);
  CHECK(p.flags.front().first == "left_morphic");
  CHECK(p.flags.back().first == "right_ikeda_nakayama");
  CHECK_THROWS_AS(p.flag("no_such_flag"), std::out_of_range);
}

TEST_CASE("lattice overflow gives indeterminate flags") {
  const RingAnalysis a(build_ring("prod(z2,z2,z2,z2)", 512));
  ClassifyOptions opts;
  opts.lattice_cap = 3;
  const ClassProfile p = classify(a, opts);
  CHECK(p.flag("dual_ring").status == Status::Indeterminate);
  CHECK(p.flag("left_lear").status == Status::Indeterminate);
  CHECK(p.flag("left_morphic").status == Status::True);
}

TEST_CASE("finite QF examples") {
  CHECK(profile_status("z12", "dual_ring") == Status::True);
  CHECK(profile_status("z12", "left_lear") == Status::True);
  CHECK(profile_status("z12", "left_bezout") == Status::True);
  CHECK(profile_status("tri(z2,2)", "dual_ring") == Status::False);
  CHECK(profile_status("poly(z2,2)", "qf_finite") == Status::True);
  CHECK(profile_status("z12", "strongly_clean") == Status::True);
}
