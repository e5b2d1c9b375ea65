#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "morphic/constructions.hpp"
#include "morphic/errors.hpp"
#include "morphic/ring.hpp"
#include "support/iso.hpp"
#include "support/oracles.hpp"

using namespace morphic;

TEST_CASE("zmod tables are residue arithmetic") {
  const FiniteRing z12 = make_zmod(12);
  CHECK(z12.order() == 12);
  CHECK(z12.is_commutative());
  for (Element a = 0; a < 12; ++a) {
    for (Element b = 0; b < 12; ++b) {
      CHECK(z12.add(a, b) == (a + b) % 12);
      CHECK(z12.mul(a, b) == (a * b) % 12);
    }
  }
  CHECK(check_ring_axioms(z12).ok);
  CHECK(make_zmod(1).order() == 1);
  CHECK_THROWS_AS(make_zmod(0), std::invalid_argument);
}

TEST_CASE("finite fields have every nonzero element invertible") {
  for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    const FiniteRing f = make_gf(p, k);
    CAPTURE(f.construction());
    CHECK(check_ring_axioms(f).ok);
    CHECK(f.is_commutative());
    CHECK(oracle::units(f) == f.order() - 1);
  }
  CHECK(gf_modulus(2, 2) == std::vector<Element>{1, 1});  // t^2 + t + 1
  CHECK(make_gf(2, 2).label(2) == "t");
}

TEST_CASE("axiom checker rejects broken tables") {
  RingTables t = make_zmod(4).tables();
  CHECK(check_ring_axioms(t).ok);
  RingTables bad = t;
  bad.mul[2 * 4 + 3] = 1;  // 2*3 = 1 breaks distributivity
  const AxiomReport rep = check_ring_axioms(bad);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.axiom.empty());
  CHECK_FALSE(rep.witness.empty());

  RingTables no_one = t;
  no_one.one = 2;
  CHECK_FALSE(check_ring_axioms(no_one).ok);

  RingTables ragged = t;
  ragged.add.pop_back();
  CHECK_THROWS_AS(check_ring_axioms(ragged), StructuralError);
}

TEST_CASE("bimodule checker") {
  const FiniteRing z4 = make_zmod(4);
  CHECK(check_bimodule(z4, z4, regular_bimodule(z4)).ok);
  CHECK(check_bimodule(z4, z4, principal_ideal_bimodule(z4, 2)).ok);
  CHECK(check_bimodule(z4, z4, zero_bimodule(z4, z4)).ok);
  BimoduleSpec broken = regular_bimodule(z4);
  broken.left_action[1 * 4 + 1] = 2;  // 1 * m must be m
  CHECK_FALSE(check_bimodule(z4, z4, broken).ok);
}

TEST_CASE("bimodule table files") {
  const FiniteRing z2 = make_zmod(2);
  std::istringstream good("2 2\n0 1\n1 0\n0 0\n0 1\n0 0\n0 1\n");
  const BimoduleSpec m = read_bimodule_tables(good, z2, "tables(x)");
  CHECK(m.order == 2);
  CHECK(check_bimodule(z2, z2, m).ok);
  std::istringstream wrong_ring("2 3\n");
  CHECK_THROWS_AS(read_bimodule_tables(wrong_ring, z2, "x"), StructuralError);
  std::istringstream short_file("2 2\n0 1\n1");
  CHECK_THROWS_AS(read_bimodule_tables(short_file, z2, "x"), StructuralError);
}

TEST_CASE("labels round trip through find_label") {
  const FiniteRing t2 = matrix_ring(make_zmod(2), 2, MatrixShape::LowerTriangular);
  for (Element a = 0; a < t2.order(); ++a) CHECK(t2.find_label(t2.label(a)) == a);
  CHECK_FALSE(t2.find_label("nope").has_value());
}

TEST_CASE("isomorphism oracle sanity") {
  CHECK(oracle::isomorphism(make_zmod(6), make_zmod(6)));
  const FiniteRing parts[] = {make_zmod(2), make_zmod(3)};
  CHECK(oracle::isomorphism(direct_product(parts), make_zmod(6)));
  const FiniteRing p4[] = {make_zmod(2), make_zmod(2)};
  CHECK_FALSE(oracle::isomorphism(direct_product(p4), make_zmod(4)));
  CHECK_FALSE(oracle::isomorphism(make_gf(2, 2), make_zmod(4)));
}
