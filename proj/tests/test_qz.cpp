#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

#include "morphic/qz.hpp"

using namespace morphic;
using namespace morphic::qz;

TEST_CASE("fractions are canonical") {
  CHECK(QFrac::make(3, 6) == QFrac{1, 2});
  CHECK(QFrac::make(-1, 3) == QFrac{2, 3});
  CHECK(QFrac::make(1, -3) == QFrac{2, 3});
  CHECK(QFrac::make(7, 7).is_zero());
  CHECK(QFrac::make(0, 5) == QFrac{});
  CHECK_THROWS_AS(QFrac::make(1, 0), std::invalid_argument);
  CHECK(QFrac::make(1, 2) + QFrac::make(1, 3) == QFrac{5, 6});
  CHECK(QFrac::make(1, 2) + QFrac::make(1, 2) == QFrac{});
  CHECK(-QFrac::make(1, 4) == QFrac{3, 4});
  CHECK(6 * QFrac::make(1, 4) == QFrac{1, 2});
  CHECK(-1 * QFrac::make(1, 4) == QFrac{3, 4});
}

TEST_CASE("cyclic submodules") {
  CHECK(cyclic_submodule(3, 6) == CyclicSub::of(2));
  CHECK(cyclic_submodule(1, 5) == CyclicSub::of(5));
  CHECK(cyclic_submodule(0, 7) == CyclicSub::of(1));
  CHECK_THROWS_AS(cyclic_submodule(1, 0), std::invalid_argument);
  CHECK(CyclicSub::whole().contains(QFrac{5, 7}));
  CHECK_FALSE(CyclicSub::of(1).contains(QFrac{1, 2}));
  CHECK(CyclicSub::of(1).contains(QFrac{}));
}

TEST_CASE("containment is divisibility") {
  CHECK(submodule_leq(6, 2));
  CHECK_FALSE(submodule_leq(4, 3));
  for (std::int64_t n = 1; n <= 20; ++n) CHECK(submodule_leq(n, n));
  CHECK_THROWS(submodule_leq(0, 1));
}

TEST_CASE("meet and join") {
  CHECK(lattice_meet_join(4, 6) == std::pair{CyclicSub::of(2), CyclicSub::of(12)});
  CHECK(lattice_meet_join(9, 1) == std::pair{CyclicSub::of(1), CyclicSub::of(9)});
  CHECK(lattice_meet_join(5, 7) == std::pair{CyclicSub::of(1), CyclicSub::of(35)});
}

TEST_CASE("lattice laws hold exhaustively up to 30") {
  auto meet = [](std::int64_t a, std::int64_t b) { return lattice_meet_join(a, b).first.den; };
  auto join = [](std::int64_t a, std::int64_t b) { return lattice_meet_join(a, b).second.den; };
  for (std::int64_t a = 1; a <= 30; ++a) {
    CHECK(meet(a, a) == a);
    CHECK(join(a, a) == a);
    for (std::int64_t b = 1; b <= 30; ++b) {
      CHECK(meet(a, b) == meet(b, a));
      CHECK(join(a, b) == join(b, a));
      CHECK(meet(a, join(a, b)) == a);
      CHECK(join(a, meet(a, b)) == a);
      // meet and join are the greatest lower and least upper bounds for inclusion
      CHECK(submodule_leq(a, meet(a, b)));
      CHECK(submodule_leq(join(a, b), a));
      for (std::int64_t c = 1; c <= 30; ++c) {
        CHECK(meet(a, meet(b, c)) == meet(meet(a, b), c));
        CHECK(join(a, join(b, c)) == join(join(a, b), c));
      }
    }
  }
}

TEST_CASE("annihilators in Z") {
  CHECK(base_annihilator(QFrac::make(1, 2)) == 2);
  CHECK(base_annihilator(QFrac{}) == 1);
  CHECK(base_annihilator(QFrac::make(3, 8)) == 8);
  for (std::int64_t a = 1; a <= 40; ++a) {
    for (std::int64_t b = 1; b <= 40; ++b) {
      CHECK(submodule_leq(a, b) ==
            (base_annihilator(QFrac::make(1, a)) % base_annihilator(QFrac::make(1, b)) == 0));
    }
  }
}

TEST_CASE("ideals of Z x Q/Z") {
  CHECK(te_principal_ideal(2, QFrac{}) == TEIdeal{2, CyclicSub::whole()});
  CHECK(te_principal_ideal(0, QFrac::make(1, 3)) == TEIdeal{0, CyclicSub::of(3)});
  CHECK(te_principal_ideal(0, QFrac{}) == TEIdeal{0, CyclicSub::of(1)});
  CHECK(te_left_annihilator(2, QFrac{}) == TEIdeal{0, CyclicSub::of(2)});
  CHECK(te_left_annihilator(0, QFrac::make(1, 3)) == TEIdeal{3, CyclicSub::whole()});
  CHECK(te_left_annihilator(0, QFrac{}) == TEIdeal{1, CyclicSub::whole()});
  CHECK(te_morphic_witness(2, QFrac{}) == std::pair<std::int64_t, QFrac>{0, QFrac{1, 2}});
  CHECK(te_morphic_witness(0, QFrac::make(1, 3)) == std::pair<std::int64_t, QFrac>{3, QFrac{}});
  CHECK(te_morphic_witness(0, QFrac{}) == std::pair<std::int64_t, QFrac>{1, QFrac{}});
  const TEIdeal i{2, CyclicSub::whole()};
  CHECK(i.contains(4, QFrac{1, 3}));
  CHECK_FALSE(i.contains(3, QFrac{}));
  const TEIdeal j{0, CyclicSub::of(4)};
  CHECK(j.contains(0, QFrac{1, 2}));
  CHECK_FALSE(j.contains(0, QFrac{1, 3}));
  CHECK_FALSE(j.contains(4, QFrac{}));
}

TEST_CASE("witness totality for large entries") {
  std::mt19937_64 rng(20260415);
  std::uniform_int_distribution<std::int64_t> big(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t n = i % 7 == 0 ? 0 : big(rng);
    const std::int64_t c = den(rng);
    const QFrac q = QFrac::make(big(rng), c);
    const auto [wn, wq] = te_morphic_witness(n, q);
    CHECK(te_principal_ideal(n, q) == te_left_annihilator(wn, wq));
    CHECK(te_left_annihilator(n, q) == te_principal_ideal(wn, wq));
  }
}

TEST_CASE("suite at small bounds") {
  const VerificationReport twelve = verify_qz_suite(12);
  CHECK(twelve.status == Verdict::Verified);
  CHECK(twelve.facts.front() == "144 submodule pairs");
  CHECK(verify_qz_suite(2).status == Verdict::Verified);
  CHECK_THROWS(verify_qz_suite(1));
}
