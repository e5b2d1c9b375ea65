#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <limits>

#include "morphic/constructions.hpp"
#include "morphic/corpus.hpp"
#include "morphic/errors.hpp"
#include "morphic/ring_expr.hpp"
#include "support/iso.hpp"

using namespace morphic;

TEST_CASE("parse examples") {
  const RingExpr e = parse_ring_expr("trivext(z4, ideal(2))");
  CHECK(e.kind == RingExpr::Kind::TrivExt);
  CHECK(e.args.at(0).kind == RingExpr::Kind::Zmod);
  CHECK(e.args.at(0).n == 4);
  CHECK(e.module.kind == ModuleExpr::Kind::Ideal);
  CHECK(e.module.generator == 2);
  CHECK(serialize(e) == "trivext(z4,ideal(2))");
  CHECK(build_ring("trivext(z4, ideal(2))", 512).order() == 8);
  CHECK(build_ring("mat(z2, 2)", 512).order() == 16);
  CHECK(build_ring("poly(z4, 2)", 512).order() == 16);
  CHECK(build_ring(" prod( z2 , gf(2,2), z3 ) ", 512).order() == 24);
  CHECK(build_ring("opp(tri(z3,2))", 512).order() == 27);
}

TEST_CASE("serialize and parse round trip over the corpus") {
  for (const auto& text : default_corpus(512)) {
    const RingExpr e = parse_ring_expr(text);
    CHECK(serialize(e) == text);
    CHECK(parse_ring_expr(serialize(e)) == e);
  }
  const RingExpr nested = parse_ring_expr("opp(prod(mat(z2,2),poly(gf(3,2),2),trivext(z6,self)))");
  CHECK(parse_ring_expr(serialize(nested)) == nested);
}

TEST_CASE("built rings carry their canonical expression") {
  for (const char* text : {"z12", "gf(2,3)", "prod(z2,z3)", "tri(z2,2)", "poly(z3,2)",
                           "trivext(z6,ideal(3))", "opp(tri(z2,2))"}) {
    const FiniteRing r = build_ring(text, 512);
    CHECK(r.construction() == text);
    const FiniteRing again = build_ring(r.construction(), 512);
    CHECK(r.labels() == again.labels());
    CHECK(std::equal(r.mul_table().begin(), r.mul_table().end(), again.mul_table().begin()));
  }
}

TEST_CASE("syntax errors carry a column") {
  auto column = [](const char* text) -> long {
    try {
      parse_ring_expr(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(column("foo(3)") == 0);
  CHECK(column("prod(z2,bar)") == 8);
  CHECK(column("z") >= 0);
  CHECK(column("mat(z2)") >= 0);
  CHECK(column("z4 z4") >= 0);
  CHECK(column("z0") >= 0);
  CHECK(column("gf(4,2)") >= 0);
  CHECK(column("trivext(z4,frob)") >= 0);
  CHECK(column("poly(z2,") >= 0);
  try {
    parse_ring_expr("mat(z2)");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("arity mismatch") != std::string::npos);
  }
}

TEST_CASE("order projection precedes building") {
  CHECK(projected_order(parse_ring_expr("mat(z4,3)")) == 262144);
  CHECK(projected_order(parse_ring_expr("trivext(z12,ideal(3))")) == 48);
  CHECK(projected_order(parse_ring_expr("poly(poly(poly(z64,64),64),64)")) ==
        std::numeric_limits<std::size_t>::max());
  CHECK_THROWS_AS(build_ring("mat(z4,3)", 512), CapExceeded);
  CHECK_THROWS_AS(build_ring("trivext(tri(z2,2),ideal(1))", 512), ParseError);
  CHECK_THROWS_AS(build_ring("trivext(z4,ideal(9))", 512), ParseError);
  CHECK_THROWS_AS(build_ring("trivext(z2,tables(/nonexistent/file))", 512), ParseError);
}

TEST_CASE("tables(path) modules") {
  const std::string path = "morphic_test_module.txt";
  {
    std::ofstream f(path);
    f << "2 2\n0 1\n1 0\n0 0\n0 1\n0 0\n0 1\n";
  }
  const FiniteRing r = build_ring("trivext(z2,tables(" + path + "))", 512);
  CHECK(r.order() == 4);
  CHECK(oracle::isomorphism(r, build_ring("poly(z2,2)", 512)));
  CHECK(projected_order(parse_ring_expr("trivext(z2,tables(" + path + "))")) == 4);
  std::remove(path.c_str());
}

TEST_CASE("semantic equivalences of expressions") {
  CHECK(oracle::isomorphism(build_ring("trivext(z4,self)", 512), build_ring("poly(z4,2)", 512)));
  CHECK(oracle::isomorphism(build_ring("prod(z3,z4)", 512), build_ring("z12", 512)));
}
