#include <doctest.h>

#include <stdexcept>

#include "support/properties.hpp"

using namespace morphic;

TEST_CASE("invariants over sampled corpus rings") {
  for (const auto& text : props::sample_corpus(30, 128, 7)) {
    const RingAnalysis a(build_ring(text, 512));
    CAPTURE(text);
    CHECK(props::hierarchy_monotone(a) == "");
    CHECK(props::opposite_duality(a) == "");
    CHECK(props::annihilator_triple(a) == "");
    CHECK(props::parallel_determinism(a) == "");
  }
}

TEST_CASE("invariants on non-commutative rings") {
  for (const char* text : {"tri(z2,2)", "tri(z3,2)", "mat(z2,2)", "tri(z2,3)", "opp(tri(z4,2))",
                           "prod(tri(z2,2),z3)", "trivext(tri(z2,2),self)"}) {
    const RingAnalysis a(build_ring(text, 512));
    CAPTURE(text);
    CHECK(props::hierarchy_monotone(a) == "");
    CHECK(props::opposite_duality(a) == "");
    CHECK(props::annihilator_triple(a) == "");
    CHECK(props::parallel_determinism(a) == "");
  }
}

TEST_CASE("sampling is reproducible") {
  CHECK(props::sample_corpus(10, 512, 1) == props::sample_corpus(10, 512, 1));
  CHECK(props::sample_corpus(10, 512, 1) != props::sample_corpus(10, 512, 2));
}
