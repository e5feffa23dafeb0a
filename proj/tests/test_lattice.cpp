#include <doctest.h>

#include "oracles.hpp"
#include "quantakit/lattice.hpp"

using namespace quantakit;

TEST_CASE("two-element chain") {
  FiniteLattice L = FiniteLattice::from_order({"0", "1"}, {{"0", "1"}});
  CHECK(L.size() == 2);
  CHECK(L.name(L.bottom()) == "0");
  CHECK(L.name(L.top()) == "1");
  CHECK(L.leq(0, 1));
  CHECK_FALSE(L.leq(1, 0));
  CHECK(L.join(0, 1) == 1);
  CHECK(L.meet(0, 1) == 0);
}

TEST_CASE("discrete two-antichain is not a lattice") {
  CHECK_THROWS_WITH_AS(FiniteLattice::from_order({"a", "b"}, {}),
                       doctest::Contains("no least upper bound"), Error);
  try {
    FiniteLattice::from_order({"a", "b"}, {});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::NotALattice);
  }
}

TEST_CASE("diamond: joins and meets match the exhaustive scan") {
  FiniteLattice L = FiniteLattice::from_order(
      {"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
  int x = L.index_of("x"), y = L.index_of("y");
  CHECK(L.name(L.join(x, y)) == "1");
  CHECK(L.name(L.meet(x, y)) == "0");
  CHECK(L.name(L.bottom()) == "0");
  CHECK(L.name(L.top()) == "1");
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      auto lub = oracle::lub(L, {a, b});
      auto glb = oracle::glb(L, {a, b});
      REQUIRE(lub.has_value());
      REQUIRE(glb.has_value());
      CHECK(L.join(a, b) == *lub);
      CHECK(L.meet(a, b) == *glb);
    }
}

TEST_CASE("join tables agree with the order") {
  FiniteLattice L = FiniteLattice::from_order(
      {"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) CHECK(L.leq(a, b) == (L.join(a, b) == b));
}

TEST_CASE("transitive closure is taken before validation") {
  // 0≤x≤1 and 0≤y≤1 generate 0≤1 without listing it
  FiniteLattice L = FiniteLattice::from_order(
      {"0", "x", "y", "1"}, {{"0", "x"}, {"x", "1"}, {"0", "y"}, {"y", "1"}});
  CHECK(L.leq(L.index_of("0"), L.index_of("1")));
}

TEST_CASE("cycles are rejected") {
  try {
    FiniteLattice::from_order({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::NotAPartialOrder);
  }
}

TEST_CASE("empty element list is rejected") {
  CHECK_THROWS_AS(FiniteLattice::from_order({}, {}), Error);
}

TEST_CASE("chain helper") {
  FiniteLattice L = FiniteLattice::chain({"0", "1/2", "1"});
  CHECK(L.leq(0, 2));
  CHECK(L.join_of({0, 1}) == 1);
  CHECK(L.meet_of({}) == L.top());
  CHECK(L.join_of({}) == L.bottom());
}
