#include <doctest.h>

#include "oracles.hpp"
#include "quantakit/quantaloid.hpp"

using namespace quantakit;

namespace {

const std::vector<Name> kBuiltins = {"TWO", "L3", "G3", "BOOL4", "D_TWO"};

}  // namespace

TEST_CASE("builtins exist and are validated") {
  for (const Name& n : kBuiltins) {
    QPtr Q = builtin(n);
    CHECK(validate_quantaloid(*Q).empty());
  }
  CHECK(builtin("TWO")->object_count() == 1);
  CHECK(builtin("TWO")->hom(0, 0).size() == 2);
  CHECK(builtin("D_TWO")->object_count() == 2);
  CHECK_THROWS_AS(builtin("NOPE"), Error);
}

TEST_CASE("builtin caching returns the same instance") {
  CHECK(builtin("L3").get() == builtin("L3").get());
}

TEST_CASE("compose examples") {
  QPtr two = builtin("TWO");
  QArrow one = two->arrow("o", "o", "1");
  CHECK(two->compose(one, one) == one);

  QPtr l3 = builtin("L3");
  QArrow half = l3->arrow("o", "o", "1/2");
  CHECK(l3->elem_name(l3->compose(half, half)) == "0");

  QPtr g3 = builtin("G3");
  QArrow ghalf = g3->arrow("o", "o", "1/2");
  QArrow gone = g3->arrow("o", "o", "1");
  CHECK(g3->elem_name(g3->compose(ghalf, gone)) == "1/2");
}

TEST_CASE("residual examples") {
  QPtr two = builtin("TWO");
  QArrow zero = two->arrow("o", "o", "0");
  QArrow one = two->arrow("o", "o", "1");
  CHECK(two->elem_name(two->lda(zero, one)) == "0");
  CHECK(two->elem_name(two->lda(one, zero)) == "1");

  QPtr l3 = builtin("L3");
  CHECK(l3->elem_name(l3->lda(l3->arrow("o", "o", "0"), l3->arrow("o", "o", "1/2"))) == "1/2");

  QPtr g3 = builtin("G3");
  CHECK(g3->elem_name(g3->lda(g3->arrow("o", "o", "0"), g3->arrow("o", "o", "1/2"))) == "0");
}

TEST_CASE("residuation adjunction and oracle agreement on every builtin") {
  for (const Name& n : kBuiltins) {
    QPtr Q = builtin(n);
    const int m = Q->object_count();
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int r = 0; r < m; ++r)
          for (const QArrow& u : Q->hom_arrows(p, q))
            for (const QArrow& v : Q->hom_arrows(q, r))
              for (const QArrow& w : Q->hom_arrows(p, r)) {
                bool comp = Q->leq(Q->compose(v, u), w);
                CHECK(comp == Q->leq(v, Q->lda(w, u)));
                CHECK(comp == Q->leq(u, Q->rda(v, w)));
              }
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int r = 0; r < m; ++r)
          for (const QArrow& u : Q->hom_arrows(p, q))
            for (const QArrow& w : Q->hom_arrows(p, r)) {
              CHECK(Q->lda(w, u) == oracle::lda(*Q, w, u));
              for (const QArrow& v : Q->hom_arrows(q, r))
                CHECK(Q->rda(v, Q->compose(v, u)) == oracle::rda(*Q, v, Q->compose(v, u)));
            }
  }
}

TEST_CASE("join preservation") {
  for (const Name& n : kBuiltins) {
    QPtr Q = builtin(n);
    for (int p = 0; p < Q->object_count(); ++p)
      for (int q = 0; q < Q->object_count(); ++q)
        for (int r = 0; r < Q->object_count(); ++r)
          for (const QArrow& v : Q->hom_arrows(q, r)) {
            CHECK(Q->compose(v, Q->bottom(p, q)) == Q->bottom(p, r));
            for (const QArrow& u1 : Q->hom_arrows(p, q))
              for (const QArrow& u2 : Q->hom_arrows(p, q)) {
                CHECK(Q->compose(v, Q->join(u1, u2)) ==
                      Q->join(Q->compose(v, u1), Q->compose(v, u2)));
              }
          }
  }
}

TEST_CASE("patched composition table is reported as a unit violation") {
  QuantaloidData data = builtin("L3")->data();
  // force 1∘(1/2) = 1
  data.comp[0][2][1] = 2;
  Quantaloid broken(std::move(data));
  Report r = validate_quantaloid(broken);
  REQUIRE_FALSE(r.empty());
  bool unit_cited = false;
  for (const LawViolation& v : r)
    if (v.law == "sec2.unit" && v.witness.find("1/2") != Name::npos) unit_cited = true;
  CHECK(unit_cited);

  QuantaloidData again = builtin("L3")->data();
  again.comp[0][2][1] = 2;
  CHECK_THROWS_AS(make_quantaloid(std::move(again)), ValidationFailure);
}

TEST_CASE("make_quantaloid accepts valid data") {
  QuantaloidData data = builtin("G3")->data();
  QPtr Q = make_quantaloid(std::move(data));
  CHECK(validate_quantaloid(*Q).empty());
}

TEST_CASE("object mismatch raises") {
  QPtr d = builtin("D_TWO");
  QArrow a = {0, 0, 0};
  QArrow b = {1, 1, 0};
  CHECK_THROWS_AS(d->compose(a, b), Error);
  try {
    d->compose(a, b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::ObjectMismatch);
  }
}

TEST_CASE("arrow parsing and repr") {
  QPtr two = builtin("TWO");
  QArrow a = two->arrow("o", "o", "1");
  CHECK(two->arrow_repr(a) == "o>o:1");
  CHECK_THROWS_AS(two->arrow("o", "o", "2"), Error);
  CHECK_THROWS_AS(two->arrow("p", "o", "1"), Error);
}
