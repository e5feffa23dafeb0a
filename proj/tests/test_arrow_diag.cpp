#include <doctest.h>

#include "oracles.hpp"
#include "quantakit/arrow_diag.hpp"

using namespace quantakit;

namespace {

QArrow arr(const QPtr& Q, const Name& e) { return Q->arrow("o", "o", e); }

}  // namespace

TEST_CASE("is_square examples") {
  QPtr two = builtin("TWO");
  QArrow one = arr(two, "1"), zero = arr(two, "0");
  CHECK(is_square(*two, one, one, one, one));
  CHECK_FALSE(is_square(*two, one, one, one, zero));

  QPtr l3 = builtin("L3");
  QArrow half = arr(l3, "1/2"), lone = arr(l3, "1");
  CHECK(is_square(*l3, half, half, lone, lone));
}

TEST_CASE("diagonal_of") {
  QPtr two = builtin("TWO");
  QArrow one = arr(two, "1"), zero = arr(two, "0");
  CHECK(diagonal_of(*two, {one, one, one, one}) == one);
  CHECK(diagonal_of(*two, {zero, zero, one, one}) == zero);
  CHECK_THROWS_AS(diagonal_of(*two, {one, one, one, zero}), Error);

  QPtr l3 = builtin("L3");
  QArrow half = arr(l3, "1/2"), lone = arr(l3, "1");
  CHECK(l3->elem_name(diagonal_of(*l3, {half, half, lone, lone})) == "1/2");
}

TEST_CASE("is_diagonal matches square enumeration on every builtin") {
  for (const Name& n : {"TWO", "L3", "G3", "BOOL4", "D_TWO"}) {
    QPtr Q = builtin(n);
    for (const QArrow& u : Q->all_arrows())
      for (const QArrow& v : Q->all_arrows()) {
        std::set<int> brute = oracle::diagonals(*Q, u, v);
        for (const QArrow& d : Q->hom_arrows(u.src, v.tgt))
          CHECK(is_diagonal(*Q, u, v, d) == (brute.count(d.elem) == 1));
      }
  }
}

TEST_CASE("is_diagonal examples") {
  QPtr two = builtin("TWO");
  QArrow one = arr(two, "1"), zero = arr(two, "0");
  CHECK(is_diagonal(*two, one, one, zero));   // via s=t=0
  CHECK_FALSE(is_diagonal(*two, zero, zero, one));

  QPtr l3 = builtin("L3");
  QArrow half = arr(l3, "1/2");
  CHECK(is_diagonal(*l3, half, half, arr(l3, "1/2")));
  CHECK_FALSE(is_diagonal(*l3, half, half, arr(l3, "1")));
}

TEST_CASE("arrow quantaloid of TWO") {
  QPtr two = builtin("TWO");
  QPtr A = build_arrow_quantaloid(*two);
  CHECK(A->object_count() == 2);
  CHECK(validate_quantaloid(*A).empty());

  // hom(1,1): squares are the pairs with s = t; the oracle count is frozen
  QArrow one = arr(two, "1"), zero = arr(two, "0");
  auto sq11 = oracle::squares(*two, one, one);
  CHECK(sq11.size() == 2);  // (0,0) and (1,1); both (0,1) and (1,0) fail
  int i1 = A->object_index("arr:o>o:1");
  CHECK(A->hom(i1, i1).size() == 2);

  // hom(0,0): every pair commutes, both sides are 0
  auto sq00 = oracle::squares(*two, zero, zero);
  CHECK(sq00.size() == 4);
  int i0 = A->object_index("arr:o>o:0");
  CHECK(A->hom(i0, i0).size() == 4);

  // identity square is (1,1)
  CHECK(A->elem_name(A->identity(i1)) == "sq:1,1");
  CHECK(A->elem_name(A->identity(i0)) == "sq:1,1");
}

TEST_CASE("diagonal quantaloid of TWO") {
  QPtr two = builtin("TWO");
  QPtr D = build_diagonal_quantaloid(*two);
  CHECK(validate_quantaloid(*D).empty());
  int i0 = D->object_index("arr:o>o:0");
  int i1 = D->object_index("arr:o>o:1");
  CHECK(D->hom(i1, i1).size() == 2);
  CHECK(D->hom(i0, i0).size() == 1);
  CHECK(D->hom(i0, i1).size() == 1);
  CHECK(D->hom(i1, i0).size() == 1);
  CHECK(D->elem_name(D->identity(i1)) == "d:1");
}

TEST_CASE("diagonal quantaloid of L3") {
  QPtr l3 = builtin("L3");
  QPtr D = build_diagonal_quantaloid(*l3);
  int ih = D->object_index("arr:o>o:1/2");
  // 1/2⊗s ranges over {0,1/2}
  CHECK(D->hom(ih, ih).size() == 2);
  CHECK(D->hom(ih, ih).find("d:0") >= 0);
  CHECK(D->hom(ih, ih).find("d:1/2") >= 0);
  CHECK(D->hom(ih, ih).find("d:1") < 0);
}

TEST_CASE("diagonal composition is representative independent") {
  for (const Name& n : {"TWO", "L3", "G3"}) {
    QPtr Q = builtin(n);
    for (const QArrow& u : Q->all_arrows())
      for (const QArrow& v : Q->all_arrows())
        for (const QArrow& w : Q->all_arrows())
          for (const auto& [s1, t1] : oracle::squares(*Q, u, v))
            for (const auto& [s2, t2] : oracle::squares(*Q, v, w)) {
              QArrow pasted = Q->compose(w, Q->compose(s2, s1));
              QArrow d1 = Q->compose(v, s1);
              QArrow d2 = Q->compose(w, s2);
              CHECK(pasted == Q->compose(d2, Q->rda(v, d1)));
              CHECK(pasted == Q->compose(Q->lda(d2, v), d1));
            }
  }
}

TEST_CASE("joins of diagonals are diagonals") {
  for (const Name& n : {"TWO", "L3", "G3", "BOOL4"}) {
    QPtr Q = builtin(n);
    for (const QArrow& u : Q->all_arrows())
      for (const QArrow& v : Q->all_arrows()) {
        std::set<int> ds = oracle::diagonals(*Q, u, v);
        CHECK(ds.count(Q->hom(u.src, v.tgt).bottom()) == 1);
        for (int a : ds)
          for (int b : ds) CHECK(ds.count(Q->hom(u.src, v.tgt).join(a, b)) == 1);
      }
  }
}

TEST_CASE("chu connection examples") {
  QPtr two = builtin("TWO");
  QArrow one = arr(two, "1"), zero = arr(two, "0");
  CHECK(is_chu_connection(*two, zero, zero, one, one));
  CHECK(two->elem_name(back_diagonal_of(*two, {zero, zero, one, one})) == "0");
  CHECK_FALSE(is_chu_connection(*two, zero, zero, one, zero));
  // identity-style connection: back diagonal u↙1 = u
  for (const QArrow& u : two->all_arrows()) {
    CHECK(is_chu_connection(*two, u, u, two->identity(u.src), two->identity(u.tgt)));
    CHECK(back_diagonal_of(*two, {u, u, two->identity(u.src), two->identity(u.tgt)}) == u);
  }
}

TEST_CASE("back diagonal membership matches connection enumeration") {
  for (const Name& n : {"TWO", "L3", "G3", "BOOL4", "D_TWO"}) {
    QPtr Q = builtin(n);
    for (const QArrow& u : Q->all_arrows())
      for (const QArrow& v : Q->all_arrows()) {
        std::set<int> brute = oracle::back_diagonals(*Q, u, v);
        for (const QArrow& b : Q->hom_arrows(v.src, u.tgt))
          CHECK(is_back_diagonal(*Q, u, v, b) == (brute.count(b.elem) == 1));
      }
  }
}

TEST_CASE("back diagonal quantaloid of TWO") {
  QPtr two = builtin("TWO");
  QPtr B = build_backdiag_quantaloid(*two);
  CHECK(validate_quantaloid(*B).empty());
  int i0 = B->object_index("arr:o>o:0");
  int i1 = B->object_index("arr:o>o:1");
  CHECK(B->hom(i1, i1).size() == 1);
  CHECK(B->hom(i1, i1).find("d:1") >= 0);
  CHECK(B->hom(i0, i0).size() == 2);
  QPtr C = build_chucon_quantaloid(*two);
  CHECK(validate_quantaloid(*C).empty());
  CHECK(C->elem_name(C->identity(i1)) == "sq:1,1");
}

TEST_CASE("derived quantaloids validate over every builtin") {
  for (const Name& n : {"TWO", "L3", "G3", "BOOL4", "D_TWO"}) {
    QPtr Q = builtin(n);
    CHECK(validate_quantaloid(*build_arrow_quantaloid(*Q)).empty());
    CHECK(validate_quantaloid(*build_diagonal_quantaloid(*Q)).empty());
    CHECK(validate_quantaloid(*build_chucon_quantaloid(*Q)).empty());
    CHECK(validate_quantaloid(*build_backdiag_quantaloid(*Q)).empty());
  }
}

TEST_CASE("size guard") {
  Guards tight;
  tight.max_derived_objects = 1;
  try {
    build_arrow_quantaloid(*builtin("TWO"), tight);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::SizeGuardExceeded);
  }
}

TEST_CASE("quotient from squares to diagonals preserves structure") {
  QPtr Q = builtin("L3");
  for (const QArrow& u : Q->all_arrows())
    for (const QArrow& v : Q->all_arrows()) {
      auto squares = oracle::squares(*Q, u, v);
      for (const auto& [s1, t1] : squares)
        for (const auto& [s2, t2] : squares) {
          QArrow js = Q->join(s1, s2), jt = Q->join(t1, t2);
          CHECK(is_square(*Q, u, v, js, jt));
          CHECK(Q->compose(v, js) == Q->join(Q->compose(v, s1), Q->compose(v, s2)));
        }
    }
}
