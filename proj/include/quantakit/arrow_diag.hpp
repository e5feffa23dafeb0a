#pragma once

#include "quantakit/quantaloid.hpp"

namespace quantakit {

/// A commutative square (s,t): u → v, i.e. v∘s = t∘u.
struct ArrowSquare {
  QArrow dom_arrow;  // u: p→q
  QArrow cod_arrow;  // v: p'→q'
  QArrow s;          // p→p'
  QArrow t;          // q→q'
};

/// A diagonal class u → v, represented by the diagonal element itself.
struct DiagonalClass {
  QArrow dom_arrow;
  QArrow cod_arrow;
  QArrow d;  // p→q', realizable as v∘s = t∘u
};

/// A Chu connection (s,t): u → v, i.e. u↙s = t↘v.
struct ChuConnection {
  QArrow dom_arrow;
  QArrow cod_arrow;
  QArrow s;  // p→p'
  QArrow t;  // q→q'
};

bool is_square(const Quantaloid& Q, const QArrow& u, const QArrow& v, const QArrow& s,
               const QArrow& t);

/// The common composite v∘s = t∘u of a commutative square.
QArrow diagonal_of(const Quantaloid& Q, const ArrowSquare& square);

/// Membership in the image of diagonal_of, decided by the closed test
/// v∘(v↘d) = d and (d↙u)∘u = d; if any (s,t) realizes d then this maximal
/// pair does.
bool is_diagonal(const Quantaloid& Q, const QArrow& u, const QArrow& v, const QArrow& d);

bool is_chu_connection(const Quantaloid& Q, const QArrow& u, const QArrow& v, const QArrow& s,
                       const QArrow& t);

/// The common residual u↙s = t↘v of a Chu connection, an arrow p'→q.
QArrow back_diagonal_of(const Quantaloid& Q, const ChuConnection& conn);

/// Closed membership test for back diagonals, dual to is_diagonal:
/// u↙(b↘u) = b and (v↙b)↘v = b.
bool is_back_diagonal(const Quantaloid& Q, const QArrow& u, const QArrow& v, const QArrow& b);

/// Derived quantaloids over Q. Objects are the arrows of Q, named
/// "arr:p>q:elem"; elements are named "sq:s,t" (squares, connections) or
/// "d:elem" (diagonals, back diagonals). All four are validated before
/// return. SizeGuardExceeded when |objects| or a hom exceeds the guards.
QPtr build_arrow_quantaloid(const Quantaloid& Q, const Guards& guards = {});
QPtr build_diagonal_quantaloid(const Quantaloid& Q, const Guards& guards = {});
QPtr build_chucon_quantaloid(const Quantaloid& Q, const Guards& guards = {});
QPtr build_backdiag_quantaloid(const Quantaloid& Q, const Guards& guards = {});

/// "arr:p>q:elem", the derived-quantaloid object name of a Q-arrow.
Name derived_object_name(const Quantaloid& Q, const QArrow& a);

}  // namespace quantakit
