#include "quantakit/arrow_diag.hpp"

#include <map>

namespace quantakit {

namespace {

void check_frame(const Quantaloid& Q, const QArrow& u, const QArrow& v, const QArrow& s,
                 const QArrow& t) {
  if (s.src != u.src || s.tgt != v.src || t.src != u.tgt || t.tgt != v.tgt)
    throw Error(ErrKind::ObjectMismatch,
                "square/connection frame (u=" + Q.arrow_repr(u) + ", v=" + Q.arrow_repr(v) +
                    ", s=" + Q.arrow_repr(s) + ", t=" + Q.arrow_repr(t) + ")");
}

}  // namespace

bool is_square(const Quantaloid& Q, const QArrow& u, const QArrow& v, const QArrow& s,
               const QArrow& t) {
  check_frame(Q, u, v, s, t);
  return Q.compose(v, s) == Q.compose(t, u);
}

QArrow diagonal_of(const Quantaloid& Q, const ArrowSquare& sq) {
  if (!is_square(Q, sq.dom_arrow, sq.cod_arrow, sq.s, sq.t))
    throw Error(ErrKind::NotASquare, "v∘s != t∘u for s=" + Q.arrow_repr(sq.s) +
                                         ", t=" + Q.arrow_repr(sq.t));
  return Q.compose(sq.cod_arrow, sq.s);
}

bool is_diagonal(const Quantaloid& Q, const QArrow& u, const QArrow& v, const QArrow& d) {
  if (d.src != u.src || d.tgt != v.tgt)
    throw Error(ErrKind::ObjectMismatch, "diagonal " + Q.arrow_repr(d) + " for u=" +
                                             Q.arrow_repr(u) + ", v=" + Q.arrow_repr(v));
  return Q.compose(v, Q.rda(v, d)) == d && Q.compose(Q.lda(d, u), u) == d;
}

bool is_chu_connection(const Quantaloid& Q, const QArrow& u, const QArrow& v, const QArrow& s,
                       const QArrow& t) {
  check_frame(Q, u, v, s, t);
  return Q.lda(u, s) == Q.rda(t, v);
}

QArrow back_diagonal_of(const Quantaloid& Q, const ChuConnection& conn) {
  if (!is_chu_connection(Q, conn.dom_arrow, conn.cod_arrow, conn.s, conn.t))
    throw Error(ErrKind::NotASquare, "u↙s != t↘v for s=" + Q.arrow_repr(conn.s) +
                                         ", t=" + Q.arrow_repr(conn.t));
  return Q.lda(conn.dom_arrow, conn.s);
}

bool is_back_diagonal(const Quantaloid& Q, const QArrow& u, const QArrow& v, const QArrow& b) {
  if (b.src != v.src || b.tgt != u.tgt)
    throw Error(ErrKind::ObjectMismatch, "back diagonal " + Q.arrow_repr(b) + " for u=" +
                                             Q.arrow_repr(u) + ", v=" + Q.arrow_repr(v));
  return Q.lda(u, Q.rda(b, u)) == b && Q.rda(Q.lda(v, b), v) == b;
}

Name derived_object_name(const Quantaloid& Q, const QArrow& a) {
  return "arr:" + Q.object_name(a.src) + ">" + Q.object_name(a.tgt) + ":" + Q.elem_name(a);
}

namespace {

enum class DerivedKind { Arrow, Diagonal, ChuCon, BackDiag };

// Shared builder for the four derived quantaloids. Objects are the arrows
// of Q; homs are squares / diagonals / connections / back diagonals; the
// composition scheme uses residual-canonical representatives for the two
// quotient constructions.
QPtr build_derived(const Quantaloid& Q, DerivedKind kind, const Guards& guards) {
  const std::vector<QArrow> arrows = Q.all_arrows();
  const int n = static_cast<int>(arrows.size());
  if (n > guards.max_derived_objects)
    throw Error(ErrKind::SizeGuardExceeded,
                "derived quantaloid would have " + std::to_string(n) + " objects (cap " +
                    std::to_string(guards.max_derived_objects) + ")");

  const bool pairs = kind == DerivedKind::Arrow || kind == DerivedKind::ChuCon;

  QuantaloidData data;
  for (const QArrow& a : arrows) data.objects.push_back(derived_object_name(Q, a));

  // per hom: the member arrows of Q (single for diagonal kinds, pair encoded
  // as s-major index for square kinds)
  std::vector<std::vector<std::pair<QArrow, QArrow>>> members(n * n);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const QArrow u = arrows[i], v = arrows[j];
      auto& mem = members[i * n + j];
      std::vector<Name> names;
      std::vector<std::pair<Name, Name>> order;
      if (pairs) {
        for (const QArrow& s : Q.hom_arrows(u.src, v.src))
          for (const QArrow& t : Q.hom_arrows(u.tgt, v.tgt)) {
            bool in = kind == DerivedKind::Arrow ? is_square(Q, u, v, s, t)
                                                 : is_chu_connection(Q, u, v, s, t);
            if (in) {
              mem.emplace_back(s, t);
              names.push_back("sq:" + Q.elem_name(s) + "," + Q.elem_name(t));
            }
          }
        // componentwise local order
        for (size_t a = 0; a < mem.size(); ++a)
          for (size_t b = 0; b < mem.size(); ++b)
            if (Q.leq(mem[a].first, mem[b].first) && Q.leq(mem[a].second, mem[b].second))
              order.emplace_back(names[a], names[b]);
      } else {
        const bool back = kind == DerivedKind::BackDiag;
        const auto candidates =
            back ? Q.hom_arrows(v.src, u.tgt) : Q.hom_arrows(u.src, v.tgt);
        for (const QArrow& d : candidates) {
          bool in = back ? is_back_diagonal(Q, u, v, d) : is_diagonal(Q, u, v, d);
          if (in) {
            mem.emplace_back(d, d);
            names.push_back("d:" + Q.elem_name(d));
          }
        }
        // diagonals inherit the order of Q(p,q'); back diagonals carry the
        // reversed order of Q(p',q), so that the quotient from Chu
        // connections maps componentwise joins to joins
        for (size_t a = 0; a < mem.size(); ++a)
          for (size_t b = 0; b < mem.size(); ++b) {
            bool le = back ? Q.leq(mem[b].first, mem[a].first) : Q.leq(mem[a].first, mem[b].first);
            if (le) order.emplace_back(names[a], names[b]);
          }
      }
      if (static_cast<long long>(mem.size()) > guards.max_derived_hom)
        throw Error(ErrKind::SizeGuardExceeded,
                    "derived hom has " + std::to_string(mem.size()) + " elements (cap " +
                        std::to_string(guards.max_derived_hom) + ")");
      data.homs.push_back(FiniteLattice::from_order(names, order));
    }
  }

  auto member_index = [&](int i, int j, const std::pair<QArrow, QArrow>& m) {
    const auto& mem = members[i * n + j];
    for (size_t k = 0; k < mem.size(); ++k)
      if (mem[k] == m) return static_cast<int>(k);
    throw Error(ErrKind::Internal, "derived composite escaped its hom");
  };

  data.comp.resize(static_cast<size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const QArrow v = arrows[j];
        const auto& lo = members[i * n + j];
        const auto& hi = members[j * n + k];
        auto& tab = data.comp[(i * n + j) * n + k];
        tab.assign(hi.size(), std::vector<int>(lo.size(), 0));
        for (size_t b = 0; b < hi.size(); ++b)
          for (size_t a = 0; a < lo.size(); ++a) {
            std::pair<QArrow, QArrow> m;
            switch (kind) {
              case DerivedKind::Arrow:
              case DerivedKind::ChuCon:
                m = {Q.compose(hi[b].first, lo[a].first), Q.compose(hi[b].second, lo[a].second)};
                break;
              case DerivedKind::Diagonal: {
                // paste along the canonical representative s1 = v↘d1
                QArrow d = Q.compose(hi[b].first, Q.rda(v, lo[a].first));
                m = {d, d};
                break;
              }
              case DerivedKind::BackDiag: {
                // b1↙s2 with the canonical s2 = b2↘v
                QArrow d = Q.lda(lo[a].first, Q.rda(hi[b].first, v));
                m = {d, d};
                break;
              }
            }
            tab[b][a] = member_index(i, k, m);
          }
      }

  for (int i = 0; i < n; ++i) {
    const QArrow u = arrows[i];
    std::pair<QArrow, QArrow> id =
        pairs ? std::pair<QArrow, QArrow>{Q.identity(u.src), Q.identity(u.tgt)}
              : std::pair<QArrow, QArrow>{u, u};
    data.id_elem.push_back(member_index(i, i, id));
  }

  return make_quantaloid(std::move(data));
}

}  // namespace

QPtr build_arrow_quantaloid(const Quantaloid& Q, const Guards& guards) {
  return build_derived(Q, DerivedKind::Arrow, guards);
}

QPtr build_diagonal_quantaloid(const Quantaloid& Q, const Guards& guards) {
  return build_derived(Q, DerivedKind::Diagonal, guards);
}

QPtr build_chucon_quantaloid(const Quantaloid& Q, const Guards& guards) {
  return build_derived(Q, DerivedKind::ChuCon, guards);
}

QPtr build_backdiag_quantaloid(const Quantaloid& Q, const Guards& guards) {
  return build_derived(Q, DerivedKind::BackDiag, guards);
}

}  // namespace quantakit
