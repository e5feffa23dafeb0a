#include "quantakit/quantaloid.hpp"

#include "quantakit/presheaf.hpp"

namespace quantakit {

Quantaloid::Quantaloid(QuantaloidData data) : data_(std::move(data)) {
  const size_t n = data_.objects.size();
  if (n == 0) throw Error(ErrKind::ParseError, "quantaloid has no objects");
  if (data_.homs.size() != n * n)
    throw Error(ErrKind::ParseError, "expected one hom lattice per object pair");
  if (data_.comp.size() != n * n * n)
    throw Error(ErrKind::ParseError, "expected one composition table per object triple");
  if (data_.id_elem.size() != n)
    throw Error(ErrKind::ParseError, "expected one identity per object");
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      for (size_t r = 0; r < n; ++r) {
        const auto& tab = data_.comp[(p * n + q) * n + r];
        const int nv = data_.homs[q * n + r].size();
        const int nu = data_.homs[p * n + q].size();
        const int nw = data_.homs[p * n + r].size();
        if (static_cast<int>(tab.size()) != nv)
          throw Error(ErrKind::ParseError, "composition table has wrong outer arity");
        for (const auto& row : tab) {
          if (static_cast<int>(row.size()) != nu)
            throw Error(ErrKind::ParseError, "composition table has wrong inner arity");
          for (int e : row)
            if (e < 0 || e >= nw)
              throw Error(ErrKind::ParseError, "composition table entry out of range");
        }
      }
  for (size_t p = 0; p < n; ++p)
    if (data_.id_elem[p] < 0 || data_.id_elem[p] >= data_.homs[p * n + p].size())
      throw Error(ErrKind::ParseError, "identity element out of range");
}

Quantaloid::~Quantaloid() = default;

int Quantaloid::object_index(const Name& n) const {
  int i = object_find(n);
  if (i < 0) throw Error(ErrKind::UnknownName, "object '" + n + "'");
  return i;
}

int Quantaloid::object_find(const Name& n) const {
  for (int i = 0; i < object_count(); ++i)
    if (data_.objects[i] == n) return i;
  return -1;
}

QArrow Quantaloid::arrow(const Name& src, const Name& tgt, const Name& elem) const {
  int p = object_index(src), q = object_index(tgt);
  return {p, q, hom(p, q).index_of(elem)};
}

QArrow Quantaloid::compose(const QArrow& v, const QArrow& u) const {
  if (u.tgt != v.src)
    throw Error(ErrKind::ObjectMismatch,
                "compose: " + arrow_repr(v) + " after " + arrow_repr(u));
  return {u.src, v.tgt, raw_compose(u.src, u.tgt, v.tgt, v.elem, u.elem)};
}

QArrow Quantaloid::lda(const QArrow& w, const QArrow& u) const {
  if (u.src != w.src)
    throw Error(ErrKind::ObjectMismatch, "lda: " + arrow_repr(w) + " by " + arrow_repr(u));
  // join of {v : v∘u ≤ w} over Q(u.tgt, w.tgt)
  const FiniteLattice& H = hom(u.tgt, w.tgt);
  const FiniteLattice& W = hom(w);
  int acc = H.bottom();
  for (int v = 0; v < H.size(); ++v)
    if (W.leq(raw_compose(u.src, u.tgt, w.tgt, v, u.elem), w.elem)) acc = H.join(acc, v);
  return {u.tgt, w.tgt, acc};
}

QArrow Quantaloid::rda(const QArrow& v, const QArrow& w) const {
  if (v.tgt != w.tgt)
    throw Error(ErrKind::ObjectMismatch, "rda: " + arrow_repr(v) + " into " + arrow_repr(w));
  const FiniteLattice& H = hom(w.src, v.src);
  const FiniteLattice& W = hom(w);
  int acc = H.bottom();
  for (int u = 0; u < H.size(); ++u)
    if (W.leq(raw_compose(w.src, v.src, v.tgt, v.elem, u), w.elem)) acc = H.join(acc, u);
  return {w.src, v.src, acc};
}

bool Quantaloid::leq(const QArrow& a, const QArrow& b) const {
  if (a.src != b.src || a.tgt != b.tgt)
    throw Error(ErrKind::ObjectMismatch, "leq: " + arrow_repr(a) + " vs " + arrow_repr(b));
  return hom(a).leq(a.elem, b.elem);
}

QArrow Quantaloid::join(const QArrow& a, const QArrow& b) const {
  if (a.src != b.src || a.tgt != b.tgt)
    throw Error(ErrKind::ObjectMismatch, "join: " + arrow_repr(a) + " vs " + arrow_repr(b));
  return {a.src, a.tgt, hom(a).join(a.elem, b.elem)};
}

QArrow Quantaloid::meet(const QArrow& a, const QArrow& b) const {
  if (a.src != b.src || a.tgt != b.tgt)
    throw Error(ErrKind::ObjectMismatch, "meet: " + arrow_repr(a) + " vs " + arrow_repr(b));
  return {a.src, a.tgt, hom(a).meet(a.elem, b.elem)};
}

std::vector<QArrow> Quantaloid::all_arrows() const {
  std::vector<QArrow> out;
  for (int p = 0; p < object_count(); ++p)
    for (int q = 0; q < object_count(); ++q)
      for (int e = 0; e < hom(p, q).size(); ++e) out.push_back({p, q, e});
  return out;
}

std::vector<QArrow> Quantaloid::hom_arrows(int p, int q) const {
  std::vector<QArrow> out;
  for (int e = 0; e < hom(p, q).size(); ++e) out.push_back({p, q, e});
  return out;
}

std::string Quantaloid::arrow_repr(const QArrow& a) const {
  return object_name(a.src) + ">" + object_name(a.tgt) + ":" + elem_name(a);
}

Report validate_quantaloid(const Quantaloid& Q) {
  Report report;
  const int n = Q.object_count();

  // unit laws
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (const QArrow& u : Q.hom_arrows(p, q)) {
        if (Q.compose(u, Q.identity(p)) != u)
          report.push_back({"sec2.unit", "u∘1 != u at " + Q.arrow_repr(u)});
        if (Q.compose(Q.identity(q), u) != u)
          report.push_back({"sec2.unit", "1∘u != u at " + Q.arrow_repr(u)});
      }

  // associativity
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          for (const QArrow& w : Q.hom_arrows(r, s))
            for (const QArrow& v : Q.hom_arrows(q, r))
              for (const QArrow& u : Q.hom_arrows(p, q))
                if (Q.compose(Q.compose(w, v), u) != Q.compose(w, Q.compose(v, u)))
                  report.push_back({"sec2.assoc", "(w∘v)∘u != w∘(v∘u) at w=" + Q.arrow_repr(w) +
                                                      " v=" + Q.arrow_repr(v) +
                                                      " u=" + Q.arrow_repr(u)});

  // join preservation, binary and empty, in each argument
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        for (const QArrow& v : Q.hom_arrows(q, r)) {
          if (Q.compose(v, Q.bottom(p, q)) != Q.bottom(p, r))
            report.push_back({"sec2.join", "v∘⊥ != ⊥ at v=" + Q.arrow_repr(v)});
          for (const QArrow& u1 : Q.hom_arrows(p, q))
            for (const QArrow& u2 : Q.hom_arrows(p, q))
              if (Q.compose(v, Q.join(u1, u2)) != Q.join(Q.compose(v, u1), Q.compose(v, u2)))
                report.push_back({"sec2.join", "v∘(u1∨u2) mismatch at v=" + Q.arrow_repr(v) +
                                                   " u1=" + Q.arrow_repr(u1) +
                                                   " u2=" + Q.arrow_repr(u2)});
        }
        for (const QArrow& u : Q.hom_arrows(p, q)) {
          if (Q.compose(Q.bottom(q, r), u) != Q.bottom(p, r))
            report.push_back({"sec2.join", "⊥∘u != ⊥ at u=" + Q.arrow_repr(u)});
          for (const QArrow& v1 : Q.hom_arrows(q, r))
            for (const QArrow& v2 : Q.hom_arrows(q, r))
              if (Q.compose(Q.join(v1, v2), u) != Q.join(Q.compose(v1, u), Q.compose(v2, u)))
                report.push_back({"sec2.join", "(v1∨v2)∘u mismatch at u=" + Q.arrow_repr(u) +
                                                   " v1=" + Q.arrow_repr(v1) +
                                                   " v2=" + Q.arrow_repr(v2)});
        }
      }

  return report;
}

QPtr make_quantaloid(QuantaloidData data) {
  auto Q = std::make_shared<Quantaloid>(std::move(data));
  Report report = validate_quantaloid(*Q);
  if (!report.empty())
    throw ValidationFailure(report, "quantaloid violates " + report.front().law + " (" +
                                        report.front().witness + ")");
  return Q;
}

}  // namespace quantakit
