#include "quantakit/girard.hpp"

namespace quantakit {

namespace {

QArrow family_at(const Quantaloid& Q, const DualizingFamily& F, int q) {
  (void)Q;
  return {q, q, F.d[q]};
}

// complement without revalidating the family
QArrow neg(const Quantaloid& Q, const DualizingFamily& F, const QArrow& u) {
  return Q.lda(family_at(Q, F, u.src), u);
}

}  // namespace

Report check_family(const Quantaloid& Q, const DualizingFamily& F) {
  Report report;
  if (static_cast<int>(F.d.size()) != Q.object_count()) {
    report.push_back({"sec8.family", "family is not total on objects"});
    return report;
  }
  for (const QArrow& u : Q.all_arrows()) {
    QArrow dp = family_at(Q, F, u.src);
    QArrow dq = family_at(Q, F, u.tgt);
    QArrow left = Q.lda(dp, u);
    QArrow right = Q.rda(u, dq);
    if (left != right)
      report.push_back({"sec8.family", "cyclicity d_p↙u = u↘d_q fails at " + Q.arrow_repr(u)});
    if (Q.rda(left, dp) != u || Q.lda(dq, right) != u)
      report.push_back({"sec8.family", "dualizing law fails at " + Q.arrow_repr(u)});
  }
  return report;
}

namespace {

template <typename Fn>
void for_each_family(const Quantaloid& Q, const Guards& guards, Fn&& fn) {
  long long total = 1;
  for (int q = 0; q < Q.object_count(); ++q) {
    total *= Q.hom(q, q).size();
    if (total > guards.max_search)
      throw Error(ErrKind::SizeGuardExceeded,
                  "family search space exceeds " + std::to_string(guards.max_search));
  }
  DualizingFamily F;
  F.d.assign(Q.object_count(), 0);
  while (true) {
    if (!fn(F)) return;
    int i = Q.object_count() - 1;
    for (; i >= 0; --i) {
      if (F.d[i] + 1 < Q.hom(i, i).size()) {
        ++F.d[i];
        for (int j = i + 1; j < Q.object_count(); ++j) F.d[j] = 0;
        break;
      }
    }
    if (i < 0) return;
  }
}

}  // namespace

std::optional<DualizingFamily> find_cyclic_dualizing_family(const Quantaloid& Q,
                                                            const Guards& guards) {
  std::optional<DualizingFamily> found;
  for_each_family(Q, guards, [&](const DualizingFamily& F) {
    if (check_family(Q, F).empty()) {
      found = F;
      return false;
    }
    return true;
  });
  return found;
}

std::vector<DualizingFamily> all_cyclic_dualizing_families(const Quantaloid& Q,
                                                           const Guards& guards) {
  std::vector<DualizingFamily> out;
  for_each_family(Q, guards, [&](const DualizingFamily& F) {
    if (check_family(Q, F).empty()) out.push_back(F);
    return true;
  });
  return out;
}

QArrow complement(const Quantaloid& Q, const DualizingFamily& F, const QArrow& u) {
  Report r = check_family(Q, F);
  if (!r.empty()) throw Error(ErrKind::FamilyInvalid, r.front().witness);
  QArrow nu = neg(Q, F, u);
  if (nu != Q.rda(u, family_at(Q, F, u.tgt)))
    throw Error(ErrKind::Internal, "the two complement formulas disagree");
  if (neg(Q, F, nu) != u) throw Error(ErrKind::Internal, "¬¬u != u at " + Q.arrow_repr(u));
  return nu;
}

Report check_girard_laws(const Quantaloid& Q, const DualizingFamily& F) {
  Report report = check_family(Q, F);
  if (!report.empty()) return report;
  for (int p = 0; p < Q.object_count(); ++p)
    for (int q = 0; q < Q.object_count(); ++q)
      for (int r = 0; r < Q.object_count(); ++r)
        for (const QArrow& u : Q.hom_arrows(p, q))
          for (const QArrow& v : Q.hom_arrows(q, r)) {
            QArrow vu = Q.compose(v, u);
            QArrow nu = neg(Q, F, u);
            QArrow nv = neg(Q, F, v);
            if (vu != neg(Q, F, Q.lda(nu, v)))
              report.push_back({"prop.8.1", "v∘u != ¬(¬u↙v) at v=" + Q.arrow_repr(v) +
                                                " u=" + Q.arrow_repr(u)});
            if (vu != neg(Q, F, Q.rda(u, nv)))
              report.push_back({"prop.8.1", "v∘u != ¬(u↘¬v) at v=" + Q.arrow_repr(v) +
                                                " u=" + Q.arrow_repr(u)});
          }
  return report;
}

TransferRecord arr_chucon_transfer(const Quantaloid& Q, const DualizingFamily& F, const QArrow& u,
                                   const QArrow& v, const QArrow& s, const QArrow& t) {
  Report r = check_family(Q, F);
  if (!r.empty()) throw Error(ErrKind::FamilyInvalid, r.front().witness);
  TransferRecord rec;
  rec.square = Q.compose(v, s) == Q.compose(t, u);
  QArrow nu = neg(Q, F, u);
  QArrow nv = neg(Q, F, v);
  rec.chu_connection = Q.lda(nu, t) == Q.rda(s, nv);
  if (rec.square != rec.chu_connection)
    throw Error(ErrKind::Internal, "square/connection transfer is not an equivalence");
  return rec;
}

TransferCounts transfer_counts(const Quantaloid& Q, const DualizingFamily& F, const QArrow& u,
                               const QArrow& v) {
  Report r = check_family(Q, F);
  if (!r.empty()) throw Error(ErrKind::FamilyInvalid, r.front().witness);
  QArrow nu = neg(Q, F, u);
  QArrow nv = neg(Q, F, v);
  TransferCounts out;
  out.bijection = true;
  for (const QArrow& s : Q.hom_arrows(u.src, v.src))
    for (const QArrow& t : Q.hom_arrows(u.tgt, v.tgt)) {
      bool square = Q.compose(v, s) == Q.compose(t, u);
      bool connection = Q.lda(nu, t) == Q.rda(s, nv);
      if (square != connection)
        throw Error(ErrKind::Internal, "square/connection transfer is not an equivalence");
      if (square) {
        ++out.squares;
        // diagonal maps to the back diagonal under ¬
        QArrow d = Q.compose(v, s);
        if (Q.lda(nu, t) != neg(Q, F, d)) out.bijection = false;
      }
    }
  for (const QArrow& sp : Q.hom_arrows(nu.src, nv.src))
    for (const QArrow& tp : Q.hom_arrows(nu.tgt, nv.tgt))
      if (Q.lda(nu, sp) == Q.rda(tp, nv)) ++out.connections;
  if (out.squares != out.connections) out.bijection = false;
  return out;
}

QDistributor negated_hom(const DualizingFamily& F, const CatPtr& X) {
  const Quantaloid& Q = *X->Q;
  QDistributor out{X, X, {}};
  out.matrix.assign(X->size(), std::vector<int>(X->size(), 0));
  for (int y = 0; y < X->size(); ++y)
    for (int x = 0; x < X->size(); ++x) {
      QArrow h = X->hom_arrow(x, y);
      out.matrix[y][x] = Q.lda(QArrow{h.src, h.src, F.d[h.src]}, h).elem;
    }
  return out;
}

Report qdist_girard_check(const Quantaloid& Q, const DualizingFamily& F,
                          const std::vector<QDistributor>& sample) {
  Report report;
  (void)Q;
  for (size_t k = 0; k < sample.size(); ++k) {
    const QDistributor& phi = sample[k];
    QDistributor dx = negated_hom(F, phi.source);
    QDistributor dy = negated_hom(F, phi.target);
    QDistributor left = dist_lda(dx, phi);   // D_X↙φ : Y ⇸ X
    QDistributor right = dist_rda(phi, dy);  // φ↘D_Y : Y ⇸ X
    const std::string tag = "distributor #" + std::to_string(k);
    if (!(left == right))
      report.push_back({"prop.8.4", "cyclicity D_X↙φ = φ↘D_Y fails at " + tag});
    if (!(dist_rda(left, dx) == phi))
      report.push_back({"prop.8.4", "(D_X↙φ)↘D_X = φ fails at " + tag});
    if (!(dist_lda(dy, right) == phi))
      report.push_back({"prop.8.4", "D_Y↙(φ↘D_Y) = φ fails at " + tag});
  }
  return report;
}

}  // namespace quantakit
