#include "quantakit/presheaf.hpp"

#include <sstream>

namespace quantakit {

bool presheaf_leq(const Presheaf& a, const Presheaf& b) {
  if (!same_category(a.base, b.base) || a.type != b.type)
    throw Error(ErrKind::BoundaryMismatch, "presheaf_leq: different base or type");
  const Quantaloid& Q = *a.base->Q;
  for (int x = 0; x < a.base->size(); ++x)
    if (!Q.leq(a.value_arrow(x), b.value_arrow(x))) return false;
  return true;
}

QArrow presheaf_hom(const Presheaf& mu, const Presheaf& mu_prime) {
  if (!same_category(mu.base, mu_prime.base))
    throw Error(ErrKind::BoundaryMismatch, "presheaf_hom: different bases");
  const Quantaloid& Q = *mu.base->Q;
  QArrow acc = Q.top(mu.type, mu_prime.type);
  for (int x = 0; x < mu.base->size(); ++x)
    acc = Q.meet(acc, Q.lda(mu_prime.value_arrow(x), mu.value_arrow(x)));
  return acc;
}

int PresheafCategory::find(int type, const std::vector<int>& values) const {
  auto it = index_.find({type, values});
  return it == index_.end() ? -1 : it->second;
}

int PresheafCategory::index_of(const Presheaf& mu) const {
  if (!same_category(mu.base, base))
    throw Error(ErrKind::BoundaryMismatch, "presheaf does not live on this base");
  int i = find(mu.type, mu.values);
  if (i < 0) throw Error(ErrKind::Internal, "value table is not a presheaf: " + presheaf_literal(mu));
  return i;
}

CatPtr PresheafCategory::cat() const {
  if (!cat_)
    throw Error(ErrKind::SizeGuardExceeded,
                "presheaf category too large to materialize as a Q-category");
  return cat_;
}

CatPtr PresheafCategory::subcategory(const std::vector<int>& indices) const {
  QCategory sub;
  sub.Q = base->Q;
  for (int i : indices) {
    sub.elems.push_back(presheaf_literal(sheaves[i]));
    sub.type_of.push_back(sheaves[i].type);
  }
  const int n = static_cast<int>(indices.size());
  sub.hom.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) sub.hom[a][b] = hom_arrow(indices[a], indices[b]).elem;
  return std::make_shared<const QCategory>(std::move(sub));
}

std::string presheaf_literal(const Presheaf& mu) {
  std::ostringstream os;
  os << mu.base->Q->object_name(mu.type) << ":[";
  for (int x = 0; x < mu.base->size(); ++x) {
    if (x) os << ',';
    os << mu.base->elems[x] << '=' << mu.base->Q->hom(mu.base->type_of[x], mu.type).name(mu.values[x]);
  }
  os << ']';
  return os.str();
}

namespace {

bool presheaf_law_holds(const Presheaf& mu) {
  const QCategory& X = *mu.base;
  const Quantaloid& Q = *X.Q;
  for (int x = 0; x < X.size(); ++x)
    for (int xp = 0; xp < X.size(); ++xp)
      if (!Q.leq(Q.compose(mu.value_arrow(x), X.hom_arrow(xp, x)), mu.value_arrow(xp)))
        return false;
  return true;
}

}  // namespace

std::vector<Presheaf> enumerate_presheaves(const CatPtr& X, int type_q, const Guards& guards) {
  const Quantaloid& Q = *X->Q;
  long long estimate = 1;
  for (int x = 0; x < X->size(); ++x) {
    estimate *= Q.hom(X->type_of[x], type_q).size();
    if (estimate > guards.max_presheaves)
      throw Error(ErrKind::SizeGuardExceeded,
                  "raw presheaf count exceeds " + std::to_string(guards.max_presheaves) +
                      " (estimate " + std::to_string(estimate) + "+)");
  }

  std::vector<Presheaf> out;
  Presheaf mu{X, type_q, std::vector<int>(X->size(), 0)};
  // odometer with the last coordinate fastest = lexicographic ascending
  while (true) {
    if (presheaf_law_holds(mu)) out.push_back(mu);
    int i = X->size() - 1;
    for (; i >= 0; --i) {
      if (mu.values[i] + 1 < Q.hom(X->type_of[i], type_q).size()) {
        ++mu.values[i];
        for (int j = i + 1; j < X->size(); ++j) mu.values[j] = 0;
        break;
      }
    }
    if (i < 0) break;
  }
  return out;
}

PxPtr presheaf_category(const CatPtr& X, const Guards& guards) {
  const Quantaloid& Q = *X->Q;

  // check the guard before consulting the cache so behavior does not
  // depend on what was materialized earlier
  for (int q = 0; q < Q.object_count(); ++q) {
    long long estimate = 1;
    for (int x = 0; x < X->size(); ++x) {
      estimate *= Q.hom(X->type_of[x], q).size();
      if (estimate > guards.max_presheaves)
        throw Error(ErrKind::SizeGuardExceeded,
                    "raw presheaf count exceeds " + std::to_string(guards.max_presheaves));
    }
  }

  const std::string key = X->repr();
  {
    std::lock_guard<std::mutex> lock(Q.px_mutex);
    auto it = Q.px_cache.find(key);
    if (it != Q.px_cache.end()) return it->second;
  }

  auto px = std::make_shared<PresheafCategory>();
  px->base = X;
  px->by_type.resize(Q.object_count());
  for (int q = 0; q < Q.object_count(); ++q)
    for (Presheaf& mu : enumerate_presheaves(X, q, guards)) {
      px->by_type[q].push_back(px->size());
      px->index_[{q, mu.values}] = px->size();
      px->sheaves.push_back(std::move(mu));
    }

  if (px->size() <= 1024) {
    QCategory cat;
    cat.Q = X->Q;
    for (const Presheaf& mu : px->sheaves) {
      cat.elems.push_back(presheaf_literal(mu));
      cat.type_of.push_back(mu.type);
    }
    cat.hom.assign(px->size(), std::vector<int>(px->size(), 0));
    for (int i = 0; i < px->size(); ++i)
      for (int j = 0; j < px->size(); ++j) cat.hom[i][j] = px->hom_arrow(i, j).elem;
    px->cat_ = std::make_shared<const QCategory>(std::move(cat));
    // PX is a separated Q-category; cheap to recheck at this scale
    if (px->size() <= 128) {
      Report r = validate_category(*px->cat_);
      if (!r.empty() || !is_separated(*px->cat_))
        throw Error(ErrKind::Internal, "presheaf category failed its own laws");
    }
  }

  std::lock_guard<std::mutex> lock(Q.px_mutex);
  auto [it, inserted] = Q.px_cache.emplace(key, px);
  return it->second;  // idempotent fill: first writer wins
}

QFunctor yoneda(const PxPtr& px) {
  const CatPtr& X = px->base;
  QFunctor y{X, px->cat(), {}};
  for (int x = 0; x < X->size(); ++x) {
    Presheaf mu{X, X->type_of[x], {}};
    for (int xp = 0; xp < X->size(); ++xp) mu.values.push_back(X->hom[xp][x]);
    y.map.push_back(px->index_of(mu));
  }
  for (int x = 0; x < X->size(); ++x)
    for (int xp = 0; xp < X->size(); ++xp)
      if (px->hom_arrow(y.map[x], y.map[xp]) != X->hom_arrow(x, xp))
        throw Error(ErrKind::Internal, "yoneda embedding is not fully faithful");
  return y;
}

Presheaf kan_upper(const QDistributor& phi, const Presheaf& lambda) {
  if (!same_category(lambda.base, phi.target))
    throw Error(ErrKind::BoundaryMismatch, "kan_upper: presheaf not on the target");
  const QCategory& X = *phi.source;
  const Quantaloid& Q = *X.Q;
  Presheaf out{phi.source, lambda.type, std::vector<int>(X.size(), 0)};
  for (int x = 0; x < X.size(); ++x) {
    QArrow acc = Q.bottom(X.type_of[x], lambda.type);
    for (int y = 0; y < phi.target->size(); ++y)
      acc = Q.join(acc, Q.compose(lambda.value_arrow(y), phi.at(x, y)));
    out.values[x] = acc.elem;
  }
  return out;
}

Presheaf kan_lower(const QDistributor& phi, const Presheaf& mu) {
  if (!same_category(mu.base, phi.source))
    throw Error(ErrKind::BoundaryMismatch, "kan_lower: presheaf not on the source");
  const QCategory& Y = *phi.target;
  const Quantaloid& Q = *Y.Q;
  Presheaf out{phi.target, mu.type, std::vector<int>(Y.size(), 0)};
  for (int y = 0; y < Y.size(); ++y) {
    QArrow acc = Q.top(Y.type_of[y], mu.type);
    for (int x = 0; x < phi.source->size(); ++x)
      acc = Q.meet(acc, Q.lda(mu.value_arrow(x), phi.at(x, y)));
    out.values[y] = acc.elem;
  }
  return out;
}

QFunctor transpose(const QDistributor& phi, const Guards& guards) {
  PxPtr px = presheaf_category(phi.source, guards);
  const QCategory& Y = *phi.target;
  QFunctor tr{phi.target, px->cat(), {}};
  for (int y = 0; y < Y.size(); ++y) {
    Presheaf col{phi.source, Y.type_of[y], {}};
    for (int x = 0; x < phi.source->size(); ++x) col.values.push_back(phi.matrix[x][y]);
    tr.map.push_back(px->index_of(col));

    // φ̃ = φ* ∘ yoneda, checked pointwise on the representable at y
    Presheaf rep{phi.target, Y.type_of[y], {}};
    for (int yp = 0; yp < Y.size(); ++yp) rep.values.push_back(Y.hom[yp][y]);
    if (!(kan_upper(phi, rep) == col))
      throw Error(ErrKind::Internal, "transpose disagrees with φ*∘yoneda");
  }
  return tr;
}

Presheaf f_ra(const QFunctor& f, const Presheaf& mu) {
  if (!same_category(mu.base, f.source))
    throw Error(ErrKind::BoundaryMismatch, "f_ra: presheaf not on the source");
  return kan_upper(cograph(f), mu);
}

Presheaf f_la(const QFunctor& f, const Presheaf& lambda) {
  if (!same_category(lambda.base, f.target))
    throw Error(ErrKind::BoundaryMismatch, "f_la: presheaf not on the target");
  Presheaf via_graph = kan_upper(graph(f), lambda);
  Presheaf via_cograph = kan_lower(cograph(f), lambda);
  if (!(via_graph == via_cograph))
    throw Error(ErrKind::Internal, "(f_♮)* and (f^♮)_* disagree");
  return via_graph;
}

}  // namespace quantakit
