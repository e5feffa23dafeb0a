#include "quantakit/interior.hpp"

namespace quantakit {

Report is_interior_operator(const PresheafCategory& px, const std::vector<int>& table) {
  Report report;
  if (static_cast<int>(table.size()) != px.size()) {
    report.push_back({"eq.int-def", "table is not total on PX"});
    return report;
  }
  for (int i = 0; i < px.size(); ++i) {
    int j = table[i];
    if (j < 0 || j >= px.size()) {
      report.push_back({"eq.int-def", "table entry out of range at " + presheaf_literal(px.sheaves[i])});
      return report;
    }
    if (px.sheaves[j].type != px.sheaves[i].type)
      report.push_back({"eq.int-def", "type not preserved at " + presheaf_literal(px.sheaves[i])});
  }
  const Quantaloid& Q = *px.base->Q;
  for (int i = 0; i < px.size(); ++i) {
    if (!presheaf_leq(px.sheaves[table[i]], px.sheaves[i]))
      report.push_back({"eq.int-def", "i ≤ 1 fails at " + presheaf_literal(px.sheaves[i])});
    if (table[table[i]] != table[i])
      report.push_back({"eq.int-def", "ii = i fails at " + presheaf_literal(px.sheaves[i])});
  }
  for (int i = 0; i < px.size(); ++i)
    for (int j = 0; j < px.size(); ++j)
      if (!Q.leq(px.hom_arrow(i, j), px.hom_arrow(table[i], table[j])))
        report.push_back({"eq.int-def", "Q-functoriality fails at (" +
                                            presheaf_literal(px.sheaves[i]) + ", " +
                                            presheaf_literal(px.sheaves[j]) + ")"});
  return report;
}

InteriorSpace make_interior_space(PxPtr px, std::vector<int> table) {
  Report report = is_interior_operator(*px, table);
  if (!report.empty())
    throw ValidationFailure(report, "interior table violates " + report.front().law + " (" +
                                        report.front().witness + ")");
  InteriorSpace s;
  s.px = std::move(px);
  s.table = std::move(table);
  s.px_to_open.assign(s.px->size(), -1);
  for (int i = 0; i < s.px->size(); ++i)
    if (s.table[i] == i) {
      s.px_to_open[i] = static_cast<int>(s.opens.size());
      s.opens.push_back(i);
    }
  s.opens_cat = s.px->subcategory(s.opens);
  return s;
}

OpenFamily open_presheaves(const InteriorSpace& space) {
  return OpenFamily{space, space.opens, space.opens_cat};
}

InteriorSpace K_object(const QDistributor& phi, const Guards& guards) {
  PxPtr px = presheaf_category(phi.source, guards);
  std::vector<int> table;
  table.reserve(px->size());
  for (const Presheaf& mu : px->sheaves)
    table.push_back(px->index_of(kan_upper(phi, kan_lower(phi, mu))));
  // φ*φ_* is an interior operator; a violation here is a bug
  try {
    return make_interior_space(std::move(px), std::move(table));
  } catch (const ValidationFailure& e) {
    throw Error(ErrKind::Internal, std::string("K_object produced a non-interior table: ") +
                                       e.what());
  }
}

QDistributor I_object(const InteriorSpace& space) {
  const CatPtr& X = space.base();
  QDistributor kappa{X, space.opens_cat, {}};
  kappa.matrix.assign(X->size(), std::vector<int>(space.opens_cat->size(), 0));
  for (int x = 0; x < X->size(); ++x)
    for (size_t j = 0; j < space.opens.size(); ++j)
      kappa.matrix[x][j] = space.px->sheaves[space.opens[j]].values[x];
  Report r = validate_distributor(kappa);
  if (!r.empty()) throw Error(ErrKind::Internal, "κ is not a distributor: " + r.front().witness);
  return kappa;
}

namespace {

void require_space_boundaries(const CatPtr& src, const CatPtr& tgt, const InteriorSpace& sx,
                              const InteriorSpace& sy, const char* what) {
  if (!same_category(src, sx.base()) || !same_category(tgt, sy.base()))
    throw Error(ErrKind::BoundaryMismatch, std::string(what) + ": spaces do not match boundaries");
}

}  // namespace

bool is_continuous_functor(const QFunctor& f, const InteriorSpace& sx, const InteriorSpace& sy) {
  require_space_boundaries(f.source, f.target, sx, sy, "is_continuous_functor");
  const PresheafCategory& PX = *sx.px;
  const PresheafCategory& PY = *sy.px;

  // (i) f←∘j ≤ i∘f←
  bool def = true;
  for (const Presheaf& lam : PY.sheaves) {
    Presheaf lhs = f_la(f, PY.sheaves[sy.table[PY.index_of(lam)]]);
    Presheaf rhs = PX.sheaves[sx.table[PX.index_of(f_la(f, lam))]];
    if (!presheaf_leq(lhs, rhs)) {
      def = false;
      break;
    }
  }

  // (ii) preimages of opens stay open
  bool opens_stay_open = true;
  for (int j : sy.opens)
    if (!sx.is_open_index(PX.index_of(f_la(f, PY.sheaves[j])))) {
      opens_stay_open = false;
      break;
    }

  // (iii) j∘(f_♮)_* ≤ j∘(f_♮)_*∘i
  bool right = true;
  const QDistributor gf = graph(f);
  for (const Presheaf& mu : PX.sheaves) {
    Presheaf lhs = PY.sheaves[sy.table[PY.index_of(kan_lower(gf, mu))]];
    Presheaf imu = PX.sheaves[sx.table[PX.index_of(mu)]];
    Presheaf rhs = PY.sheaves[sy.table[PY.index_of(kan_lower(gf, imu))]];
    if (!presheaf_leq(lhs, rhs)) {
      right = false;
      break;
    }
  }

  if (def != opens_stay_open || def != right)
    throw Error(ErrKind::CharacterizationMismatch,
                "functor continuity characterizations disagree");
  return def;
}

bool is_continuous_distributor(const QDistributor& zeta, const InteriorSpace& sx,
                               const InteriorSpace& sy) {
  require_space_boundaries(zeta.source, zeta.target, sx, sy, "is_continuous_distributor");
  const PresheafCategory& PX = *sx.px;
  const PresheafCategory& PY = *sy.px;

  bool def = true;
  for (const Presheaf& lam : PY.sheaves) {
    Presheaf lhs = kan_upper(zeta, PY.sheaves[sy.table[PY.index_of(lam)]]);
    Presheaf rhs = PX.sheaves[sx.table[PX.index_of(kan_upper(zeta, lam))]];
    if (!presheaf_leq(lhs, rhs)) {
      def = false;
      break;
    }
  }

  bool opens_stay_open = true;
  for (int j : sy.opens)
    if (!sx.is_open_index(PX.index_of(kan_upper(zeta, PY.sheaves[j])))) {
      opens_stay_open = false;
      break;
    }

  bool right = true;
  for (const Presheaf& mu : PX.sheaves) {
    Presheaf lhs = PY.sheaves[sy.table[PY.index_of(kan_lower(zeta, mu))]];
    Presheaf imu = PX.sheaves[sx.table[PX.index_of(mu)]];
    Presheaf rhs = PY.sheaves[sy.table[PY.index_of(kan_lower(zeta, imu))]];
    if (!presheaf_leq(lhs, rhs)) {
      right = false;
      break;
    }
  }

  if (def != opens_stay_open || def != right)
    throw Error(ErrKind::CharacterizationMismatch,
                "distributor continuity characterizations disagree");
  return def;
}

ContinuousDist hK_morphism(const QDistributor& phi, const QDistributor& psi,
                           const QDistributor& zeta, const QDistributor& eta,
                           const Guards& guards) {
  if (!(dist_compose(psi, zeta) == dist_compose(eta, phi)))
    throw Error(ErrKind::NotASquare, "ψ∘ζ != η∘φ");
  ContinuousDist out{K_object(phi, guards), K_object(psi, guards), zeta};
  if (!is_continuous_distributor(zeta, out.dom, out.cod))
    throw Error(ErrKind::ContinuityFailure, "square image failed the continuity check");
  return out;
}

QDistributor fullness_witness(const QDistributor& phi, const QDistributor& psi,
                              const QDistributor& zeta, const Guards& guards) {
  InteriorSpace kphi = K_object(phi, guards);
  InteriorSpace kpsi = K_object(psi, guards);
  if (!is_continuous_distributor(zeta, kphi, kpsi))
    throw Error(ErrKind::NotContinuous, "ζ is not continuous between the K-spaces");
  QDistributor eta = dist_lda(dist_compose(psi, zeta), phi);
  if (!(dist_compose(psi, zeta) == dist_compose(eta, phi)))
    throw Error(ErrKind::Internal, "fullness witness failed to close the square");
  return eta;
}

DistSquare hI_morphism(const QDistributor& zeta, const InteriorSpace& sx,
                       const InteriorSpace& sy) {
  if (!is_continuous_distributor(zeta, sx, sy))
    throw Error(ErrKind::NotContinuous, "hI requires a continuous distributor");
  const PresheafCategory& PX = *sx.px;

  QDistributor eta{sx.opens_cat, sy.opens_cat, {}};
  eta.matrix.assign(sx.opens_cat->size(), std::vector<int>(sy.opens_cat->size(), 0));
  for (size_t a = 0; a < sx.opens.size(); ++a)
    for (size_t b = 0; b < sy.opens.size(); ++b) {
      // (ζ*)^♮ restricted: entry (μ,λ) = hom_PX(μ, ζ*λ)
      Presheaf zl = kan_upper(zeta, sy.px->sheaves[sy.opens[b]]);
      eta.matrix[a][b] = presheaf_hom(PX.sheaves[sx.opens[a]], zl).elem;
    }

  DistSquare square{I_object(sx), I_object(sy), zeta, eta};
  if (!(dist_compose(square.psi, square.zeta) == dist_compose(square.eta, square.phi)))
    throw Error(ErrKind::Internal, "hI failed the square law κ_j∘ζ = (ζ*)^♮|∘κ_i");
  return square;
}

std::vector<std::vector<int>> equiv_class_key(const QDistributor& zeta, const InteriorSpace& sy) {
  std::vector<std::vector<int>> key;
  key.reserve(sy.opens.size());
  for (int j : sy.opens) key.push_back(kan_upper(zeta, sy.px->sheaves[j]).values);
  return key;
}

bool dist_equiv(const QDistributor& zeta, const QDistributor& zeta_prime, const InteriorSpace& sx,
                const InteriorSpace& sy) {
  if (!is_continuous_distributor(zeta, sx, sy) ||
      !is_continuous_distributor(zeta_prime, sx, sy))
    throw Error(ErrKind::NotContinuous, "dist_equiv requires continuous distributors");
  return equiv_class_key(zeta, sy) == equiv_class_key(zeta_prime, sy);
}

UnitCheck coreflection_unit_check(const InteriorSpace& sx, const QDistributor& psi,
                                  const QFunctor& h, const Guards& guards) {
  InteriorSpace kpsi = K_object(psi, guards);
  if (!same_category(h.source, sx.base()) || !same_category(h.target, psi.source))
    throw Error(ErrKind::BoundaryMismatch, "coreflection: h must map (X,i) into K(ψ)");
  Report fr = validate_functor(h);
  if (!fr.empty()) throw Error(ErrKind::BoundaryMismatch, "coreflection: h is not a Q-functor");
  if (!is_continuous_functor(h, sx, kpsi))
    throw Error(ErrKind::NotContinuous, "coreflection: h is not continuous into K(ψ)");

  const CatPtr& Z = psi.target;
  const PresheafCategory& PX = *sx.px;

  UnitCheck out;
  out.candidates = 0;
  out.g = QFunctor{Z, sx.opens_cat, std::vector<int>(Z->size(), 0)};

  // g := h←∘ψ̃, landing in the opens
  for (int z = 0; z < Z->size(); ++z) {
    Presheaf col{psi.source, Z->type_of[z], {}};
    for (int y = 0; y < psi.source->size(); ++y) col.values.push_back(psi.matrix[y][z]);
    Presheaf gz = f_la(h, col);
    int idx = PX.index_of(gz);
    if (!sx.is_open_index(idx)) {
      out.violations.push_back({"thm.4.5", "gz = h←ψ̃z is not open at z=" + Z->elems[z]});
      return out;
    }
    out.g.map[z] = sx.px_to_open[idx];
  }

  Report gr = validate_functor(out.g);
  for (const auto& v : gr) out.violations.push_back({"thm.4.5", "g: " + v.witness});
  if (!is_chu_transform(h, out.g, I_object(sx), psi))
    out.violations.push_back({"thm.4.5", "(h,g) is not a Chu transform κ_i → ψ"});

  // uniqueness by enumeration over all maps Z → O(X,i)
  const long long m = static_cast<long long>(sx.opens.size());
  long long total = 1;
  for (int z = 0; z < Z->size(); ++z) {
    total *= m;
    if (total > guards.max_search)
      throw Error(ErrKind::SizeGuardExceeded, "unit uniqueness enumeration exceeds " +
                                                  std::to_string(guards.max_search));
  }
  if (m == 0) return out;  // no candidate maps at all

  QDistributor kappa = I_object(sx);
  std::vector<int> cand(Z->size(), 0);
  while (true) {
    ++out.candidates;
    QFunctor g2{Z, sx.opens_cat, cand};
    if (!(g2 == out.g) && validate_functor(g2).empty() &&
        is_chu_transform(h, g2, kappa, psi)) {
      out.violations.push_back({"thm.4.5", "second comparison functor found"});
      return out;
    }
    int i = Z->size() - 1;
    for (; i >= 0; --i) {
      if (cand[i] + 1 < m) {
        ++cand[i];
        for (int j = i + 1; j < Z->size(); ++j) cand[j] = 0;
        break;
      }
    }
    if (i < 0) break;
  }
  return out;
}

InteriorSpace relational_interior(const InteriorSpace& space, const Guards& guards) {
  const CatPtr& X = space.base();
  std::vector<std::pair<Name, Name>> typed;
  for (int x = 0; x < X->size(); ++x)
    typed.emplace_back(X->elems[x], X->Q->object_name(X->type_of[x]));
  CatPtr X0 = make_discrete(X->Q, typed);
  PxPtr px0 = presheaf_category(X0, guards);

  // α as a distributor between the discrete carriers
  QDistributor alpha{X0, X0, X->hom};

  std::vector<int> table0;
  table0.reserve(px0->size());
  for (const Presheaf& mu : px0->sheaves) {
    Presheaf closed = kan_lower(alpha, mu);  // μ↙α, lands in P(X,α)
    closed.base = X;
    int i = space.px->index_of(closed);
    Presheaf image = space.px->sheaves[space.table[i]];
    image.base = X0;
    table0.push_back(px0->index_of(image));
  }

  InteriorSpace out;
  try {
    out = make_interior_space(px0, std::move(table0));
  } catch (const ValidationFailure& e) {
    throw Error(ErrKind::Internal, std::string("i₀ failed the interior laws: ") + e.what());
  }

  // O(X,α,i) = O(X,id,i₀) as value tables
  std::vector<std::vector<std::vector<int>>> lhs, rhs;
  for (int i : space.opens)
    lhs.push_back({{space.px->sheaves[i].type}, space.px->sheaves[i].values});
  for (int i : out.opens) rhs.push_back({{out.px->sheaves[i].type}, out.px->sheaves[i].values});
  if (lhs != rhs) throw Error(ErrKind::Internal, "open families differ across the discretization");
  return out;
}

std::pair<DistSquare, DistSquare> skeleton_iso(const QDistributor& phi, const Guards& guards) {
  (void)guards;
  const CatPtr& X = phi.source;
  const CatPtr& Y = phi.target;
  std::vector<std::pair<Name, Name>> tx, ty;
  for (int x = 0; x < X->size(); ++x) tx.emplace_back(X->elems[x], X->Q->object_name(X->type_of[x]));
  for (int y = 0; y < Y->size(); ++y) ty.emplace_back(Y->elems[y], Y->Q->object_name(Y->type_of[y]));
  CatPtr X0 = make_discrete(X->Q, tx);
  CatPtr Y0 = make_discrete(Y->Q, ty);

  QDistributor phi0{X0, Y0, phi.matrix};

  // graphs/cographs of the identity maps 1: X₀ → X, 1: Y₀ → Y
  QFunctor ix{X0, X, identity_functor(X0).map};
  QFunctor iy{Y0, Y, identity_functor(Y0).map};
  DistSquare up{phi0, phi, graph(ix), graph(iy)};
  DistSquare down{phi, phi0, cograph(ix), cograph(iy)};

  if (!(dist_compose(up.psi, up.zeta) == dist_compose(up.eta, up.phi)))
    throw Error(ErrKind::Internal, "graph square does not commute");
  if (!(dist_compose(down.psi, down.zeta) == dist_compose(down.eta, down.phi)))
    throw Error(ErrKind::Internal, "cograph square does not commute");

  // round trip on the discrete side: (α,β) and (id,id) share the diagonal φ
  QDistributor a = dist_compose(down.zeta, up.zeta);
  QDistributor diag_ab = dist_compose(phi0, a);
  if (!(diag_ab.matrix == phi.matrix))
    throw Error(ErrKind::Internal, "(α,β) is not diagonal-equivalent to (id,id)");
  // round trip on the structured side is the identity square on the nose
  QDistributor b = dist_compose(up.zeta, down.zeta);
  if (!(b == hom_distributor(X)))
    throw Error(ErrKind::Internal, "cograph∘graph is not the hom of (X,α)");
  return {up, down};
}

InteriorSpace space_from_family(const PxPtr& px, const std::vector<int>& family) {
  const CatPtr& X = px->base;
  const Quantaloid& Q = *X->Q;
  std::vector<int> table;
  table.reserve(px->size());
  for (const Presheaf& mu : px->sheaves) {
    Presheaf img{X, mu.type, std::vector<int>(X->size(), 0)};
    for (int x = 0; x < X->size(); ++x) {
      QArrow acc = Q.bottom(X->type_of[x], mu.type);
      for (int l : family) {
        const Presheaf& lam = px->sheaves[l];
        acc = Q.join(acc, Q.compose(presheaf_hom(lam, mu), lam.value_arrow(x)));
      }
      img.values[x] = acc.elem;
    }
    table.push_back(px->index_of(img));
  }
  return make_interior_space(px, std::move(table));
}

}  // namespace quantakit
