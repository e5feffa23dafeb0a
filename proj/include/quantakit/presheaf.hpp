#pragma once

#include <map>

#include "quantakit/qcat.hpp"

namespace quantakit {

/// A presheaf of type q on X: a distributor X ⇸ {q}, stored as its value
/// table values[x] ∈ Q(|x|, q).
struct Presheaf {
  CatPtr base;
  int type = 0;              // object index q
  std::vector<int> values;   // elem index per carrier element

  QArrow value_arrow(int x) const { return {base->type_of[x], type, values[x]}; }
  bool operator==(const Presheaf& o) const {
    return same_category(base, o.base) && type == o.type && values == o.values;
  }
};

/// σ ≤ σ' in the underlying order of PX, i.e. pointwise.
bool presheaf_leq(const Presheaf& a, const Presheaf& b);

/// hom_PX(μ,μ') = μ'↙μ = ⋀_x μ'(x)↙μ(x), an arrow of Q(q,q').
QArrow presheaf_hom(const Presheaf& mu, const Presheaf& mu_prime);

/// The enumerated presheaf category PX: all presheaves of every type,
/// grouped by type, in lexicographic order of value tables. Separated.
class PresheafCategory {
 public:
  CatPtr base;
  std::vector<Presheaf> sheaves;
  std::vector<std::vector<int>> by_type;  // object index -> sheaf indices

  int size() const { return static_cast<int>(sheaves.size()); }
  int find(int type, const std::vector<int>& values) const;  // -1 when absent
  int index_of(const Presheaf& mu) const;                    // throws Internal

  QArrow hom_arrow(int i, int j) const { return presheaf_hom(sheaves[i], sheaves[j]); }

  /// PX as a QCategory (carrier = presheaf literals). Materialized when
  /// |PX| is small; larger categories only support pointwise hom access.
  CatPtr cat() const;

  /// A full subcategory of PX on the given sheaf indices.
  CatPtr subcategory(const std::vector<int>& indices) const;

  std::map<std::pair<int, std::vector<int>>, int> index_;
  CatPtr cat_;  // null when too large to materialize
};

using PxPtr = std::shared_ptr<const PresheafCategory>;

/// Canonical literal "q:[x=e,y=e']" used for carrier names and JSON keys.
std::string presheaf_literal(const Presheaf& mu);

/// All presheaves of type q on X in lexicographic order of values.
/// Guarded by the raw count estimate Π_x |Q(|x|,q)|.
std::vector<Presheaf> enumerate_presheaves(const CatPtr& X, int type_q,
                                           const Guards& guards = {});

/// Memoized per base category (the cache lives in the quantaloid).
PxPtr presheaf_category(const CatPtr& X, const Guards& guards = {});

/// Yoneda embedding x ↦ hom(−,x); fully faithful by construction (asserted).
QFunctor yoneda(const PxPtr& px);

/// φ*λ = λ∘φ, pointwise (φ*λ)(x) = ⋁_y λ(y)∘φ(x,y).
Presheaf kan_upper(const QDistributor& phi, const Presheaf& lambda);

/// φ_*μ = μ↙φ, pointwise (φ_*μ)(y) = ⋀_x μ(x)↙φ(x,y).
Presheaf kan_lower(const QDistributor& phi, const Presheaf& mu);

/// The transpose φ̃: Y → PX, y ↦ φ(−,y); asserted equal to φ*∘yoneda.
QFunctor transpose(const QDistributor& phi, const Guards& guards = {});

/// f→ = (f^♮)* : PX → PY.
Presheaf f_ra(const QFunctor& f, const Presheaf& mu);

/// f← = (f_♮)* = (f^♮)_* : PY → PX; both routes are computed and must agree.
Presheaf f_la(const QFunctor& f, const Presheaf& lambda);

}  // namespace quantakit
