#pragma once

#include <memory>

#include "quantakit/quantaloid.hpp"

namespace quantakit {

/// A Q-category: a typed carrier with hom-arrows α(x,y) ∈ Q(|x|,|y|)
/// satisfying 1 ≤ α(x,x) and α(y,z)∘α(x,y) ≤ α(x,z).
struct QCategory {
  QPtr Q;
  std::vector<Name> elems;
  std::vector<int> type_of;              // object index per element
  std::vector<std::vector<int>> hom;     // hom[x][y], elem index in Q(|x|,|y|)

  int size() const { return static_cast<int>(elems.size()); }
  int index_of(const Name& n) const;     // throws UnknownName
  int find(const Name& n) const;
  QArrow hom_arrow(int x, int y) const { return {type_of[x], type_of[y], hom[x][y]}; }

  bool operator==(const QCategory& o) const {
    return (Q == o.Q || Q->data().objects == o.Q->data().objects) && elems == o.elems &&
           type_of == o.type_of && hom == o.hom;
  }

  /// Canonical encoding, used as a memoization key.
  std::string repr() const;
};

using CatPtr = std::shared_ptr<const QCategory>;

inline bool same_category(const CatPtr& a, const CatPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct QFunctor {
  CatPtr source;
  CatPtr target;
  std::vector<int> map;  // carrier index -> carrier index

  int apply(int x) const { return map[x]; }
  bool operator==(const QFunctor& o) const {
    return same_category(source, o.source) && same_category(target, o.target) && map == o.map;
  }
};

/// A Q-distributor φ: X ⇸ Y, a typed matrix with
/// β(y,y')∘φ(x,y)∘α(x',x) ≤ φ(x',y').
struct QDistributor {
  CatPtr source;
  CatPtr target;
  std::vector<std::vector<int>> matrix;  // matrix[x][y], elem index in Q(|x|,|y|)

  QArrow at(int x, int y) const {
    return {source->type_of[x], target->type_of[y], matrix[x][y]};
  }
  bool operator==(const QDistributor& o) const {
    return same_category(source, o.source) && same_category(target, o.target) &&
           matrix == o.matrix;
  }
};

QCategory discrete_category(QPtr Q, const std::vector<std::pair<Name, Name>>& typed_names);
CatPtr make_discrete(QPtr Q, const std::vector<std::pair<Name, Name>>& typed_names);

Report validate_category(const QCategory& X);
Report validate_functor(const QFunctor& f);
Report validate_distributor(const QDistributor& phi);

/// Underlying preorder: x ≤ y iff |x| = |y| and 1 ≤ hom(x,y).
std::vector<std::vector<bool>> underlying_order(const QCategory& X);
bool is_separated(const QCategory& X);

bool is_fully_faithful(const QFunctor& f);

QFunctor identity_functor(const CatPtr& X);
QFunctor compose_functors(const QFunctor& g, const QFunctor& f);

/// The identity distributor of X, given by its hom.
QDistributor hom_distributor(const CatPtr& X);
QDistributor bottom_distributor(const CatPtr& X, const CatPtr& Y);

/// (ψ∘φ)(x,z) = ⋁_y ψ(y,z)∘φ(x,y)
QDistributor dist_compose(const QDistributor& psi, const QDistributor& phi);
/// (ξ↙φ)(y,z) = ⋀_x ξ(x,z)↙φ(x,y)
QDistributor dist_lda(const QDistributor& xi, const QDistributor& phi);
/// (ψ↘ξ)(x,y) = ⋀_z ψ(y,z)↘ξ(x,z)
QDistributor dist_rda(const QDistributor& psi, const QDistributor& xi);

bool dist_leq(const QDistributor& a, const QDistributor& b);
QDistributor dist_join(const QDistributor& a, const QDistributor& b);

/// Graph f_♮(x,y) = hom_Y(fx,y) and cograph f^♮(y,x) = hom_Y(y,fx).
QDistributor graph(const QFunctor& f);
QDistributor cograph(const QFunctor& f);

/// f ⊣ g iff β(fx,y) = α(x,gy) for all x,y.
bool check_adjoint_functors(const QFunctor& f, const QFunctor& g);

/// (f,g): φ → ψ is a Chu transform iff ψ(fx,y') = φ(x,gy').
bool is_chu_transform(const QFunctor& f, const QFunctor& g, const QDistributor& phi,
                      const QDistributor& psi);

}  // namespace quantakit
