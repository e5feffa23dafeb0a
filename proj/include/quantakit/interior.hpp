#pragma once

#include "quantakit/presheaf.hpp"

namespace quantakit {

/// A Q-interior space: a Q-category X together with an extensional table
/// for a deflationary, idempotent, Q-functorial operator on PX.
/// The opens subcategory and index maps are materialized at construction.
struct InteriorSpace {
  PxPtr px;
  std::vector<int> table;       // sheaf index -> sheaf index
  std::vector<int> opens;       // ascending fixpoint indices
  CatPtr opens_cat;             // full subcategory of PX on the fixpoints
  std::vector<int> px_to_open;  // -1 when not open

  const CatPtr& base() const { return px->base; }
  int apply(int i) const { return table[i]; }
  Presheaf apply(const Presheaf& mu) const { return px->sheaves[table[px->index_of(mu)]]; }
  bool is_open_index(int i) const { return table[i] == i; }

  bool operator==(const InteriorSpace& o) const {
    return same_category(px->base, o.px->base) && table == o.table;
  }
};

/// The opens of a space as a Q-subcategory of PX.
struct OpenFamily {
  InteriorSpace space;
  std::vector<int> opens;  // sheaf indices with iμ = μ
  CatPtr cat;
};

/// A commutative square (ζ,η): φ → ψ in the quantaloid of distributors.
struct DistSquare {
  QDistributor phi;   // X ⇸ Y
  QDistributor psi;   // X' ⇸ Y'
  QDistributor zeta;  // X ⇸ X'
  QDistributor eta;   // Y ⇸ Y'
};

/// A continuous distributor together with its two spaces.
struct ContinuousDist {
  InteriorSpace dom;
  InteriorSpace cod;
  QDistributor zeta;
};

struct UnitCheck {
  Report violations;       // empty iff existence + uniqueness hold
  QFunctor g;              // the comparison Z → O(X,i)
  long long candidates;    // maps enumerated for the uniqueness scan
};

/// Deflationary + idempotent + Q-functorial; violations carry witnesses.
Report is_interior_operator(const PresheafCategory& px, const std::vector<int>& table);

/// Validating constructor; throws ValidationFailure on a nonempty report.
InteriorSpace make_interior_space(PxPtr px, std::vector<int> table);

OpenFamily open_presheaves(const InteriorSpace& space);

/// K on objects: φ ↦ (X, φ*φ_*).
InteriorSpace K_object(const QDistributor& phi, const Guards& guards = {});

/// I on objects: the evaluation distributor κ_i: X ⇸ O(X,i), κ_i(x,μ) = μ(x).
QDistributor I_object(const InteriorSpace& space);

/// The three continuity characterizations for a functor are evaluated and
/// must agree; the common value is returned.
bool is_continuous_functor(const QFunctor& f, const InteriorSpace& sx, const InteriorSpace& sy);

/// Same for a distributor: ζ*j ≤ iζ*, openness of preimages, jζ_* = jζ_*i.
bool is_continuous_distributor(const QDistributor& zeta, const InteriorSpace& sx,
                               const InteriorSpace& sy);

/// hK on morphisms: a square (ζ,η): φ → ψ yields ζ: K(φ) ⇸ K(ψ), continuous.
ContinuousDist hK_morphism(const QDistributor& phi, const QDistributor& psi,
                           const QDistributor& zeta, const QDistributor& eta,
                           const Guards& guards = {});

/// The fullness witness η := (ψ∘ζ)↙φ; (ζ,η) is then a square φ → ψ.
QDistributor fullness_witness(const QDistributor& phi, const QDistributor& psi,
                              const QDistributor& zeta, const Guards& guards = {});

/// hI on morphisms: ζ ↦ (ζ, (ζ*)^♮ restricted to the opens): κ_i → κ_j.
DistSquare hI_morphism(const QDistributor& zeta, const InteriorSpace& sx,
                       const InteriorSpace& sy);

/// ζ ~ ζ' iff ζ*j = ζ'*j; decided on the opens (= image of j), with the
/// all-presheaf formulation kept as a test oracle.
bool dist_equiv(const QDistributor& zeta, const QDistributor& zeta_prime,
                const InteriorSpace& sx, const InteriorSpace& sy);

/// Canonical ~-class key of a continuous ζ: the tuple of ζ*λ value tables
/// over the opens of the target space.
std::vector<std::vector<int>> equiv_class_key(const QDistributor& zeta, const InteriorSpace& sy);

/// Coreflection unit: for continuous h: (X,i) → K(ψ), the unique g with
/// (h,g): κ_i → ψ a Chu transform is g = h←∘ψ̃; uniqueness is certified by
/// enumeration over all maps Z → O(X,i).
UnitCheck coreflection_unit_check(const InteriorSpace& sx, const QDistributor& psi,
                                  const QFunctor& h, const Guards& guards = {});

/// The induced interior on the discrete base: i₀μ := i(μ↙α).
InteriorSpace relational_interior(const InteriorSpace& space, const Guards& guards = {});

/// The two graph/cograph squares between φ and its underlying relation,
/// with the round trip certified to be the identity diagonal class.
std::pair<DistSquare, DistSquare> skeleton_iso(const QDistributor& phi,
                                               const Guards& guards = {});

/// Interior space built from a candidate open family via
/// iμ = ⋁_{λ∈O} (μ↙λ)∘λ; lawful for every family.
InteriorSpace space_from_family(const PxPtr& px, const std::vector<int>& family);

}  // namespace quantakit
