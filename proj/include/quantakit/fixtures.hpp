#pragma once

#include "quantakit/interior.hpp"

namespace quantakit {

/// Deterministic small test categories over Q: one-point categories per
/// object plus discrete and non-discrete two-element categories per pair of
/// objects, capped per pair.
std::vector<CatPtr> fixture_categories(const QPtr& Q, const Guards& guards = {});

/// All valid distributors X ⇸ Y when the raw matrix space is within the
/// sampling threshold; otherwise a seeded uniform sample (deduplicated).
std::vector<QDistributor> enumerate_distributors(const CatPtr& X, const CatPtr& Y,
                                                 const Guards& guards, Rng& rng);

/// All maps X → Y that are Q-functors.
std::vector<QFunctor> enumerate_functors(const CatPtr& X, const CatPtr& Y);

/// Interior spaces on X: every candidate open family O ⊆ PX induces a space
/// via iμ = ⋁_{λ∈O}(μ↙λ)∘λ; the family sweep is exhaustive when 2^|PX| is
/// within the sampling threshold, sampled otherwise. K-spaces of sampled
/// distributors into the given targets are added. Deduplicated by table.
std::vector<InteriorSpace> generate_spaces(const CatPtr& X, const std::vector<CatPtr>& targets,
                                           const Guards& guards, Rng& rng);

}  // namespace quantakit
