// Brute-force oracles, intentionally independent of the computation paths
// they certify: joins are found by scanning upper bounds of the raw order,
// residuals and (back) diagonals by exhaustive enumeration of candidates.
#pragma once

#include <doctest.h>

#include <optional>
#include <set>
#include <vector>

#include "quantakit/interior.hpp"

namespace oracle {

using namespace quantakit;

/// Least upper bound of a set of elements, from leq alone.
inline std::optional<int> lub(const FiniteLattice& L, const std::vector<int>& xs) {
  for (int c = 0; c < L.size(); ++c) {
    bool upper = true;
    for (int x : xs) upper = upper && L.leq(x, c);
    if (!upper) continue;
    bool least = true;
    for (int d = 0; d < L.size(); ++d) {
      bool upper_d = true;
      for (int x : xs) upper_d = upper_d && L.leq(x, d);
      if (upper_d && !L.leq(c, d)) least = false;
    }
    if (least) return c;
  }
  return std::nullopt;
}

inline std::optional<int> glb(const FiniteLattice& L, const std::vector<int>& xs) {
  for (int c = 0; c < L.size(); ++c) {
    bool lower = true;
    for (int x : xs) lower = lower && L.leq(c, x);
    if (!lower) continue;
    bool greatest = true;
    for (int d = 0; d < L.size(); ++d) {
      bool lower_d = true;
      for (int x : xs) lower_d = lower_d && L.leq(d, x);
      if (lower_d && !L.leq(d, c)) greatest = false;
    }
    if (greatest) return c;
  }
  return std::nullopt;
}

/// w↙u as the lub of {v : v∘u ≤ w}, computed without the residual code.
inline QArrow lda(const Quantaloid& Q, const QArrow& w, const QArrow& u) {
  const FiniteLattice& H = Q.hom(u.tgt, w.tgt);
  std::vector<int> sat;
  for (int v = 0; v < H.size(); ++v)
    if (Q.leq(Q.compose(QArrow{u.tgt, w.tgt, v}, u), w)) sat.push_back(v);
  auto j = lub(H, sat);
  REQUIRE(j.has_value());
  return {u.tgt, w.tgt, *j};
}

inline QArrow rda(const Quantaloid& Q, const QArrow& v, const QArrow& w) {
  const FiniteLattice& H = Q.hom(w.src, v.src);
  std::vector<int> sat;
  for (int u = 0; u < H.size(); ++u)
    if (Q.leq(Q.compose(v, QArrow{w.src, v.src, u}), w)) sat.push_back(u);
  auto j = lub(H, sat);
  REQUIRE(j.has_value());
  return {w.src, v.src, *j};
}

inline std::vector<std::pair<QArrow, QArrow>> squares(const Quantaloid& Q, const QArrow& u,
                                                      const QArrow& v) {
  std::vector<std::pair<QArrow, QArrow>> out;
  for (const QArrow& s : Q.hom_arrows(u.src, v.src))
    for (const QArrow& t : Q.hom_arrows(u.tgt, v.tgt))
      if (Q.compose(v, s) == Q.compose(t, u)) out.emplace_back(s, t);
  return out;
}

inline std::set<int> diagonals(const Quantaloid& Q, const QArrow& u, const QArrow& v) {
  std::set<int> out;
  for (const auto& [s, t] : squares(Q, u, v)) out.insert(Q.compose(v, s).elem);
  return out;
}

inline std::vector<std::pair<QArrow, QArrow>> chu_connections(const Quantaloid& Q,
                                                              const QArrow& u, const QArrow& v) {
  std::vector<std::pair<QArrow, QArrow>> out;
  for (const QArrow& s : Q.hom_arrows(u.src, v.src))
    for (const QArrow& t : Q.hom_arrows(u.tgt, v.tgt))
      if (Q.lda(u, s) == Q.rda(t, v)) out.emplace_back(s, t);
  return out;
}

inline std::set<int> back_diagonals(const Quantaloid& Q, const QArrow& u, const QArrow& v) {
  std::set<int> out;
  for (const auto& [s, t] : chu_connections(Q, u, v)) out.insert(Q.lda(u, s).elem);
  return out;
}

/// The ~ congruence tested against every presheaf of the target, not only
/// the opens the production check uses.
inline bool dist_equiv_all(const QDistributor& zeta, const QDistributor& zeta_prime,
                           const InteriorSpace& sy) {
  const PresheafCategory& PY = *sy.px;
  for (int i = 0; i < PY.size(); ++i) {
    const Presheaf& jlam = PY.sheaves[sy.table[i]];
    if (!(kan_upper(zeta, jlam) == kan_upper(zeta_prime, jlam))) return false;
  }
  return true;
}

}  // namespace oracle
