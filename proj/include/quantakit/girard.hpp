#pragma once

#include <optional>

#include "quantakit/qcat.hpp"

namespace quantakit {

/// A family d_q ∈ Q(q,q), one per object, that is cyclic
/// (d_p↙u = u↘d_q for every u: p→q) and dualizing
/// ((d_p↙u)↘d_p = u = d_q↙(u↘d_q)).
struct DualizingFamily {
  std::vector<int> d;  // elem index in Q(q,q) per object q
};

/// Both laws, scanned over every arrow; empty report iff the family is
/// cyclic and dualizing.
Report check_family(const Quantaloid& Q, const DualizingFamily& F);

/// First family in lexicographic order passing both laws, or nullopt.
std::optional<DualizingFamily> find_cyclic_dualizing_family(const Quantaloid& Q,
                                                            const Guards& guards = {});

/// Every family passing both laws, in lexicographic order.
std::vector<DualizingFamily> all_cyclic_dualizing_families(const Quantaloid& Q,
                                                           const Guards& guards = {});

/// ¬u = d_p↙u = u↘d_q; asserts the two formulas agree and ¬¬u = u.
QArrow complement(const Quantaloid& Q, const DualizingFamily& F, const QArrow& u);

/// v∘u = ¬(¬u↙v) = ¬(u↘¬v) over all composable pairs.
Report check_girard_laws(const Quantaloid& Q, const DualizingFamily& F);

struct TransferRecord {
  bool square;         // v∘s = t∘u
  bool chu_connection; // ¬u↙t = s↘¬v, i.e. (t,s): ¬u → ¬v is a connection
};

/// Evaluates both sides of the square ↔ Chu-connection equivalence for one
/// candidate pair; the two flags must agree (asserted).
TransferRecord arr_chucon_transfer(const Quantaloid& Q, const DualizingFamily& F, const QArrow& u,
                                   const QArrow& v, const QArrow& s, const QArrow& t);

struct TransferCounts {
  long long squares = 0;
  long long connections = 0;
  bool bijection = false;  // (s,t) ↦ (t,s) matches, with diagonals mapped by ¬
};

/// Batch transfer for a fixed (u,v): counts squares u→v against Chu
/// connections ¬u→¬v and checks the diagonal/back-diagonal match under ¬.
TransferCounts transfer_counts(const Quantaloid& Q, const DualizingFamily& F, const QArrow& u,
                               const QArrow& v);

/// The induced family ¬1_X^♮ on distributors: (y,x) ↦ ¬hom(x,y).
QDistributor negated_hom(const DualizingFamily& F, const CatPtr& X);

/// Cyclicity and the dualizing equations of the family {¬1_X^♮} at each
/// sampled distributor; empty report iff all pass.
Report qdist_girard_check(const Quantaloid& Q, const DualizingFamily& F,
                          const std::vector<QDistributor>& sample);

}  // namespace quantakit
