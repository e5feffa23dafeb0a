#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "quantakit/lattice.hpp"

namespace quantakit {

class PresheafCategory;

/// An arrow of a quantaloid: an element of the hom lattice Q(src,tgt).
/// All three fields are indices into the owning quantaloid.
struct QArrow {
  int src = 0;
  int tgt = 0;
  int elem = 0;

  bool operator==(const QArrow&) const = default;
  bool operator<(const QArrow& o) const {
    if (src != o.src) return src < o.src;
    if (tgt != o.tgt) return tgt < o.tgt;
    return elem < o.elem;
  }
};

/// Raw tables of a small quantaloid. Constructing a Quantaloid from this
/// only checks shapes; the algebraic laws are checked by validate_quantaloid,
/// and make_quantaloid refuses invalid data.
struct QuantaloidData {
  std::vector<Name> objects;
  std::vector<FiniteLattice> homs;                // homs[p * n + q]
  std::vector<std::vector<std::vector<int>>> comp;  // comp[(p*n+q)*n+r][v][u]
  std::vector<int> id_elem;                       // id_elem[p], index in Q(p,p)
};

/// A finite quantaloid: objects, hom lattices, composition tables, identities.
/// Immutable after construction; all operations are pure.
class Quantaloid {
 public:
  explicit Quantaloid(QuantaloidData data);
  ~Quantaloid();
  Quantaloid(const Quantaloid&) = delete;
  Quantaloid& operator=(const Quantaloid&) = delete;

  int object_count() const { return static_cast<int>(data_.objects.size()); }
  const Name& object_name(int p) const { return data_.objects[p]; }
  const std::vector<Name>& objects() const { return data_.objects; }
  int object_index(const Name& n) const;  // throws UnknownName
  int object_find(const Name& n) const;   // -1 when absent

  const FiniteLattice& hom(int p, int q) const {
    return data_.homs[p * object_count() + q];
  }
  const FiniteLattice& hom(const QArrow& a) const { return hom(a.src, a.tgt); }
  int id_elem(int p) const { return data_.id_elem[p]; }

  QArrow arrow(const Name& src, const Name& tgt, const Name& elem) const;
  QArrow identity(int p) const { return {p, p, data_.id_elem[p]}; }
  QArrow bottom(int p, int q) const { return {p, q, hom(p, q).bottom()}; }
  QArrow top(int p, int q) const { return {p, q, hom(p, q).top()}; }

  /// v∘u for u: p→q, v: q→r. Table lookup.
  QArrow compose(const QArrow& v, const QArrow& u) const;
  /// w↙u, the largest v with v∘u ≤ w. Requires u.src = w.src.
  QArrow lda(const QArrow& w, const QArrow& u) const;
  /// v↘w, the largest u with v∘u ≤ w. Requires v.tgt = w.tgt.
  QArrow rda(const QArrow& v, const QArrow& w) const;

  bool leq(const QArrow& a, const QArrow& b) const;    // same hom required
  QArrow join(const QArrow& a, const QArrow& b) const;
  QArrow meet(const QArrow& a, const QArrow& b) const;

  std::vector<QArrow> all_arrows() const;
  std::vector<QArrow> hom_arrows(int p, int q) const;

  const Name& elem_name(const QArrow& a) const { return hom(a).name(a.elem); }
  std::string arrow_repr(const QArrow& a) const;  // "p>q:elem"

  const QuantaloidData& data() const { return data_; }

  // memo for presheaf categories, keyed by a canonical category encoding;
  // filled idempotently under the mutex
  mutable std::mutex px_mutex;
  mutable std::map<std::string, std::shared_ptr<const PresheafCategory>> px_cache;

 private:
  int raw_compose(int p, int q, int r, int v, int u) const {
    return data_.comp[(p * object_count() + q) * object_count() + r][v][u];
  }

  QuantaloidData data_;
};

using QPtr = std::shared_ptr<const Quantaloid>;

/// Scans associativity, unit laws and join preservation (binary + empty
/// joins suffice in finite lattices). Violations are data, not exceptions.
Report validate_quantaloid(const Quantaloid& Q);

/// Eager factory: returns only validated quantaloids.
QPtr make_quantaloid(QuantaloidData data);

/// Builtin example quantaloids: TWO, L3, G3, BOOL4, D_TWO.
/// Instances are cached; repeated calls return the same object.
QPtr builtin(const Name& name);

}  // namespace quantakit
