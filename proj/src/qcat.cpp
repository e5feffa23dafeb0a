#include "quantakit/qcat.hpp"

#include <set>
#include <sstream>

namespace quantakit {

int QCategory::index_of(const Name& n) const {
  int i = find(n);
  if (i < 0) throw Error(ErrKind::UnknownName, "category element '" + n + "'");
  return i;
}

int QCategory::find(const Name& n) const {
  for (int i = 0; i < size(); ++i)
    if (elems[i] == n) return i;
  return -1;
}

std::string QCategory::repr() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) os << elems[i] << ':' << type_of[i] << ';';
  os << '|';
  for (const auto& row : hom)
    for (int e : row) os << e << ',';
  return os.str();
}

QCategory discrete_category(QPtr Q, const std::vector<std::pair<Name, Name>>& typed_names) {
  QCategory X;
  X.Q = std::move(Q);
  std::set<Name> seen;
  for (const auto& [n, t] : typed_names) {
    if (!seen.insert(n).second)
      throw Error(ErrKind::ParseError, "duplicate carrier element '" + n + "'");
    X.elems.push_back(n);
    X.type_of.push_back(X.Q->object_index(t));
  }
  const int n = X.size();
  X.hom.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      X.hom[x][y] = x == y ? X.Q->id_elem(X.type_of[x])
                           : X.Q->hom(X.type_of[x], X.type_of[y]).bottom();
  return X;
}

CatPtr make_discrete(QPtr Q, const std::vector<std::pair<Name, Name>>& typed_names) {
  return std::make_shared<const QCategory>(discrete_category(std::move(Q), typed_names));
}

Report validate_category(const QCategory& X) {
  Report report;
  const Quantaloid& Q = *X.Q;
  for (int x = 0; x < X.size(); ++x)
    if (!Q.leq(Q.identity(X.type_of[x]), X.hom_arrow(x, x)))
      report.push_back({"sec3.category", "1 ≤ hom(x,x) fails at " + X.elems[x]});
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      for (int z = 0; z < X.size(); ++z)
        if (!Q.leq(Q.compose(X.hom_arrow(y, z), X.hom_arrow(x, y)), X.hom_arrow(x, z)))
          report.push_back({"sec3.category", "hom(y,z)∘hom(x,y) ≤ hom(x,z) fails at (" +
                                                 X.elems[x] + "," + X.elems[y] + "," +
                                                 X.elems[z] + ")"});
  return report;
}

Report validate_functor(const QFunctor& f) {
  Report report;
  const QCategory& X = *f.source;
  const QCategory& Y = *f.target;
  if (static_cast<int>(f.map.size()) != X.size()) {
    report.push_back({"sec3.functor", "map is not total"});
    return report;
  }
  for (int x = 0; x < X.size(); ++x) {
    if (f.map[x] < 0 || f.map[x] >= Y.size()) {
      report.push_back({"sec3.functor", "map out of range at " + X.elems[x]});
      return report;
    }
    if (X.type_of[x] != Y.type_of[f.map[x]])
      report.push_back({"sec3.functor", "|x| != |fx| at " + X.elems[x]});
  }
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (!X.Q->leq(X.hom_arrow(x, y), Y.hom_arrow(f.map[x], f.map[y])))
        report.push_back({"sec3.functor", "hom(x,y) ≤ hom(fx,fy) fails at (" + X.elems[x] + "," +
                                              X.elems[y] + ")"});
  return report;
}

Report validate_distributor(const QDistributor& phi) {
  Report report;
  const QCategory& X = *phi.source;
  const QCategory& Y = *phi.target;
  const Quantaloid& Q = *X.Q;
  for (int x = 0; x < X.size(); ++x)
    for (int xp = 0; xp < X.size(); ++xp)
      for (int y = 0; y < Y.size(); ++y)
        for (int yp = 0; yp < Y.size(); ++yp) {
          QArrow lhs = Q.compose(Y.hom_arrow(y, yp), Q.compose(phi.at(x, y), X.hom_arrow(xp, x)));
          if (!Q.leq(lhs, phi.at(xp, yp)))
            report.push_back({"sec3.distributor",
                              "bimodule law fails at (" + X.elems[xp] + "," + Y.elems[yp] +
                                  ") via (" + X.elems[x] + "," + Y.elems[y] + ")"});
        }
  return report;
}

std::vector<std::vector<bool>> underlying_order(const QCategory& X) {
  std::vector<std::vector<bool>> le(X.size(), std::vector<bool>(X.size(), false));
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      le[x][y] = X.type_of[x] == X.type_of[y] &&
                 X.Q->leq(X.Q->identity(X.type_of[x]), X.hom_arrow(x, y));
  return le;
}

bool is_separated(const QCategory& X) {
  auto le = underlying_order(X);
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (x != y && le[x][y] && le[y][x]) return false;
  return true;
}

bool is_fully_faithful(const QFunctor& f) {
  for (int x = 0; x < f.source->size(); ++x)
    for (int y = 0; y < f.source->size(); ++y)
      if (f.source->hom_arrow(x, y) != f.target->hom_arrow(f.map[x], f.map[y])) return false;
  return true;
}

QFunctor identity_functor(const CatPtr& X) {
  QFunctor f{X, X, {}};
  for (int i = 0; i < X->size(); ++i) f.map.push_back(i);
  return f;
}

QFunctor compose_functors(const QFunctor& g, const QFunctor& f) {
  if (!same_category(f.target, g.source))
    throw Error(ErrKind::BoundaryMismatch, "functor composition");
  QFunctor h{f.source, g.target, {}};
  for (int x : f.map) h.map.push_back(g.map[x]);
  return h;
}

QDistributor hom_distributor(const CatPtr& X) {
  QDistributor phi{X, X, X->hom};
  return phi;
}

QDistributor bottom_distributor(const CatPtr& X, const CatPtr& Y) {
  QDistributor phi{X, Y, {}};
  phi.matrix.assign(X->size(), std::vector<int>(Y->size(), 0));
  for (int x = 0; x < X->size(); ++x)
    for (int y = 0; y < Y->size(); ++y)
      phi.matrix[x][y] = X->Q->hom(X->type_of[x], Y->type_of[y]).bottom();
  return phi;
}

QDistributor dist_compose(const QDistributor& psi, const QDistributor& phi) {
  if (!same_category(phi.target, psi.source))
    throw Error(ErrKind::BoundaryMismatch, "dist_compose: inner categories differ");
  const QCategory& X = *phi.source;
  const QCategory& Z = *psi.target;
  const Quantaloid& Q = *X.Q;
  QDistributor out{phi.source, psi.target, {}};
  out.matrix.assign(X.size(), std::vector<int>(Z.size(), 0));
  for (int x = 0; x < X.size(); ++x)
    for (int z = 0; z < Z.size(); ++z) {
      QArrow acc = Q.bottom(X.type_of[x], Z.type_of[z]);
      for (int y = 0; y < phi.target->size(); ++y)
        acc = Q.join(acc, Q.compose(psi.at(y, z), phi.at(x, y)));
      out.matrix[x][z] = acc.elem;
    }
  return out;
}

QDistributor dist_lda(const QDistributor& xi, const QDistributor& phi) {
  if (!same_category(xi.source, phi.source))
    throw Error(ErrKind::BoundaryMismatch, "dist_lda: sources differ");
  const QCategory& Y = *phi.target;
  const QCategory& Z = *xi.target;
  const Quantaloid& Q = *Y.Q;
  QDistributor out{phi.target, xi.target, {}};
  out.matrix.assign(Y.size(), std::vector<int>(Z.size(), 0));
  for (int y = 0; y < Y.size(); ++y)
    for (int z = 0; z < Z.size(); ++z) {
      QArrow acc = Q.top(Y.type_of[y], Z.type_of[z]);
      for (int x = 0; x < xi.source->size(); ++x)
        acc = Q.meet(acc, Q.lda(xi.at(x, z), phi.at(x, y)));
      out.matrix[y][z] = acc.elem;
    }
  return out;
}

QDistributor dist_rda(const QDistributor& psi, const QDistributor& xi) {
  if (!same_category(psi.target, xi.target))
    throw Error(ErrKind::BoundaryMismatch, "dist_rda: targets differ");
  const QCategory& X = *xi.source;
  const QCategory& Y = *psi.source;
  const Quantaloid& Q = *X.Q;
  QDistributor out{xi.source, psi.source, {}};
  out.matrix.assign(X.size(), std::vector<int>(Y.size(), 0));
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < Y.size(); ++y) {
      QArrow acc = Q.top(X.type_of[x], Y.type_of[y]);
      for (int z = 0; z < psi.target->size(); ++z)
        acc = Q.meet(acc, Q.rda(psi.at(y, z), xi.at(x, z)));
      out.matrix[x][y] = acc.elem;
    }
  return out;
}

bool dist_leq(const QDistributor& a, const QDistributor& b) {
  if (!same_category(a.source, b.source) || !same_category(a.target, b.target))
    throw Error(ErrKind::BoundaryMismatch, "dist_leq");
  for (int x = 0; x < a.source->size(); ++x)
    for (int y = 0; y < a.target->size(); ++y)
      if (!a.source->Q->leq(a.at(x, y), b.at(x, y))) return false;
  return true;
}

QDistributor dist_join(const QDistributor& a, const QDistributor& b) {
  if (!same_category(a.source, b.source) || !same_category(a.target, b.target))
    throw Error(ErrKind::BoundaryMismatch, "dist_join");
  QDistributor out = a;
  for (int x = 0; x < a.source->size(); ++x)
    for (int y = 0; y < a.target->size(); ++y)
      out.matrix[x][y] = a.source->Q->join(a.at(x, y), b.at(x, y)).elem;
  return out;
}

QDistributor graph(const QFunctor& f) {
  QDistributor phi{f.source, f.target, {}};
  phi.matrix.assign(f.source->size(), std::vector<int>(f.target->size(), 0));
  for (int x = 0; x < f.source->size(); ++x)
    for (int y = 0; y < f.target->size(); ++y)
      phi.matrix[x][y] = f.target->hom[f.map[x]][y];
  return phi;
}

QDistributor cograph(const QFunctor& f) {
  QDistributor phi{f.target, f.source, {}};
  phi.matrix.assign(f.target->size(), std::vector<int>(f.source->size(), 0));
  for (int y = 0; y < f.target->size(); ++y)
    for (int x = 0; x < f.source->size(); ++x)
      phi.matrix[y][x] = f.target->hom[y][f.map[x]];
  return phi;
}

bool check_adjoint_functors(const QFunctor& f, const QFunctor& g) {
  if (!same_category(f.target, g.source) || !same_category(g.target, f.source))
    throw Error(ErrKind::BoundaryMismatch, "adjunction boundaries");
  const QCategory& X = *f.source;
  const QCategory& Y = *f.target;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < Y.size(); ++y)
      if (Y.hom_arrow(f.map[x], y) != X.hom_arrow(x, g.map[y])) return false;
  return true;
}

bool is_chu_transform(const QFunctor& f, const QFunctor& g, const QDistributor& phi,
                      const QDistributor& psi) {
  if (!same_category(f.source, phi.source) || !same_category(f.target, psi.source) ||
      !same_category(g.source, psi.target) || !same_category(g.target, phi.target))
    throw Error(ErrKind::BoundaryMismatch, "chu transform boundaries");
  for (int x = 0; x < phi.source->size(); ++x)
    for (int yp = 0; yp < psi.target->size(); ++yp)
      if (psi.at(f.map[x], yp) != phi.at(x, g.map[yp])) return false;
  return true;
}

}  // namespace quantakit
