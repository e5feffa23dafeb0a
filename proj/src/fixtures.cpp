#include "quantakit/fixtures.hpp"

#include <set>

namespace quantakit {

std::vector<CatPtr> fixture_categories(const QPtr& Q, const Guards& guards) {
  (void)guards;
  std::vector<CatPtr> out;
  const int n = std::min(Q->object_count(), 4);

  for (int p = 0; p < n; ++p)
    out.push_back(make_discrete(Q, {{"x", Q->object_name(p)}}));

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      out.push_back(make_discrete(Q, {{"a", Q->object_name(p)}, {"b", Q->object_name(q)}}));
      // non-discrete two-element categories, first few in enumeration order
      int kept = 0;
      const FiniteLattice& Hpp = Q->hom(p, p);
      const FiniteLattice& Hqq = Q->hom(q, q);
      const FiniteLattice& Hpq = Q->hom(p, q);
      const FiniteLattice& Hqp = Q->hom(q, p);
      for (int aa = 0; aa < Hpp.size() && kept < 4; ++aa)
        for (int bb = 0; bb < Hqq.size() && kept < 4; ++bb)
          for (int ab = 0; ab < Hpq.size() && kept < 4; ++ab)
            for (int ba = 0; ba < Hqp.size() && kept < 4; ++ba) {
              QCategory X;
              X.Q = Q;
              X.elems = {"a", "b"};
              X.type_of = {p, q};
              X.hom = {{aa, ab}, {ba, bb}};
              QCategory D = discrete_category(Q, {{"a", Q->object_name(p)},
                                                  {"b", Q->object_name(q)}});
              if (X.hom == D.hom) continue;  // discrete already added
              if (validate_category(X).empty()) {
                out.push_back(std::make_shared<const QCategory>(std::move(X)));
                ++kept;
              }
            }
    }
  return out;
}

std::vector<QDistributor> enumerate_distributors(const CatPtr& X, const CatPtr& Y,
                                                 const Guards& guards, Rng& rng) {
  const Quantaloid& Q = *X->Q;
  long long space = 1;
  bool sampled = false;
  for (int x = 0; x < X->size() && !sampled; ++x)
    for (int y = 0; y < Y->size(); ++y) {
      space *= Q.hom(X->type_of[x], Y->type_of[y]).size();
      if (space > guards.sample_threshold) {
        sampled = true;
        break;
      }
    }

  std::vector<QDistributor> out;
  if (!sampled) {
    const int cells = X->size() * Y->size();
    QDistributor phi{X, Y, {}};
    phi.matrix.assign(X->size(), std::vector<int>(Y->size(), 0));
    auto radix = [&](int k) {
      return Q.hom(X->type_of[k / Y->size()], Y->type_of[k % Y->size()]).size();
    };
    auto cell = [&](int k) -> int& { return phi.matrix[k / Y->size()][k % Y->size()]; };
    while (true) {
      if (validate_distributor(phi).empty()) out.push_back(phi);
      int k = cells - 1;
      for (; k >= 0; --k) {
        if (cell(k) + 1 < radix(k)) {
          ++cell(k);
          for (int k2 = k + 1; k2 < cells; ++k2) cell(k2) = 0;
          break;
        }
      }
      if (k < 0) break;
    }
    return out;
  }

  std::set<std::vector<std::vector<int>>> seen;
  long long attempts = static_cast<long long>(guards.sample_size) * 64;
  while (static_cast<int>(out.size()) < guards.sample_size && attempts-- > 0) {
    QDistributor phi{X, Y, {}};
    phi.matrix.assign(X->size(), std::vector<int>(Y->size(), 0));
    for (int x = 0; x < X->size(); ++x)
      for (int y = 0; y < Y->size(); ++y)
        phi.matrix[x][y] =
            static_cast<int>(rng.below(Q.hom(X->type_of[x], Y->type_of[y]).size()));
    if (!validate_distributor(phi).empty()) continue;
    if (seen.insert(phi.matrix).second) out.push_back(std::move(phi));
  }
  return out;
}

std::vector<QFunctor> enumerate_functors(const CatPtr& X, const CatPtr& Y) {
  std::vector<QFunctor> out;
  if (X->size() == 0) {
    out.push_back(QFunctor{X, Y, {}});
    return out;
  }
  std::vector<int> map(X->size(), 0);
  while (true) {
    QFunctor f{X, Y, map};
    if (validate_functor(f).empty()) out.push_back(f);
    int i = X->size() - 1;
    for (; i >= 0; --i) {
      if (map[i] + 1 < Y->size()) {
        ++map[i];
        for (int j = i + 1; j < X->size(); ++j) map[j] = 0;
        break;
      }
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<InteriorSpace> generate_spaces(const CatPtr& X, const std::vector<CatPtr>& targets,
                                           const Guards& guards, Rng& rng) {
  PxPtr px = presheaf_category(X, guards);
  std::vector<InteriorSpace> out;
  std::set<std::vector<int>> seen;
  auto add = [&](InteriorSpace s) {
    if (seen.insert(s.table).second) out.push_back(std::move(s));
  };

  const int n = px->size();
  if (n <= 12 && (1LL << n) <= guards.sample_threshold) {
    for (long long mask = 0; mask < (1LL << n); ++mask) {
      std::vector<int> family;
      for (int i = 0; i < n; ++i)
        if (mask & (1LL << i)) family.push_back(i);
      add(space_from_family(px, family));
    }
  } else {
    add(space_from_family(px, {}));
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    add(space_from_family(px, all));
    for (int k = 0; k < guards.sample_size; ++k) {
      std::vector<int> family;
      for (int i = 0; i < n; ++i)
        if (rng.below(2)) family.push_back(i);
      add(space_from_family(px, family));
    }
  }

  for (const CatPtr& Y : targets)
    for (const QDistributor& phi : enumerate_distributors(X, Y, guards, rng))
      add(K_object(phi, guards));

  return out;
}

}  // namespace quantakit
