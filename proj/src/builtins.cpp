#include <functional>
#include <mutex>

#include "quantakit/arrow_diag.hpp"
#include "quantakit/quantaloid.hpp"

namespace quantakit {

namespace {

// One-object quantaloid from a hom lattice, a composition rule on element
// indices and an identity element.
QPtr one_object(const Name& obj, FiniteLattice hom, const std::function<int(int, int)>& mul,
                const Name& unit) {
  QuantaloidData data;
  data.objects = {obj};
  const int m = hom.size();
  std::vector<std::vector<int>> tab(m, std::vector<int>(m, 0));
  for (int v = 0; v < m; ++v)
    for (int u = 0; u < m; ++u) tab[v][u] = mul(v, u);
  data.id_elem = {hom.index_of(unit)};
  data.homs = {std::move(hom)};
  data.comp = {std::move(tab)};
  return make_quantaloid(std::move(data));
}

QPtr make_two() {
  return one_object("o", FiniteLattice::chain({"0", "1"}),
                    [](int v, int u) { return std::min(v, u); }, "1");
}

QPtr make_l3() {
  // chain 0 < 1/2 < 1 with Łukasiewicz composition a⊗b = max(0, a+b-1)
  return one_object("o", FiniteLattice::chain({"0", "1/2", "1"}),
                    [](int v, int u) { return std::max(0, v + u - 2); }, "1");
}

QPtr make_g3() {
  return one_object("o", FiniteLattice::chain({"0", "1/2", "1"}),
                    [](int v, int u) { return std::min(v, u); }, "1");
}

QPtr make_bool4() {
  FiniteLattice diamond = FiniteLattice::from_order(
      {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  auto meet = [diamond](int v, int u) { return diamond.meet(v, u); };
  return one_object("o", diamond, meet, "1");
}

}  // namespace

QPtr builtin(const Name& name) {
  static std::mutex mutex;
  static std::map<Name, QPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;

  QPtr Q;
  if (name == "TWO")
    Q = make_two();
  else if (name == "L3")
    Q = make_l3();
  else if (name == "G3")
    Q = make_g3();
  else if (name == "BOOL4")
    Q = make_bool4();
  else if (name == "D_TWO")
    Q = build_diagonal_quantaloid(*builtin("TWO"));
  else
    throw Error(ErrKind::UnknownName, "no builtin quantaloid '" + name + "'");

  cache[name] = Q;
  return Q;
}

}  // namespace quantakit
