#include "quantakit/json_io.hpp"

#include <algorithm>
#include <set>

namespace quantakit {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrKind::ParseError, msg); }

void check_object_name(const Name& n) {
  if (n.empty() || n.find('|') != Name::npos || n.find('[') != Name::npos ||
      n.find(']') != Name::npos)
    parse_fail("bad object name '" + n + "' (must be nonempty, without '|', '[', ']')");
}

void check_elem_name(const Name& n) {
  if (n.empty() || n.find('[') != Name::npos || n.find(']') != Name::npos)
    parse_fail("bad element name '" + n + "' (must be nonempty, without '[', ']')");
}

void check_carrier_name(const Name& n) {
  if (n.empty() || n.find_first_of(",=[]|") != Name::npos)
    parse_fail("bad carrier name '" + n + "' (must be nonempty, without ',', '=', '[', ']', '|')");
}

std::vector<Name> split(const Name& s, char sep) {
  std::vector<Name> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == Name::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::string get_string(const json& j, const std::string& what) {
  if (!j.is_string()) parse_fail(what + " must be a string");
  return j.get<std::string>();
}

const json& get_key(const json& j, const std::string& key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) parse_fail(what + " is missing key \"" + key + "\"");
  return *it;
}

// Splits a composition key "v,u" by membership: exactly one comma position
// must yield element names of the two homs. Needed because element names of
// derived quantaloids may themselves contain commas.
std::pair<int, int> split_comp_key(const Name& key, const FiniteLattice& outer,
                                   const FiniteLattice& inner) {
  std::pair<int, int> found{-1, -1};
  int matches = 0;
  for (size_t i = 0; i < key.size(); ++i) {
    if (key[i] != ',') continue;
    int v = outer.find(key.substr(0, i));
    int u = inner.find(key.substr(i + 1));
    if (v >= 0 && u >= 0) {
      ++matches;
      found = {v, u};
    }
  }
  if (matches == 0) parse_fail("composition key '" + key + "' names no element pair");
  if (matches > 1) parse_fail("composition key '" + key + "' is ambiguous");
  return found;
}

}  // namespace

QPtr parse_quantaloid_json(const json& doc) {
  if (!doc.is_object()) parse_fail("quantaloid document must be an object");
  QuantaloidData data;
  for (const json& o : get_key(doc, "objects", "quantaloid")) {
    Name n = get_string(o, "object name");
    check_object_name(n);
    data.objects.push_back(n);
  }
  const int n = static_cast<int>(data.objects.size());
  if (n == 0) parse_fail("quantaloid has no objects");

  const json& homs = get_key(doc, "homs", "quantaloid");
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      Name key = data.objects[p] + "|" + data.objects[q];
      auto it = homs.find(key);
      if (it == homs.end()) parse_fail("missing hom \"" + key + "\"");
      std::vector<Name> elements;
      for (const json& e : get_key(*it, "elements", "hom " + key)) {
        Name en = get_string(e, "element name");
        check_elem_name(en);
        elements.push_back(en);
      }
      std::vector<std::pair<Name, Name>> pairs;
      if (it->contains("leq"))
        for (const json& pr : (*it)["leq"]) {
          if (!pr.is_array() || pr.size() != 2) parse_fail("leq entries must be pairs");
          pairs.emplace_back(get_string(pr[0], "leq"), get_string(pr[1], "leq"));
        }
      data.homs.push_back(FiniteLattice::from_order(elements, pairs));
    }

  const json& comp = get_key(doc, "comp", "quantaloid");
  data.comp.resize(static_cast<size_t>(n) * n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        Name key = data.objects[p] + "|" + data.objects[q] + "|" + data.objects[r];
        const FiniteLattice& outer = data.homs[q * n + r];
        const FiniteLattice& inner = data.homs[p * n + q];
        const FiniteLattice& result = data.homs[p * n + r];
        auto& tab = data.comp[(p * n + q) * n + r];
        tab.assign(outer.size(), std::vector<int>(inner.size(), -1));
        auto it = comp.find(key);
        if (it == comp.end()) parse_fail("missing composition table \"" + key + "\"");
        for (const auto& [k, v] : it->items()) {
          auto [ov, iu] = split_comp_key(k, outer, inner);
          tab[ov][iu] = result.index_of(get_string(v, "composition entry"));
        }
        for (int a = 0; a < outer.size(); ++a)
          for (int b = 0; b < inner.size(); ++b)
            if (tab[a][b] < 0)
              parse_fail("composition table \"" + key + "\" is missing entry \"" +
                         outer.name(a) + "," + inner.name(b) + "\"");
      }

  const json& id = get_key(doc, "id", "quantaloid");
  for (int p = 0; p < n; ++p) {
    auto it = id.find(data.objects[p]);
    if (it == id.end()) parse_fail("missing identity for object \"" + data.objects[p] + "\"");
    data.id_elem.push_back(data.homs[p * n + p].index_of(get_string(*it, "identity")));
  }
  return make_quantaloid(std::move(data));
}

json export_quantaloid(const Quantaloid& Q) {
  json doc;
  doc["objects"] = Q.objects();
  json homs = json::object();
  json comp = json::object();
  json id = json::object();
  const int n = Q.object_count();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const FiniteLattice& H = Q.hom(p, q);
      json hom;
      hom["elements"] = H.elements();
      json leq = json::array();
      for (int a = 0; a < H.size(); ++a)
        for (int b = 0; b < H.size(); ++b)
          if (a != b && H.leq(a, b)) leq.push_back({H.name(a), H.name(b)});
      hom["leq"] = leq;
      homs[Q.object_name(p) + "|" + Q.object_name(q)] = hom;
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        json tab = json::object();
        for (const QArrow& v : Q.hom_arrows(q, r))
          for (const QArrow& u : Q.hom_arrows(p, q))
            tab[Q.elem_name(v) + "," + Q.elem_name(u)] = Q.elem_name(Q.compose(v, u));
        comp[Q.object_name(p) + "|" + Q.object_name(q) + "|" + Q.object_name(r)] = tab;
      }
  for (int p = 0; p < n; ++p) id[Q.object_name(p)] = Q.elem_name(Q.identity(p));
  doc["homs"] = homs;
  doc["comp"] = comp;
  doc["id"] = id;
  return doc;
}

Presheaf parse_presheaf_literal(const CatPtr& X, const std::string& text) {
  size_t open = text.find(":[");
  if (open == Name::npos || text.back() != ']')
    parse_fail("presheaf literal must look like \"q:[a=1,b=0]\": " + text);
  Name type_name = text.substr(0, open);
  int type = X->Q->object_index(type_name);
  Presheaf mu{X, type, {}};
  for (int x = 0; x < X->size(); ++x)
    mu.values.push_back(X->Q->hom(X->type_of[x], type).bottom());

  std::string inner = text.substr(open + 2, text.size() - open - 3);
  if (inner.empty()) return mu;
  // raw commas may occur inside element names; an entry starts at "name=".
  std::vector<std::string> entries;
  for (const std::string& piece : split(inner, ',')) {
    if (!entries.empty() && piece.find('=') == Name::npos)
      entries.back() += "," + piece;
    else
      entries.push_back(piece);
  }
  for (const std::string& e : entries) {
    size_t eq = e.find('=');
    if (eq == Name::npos) parse_fail("bad presheaf entry '" + e + "'");
    int x = X->index_of(e.substr(0, eq));
    mu.values[x] = X->Q->hom(X->type_of[x], type).index_of(e.substr(eq + 1));
  }
  return mu;
}

namespace {

CatPtr parse_category_json(const QPtr& Q, const Name& label, const json& doc) {
  QCategory X;
  X.Q = Q;
  for (const json& e : get_key(doc, "elements", "category " + label)) {
    Name n = get_string(get_key(e, "name", "carrier element"), "carrier name");
    check_carrier_name(n);
    Name t = get_string(get_key(e, "type", "carrier element"), "carrier type");
    X.elems.push_back(n);
    X.type_of.push_back(Q->object_index(t));
  }
  if (std::set<Name>(X.elems.begin(), X.elems.end()).size() != X.elems.size())
    parse_fail("category " + label + " has duplicate carrier names");
  const int n = X.size();
  X.hom.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      X.hom[x][y] =
          x == y ? Q->id_elem(X.type_of[x]) : Q->hom(X.type_of[x], X.type_of[y]).bottom();
  if (doc.contains("hom"))
    for (const auto& [k, v] : doc["hom"].items()) {
      auto parts = split(k, ',');
      if (parts.size() != 2) parse_fail("category hom key '" + k + "' must be \"x,y\"");
      int x = X.index_of(parts[0]);
      int y = X.index_of(parts[1]);
      X.hom[x][y] = Q->hom(X.type_of[x], X.type_of[y]).index_of(get_string(v, "hom entry"));
    }
  Report r = validate_category(X);
  if (!r.empty())
    throw ValidationFailure(r, "category " + label + " violates " + r.front().law + " (" +
                                   r.front().witness + ")");
  return std::make_shared<const QCategory>(std::move(X));
}

}  // namespace

const CatPtr& Bundle::category(const Name& n) const {
  auto it = categories.find(n);
  if (it == categories.end()) throw Error(ErrKind::UnresolvedReference, "category \"" + n + "\"");
  return it->second;
}

const QDistributor& Bundle::distributor(const Name& n) const {
  auto it = distributors.find(n);
  if (it == distributors.end())
    throw Error(ErrKind::UnresolvedReference, "distributor \"" + n + "\"");
  return it->second;
}

const QFunctor& Bundle::functor(const Name& n) const {
  auto it = functors.find(n);
  if (it == functors.end()) throw Error(ErrKind::UnresolvedReference, "functor \"" + n + "\"");
  return it->second;
}

const InteriorSpace& Bundle::interior(const Name& n) const {
  auto it = interiors.find(n);
  if (it == interiors.end()) throw Error(ErrKind::UnresolvedReference, "interior \"" + n + "\"");
  return it->second;
}

Name Bundle::category_name(const CatPtr& c) const {
  for (const auto& [n, cat] : categories)
    if (cat == c || *cat == *c) return n;
  return "<anonymous>";
}

Bundle parse_bundle(const json& doc, const Guards& guards) {
  if (!doc.is_object()) parse_fail("bundle must be a JSON object");
  Bundle b;
  if (doc.contains("objects")) {
    b.quantaloid = parse_quantaloid_json(doc);
    return b;
  }
  b.quantaloid = parse_quantaloid_json(get_key(doc, "quantaloid", "bundle"));

  if (doc.contains("categories"))
    for (const auto& [name, cdoc] : doc["categories"].items())
      b.categories.emplace(name, parse_category_json(b.quantaloid, name, cdoc));

  if (doc.contains("distributors"))
    for (const auto& [name, ddoc] : doc["distributors"].items()) {
      Name sn = get_string(get_key(ddoc, "source", "distributor " + name), "source");
      Name tn = get_string(get_key(ddoc, "target", "distributor " + name), "target");
      QDistributor phi{b.category(sn), b.category(tn), {}};
      const QCategory& X = *phi.source;
      const QCategory& Y = *phi.target;
      phi.matrix.assign(X.size(), std::vector<int>(Y.size(), 0));
      for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < Y.size(); ++y)
          phi.matrix[x][y] = b.quantaloid->hom(X.type_of[x], Y.type_of[y]).bottom();
      if (ddoc.contains("matrix"))
        for (const auto& [k, v] : ddoc["matrix"].items()) {
          auto parts = split(k, ',');
          if (parts.size() != 2) parse_fail("matrix key '" + k + "' must be \"x,y\"");
          int x = X.index_of(parts[0]);
          int y = Y.index_of(parts[1]);
          phi.matrix[x][y] =
              b.quantaloid->hom(X.type_of[x], Y.type_of[y]).index_of(get_string(v, "matrix"));
        }
      Report r = validate_distributor(phi);
      if (!r.empty())
        throw ValidationFailure(r, "distributor " + name + " violates " + r.front().law + " (" +
                                       r.front().witness + ")");
      b.distributors.emplace(name, std::move(phi));
    }

  if (doc.contains("functors"))
    for (const auto& [name, fdoc] : doc["functors"].items()) {
      Name sn = get_string(get_key(fdoc, "source", "functor " + name), "source");
      Name tn = get_string(get_key(fdoc, "target", "functor " + name), "target");
      QFunctor f{b.category(sn), b.category(tn), {}};
      const json& map = get_key(fdoc, "map", "functor " + name);
      for (int x = 0; x < f.source->size(); ++x) {
        auto it = map.find(f.source->elems[x]);
        if (it == map.end())
          parse_fail("functor " + name + " is missing \"" + f.source->elems[x] + "\"");
        f.map.push_back(f.target->index_of(get_string(*it, "functor image")));
      }
      Report r = validate_functor(f);
      if (!r.empty())
        throw ValidationFailure(r, "functor " + name + " violates " + r.front().law + " (" +
                                       r.front().witness + ")");
      b.functors.emplace(name, std::move(f));
    }

  if (doc.contains("interiors"))
    for (const auto& [name, idoc] : doc["interiors"].items()) {
      const json& body = idoc.contains("interior") ? idoc["interior"] : idoc;
      Name cn = get_string(get_key(body, "category", "interior " + name), "category");
      const CatPtr& X = b.category(cn);
      PxPtr px = presheaf_category(X, guards);
      std::vector<int> table(px->size());
      for (int i = 0; i < px->size(); ++i) table[i] = i;
      if (body.contains("table"))
        for (const auto& [k, v] : body["table"].items()) {
          Presheaf from = parse_presheaf_literal(X, k);
          Presheaf to = parse_presheaf_literal(X, get_string(v, "interior image"));
          int i = px->find(from.type, from.values);
          int j = px->find(to.type, to.values);
          if (i < 0) parse_fail("'" + k + "' is not a presheaf of " + cn);
          if (j < 0)
            parse_fail("'" + get_string(v, "interior image") + "' is not a presheaf of " + cn);
          table[i] = j;
        }
      b.interiors.emplace(name, make_interior_space(px, std::move(table)));
    }

  return b;
}

Bundle parse_bundle_text(const std::string& text, const Guards& guards) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrKind::ParseError, e.what());
  }
  return parse_bundle(doc, guards);
}

json violations_json(const Report& report) {
  json arr = json::array();
  for (const LawViolation& v : report) arr.push_back({{"law", v.law}, {"witness", v.witness}});
  return arr;
}

json report_json(const LawReport& report, const LawOptions& opts) {
  json doc;
  doc["input"] = opts.input_label;
  doc["seed"] = opts.seed;
  doc["pass"] = report.pass;
  json suites = json::array();
  for (const SuiteResult& s : report.suites) {
    json js;
    js["id"] = s.id;
    js["instances"] = s.instances;
    js["pass"] = s.pass;
    js["counterexample"] = s.counterexample;
    js["notes"] = s.notes;
    suites.push_back(js);
  }
  doc["suites"] = suites;
  return doc;
}

ExtraFixtures bundle_fixtures(const Bundle& b) {
  ExtraFixtures out;
  for (const auto& [n, c] : b.categories) out.categories.push_back(c);
  for (const auto& [n, d] : b.distributors) out.distributors.push_back(d);
  for (const auto& [n, i] : b.interiors) out.interiors.push_back(i);
  return out;
}

}  // namespace quantakit
