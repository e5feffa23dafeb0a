#pragma once

#include <json.hpp>

#include "quantakit/interior.hpp"
#include "quantakit/laws.hpp"

namespace quantakit {

/// A parsed input document: one quantaloid plus named categories,
/// distributors, functors and interior spaces. Everything is validated
/// eagerly; parse_bundle only returns fully lawful bundles.
struct Bundle {
  QPtr quantaloid;
  std::map<Name, CatPtr> categories;
  std::map<Name, QDistributor> distributors;
  std::map<Name, QFunctor> functors;
  std::map<Name, InteriorSpace> interiors;

  const CatPtr& category(const Name& n) const;
  const QDistributor& distributor(const Name& n) const;
  const QFunctor& functor(const Name& n) const;
  const InteriorSpace& interior(const Name& n) const;

  /// Name of a category by identity, for round-tripping references.
  Name category_name(const CatPtr& c) const;
};

/// Accepts either a bare quantaloid document (top-level "objects") or a
/// bundle with keys "quantaloid", "categories", "distributors",
/// "functors", "interiors".
Bundle parse_bundle(const nlohmann::json& doc, const Guards& guards = {});
Bundle parse_bundle_text(const std::string& text, const Guards& guards = {});

QPtr parse_quantaloid_json(const nlohmann::json& doc);
nlohmann::json export_quantaloid(const Quantaloid& Q);

/// "q:[a=1,b=0]"; omitted carrier elements default to ⊥.
Presheaf parse_presheaf_literal(const CatPtr& X, const std::string& text);

nlohmann::json report_json(const LawReport& report, const LawOptions& opts);
nlohmann::json violations_json(const Report& report);

ExtraFixtures bundle_fixtures(const Bundle& b);

}  // namespace quantakit
