#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quantakit/arrow_diag.hpp"
#include "quantakit/json_io.hpp"

using namespace quantakit;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

Guards env_guards() {
  Guards g;
  if (const char* env = std::getenv("QUANTAKIT_MAX_PRESHEAVES")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) g.max_presheaves = v;
  }
  return g;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

/// Arrow literal: "src>tgt:elem", or a bare element name when it resolves
/// to exactly one hom.
QArrow parse_arrow(const Quantaloid& Q, const std::string& text) {
  size_t gt = text.find('>');
  if (gt != std::string::npos) {
    size_t colon = text.find(':', gt);
    if (colon == std::string::npos)
      throw Error(ErrKind::ParseError, "arrow must be \"src>tgt:elem\": " + text);
    return Q.arrow(text.substr(0, gt), text.substr(gt + 1, colon - gt - 1),
                   text.substr(colon + 1));
  }
  QArrow found{};
  int matches = 0;
  for (int p = 0; p < Q.object_count(); ++p)
    for (int q = 0; q < Q.object_count(); ++q) {
      int e = Q.hom(p, q).find(text);
      if (e >= 0) {
        found = {p, q, e};
        ++matches;
      }
    }
  if (matches == 0) throw Error(ErrKind::UnknownName, "no arrow named '" + text + "'");
  if (matches > 1)
    throw Error(ErrKind::ParseError, "'" + text + "' is ambiguous; use \"src>tgt:elem\"");
  return found;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact kernel for finite quantaloid-enriched category theory"};
  app.require_subcommand(1);
  Guards guards = env_guards();

  std::string input, left, right, op, warrow, uarrow, category, type_name, interior_name;
  std::string dist_name, dir, presheaf_lit, builtin_name, suite, from_arrow, to_arrow;
  uint64_t seed = 1;
  long long max_presheaves = 0;
  int sample = 0;
  bool all_families = false;

  auto* validate_cmd = app.add_subcommand("validate", "parse and validate a bundle");
  validate_cmd->add_option("-i", input)->required();

  auto* compose_cmd = app.add_subcommand("compose", "compose two arrows (left after right)");
  compose_cmd->add_option("-i", input)->required();
  compose_cmd->add_option("--left", left)->required();
  compose_cmd->add_option("--right", right)->required();

  auto* residual_cmd = app.add_subcommand("residual", "residuate w by u");
  residual_cmd->add_option("-i", input)->required();
  residual_cmd->add_option("--op", op)->required()->check(CLI::IsMember({"lda", "rda"}));
  residual_cmd->add_option("--w", warrow)->required();
  residual_cmd->add_option("--u", uarrow)->required();

  auto* presheaves_cmd = app.add_subcommand("presheaves", "enumerate presheaves of one type");
  presheaves_cmd->add_option("-i", input)->required();
  presheaves_cmd->add_option("--category", category)->required();
  presheaves_cmd->add_option("--type", type_name)->required();

  auto* opens_cmd = app.add_subcommand("opens", "list the open presheaves of an interior space");
  opens_cmd->add_option("-i", input)->required();
  opens_cmd->add_option("--interior", interior_name)->required();

  auto* kan_cmd = app.add_subcommand("kan", "apply a Kan adjoint to a presheaf");
  kan_cmd->add_option("-i", input)->required();
  kan_cmd->add_option("--dist", dist_name)->required();
  kan_cmd->add_option("--dir", dir)->required()->check(CLI::IsMember({"upper", "lower"}));
  kan_cmd->add_option("--presheaf", presheaf_lit)->required();

  auto* kfunctor_cmd = app.add_subcommand("kfunctor", "interior table of K(φ)");
  kfunctor_cmd->add_option("-i", input)->required();
  kfunctor_cmd->add_option("--dist", dist_name)->required();

  auto* laws_cmd = app.add_subcommand("laws", "run the named law suites");
  laws_cmd->add_option("-i", input);
  laws_cmd->add_option("--builtin", builtin_name);
  laws_cmd->add_option("--suite", suite);
  laws_cmd->add_option("--seed", seed);
  laws_cmd->add_option("--max-presheaves", max_presheaves);
  laws_cmd->add_option("--sample", sample);

  auto* girard_cmd = app.add_subcommand("girard", "search for a cyclic dualizing family");
  girard_cmd->add_option("-i", input)->required();
  girard_cmd->add_flag("--all-families", all_families);

  auto* diag_cmd = app.add_subcommand("diag", "list one hom of the diagonal quantaloid");
  diag_cmd->add_option("-i", input)->required();
  diag_cmd->add_option("--from", from_arrow)->required();
  diag_cmd->add_option("--to", to_arrow)->required();

  auto* export_cmd = app.add_subcommand("export", "emit a builtin quantaloid document");
  export_cmd->add_option("--builtin", builtin_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (validate_cmd->parsed()) {
    Bundle b = parse_bundle_text(read_input(input), guards);
    emit(json{{"ok", true},
              {"categories", b.categories.size()},
              {"distributors", b.distributors.size()},
              {"functors", b.functors.size()},
              {"interiors", b.interiors.size()}});
    return kExitPass;
  }

  if (compose_cmd->parsed()) {
    Bundle b = parse_bundle_text(read_input(input), guards);
    const Quantaloid& Q = *b.quantaloid;
    QArrow v = parse_arrow(Q, left), u = parse_arrow(Q, right);
    emit(json{{"result", Q.elem_name(Q.compose(v, u))}});
    return kExitPass;
  }

  if (residual_cmd->parsed()) {
    Bundle b = parse_bundle_text(read_input(input), guards);
    const Quantaloid& Q = *b.quantaloid;
    QArrow w = parse_arrow(Q, warrow), u = parse_arrow(Q, uarrow);
    QArrow r = op == "lda" ? Q.lda(w, u) : Q.rda(u, w);
    emit(json{{"result", Q.elem_name(r)}});
    return kExitPass;
  }

  if (presheaves_cmd->parsed()) {
    Bundle b = parse_bundle_text(read_input(input), guards);
    const CatPtr& X = b.category(category);
    int q = b.quantaloid->object_index(type_name);
    json lits = json::array();
    for (const Presheaf& mu : enumerate_presheaves(X, q, guards))
      lits.push_back(presheaf_literal(mu));
    emit(json{{"count", lits.size()}, {"presheaves", lits}});
    return kExitPass;
  }

  if (opens_cmd->parsed()) {
    Bundle b = parse_bundle_text(read_input(input), guards);
    const InteriorSpace& s = b.interior(interior_name);
    json lits = json::array();
    for (int i : s.opens) lits.push_back(presheaf_literal(s.px->sheaves[i]));
    emit(json{{"count", lits.size()}, {"opens", lits}});
    return kExitPass;
  }

  if (kan_cmd->parsed()) {
    Bundle b = parse_bundle_text(read_input(input), guards);
    const QDistributor& phi = b.distributor(dist_name);
    if (dir == "upper") {
      Presheaf lam = parse_presheaf_literal(phi.target, presheaf_lit);
      emit(json{{"result", presheaf_literal(kan_upper(phi, lam))}});
    } else {
      Presheaf mu = parse_presheaf_literal(phi.source, presheaf_lit);
      emit(json{{"result", presheaf_literal(kan_lower(phi, mu))}});
    }
    return kExitPass;
  }

  if (kfunctor_cmd->parsed()) {
    Bundle b = parse_bundle_text(read_input(input), guards);
    const QDistributor& phi = b.distributor(dist_name);
    InteriorSpace s = K_object(phi, guards);
    json table = json::object();
    for (int i = 0; i < s.px->size(); ++i)
      table[presheaf_literal(s.px->sheaves[i])] = presheaf_literal(s.px->sheaves[s.table[i]]);
    emit(json{{"interior",
               json{{"category", b.category_name(phi.source)}, {"table", table}}}});
    return kExitPass;
  }

  if (laws_cmd->parsed()) {
    if (max_presheaves > 0) guards.max_presheaves = max_presheaves;
    if (sample > 0) guards.sample_size = sample;
    LawOptions opts;
    opts.seed = seed;
    opts.guards = guards;
    opts.suite_filter = suite;
    QPtr Q;
    ExtraFixtures extra;
    bool have_extra = false;
    if (!builtin_name.empty()) {
      Q = builtin(builtin_name);
      opts.input_label = builtin_name;
    } else if (!input.empty()) {
      Bundle b = parse_bundle_text(read_input(input), guards);
      Q = b.quantaloid;
      extra = bundle_fixtures(b);
      have_extra = true;
      opts.input_label = "bundle";
    } else {
      throw Error(ErrKind::ParseError, "laws needs --builtin or -i");
    }
    LawReport report = run_laws(Q, have_extra ? &extra : nullptr, opts);
    emit(report_json(report, opts));
    return report.pass ? kExitPass : kExitLawFailure;
  }

  if (girard_cmd->parsed()) {
    Bundle b = parse_bundle_text(read_input(input), guards);
    const Quantaloid& Q = *b.quantaloid;
    json out;
    auto to_json = [&](const DualizingFamily& F) {
      json f = json::object();
      for (int q = 0; q < Q.object_count(); ++q)
        f[Q.object_name(q)] = Q.hom(q, q).name(F.d[q]);
      return f;
    };
    auto F = find_cyclic_dualizing_family(Q, guards);
    out["family"] = F ? to_json(*F) : json(nullptr);
    if (all_families) {
      json fams = json::array();
      for (const DualizingFamily& G : all_cyclic_dualizing_families(Q, guards))
        fams.push_back(to_json(G));
      out["all_families"] = fams;
    }
    if (F) {
      Report r = check_girard_laws(Q, *F);
      out["laws"] = violations_json(r);
      long long squares = 0, connections = 0;
      bool bij = true;
      for (const QArrow& u : Q.all_arrows())
        for (const QArrow& v : Q.all_arrows()) {
          TransferCounts tc = transfer_counts(Q, *F, u, v);
          squares += tc.squares;
          connections += tc.connections;
          bij = bij && tc.bijection;
        }
      out["transfer"] =
          json{{"squares", squares}, {"connections", connections}, {"bijection", bij}};
      emit(out);
      return r.empty() && bij ? kExitPass : kExitLawFailure;
    }
    emit(out);
    return kExitPass;
  }

  if (diag_cmd->parsed()) {
    Bundle b = parse_bundle_text(read_input(input), guards);
    const Quantaloid& Q = *b.quantaloid;
    QArrow u = parse_arrow(Q, from_arrow), v = parse_arrow(Q, to_arrow);
    json hom = json::array();
    for (const QArrow& d : Q.hom_arrows(u.src, v.tgt))
      if (is_diagonal(Q, u, v, d)) hom.push_back(Q.elem_name(d));
    emit(json{{"hom", hom}});
    return kExitPass;
  }

  if (export_cmd->parsed()) {
    emit(export_quantaloid(*builtin(builtin_name)));
    return kExitPass;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ValidationFailure& e) {
    // law failures are output, with the violated anchor and witness
    std::cout << json{{"pass", false}, {"violations", violations_json(e.report())}}.dump()
              << "\n";
    std::cerr << e.what() << "\n";
    return kExitLawFailure;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrKind::SizeGuardExceeded:
        return kExitGuard;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
