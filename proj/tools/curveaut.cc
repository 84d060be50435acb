#include "curveaut/braid.hpp"
#include "curveaut/catalog.hpp"
#include "curveaut/classify.hpp"
#include "curveaut/constructors.hpp"
#include "curveaut/errors.hpp"
#include "curveaut/fullness.hpp"
#include "curveaut/restriction.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

using namespace curveaut;

namespace {

struct RunConfig {
  std::string catalog_path;
  std::string output_path;
  std::string format = "tsv";
  Caps caps;
  bool timing = false;
};

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep))
    if (!part.empty())
      out.push_back(part);
  return out;
}

std::vector<int> parse_ints(const std::string &text) {
  std::vector<int> out;
  for (const auto &p : split(text, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(p, &used);
    } catch (const std::exception &) {
      throw UsageError("not an integer: " + p);
    }
    if (used != p.size())
      throw UsageError("not an integer: " + p);
    out.push_back(v);
  }
  return out;
}

/// Splits an optional "g0=N;" or "g0=N:" prefix from a list.
std::pair<std::optional<int>, std::string> split_g0(const std::string &text) {
  static const std::regex prefix(R"(^\s*g0\s*=\s*(\d+)\s*[;:]\s*(.*)$)");
  std::smatch m;
  if (std::regex_match(text, m, prefix))
    return {std::stoi(m[1]), m[2]};
  if (text.rfind("g0=", 0) == 0) {
    // "g0=N" alone: no branch points
    auto rest = text.substr(3);
    if (rest.find_first_not_of("0123456789") == std::string::npos && !rest.empty())
      return {std::stoi(rest), ""};
    throw UsageError("malformed g0 prefix in '" + text + "'");
  }
  return {std::nullopt, text};
}

/// Orbit genus for the periods: the prefix if given, else the one making the
/// genus `genus` when given, else the unique value with genus in [2, 10].
int resolve_g0(std::optional<int> g0, const std::vector<int> &periods, std::size_t order,
               std::optional<int> genus) {
  if (g0)
    return *g0;
  if (genus) {
    auto h = orbit_genus_of(*genus, order, periods);
    if (!h)
      throw UsageError("no orbit genus gives genus " + std::to_string(*genus));
    return *h;
  }
  std::vector<int> found;
  for (int h = 0; h <= 10; ++h) {
    Signature s{h, periods};
    if (!s.valid())
      continue;
    auto g = rh_genus(order, s);
    if (g && *g >= 2 && *g <= 10)
      found.push_back(h);
  }
  if (found.size() == 1)
    return found[0];
  if (found.empty())
    throw UsageError("no orbit genus is consistent with these periods");
  throw UsageError("several orbit genera are consistent; give a g0= prefix");
}

GroupPtr resolve_group(const std::string &name, const Catalog &catalog) {
  if (const auto *e = catalog.find(name))
    return e->group;
  static const std::regex tag(R"(^\s*(Cyclic|Dihedral|Symmetric|Alternating|PSL2|PGL2)\((\d+)\)\s*$)");
  std::smatch m;
  if (std::regex_match(name, m, tag)) {
    static const std::map<std::string, GroupKind> kinds = {
        {"Cyclic", GroupKind::Cyclic},         {"Dihedral", GroupKind::Dihedral},
        {"Symmetric", GroupKind::Symmetric},   {"Alternating", GroupKind::Alternating},
        {"PSL2", GroupKind::PSL2},             {"PGL2", GroupKind::PGL2}};
    return construct_named(kinds.at(m[1]), std::stoul(m[2]));
  }
  throw UsageError("unknown group '" + name + "'");
}

/// "order=N" or "order=N#k" (k-th class of that order, from 1), or
/// generators in cycle notation separated by ';'.
Subgroup resolve_subgroup(const FiniteGroup &G, const std::string &spec, const Caps &caps) {
  static const std::regex by_order(R"(^order=(\d+)(?:#(\d+))?$)");
  std::smatch m;
  if (std::regex_match(spec, m, by_order)) {
    const std::size_t order = std::stoul(m[1]);
    const std::size_t k = m[2].matched ? std::stoul(m[2]) : 1;
    std::size_t seen = 0;
    for (const auto &c : subgroup_classes(G, caps.lattice_cap))
      if (c.representative.order() == order && ++seen == k)
        return c.representative;
    throw UsageError("no subgroup class " + spec);
  }
  std::vector<Elem> gens;
  for (const auto &word : split(spec, ';')) {
    auto idx = G.index_of(Permutation::from_cycles(word, G.degree()));
    if (!idx)
      throw UsageError("'" + word + "' is not an element of the group");
    gens.push_back(*idx);
  }
  return make_subgroup(G, gens);
}

ClassId resolve_class(const FiniteGroup &G, const std::string &label) {
  for (ClassId c = 0; c < G.classes().size(); ++c)
    if (class_label(G, c) == label)
      return c;
  throw UsageError("no class labelled " + label);
}

Catalog load_catalog(const RunConfig &cfg) {
  return parse_catalog_file(cfg.catalog_path.empty() ? default_catalog_path() : cfg.catalog_path,
                            cfg.caps.element_cap);
}

struct Output {
  explicit Output(const RunConfig &cfg) {
    if (!cfg.output_path.empty()) {
      file.open(cfg.output_path);
      if (!file)
        throw UsageError("cannot open " + cfg.output_path);
    }
  }
  std::ostream &stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

int emit(const RunConfig &cfg, const Classification &c, const std::string &source) {
  Output out(cfg);
  bool unresolved = false;
  for (const auto &r : c.records)
    unresolved = unresolved || !r.unresolved.empty();
  if (cfg.format == "dot") {
    write_dot(out.stream(), c.records);
  } else {
    std::vector<std::string> footer = {
        "universe: " + std::to_string(c.universe.size()) + " groups, the subgroup closure of " + source,
        "pairs: " + std::to_string(c.pairs.size()) + ", types examined: " + std::to_string(c.types_examined),
        "records are complete relative to this universe"};
    for (const auto &r : c.records)
      if (!r.unresolved.empty())
        footer.push_back("row " + std::to_string(r.row) + " unresolved: " + r.unresolved);
    write_tsv(out.stream(), c.records, footer);
  }
  return unresolved ? 2 : 0;
}

ClassifyOptions classify_options(const RunConfig &cfg) {
  ClassifyOptions o;
  o.caps = cfg.caps;
  return o;
}

int cmd_classify(const RunConfig &cfg, int genus, bool large_only) {
  if (genus < 2 || genus > 10)
    throw UsageError("--genus must lie in [2, 10]");
  auto catalog = load_catalog(cfg);
  auto started = std::chrono::steady_clock::now();
  Classification c;
  std::string source;
  if (large_only) {
    c = large_group_table(catalog, genus, classify_options(cfg));
    source = "the catalog groups of order in (" + std::to_string(4 * (genus - 1)) + ", " +
             std::to_string(84 * (genus - 1)) + "]";
  } else if (genus == 3) {
    auto seeds = parse_catalog_file(genus3_catalog_path(), cfg.caps.element_cap);
    c = genus3_table(seeds, &catalog, classify_options(cfg));
    source = "the genus-3 seed catalog";
  } else {
    std::vector<UniverseGroup> seeds;
    for (const auto &e : catalog.entries())
      if (e.group->order() <= static_cast<std::size_t>(84 * (genus - 1)))
        seeds.push_back({e.group, catalog.label(*e.group)});
    c = classify_genus(seeds, genus, &catalog, classify_options(cfg));
    source = "the catalog groups of order at most " + std::to_string(84 * (genus - 1));
  }
  if (cfg.timing)
    std::cerr << "genus " << genus << ": "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count() << " s\n";
  return emit(cfg, c, source);
}

int cmd_genus3(const RunConfig &cfg) { return cmd_classify(cfg, 3, false); }

int cmd_braid(const RunConfig &cfg, const std::string &group, const std::string &signature,
              const std::string &mod, bool verbose) {
  auto catalog = load_catalog(cfg);
  auto G = resolve_group(group, catalog);
  auto [g0, rest] = split_g0(signature);
  if (g0 && *g0 != 0)
    throw UsageError("braid orbits need orbit genus 0");
  BraidOptions o;
  o.symmetry = mod == "inner" ? Symmetry::Inner : Symmetry::FullAut;
  o.tuple_budget = cfg.caps.tuple_budget;
  o.node_budget = cfg.caps.node_budget;
  o.aut_cap = cfg.caps.aut_cap;
  auto orbits = braid_orbits_for_signature(*G, Signature::make(0, parse_ints(rest)), o);
  Output out(cfg);
  out.stream() << orbits.size() << "\n";
  if (verbose)
    for (const auto &orb : orbits) {
      out.stream() << "orbit keys " << orb.size << ":";
      for (Elem x : orb.representative)
        out.stream() << " " << class_label(*G, G->class_of(x));
      out.stream() << "\n";
    }
  return 0;
}

int cmd_restrict(const RunConfig &cfg, const std::string &group, const std::string &subgroup,
                 const std::string &type_text, std::optional<int> genus) {
  auto catalog = load_catalog(cfg);
  auto G = resolve_group(group, catalog);
  auto [g0, rest] = split_g0(type_text);
  std::vector<ClassId> classes;
  std::vector<int> periods;
  for (const auto &label : split(rest, ',')) {
    classes.push_back(resolve_class(*G, label));
    periods.push_back(static_cast<int>(G->classes()[classes.back()].element_order));
  }
  const int h = resolve_g0(g0, periods, G->order(), genus);
  auto g = rh_genus(G->order(), Signature{h, periods});
  if (!g)
    throw UsageError("the genus equation has no solution for this type");
  auto type = make_type(G, *g, classes);
  if (type.g0 != h)
    throw UsageError("type does not have the requested orbit genus");
  auto H = resolve_subgroup(*G, subgroup, cfg.caps);
  auto r = restrict_type(type, H);
  Output out(cfg);
  out.stream() << "genus " << *g << "\n";
  out.stream() << "subgroup order " << H.order() << " " << group_label(*r.subgroup.group, &catalog) << "\n";
  out.stream() << "induced signature " << r.induced_signature.to_string() << "\n";
  out.stream() << "induced classes " << type_label(r.induced) << "\n";
  auto clause = classify_equal_dim_pair(type, H);
  if (clause)
    out.stream() << "clause " << to_string(clause->tag) << " n=" << clause->n << "\n";
  else
    out.stream() << "clause none (dimension increases)\n";
  return 0;
}

int cmd_full(const RunConfig &cfg, const std::string &group, const std::string &signature,
             std::optional<int> genus) {
  auto catalog = load_catalog(cfg);
  auto G = resolve_group(group, catalog);
  auto [g0, rest] = split_g0(signature);
  auto periods = parse_ints(rest);
  std::sort(periods.begin(), periods.end());
  const int h = resolve_g0(g0, periods, G->order(), genus);
  Signature sig{h, periods};
  if (!sig.valid())
    throw UsageError("invalid signature " + sig.to_string());
  auto g = rh_genus(G->order(), sig);
  if (!g || *g < 2)
    throw UsageError("the genus equation has no solution of genus at least 2");
  const std::size_t n = G->order();
  std::vector<UniverseGroup> seeds;
  for (const auto &e : catalog.entries())
    if (e.group->order() > n && e.group->order() % n == 0 &&
        e.group->order() <= static_cast<std::size_t>(84 * (*g - 1)))
      seeds.push_back({e.group, catalog.label(*e.group)});
  auto universe = close_group_universe(seeds, &catalog, cfg.caps, n);
  std::erase_if(universe, [&](const UniverseGroup &u) { return u.group->order() % n != 0; });
  auto actions = automorphism_class_actions(*G, automorphism_group(*G, cfg.caps.aut_cap,
                                                                   cfg.caps.automorphism_count_cap));
  SearchOptions search;
  search.node_budget = cfg.caps.node_budget;
  auto types = realizable_types(G, *g, sig, actions, search);
  Output out(cfg);
  out.stream() << "genus " << *g << ", signature " << sig.to_string() << ", " << types.size() << " types\n";
  for (const auto &t : types) {
    auto v = decide_type_fullness(t, universe, search);
    out.stream() << type_label(t) << "\t" << to_string(v.verdict) << "\t" << v.notes << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Automorphism groups of compact Riemann surfaces: loci, fullness and braid orbits"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--catalog", cfg.catalog_path, "Catalog file (default: bundled, or $CURVEAUT_CATALOG)");
  app.add_option("-o,--output", cfg.output_path, "Write the report here instead of standard output");
  app.add_option("--format", cfg.format, "Report format for tables")->check(CLI::IsMember({"tsv", "dot"}));
  app.add_option("--workers", cfg.caps.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--element-cap", cfg.caps.element_cap, "Largest group order accepted")->check(CLI::PositiveNumber);
  app.add_option("--lattice-cap", cfg.caps.lattice_cap, "Largest order for subgroup lattices")
      ->check(CLI::PositiveNumber);
  app.add_option("--aut-cap", cfg.caps.aut_cap, "Largest order for automorphism groups")->check(CLI::PositiveNumber);
  app.add_option("--tuple-budget", cfg.caps.tuple_budget, "Braid orbit tuple budget")->check(CLI::PositiveNumber);
  app.add_option("--node-budget", cfg.caps.node_budget, "Search node budget")->check(CLI::PositiveNumber);
  app.add_flag("--timing", cfg.timing, "Report elapsed time on standard error");

  int genus = 0;
  bool large_only = false;
  auto *classify = app.add_subcommand("classify", "Loci of full automorphism groups in one genus");
  classify->add_option("--genus", genus, "Genus, 2 to 10")->required();
  classify->add_flag("--large-only", large_only, "Only groups of order above 4(g-1)");

  auto *genus3 = app.add_subcommand("genus3", "The genus-3 classification");

  std::string group, signature, mod = "aut", subgroup, type_text;
  bool verbose = false;
  std::optional<int> opt_genus;
  auto *braid = app.add_subcommand("braid-orbits", "Braid orbits of generating tuples");
  braid->add_option("--group", group, "Catalog ID, name or family tag such as PSL2(7)")->required();
  braid->add_option("--signature", signature, "Periods, e.g. 2,3,7")->required();
  braid->add_option("--mod", mod, "Symmetry group")->check(CLI::IsMember({"inner", "aut"}));
  braid->add_flag("-v,--verbose", verbose, "List the orbits");

  auto *restrict = app.add_subcommand("restrict", "Restrict a type to a subgroup");
  restrict->add_option("--group", group, "Catalog ID, name or family tag")->required();
  restrict->add_option("--subgroup", subgroup, "order=N[#k] or generators separated by ';'")->required();
  restrict->add_option("--type", type_text, "Class labels, e.g. 2A,3A,7A, with optional g0=N; prefix")
      ->required();
  restrict->add_option("--genus", opt_genus, "Genus, to fix the orbit genus");

  auto *full = app.add_subcommand("full", "Decide fullness for every type of a signature");
  full->add_option("--group", group, "Catalog ID, name or family tag")->required();
  full->add_option("--signature", signature, "Periods with optional g0=N; prefix")->required();
  full->add_option("--genus", opt_genus, "Genus, to fix the orbit genus");

  int g0 = 0, r = 0;
  std::size_t order = 0;
  std::string periods_text;
  auto *delta_cmd = app.add_subcommand("delta", "Dimension 3 g0 - 3 + r");
  delta_cmd->add_option("--g0", g0)->required()->check(CLI::NonNegativeNumber);
  delta_cmd->add_option("--r", r)->required()->check(CLI::NonNegativeNumber);

  auto *rh = app.add_subcommand("rh", "Genus from the Riemann-Hurwitz equation");
  rh->add_option("--order", order)->required()->check(CLI::PositiveNumber);
  rh->add_option("--g0", g0)->required()->check(CLI::NonNegativeNumber);
  rh->add_option("--periods", periods_text, "Comma-separated periods");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*classify)
      return cmd_classify(cfg, genus, large_only);
    if (*genus3)
      return cmd_genus3(cfg);
    if (*braid)
      return cmd_braid(cfg, group, signature, mod, verbose);
    if (*restrict)
      return cmd_restrict(cfg, group, subgroup, type_text, opt_genus);
    if (*full)
      return cmd_full(cfg, group, signature, opt_genus);
    if (*delta_cmd) {
      std::cout << delta(Signature{g0, std::vector<int>(static_cast<std::size_t>(r), 2)}) << "\n";
      return 0;
    }
    if (*rh) {
      auto periods = parse_ints(periods_text);
      std::sort(periods.begin(), periods.end());
      auto g = rh_genus(order, Signature{g0, periods});
      if (!g) {
        std::cerr << "error: the genus equation has no integral solution\n";
        return 1;
      }
      std::cout << *g << "\n";
      return 0;
    }
  } catch (const CapExceeded &e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
