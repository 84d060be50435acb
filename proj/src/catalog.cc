#include "curveaut/catalog.hpp"

#include "curveaut/errors.hpp"
#include "curveaut/lattice.hpp"
#include "curveaut/morphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace curveaut {

namespace {

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Invariant factors of an abelian group from the orders of its elements.
// `orders` lists the order of every element.
std::vector<std::size_t> invariant_factors(const std::vector<std::size_t> &orders) {
  const std::size_t n = orders.size();
  std::vector<std::vector<std::size_t>> primary; // per prime: exponents, descending
  std::size_t m = n;
  for (std::size_t p = 2; m > 1; ++p) {
    if (m % p != 0)
      continue;
    while (m % p == 0)
      m /= p;
    // k_j = log_p #{x : x^{p^j} = 1}; number of cyclic factors of exponent >= j
    // is k_j - k_{j-1}.
    std::vector<std::size_t> k{0};
    for (std::size_t pj = p;; pj *= p) {
      std::size_t count = 0;
      for (std::size_t o : orders) {
        std::size_t pp = 1;
        while (o % p == 0) {
          o /= p;
          pp *= p;
        }
        count += (o == 1 && pj % pp == 0);
      }
      std::size_t e = 0;
      while (count > 1) {
        count /= p;
        ++e;
      }
      if (e == k.back())
        break;
      k.push_back(e);
    }
    std::vector<std::size_t> exps;
    for (std::size_t j = 1; j < k.size(); ++j) {
      std::size_t at_least_j = k[j] - k[j - 1];
      if (exps.size() < at_least_j)
        exps.resize(at_least_j, 0);
      for (std::size_t i = 0; i < at_least_j; ++i)
        exps[i] = j;
    }
    std::vector<std::size_t> powers;
    for (std::size_t e : exps) {
      std::size_t v = 1;
      for (std::size_t i = 0; i < e; ++i)
        v *= p;
      powers.push_back(v);
    }
    primary.push_back(powers);
  }
  // Combine prime powers position-wise: largest with largest.
  std::size_t len = 0;
  for (const auto &v : primary)
    len = std::max(len, v.size());
  std::vector<std::size_t> out(len, 1);
  for (const auto &v : primary)
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] *= v[i];
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::string format_id(const GroupId &id) {
  return "(" + std::to_string(id.first) + "," + std::to_string(id.second) + ")";
}

std::optional<GroupId> parse_id(const std::string &text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')')
      s.push_back(c == ',' ? ' ' : c);
  std::istringstream in(s);
  std::size_t n, m;
  std::string rest;
  if (!(in >> n >> m) || (in >> rest))
    return std::nullopt;
  return GroupId{n, m};
}

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "n" << order << ";z" << center_order << ";d";
  for (std::size_t i = 0; i < derived_series.size(); ++i)
    out << (i ? "." : "") << derived_series[i];
  out << ";ab";
  for (std::size_t i = 0; i < abelian_invariants.size(); ++i)
    out << (i ? "." : "") << abelian_invariants[i];
  out << ";o";
  bool first = true;
  for (const auto &[o, c] : order_histogram) {
    out << (first ? "" : ".") << o << "^" << c;
    first = false;
  }
  return out.str();
}

Fingerprint fingerprint(const FiniteGroup &G) {
  Fingerprint f;
  f.order = G.order();
  for (std::size_t x = 0; x < G.order(); ++x)
    ++f.order_histogram[G.element_order(static_cast<Elem>(x))];
  f.center_order = G.center().size();
  f.derived_series = derived_series_orders(G);
  for (const auto &c : G.classes())
    f.class_sizes.push_back(c.members.size());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());

  Subgroup D = derived_subgroup(G);
  CosetAction cosets = coset_action(G, D);
  std::vector<std::size_t> quotient_orders;
  for (Elem rep : cosets.representatives) {
    std::size_t m = 1;
    Elem y = rep;
    while (!D.contains(y)) {
      y = G.mul(y, rep);
      ++m;
    }
    quotient_orders.push_back(m);
  }
  f.abelian_invariants = invariant_factors(quotient_orders);
  return f;
}

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {}

const CatalogEntry *Catalog::find_id(const GroupId &id) const {
  for (const auto &e : entries_)
    if (e.spec.declared_id == id)
      return &e;
  return nullptr;
}

const CatalogEntry *Catalog::find_name(const std::string &name) const {
  for (const auto &e : entries_)
    if (e.spec.name == name)
      return &e;
  return nullptr;
}

const CatalogEntry *Catalog::find(const std::string &key) const {
  if (auto id = parse_id(key))
    if (const auto *e = find_id(*id))
      return e;
  return find_name(key);
}

std::optional<GroupId> Catalog::identify(const FiniteGroup &G) const {
  Fingerprint f = fingerprint(G);
  std::optional<GroupId> found;
  for (const auto &e : entries_) {
    if (!e.spec.declared_id || !(e.print == f))
      continue;
    if (found && *found == *e.spec.declared_id)
      continue;
    if (!is_isomorphic(G, *e.group))
      continue;
    if (found)
      throw AmbiguousMatch("group matches both " + format_id(*found) + " and " +
                           format_id(*e.spec.declared_id));
    found = e.spec.declared_id;
  }
  return found;
}

std::string Catalog::label(const FiniteGroup &G) const {
  if (auto id = identify(G))
    return format_id(*id);
  return "fp:" + fingerprint(G).to_string();
}

Catalog parse_catalog(std::istream &in, std::size_t element_cap) {
  std::vector<CatalogEntry> entries;
  std::set<GroupId> seen_ids;
  std::optional<GroupSpec> open;
  std::size_t open_line = 0;
  std::string raw;
  std::size_t line = 0;

  auto finish = [&](std::size_t at) {
    GroupSpec spec = std::move(*open);
    open.reset();
    if (spec.generator_words.empty())
      throw ParseError(at, "group " + spec.name + " has no GEN lines");
    std::vector<Permutation> gens;
    for (const auto &w : spec.generator_words)
      gens.push_back(Permutation::from_cycles(w, spec.degree));
    GroupPtr G = make_group(gens, element_cap);
    if (spec.declared_id && spec.declared_id->first != G->order())
      throw OrderMismatch("group " + spec.name + " declared " + format_id(*spec.declared_id) +
                          " but has order " + std::to_string(G->order()) + " (line " +
                          std::to_string(open_line) + ")");
    if (spec.declared_id && !seen_ids.insert(*spec.declared_id).second)
      return;
    Fingerprint f = fingerprint(*G);
    entries.push_back({std::move(spec), std::move(G), std::move(f)});
  };

  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#')
      continue;
    std::istringstream words(s);
    std::string keyword;
    words >> keyword;
    if (keyword == "GROUP") {
      if (open)
        throw ParseError(line, "GROUP before END of " + open->name);
      GroupSpec spec;
      std::string tag;
      if (!(words >> spec.name))
        throw ParseError(line, "missing group name");
      while (words >> tag) {
        if (tag == "ID") {
          std::string id_text;
          words >> id_text;
          auto id = parse_id(id_text);
          if (!id)
            throw ParseError(line, "bad ID '" + id_text + "'");
          spec.declared_id = id;
        } else if (tag == "DEGREE") {
          long long d = 0;
          if (!(words >> d) || d <= 0 || d > 65535)
            throw ParseError(line, "bad DEGREE");
          spec.degree = static_cast<std::size_t>(d);
        } else {
          throw ParseError(line, "unexpected token '" + tag + "'");
        }
      }
      if (spec.degree == 0)
        throw ParseError(line, "missing DEGREE");
      open = std::move(spec);
      open_line = line;
    } else if (keyword == "GEN") {
      if (!open)
        throw ParseError(line, "GEN outside a GROUP block");
      std::string cycles = trim(s.substr(3));
      try {
        (void)Permutation::from_cycles(cycles, open->degree);
      } catch (const std::invalid_argument &e) {
        throw ParseError(line, e.what());
      }
      open->generator_words.push_back(cycles);
    } else if (keyword == "END") {
      if (!open)
        throw ParseError(line, "END without GROUP");
      finish(line);
    } else {
      throw ParseError(line, "unknown keyword '" + keyword + "'");
    }
  }
  if (open)
    throw ParseError(line, "missing END for group " + open->name);
  return Catalog(std::move(entries));
}

Catalog parse_catalog_file(const std::string &path, std::size_t element_cap) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open catalog file " + path);
  return parse_catalog(in, element_cap);
}

std::string serialize_catalog(const Catalog &catalog) {
  std::ostringstream out;
  for (const auto &e : catalog.entries()) {
    out << "GROUP " << e.spec.name;
    if (e.spec.declared_id)
      out << " ID " << e.spec.declared_id->first << "," << e.spec.declared_id->second;
    out << " DEGREE " << e.group->degree() << "\n";
    for (const auto &g : e.group->generator_permutations())
      out << "GEN " << g.to_cycles() << "\n";
    out << "END\n\n";
  }
  return out.str();
}

std::string default_catalog_path() {
  if (const char *env = std::getenv("CURVEAUT_CATALOG"); env && *env)
    return env;
  return CURVEAUT_DEFAULT_CATALOG;
}

std::string genus3_catalog_path() { return CURVEAUT_GENUS3_CATALOG; }

} // namespace curveaut
