#include "curveaut/classify.hpp"

#include "curveaut/constructors.hpp"
#include "curveaut/errors.hpp"
#include "curveaut/restriction.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

namespace curveaut {

namespace {

/// Runs body(i) for i in [0, n) on up to `workers` threads. The first
/// exception is rethrown after every thread has stopped.
template <class Body> void parallel_for(std::size_t n, unsigned workers, Body body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n)
        return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back(run);
  for (auto &t : threads)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

std::vector<std::vector<ClassId>> aut_actions(const FiniteGroup &G, const Caps &caps) {
  return automorphism_class_actions(G, automorphism_group(G, caps.aut_cap, caps.automorphism_count_cap));
}

bool is_large(std::size_t order, int genus) { return order > static_cast<std::size_t>(4 * (genus - 1)); }

std::string join(const std::vector<std::size_t> &v) {
  std::string out;
  for (std::size_t x : v)
    out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

} // namespace

std::string group_label(const FiniteGroup &G, const Catalog *catalog) {
  if (catalog) {
    if (auto id = catalog->identify(G))
      return format_id(*id);
  }
  return "fp:" + fingerprint(G).to_string();
}

std::vector<UniverseGroup> close_group_universe(const std::vector<UniverseGroup> &seeds,
                                                const Catalog *catalog, const Caps &caps,
                                                std::size_t min_order) {
  std::vector<UniverseGroup> out;
  std::vector<Fingerprint> prints;
  auto add = [&](const UniverseGroup &u) {
    if (u.group->order() <= std::max<std::size_t>(min_order, 1))
      return;
    Fingerprint fp = fingerprint(*u.group);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (prints[i] == fp && is_isomorphic(*out[i].group, *u.group))
        return;
    out.push_back(u);
    prints.push_back(std::move(fp));
  };
  for (const auto &s : seeds)
    add(s);
  for (const auto &s : seeds)
    for (const auto &c : subgroup_classes(*s.group, caps.lattice_cap)) {
      if (c.representative.order() <= min_order || c.representative.order() == s.group->order())
        continue;
      auto e = embed(*s.group, c.representative);
      add({e.group, group_label(*e.group, catalog)});
    }
  return out;
}

std::string class_label(const FiniteGroup &G, ClassId c) {
  const auto &classes = G.classes();
  const unsigned ord = classes.at(c).element_order;
  std::size_t pos = 0;
  for (ClassId i = 0; i < c; ++i)
    if (classes[i].element_order == ord)
      ++pos;
  std::string out = std::to_string(ord);
  if (pos < 26)
    out += static_cast<char>('A' + pos);
  else
    out += "_" + std::to_string(pos);
  return out;
}

std::string type_label(const RamificationType &type) {
  std::string out;
  for (ClassId c : type.classes)
    out += (out.empty() ? "" : ",") + class_label(*type.group, c);
  return out.empty() ? "-" : out;
}

bool is_hyperelliptic_type(const RamificationType &type) {
  const FiniteGroup &G = *type.group;
  for (Elem z : G.center()) {
    if (G.element_order(z) != 2)
      continue;
    auto r = restrict_type(type, make_subgroup(G, {z}));
    if (r.induced_signature.g0 == 0)
      return true;
  }
  return false;
}

void compute_inclusions(std::vector<LocusRecord> &records, const Caps &caps) {
  std::map<const FiniteGroup *, std::vector<std::vector<ClassId>>> actions;
  for (auto &rec : records) {
    rec.contains.clear();
    rec.contains_signature_level.clear();
    if (rec.delta == 1 && !actions.count(rec.group.group.get()))
      actions[rec.group.group.get()] = aut_actions(*rec.group.group, caps);
  }
  std::vector<std::size_t> small_rows;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (records[i].delta == 1)
      small_rows.push_back(i);
  parallel_for(small_rows.size(), caps.workers, [&](std::size_t k) {
    auto &small = records[small_rows[k]];
    const auto &acts = actions.at(small.group.group.get());
    for (const auto &big : records) {
      if (big.delta != 0 || big.genus != small.genus)
        continue;
      const std::size_t n = big.group.group->order(), m = small.group.group->order();
      if (n <= m || n % m != 0)
        continue;
      auto match = restricts_to(big.type, small.type, acts, caps.lattice_cap);
      if (match.class_level)
        small.contains.push_back(big.row);
      if (match.signature_level)
        small.contains_signature_level.push_back(big.row);
    }
  });
}

Classification classify_genus(const std::vector<UniverseGroup> &seeds, int genus, const Catalog *catalog,
                              const ClassifyOptions &options) {
  if (genus < 2)
    throw UnsupportedParams("genus must be at least 2");
  const Caps &caps = options.caps;
  Classification out;
  out.genus = genus;
  const std::size_t min_order = options.large_only ? static_cast<std::size_t>(4 * (genus - 1)) : 1;
  out.universe = close_group_universe(seeds, catalog, caps, min_order);

  SearchOptions search;
  search.node_budget = caps.node_budget;

  // pairs
  std::vector<std::vector<Signature>> sigs(out.universe.size());
  parallel_for(out.universe.size(), caps.workers, [&](std::size_t i) {
    const FiniteGroup &G = *out.universe[i].group;
    if (G.order() > static_cast<std::size_t>(84 * (genus - 1)))
      return;
    for (const auto &sig : enumerate_admissible_signatures(genus, G.order(), &G)) {
      SearchOptions o = search;
      o.limit = 1;
      o.fix_first = true;
      if (!find_generating_systems(G, sig, o).empty())
        sigs[i].push_back(sig);
    }
  });
  if (!options.large_only)
    out.pairs.emplace_back(UniverseGroup{cyclic_group(1), "(1,1)"}, Signature{genus, {}});
  for (std::size_t i = 0; i < out.universe.size(); ++i)
    for (const auto &s : sigs[i])
      out.pairs.emplace_back(out.universe[i], s);

  // types and verdicts, one task per pair
  std::vector<std::vector<LocusRecord>> found(out.pairs.size());
  std::vector<std::size_t> examined(out.pairs.size(), 0);
  parallel_for(out.pairs.size(), caps.workers, [&](std::size_t i) {
    const auto &[u, sig] = out.pairs[i];
    if (u.group->order() == 1)
      return;
    auto types = realizable_types(u.group, genus, sig, aut_actions(*u.group, caps), search);
    examined[i] = types.size();
    for (auto &t : types) {
      LocusRecord rec;
      rec.genus = genus;
      rec.group = u;
      rec.signature = sig;
      rec.delta = delta(sig);
      rec.large = is_large(u.group->order(), genus);
      try {
        rec.verdict = decide_type_fullness(t, out.universe, search, options.closed_universe);
      } catch (const CapExceeded &e) {
        rec.verdict.verdict = Verdict::ExceptionalIndeterminate;
        rec.verdict.notes = std::string("cap exceeded: ") + e.what();
        rec.unresolved = rec.verdict.notes;
      }
      rec.type = std::move(t);
      if (rec.verdict.verdict == Verdict::NotFull)
        continue;
      rec.hyperelliptic = is_hyperelliptic_type(rec.type);
      if (sig.g0 == 0) {
        try {
          BraidOptions bo;
          bo.symmetry = options.symmetry;
          bo.tuple_budget = caps.tuple_budget;
          bo.node_budget = caps.node_budget;
          bo.aut_cap = caps.aut_cap;
          rec.type_components = braid_orbits(*u.group, rec.type.classes, bo).size();
        } catch (const CapExceeded &e) {
          rec.unresolved = std::string("braid orbits: ") + e.what();
        }
      }
      found[i].push_back(std::move(rec));
    }
  });

  for (std::size_t i = 0; i < found.size(); ++i) {
    out.types_examined += examined[i];
    // components of the locus: one braid orbit count per full type
    std::optional<std::size_t> total = 0;
    for (const auto &r : found[i]) {
      if (r.verdict.verdict != Verdict::Full)
        continue;
      if (!r.type_components)
        total.reset();
      if (total)
        *total += *r.type_components;
    }
    for (auto &r : found[i]) {
      r.components = r.signature.g0 == 0 ? total : std::nullopt;
      out.records.push_back(std::move(r));
    }
  }

  auto key = [](const LocusRecord &r) {
    return std::make_tuple(r.delta, -static_cast<long long>(r.group.group->order()), r.signature,
                           r.group.label, type_label(r.type));
  };
  std::stable_sort(out.records.begin(), out.records.end(),
                   [&](const LocusRecord &a, const LocusRecord &b) { return key(a) < key(b); });
  for (std::size_t i = 0; i < out.records.size(); ++i)
    out.records[i].row = i + 1;
  if (options.inclusions)
    compute_inclusions(out.records, caps);
  return out;
}

Classification genus3_table(const Catalog &seeds, const Catalog *labels, const ClassifyOptions &options) {
  std::vector<UniverseGroup> s;
  for (const auto &e : seeds.entries())
    s.push_back({e.group, e.spec.declared_id ? format_id(*e.spec.declared_id) : group_label(*e.group, labels)});
  ClassifyOptions o = options;
  o.closed_universe = true;
  return classify_genus(s, 3, labels ? labels : &seeds, o);
}

Classification large_group_table(const Catalog &catalog, int genus, const ClassifyOptions &options) {
  if (genus < 2 || genus > 10)
    throw UnsupportedParams("large group tables cover genus 2 to 10");
  std::vector<UniverseGroup> seeds;
  for (const auto &e : catalog.entries()) {
    const std::size_t n = e.group->order();
    if (is_large(n, genus) && n <= static_cast<std::size_t>(84 * (genus - 1)))
      seeds.push_back({e.group, e.spec.declared_id ? format_id(*e.spec.declared_id) : e.spec.name});
  }
  ClassifyOptions o = options;
  o.large_only = true;
  o.closed_universe = true;
  return classify_genus(seeds, genus, &catalog, o);
}

void write_tsv(std::ostream &out, const std::vector<LocusRecord> &records, const std::vector<std::string> &footer) {
  out << "genus\tgroupId\tsignature\tdelta\tcomponents\tcontains\thyperelliptic\tverdict\tclasses\n";
  for (const auto &r : records) {
    std::string comp;
    if (r.signature.g0 != 0)
      comp = "n/a";
    else if (r.components)
      comp = std::to_string(*r.components);
    else
      comp = "UNRESOLVED";
    out << r.genus << '\t' << r.group.label << '\t' << r.signature.to_string() << '\t' << r.delta << '\t' << comp
        << '\t' << (r.contains.empty() ? "-" : join(r.contains)) << '\t' << (r.hyperelliptic ? "yes" : "no")
        << '\t' << to_string(r.verdict.verdict) << '\t' << type_label(r.type) << '\n';
  }
  for (const auto &line : footer)
    out << "# " << line << '\n';
}

void write_dot(std::ostream &out, const std::vector<LocusRecord> &records) {
  out << "digraph inclusions {\n";
  for (const auto &r : records) {
    out << "  r" << r.genus << "_" << r.row << " [label=\"" << r.row << ": " << r.group.label << " "
        << r.signature.to_string() << "\"";
    if (r.delta == 0)
      out << ", shape=box";
    out << "];\n";
  }
  for (const auto &r : records)
    for (std::size_t c : r.contains)
      out << "  r" << r.genus << "_" << r.row << " -> r" << r.genus << "_" << c << ";\n";
  out << "}\n";
}

} // namespace curveaut
