#include "curveaut/classify.hpp"
#include "curveaut/constructors.hpp"
#include "curveaut/errors.hpp"

#include "crosswalk.hpp"
#include "derived_tables.hpp"
#include "reference_tables.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

using namespace curveaut;

namespace {

const Catalog &bundled() {
  static const Catalog c = parse_catalog_file(CURVEAUT_DEFAULT_CATALOG);
  return c;
}

const Classification &genus3() {
  static const Classification c = [] {
    auto seeds = parse_catalog_file(CURVEAUT_GENUS3_CATALOG);
    return genus3_table(seeds, &bundled());
  }();
  return c;
}

const Classification &large(int g) {
  static std::map<int, Classification> cache;
  auto it = cache.find(g);
  if (it == cache.end())
    it = cache.emplace(g, large_group_table(bundled(), g)).first;
  return it->second;
}

using PairKey = std::tuple<std::size_t, int, std::vector<int>>; // order, g0, periods

} // namespace

TEST_SUITE("classify") {

TEST_CASE("labels") {
  auto K = psl2(7);
  std::vector<std::string> labels;
  for (ClassId c = 0; c < K->classes().size(); ++c)
    labels.push_back(class_label(*K, c));
  CHECK(labels == std::vector<std::string>{"1A", "2A", "3A", "4A", "7A", "7B"});
  CHECK(group_label(*K, &bundled()) == "(168,42)");
  CHECK(group_label(*cyclic_group(7), &bundled()).rfind("fp:", 0) == 0);
}

TEST_CASE("universe closure") {
  auto K = psl2(7);
  auto u = close_group_universe({{K, "(168,42)"}}, &bundled());
  // nontrivial subgroup types of PSL(2,7): C2 C3 C4 V4 S3 C7 D8 A4 F21 S4, and the group
  CHECK(u.size() == 11);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      CHECK_FALSE(is_isomorphic(*u[i].group, *u[j].group));
  auto big = close_group_universe({{K, "(168,42)"}}, &bundled(), {}, 20);
  CHECK(big.size() == 3); // the group, F21 and S4
}

TEST_CASE("hyperelliptic detection") {
  auto C2 = cyclic_group(2);
  auto t = realizable_types(C2, 3, Signature{0, {2, 2, 2, 2, 2, 2, 2, 2}}, {{0, 1}});
  REQUIRE(t.size() == 1);
  CHECK(is_hyperelliptic_type(t[0]));
  auto tg = realizable_types(C2, 3, Signature{1, {2, 2, 2, 2}}, {{0, 1}});
  REQUIRE(tg.size() == 1);
  CHECK_FALSE(is_hyperelliptic_type(tg[0]));
  auto K = psl2(7);
  auto tk = realizable_types(K, 3, Signature{0, {2, 3, 7}}, automorphism_class_actions(*K, automorphism_group(*K)));
  CHECK_FALSE(is_hyperelliptic_type(tk.at(0)));
}

TEST_CASE("genus 3 pairs") {
  const auto &c = genus3();
  CHECK(c.pairs.size() == 49);
  std::multiset<PairKey> got, want;
  std::set<std::pair<std::string, Signature>> got_ids;
  for (const auto &[u, sig] : c.pairs) {
    if (u.group->order() == 1) {
      CHECK(sig == Signature{3, {}});
      continue;
    }
    got.insert({u.group->order(), sig.g0, sig.periods});
    got_ids.insert({u.label, sig});
  }
  for (const auto &[id, sig] : derived::genus3_pairs()) {
    want.insert({id.first, sig.g0, sig.periods});
    // groups the catalog knows carry their ID
    if (bundled().find_id(id))
      CHECK_MESSAGE(got_ids.count({format_id(id), sig}), format_id(id), " ", sig.to_string());
  }
  CHECK(got == want);
}

TEST_CASE("genus 3 full types") {
  const auto &c = genus3();
  using Key = std::tuple<std::string, int, std::vector<int>, int, bool>;
  std::multiset<Key> got, want;
  for (const auto &r : c.records) {
    CHECK(r.verdict.verdict == Verdict::Full);
    got.insert({r.group.label, r.signature.g0, r.signature.periods, r.delta, r.hyperelliptic});
  }
  for (const auto &r : reference::genus3_rows())
    want.insert({format_id({r.n, r.m}), r.g0, r.periods, r.delta, r.hyperelliptic});
  CHECK(c.records.size() == 23);
  CHECK(got == want);
  // a pair whose only type is not full
  for (const auto &r : c.records)
    CHECK_FALSE((r.group.label == "(2,1)" && r.signature.g0 == 2));
}

TEST_CASE("large group tables") {
  for (int g = 4; g <= 10; ++g) {
    CAPTURE(g);
    const auto &c = large(g);
    auto cw = reference::crosswalk(c.records, g);
    for (const auto &p : cw.problems)
      MESSAGE(p);
    CHECK(cw.rows_match);
    CHECK(cw.contains_match);
    for (const auto &r : c.records) {
      CHECK(r.verdict.verdict == Verdict::Full);
      CHECK(r.large);
      CHECK(r.unresolved.empty());
    }
  }
}

TEST_CASE("genus 4 inclusion edges") {
  const auto &c = large(4);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto &r : c.records)
    for (std::size_t x : r.contains)
      edges.insert({r.row, x});
  CHECK(edges == std::set<std::pair<std::size_t, std::size_t>>{
                     {10, 3}, {11, 1}, {11, 2}, {12, 4}, {13, 2}, {13, 5}, {14, 6}});
  // class-level containment implies signature-level containment
  for (int g = 4; g <= 10; ++g)
    for (const auto &r : large(g).records)
      for (std::size_t x : r.contains)
        CHECK(std::count(r.contains_signature_level.begin(), r.contains_signature_level.end(), x) == 1);
}

TEST_CASE("components") {
  std::set<std::pair<int, std::string>> reducible;
  for (const auto &l : reference::reducible_loci())
    reducible.insert({l.genus, format_id({l.n, l.m})});
  for (int g = 4; g <= 10; ++g)
    for (const auto &r : large(g).records) {
      REQUIRE(r.components);
      const bool twice = reducible.count({g, r.group.label}) > 0;
      CHECK_MESSAGE(*r.components == (twice ? 2u : 1u), g, " ", r.group.label);
      CHECK(r.type_components == 1u);
    }
  for (const auto &r : genus3().records)
    CHECK((r.signature.g0 == 0) == r.components.has_value());
}

TEST_CASE("reports") {
  const auto &c = large(4);
  std::ostringstream a, b, dot;
  write_tsv(a, c.records, {"universe: test"});
  ClassifyOptions serial;
  serial.caps.workers = 1;
  auto again = large_group_table(bundled(), 4, serial);
  write_tsv(b, again.records, {"universe: test"});
  CHECK(a.str() == b.str());
  std::istringstream lines(a.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "genus\tgroupId\tsignature\tdelta\tcomponents\tcontains\thyperelliptic\tverdict\tclasses");
  std::getline(lines, line);
  CHECK(line == "4\t(120,34)\t(2,4,5)\t0\t1\t-\tno\tFull\t2A,4A,5A");
  CHECK(a.str().find("\n# universe: test\n") != std::string::npos);

  write_dot(dot, c.records);
  const std::string d = dot.str();
  CHECK(d.rfind("digraph", 0) == 0);
  std::size_t boxes = 0, arrows = 0;
  for (std::size_t p = d.find("shape=box"); p != std::string::npos; p = d.find("shape=box", p + 1))
    ++boxes;
  for (std::size_t p = d.find("->"); p != std::string::npos; p = d.find("->", p + 1))
    ++arrows;
  CHECK(boxes == 9);
  CHECK(arrows == 7);
}

TEST_CASE("genus bounds") {
  CHECK_THROWS_AS(large_group_table(bundled(), 11), UnsupportedParams);
  CHECK_THROWS_AS(classify_genus({}, 1, nullptr), UnsupportedParams);
  // genus 2: the large groups and their signatures
  const auto &c = large(2);
  std::set<std::pair<std::string, Signature>> got;
  for (const auto &r : c.records)
    got.insert({r.group.label, r.signature});
  CHECK(got.count({"(48,29)", Signature{0, {2, 3, 8}}}));
  CHECK(got.count({"(24,8)", Signature{0, {2, 4, 6}}}));
}

} // TEST_SUITE
