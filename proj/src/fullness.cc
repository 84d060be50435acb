#include "curveaut/fullness.hpp"

#include "curveaut/errors.hpp"
#include "curveaut/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace curveaut {

namespace {

Word sym(std::size_t k) { return {Letter{k, false}}; }
Word inv_sym(std::size_t k) { return {Letter{k, true}}; }

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto &p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

Word inverse(const Word &w) {
  Word out(w.rbegin(), w.rend());
  for (auto &l : out)
    l.inverse = !l.inverse;
  return out;
}

Word conjugate(const Word &x, const Word &y) { return cat({inverse(y), x, y}); }

Elem evaluate(const FiniteGroup &G, const Word &w, const std::vector<Elem> &symbols) {
  Elem out = G.identity();
  for (const auto &l : w) {
    Elem x = symbols.at(l.symbol);
    out = G.mul(out, l.inverse ? G.inv(x) : x);
  }
  return out;
}

std::string to_string(ActionKind kind) {
  switch (kind) {
  case ActionKind::Genus2Unramified: return "(2,0) involution";
  case ActionKind::Genus1TwoPoints: return "(1,2) involution";
  case ActionKind::Genus1Inversion: return "(1,1) inversion";
  case ActionKind::Sigma1: return "(0,4) sigma1";
  case ActionKind::Sigma2: return "(0,4) sigma2";
  case ActionKind::Sigma3: return "(0,4) sigma3";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Full: return "Full";
  case Verdict::NotFull: return "NotFull";
  case Verdict::ExceptionalIndeterminate: return "Exceptional-Indeterminate";
  }
  return "?";
}

bool is_exceptional_shape(int h0, int s) { return h0 == 0 && s == 3; }

bool is_critical_shape(int h0, int s) {
  return (h0 == 2 && s == 0) || (h0 == 1 && s == 2) || (h0 == 1 && s == 1) || (h0 == 0 && s == 4);
}

std::vector<PrescribedAction> bad_actions_for(int h0, int s) {
  if (h0 == 2 && s == 0) {
    // symbols a1 b1 a2 b2
    Word w = cat({sym(2), sym(3), inv_sym(0), inv_sym(1)});
    return {{ActionKind::Genus2Unramified,
             {inv_sym(0), inv_sym(1), conjugate(inv_sym(2), w), conjugate(inv_sym(3), w)}}};
  }
  if (h0 == 1 && s == 2) {
    // symbols a b g1 g2
    return {{ActionKind::Genus1TwoPoints,
             {inv_sym(0), inv_sym(1), conjugate(sym(3), cat({inv_sym(0), inv_sym(1)})),
              conjugate(sym(2), cat({inv_sym(1), inv_sym(0)}))}}};
  }
  if (h0 == 1 && s == 1) {
    // symbols a b g with g = [a,b]^-1; its image is forced
    Word g_image = inverse(cat({sym(0), sym(1), inv_sym(0), inv_sym(1)}));
    return {{ActionKind::Genus1Inversion, {inv_sym(0), inv_sym(1), g_image}}};
  }
  if (h0 == 0 && s == 4) {
    // symbols g1 g2 g3 g4
    return {
        {ActionKind::Sigma1, {sym(1), sym(0), conjugate(sym(3), sym(0)), conjugate(sym(2), inv_sym(1))}},
        {ActionKind::Sigma2, {sym(2), sym(3), sym(0), sym(1)}},
        {ActionKind::Sigma3, {sym(3), conjugate(sym(2), sym(3)), conjugate(sym(1), inv_sym(0)), sym(0)}},
    };
  }
  throw ShapeNotCritical("shape (" + std::to_string(h0) + "," + std::to_string(s) +
                         ") has no prescribed actions");
}

std::optional<Automorphism> realize_action(const FiniteGroup &G, const GeneratingSystem &sys,
                                           const PrescribedAction &action) {
  const std::vector<Elem> symbols = sys.all();
  if (symbols.size() != action.images.size())
    throw std::invalid_argument("action does not match the system's shape");
  std::vector<Elem> images;
  for (const auto &w : action.images)
    images.push_back(evaluate(G, w, symbols));
  return extend_to_automorphism(G, symbols, images);
}

FullnessVerdict is_full_nonexceptional(const FiniteGroup &H, const GeneratingSystem &sys) {
  const int h0 = sys.g0(), s = static_cast<int>(sys.gamma.size());
  if (is_exceptional_shape(h0, s))
    throw std::invalid_argument("system has the exceptional shape");
  FullnessVerdict out;
  if (!is_critical_shape(h0, s)) {
    out.notes = "shape not critical";
    return out;
  }
  for (const auto &action : bad_actions_for(h0, s)) {
    if (auto aut = realize_action(H, sys, action)) {
      out.verdict = Verdict::NotFull;
      out.action = action;
      out.automorphism = std::move(aut);
      out.notes = "automorphism realizes " + to_string(action.kind);
      return out;
    }
  }
  out.notes = "no prescribed action extends";
  return out;
}

std::vector<ExtensionPattern> extension_patterns(int genus, std::size_t order, const Signature &d) {
  std::vector<ExtensionPattern> out;
  if (d.g0 != 0 || d.r() != 3)
    return out;
  const auto &p = d.periods;
  auto add = [&](ClauseTag tag, std::size_t n, std::vector<int> c) {
    Signature sig{0, sorted(std::move(c))};
    if (rh_genus(n * order, sig) != genus)
      return;
    ExtensionPattern e{tag, n, sig};
    auto same = [&](const ExtensionPattern &o) { return o.n == e.n && o.c == e.c && o.tag == e.tag; };
    if (std::none_of(out.begin(), out.end(), same))
      out.push_back(e);
  };
  // (a): d = (c_i/2, c_j, c_j)
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k)
      if (p[j] == p[k]) {
        int half = p[3 - j - k];
        add(ClauseTag::IVa, 2, {2, 2 * half, p[j]});
      }
  // (b): d = (c_i, c_i, c_i), the other two periods 3
  if (p[0] == p[2])
    add(ClauseTag::IVb, 3, {3, 3, p[0]});
  for (int c3 : p) {
    // (c): d = (2, c3/2, c3), c3 > 2 even
    if (c3 > 2 && c3 % 2 == 0 && sorted({2, c3 / 2, c3}) == p)
      add(ClauseTag::IVc, 3, {2, 3, c3});
    // (d): d = (3, c3/3, c3), c3 > 3 divisible by 3
    if (c3 > 3 && c3 % 3 == 0 && sorted({3, c3 / 3, c3}) == p)
      add(ClauseTag::IVd, 4, {2, 3, c3});
  }
  if (p == std::vector<int>{4, 4, 5} && genus % 3 == 1)
    add(ClauseTag::IVe, 6, {2, 4, 5});
  if (p == std::vector<int>{3, 3, 7} && genus % 2 == 1)
    add(ClauseTag::IVf, 8, {2, 3, 7});
  if (p == std::vector<int>{2, 7, 7} && genus % 6 == 1)
    add(ClauseTag::IVg, 9, {2, 3, 7});
  if (p == std::vector<int>{3, 8, 8} && genus % 15 == 1)
    add(ClauseTag::IVh, 10, {2, 3, 8});
  return out;
}

FullnessVerdict decide_exceptional_fullness(const RamificationType &type,
                                            const std::vector<UniverseGroup> &universe,
                                            const SearchOptions &options, bool closed_universe) {
  const Signature d = type.signature();
  if (!is_exceptional_shape(d.g0, d.r()))
    throw std::invalid_argument("type does not have the exceptional shape");
  const FiniteGroup &H = *type.group;
  FullnessVerdict out;
  auto patterns = extension_patterns(type.genus, H.order(), d);
  if (patterns.empty()) {
    out.notes = "no extension pattern applies";
    return out;
  }
  const auto h_actions = automorphism_class_actions(H, automorphism_group(H));
  std::vector<std::string> missing;
  for (const auto &pat : patterns) {
    const std::size_t want = pat.n * H.order();
    bool any = false;
    for (const auto &u : universe) {
      if (u.group->order() != want)
        continue;
      any = true;
      auto u_actions = automorphism_class_actions(*u.group, automorphism_group(*u.group));
      for (const auto &big : realizable_types(u.group, type.genus, pat.c, u_actions, options)) {
        if (!restricts_to(big, type, h_actions).class_level)
          continue;
        out.verdict = Verdict::NotFull;
        out.extension = u;
        out.extension_type = big;
        out.pattern = pat.tag;
        out.notes = "contained in " + u.label + " " + pat.c.to_string() + " via " + to_string(pat.tag);
        return out;
      }
    }
    if (!any)
      missing.push_back(std::to_string(want));
  }
  std::string orders;
  for (const auto &m : missing)
    orders += (orders.empty() ? "" : ",") + m;
  if (!missing.empty() && !closed_universe) {
    out.verdict = Verdict::ExceptionalIndeterminate;
    out.notes = "no candidate group of order " + orders;
    return out;
  }
  out.notes = missing.empty() ? "no extension found among candidate groups"
                              : "no extension found; the closed universe has no group of order " + orders;
  return out;
}

FullnessVerdict decide_type_fullness(const RamificationType &type,
                                     const std::vector<UniverseGroup> &universe,
                                     const SearchOptions &options, bool closed_universe) {
  const int h0 = type.g0, s = static_cast<int>(type.classes.size());
  if (is_exceptional_shape(h0, s))
    return decide_exceptional_fullness(type, universe, options, closed_universe);
  FullnessVerdict out;
  if (!is_critical_shape(h0, s)) {
    out.notes = "shape not critical";
    return out;
  }
  SearchOptions o = options;
  o.fix_first = true;
  o.limit = 0;
  auto systems = find_generating_systems(type, o);
  if (systems.empty())
    throw std::invalid_argument("type has no generating system");
  std::optional<FullnessVerdict> first_bad;
  for (const auto &sys : systems) {
    auto v = is_full_nonexceptional(*type.group, sys);
    if (v.verdict == Verdict::Full)
      return v;
    if (!first_bad)
      first_bad = std::move(v);
  }
  return *first_bad;
}

} // namespace curveaut
