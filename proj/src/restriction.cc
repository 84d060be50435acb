#include "curveaut/restriction.hpp"

#include "curveaut/constructors.hpp"
#include "curveaut/errors.hpp"
#include "curveaut/morphism.hpp"

#include <algorithm>

namespace curveaut {

namespace {

bool class_inside(const FiniteGroup &G, ClassId c, const Subgroup &H) {
  return H.contains(G.classes()[c].representative) &&
         std::all_of(G.classes()[c].members.begin(), G.classes()[c].members.end(),
                     [&](Elem x) { return H.contains(x); });
}

// Permutation group induced on the cosets of H.
GroupPtr coset_image_group(const FiniteGroup &G, const Subgroup &H) {
  return make_group(coset_action(G, H).generator_images);
}

} // namespace

std::string to_string(ClauseTag tag) {
  switch (tag) {
  case ClauseTag::I: return "I";
  case ClauseTag::II: return "II";
  case ClauseTag::IIIa: return "IIIa";
  case ClauseTag::IIIb: return "IIIb";
  case ClauseTag::IIIc: return "IIIc";
  case ClauseTag::IVa: return "IVa";
  case ClauseTag::IVb: return "IVb";
  case ClauseTag::IVc: return "IVc";
  case ClauseTag::IVd: return "IVd";
  case ClauseTag::IVe: return "IVe";
  case ClauseTag::IVf: return "IVf";
  case ClauseTag::IVg: return "IVg";
  case ClauseTag::IVh: return "IVh";
  case ClauseTag::IViIndeterminate: return "IVi-indeterminate";
  }
  return "?";
}

RestrictionResult restrict_type(const RamificationType &type, const Subgroup &H,
                                RestrictionChoices choices) {
  return restrict_type(type, embed(*type.group, H), choices);
}

RestrictionResult restrict_type(const RamificationType &type, const EmbeddedSubgroup &E,
                                RestrictionChoices choices) {
  const FiniteGroup &G = *type.group;
  const Subgroup &H = E.in_parent;
  CosetAction cosets = coset_action(G, H);
  auto pick = [&](std::size_t n) -> std::size_t {
    return choices.rng ? static_cast<std::size_t>((*choices.rng)() % n) : 0;
  };

  RestrictionResult result;
  result.subgroup = E;
  std::vector<ClassId> induced;
  // Left cosets sigma H correspond to right cosets H sigma^-1, and <gamma>
  // orbits on the former to <gamma> orbits on the latter under right
  // multiplication. With x = sigma^-1 the inertia element is x gamma^m x^-1.
  for (std::size_t pos = 0; pos < type.classes.size(); ++pos) {
    const auto &cls = G.classes()[type.classes[pos]];
    Elem gamma = cls.members[pick(cls.members.size())];
    std::vector<bool> seen(cosets.degree(), false);
    for (std::size_t start = 0; start < cosets.degree(); ++start) {
      if (seen[start])
        continue;
      unsigned m = 0;
      Elem x0 = cosets.representatives[start];
      for (std::size_t c = start;;) {
        seen[c] = true;
        ++m;
        c = cosets.coset_of[G.mul(cosets.representatives[c], gamma)];
        if (c == start)
          break;
      }
      // Any element of the coset H x0 (and any coset in the orbit) is a valid
      // representative.
      Elem x = G.mul(H.members[pick(H.members.size())], x0);
      for (std::size_t steps = pick(m); steps > 0; --steps)
        x = G.mul(x, gamma);
      Elem inertia = G.mul(G.mul(x, G.pow(gamma, m)), G.inv(x));
      if (!H.contains(inertia))
        throw InternalContradiction("inertia element left the subgroup");
      bool trivial = inertia == G.identity();
      result.log.push_back({pos, gamma, G.inv(x), m, inertia, trivial});
      if (!trivial)
        induced.push_back(E.group->class_of(E.restrict_elem(inertia)));
    }
  }
  std::sort(induced.begin(), induced.end());
  std::vector<int> periods;
  for (ClassId c : induced)
    periods.push_back(static_cast<int>(E.group->classes()[c].element_order));
  std::sort(periods.begin(), periods.end());
  auto h0 = orbit_genus_of(type.genus, E.group->order(), periods);
  if (!h0)
    throw InternalContradiction("restricted data does not satisfy the genus equation");
  result.induced = RamificationType{type.genus, E.group, *h0, induced};
  result.induced_signature = Signature{*h0, periods};
  if (rh_genus(E.group->order(), result.induced_signature) != type.genus)
    throw InternalContradiction("restricted data does not reproduce the genus");
  return result;
}

std::optional<ClauseMatch> classify_equal_dim_pair(const RamificationType &type, const Subgroup &H) {
  const FiniteGroup &G = *type.group;
  if (H.order() == G.order())
    throw std::invalid_argument("classification needs a proper subgroup");
  RestrictionResult res = restrict_type(type, H);
  const Signature sig = type.signature();
  const int dG = delta(sig), dH = delta(res.induced_signature);
  if (dG < dH)
    return std::nullopt;
  if (dG > dH)
    throw InternalContradiction("restriction lowered the dimension");

  ClauseMatch w{ClauseTag::IViIndeterminate, H.index, res.induced_signature.g0,
               res.induced_signature.r(), sig.r(), sig.periods, res.induced_signature.periods};
  const auto &c = w.c;
  const auto &d = w.d;
  const std::size_t n = w.n;
  const int h0 = w.h0, s = w.s, r = w.r;
  const int g = type.genus;
  auto inside = [&](std::size_t i) { return class_inside(G, type.classes[i], H); };
  // Type classes are stored by class id; the clauses address them in
  // ascending period order. Among equal periods, classes outside H come first.
  std::vector<std::size_t> by_period(type.classes.size());
  for (std::size_t i = 0; i < by_period.size(); ++i)
    by_period[i] = i;
  std::stable_sort(by_period.begin(), by_period.end(), [&](std::size_t a, std::size_t b) {
    auto key = [&](std::size_t i) {
      return std::pair(G.classes()[type.classes[i]].element_order, inside(i));
    };
    return key(a) < key(b);
  });
  auto inside_sorted = [&](std::size_t k) { return inside(by_period[k]); };
  auto all_of_c = [&](std::size_t from, std::size_t to, int v) {
    for (std::size_t i = from; i < to; ++i)
      if (c[i] != v)
        return false;
    return true;
  };
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto found = [&](ClauseTag t) {
    w.tag = t;
    return std::optional<ClauseMatch>(w);
  };

  if (sig.g0 != 0)
    throw InternalContradiction("equal dimensions with positive orbit genus");

  if (n == 2 && h0 == 2 && s == 0 && r == 6 && all_of_c(0, 6, 2)) {
    bool ok = true;
    for (std::size_t i = 0; i < 6; ++i)
      ok = ok && !inside_sorted(i);
    if (ok)
      return found(ClauseTag::I);
  }
  if (n == 2 && h0 == 1 && s == 2 && r == 5 && all_of_c(0, 4, 2) &&
      d == std::vector<int>{c[4], c[4]}) {
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i)
      ok = ok && !inside_sorted(i);
    if (ok)
      return found(ClauseTag::II);
  }
  if (n == 2 && h0 == 1 && s == 1 && r == 4 && all_of_c(0, 3, 2) && c[3] % 2 == 0 &&
      d == std::vector<int>{c[3] / 2}) {
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i)
      ok = ok && !inside_sorted(i);
    if (ok)
      return found(ClauseTag::IIIa);
  }
  if (n == 2 && h0 == 0 && s == 4 && r == 4 && all_of_c(0, 2, 2) && inside_sorted(2) &&
      inside_sorted(3) && d == sorted({c[2], c[2], c[3], c[3]}))
    return found(ClauseTag::IIIb);
  if (h0 == 0 && s == 4 && r == 4 && all_of_c(0, 3, 2) && inside_sorted(3) &&
      d == std::vector<int>(4, c[3]) && n == 4 && is_normal(G, H)) {
    auto quotient = coset_image_group(G, H);
    if (quotient->order() == 4 && quotient->exponent() == 2)
      return found(ClauseTag::IIIc);
  }
  if (h0 == 0 && r == 3 && s == 3) {
    if (n == 2 && c[0] == 2) {
      for (auto [i, j] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 1}}) {
        if (c[i] > 2 && c[i] % 2 == 0 && inside_sorted(j) &&
            d == sorted({c[i] / 2, c[j], c[j]}))
          return found(ClauseTag::IVa);
      }
    }
    auto image = [&]() { return coset_image_group(G, H); };
    if (n == 3) {
      auto Gbar = image();
      if (Gbar->order() == 3) {
        for (std::size_t i = 0; i < 3; ++i) {
          bool others_three = true;
          for (std::size_t j = 0; j < 3; ++j)
            if (j != i && c[j] != 3)
              others_three = false;
          if (others_three && inside_sorted(i) && d == std::vector<int>{c[i], c[i], c[i]})
            return found(ClauseTag::IVb);
        }
      }
      if (Gbar->order() == 6 && c[0] == 2 && c[1] == 3 && c[2] > 2 && c[2] % 2 == 0 &&
          d == sorted({2, c[2] / 2, c[2]}))
        return found(ClauseTag::IVc);
    }
    if (n == 4 && c[0] == 2 && c[1] == 3 && c[2] > 3 && c[2] % 3 == 0 &&
        d == sorted({3, c[2] / 3, c[2]}) && is_isomorphic(*image(), *alternating_group(4)))
      return found(ClauseTag::IVd);
    if (n == 6 && c == std::vector<int>{2, 4, 5} && d == std::vector<int>{4, 4, 5} &&
        g % 3 == 1 && is_isomorphic(*image(), *pgl2(5)))
      return found(ClauseTag::IVe);
    if (n == 8 && c == std::vector<int>{2, 3, 7} && d == std::vector<int>{3, 3, 7} &&
        g % 2 == 1 && is_isomorphic(*image(), *psl2(7)))
      return found(ClauseTag::IVf);
    if (n == 9 && c == std::vector<int>{2, 3, 7} && d == std::vector<int>{2, 7, 7} &&
        g % 6 == 1 && is_isomorphic(*image(), *psl2(8)))
      return found(ClauseTag::IVg);
    if (n == 10 && c == std::vector<int>{2, 3, 8} && d == std::vector<int>{3, 8, 8} &&
        g % 15 == 1 && is_isomorphic(*image(), *pgl2(9)))
      return found(ClauseTag::IVh);
    return found(ClauseTag::IViIndeterminate);
  }
  throw InternalContradiction("equal dimensions for shape (r,s) = (" + std::to_string(r) + "," +
                              std::to_string(s) + ") match no clause");
}

InclusionMatch restricts_to(const RamificationType &big, const RamificationType &small,
                            const std::vector<std::vector<ClassId>> &small_actions,
                            std::size_t lattice_cap) {
  InclusionMatch out;
  const FiniteGroup &B = *big.group;
  const FiniteGroup &S = *small.group;
  if (B.order() % S.order() != 0 || B.order() == S.order())
    return out;
  const Signature want = small.signature();
  const auto want_classes = canonical_classes(small.classes, small_actions);
  for (const auto &cls : subgroup_classes(B, lattice_cap)) {
    if (cls.representative.order() != S.order())
      continue;
    EmbeddedSubgroup E = embed(B, cls.representative);
    auto iso = find_isomorphism(*E.group, S);
    if (!iso)
      continue;
    RestrictionResult res = restrict_type(big, E);
    if (!(res.induced_signature == want))
      continue;
    out.signature_level = true;
    std::vector<ClassId> mapped;
    for (ClassId c : res.induced.classes)
      mapped.push_back(S.class_of((*iso)(E.group->classes()[c].representative)));
    if (canonical_classes(mapped, small_actions) == want_classes) {
      out.class_level = true;
      return out;
    }
  }
  return out;
}

} // namespace curveaut
