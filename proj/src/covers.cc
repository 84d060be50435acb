#include "curveaut/covers.hpp"

#include "curveaut/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace curveaut {

namespace {

Rational period_sum(const std::vector<int> &periods) {
  Rational s = 0;
  for (int c : periods)
    s += Rational(1) - Rational(1, c);
  return s;
}

class SystemSearch {
public:
  SystemSearch(const FiniteGroup &G, int g0, std::vector<ClassId> classes,
               const SearchOptions &options)
      : G_(G), g0_(g0), classes_(std::move(classes)), options_(options) {
    std::stable_sort(classes_.begin(), classes_.end(), [&](ClassId a, ClassId b) {
      return G_.classes()[a].members.size() < G_.classes()[b].members.size();
    });
    current_.alpha.resize(static_cast<std::size_t>(g0));
    current_.beta.resize(static_cast<std::size_t>(g0));
    current_.gamma.resize(classes_.size());
  }

  std::vector<GeneratingSystem> run() {
    if (classes_.empty() && g0_ == 0)
      return {};
    hyperbolic(0, G_.identity());
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

private:
  bool done() const { return options_.limit != 0 && found_.size() >= options_.limit; }

  void tick() {
    if (++nodes_ > options_.node_budget)
      throw CapExceeded("generating-system search exceeded node budget of " +
                        std::to_string(options_.node_budget));
  }

  // Candidates for the first searched element: a class representative when
  // searching up to conjugacy, otherwise the given range.
  bool first_fixed(bool is_first) const { return options_.fix_first && is_first; }

  void hyperbolic(std::size_t j, Elem prefix) {
    if (done())
      return;
    if (j == static_cast<std::size_t>(g0_)) {
      elliptic(0, prefix);
      return;
    }
    const bool is_first = j == 0;
    std::vector<Elem> alphas;
    if (first_fixed(is_first)) {
      for (const auto &c : G_.classes())
        alphas.push_back(c.representative);
    } else {
      alphas.resize(G_.order());
      std::iota(alphas.begin(), alphas.end(), Elem{0});
    }
    for (Elem a : alphas) {
      for (std::size_t b = 0; b < G_.order(); ++b) {
        tick();
        current_.alpha[j] = a;
        current_.beta[j] = static_cast<Elem>(b);
        hyperbolic(j + 1, G_.mul(prefix, G_.commutator(a, static_cast<Elem>(b))));
        if (done())
          return;
      }
    }
  }

  void elliptic(std::size_t i, Elem prefix) {
    if (done())
      return;
    const std::size_t r = classes_.size();
    if (r == 0) {
      if (prefix == G_.identity())
        accept();
      return;
    }
    if (i + 1 == r) {
      tick();
      Elem last = G_.inv(prefix);
      if (G_.class_of(last) != classes_[i])
        return;
      current_.gamma[i] = last;
      accept();
      return;
    }
    const auto &cls = G_.classes()[classes_[i]];
    // With no hyperbolic pair in front, conjugating the whole system moves the
    // first gamma to its class representative.
    if (first_fixed(i == 0 && g0_ == 0)) {
      tick();
      current_.gamma[0] = cls.representative;
      elliptic(1, G_.mul(prefix, cls.representative));
      return;
    }
    for (Elem x : cls.members) {
      tick();
      current_.gamma[i] = x;
      elliptic(i + 1, G_.mul(prefix, x));
      if (done())
        return;
    }
  }

  void accept() {
    if (!G_.generates(current_.all()))
      return;
    found_.push_back(current_);
  }

  const FiniteGroup &G_;
  int g0_;
  std::vector<ClassId> classes_;
  SearchOptions options_;
  GeneratingSystem current_;
  std::vector<GeneratingSystem> found_;
  std::uint64_t nodes_ = 0;
};

} // namespace

Signature Signature::make(int g0, std::vector<int> periods) {
  Signature s{g0, std::move(periods)};
  std::sort(s.periods.begin(), s.periods.end());
  if (!s.valid())
    throw std::invalid_argument("invalid signature " + s.to_string());
  return s;
}

bool Signature::valid() const {
  if (g0 < 0)
    return false;
  for (int c : periods)
    if (c < 2)
      return false;
  if (g0 == 0 && r() < 3)
    return false;
  if (g0 == 1 && r() < 1)
    return false;
  return std::is_sorted(periods.begin(), periods.end());
}

std::string Signature::periods_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < periods.size(); ++i)
    out << (i ? "," : "") << periods[i];
  return out.str();
}

std::string Signature::to_string() const {
  std::string body = "(" + periods_string() + ")";
  if (g0 == 0)
    return body;
  return "g0=" + std::to_string(g0) + ";" + body;
}

std::optional<int> rh_genus(std::size_t order, const Signature &sig) {
  Rational rhs = Rational(2 * (sig.g0 - 1)) + period_sum(sig.periods);
  Rational g = Rational(static_cast<long long>(order)) * rhs / 2 + 1;
  if (g.denominator() != 1 || g.numerator() < 0)
    return std::nullopt;
  return static_cast<int>(g.numerator());
}

std::optional<int> orbit_genus_of(int g, std::size_t order, const std::vector<int> &periods) {
  if (order == 0)
    return std::nullopt;
  Rational lhs(2 * (g - 1), static_cast<long long>(order));
  Rational g0 = (lhs - period_sum(periods)) / 2 + 1;
  if (g0.denominator() != 1 || g0.numerator() < 0)
    return std::nullopt;
  return static_cast<int>(g0.numerator());
}

int delta(const Signature &sig) { return 3 * sig.g0 - 3 + sig.r(); }

std::vector<Signature> enumerate_admissible_signatures(int g, std::size_t order,
                                                       const FiniteGroup *G) {
  std::vector<Signature> out;
  if (order == 0 || g < 2)
    return out;
  std::vector<int> allowed;
  for (int c = 2; c <= 4 * g + 2; ++c) {
    if (order % static_cast<std::size_t>(c) != 0)
      continue;
    if (G) {
      auto orders = G->element_orders();
      if (!std::binary_search(orders.begin(), orders.end(), static_cast<unsigned>(c)))
        continue;
    }
    allowed.push_back(c);
  }
  const Rational total(2 * (g - 1), static_cast<long long>(order));
  std::vector<int> current;
  auto rec = [&](auto &self, std::size_t start, Rational remaining, int g0) -> void {
    if (remaining == Rational(0)) {
      Signature s{g0, current};
      if (s.valid())
        out.push_back(s);
    }
    if (remaining < Rational(1, 2))
      return;
    for (std::size_t i = start; i < allowed.size(); ++i) {
      Rational term = Rational(1) - Rational(1, allowed[i]);
      if (term > remaining)
        break;
      current.push_back(allowed[i]);
      self(self, i, remaining - term, g0);
      current.pop_back();
    }
  };
  for (int g0 = 0;; ++g0) {
    Rational remaining = total - Rational(2 * (g0 - 1));
    if (remaining < Rational(0))
      break;
    rec(rec, 0, remaining, g0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Signature RamificationType::signature() const {
  std::vector<int> periods;
  for (ClassId c : classes)
    periods.push_back(static_cast<int>(group->classes()[c].element_order));
  std::sort(periods.begin(), periods.end());
  return Signature{g0, periods};
}

RamificationType make_type(GroupPtr G, int genus, std::vector<ClassId> classes) {
  std::sort(classes.begin(), classes.end());
  std::vector<int> periods;
  for (ClassId c : classes) {
    if (c >= G->classes().size() || G->classes()[c].element_order == 1)
      throw std::invalid_argument("type classes must be nontrivial classes of the group");
    periods.push_back(static_cast<int>(G->classes()[c].element_order));
  }
  auto g0 = orbit_genus_of(genus, G->order(), periods);
  if (!g0)
    throw std::invalid_argument("no orbit genus solves the genus equation for this type");
  std::sort(periods.begin(), periods.end());
  if (!Signature{*g0, periods}.valid())
    throw std::invalid_argument("type has an invalid signature");
  return RamificationType{genus, std::move(G), *g0, std::move(classes)};
}

std::vector<Elem> GeneratingSystem::all() const {
  std::vector<Elem> out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    out.push_back(alpha[j]);
    out.push_back(beta[j]);
  }
  out.insert(out.end(), gamma.begin(), gamma.end());
  return out;
}

Elem relation_product(const FiniteGroup &G, const GeneratingSystem &s) {
  Elem p = G.identity();
  for (std::size_t j = 0; j < s.alpha.size(); ++j)
    p = G.mul(p, G.commutator(s.alpha[j], s.beta[j]));
  for (Elem x : s.gamma)
    p = G.mul(p, x);
  return p;
}

bool is_generating_system(const FiniteGroup &G, const GeneratingSystem &s) {
  if (s.alpha.size() != s.beta.size())
    return false;
  for (Elem x : s.gamma)
    if (x == G.identity())
      return false;
  return relation_product(G, s) == G.identity() && G.generates(s.all());
}

Signature signature_of(const FiniteGroup &G, const GeneratingSystem &s) {
  std::vector<int> periods;
  for (Elem x : s.gamma)
    periods.push_back(static_cast<int>(G.element_order(x)));
  std::sort(periods.begin(), periods.end());
  return Signature{s.g0(), periods};
}

std::vector<ClassId> classes_of(const FiniteGroup &G, const GeneratingSystem &s) {
  std::vector<ClassId> out;
  for (Elem x : s.gamma)
    out.push_back(G.class_of(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GeneratingSystem> find_generating_systems(const FiniteGroup &G, int g0,
                                                      const std::vector<ClassId> &classes,
                                                      const SearchOptions &options) {
  return SystemSearch(G, g0, classes, options).run();
}

std::vector<GeneratingSystem> find_generating_systems(const RamificationType &type,
                                                      const SearchOptions &options) {
  return find_generating_systems(*type.group, type.g0, type.classes, options);
}

std::vector<GeneratingSystem> find_generating_systems(const FiniteGroup &G, const Signature &sig,
                                                      const SearchOptions &options) {
  std::vector<GeneratingSystem> out;
  for (const auto &classes : class_multisets(G, sig.periods)) {
    SearchOptions o = options;
    if (options.limit != 0)
      o.limit = options.limit - out.size();
    auto part = find_generating_systems(G, sig.g0, classes, o);
    out.insert(out.end(), part.begin(), part.end());
    if (options.limit != 0 && out.size() >= options.limit)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<ClassId>> class_multisets(const FiniteGroup &G,
                                                  const std::vector<int> &periods) {
  std::vector<int> sorted = periods;
  std::sort(sorted.begin(), sorted.end());
  std::set<std::vector<ClassId>> out;
  std::vector<ClassId> current;
  auto rec = [&](auto &self, std::size_t i) -> void {
    if (i == sorted.size()) {
      std::vector<ClassId> key = current;
      std::sort(key.begin(), key.end());
      out.insert(key);
      return;
    }
    // Equal periods take non-decreasing class ids to avoid repeats.
    ClassId start = 0;
    if (i > 0 && sorted[i] == sorted[i - 1])
      start = current.back();
    for (ClassId c = start; c < G.classes().size(); ++c) {
      if (G.classes()[c].element_order != static_cast<unsigned>(sorted[i]))
        continue;
      current.push_back(c);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return {out.begin(), out.end()};
}

std::vector<ClassId> canonical_classes(const std::vector<ClassId> &classes,
                                       const std::vector<std::vector<ClassId>> &actions) {
  std::vector<ClassId> best = classes;
  std::sort(best.begin(), best.end());
  for (const auto &act : actions) {
    std::vector<ClassId> img;
    for (ClassId c : classes)
      img.push_back(act[c]);
    std::sort(img.begin(), img.end());
    best = std::min(best, img);
  }
  return best;
}

std::vector<std::vector<ClassId>> automorphism_class_actions(const FiniteGroup &G,
                                                             const std::vector<Automorphism> &auts) {
  std::set<std::vector<ClassId>> out;
  for (const auto &a : auts)
    out.insert(class_action(G, a));
  return {out.begin(), out.end()};
}

std::vector<RamificationType> realizable_types(GroupPtr G, int genus, const Signature &sig,
                                               const std::vector<std::vector<ClassId>> &actions,
                                               const SearchOptions &options) {
  if (rh_genus(G->order(), sig) != genus)
    return {};
  std::set<std::vector<ClassId>> seen;
  std::vector<RamificationType> out;
  for (const auto &classes : class_multisets(*G, sig.periods)) {
    auto key = canonical_classes(classes, actions);
    if (!seen.insert(key).second)
      continue;
    SearchOptions o = options;
    o.limit = 1;
    o.fix_first = true;
    if (find_generating_systems(*G, sig.g0, key, o).empty())
      continue;
    out.push_back(RamificationType{genus, G, sig.g0, key});
  }
  return out;
}

std::vector<GroupSignaturePair> signature_group_pairs(const std::vector<GroupPtr> &groups, int g,
                                                      const SearchOptions &options) {
  std::vector<GroupSignaturePair> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto &G = *groups[i];
    if (G.order() < 2)
      continue;
    for (const auto &sig : enumerate_admissible_signatures(g, G.order(), &G)) {
      SearchOptions o = options;
      o.limit = 1;
      o.fix_first = true;
      bool realized = false;
      for (const auto &classes : class_multisets(G, sig.periods))
        if (!find_generating_systems(G, sig.g0, classes, o).empty()) {
          realized = true;
          break;
        }
      if (realized)
        out.push_back({i, sig});
    }
  }
  return out;
}

} // namespace curveaut
