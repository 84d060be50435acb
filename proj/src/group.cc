#include "curveaut/group.hpp"

#include "curveaut/errors.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace curveaut {

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::subset_of(const ElementSet &other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

std::size_t ElementSetHash::operator()(const ElementSet &s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : s.words())
    h = (h ^ w) * 0xff51afd7ed558ccdull + (h >> 29);
  return h;
}

FiniteGroup FiniteGroup::close(std::span<const Permutation> generators, std::size_t cap) {
  if (generators.empty())
    throw std::invalid_argument("cannot close an empty generator list");
  const std::size_t degree = generators.front().degree();
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generators have different degrees");
  if (cap > 65535)
    cap = 65535;

  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  std::vector<Permutation> found;
  found.push_back(Permutation::identity(degree));
  seen.emplace(found.back(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto &g : generators) {
      Permutation p = found[head] * g;
      if (seen.contains(p))
        continue;
      if (found.size() >= cap)
        throw CapExceeded("group closure exceeds element cap " + std::to_string(cap));
      seen.emplace(p, found.size());
      found.push_back(std::move(p));
    }
  }

  FiniteGroup G;
  G.degree_ = degree;
  G.elements_ = std::move(found);
  std::sort(G.elements_.begin(), G.elements_.end());
  const std::size_t n = G.elements_.size();

  std::unordered_map<Permutation, Elem, PermutationHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i)
    index.emplace(G.elements_[i], static_cast<Elem>(i));

  for (const auto &g : generators)
    G.generators_.push_back(index.at(g));
  const std::size_t k = G.generators_.size();

  // Right multiplication by each generator.
  std::vector<std::vector<Elem>> right(k, std::vector<Elem>(n));
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t x = 0; x < n; ++x)
      right[s][x] = index.at(G.elements_[x] * generators[s]);

  G.parent_.assign(n, 0);
  G.via_.assign(n, 0);
  std::vector<bool> reached(n, false);
  reached[0] = true;
  G.bfs_order_.push_back(0);
  for (std::size_t head = 0; head < G.bfs_order_.size(); ++head) {
    Elem x = G.bfs_order_[head];
    for (std::size_t s = 0; s < k; ++s) {
      Elem y = right[s][x];
      if (reached[y])
        continue;
      reached[y] = true;
      G.parent_[y] = x;
      G.via_[y] = s;
      G.bfs_order_.push_back(y);
    }
  }

  G.table_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    G.table_[x * n] = static_cast<Elem>(x);
  for (std::size_t pos = 1; pos < n; ++pos) {
    Elem y = G.bfs_order_[pos];
    const auto &r = right[G.via_[y]];
    Elem p = G.parent_[y];
    for (std::size_t x = 0; x < n; ++x)
      G.table_[x * n + y] = r[G.table_[x * n + p]];
  }

  G.inverse_.resize(n);
  G.orders_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    G.inverse_[x] = index.at(G.elements_[x].inverse());
    G.orders_[x] = static_cast<unsigned>(G.elements_[x].order());
  }
  G.build_classes();
  return G;
}

void FiniteGroup::build_classes() {
  const std::size_t n = order();
  std::vector<int> assigned(n, -1);
  std::vector<ConjugacyClass> found;
  for (std::size_t x0 = 0; x0 < n; ++x0) {
    if (assigned[x0] >= 0)
      continue;
    std::vector<Elem> members{static_cast<Elem>(x0)};
    assigned[x0] = static_cast<int>(found.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Elem s : generators_) {
        Elem y = conj(members[head], s);
        if (assigned[y] < 0) {
          assigned[y] = static_cast<int>(found.size());
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    found.push_back({members.front(), std::move(members), orders_[x0]});
  }
  std::sort(found.begin(), found.end(), [](const ConjugacyClass &a, const ConjugacyClass &b) {
    if (a.element_order != b.element_order)
      return a.element_order < b.element_order;
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.representative < b.representative;
  });
  classes_ = std::move(found);
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (Elem x : classes_[c].members)
      class_of_[x] = static_cast<ClassId>(c);
}

Elem FiniteGroup::pow(Elem x, long long k) const {
  const long long m = orders_[x];
  k %= m;
  if (k < 0)
    k += m;
  Elem result = identity();
  Elem base = x;
  while (k > 0) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> FiniteGroup::index_of(const Permutation &p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    return std::nullopt;
  return static_cast<Elem>(it - elements_.begin());
}

std::vector<Permutation> FiniteGroup::generator_permutations() const {
  std::vector<Permutation> out;
  for (Elem g : generators_)
    out.push_back(elements_[g]);
  return out;
}

std::vector<std::size_t> FiniteGroup::word(Elem x) const {
  std::vector<std::size_t> w;
  while (x != identity()) {
    w.push_back(via_[x]);
    x = parent_[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Elem FiniteGroup::evaluate(std::span<const std::size_t> word) const {
  Elem x = identity();
  for (std::size_t s : word)
    x = mul(x, generators_.at(s));
  return x;
}

ElementSet FiniteGroup::closure(std::span<const Elem> gens) const {
  ElementSet set(order());
  std::vector<Elem> queue{identity()};
  set.insert(identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem s : gens) {
      Elem y = mul(queue[head], s);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return set;
}

bool FiniteGroup::generates(std::span<const Elem> gens) const {
  return closure(gens).count() == order();
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : generators_)
    for (Elem b : generators_)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

std::vector<Elem> FiniteGroup::center() const {
  std::vector<Elem> out;
  for (const auto &c : classes_)
    if (c.members.size() == 1)
      out.push_back(c.representative);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned> FiniteGroup::element_orders() const {
  std::vector<unsigned> out;
  for (const auto &c : classes_)
    if (out.empty() || out.back() != c.element_order)
      out.push_back(c.element_order);
  return out;
}

unsigned FiniteGroup::exponent() const {
  unsigned e = 1;
  for (unsigned o : element_orders())
    e = std::lcm(e, o);
  return e;
}

} // namespace curveaut
