#include "curveaut/constructors.hpp"

#include "curveaut/errors.hpp"

#include <array>
#include <optional>

namespace curveaut {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t start, std::size_t length) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < length; ++i)
    images[start + i] = static_cast<Point>(start + (i + 1) % length);
  return Permutation(std::move(images));
}

Permutation transposition(std::size_t degree, std::size_t a, std::size_t b) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(i);
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

// GF(p^k) with elements encoded as base-p digit strings of polynomial
// coefficients.
class FiniteField {
public:
  explicit FiniteField(std::size_t q) : q_(q) {
    struct Def {
      std::size_t q, p, k;
      std::array<unsigned, 3> modulus; // x^k = -(m0 + m1 x + m2 x^2)
    };
    static constexpr Def defs[] = {
        {2, 2, 1, {0, 0, 0}}, {3, 3, 1, {0, 0, 0}}, {5, 5, 1, {0, 0, 0}},
        {7, 7, 1, {0, 0, 0}}, {4, 2, 2, {1, 1, 0}}, {8, 2, 3, {1, 1, 0}},
        {9, 3, 2, {1, 0, 0}},
    };
    const Def *def = nullptr;
    for (const auto &d : defs)
      if (d.q == q)
        def = &d;
    if (!def)
      throw UnsupportedParams("projective line groups need q in {2,3,4,5,7,8,9}, got " +
                              std::to_string(q));
    p_ = def->p;
    k_ = def->k;
    modulus_ = def->modulus;
    mul_.assign(q * q, 0);
    add_.assign(q * q, 0);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        add_[a * q + b] = encode(add_poly(decode(a), decode(b)));
        mul_[a * q + b] = encode(mul_poly(decode(a), decode(b)));
      }
    for (std::size_t w = 2; w < q; ++w) {
      std::size_t x = w, n = 1;
      while (x != 1) {
        x = mul(x, w);
        ++n;
      }
      if (n == q - 1) {
        primitive_ = w;
        break;
      }
    }
  }

  std::size_t size() const { return q_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * q_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * q_ + b]; }
  std::size_t neg(std::size_t a) const {
    for (std::size_t b = 0; b < q_; ++b)
      if (add(a, b) == 0)
        return b;
    return 0;
  }
  std::size_t inv(std::size_t a) const {
    for (std::size_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1)
        return b;
    return 0;
  }
  std::size_t primitive() const { return primitive_; }

private:
  using Poly = std::vector<unsigned>;

  Poly decode(std::size_t a) const {
    Poly out(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      out[i] = static_cast<unsigned>(a % p_);
      a /= p_;
    }
    return out;
  }
  std::size_t encode(const Poly &c) const {
    std::size_t a = 0;
    for (std::size_t i = k_; i-- > 0;)
      a = a * p_ + c[i];
    return a;
  }
  Poly add_poly(const Poly &a, const Poly &b) const {
    Poly out(k_);
    for (std::size_t i = 0; i < k_; ++i)
      out[i] = static_cast<unsigned>((a[i] + b[i]) % p_);
    return out;
  }
  Poly mul_poly(const Poly &a, const Poly &b) const {
    std::vector<unsigned> full(2 * k_, 0);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j)
        full[i + j] = static_cast<unsigned>((full[i + j] + a[i] * b[j]) % p_);
    for (std::size_t d = 2 * k_ - 1; d >= k_; --d) {
      unsigned c = full[d];
      if (c == 0)
        continue;
      full[d] = 0;
      for (std::size_t i = 0; i < k_; ++i)
        full[d - k_ + i] =
            static_cast<unsigned>((full[d - k_ + i] + (p_ - c) * modulus_[i]) % p_);
    }
    return Poly(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(k_));
  }

  std::size_t q_, p_ = 0, k_ = 0, primitive_ = 1;
  std::array<unsigned, 3> modulus_{};
  std::vector<std::size_t> add_, mul_;
};

// Moebius map x -> (a x + b) / (c x + d) on points 0..q-1 and q = infinity.
Permutation moebius(const FiniteField &F, std::size_t a, std::size_t b, std::size_t c,
                    std::size_t d) {
  const std::size_t q = F.size();
  std::vector<Point> images(q + 1);
  for (std::size_t x = 0; x <= q; ++x) {
    std::size_t num, den;
    if (x == q) {
      num = a;
      den = c;
    } else {
      num = F.add(F.mul(a, x), b);
      den = F.add(F.mul(c, x), d);
    }
    images[x] = static_cast<Point>(den == 0 ? q : F.mul(num, F.inv(den)));
  }
  return Permutation(std::move(images));
}

GroupPtr projective(std::size_t q, bool special) {
  FiniteField F(q);
  const std::size_t w = F.primitive();
  std::vector<Permutation> gens{moebius(F, 1, 1, 0, 1)};
  if (special) {
    gens.push_back(moebius(F, F.mul(w, w), 0, 0, 1));
    gens.push_back(moebius(F, 0, F.neg(1), 1, 0));
  } else {
    gens.push_back(moebius(F, w, 0, 0, 1));
    gens.push_back(moebius(F, 0, 1, 1, 0));
  }
  return make_group(gens, 4096);
}

} // namespace

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0 || n > 2048)
    throw UnsupportedParams("cyclic group order out of range");
  std::vector<Permutation> gens{cycle_on(n, 0, n)};
  return make_group(gens);
}

GroupPtr dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0 || order > 2048)
    throw UnsupportedParams("dihedral group needs an even order");
  const std::size_t n = order / 2;
  if (n == 1)
    return cyclic_group(2);
  if (n == 2) {
    std::vector<Permutation> gens{transposition(4, 0, 1), transposition(4, 2, 3)};
    return make_group(gens);
  }
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i)
    reflection[i] = static_cast<Point>((n - i) % n);
  std::vector<Permutation> gens{cycle_on(n, 0, n), Permutation(std::move(reflection))};
  return make_group(gens);
}

GroupPtr symmetric_group(std::size_t n) {
  if (n == 0 || n > 6)
    throw UnsupportedParams("symmetric group degree must be 1..6");
  if (n == 1) {
    std::vector<Permutation> gens{Permutation::identity(1)};
    return make_group(gens);
  }
  std::vector<Permutation> gens{transposition(n, 0, 1), cycle_on(n, 0, n)};
  return make_group(gens);
}

GroupPtr alternating_group(std::size_t n) {
  if (n == 0 || n > 7)
    throw UnsupportedParams("alternating group degree must be 1..7");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x)
      images[x] = static_cast<Point>(x);
    images[0] = 1;
    images[1] = static_cast<Point>(i);
    images[i] = 0;
    gens.emplace_back(std::move(images));
  }
  if (gens.empty())
    gens.push_back(Permutation::identity(n));
  return make_group(gens);
}

GroupPtr psl2(std::size_t q) { return projective(q, true); }
GroupPtr pgl2(std::size_t q) { return projective(q, false); }

GroupPtr construct_named(GroupKind kind, std::size_t param) {
  switch (kind) {
  case GroupKind::Cyclic:
    return cyclic_group(param);
  case GroupKind::Dihedral:
    return dihedral_group(param);
  case GroupKind::Symmetric:
    return symmetric_group(param);
  case GroupKind::Alternating:
    return alternating_group(param);
  case GroupKind::PSL2:
    return psl2(param);
  case GroupKind::PGL2:
    return pgl2(param);
  }
  throw UnsupportedParams("unknown group kind");
}

GroupPtr direct_product(const FiniteGroup &A, const FiniteGroup &B) {
  const std::size_t da = A.degree(), db = B.degree();
  std::vector<Permutation> gens;
  for (const auto &g : A.generator_permutations()) {
    std::vector<Point> images(da + db);
    for (std::size_t x = 0; x < da; ++x)
      images[x] = g[x];
    for (std::size_t x = 0; x < db; ++x)
      images[da + x] = static_cast<Point>(da + x);
    gens.emplace_back(std::move(images));
  }
  for (const auto &g : B.generator_permutations()) {
    std::vector<Point> images(da + db);
    for (std::size_t x = 0; x < da; ++x)
      images[x] = static_cast<Point>(x);
    for (std::size_t x = 0; x < db; ++x)
      images[da + x] = static_cast<Point>(da + g[x]);
    gens.emplace_back(std::move(images));
  }
  return make_group(gens, A.order() * B.order());
}

GroupPtr semidirect_product(const FiniteGroup &N, const FiniteGroup &K,
                            const std::vector<Automorphism> &action) {
  if (action.size() != K.generators().size())
    throw UnsupportedParams("semidirect product needs one automorphism per acting generator");
  const std::size_t n = N.order(), k = K.order();
  if (n * k > 2048)
    throw UnsupportedParams("semidirect product too large for the regular representation");

  // theta[x] for every x in K, built along K's word tree.
  std::vector<std::optional<Automorphism>> theta(k);
  theta[K.identity()] = Automorphism::identity(N);
  for (Elem x : K.bfs_order())
    if (x != K.identity())
      theta[x] = theta[K.tree_parent(x)]->compose(action[K.tree_generator(x)], N);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t s = 0; s < action.size(); ++s) {
      Elem y = K.mul(static_cast<Elem>(x), K.generators()[s]);
      if (theta[x]->compose(action[s], N).map != theta[y]->map)
        throw UnsupportedParams("action does not define a homomorphism into Aut(N)");
    }

  auto point = [k](std::size_t a, std::size_t b) { return static_cast<Point>(a * k + b); };
  std::vector<Permutation> gens;
  // (a, b) * (m, 1) = (a * theta_{b^-1}(m), b)
  for (Elem m : N.generators()) {
    std::vector<Point> images(n * k);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < k; ++b)
        images[point(a, b)] =
            point(N.mul(static_cast<Elem>(a), (*theta[K.inv(static_cast<Elem>(b))])(m)), b);
    gens.emplace_back(std::move(images));
  }
  for (Elem j : K.generators()) {
    std::vector<Point> images(n * k);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < k; ++b)
        images[point(a, b)] = point(a, K.mul(static_cast<Elem>(b), j));
    gens.emplace_back(std::move(images));
  }
  return make_group(gens, n * k);
}

} // namespace curveaut
