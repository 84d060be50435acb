#pragma once

#include "curveaut/group.hpp"
#include "curveaut/morphism.hpp"

#include <cstddef>
#include <vector>

namespace curveaut {

enum class GroupKind { Cyclic, Dihedral, Symmetric, Alternating, PSL2, PGL2 };

/// Named families in faithful permutation representations. Dihedral takes the
/// group order 2n. PSL2 and PGL2 act on the projective line over GF(q) for
/// q in {2,3,4,5,7,8,9}. Throws UnsupportedParams outside these ranges.
GroupPtr construct_named(GroupKind kind, std::size_t param);

GroupPtr cyclic_group(std::size_t n);
GroupPtr dihedral_group(std::size_t order);
GroupPtr symmetric_group(std::size_t n);
GroupPtr alternating_group(std::size_t n);
GroupPtr psl2(std::size_t q);
GroupPtr pgl2(std::size_t q);

/// Intransitive product on the disjoint union of the two point sets.
GroupPtr direct_product(const FiniteGroup &A, const FiniteGroup &B);

/// N x| K in its regular representation. action[i] is the automorphism of N
/// by which K's i-th generator k acts, read as n^k = action[i](n). Throws
/// UnsupportedParams if the assignment does not extend to a homomorphism
/// K -> Aut(N).
GroupPtr semidirect_product(const FiniteGroup &N, const FiniteGroup &K,
                            const std::vector<Automorphism> &action);

} // namespace curveaut
