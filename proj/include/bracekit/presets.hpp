#pragma once

#include <cstddef>
#include <vector>

#include "bracekit/group.hpp"

/// Built-in groups. All tables are produced by trusted constructors; callers
/// that need the full axiom sweep should pass them through
/// FiniteGroup::from_table.
namespace bracekit::presets {

/// Z/n, element i is the residue i.
FiniteGroup cyclic(std::size_t n);
/// Z/n1 x ... x Z/nk, labels "(a1,...,ak)", first coordinate varies fastest.
FiniteGroup abelian(const std::vector<std::size_t>& moduli);
/// Dihedral group of the given order (2n): r^i s^j has index i + n j.
FiniteGroup dihedral(std::size_t order);
/// Upper unitriangular 3x3 matrices over F_p (order p^3, exponent p for
/// odd p). (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
FiniteGroup heisenberg(unsigned p);
FiniteGroup quaternion8();
/// SL(2,3) as 2x2 matrices over F_3; labels "[a b;c d]".
FiniteGroup sl2_3();
FiniteGroup symmetric(unsigned degree);
FiniteGroup alternating(unsigned degree);
/// Z/p x| Z/q where the generator of Z/q acts by x -> e x. Requires
/// e^q = 1 mod p. Element (a,b) has index a + p b.
FiniteGroup semidirect_cyclic(unsigned p, unsigned q, unsigned e);
/// Z/7 x| Z/3 with (a1,a2)(b1,b2) = (a1 + 2^a2 b1, a2 + b2).
FiniteGroup paper_7_3();
/// Closure of permutations (0-based images) inside Sym(degree); elements are
/// sorted lexicographically, labels in 1-based cycle notation.
FiniteGroup permutation_group(unsigned degree,
                              const std::vector<std::vector<unsigned>>& gens,
                              std::size_t max_order = kMaxGroupOrder);

}  // namespace bracekit::presets
