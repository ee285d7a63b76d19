#pragma once

// Groups used across the test suites.

#include <string>
#include <vector>

#include "bracekit/group.hpp"
#include "bracekit/presets.hpp"

namespace corpus {

using namespace bracekit;

struct Named {
  std::string name;
  FiniteGroup group;
};

/// heisenberg(3) x| Z/2 with the generator acting by (a,b,c) -> (-a,-b,c).
inline FiniteGroup heisenberg3_by_inversion() {
  FiniteGroup n = presets::heisenberg(3), h = presets::cyclic(2);
  std::vector<Elem> flip(n.order());
  for (unsigned c = 0; c < 3; ++c)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned a = 0; a < 3; ++a)
        flip[a + 3 * b + 9 * c] = (3 - a) % 3 + 3 * ((3 - b) % 3) + 9 * c;
  return semidirect_product(n, h, {GroupMap::identity(n), GroupMap(n, n, flip)});
}

/// Groups meeting the hypotheses of the main left-brace construction:
/// solvable, Sylow subgroups of class at most two, odd order or abelian
/// Sylow 2-subgroups.
inline std::vector<Named> left_corpus() {
  using namespace presets;
  return {
      {"heisenberg(3)", heisenberg(3)},
      {"heisenberg(5)", heisenberg(5)},
      {"paper_7_3", paper_7_3()},
      {"semidirect(13,3,3)", semidirect_cyclic(13, 3, 3)},
      {"alt(4)", alternating(4)},
      {"dihedral(18)", dihedral(18)},
      {"heisenberg(3):2", heisenberg3_by_inversion()},
      {"alt(4)xsym(3)", direct_product(alternating(4), symmetric(3))},
      {"paper_7_3xcyclic(5)", direct_product(paper_7_3(), cyclic(5))},
      {"paper_7_3xsym(3)", direct_product(paper_7_3(), symmetric(3))},
      {"alt(4)xpaper_7_3", direct_product(alternating(4), paper_7_3())},
      {"heisenberg(3)xalt(4)", direct_product(heisenberg(3), alternating(4))},
  };
}

/// Solvable groups with class <= 2 Sylow subgroups but non-abelian Sylow
/// 2-subgroups: only the skew construction applies.
inline std::vector<Named> skew_only() {
  return {{"sl2_3", presets::sl2_3()}, {"sym(4)", presets::symmetric(4)}};
}

/// Small groups for the brute-force oracle comparisons.
inline std::vector<Named> small_groups() {
  using namespace presets;
  return {
      {"cyclic(1)", cyclic(1)},       {"cyclic(6)", cyclic(6)},
      {"abelian(2,2)", abelian({2, 2})}, {"abelian(2,4)", abelian({2, 4})},
      {"sym(3)", symmetric(3)},       {"dihedral(8)", dihedral(8)},
      {"quaternion8", quaternion8()}, {"dihedral(10)", dihedral(10)},
      {"alt(4)", alternating(4)},     {"paper_7_3", paper_7_3()},
      {"sl2_3", sl2_3()},             {"sym(4)", symmetric(4)},
      {"heisenberg(3)", heisenberg(3)}, {"dihedral(18)", dihedral(18)},
      {"semidirect(13,3,3)", semidirect_cyclic(13, 3, 3)},
      {"alt(4)xsym(3)", direct_product(alternating(4), symmetric(3))},
  };
}

}  // namespace corpus
