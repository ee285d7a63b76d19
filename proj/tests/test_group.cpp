#include <doctest.h>

#include <random>

#include "bracekit/group.hpp"
#include "bracekit/presets.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

Elem by_label(const FiniteGroup& g, const std::string& l) {
  for (Elem a = 0; a < g.order(); ++a)
    if (g.label(a) == l) return a;
  FAIL("no element " << l);
  return 0;
}

std::vector<Elem> as_vector(std::span<const Elem> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("preset orders and identities") {
  using namespace presets;
  CHECK(cyclic(7).order() == 7);
  CHECK(dihedral(8).order() == 8);
  CHECK(heisenberg(3).order() == 27);
  CHECK(heisenberg(5).order() == 125);
  CHECK(quaternion8().order() == 8);
  CHECK(sl2_3().order() == 24);
  CHECK(symmetric(3).order() == 6);
  CHECK(symmetric(4).order() == 24);
  CHECK(alternating(4).order() == 12);
  CHECK(paper_7_3().order() == 21);
  CHECK(semidirect_cyclic(13, 3, 3).order() == 39);
  for (const auto& [name, g] : corpus::small_groups()) {
    INFO(name);
    CHECK(check_group_table(g.table(), g.order()).ok);
  }
}

TEST_CASE("paper_7_3 multiplication rule") {
  FiniteGroup g = presets::paper_7_3();
  // (a1,a2)(b1,b2) = (a1 + 2^a2 b1, a2 + b2)
  CHECK(g.label(g.mul(by_label(g, "(0,1)"), by_label(g, "(1,0)"))) == "(2,1)");
  for (unsigned a1 = 0; a1 < 7; ++a1)
    for (unsigned a2 = 0; a2 < 3; ++a2)
      for (unsigned b1 = 0; b1 < 7; ++b1)
        for (unsigned b2 = 0; b2 < 3; ++b2) {
          unsigned pw = a2 == 0 ? 1 : a2 == 1 ? 2 : 4;
          Elem x = a1 + 7 * a2, y = b1 + 7 * b2;
          CHECK(g.mul(x, y) == (a1 + pw * b1) % 7 + 7 * ((a2 + b2) % 3));
        }
}

TEST_CASE("table validation names the failed axiom") {
  // 0 identity, but 1*(1*2) != (1*1)*2 in this Latin square.
  std::vector<Elem> t{0, 1, 2, 3, 4,  //
                      1, 0, 3, 4, 2,  //
                      2, 4, 0, 1, 3,  //
                      3, 2, 4, 0, 1,  //
                      4, 3, 1, 2, 0};
  AxiomCheck c = check_group_table(t, 5);
  CHECK_FALSE(c.ok);
  CHECK(c.failure.find("associativity") != std::string::npos);
  CHECK(c.witness.size() == 3);
  CHECK_THROWS_AS(FiniteGroup::from_table(t), InputError);

  std::vector<Elem> no_identity{1, 0, 0, 1};
  CHECK_FALSE(check_group_table(no_identity, 2).ok);
  CHECK_THROWS_AS(FiniteGroup::from_table({0, 1, 1, 0}, {}, 1), InputError);
}

TEST_CASE("center and derived subgroup match brute force") {
  for (const auto& [name, g] : corpus::small_groups()) {
    INFO(name);
    CHECK(as_vector(center(g).elements()) == oracle::center(g));
    Subgroup all = whole(g);
    std::vector<Elem> all_elems = as_vector(all.elements());
    CHECK(as_vector(derived_subgroup(all).elements()) == oracle::derived(g, all_elems));
    CHECK(is_nilpotent(g) == oracle::is_nilpotent(g));
    CHECK(is_abelian(g) == (oracle::center(g).size() == g.order()));
  }
}

TEST_CASE("nilpotency classes") {
  CHECK(nilpotency_class(presets::heisenberg(3)) == 2u);
  CHECK(nilpotency_class(presets::quaternion8()) == 2u);
  CHECK(nilpotency_class(presets::cyclic(5)) == 1u);
  CHECK(nilpotency_class(FiniteGroup()) == 0u);
  CHECK_FALSE(nilpotency_class(presets::symmetric(3)).has_value());
  CHECK(nilpotency_class(presets::dihedral(16)) == 3u);
  CHECK(is_solvable(presets::symmetric(4)));
  CHECK_FALSE(is_solvable(presets::alternating(5)));
}

TEST_CASE("odd square roots") {
  for (const auto& [name, g] : corpus::small_groups()) {
    for (Elem a = 0; a < g.order(); ++a) {
      unsigned o = element_order(g, a);
      if (o % 2 == 0) {
        CHECK_THROWS_AS(odd_sqrt(g, a), PreconditionError);
        continue;
      }
      Elem r = odd_sqrt(g, a);
      CHECK(g.mul(r, r) == a);
      // unique among powers of a
      for (unsigned k = 0; k < o; ++k) {
        Elem x = power(g, a, k);
        if (g.mul(x, x) == a) CHECK(x == r);
      }
    }
  }
}

TEST_CASE("automorphism counts match brute force on small groups") {
  using namespace presets;
  for (FiniteGroup g : {cyclic(8), dihedral(8), quaternion8(), abelian({2, 2}),
                        symmetric(3), abelian({2, 4}), cyclic(7)}) {
    CHECK(automorphism_group(g).size() == oracle::automorphism_count(g));
  }
  CHECK(automorphism_group(paper_7_3()).size() == 42);
  CHECK(automorphism_group(heisenberg(3)).size() == 432);
  CHECK_THROWS_AS(automorphism_group(symmetric(5), 100), PreconditionError);
  for (const GroupMap& f : automorphism_group(alternating(4))) {
    CHECK(f.is_homomorphism());
    CHECK(f.is_bijective());
  }
}

TEST_CASE("quotient by the order-7 subgroup of paper_7_3 is cyclic of order 3") {
  FiniteGroup g = presets::paper_7_3();
  Subgroup s = sylow_subgroup(whole(g), 7);
  REQUIRE(s.order() == 7);
  Quotient q = quotient(g, s);
  CHECK(q.group.order() == 3);
  CHECK(find_isomorphism(q.group, presets::cyclic(3)).has_value());
  CHECK(q.projection.is_homomorphism());
  CHECK(q.projection.kernel() == s);
}

TEST_CASE("subgroup lattice operations agree with closures") {
  std::mt19937 rng(7);
  for (const auto& [name, g] : corpus::small_groups()) {
    INFO(name);
    std::uniform_int_distribution<Elem> pick(0, Elem(g.order() - 1));
    for (int t = 0; t < 10; ++t) {
      Elem a = pick(rng), b = pick(rng);
      Subgroup h = closure(g, std::vector<Elem>{a});
      Subgroup k = closure(g, std::vector<Elem>{b});
      CHECK(as_vector(join(h, k).elements()) == oracle::closure(g, {a, b}));
      Subgroup i = intersect(h, k);
      for (Elem x : i.elements()) CHECK((h.contains(x) && k.contains(x)));
      CHECK(h.order() % i.order() == 0);
      Subgroup n = normalizer(whole(g), h);
      CHECK(is_normal(h, n));
      Subgroup c = centralizer(whole(g), h.elements());
      for (Elem x : c.elements()) CHECK(g.mul(x, a) == g.mul(a, x));
    }
  }
}

TEST_CASE("Sylow subgroups have full p-part") {
  for (const auto& [name, g] : corpus::small_groups()) {
    INFO(name);
    for (unsigned p : prime_divisors(g.order())) {
      Subgroup s = sylow_subgroup(whole(g), p);
      CHECK(s.order() == p_part(g.order(), p));
    }
  }
  CHECK_THROWS_AS(sylow_subgroup(whole(presets::cyclic(4)), 4), PreconditionError);
}

TEST_CASE("semidirect product validates its action") {
  FiniteGroup n = presets::cyclic(5), h = presets::cyclic(2);
  std::vector<Elem> bad{0, 2, 2, 3, 4};
  CHECK_THROWS(semidirect_product(n, h, {GroupMap::identity(n), GroupMap(n, n, bad)}));
  std::vector<Elem> inv{0, 4, 3, 2, 1};
  FiniteGroup d = semidirect_product(n, h, {GroupMap::identity(n), GroupMap(n, n, inv)});
  CHECK(find_isomorphism(d, presets::dihedral(10)).has_value());
  CHECK(direct_product(presets::cyclic(2), presets::cyclic(3)).order() == 6);
  CHECK(find_isomorphism(direct_product(presets::cyclic(2), presets::cyclic(3)),
                         presets::cyclic(6)).has_value());
}

TEST_CASE("permutation groups") {
  FiniteGroup g = presets::permutation_group(4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
  CHECK(g.order() == 24);
  CHECK(g.label(0) == "()");
  CHECK_THROWS_AS(presets::permutation_group(3, {{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(presets::permutation_group(6, {{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, 100),
                  InputError);
}

TEST_CASE("integer helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(21));
  CHECK(prime_divisors(252) == std::vector<unsigned>{2, 3, 7});
  CHECK(p_part(252, 2) == 4);
  CHECK(p_part(252, 5) == 1);
}
