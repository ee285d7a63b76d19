#include <doctest.h>

#include "bracekit/structure.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

std::vector<Elem> as_vector(std::span<const Elem> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("Fitting subgroup matches the subgroup-lattice oracle") {
  for (const auto& [name, g] : corpus::small_groups()) {
    if (g.order() > 100) continue;
    INFO(name);
    CHECK(as_vector(fitting_subgroup(g).elements()) == oracle::fitting(g));
  }
  CHECK(fitting_subgroup(presets::symmetric(4)).order() == 4);
  CHECK(fitting_subgroup(presets::sl2_3()).order() == 8);
  CHECK(fitting_subgroup(presets::paper_7_3()).order() == 7);
  CHECK_THROWS_AS(fitting_subgroup(presets::alternating(5)), PreconditionError);
}

TEST_CASE("p-cores are normal p-subgroups") {
  for (const auto& [name, g] : corpus::small_groups()) {
    INFO(name);
    for (unsigned p : prime_divisors(g.order())) {
      Subgroup c = p_core(whole(g), p);
      CHECK(is_normal(c, whole(g)));
      CHECK(p_part(g.order(), p) % c.order() == 0);
      CHECK(oracle::is_nilpotent(g, as_vector(c.elements())));
    }
  }
}

TEST_CASE("Sylow systems pairwise permute") {
  for (const auto& [name, g] : corpus::small_groups()) {
    if (!is_solvable(g)) continue;
    INFO(name);
    auto primes = prime_divisors(g.order());
    for (std::uint64_t seed : {0u, 1u, 5u}) {
      auto sys = sylow_system(whole(g), primes, seed);
      REQUIRE(sys.size() == primes.size());
      for (std::size_t i = 0; i < sys.size(); ++i) {
        CHECK(sys[i].order() == p_part(g.order(), primes[i]));
        for (std::size_t j = 0; j < sys.size(); ++j) CHECK(permutes(sys[i], sys[j]));
      }
      Subgroup nsys = system_normalizer(whole(g), sys);
      for (const Subgroup& s : sys) CHECK(is_normal(s, join(s, nsys)));
    }
  }
}

TEST_CASE("coprime complements") {
  FiniteGroup g = presets::paper_7_3();
  Subgroup n = sylow_subgroup(whole(g), 7);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Subgroup c = schur_zassenhaus_complement(whole(g), n, seed);
    CHECK(c.order() == 3);
    CHECK(intersect(c, n).is_trivial());
    CHECK(product_set(n, c).size() == 21);
  }
  FiniteGroup a4 = presets::alternating(4);
  Subgroup v4 = sylow_subgroup(whole(a4), 2);
  CHECK(schur_zassenhaus_complement(whole(a4), v4).order() == 3);
  FiniteGroup c4 = presets::cyclic(4);
  Subgroup two = closure(c4, std::vector<Elem>{2});
  CHECK_THROWS_AS(schur_zassenhaus_complement(whole(c4), two), PreconditionError);
}

TEST_CASE("Sylow towers") {
  CHECK(sylow_tower(presets::paper_7_3()).has_value());
  CHECK(sylow_tower(presets::alternating(4)).has_value());
  CHECK(sylow_tower(presets::symmetric(3)).has_value());
  CHECK_FALSE(sylow_tower(presets::symmetric(4)).has_value());
  CHECK(sylow_tower(presets::sl2_3()).has_value());
  auto t = sylow_tower(presets::dihedral(18));
  REQUIRE(t);
  for (const Subgroup& s : t->series) CHECK(is_normal(s, whole(presets::dihedral(18))));
}

TEST_CASE("class-two Sylow requirement") {
  CHECK_NOTHROW(require_class_two_sylows(presets::symmetric(4)));
  CHECK_THROWS_WITH_AS(require_class_two_sylows(presets::dihedral(16)),
                       doctest::Contains("nilpotency class 3"), PreconditionError);
  CHECK_THROWS_WITH_AS(require_class_two_sylows(presets::alternating(5)),
                       doctest::Contains("not solvable"), PreconditionError);
}

TEST_CASE("decomposition properties on the corpus") {
  auto groups = corpus::left_corpus();
  for (const auto& g : corpus::skew_only()) groups.push_back(g);
  for (const auto& [name, g] : groups) {
    INFO(name);
    for (std::uint64_t seed : {0u, 3u}) {
      Decomposition d = decompose(g, seed);
      DecompositionReport r = verify_decomposition(d);
      CHECK(r.ok());
      for (const auto& f : r.failures) MESSAGE(f);
      // Independent reading of (i): every element has a factorization.
      std::size_t total = 1;
      for (const Subgroup& n : d.N) total *= n.order();
      CHECK(total >= g.order());
      for (const Subgroup& n : d.N)
        CHECK(oracle::is_nilpotent(g, as_vector(n.elements())));
    }
  }
}

TEST_CASE("nilpotent groups decompose in one step") {
  Decomposition d = decompose(presets::heisenberg(3));
  CHECK(d.k == 1);
  CHECK(d.N[0].is_whole());
  CHECK(d.M[1].is_trivial());
}

TEST_CASE("a corrupted decomposition is rejected") {
  Decomposition d = decompose(presets::paper_7_3());
  REQUIRE(d.k == 2);
  std::swap(d.N[0], d.N[1]);
  DecompositionReport r = verify_decomposition(d);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.failures.empty());
}
