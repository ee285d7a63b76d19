#include <doctest.h>

#include <random>

#include "bracekit/brace.hpp"
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

void check_left(const Brace& b) {
  oracle::BraceCheck c = oracle::check_brace(b.additive(), b.multiplicative());
  CHECK(c.left);
  CHECK(c.abelian);
  CHECK(verify_brace(b).is_left_brace());
}

void check_skew(const Brace& b) {
  CHECK(oracle::check_brace(b.additive(), b.multiplicative()).skew);
  CHECK(verify_brace(b).is_skew_brace());
}

}  // namespace

TEST_CASE("trivial braces") {
  Brace b = trivial_brace(presets::abelian({2, 4}));
  check_left(b);
  CHECK(b.verified());
  CHECK(socle(b).is_whole());
  CHECK_THROWS_WITH_AS(trivial_brace(presets::symmetric(3)), doctest::Contains("non-abelian"),
                       PreconditionError);
  check_skew(trivial_skew_brace(presets::quaternion8()));
  CHECK_THROWS_WITH_AS(trivial_skew_brace(presets::symmetric(3)),
                       doctest::Contains("non-nilpotent"), PreconditionError);
}

TEST_CASE("class-two braces are two-sided") {
  for (FiniteGroup g : {presets::heisenberg(3), presets::heisenberg(5), presets::cyclic(9)}) {
    Brace b = class2_brace(g);
    check_left(b);
    CHECK(verify_brace(b).two_sided);
    // h1 + h2 = h1 h2 [h2,h1]^(1/2)
    for (Elem x = 0; x < g.order(); x += 7)
      for (Elem y = 0; y < g.order(); y += 3) {
        Elem s = b.add(x, y);
        Elem c = oracle::commutator(g, y, x);
        Elem r = g.mul(g.inv(g.mul(x, y)), s);
        CHECK(g.mul(r, r) == c);
      }
  }
  CHECK_THROWS_WITH_AS(class2_brace(presets::dihedral(8)), doctest::Contains("even order"),
                       PreconditionError);
  CHECK_THROWS_AS(class2_brace(presets::symmetric(3)), PreconditionError);
}

TEST_CASE("lambda maps are additive automorphisms forming an action") {
  for (const auto& [name, g] : corpus::left_corpus()) {
    if (g.order() > 60) continue;
    INFO(name);
    Brace b = main_brace(g, decompose(g));
    std::vector<GroupMap> lam;
    for (Elem a = 0; a < b.order(); ++a) lam.push_back(lambda(b, a));
    for (Elem a = 0; a < b.order(); ++a) {
      CHECK(lam[a].is_homomorphism());
      CHECK(lam[a].is_bijective());
      for (Elem c = 0; c < b.order(); c += 5)
        CHECK(lam[b.mul(a, c)] == lam[c].then(lam[a]));
    }
    Subgroup soc = socle(b);
    CHECK(is_normal(soc, whole(g)));
  }
}

TEST_CASE("semidirect brace") {
  Brace n = trivial_brace(presets::cyclic(7));
  Brace h = trivial_brace(presets::cyclic(3));
  FiniteGroup c7 = presets::cyclic(7);
  std::vector<GroupMap> act;
  for (unsigned k : {1u, 2u, 4u}) {
    std::vector<Elem> im(7);
    for (Elem x = 0; x < 7; ++x) im[x] = (k * x) % 7;
    act.emplace_back(c7, c7, im);
  }
  Brace s = semidirect_brace(n, h, act);
  check_left(s);
  CHECK(s.multiplicative() == presets::paper_7_3());
  // (a,b) + (c,d) is coordinatewise.
  for (Elem x = 0; x < 21; ++x)
    for (Elem y = 0; y < 21; ++y)
      CHECK(s.add(x, y) == (x % 7 + y % 7) % 7 + 7 * ((x / 7 + y / 7) % 3));
}

TEST_CASE("tower constructions") {
  for (FiniteGroup g : {presets::paper_7_3(), presets::alternating(4), presets::symmetric(3),
                        presets::dihedral(18), presets::semidirect_cyclic(13, 3, 3)}) {
    Brace b = tower_brace(g);
    check_left(b);
    CHECK(b.multiplicative() == g);
    Brace s = tower_skew_brace(g, 1);
    check_skew(s);
    CHECK(oracle::is_nilpotent(s.additive()));
  }
  CHECK_THROWS_WITH_AS(tower_brace(presets::symmetric(4)), doctest::Contains("Sylow tower"),
                       PreconditionError);
}

TEST_CASE("main construction on the worked example") {
  FiniteGroup g = presets::paper_7_3();
  Brace b = main_brace(g, decompose(g));
  check_left(b);
  for (Elem x = 0; x < 21; ++x)
    for (Elem y = 0; y < 21; ++y)
      CHECK(b.add(x, y) == (x % 7 + y % 7) % 7 + 7 * ((x / 7 + y / 7) % 3));
  Elem a = by_label(g, "(0,1)"), c = by_label(g, "(1,0)");
  CHECK(g.label(b.add(b.mul(b.add(a, a), c), c)) == "(5,2)");
  CHECK(g.label(b.add(b.mul(a, c), b.mul(a, c))) == "(4,2)");
  CHECK(g.label(lambda(b, a)(c)) == "(2,0)");
  CHECK_FALSE(verify_brace(b).two_sided);
}

TEST_CASE("main constructions enforce their hypotheses") {
  FiniteGroup s4 = presets::symmetric(4);
  Decomposition d = decompose(s4);
  CHECK_THROWS_WITH_AS(main_brace(s4, d), doctest::Contains("Sylow 2-subgroup is non-abelian"),
                       PreconditionError);
  CHECK_THROWS_AS(main_even_brace(presets::paper_7_3(), decompose(presets::paper_7_3())),
                  PreconditionError);
  check_left(main_even_brace(presets::alternating(4), decompose(presets::alternating(4))));
  Brace skew = main_skew_brace(s4, d);
  check_skew(skew);
  CHECK(oracle::is_nilpotent(skew.additive()));
  CHECK_THROWS_AS(decompose(presets::dihedral(16)), PreconditionError);
}

TEST_CASE("factorizations") {
  for (const auto& [name, g] : corpus::left_corpus()) {
    if (g.order() > 80) continue;
    INFO(name);
    Decomposition d = decompose(g);
    Brace b = main_brace(g, d);
    for (Elem x = 0; x < g.order(); ++x) {
      Factorization f = factorize(d, x);
      Elem prod = 0;
      for (Elem c : f.coordinates) prod = g.mul(prod, c);
      CHECK(prod == x);
      auto all = all_factorizations(d, x);
      CHECK(std::find(all.begin(), all.end(), f) != all.end());
    }
    std::mt19937 rng(11);
    std::uniform_int_distribution<Elem> pick(0, Elem(g.order() - 1));
    for (int t = 0; t < 50; ++t) {
      Elem x = pick(rng), y = pick(rng);
      for (const auto& fx : all_factorizations(d, x))
        for (const auto& fy : all_factorizations(d, y))
          CHECK(factorized_sum(g, fx, fy, false) == b.add(x, y));
    }
  }
}

TEST_CASE("certify rejects tables that are not braces") {
  FiniteGroup s3 = presets::symmetric(3);
  CHECK_THROWS_AS(certify(Brace(s3, s3, BraceKind::left)), VerificationError);
  CHECK_NOTHROW(certify(Brace(s3, s3, BraceKind::skew)));
  FiniteGroup c6 = presets::cyclic(6);
  BraceReport r = verify_brace(Brace(c6, s3, BraceKind::left));
  CHECK_FALSE(r.is_left_brace());
  CHECK(r.left_witness.has_value());
  CHECK_THROWS_AS(lambda(Brace(c6, c6, BraceKind::left), 1), PreconditionError);
}

TEST_CASE("brace automorphisms") {
  Brace b = class2_brace(presets::heisenberg(3));
  AutPreservationReport r = check_aut_preservation(presets::heisenberg(3), b);
  CHECK(r.all_preserve());
  CHECK(r.automorphisms == 432);
  CHECK(brace_automorphisms(b).size() == 432);

  FiniteGroup g = presets::paper_7_3();
  Brace m = main_brace(g, decompose(g));
  AutPreservationReport rm = check_aut_preservation(g, m);
  CHECK(rm.automorphisms == 42);
  CHECK(rm.preserving <= rm.automorphisms);
  for (const GroupMap& f : brace_automorphisms(m))
    for (Elem x = 0; x < 21; ++x)
      for (Elem y = 0; y < 21; ++y) CHECK(f(m.add(x, y)) == m.add(f(x), f(y)));
}

TEST_CASE("exhaustive search") {
  for (std::size_t p : {2u, 3u, 5u, 7u}) {
    FiniteGroup g = presets::cyclic(p);
    auto found = search_left_braces(g);
    REQUIRE(found.size() == 1);
    CHECK(found[0].additive() == g);
  }
  auto s3 = search_left_braces(presets::symmetric(3));
  CHECK_FALSE(s3.empty());
  for (const Brace& b : s3) check_left(b);
  auto c4 = search_left_braces(presets::cyclic(4));
  for (const Brace& b : c4) check_left(b);
  auto classes = brace_isomorphism_classes(c4);
  CHECK(classes.size() == c4.size());
  CHECK_THROWS_AS(search_left_braces(presets::cyclic(9)), PreconditionError);
}

TEST_CASE("abelian group types") {
  CHECK(abelian_group_types(1).size() == 1);
  CHECK(abelian_group_types(8).size() == 3);
  CHECK(abelian_group_types(16).size() == 5);
  CHECK(abelian_group_types(72).size() == 6);
  CHECK(abelian_group_types(7).size() == 1);
}

TEST_CASE("brace kinds round-trip through strings") {
  CHECK(brace_kind_from_string(to_string(BraceKind::left)) == BraceKind::left);
  CHECK(brace_kind_from_string("skew") == BraceKind::skew);
  CHECK_THROWS_AS(brace_kind_from_string("right"), InputError);
}
