#include "bracekit/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace bracekit {

namespace {

std::string subgroup_name(const char* sym, std::size_t i) {
  return std::string(sym) + "_" + std::to_string(i);
}

}  // namespace

Subgroup p_core(const Subgroup& k, unsigned p) {
  const FiniteGroup& g = k.parent();
  Subgroup sylow = sylow_subgroup(k, p);
  std::vector<Elem> core(sylow.elements().begin(), sylow.elements().end());
  for (Elem x : k.elements()) {
    if (core.size() == 1) break;
    Elem xi = g.inv(x);
    std::erase_if(core, [&](Elem c) {
      return !sylow.contains(g.mul(g.mul(xi, c), x));
    });
  }
  return *subgroup_from_elements(g, std::move(core));
}

Subgroup fitting_subgroup(const Subgroup& k) {
  if (!is_solvable(k))
    throw PreconditionError("fitting_subgroup: group is not solvable");
  Subgroup f = trivial_subgroup(k.parent());
  for (unsigned p : prime_divisors(k.order())) f = join(f, p_core(k, p));
  return f;
}

Subgroup fitting_subgroup(const FiniteGroup& g) {
  return fitting_subgroup(whole(g));
}

std::vector<Subgroup> sylow_system(const Subgroup& h,
                                   std::span<const unsigned> primes,
                                   std::uint64_t seed) {
  if (!is_solvable(h))
    throw PreconditionError("sylow_system: group is not solvable");
  const std::size_t m = primes.size();

  std::vector<std::vector<Subgroup>> choices(m);
  for (std::size_t r = 0; r < m; ++r) {
    Subgroup base = sylow_subgroup(h, primes[r]);
    std::set<std::vector<Elem>> seen;
    for (Elem x : h.elements()) {
      Subgroup c = conjugate(base, x);
      std::vector<Elem> key(c.elements().begin(), c.elements().end());
      if (seen.insert(std::move(key)).second) choices[r].push_back(c);
    }
  }

  std::vector<std::size_t> pick(m, 0);
  std::function<bool(std::size_t)> search = [&](std::size_t r) {
    if (r == m) return true;
    for (std::size_t i = 0; i < choices[r].size(); ++i) {
      bool ok = true;
      for (std::size_t s = 0; s < r && ok; ++s)
        ok = permutes(choices[s][pick[s]], choices[r][i]);
      if (!ok) continue;
      pick[r] = i;
      if (search(r + 1)) return true;
    }
    return false;
  };
  if (!search(0))
    throw VerificationError("sylow_system: search exhausted without a system");

  Elem x = h.elements()[seed % h.order()];
  std::vector<Subgroup> system;
  for (std::size_t r = 0; r < m; ++r)
    system.push_back(conjugate(choices[r][pick[r]], x));
  return system;
}

Subgroup system_normalizer(const Subgroup& k, std::span<const Subgroup> system) {
  Subgroup r = k;
  for (const Subgroup& p : system) r = intersect(r, normalizer(k, p));
  return r;
}

Subgroup schur_zassenhaus_complement(const Subgroup& g, const Subgroup& n,
                                     std::uint64_t seed) {
  if (!n.is_subset_of(g))
    throw PreconditionError("complement: N is not contained in G");
  if (!is_normal(n, g))
    throw PreconditionError("complement: N is not normal in G");
  const std::size_t index = g.order() / n.order();
  if (std::gcd(index, n.order()) != 1)
    throw PreconditionError("complement: |N| and |G:N| are not coprime");
  const FiniteGroup& parent = g.parent();
  if (index == 1) return trivial_subgroup(parent);

  std::vector<Elem> candidates;
  for (Elem x : g.elements())
    if (x != FiniteGroup::identity &&
        std::gcd<std::size_t, std::size_t>(element_order(parent, x),
                                           n.order()) == 1)
      candidates.push_back(x);
  if (!candidates.empty())
    std::rotate(candidates.begin(),
                candidates.begin() + seed % candidates.size(),
                candidates.end());

  std::set<std::vector<Elem>> visited;
  std::function<std::optional<Subgroup>(const Subgroup&)> search =
      [&](const Subgroup& c) -> std::optional<Subgroup> {
    if (c.order() == index) return c;
    std::vector<char> covered(parent.order(), 0);
    for (Elem x : product_set(c, n)) covered[x] = 1;
    for (Elem x : candidates) {
      if (covered[x]) continue;
      Subgroup next = join(c, x);
      bool meets_n = std::any_of(
          next.elements().begin() + 1, next.elements().end(),
          [&](Elem e) { return n.contains(e); });
      if (meets_n) continue;
      std::vector<Elem> key(next.elements().begin(), next.elements().end());
      if (!visited.insert(std::move(key)).second) continue;
      if (auto found = search(next)) return found;
    }
    return std::nullopt;
  };
  auto found = search(trivial_subgroup(parent));
  if (!found)
    throw VerificationError("complement: search exhausted without a complement");
  return *found;
}

std::optional<SylowTower> sylow_tower(const FiniteGroup& g) {
  SylowTower tower;
  Subgroup current = trivial_subgroup(g);
  tower.series.push_back(current);
  while (current.order() < g.order()) {
    Quotient q = quotient(g, current);
    Subgroup all = whole(q.group);
    bool found = false;
    for (unsigned p : prime_divisors(q.group.order())) {
      Subgroup s = sylow_subgroup(all, p);
      if (!is_normal(s, all)) continue;
      current = q.projection.preimage(s);
      tower.series.push_back(current);
      tower.primes.push_back(p);
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  return tower;
}

std::vector<SylowInfo> sylow_summary(const FiniteGroup& g) {
  std::vector<SylowInfo> out;
  Subgroup all = whole(g);
  for (unsigned p : prime_divisors(g.order())) {
    Subgroup s = sylow_subgroup(all, p);
    out.push_back(SylowInfo{p, s, nilpotency_class(s), is_normal(s, all),
                            is_abelian(s)});
  }
  return out;
}

void require_class_two_sylows(const FiniteGroup& g) {
  if (!is_solvable(g)) throw PreconditionError("group is not solvable");
  for (const SylowInfo& s : sylow_summary(g))
    if (s.nilpotency_class.value_or(99) > 2)
      throw PreconditionError(
          "Sylow " + std::to_string(s.prime) +
          "-subgroup has nilpotency class " +
          std::to_string(*s.nilpotency_class) + " > 2");
}

Decomposition decompose(const FiniteGroup& g, std::uint64_t seed) {
  require_class_two_sylows(g);
  Decomposition d;
  d.group = g;
  d.primes = prime_divisors(g.order());
  d.seed = seed;

  Subgroup m = whole(g);
  d.M.push_back(m);
  while (true) {
    if (is_nilpotent(m)) {
      d.N.push_back(m);
      d.M.push_back(trivial_subgroup(g));
      break;
    }
    Embedding emb = induced_group(m);
    Quotient q = quotient(emb.group, fitting_subgroup(emb.group));
    Subgroup z = center(fitting_subgroup(q.group));
    Subgroup h = emb.lift(q.projection.preimage(z));
    Subgroup n = derived_subgroup(h);
    std::vector<Subgroup> system = sylow_system(h, d.primes, seed);
    Subgroup next = system_normalizer(m, system);
    if (next == m)
      throw VerificationError("decompose: system normalizer did not shrink");
    Subgroup b = trivial_subgroup(g);
    for (const Subgroup& p : system) b = join(b, derived_subgroup(p));

    d.H.push_back(h);
    d.N.push_back(n);
    d.systems.push_back(std::move(system));
    d.B.push_back(b);
    d.M.push_back(next);
    m = next;
  }
  d.k = d.N.size();
  return d;
}

DecompositionReport verify_decomposition(const Decomposition& d) {
  DecompositionReport r;
  const FiniteGroup& g = d.group;
  const std::size_t k = d.k;
  auto fail = [&](bool& flag, std::string why) {
    flag = false;
    r.failures.push_back(std::move(why));
  };

  if (d.N.size() != k || d.M.size() != k + 1 || k == 0) {
    fail(r.chain, "chain lengths do not match k");
    r.products = r.factors = r.normal_factors = r.central_layers = false;
    return r;
  }
  if (!d.M[0].is_whole()) fail(r.chain, "M_0 is not G");
  if (!d.M[k].is_trivial()) fail(r.chain, "M_k is not trivial");
  for (std::size_t i = 1; i <= k; ++i)
    if (!d.M[i].is_subset_of(d.M[i - 1]))
      fail(r.chain, subgroup_name("M", i) + " is not contained in " +
                        subgroup_name("M", i - 1));

  // (i)
  std::vector<Elem> prefix{FiniteGroup::identity};
  for (std::size_t i = 1; i <= k; ++i) {
    prefix = product_set(prefix, d.N[i - 1].elements(), g);
    if (product_set(prefix, d.M[i].elements(), g).size() != g.order())
      fail(r.products, "G != N_1...N_i M_i at i = " + std::to_string(i));
  }

  for (std::size_t i = 1; i <= k; ++i) {
    const Subgroup& n = d.N[i - 1];
    // (ii)
    auto nm = product_set(n, d.M[i]);
    if (!std::equal(nm.begin(), nm.end(), d.M[i - 1].elements().begin(),
                    d.M[i - 1].elements().end()))
      fail(r.factors, subgroup_name("M", i - 1) + " != " +
                          subgroup_name("N", i) + subgroup_name("M", i));
    // (iii)
    if (!n.is_subset_of(d.M[i - 1]) || !is_normal(n, d.M[i - 1]))
      fail(r.normal_factors, subgroup_name("N", i) + " is not normal in " +
                                 subgroup_name("M", i - 1));
    if (!is_nilpotent(n))
      fail(r.normal_factors, subgroup_name("N", i) + " is not nilpotent");
  }

  // (iv): T_i = (T_{i-1} N_i) meet M_i.
  std::vector<Elem> t{FiniteGroup::identity};
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<Elem> next;
    for (Elem x : product_set(t, d.N[i - 1].elements(), g))
      if (d.M[i].contains(x)) next.push_back(x);
    auto ti = subgroup_from_elements(g, next);
    const std::string name = subgroup_name("T", i);
    if (!ti) {
      fail(r.central_layers, name + " is not a subgroup");
      break;
    }
    if (!ti->is_subset_of(d.M[i]) || !is_normal(*ti, d.M[i]))
      fail(r.central_layers, name + " is not normal in " +
                                 subgroup_name("M", i));
    Subgroup span = join(fitting_subgroup(d.M[i - 1]), fitting_subgroup(d.M[i]));
    bool central = ti->is_subset_of(span);
    for (Elem a : ti->generators())
      for (Elem x : span.generators())
        central = central && g.mul(a, x) == g.mul(x, a);
    if (!central)
      fail(r.central_layers, name + " is not central in <F(M_" +
                                 std::to_string(i - 1) + "), F(M_" +
                                 std::to_string(i) + ")>");
    t = std::move(next);
  }
  return r;
}

}  // namespace bracekit
