#include "bracekit/brace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "bracekit/presets.hpp"

namespace bracekit {

std::string to_string(BraceKind kind) {
  return kind == BraceKind::left ? "left" : "skew";
}

BraceKind brace_kind_from_string(const std::string& s) {
  if (s == "left") return BraceKind::left;
  if (s == "skew") return BraceKind::skew;
  throw InputError("unknown brace kind '" + s + "'");
}

Brace::Brace(FiniteGroup additive, FiniteGroup multiplicative, BraceKind kind)
    : add_(std::move(additive)), mul_(std::move(multiplicative)), kind_(kind) {
  if (add_.order() != mul_.order())
    throw InputError("additive and multiplicative tables differ in order");
}

// ---- verification ---------------------------------------------------------

BraceReport verify_brace(const Brace& b) {
  BraceReport r;
  const std::size_t n = b.order();
  AxiomCheck add_chk = check_group_table(b.additive().table(), n);
  AxiomCheck mul_chk = check_group_table(b.multiplicative().table(), n);
  r.additive_group = add_chk.ok;
  r.multiplicative_group = mul_chk.ok;
  r.additive_failure = add_chk.failure;
  r.multiplicative_failure = mul_chk.failure;
  // Both tables are checked with identity 0, so a valid pair shares it.
  r.same_identity = add_chk.ok && mul_chk.ok;
  if (!r.same_identity) return r;

  r.additive_commutative = true;
  for (Elem a = 0; a < n && r.additive_commutative; ++a)
    for (Elem c = a + 1; c < n; ++c)
      if (b.add(a, c) != b.add(c, a)) {
        r.additive_commutative = false;
        r.commutativity_witness = std::array<Elem, 2>{a, c};
        break;
      }

  const Elem* add = b.additive().table().data();
  const Elem* mul = b.multiplicative().table().data();
  r.left_axiom = r.skew_axiom = r.two_sided = true;
  for (Elem a = 0; a < n; ++a) {
    const Elem* ma = mul + std::size_t(a) * n;
    const Elem neg_a = b.neg(a);
    for (Elem x = 0; x < n; ++x) {
      const Elem* ax = add + std::size_t(x) * n;
      const Elem ma_x = ma[x];
      const Elem xa = mul[std::size_t(x) * n + a];
      for (Elem y = 0; y < n; ++y) {
        const Elem lhs = ma[ax[y]];  // a(x+y)
        const Elem sum_products = add[std::size_t(ma_x) * n + ma[y]];
        if (r.left_axiom && add[std::size_t(lhs) * n + a] != sum_products) {
          r.left_axiom = false;
          r.left_witness = Triple{a, x, y};
        }
        if (r.skew_axiom &&
            lhs != add[std::size_t(add[std::size_t(ma_x) * n + neg_a]) * n +
                       ma[y]]) {
          r.skew_axiom = false;
          r.skew_witness = Triple{a, x, y};
        }
        if (r.two_sided) {
          const Elem rhs_l = mul[std::size_t(ax[y]) * n + a];  // (x+y)a
          const Elem ya = mul[std::size_t(y) * n + a];
          if (add[std::size_t(rhs_l) * n + a] != add[std::size_t(xa) * n + ya]) {
            r.two_sided = false;
            r.two_sided_witness = Triple{a, x, y};
          }
        }
      }
    }
  }
  return r;
}

Brace certify(Brace b) {
  BraceReport r = verify_brace(b);
  if (!r.holds(b.kind())) {
    std::string why;
    if (!r.additive_group) why = "additive table: " + r.additive_failure;
    else if (!r.multiplicative_group)
      why = "multiplicative table: " + r.multiplicative_failure;
    else if (b.kind() == BraceKind::left && !r.additive_commutative)
      why = "additive group is not abelian";
    else
      why = b.kind() == BraceKind::left ? "left brace axiom fails"
                                        : "skew brace axiom fails";
    throw VerificationError("constructed " + to_string(b.kind()) +
                            " brace failed verification: " + why);
  }
  b.verified_ = true;
  return b;
}

GroupMap lambda(const Brace& b, Elem a) {
  if (!b.verified()) throw PreconditionError("lambda: brace is not verified");
  if (a >= b.order()) throw InputError("element index out of range");
  std::vector<Elem> im(b.order());
  for (Elem x = 0; x < b.order(); ++x) im[x] = b.add(b.neg(a), b.mul(a, x));
  return GroupMap(b.additive(), b.additive(), std::move(im));
}

Subgroup socle(const Brace& b) {
  if (!b.verified() || b.kind() != BraceKind::left)
    throw PreconditionError("socle: requires a verified left brace");
  std::vector<Elem> ker;
  for (Elem a = 0; a < b.order(); ++a) {
    bool trivial = true;
    for (Elem x = 0; x < b.order() && trivial; ++x)
      trivial = b.mul(a, x) == b.add(a, x);
    if (trivial) ker.push_back(a);
  }
  auto s = subgroup_from_elements(b.multiplicative(), std::move(ker));
  if (!s) throw VerificationError("socle is not a subgroup");
  return *s;
}

// ---- elementary constructions ---------------------------------------------

Brace trivial_brace(const FiniteGroup& a) {
  if (!is_abelian(a))
    throw PreconditionError("trivial_brace: group is non-abelian");
  return certify(Brace(a, a, BraceKind::left));
}

Brace trivial_skew_brace(const FiniteGroup& g) {
  if (!is_nilpotent(g))
    throw PreconditionError("trivial_skew_brace: group is non-nilpotent");
  return certify(Brace(g, g, BraceKind::skew));
}

namespace {

FiniteGroup additive_with_labels(std::vector<Elem> table,
                                 const FiniteGroup& like) {
  return FiniteGroup::unchecked(
      std::move(table),
      std::vector<std::string>(like.labels().begin(), like.labels().end()));
}

// Caches a^((o+1)/2) for odd-order elements.
class SqrtTable {
 public:
  explicit SqrtTable(const FiniteGroup& g)
      : g_(g), cache_(g.order(), kUnset) {}
  Elem operator()(Elem a) {
    if (cache_[a] == kUnset) cache_[a] = odd_sqrt(g_, a);
    return cache_[a];
  }

 private:
  static constexpr Elem kUnset = ~Elem{0};
  const FiniteGroup& g_;
  std::vector<Elem> cache_;
};

Elem class2_sum(const FiniteGroup& g, SqrtTable& sqrt, Elem x, Elem y) {
  return g.mul(g.mul(x, y), sqrt(commutator(g, y, x)));
}

}  // namespace

Brace class2_brace(const FiniteGroup& g) {
  auto cls = nilpotency_class(g);
  if (!cls || *cls > 2)
    throw PreconditionError(
        "class2_brace: group is not nilpotent of class at most 2");
  Subgroup derived = derived_subgroup(whole(g));
  if (derived.order() % 2 == 0)
    throw PreconditionError(
        "class2_brace: derived subgroup has even order " +
        std::to_string(derived.order()));
  const std::size_t n = g.order();
  SqrtTable sqrt(g);
  std::vector<Elem> add(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) add[x * n + y] = class2_sum(g, sqrt, x, y);
  Brace b = certify(Brace(additive_with_labels(std::move(add), g), g,
                          BraceKind::left));
  if (!verify_brace(b).two_sided)
    throw VerificationError("class2_brace: result is not two-sided");
  return b;
}

Brace semidirect_brace(const Brace& n, const Brace& h,
                       const std::vector<GroupMap>& action) {
  if (action.size() != h.order())
    throw InputError("semidirect_brace: action needs one map per element");
  for (Elem x = 0; x < h.order(); ++x) {
    const GroupMap& phi = action[x];
    if (phi.source().order() != n.order() || phi.target().order() != n.order())
      throw InputError("semidirect_brace: action maps have the wrong size");
    for (Elem a = 0; a < n.order(); ++a)
      for (Elem b = 0; b < n.order(); ++b)
        if (phi(n.add(a, b)) != n.add(phi(a), phi(b)))
          throw PreconditionError(
              "semidirect_brace: action of " + h.label(x) +
              " does not preserve the sum at (" + n.label(a) + ", " +
              n.label(b) + ")");
  }
  // Rebase the maps onto the multiplicative group for the product table.
  std::vector<GroupMap> mul_action;
  for (const GroupMap& phi : action)
    mul_action.emplace_back(n.multiplicative(), n.multiplicative(),
                            std::vector<Elem>(phi.images().begin(),
                                              phi.images().end()));
  FiniteGroup mul = semidirect_product(n.multiplicative(), h.multiplicative(),
                                       mul_action);
  FiniteGroup add = direct_product(n.additive(), h.additive()).relabeled(
      std::vector<std::string>(mul.labels().begin(), mul.labels().end()));
  BraceKind kind = (n.kind() == BraceKind::skew || h.kind() == BraceKind::skew)
                       ? BraceKind::skew
                       : BraceKind::left;
  return certify(Brace(add, mul, kind));
}

namespace {

// Moves a brace along a bijection onto the carrier of `g`; the transported
// product must be g's.
Brace transport(const Brace& b, std::span<const Elem> to_g,
                const FiniteGroup& g) {
  const std::size_t n = b.order();
  std::vector<Elem> add(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (g.mul(to_g[x], to_g[y]) != to_g[b.mul(x, y)])
        throw VerificationError("transport: bijection is not multiplicative");
      add[to_g[x] * n + to_g[y]] = to_g[b.add(x, y)];
    }
  return certify(Brace(additive_with_labels(std::move(add), g), g, b.kind()));
}

void require_parity_condition(const FiniteGroup& g, const char* who) {
  if (g.order() % 2) return;
  Subgroup s2 = sylow_subgroup(whole(g), 2);
  if (!is_abelian(s2))
    throw PreconditionError(
        std::string(who) +
        ": Sylow 2-subgroup is non-abelian (requires odd order or abelian "
        "Sylow 2-subgroups)");
}

Brace tower_recursive(const FiniteGroup& g, bool skew, std::uint64_t seed) {
  auto tower = sylow_tower(g);
  if (!tower)
    throw PreconditionError(std::string(skew ? "tower_skew_brace" : "tower_brace") +
                            ": group has no Sylow tower");
  if (tower->primes.size() <= 1)
    return skew ? trivial_skew_brace(g) : class2_brace(g);

  const Subgroup& p = tower->series[1];
  Subgroup comp = schur_zassenhaus_complement(whole(g), p, seed);
  Embedding ep = induced_group(p);
  Embedding eh = induced_group(comp);
  Brace nb = skew ? trivial_skew_brace(ep.group) : class2_brace(ep.group);
  Brace hb = tower_recursive(eh.group, skew, seed);

  std::vector<GroupMap> action;
  for (Elem h = 0; h < eh.group.order(); ++h) {
    Elem x = eh.to_parent(h);
    std::vector<Elem> im(ep.group.order());
    for (Elem a = 0; a < im.size(); ++a)
      im[a] = ep.from_parent(conjugate(g, x, ep.to_parent(a)));
    action.emplace_back(nb.additive(), nb.additive(), std::move(im));
  }
  Brace sb = semidirect_brace(nb, hb, action);

  const std::size_t np = ep.group.order();
  std::vector<Elem> to_g(sb.order());
  for (Elem h = 0; h < eh.group.order(); ++h)
    for (Elem a = 0; a < np; ++a)
      to_g[a + np * h] = g.mul(ep.to_parent(a), eh.to_parent(h));
  return transport(sb, to_g, g);
}

}  // namespace

Brace tower_brace(const FiniteGroup& g, std::uint64_t seed) {
  require_class_two_sylows(g);
  if (!sylow_tower(g))
    throw PreconditionError("tower_brace: group has no Sylow tower");
  require_parity_condition(g, "tower_brace");
  return tower_recursive(g, false, seed);
}

Brace tower_skew_brace(const FiniteGroup& g, std::uint64_t seed) {
  Brace b = tower_recursive(g, true, seed);
  if (!is_nilpotent(b.additive()))
    throw VerificationError("tower_skew_brace: additive group is not nilpotent");
  return b;
}

// ---- decomposition-based constructions ------------------------------------

Factorization factorize(const Decomposition& d, Elem g) {
  const FiniteGroup& grp = d.group;
  if (g >= grp.order()) throw InputError("element index out of range");
  Factorization f;
  Elem rest = g;
  for (std::size_t i = 0; i < d.k; ++i) {
    bool found = false;
    for (Elem x : d.N[i].elements()) {
      Elem r = grp.mul(grp.inv(x), rest);
      if (d.M[i + 1].contains(r)) {
        f.coordinates.push_back(x);
        rest = r;
        found = true;
        break;
      }
    }
    if (!found)
      throw PreconditionError("factorize: element " + grp.label(g) +
                              " has no factorization (invalid decomposition)");
  }
  return f;
}

std::vector<Factorization> all_factorizations(const Decomposition& d, Elem g) {
  const FiniteGroup& grp = d.group;
  std::vector<Factorization> out;
  std::vector<Elem> coords;
  std::function<void(std::size_t, Elem)> walk = [&](std::size_t i, Elem rest) {
    if (i == d.k) {
      out.push_back(Factorization{coords});
      return;
    }
    for (Elem x : d.N[i].elements()) {
      Elem r = grp.mul(grp.inv(x), rest);
      if (!d.M[i + 1].contains(r)) continue;
      coords.push_back(x);
      walk(i + 1, r);
      coords.pop_back();
    }
  };
  walk(0, g);
  return out;
}

Elem factorized_sum(const FiniteGroup& g, const Factorization& x,
                    const Factorization& y, bool skew) {
  if (x.coordinates.size() != y.coordinates.size())
    throw InputError("factorizations have different lengths");
  Elem out = FiniteGroup::identity;
  for (std::size_t i = 0; i < x.coordinates.size(); ++i) {
    Elem a = x.coordinates[i], b = y.coordinates[i];
    Elem s = g.mul(a, b);
    if (!skew) s = g.mul(s, odd_sqrt(g, commutator(g, b, a)));
    out = g.mul(out, s);
  }
  return out;
}

namespace {

Brace decomposition_brace(const FiniteGroup& g, const Decomposition& d,
                          bool skew) {
  if (!(d.group == g))
    throw PreconditionError("decomposition belongs to a different group");
  const std::size_t n = g.order();
  std::vector<Factorization> fact(n);
  for (Elem x = 0; x < n; ++x) fact[x] = factorize(d, x);

  SqrtTable sqrt(g);
  auto sum = [&](const Factorization& x, const Factorization& y) {
    Elem out = FiniteGroup::identity;
    for (std::size_t i = 0; i < d.k; ++i) {
      Elem a = x.coordinates[i], b = y.coordinates[i];
      out = g.mul(out, skew ? g.mul(a, b) : class2_sum(g, sqrt, a, b));
    }
    return out;
  };

  std::vector<Elem> add(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) add[x * n + y] = sum(fact[x], fact[y]);

  // Cross-check independence of the factorization on a fixed sample.
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<Elem> pick(0, Elem(n - 1));
  for (int s = 0; s < 64; ++s) {
    Elem x = pick(rng), y = pick(rng);
    for (const Factorization& fx : all_factorizations(d, x))
      for (const Factorization& fy : all_factorizations(d, y))
        if (sum(fx, fy) != add[x * n + y])
          throw VerificationError("sum depends on the factorization of (" +
                                  g.label(x) + ", " + g.label(y) + ")");
  }
  return certify(Brace(additive_with_labels(std::move(add), g), g,
                       skew ? BraceKind::skew : BraceKind::left));
}

}  // namespace

Brace main_brace(const FiniteGroup& g, const Decomposition& d) {
  require_class_two_sylows(g);
  require_parity_condition(g, "main_brace");
  return decomposition_brace(g, d, false);
}

Brace main_even_brace(const FiniteGroup& g, const Decomposition& d) {
  if (g.order() % 2)
    throw PreconditionError("main_even_brace: group has odd order");
  return main_brace(g, d);
}

Brace main_skew_brace(const FiniteGroup& g, const Decomposition& d) {
  require_class_two_sylows(g);
  Brace b = decomposition_brace(g, d, true);
  if (!is_nilpotent(b.additive()))
    throw VerificationError("main_skew_brace: additive group is not nilpotent");
  return b;
}

// ---- automorphisms --------------------------------------------------------

namespace {

std::optional<std::array<Elem, 2>> sum_violation(const Brace& b,
                                                  std::span<const Elem> f) {
  const std::size_t n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (f[b.add(x, y)] != b.add(f[x], f[y])) return std::array<Elem, 2>{x, y};
  return std::nullopt;
}

}  // namespace

std::vector<GroupMap> brace_automorphisms(const Brace& b, std::size_t guard) {
  std::vector<GroupMap> out;
  for (GroupMap& f : automorphism_group(b.multiplicative(), guard))
    if (!sum_violation(b, f.images())) out.push_back(std::move(f));
  return out;
}

AutPreservationReport check_aut_preservation(const FiniteGroup& g,
                                             const Brace& b,
                                             std::size_t guard) {
  if (!(b.multiplicative() == g))
    throw PreconditionError(
        "check_aut_preservation: brace product is not the group's");
  AutPreservationReport r;
  auto auts = automorphism_group(g, guard);
  r.automorphisms = auts.size();
  for (std::size_t i = 0; i < auts.size(); ++i) {
    auto bad = sum_violation(b, auts[i].images());
    if (!bad) {
      ++r.preserving;
    } else if (!r.witness_map) {
      r.witness_map = i;
      r.witness_pair = bad;
    }
  }
  return r;
}

// ---- brute-force search ---------------------------------------------------

std::vector<std::vector<std::size_t>> abelian_group_types(std::size_t n) {
  // Partitions of each prime exponent, combined across primes.
  std::vector<std::vector<std::size_t>> types{{}};
  std::size_t rest = n;
  for (unsigned p : prime_divisors(n)) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> gen = [&](unsigned left,
                                                      unsigned max) {
      if (left == 0) {
        parts.push_back(cur);
        return;
      }
      for (unsigned k = std::min(left, max); k >= 1; --k) {
        cur.push_back(k);
        gen(left - k, k);
        cur.pop_back();
      }
    };
    gen(e, e);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : types)
      for (const auto& part : parts) {
        auto u = t;
        for (unsigned k : part) {
          std::size_t q = 1;
          for (unsigned i = 0; i < k; ++i) q *= p;
          u.push_back(q);
        }
        next.push_back(std::move(u));
      }
    types = std::move(next);
  }
  return types;
}

std::vector<Brace> search_left_braces(const FiniteGroup& g, std::size_t guard) {
  const std::size_t n = g.order();
  if (n > guard)
    throw PreconditionError("search_left_braces: group order " +
                            std::to_string(n) + " exceeds the search guard " +
                            std::to_string(guard));
  std::set<std::vector<Elem>> tables;
  const Elem* mul = g.table().data();
  std::vector<Elem> add(n * n);
  for (const auto& moduli : abelian_group_types(n)) {
    FiniteGroup a = presets::abelian(moduli);
    std::vector<Elem> f(n), finv(n);
    std::iota(f.begin(), f.end(), Elem{0});
    do {
      for (Elem x = 0; x < n; ++x) finv[f[x]] = x;
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) add[x * n + y] = finv[a.mul(f[x], f[y])];
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x)
        for (Elem y = 0; y < n && ok; ++y)
          for (Elem z = 0; z < n && ok; ++z) {
            Elem lhs = add[mul[x * n + add[y * n + z]] * n + x];
            Elem rhs = add[mul[x * n + y] * n + mul[x * n + z]];
            ok = lhs == rhs;
          }
      if (ok) tables.insert(add);
    } while (std::next_permutation(f.begin() + 1, f.end()));
  }
  std::vector<Brace> out;
  for (const auto& t : tables)
    out.push_back(certify(Brace(additive_with_labels(t, g), g, BraceKind::left)));
  return out;
}

std::optional<GroupMap> find_brace_isomorphism(const Brace& a, const Brace& b) {
  std::optional<GroupMap> found;
  if (a.order() != b.order()) return found;
  for_each_isomorphism(
      a.multiplicative(), b.multiplicative(), [&](const std::vector<Elem>& f) {
        for (Elem x = 0; x < a.order(); ++x)
          for (Elem y = 0; y < a.order(); ++y)
            if (f[a.add(x, y)] != b.add(f[x], f[y])) return true;
        found.emplace(a.multiplicative(), b.multiplicative(), f);
        return false;
      });
  return found;
}

std::vector<std::size_t> brace_isomorphism_classes(
    const std::vector<Brace>& braces) {
  std::vector<std::size_t> cls(braces.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < braces.size(); ++i) {
    std::size_t c = reps.size();
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (find_brace_isomorphism(braces[reps[r]], braces[i])) {
        c = r;
        break;
      }
    if (c == reps.size()) reps.push_back(i);
    cls[i] = c;
  }
  return cls;
}

}  // namespace bracekit
