#include "bracekit/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bracekit {

namespace {

std::string fmt_elems(std::initializer_list<Elem> es) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (Elem e : es) {
    if (!first) os << ", ";
    os << e;
    first = false;
  }
  os << ')';
  return os.str();
}

std::size_t square_side(std::size_t size) {
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(double(size))));
  if (n * n != size) throw InputError("Cayley table is not square");
  return n;
}

std::vector<Elem> compute_inverses(std::span<const Elem> table,
                                   std::size_t n) {
  std::vector<Elem> inv(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a * n + b] == 0) {
        inv[a] = static_cast<Elem>(b);
        break;
      }
  return inv;
}

}  // namespace

// Builds subgroups from element sets already known to be closed.
class SubgroupBuilder {
 public:
  static Subgroup make(const FiniteGroup& g, std::vector<Elem> elements,
                       std::vector<Elem> gens) {
    return Subgroup(g, std::move(elements), std::move(gens));
  }

  // Picks generators greedily from an ascending, closed element list.
  static Subgroup from_closed(const FiniteGroup& g,
                              std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    Subgroup current = trivial_subgroup(g);
    for (Elem x : elements)
      if (!current.contains(x)) current = join(current, x);
    return make(g, std::move(elements),
                {current.generators().begin(), current.generators().end()});
  }
};

// ---- FiniteGroup ----------------------------------------------------------

AxiomCheck check_group_table(std::span<const Elem> table, std::size_t n) {
  AxiomCheck r;
  auto fail = [&](std::string why, std::vector<Elem> w) {
    r.ok = false;
    r.failure = std::move(why);
    r.witness = std::move(w);
    return r;
  };
  if (n == 0) return fail("empty carrier", {});
  if (table.size() != n * n) return fail("table size is not n*n", {});
  for (std::size_t i = 0; i < n * n; ++i)
    if (table[i] >= n)
      return fail("entry out of range at " +
                      fmt_elems({Elem(i / n), Elem(i % n)}),
                  {Elem(i / n), Elem(i % n)});
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a] != a || table[a * n] != a)
      return fail("element 0 is not a two-sided identity (fails at " +
                      std::to_string(a) + ")",
                  {Elem(a)});
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    bool has_right_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      Elem ab = table[a * n + b];
      if (seen[ab])
        return fail("row " + std::to_string(a) + " is not a permutation",
                    {Elem(a)});
      seen[ab] = 1;
      if (ab == 0) {
        has_right_inverse = true;
        if (table[b * n + a] != 0)
          return fail("inverse of " + std::to_string(a) + " is not two-sided",
                      {Elem(a)});
      }
    }
    if (!has_right_inverse)
      return fail("element " + std::to_string(a) + " has no inverse",
                  {Elem(a)});
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Elem* ra = table.data() + a * n;
    for (std::size_t b = 0; b < n; ++b) {
      const Elem* rab = table.data() + std::size_t(ra[b]) * n;
      const Elem* rb = table.data() + b * n;
      for (std::size_t c = 0; c < n; ++c)
        if (rab[c] != ra[rb[c]])
          return fail("associativity fails at " +
                          fmt_elems({Elem(a), Elem(b), Elem(c)}),
                      {Elem(a), Elem(b), Elem(c)});
    }
  }
  return r;
}

FiniteGroup::FiniteGroup() : data_(std::make_shared<const Data>()) {}

FiniteGroup FiniteGroup::from_table(std::vector<Elem> table,
                                    std::vector<std::string> labels,
                                    std::size_t max_order) {
  std::size_t n = square_side(table.size());
  if (n > max_order)
    throw InputError("group order " + std::to_string(n) +
                     " exceeds the order cap " + std::to_string(max_order));
  AxiomCheck chk = check_group_table(table, n);
  if (!chk.ok) throw InputError("not a group: " + chk.failure);
  return unchecked(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::unchecked(std::vector<Elem> table,
                                   std::vector<std::string> labels) {
  auto d = std::make_shared<Data>();
  d->n = square_side(table.size());
  if (!labels.empty() && labels.size() != d->n)
    throw InputError("label count " + std::to_string(labels.size()) +
                     " does not match group order " + std::to_string(d->n));
  d->inverse = compute_inverses(table, d->n);
  d->table = std::move(table);
  d->labels = std::move(labels);
  return FiniteGroup(std::move(d));
}

std::string FiniteGroup::label(Elem a) const {
  if (a < data_->labels.size()) return data_->labels[a];
  return std::to_string(a);
}

FiniteGroup FiniteGroup::relabeled(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != data_->n)
    throw InputError("label count does not match group order");
  auto d = std::make_shared<Data>(*data_);
  d->labels = std::move(labels);
  return FiniteGroup(std::move(d));
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.data_ == b.data_ || a.data_->table == b.data_->table;
}

// ---- Subgroup -------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent)
    : parent_(std::move(parent)), elements_{0}, member_(parent_.order(), 0) {
  member_[0] = 1;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> elements,
                   std::vector<Elem> generators)
    : parent_(std::move(parent)),
      elements_(std::move(elements)),
      generators_(std::move(generators)),
      member_(parent_.order(), 0) {
  for (Elem e : elements_) member_[e] = 1;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Elem e) { return other.contains(e); });
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent_ == b.parent_ && a.elements_ == b.elements_;
}

namespace {

void require_same_parent(const Subgroup& h, const Subgroup& k) {
  if (!(h.parent() == k.parent()))
    throw PreconditionError("subgroups live in different parent groups");
}

}  // namespace

// ---- GroupMap -------------------------------------------------------------

GroupMap::GroupMap(FiniteGroup source, FiniteGroup target,
                   std::vector<Elem> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.order())
    throw InputError("map table length does not match source order");
  for (Elem e : images_)
    if (e >= target_.order()) throw InputError("map image out of range");
}

GroupMap GroupMap::identity(const FiniteGroup& g) {
  std::vector<Elem> im(g.order());
  std::iota(im.begin(), im.end(), Elem{0});
  return GroupMap(g, g, std::move(im));
}

bool GroupMap::is_homomorphism() const {
  const std::size_t n = source_.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (images_[source_.mul(a, b)] != target_.mul(images_[a], images_[b]))
        return false;
  return true;
}

bool GroupMap::is_bijective() const {
  if (source_.order() != target_.order()) return false;
  std::vector<char> seen(target_.order());
  for (Elem e : images_) {
    if (seen[e]) return false;
    seen[e] = 1;
  }
  return true;
}

bool GroupMap::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Subgroup GroupMap::kernel() const {
  std::vector<Elem> ker;
  for (Elem a = 0; a < source_.order(); ++a)
    if (images_[a] == FiniteGroup::identity) ker.push_back(a);
  auto s = subgroup_from_elements(source_, std::move(ker));
  if (!s) throw PreconditionError("map is not a homomorphism: kernel not closed");
  return *s;
}

Subgroup GroupMap::image() const {
  return closure(target_, images_);
}

Subgroup GroupMap::preimage(const Subgroup& of_target) const {
  if (!(of_target.parent() == target_))
    throw PreconditionError("preimage: subgroup is not in the map's target");
  std::vector<Elem> pre;
  for (Elem a = 0; a < source_.order(); ++a)
    if (of_target.contains(images_[a])) pre.push_back(a);
  return SubgroupBuilder::from_closed(source_, std::move(pre));
}

GroupMap GroupMap::then(const GroupMap& next) const {
  if (!(target_ == next.source_))
    throw PreconditionError("cannot compose maps with mismatched groups");
  std::vector<Elem> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = next.images_[images_[i]];
  return GroupMap(source_, next.target_, std::move(im));
}

GroupMap GroupMap::inverse() const {
  if (!is_bijective()) throw PreconditionError("map is not bijective");
  std::vector<Elem> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = Elem(i);
  return GroupMap(target_, source_, std::move(im));
}

// ---- element arithmetic ---------------------------------------------------

Elem power(const FiniteGroup& g, Elem a, std::int64_t k) {
  if (k < 0) {
    a = g.inv(a);
    k = -k;
  }
  Elem result = FiniteGroup::identity;
  Elem base = a;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem commutator(const FiniteGroup& g, Elem a, Elem b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

Elem conjugate(const FiniteGroup& g, Elem x, Elem a) {
  return g.mul(g.mul(x, a), g.inv(x));
}

unsigned element_order(const FiniteGroup& g, Elem a) {
  if (a >= g.order()) throw InputError("element index out of range");
  unsigned o = 1;
  for (Elem x = a; x != FiniteGroup::identity; x = g.mul(x, a)) ++o;
  return o;
}

Elem odd_sqrt(const FiniteGroup& g, Elem a) {
  unsigned o = element_order(g, a);
  if (o % 2 == 0)
    throw PreconditionError("element " + g.label(a) + " has even order " +
                            std::to_string(o) + "; no odd square root");
  return power(g, a, (o + 1) / 2);
}

// ---- subgroups ------------------------------------------------------------

Subgroup closure(const FiniteGroup& g, std::span<const Elem> gens) {
  const std::size_t n = g.order();
  std::vector<Elem> clean;
  for (Elem x : gens) {
    if (x >= n)
      throw InputError("element index " + std::to_string(x) +
                       " out of range for group of order " +
                       std::to_string(n));
    if (x != FiniteGroup::identity &&
        std::find(clean.begin(), clean.end(), x) == clean.end())
      clean.push_back(x);
  }
  std::vector<char> in(n, 0);
  std::vector<Elem> elems{FiniteGroup::identity};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem x : clean) {
      Elem y = g.mul(elems[i], x);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return SubgroupBuilder::make(g, std::move(elems), std::move(clean));
}

Subgroup whole(const FiniteGroup& g) {
  auto gens = generating_set(g);
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return SubgroupBuilder::make(g, std::move(all), std::move(gens));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g); }

Subgroup join(const Subgroup& h, Elem x) {
  if (h.contains(x)) return h;
  std::vector<Elem> gens(h.generators().begin(), h.generators().end());
  gens.push_back(x);
  return closure(h.parent(), gens);
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  Subgroup r = h;
  for (Elem x : k.generators()) r = join(r, x);
  return r;
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  std::vector<Elem> common;
  for (Elem e : h.elements())
    if (k.contains(e)) common.push_back(e);
  return SubgroupBuilder::from_closed(h.parent(), std::move(common));
}

Subgroup conjugate(const Subgroup& h, Elem x) {
  const FiniteGroup& g = h.parent();
  std::vector<Elem> elems;
  elems.reserve(h.order());
  for (Elem e : h.elements()) elems.push_back(conjugate(g, x, e));
  std::sort(elems.begin(), elems.end());
  std::vector<Elem> gens;
  for (Elem e : h.generators()) gens.push_back(conjugate(g, x, e));
  return SubgroupBuilder::make(g, std::move(elems), std::move(gens));
}

std::optional<Subgroup> subgroup_from_elements(const FiniteGroup& g,
                                               std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty() || elements.front() != FiniteGroup::identity)
    return std::nullopt;
  if (elements.back() >= g.order()) return std::nullopt;
  std::vector<char> in(g.order(), 0);
  for (Elem e : elements) in[e] = 1;
  for (Elem a : elements)
    for (Elem b : elements)
      if (!in[g.mul(a, b)]) return std::nullopt;
  return SubgroupBuilder::from_closed(g, std::move(elements));
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<unsigned> ord(n);
  for (Elem a = 0; a < n; ++a) ord[a] = element_order(g, a);
  std::vector<Elem> candidates(n);
  std::iota(candidates.begin(), candidates.end(), Elem{0});
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Elem a, Elem b) { return ord[a] > ord[b]; });

  Subgroup current = trivial_subgroup(g);
  const bool exhaustive = n <= 256;
  while (current.order() < n) {
    if (!exhaustive) {
      for (Elem x : candidates)
        if (!current.contains(x)) {
          current = join(current, x);
          break;
        }
      continue;
    }
    std::optional<Subgroup> best;
    for (Elem x : candidates) {
      if (current.contains(x)) continue;
      Subgroup next = join(current, x);
      if (!best || next.order() > best->order()) best = std::move(next);
      if (best->order() == n) break;
    }
    current = std::move(*best);
  }
  return {current.generators().begin(), current.generators().end()};
}

bool is_normal(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  if (!h.is_subset_of(k))
    throw PreconditionError("is_normal: H is not contained in K");
  const FiniteGroup& g = h.parent();
  for (Elem x : k.generators())
    for (Elem a : h.generators())
      if (!h.contains(conjugate(g, x, a))) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

Subgroup centralizer(const Subgroup& k, std::span<const Elem> s) {
  const FiniteGroup& g = k.parent();
  std::vector<Elem> out;
  for (Elem x : k.elements()) {
    bool ok = true;
    for (Elem y : s) {
      if (y >= g.order()) throw InputError("element index out of range");
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return SubgroupBuilder::from_closed(g, std::move(out));
}

Subgroup center(const Subgroup& k) { return centralizer(k, k.generators()); }

Subgroup center(const FiniteGroup& g) { return center(whole(g)); }

Subgroup normalizer(const Subgroup& k, const Subgroup& h) {
  require_same_parent(h, k);
  const FiniteGroup& g = k.parent();
  std::vector<Elem> out;
  for (Elem x : k.elements()) {
    bool ok = true;
    for (Elem a : h.generators())
      if (!h.contains(conjugate(g, x, a))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return SubgroupBuilder::from_closed(g, std::move(out));
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const FiniteGroup& g = a.parent();
  Subgroup r = trivial_subgroup(g);
  for (Elem x : a.elements())
    for (Elem y : b.elements()) {
      Elem c = commutator(g, x, y);
      if (!r.contains(c)) r = join(r, c);
    }
  return r;
}

Subgroup derived_subgroup(const Subgroup& h) {
  return commutator_subgroup(h, h);
}

std::vector<Subgroup> derived_series(const Subgroup& h) {
  std::vector<Subgroup> series{h};
  while (!series.back().is_trivial()) {
    Subgroup next = derived_subgroup(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const Subgroup& h) {
  std::vector<Subgroup> series{h};
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back(), h);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<unsigned> nilpotency_class(const Subgroup& h) {
  auto series = lower_central_series(h);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<unsigned>(series.size() - 1);
}

std::optional<unsigned> nilpotency_class(const FiniteGroup& g) {
  return nilpotency_class(whole(g));
}

bool is_nilpotent(const Subgroup& h) { return nilpotency_class(h).has_value(); }
bool is_nilpotent(const FiniteGroup& g) { return is_nilpotent(whole(g)); }

bool is_solvable(const Subgroup& h) {
  return derived_series(h).back().is_trivial();
}
bool is_solvable(const FiniteGroup& g) { return is_solvable(whole(g)); }

Subgroup sylow_subgroup(const Subgroup& k, unsigned p) {
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  const FiniteGroup& g = k.parent();
  const std::uint64_t target = p_part(k.order(), p);
  Subgroup sylow = trivial_subgroup(g);
  while (sylow.order() < target) {
    // Some x in N_K(P) \ P has x^p in P, so P<x> is a p-group of order p|P|.
    Subgroup norm = normalizer(k, sylow);
    bool grown = false;
    for (Elem x : norm.elements()) {
      if (sylow.contains(x)) continue;
      if (sylow.contains(power(g, x, p))) {
        sylow = join(sylow, x);
        grown = true;
        break;
      }
    }
    if (!grown)
      throw VerificationError("sylow_subgroup: no p-element in normalizer");
  }
  return sylow;
}

std::vector<Elem> product_set(std::span<const Elem> h,
                              std::span<const Elem> k,
                              const FiniteGroup& g) {
  std::vector<char> in(g.order(), 0);
  for (Elem a : h)
    for (Elem b : k) in[g.mul(a, b)] = 1;
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<Elem> product_set(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  return product_set(h.elements(), k.elements(), h.parent());
}

bool permutes(const Subgroup& h, const Subgroup& k) {
  return product_set(h, k) == product_set(k, h);
}

// ---- maps and derived groups ----------------------------------------------

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!(n.parent() == g))
    throw PreconditionError("quotient: subgroup is not in this group");
  if (!is_normal(n, whole(g)))
    throw PreconditionError("quotient: subgroup is not normal");
  const std::size_t order = g.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset(order, kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] != kUnset) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n.elements()) coset[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = coset[g.mul(reps[a], reps[b])];
  if (g.has_labels())
    for (Elem r : reps) labels.push_back(g.label(r) + "N");
  FiniteGroup qg = FiniteGroup::unchecked(std::move(table), std::move(labels));
  return Quotient{qg, GroupMap(g, qg, std::move(coset))};
}

Elem Embedding::from_parent(Elem g) const {
  auto els = subgroup.elements();
  auto it = std::lower_bound(els.begin(), els.end(), g);
  if (it == els.end() || *it != g)
    throw PreconditionError("element is not in the embedded subgroup");
  return static_cast<Elem>(it - els.begin());
}

Subgroup Embedding::lift(const Subgroup& inside) const {
  if (!(inside.parent() == group))
    throw PreconditionError("lift: subgroup is not in the embedded group");
  std::vector<Elem> elems, gens;
  for (Elem e : inside.elements()) elems.push_back(to_parent(e));
  for (Elem e : inside.generators()) gens.push_back(to_parent(e));
  std::sort(elems.begin(), elems.end());
  return SubgroupBuilder::make(subgroup.parent(), std::move(elems),
                               std::move(gens));
}

Subgroup Embedding::restrict(const Subgroup& of_parent) const {
  if (!of_parent.is_subset_of(subgroup))
    throw PreconditionError("restrict: subgroup is not contained in the embedding");
  std::vector<Elem> elems, gens;
  for (Elem e : of_parent.elements()) elems.push_back(from_parent(e));
  for (Elem e : of_parent.generators()) gens.push_back(from_parent(e));
  std::sort(elems.begin(), elems.end());
  return SubgroupBuilder::make(group, std::move(elems), std::move(gens));
}

Embedding induced_group(const Subgroup& k) {
  const FiniteGroup& g = k.parent();
  auto els = k.elements();
  const std::size_t m = els.size();
  std::vector<Elem> pos(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) pos[els[i]] = Elem(i);
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = pos[g.mul(els[a], els[b])];
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Elem e : els) labels.push_back(g.label(e));
  return Embedding{FiniteGroup::unchecked(std::move(table), std::move(labels)),
                   k};
}

void for_each_isomorphism(
    const FiniteGroup& g, const FiniteGroup& h,
    const std::function<bool(const std::vector<Elem>&)>& visit) {
  const std::size_t n = g.order();
  if (h.order() != n) return;
  const std::vector<Elem> gens = generating_set(g);
  const std::size_t k = gens.size();
  if (k == 0) {
    visit(std::vector<Elem>{0});
    return;
  }

  std::vector<unsigned> h_order(n);
  for (Elem a = 0; a < n; ++a) h_order[a] = element_order(h, a);
  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    unsigned o = element_order(g, gens[i]);
    for (Elem a = 0; a < n; ++a)
      if (h_order[a] == o) candidates[i].push_back(a);
  }

  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> images(k);
  std::vector<Elem> map(n);
  std::vector<char> used(n);
  std::vector<Elem> queue;

  // Extends gens[0..m) -> images[0..m) along the Cayley graph; fails on an
  // inconsistent edge or a collision.
  auto extend = [&](std::size_t m) -> bool {
    std::fill(map.begin(), map.end(), kUnset);
    std::fill(used.begin(), used.end(), 0);
    queue.assign(1, FiniteGroup::identity);
    map[0] = 0;
    used[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Elem x = queue[qi];
      for (std::size_t j = 0; j < m; ++j) {
        Elem y = g.mul(x, gens[j]);
        Elem img = h.mul(map[x], images[j]);
        if (map[y] == kUnset) {
          if (used[img]) return false;
          map[y] = img;
          used[img] = 1;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    return true;
  };

  bool keep_going = true;
  std::function<void(std::size_t)> search = [&](std::size_t level) {
    for (Elem c : candidates[level]) {
      if (!keep_going) return;
      images[level] = c;
      if (!extend(level + 1)) continue;
      if (level + 1 == k) {
        keep_going = visit(map);
      } else {
        search(level + 1);
      }
    }
  };
  search(0);
}

std::optional<GroupMap> find_isomorphism(const FiniteGroup& g,
                                         const FiniteGroup& h) {
  std::optional<GroupMap> found;
  for_each_isomorphism(g, h, [&](const std::vector<Elem>& m) {
    found.emplace(g, h, m);
    return false;
  });
  return found;
}

std::vector<GroupMap> automorphism_group(const FiniteGroup& g,
                                         std::size_t guard) {
  if (g.order() > guard)
    throw PreconditionError("group order " + std::to_string(g.order()) +
                            " exceeds the automorphism guard " +
                            std::to_string(guard));
  std::vector<GroupMap> out;
  for_each_isomorphism(g, g, [&](const std::vector<Elem>& m) {
    out.emplace_back(g, g, m);
    return true;
  });
  return out;
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<GroupMap>& action) {
  const std::size_t nn = n.order(), nh = h.order();
  if (action.size() != nh)
    throw InputError("action must assign an automorphism to every element");
  for (Elem x = 0; x < nh; ++x) {
    const GroupMap& phi = action[x];
    if (!(phi.source() == n) || !(phi.target() == n))
      throw InputError("action maps must be endomorphisms of the normal factor");
    if (!phi.is_bijective() || !phi.is_homomorphism())
      throw PreconditionError("action of " + h.label(x) +
                              " is not an automorphism");
  }
  for (Elem x = 0; x < nh; ++x)
    for (Elem y = 0; y < nh; ++y)
      if (!(action[h.mul(x, y)] == action[y].then(action[x])))
        throw PreconditionError("action is not a homomorphism at (" +
                                h.label(x) + ", " + h.label(y) + ")");
  const std::size_t order = nn * nh;
  std::vector<Elem> table(order * order);
  for (std::size_t h1 = 0; h1 < nh; ++h1)
    for (std::size_t a1 = 0; a1 < nn; ++a1)
      for (std::size_t h2 = 0; h2 < nh; ++h2)
        for (std::size_t a2 = 0; a2 < nn; ++a2) {
          Elem a = n.mul(Elem(a1), action[h1](Elem(a2)));
          Elem b = h.mul(Elem(h1), Elem(h2));
          table[(a1 + nn * h1) * order + (a2 + nn * h2)] = Elem(a + nn * b);
        }
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t y = 0; y < nh; ++y)
    for (std::size_t x = 0; x < nn; ++x)
      labels.push_back("(" + n.label(Elem(x)) + "," + h.label(Elem(y)) + ")");
  return FiniteGroup::unchecked(std::move(table), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  return semidirect_product(
      a, b, std::vector<GroupMap>(b.order(), GroupMap::identity(a)));
}

// ---- integers -------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(static_cast<unsigned>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t r = 1;
  while (n && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

}  // namespace bracekit
