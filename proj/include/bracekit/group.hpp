#pragma once

// Finite groups stored as Cayley tables, together with the subgroup-level
// computations used by every construction in the library.
//
// Conventions:
//  - element 0 is always the identity;
//  - subgroup element lists are sorted ascending;
//  - commutators are [a,b] = a^-1 b^-1 a b.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bracekit/errors.hpp"

namespace bracekit {

using Elem = std::uint32_t;

inline constexpr std::size_t kMaxGroupOrder = 2048;
inline constexpr std::size_t kAutomorphismGuard = 128;

/// Outcome of an exhaustive table check. `witness` holds the offending
/// elements (a triple for associativity, a single element otherwise).
struct AxiomCheck {
  bool ok = true;
  std::string failure;
  std::vector<Elem> witness;
};

/// Checks that a row-major n*n table is a group with identity 0.
/// Runs the full O(n^3) associativity sweep.
AxiomCheck check_group_table(std::span<const Elem> table, std::size_t n);

/// Immutable finite group. Copies share the underlying table.
class FiniteGroup {
 public:
  static constexpr Elem identity = 0;

  /// The one-element group.
  FiniteGroup();

  /// Validates the table (throws InputError naming the failed axiom and a
  /// witness) and rejects orders above `max_order`.
  static FiniteGroup from_table(std::vector<Elem> table,
                                std::vector<std::string> labels = {},
                                std::size_t max_order = kMaxGroupOrder);

  /// Skips the axiom sweep. Only for tables produced by trusted internal
  /// constructors; the table must still be square.
  static FiniteGroup unchecked(std::vector<Elem> table,
                               std::vector<std::string> labels = {});

  std::size_t order() const { return data_->n; }
  Elem mul(Elem a, Elem b) const { return data_->table[a * data_->n + b]; }
  Elem inv(Elem a) const { return data_->inverse[a]; }
  std::span<const Elem> table() const { return data_->table; }
  std::span<const Elem> row(Elem a) const {
    return std::span<const Elem>(data_->table).subspan(a * data_->n, data_->n);
  }

  bool has_labels() const { return !data_->labels.empty(); }
  std::span<const std::string> labels() const { return data_->labels; }
  /// Display label, or the decimal index when the group carries none.
  std::string label(Elem a) const;

  /// Returns a copy carrying different labels (same table).
  FiniteGroup relabeled(std::vector<std::string> labels) const;

  bool shares_table_with(const FiniteGroup& other) const {
    return data_ == other.data_;
  }
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    std::size_t n = 1;
    std::vector<Elem> table{0};
    std::vector<Elem> inverse{0};
    std::vector<std::string> labels;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// A subgroup of a parent FiniteGroup: sorted element list plus generators.
class Subgroup {
 public:
  /// The trivial subgroup of `parent`.
  explicit Subgroup(FiniteGroup parent);

  const FiniteGroup& parent() const { return parent_; }
  std::span<const Elem> elements() const { return elements_; }
  std::span<const Elem> generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Elem a) const { return a < member_.size() && member_[a]; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return elements_.size() == parent_.order(); }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  friend class SubgroupBuilder;
  Subgroup(FiniteGroup parent, std::vector<Elem> elements,
           std::vector<Elem> generators);

  FiniteGroup parent_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
  std::vector<char> member_;
};

/// Homomorphism-shaped map between two finite groups (the law is checked
/// on demand, not at construction).
class GroupMap {
 public:
  GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Elem> images);
  static GroupMap identity(const FiniteGroup& g);

  Elem operator()(Elem a) const { return images_[a]; }
  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  std::span<const Elem> images() const { return images_; }

  bool is_homomorphism() const;
  bool is_bijective() const;
  bool is_identity() const;
  Subgroup kernel() const;
  Subgroup image() const;
  Subgroup preimage(const Subgroup& of_target) const;
  /// `next` after `this`.
  GroupMap then(const GroupMap& next) const;
  GroupMap inverse() const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.images_ == b.images_;
  }

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> images_;
};

/// A subgroup re-indexed as a standalone group: element i of `group` is
/// `subgroup.elements()[i]`.
struct Embedding {
  FiniteGroup group;
  Subgroup subgroup;

  Elem to_parent(Elem a) const { return subgroup.elements()[a]; }
  Elem from_parent(Elem g) const;
  /// Image in the parent of a subgroup of `group`.
  Subgroup lift(const Subgroup& inside) const;
  /// A parent subgroup contained in `subgroup`, re-indexed into `group`.
  Subgroup restrict(const Subgroup& of_parent) const;
};

struct Quotient {
  FiniteGroup group;
  GroupMap projection;
};

// ---- element arithmetic ---------------------------------------------------

Elem power(const FiniteGroup& g, Elem a, std::int64_t k);
Elem commutator(const FiniteGroup& g, Elem a, Elem b);
/// x a x^-1
Elem conjugate(const FiniteGroup& g, Elem x, Elem a);
unsigned element_order(const FiniteGroup& g, Elem a);
/// The unique square root of an odd-order element inside the cyclic group it
/// generates: a^((o+1)/2). Throws PreconditionError for even order.
Elem odd_sqrt(const FiniteGroup& g, Elem a);

// ---- subgroups ------------------------------------------------------------

Subgroup closure(const FiniteGroup& g, std::span<const Elem> gens);
Subgroup whole(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup join(const Subgroup& h, Elem x);
Subgroup join(const Subgroup& h, const Subgroup& k);
Subgroup intersect(const Subgroup& h, const Subgroup& k);
/// x H x^-1
Subgroup conjugate(const Subgroup& h, Elem x);
/// Returns nullopt unless `elements` is a subgroup.
std::optional<Subgroup> subgroup_from_elements(const FiniteGroup& g,
                                               std::vector<Elem> elements);
/// Small generating set (greedy, largest closure first for small groups).
std::vector<Elem> generating_set(const FiniteGroup& g);

bool is_normal(const Subgroup& h, const Subgroup& k);
bool is_abelian(const Subgroup& h);
bool is_abelian(const FiniteGroup& g);
Subgroup center(const Subgroup& k);
Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const Subgroup& k, std::span<const Elem> s);
Subgroup normalizer(const Subgroup& k, const Subgroup& h);

/// [A,B], generated by all [a,b].
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const Subgroup& h);
std::vector<Subgroup> derived_series(const Subgroup& h);
std::vector<Subgroup> lower_central_series(const Subgroup& h);
/// nullopt when `h` is not nilpotent; 0 for the trivial group.
std::optional<unsigned> nilpotency_class(const Subgroup& h);
std::optional<unsigned> nilpotency_class(const FiniteGroup& g);
bool is_nilpotent(const Subgroup& h);
bool is_nilpotent(const FiniteGroup& g);
bool is_solvable(const Subgroup& h);
bool is_solvable(const FiniteGroup& g);

/// Sylow p-subgroup of K; the trivial subgroup when p does not divide |K|.
Subgroup sylow_subgroup(const Subgroup& k, unsigned p);

std::vector<Elem> product_set(const Subgroup& h, const Subgroup& k);
std::vector<Elem> product_set(std::span<const Elem> h, std::span<const Elem> k,
                              const FiniteGroup& g);
bool permutes(const Subgroup& h, const Subgroup& k);

// ---- maps and derived groups ----------------------------------------------

Quotient quotient(const FiniteGroup& g, const Subgroup& n);
Embedding induced_group(const Subgroup& k);

/// Calls `visit` with the image table of every isomorphism g -> h found by
/// backtracking over images of a generating set. Stops when `visit` returns
/// false.
void for_each_isomorphism(
    const FiniteGroup& g, const FiniteGroup& h,
    const std::function<bool(const std::vector<Elem>&)>& visit);
std::optional<GroupMap> find_isomorphism(const FiniteGroup& g,
                                         const FiniteGroup& h);
/// All automorphisms; throws PreconditionError above `guard`.
std::vector<GroupMap> automorphism_group(const FiniteGroup& g,
                                         std::size_t guard = kAutomorphismGuard);

/// N x| H with (a1,h1)(a2,h2) = (a1 * action[h1](a2), h1 h2).
/// Element (a,h) has index a + |N| h.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<GroupMap>& action);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// ---- integers -------------------------------------------------------------

bool is_prime(std::uint64_t n);
/// Distinct prime divisors, ascending.
std::vector<unsigned> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, unsigned p);

}  // namespace bracekit
