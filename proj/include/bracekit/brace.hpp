#pragma once

// Left braces and skew left braces as pairs of Cayley tables on one carrier,
// the exhaustive axiom checker, and the constructions built on top of the
// structural decomposition.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bracekit/group.hpp"
#include "bracekit/structure.hpp"

namespace bracekit {

enum class BraceKind { left, skew };

std::string to_string(BraceKind kind);
BraceKind brace_kind_from_string(const std::string& s);

/// Two group structures on {0..n-1} sharing the identity 0. `kind` records
/// the axiom set the brace is meant to satisfy; `verified()` is set only by
/// certify() and the constructors below.
class Brace {
 public:
  Brace(FiniteGroup additive, FiniteGroup multiplicative, BraceKind kind);

  std::size_t order() const { return mul_.order(); }
  Elem add(Elem a, Elem b) const { return add_.mul(a, b); }
  Elem neg(Elem a) const { return add_.inv(a); }
  /// a - b, i.e. a + (-b).
  Elem sub(Elem a, Elem b) const { return add_.mul(a, add_.inv(b)); }
  Elem mul(Elem a, Elem b) const { return mul_.mul(a, b); }
  Elem inv(Elem a) const { return mul_.inv(a); }

  const FiniteGroup& additive() const { return add_; }
  const FiniteGroup& multiplicative() const { return mul_; }
  BraceKind kind() const { return kind_; }
  bool verified() const { return verified_; }
  std::string label(Elem a) const { return mul_.label(a); }

 private:
  friend Brace certify(Brace b);

  FiniteGroup add_;
  FiniteGroup mul_;
  BraceKind kind_;
  bool verified_ = false;
};

using Triple = std::array<Elem, 3>;

struct BraceReport {
  bool additive_group = false;
  bool multiplicative_group = false;
  bool same_identity = false;
  bool additive_commutative = false;
  /// a(b+c) + a = ab + ac
  bool left_axiom = false;
  /// a(b+c) = ab - a + ac
  bool skew_axiom = false;
  /// (b+c)a + a = ba + ca, reported as (a,b,c)
  bool two_sided = false;
  std::string additive_failure;
  std::string multiplicative_failure;
  std::optional<std::array<Elem, 2>> commutativity_witness;
  std::optional<Triple> left_witness;
  std::optional<Triple> skew_witness;
  std::optional<Triple> two_sided_witness;

  bool is_left_brace() const {
    return additive_group && multiplicative_group && same_identity &&
           additive_commutative && left_axiom;
  }
  bool is_skew_brace() const {
    return additive_group && multiplicative_group && same_identity &&
           skew_axiom;
  }
  bool holds(BraceKind k) const {
    return k == BraceKind::left ? is_left_brace() : is_skew_brace();
  }
};

/// Exhaustive check over all n^3 triples.
BraceReport verify_brace(const Brace& b);

/// Verifies `b` against its kind and returns it marked verified; throws
/// VerificationError otherwise.
Brace certify(Brace b);

/// lambda_a(b) = -a + a b, as a map on the additive group.
GroupMap lambda(const Brace& b, Elem a);
/// {a : lambda_a = id}, as a subgroup of the multiplicative group.
Subgroup socle(const Brace& b);

// ---- constructions --------------------------------------------------------

/// a + b = ab on an abelian group.
Brace trivial_brace(const FiniteGroup& a);
/// a + b = ab on a nilpotent group (skew brace of nilpotent type).
Brace trivial_skew_brace(const FiniteGroup& g);
/// h1 + h2 = h1 h2 [h2,h1]^(1/2) on a group of class <= 2 whose derived
/// subgroup has odd order. The result is a two-sided brace and every group
/// automorphism preserves the sum.
Brace class2_brace(const FiniteGroup& g);
/// Brace on N x| H with componentwise sum and semidirect product; each
/// action[h] must be an automorphism of both structures of N. Element (a,h)
/// has index a + |N| h.
Brace semidirect_brace(const Brace& n, const Brace& h,
                       const std::vector<GroupMap>& action);
/// Recursive Sylow-tower construction: class2_brace on the normal Sylow
/// subgroup, a coprime complement, recursion, semidirect combination.
Brace tower_brace(const FiniteGroup& g, std::uint64_t seed = 0);
/// Same recursion with trivial skew braces on the Sylow layers.
Brace tower_skew_brace(const FiniteGroup& g, std::uint64_t seed = 0);

struct Factorization {
  /// coordinates[i] lies in N_{i+1}; their product is the element.
  std::vector<Elem> coordinates;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Greedy factorization: smallest x_1 in N_1 with x_1^-1 g in M_1, recurse.
Factorization factorize(const Decomposition& d, Elem g);
std::vector<Factorization> all_factorizations(const Decomposition& d, Elem g);

/// (x_1...x_k) + (y_1...y_k) = (x_1 + y_1)...(x_k + y_k), where the sum on
/// each factor is x y [y,x]^(1/2) (or x y when `skew`).
Elem factorized_sum(const FiniteGroup& g, const Factorization& x,
                    const Factorization& y, bool skew);

/// Left brace from the decomposition. Requires class <= 2 Sylow subgroups
/// and odd order or abelian Sylow 2-subgroups.
Brace main_brace(const FiniteGroup& g, const Decomposition& d);
/// main_brace restricted to groups of even order (abelian Sylow 2-subgroups).
Brace main_even_brace(const FiniteGroup& g, const Decomposition& d);
/// Skew brace of nilpotent type from the decomposition (no parity condition).
Brace main_skew_brace(const FiniteGroup& g, const Decomposition& d);

/// Multiplicative automorphisms that also preserve the sum.
std::vector<GroupMap> brace_automorphisms(const Brace& b,
                                          std::size_t guard = kAutomorphismGuard);

struct AutPreservationReport {
  std::size_t automorphisms = 0;
  std::size_t preserving = 0;
  /// First failure: index into the automorphism list and the pair (a,b)
  /// with f(a+b) != f(a)+f(b).
  std::optional<std::size_t> witness_map;
  std::optional<std::array<Elem, 2>> witness_pair;
  bool all_preserve() const { return automorphisms == preserving; }
};

/// Checks whether every automorphism of G preserves the sum of B (B's
/// multiplicative table must be G's).
AutPreservationReport check_aut_preservation(const FiniteGroup& g,
                                             const Brace& b,
                                             std::size_t guard = kAutomorphismGuard);

/// Every left brace whose multiplicative group is G, by pulling back each
/// abelian group of order |G| along identity-fixing bijections. Results are
/// deduplicated by table and sorted.
std::vector<Brace> search_left_braces(const FiniteGroup& g,
                                      std::size_t guard = 8);

/// A bijection preserving both operations, if any.
std::optional<GroupMap> find_brace_isomorphism(const Brace& a, const Brace& b);
/// Class index (first representative order) for each brace.
std::vector<std::size_t> brace_isomorphism_classes(const std::vector<Brace>& braces);

/// Invariant factor lists of every abelian group of order n, as prime-power
/// moduli.
std::vector<std::vector<std::size_t>> abelian_group_types(std::size_t n);

}  // namespace bracekit
