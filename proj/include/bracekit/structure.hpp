#pragma once

// Structural machinery for finite solvable groups: Fitting subgroups, Sylow
// systems and their normalizers, coprime complements, Sylow towers and the
// nilpotent-factor decomposition that drives the main brace construction.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bracekit/group.hpp"

namespace bracekit {

/// Largest normal p-subgroup of K.
Subgroup p_core(const Subgroup& k, unsigned p);

/// Largest normal nilpotent subgroup of K, as the product of its p-cores.
/// Throws PreconditionError if K is not solvable.
Subgroup fitting_subgroup(const Subgroup& k);
Subgroup fitting_subgroup(const FiniteGroup& g);

/// A Sylow system of H: one Sylow subgroup per entry of `primes` (trivial
/// for primes not dividing |H|), pairwise permuting. `seed` conjugates the
/// base system by the seed-th element of H (mod |H|).
std::vector<Subgroup> sylow_system(const Subgroup& h,
                                   std::span<const unsigned> primes,
                                   std::uint64_t seed = 0);

/// Intersection of the normalizers in K of every member of `system`.
Subgroup system_normalizer(const Subgroup& k, std::span<const Subgroup> system);

/// A complement to the normal subgroup N in G when gcd(|N|, |G:N|) = 1.
/// `seed` rotates the candidate order, giving alternative complements.
Subgroup schur_zassenhaus_complement(const Subgroup& g, const Subgroup& n,
                                     std::uint64_t seed = 0);

struct SylowTower {
  /// {1} = G_0 < G_1 < ... < G_n = G, each normal in G.
  std::vector<Subgroup> series;
  /// primes[i] is the prime of G_{i+1}/G_i.
  std::vector<unsigned> primes;
};

std::optional<SylowTower> sylow_tower(const FiniteGroup& g);

struct SylowInfo {
  unsigned prime = 0;
  Subgroup subgroup;
  std::optional<unsigned> nilpotency_class;
  bool normal = false;
  bool abelian = false;
};

/// One Sylow subgroup per prime divisor of |G|, with class and normality.
std::vector<SylowInfo> sylow_summary(const FiniteGroup& g);

/// Throws PreconditionError unless G is solvable and every Sylow subgroup
/// has nilpotency class at most two.
void require_class_two_sylows(const FiniteGroup& g);

struct Decomposition {
  FiniteGroup group;
  std::size_t k = 1;
  std::vector<Subgroup> N;  // k nilpotent factors
  std::vector<Subgroup> M;  // k+1 entries, M[0] = G, M[k] = {1}
  std::vector<Subgroup> H;  // auxiliary subgroups, one per non-nilpotent step
  std::vector<std::vector<Subgroup>> systems;  // Sylow system of each H[i]
  std::vector<Subgroup> B;  // product of the derived subgroups of a system
  std::vector<unsigned> primes;
  std::uint64_t seed = 0;
};

/// Builds N_1..N_k and G = M_0 > M_1 > ... > M_k = {1}: each step takes
/// H = preimage of Z(F(M/F(M))), N = H', and M_next = the normalizer in M of
/// a Sylow system of H, until M is nilpotent.
Decomposition decompose(const FiniteGroup& g, std::uint64_t seed = 0);

struct DecompositionReport {
  bool chain = true;          // M_0 = G >= M_1 >= ... >= M_k = {1}
  bool products = true;       // (i)   G = N_1...N_i M_i
  bool factors = true;        // (ii)  M_{i-1} = N_i M_i
  bool normal_factors = true; // (iii) N_i normal in M_{i-1}, N_i nilpotent
  bool central_layers = true; // (iv)  T_i normal in M_i, central in <F(M_{i-1}), F(M_i)>
  std::vector<std::string> failures;

  bool ok() const {
    return chain && products && factors && normal_factors && central_layers;
  }
};

DecompositionReport verify_decomposition(const Decomposition& d);

}  // namespace bracekit
