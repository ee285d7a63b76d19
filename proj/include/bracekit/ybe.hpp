#pragma once

// Set-theoretic solutions of the Yang-Baxter equation attached to braces,
// the exhaustive braid/involutivity/non-degeneracy checker, and the
// permutation group generated by the sigma maps.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/group.hpp"

namespace bracekit {

inline constexpr std::size_t kPermutationGroupCap = 10000;

/// r(x,y) = (sigma_x(y), gamma_y(x)). Tables are flat: sigma[x*n + y] is
/// sigma_x(y) and gamma[y*n + x] is gamma_y(x).
struct SetSolution {
  std::size_t size = 0;
  std::vector<Elem> sigma;
  std::vector<Elem> gamma;
  std::vector<std::string> labels;

  Elem sigma_at(Elem x, Elem y) const { return sigma[x * size + y]; }
  Elem gamma_at(Elem y, Elem x) const { return gamma[y * size + x]; }
  std::array<Elem, 2> apply(Elem x, Elem y) const {
    return {sigma_at(x, y), gamma_at(y, x)};
  }
};

/// Checks shapes and index ranges; throws InputError.
SetSolution make_solution(std::size_t size, std::vector<Elem> sigma,
                          std::vector<Elem> gamma,
                          std::vector<std::string> labels = {});

/// r(x,y) = (y,x).
SetSolution flip_solution(std::size_t n);

/// sigma_x = lambda_x, gamma_y(x) = sigma^-1_{sigma_x(y)}(x).
SetSolution solution_from_left_brace(const Brace& b);

/// r(a,b) = (lambda_a(b), lambda_a(b)^-1 a b), inverse and products taken in
/// the multiplicative group.
SetSolution solution_from_skew_brace(const Brace& b);

struct YbeReport {
  bool braid = false;
  bool involutive = false;
  bool nondegenerate = false;
  std::optional<std::array<Elem, 3>> braid_witness;
  std::optional<std::array<Elem, 2>> involutive_witness;
  /// "sigma" or "gamma" with the index of the first non-bijective map.
  std::string nondegenerate_failure;
};

/// Exhaustive: braid on all n^3 triples, r^2 = id on all pairs.
YbeReport check_ybe(const SetSolution& s);

struct PermutationGroupReport {
  std::size_t order = 0;
  bool solvable = false;
  std::vector<std::size_t> derived_series_orders;
  /// Present when the order fits the FiniteGroup cap.
  std::optional<FiniteGroup> group;
};

/// Closure of {sigma_x} inside Sym(n). Throws PreconditionError when a map
/// is not a bijection or the closure exceeds `cap`.
PermutationGroupReport permutation_group(const SetSolution& s,
                                         std::size_t cap = kPermutationGroupCap);

}  // namespace bracekit
