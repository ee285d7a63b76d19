#include "bracekit/ybe.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bracekit {

namespace {

bool is_bijection(const Elem* row, std::size_t n) {
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (row[i] >= n || seen[row[i]]) return false;
    seen[row[i]] = 1;
  }
  return true;
}

std::vector<std::string> brace_labels(const Brace& b) {
  auto l = b.multiplicative().labels();
  return std::vector<std::string>(l.begin(), l.end());
}

}  // namespace

SetSolution make_solution(std::size_t size, std::vector<Elem> sigma,
                          std::vector<Elem> gamma,
                          std::vector<std::string> labels) {
  if (size == 0) throw InputError("solution size must be positive");
  if (sigma.size() != size * size || gamma.size() != size * size)
    throw InputError("solution tables must have size*size entries");
  for (Elem v : sigma)
    if (v >= size) throw InputError("sigma entry out of range");
  for (Elem v : gamma)
    if (v >= size) throw InputError("gamma entry out of range");
  if (!labels.empty() && labels.size() != size)
    throw InputError("solution labels must match the size");
  return SetSolution{size, std::move(sigma), std::move(gamma), std::move(labels)};
}

SetSolution flip_solution(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = Elem(y);
  return make_solution(n, t, t);
}

SetSolution solution_from_left_brace(const Brace& b) {
  if (!b.verified() || b.kind() != BraceKind::left)
    throw PreconditionError(
        "solution_from_left_brace: input is not a verified left brace");
  const std::size_t n = b.order();
  std::vector<Elem> sigma(n * n), sigma_inv(n * n), gamma(n * n);
  for (Elem x = 0; x < n; ++x) {
    const Elem neg_x = b.neg(x);
    for (Elem y = 0; y < n; ++y) {
      Elem v = b.add(neg_x, b.mul(x, y));
      sigma[x * n + y] = v;
      sigma_inv[x * n + v] = y;
    }
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      gamma[y * n + x] = sigma_inv[sigma[x * n + y] * n + x];
  return SetSolution{n, std::move(sigma), std::move(gamma), brace_labels(b)};
}

SetSolution solution_from_skew_brace(const Brace& b) {
  if (!b.verified())
    throw PreconditionError(
        "solution_from_skew_brace: input is not a verified brace");
  // A left brace is a skew brace with abelian additive group.
  if (!verify_brace(b).is_skew_brace())
    throw PreconditionError(
        "solution_from_skew_brace: input is not a skew brace");
  const std::size_t n = b.order();
  std::vector<Elem> sigma(n * n), gamma(n * n);
  for (Elem a = 0; a < n; ++a) {
    const Elem neg_a = b.neg(a);
    for (Elem c = 0; c < n; ++c) {
      Elem l = b.add(neg_a, b.mul(a, c));
      sigma[a * n + c] = l;
      gamma[c * n + a] = b.mul(b.inv(l), b.mul(a, c));
    }
  }
  return SetSolution{n, std::move(sigma), std::move(gamma), brace_labels(b)};
}

YbeReport check_ybe(const SetSolution& s) {
  YbeReport r;
  const std::size_t n = s.size;

  r.nondegenerate = true;
  for (Elem x = 0; x < n && r.nondegenerate; ++x) {
    if (!is_bijection(&s.sigma[x * n], n)) {
      r.nondegenerate = false;
      r.nondegenerate_failure = "sigma_" + std::to_string(x);
    } else if (!is_bijection(&s.gamma[x * n], n)) {
      r.nondegenerate = false;
      r.nondegenerate_failure = "gamma_" + std::to_string(x);
    }
  }

  r.involutive = true;
  for (Elem x = 0; x < n && r.involutive; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto [u, v] = s.apply(x, y);
      auto [p, q] = s.apply(u, v);
      if (p != x || q != y) {
        r.involutive = false;
        r.involutive_witness = std::array<Elem, 2>{x, y};
        break;
      }
    }

  r.braid = true;
  for (Elem x = 0; x < n && r.braid; ++x)
    for (Elem y = 0; y < n && r.braid; ++y) {
      auto [x1, y1] = s.apply(x, y);
      for (Elem z = 0; z < n; ++z) {
        // r12 r23 r12
        auto [y2, z2] = s.apply(y1, z);
        auto [x3, y3] = s.apply(x1, y2);
        // r23 r12 r23
        auto [b1, c1] = s.apply(y, z);
        auto [a2, b2] = s.apply(x, b1);
        auto [b3, c3] = s.apply(b2, c1);
        if (x3 != a2 || y3 != b3 || z2 != c3) {
          r.braid = false;
          r.braid_witness = std::array<Elem, 3>{x, y, z};
          break;
        }
      }
    }
  return r;
}

PermutationGroupReport permutation_group(const SetSolution& s,
                                         std::size_t cap) {
  using Perm = std::vector<std::uint16_t>;
  const std::size_t n = s.size;
  if (n > 65535) throw PreconditionError("permutation_group: set too large");
  auto compose = [n](const Perm& a, const Perm& b) {  // a after b
    Perm c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[b[i]];
    return c;
  };
  auto inverse = [n](const Perm& a) {
    Perm c(n);
    for (std::size_t i = 0; i < n; ++i) c[a[i]] = std::uint16_t(i);
    return c;
  };
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = std::uint16_t(i);

  std::set<Perm> gen_set;
  for (Elem x = 0; x < n; ++x) {
    if (!is_bijection(&s.sigma[x * n], n))
      throw PreconditionError("permutation_group: sigma_" + std::to_string(x) +
                              " is not a bijection");
    Perm p(s.sigma.begin() + x * n, s.sigma.begin() + (x + 1) * n);
    if (p != id) gen_set.insert(std::move(p));
  }

  auto close = [&](const std::vector<Perm>& gens) {
    std::set<Perm> found{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& x : frontier)
        for (const Perm& g : gens) {
          Perm y = compose(x, g);
          if (found.insert(y).second) {
            if (found.size() > cap)
              throw PreconditionError(
                  "permutation_group: closure exceeds the order cap " +
                  std::to_string(cap));
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    return found;
  };

  std::vector<Perm> gens(gen_set.begin(), gen_set.end());
  std::set<Perm> elements = close(gens);

  PermutationGroupReport r;
  r.order = elements.size();
  r.derived_series_orders.push_back(r.order);

  // Derived series: K' is the normal closure in K of the commutators of K's
  // generators.
  std::vector<Perm> k_gens = gens;
  std::size_t k_order = r.order;
  while (k_order > 1) {
    std::set<Perm> comm;
    for (const Perm& a : k_gens)
      for (const Perm& b : k_gens) {
        Perm c = compose(compose(inverse(a), inverse(b)), compose(a, b));
        if (c != id) comm.insert(std::move(c));
      }
    std::vector<Perm> d_gens(comm.begin(), comm.end());
    std::set<Perm> d = close(d_gens);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Perm& g : k_gens) {
        Perm gi = inverse(g);
        for (std::size_t i = 0; i < d_gens.size() && !grew; ++i) {
          Perm c = compose(compose(gi, d_gens[i]), g);
          if (!d.count(c)) {
            d_gens.push_back(std::move(c));
            d = close(d_gens);
            grew = true;
          }
        }
        if (grew) break;
      }
    }
    if (d.size() == k_order) break;
    k_order = d.size();
    k_gens = std::move(d_gens);
    r.derived_series_orders.push_back(k_order);
  }
  r.solvable = r.derived_series_orders.back() == 1;

  if (r.order <= kMaxGroupOrder) {
    std::vector<Perm> elems(elements.begin(), elements.end());  // id first
    std::map<Perm, Elem> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], Elem(i));
    const std::size_t m = elems.size();
    std::vector<Elem> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        table[a * m + b] = index.at(compose(elems[a], elems[b]));
    r.group = FiniteGroup::unchecked(std::move(table));
  }
  return r;
}

}  // namespace bracekit
