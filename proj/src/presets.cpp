#include "bracekit/presets.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

namespace bracekit::presets {

namespace {

// Builds a Cayley table from an explicit element list; `elements[0]` must be
// the identity.
template <typename T, typename Mul, typename Label>
FiniteGroup from_elements(const std::vector<T>& elements, Mul mul,
                          Label label) {
  const std::size_t n = elements.size();
  std::map<T, Elem> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], Elem(i));
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = index.at(mul(elements[a], elements[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const T& e : elements) labels.push_back(label(e));
  return FiniteGroup::unchecked(std::move(table), std::move(labels));
}

using Perm = std::vector<unsigned>;

Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (unsigned i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    for (unsigned j = i; !done[j]; j = p[j]) {
      done[j] = 1;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string tuple_label(const std::vector<std::size_t>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + ")";
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  if (n > kMaxGroupOrder) throw InputError("cyclic group order exceeds the cap");
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = Elem((a + b) % n);
  }
  return FiniteGroup::unchecked(std::move(table), std::move(labels));
}

FiniteGroup abelian(const std::vector<std::size_t>& moduli) {
  std::size_t n = 1;
  for (std::size_t m : moduli) {
    if (m == 0) throw InputError("abelian group moduli must be positive");
    n *= m;
    if (n > kMaxGroupOrder) throw InputError("abelian group order exceeds the cap");
  }
  auto decode = [&](std::size_t x) {
    std::vector<std::size_t> c(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      c[i] = x % moduli[i];
      x /= moduli[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = moduli.size(); i-- > 0;) x = x * moduli[i] + c[i];
    return x;
  };
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto ca = decode(a);
    labels[a] = tuple_label(ca);
    for (std::size_t b = 0; b < n; ++b) {
      auto cb = decode(b);
      for (std::size_t i = 0; i < ca.size(); ++i)
        cb[i] = (ca[i] + cb[i]) % moduli[i];
      table[a * n + b] = Elem(encode(cb));
    }
  }
  return FiniteGroup::unchecked(std::move(table), std::move(labels));
}

FiniteGroup dihedral(std::size_t order) {
  if (order < 2 || order % 2)
    throw InputError("dihedral group order must be even and at least 2");
  if (order > kMaxGroupOrder) throw InputError("dihedral group order exceeds the cap");
  const std::size_t n = order / 2;
  std::vector<Elem> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string l;
      if (i == 1) l = "r";
      if (i > 1) l = "r^" + std::to_string(i);
      if (j) l += "s";
      labels[i + n * j] = l.empty() ? "1" : l;
    }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
      std::size_t i = j1 ? (i1 + n - i2) % n : (i1 + i2) % n;
      table[a * order + b] = Elem(i + n * ((j1 + j2) % 2));
    }
  return FiniteGroup::unchecked(std::move(table), std::move(labels));
}

FiniteGroup heisenberg(unsigned p) {
  if (!is_prime(p)) throw InputError("heisenberg(p) requires a prime p");
  if (std::size_t(p) * p * p > kMaxGroupOrder)
    throw InputError("heisenberg group order exceeds the cap");
  using T = std::array<unsigned, 3>;
  std::vector<T> elems;
  for (unsigned c = 0; c < p; ++c)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned a = 0; a < p; ++a) elems.push_back({a, b, c});
  return from_elements(
      elems,
      [p](const T& x, const T& y) {
        return T{(x[0] + y[0]) % p, (x[1] + y[1]) % p,
                 (x[2] + y[2] + x[0] * y[1]) % p};
      },
      [](const T& x) {
        return tuple_label({x[0], x[1], x[2]});
      });
}

FiniteGroup quaternion8() {
  // (sign, unit) with units 1,i,j,k.
  using T = std::pair<int, int>;
  static constexpr int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<T> elems;
  for (int u = 0; u < 4; ++u) {
    elems.push_back({1, u});
    elems.push_back({-1, u});
  }
  return from_elements(
      elems,
      [](const T& x, const T& y) {
        return T{x.first * y.first * kSign[x.second][y.second],
                 kUnit[x.second][y.second]};
      },
      [](const T& x) {
        static const char* names[] = {"1", "i", "j", "k"};
        return std::string(x.first < 0 ? "-" : "") + names[x.second];
      });
}

FiniteGroup sl2_3() {
  using T = std::array<unsigned, 4>;  // [a b; c d]
  std::vector<T> elems{{1, 0, 0, 1}};
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned c = 0; c < 3; ++c)
        for (unsigned d = 0; d < 3; ++d) {
          T m{a, b, c, d};
          if ((a * d + 2 * b * c) % 3 == 1 && m != elems[0]) elems.push_back(m);
        }
  return from_elements(
      elems,
      [](const T& x, const T& y) {
        return T{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
                 (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
      },
      [](const T& x) {
        return "[" + std::to_string(x[0]) + " " + std::to_string(x[1]) + ";" +
               std::to_string(x[2]) + " " + std::to_string(x[3]) + "]";
      });
}

FiniteGroup permutation_group(unsigned degree,
                              const std::vector<std::vector<unsigned>>& gens,
                              std::size_t max_order) {
  if (degree == 0) throw InputError("permutation degree must be positive");
  for (const auto& g : gens) {
    if (g.size() != degree)
      throw InputError("permutation generator has wrong length");
    std::vector<char> seen(degree, 0);
    for (unsigned x : g) {
      if (x >= degree || seen[x])
        throw InputError("generator is not a permutation of 0.." +
                         std::to_string(degree - 1));
      seen[x] = 1;
    }
  }
  Perm id(degree);
  for (unsigned i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> found{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier)
      for (const Perm& g : gens) {
        Perm y = compose(x, g);
        if (found.insert(y).second) {
          if (found.size() > max_order)
            throw InputError("permutation group exceeds the order cap " +
                             std::to_string(max_order));
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  // Lexicographic order puts the identity first.
  std::vector<Perm> elems(found.begin(), found.end());
  return from_elements(elems, compose, cycle_notation);
}

FiniteGroup symmetric(unsigned degree) {
  if (degree == 0) throw InputError("symmetric group degree must be positive");
  std::vector<std::vector<unsigned>> gens;
  if (degree > 1) {
    std::vector<unsigned> swap(degree), cycle(degree);
    for (unsigned i = 0; i < degree; ++i) {
      swap[i] = i;
      cycle[i] = (i + 1) % degree;
    }
    std::swap(swap[0], swap[1]);
    gens = {swap, cycle};
  }
  return permutation_group(degree, gens);
}

FiniteGroup alternating(unsigned degree) {
  if (degree == 0) throw InputError("alternating group degree must be positive");
  std::vector<std::vector<unsigned>> gens;
  for (unsigned k = 2; k < degree; ++k) {
    std::vector<unsigned> c(degree);
    for (unsigned i = 0; i < degree; ++i) c[i] = i;
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(c);
  }
  return permutation_group(degree, gens);
}

FiniteGroup semidirect_cyclic(unsigned p, unsigned q, unsigned e) {
  if (p == 0 || q == 0) throw InputError("semidirect moduli must be positive");
  std::uint64_t eq = 1;
  for (unsigned i = 0; i < q; ++i) eq = eq * e % p;
  if (eq != 1 % p)
    throw InputError("semidirect(" + std::to_string(p) + "," +
                     std::to_string(q) + "," + std::to_string(e) +
                     "): e^q is not 1 mod p");
  FiniteGroup np = cyclic(p), hq = cyclic(q);
  std::vector<GroupMap> action;
  std::uint64_t mult = 1;
  for (unsigned b = 0; b < q; ++b) {
    std::vector<Elem> im(p);
    for (unsigned x = 0; x < p; ++x) im[x] = Elem(mult * x % p);
    action.emplace_back(np, np, std::move(im));
    mult = mult * e % p;
  }
  return semidirect_product(np, hq, action);
}

FiniteGroup paper_7_3() { return semidirect_cyclic(7, 3, 2); }

}  // namespace bracekit::presets
