// Brute-force reference implementation used to cross-check the library.
// Shares no code with classprod: elements are explicit vectors of ints,
// groups are closures computed with std::set, and every class-level
// quantity is recomputed from its definition.

#ifndef CLASSPROD_TESTS_ORACLE_HPP_
#define CLASSPROD_TESTS_ORACLE_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Elt = std::vector<int>;
using Set = std::set<int>;

struct Group {
  std::vector<Elt>              elements;
  std::vector<std::vector<int>> table;
  int                           identity = 0;

  int size() const {
    return static_cast<int>(elements.size());
  }
  int mul(int x, int y) const {
    return table[x][y];
  }
  int inv(int x) const {
    for (int y = 0; y < size(); ++y) {
      if (mul(x, y) == identity) {
        return y;
      }
    }
    return -1;
  }
  // g^-1 x g
  int conj(int x, int g) const {
    return mul(mul(inv(g), x), g);
  }
};

inline Group close(std::vector<Elt> const&                       gens,
                   Elt const&                                    identity,
                   std::function<Elt(Elt const&, Elt const&)> const& op) {
  std::set<Elt>    seen{identity};
  std::vector<Elt> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Elt> next;
    for (auto const& x : frontier) {
      for (auto const& g : gens) {
        Elt y = op(x, g);
        if (seen.insert(y).second) {
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  // Identity first, the rest in lexicographic order.
  Group G;
  G.elements.push_back(identity);
  for (auto const& x : seen) {
    if (x != identity) {
      G.elements.push_back(x);
    }
  }
  std::map<Elt, int> index;
  for (int i = 0; i < G.size(); ++i) {
    index[G.elements[i]] = i;
  }
  G.identity = index.at(identity);
  G.table.assign(G.size(), std::vector<int>(G.size()));
  for (int i = 0; i < G.size(); ++i) {
    for (int j = 0; j < G.size(); ++j) {
      G.table[i][j] = index.at(op(G.elements[i], G.elements[j]));
    }
  }
  return G;
}

// Permutations as 0-based image vectors, composed left to right:
// (p*q)(x) = q(p(x)).
inline Group permutation_group(std::vector<Elt> const& gens) {
  int n = static_cast<int>(gens.front().size());
  Elt id(n);
  for (int i = 0; i < n; ++i) {
    id[i] = i;
  }
  return close(gens, id, [](Elt const& p, Elt const& q) {
    Elt r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] = q[p[i]];
    }
    return r;
  });
}

// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab') mod p.
inline Group heisenberg(int p) {
  auto op = [p](Elt const& x, Elt const& y) {
    return Elt{(x[0] + y[0]) % p, (x[1] + y[1]) % p,
               (x[2] + y[2] + x[0] * y[1]) % p};
  };
  return close({{1, 0, 0}, {0, 1, 0}}, {0, 0, 0}, op);
}

inline Group direct_product(Group const& G, Group const& K) {
  Group P;
  for (int x = 0; x < G.size(); ++x) {
    for (int y = 0; y < K.size(); ++y) {
      Elt e = G.elements[x];
      e.push_back(-1);
      e.insert(e.end(), K.elements[y].begin(), K.elements[y].end());
      P.elements.push_back(e);
    }
  }
  int const k = K.size();
  P.identity  = G.identity * k + K.identity;
  P.table.assign(P.size(), std::vector<int>(P.size()));
  for (int i = 0; i < P.size(); ++i) {
    for (int j = 0; j < P.size(); ++j) {
      P.table[i][j] = G.mul(i / k, j / k) * k + K.mul(i % k, j % k);
    }
  }
  return P;
}

inline Set conjugacy_class(Group const& G, int a) {
  Set s;
  for (int g = 0; g < G.size(); ++g) {
    s.insert(G.conj(a, g));
  }
  return s;
}

inline Set centralizer(Group const& G, int a) {
  Set s;
  for (int g = 0; g < G.size(); ++g) {
    if (G.mul(a, g) == G.mul(g, a)) {
      s.insert(g);
    }
  }
  return s;
}

inline Set commutators(Group const& G, int a) {
  Set s;
  for (int g = 0; g < G.size(); ++g) {
    s.insert(G.mul(G.inv(a), G.conj(a, g)));
  }
  return s;
}

inline Set product(Group const& G, Set const& X, Set const& Y) {
  Set s;
  for (int x : X) {
    for (int y : Y) {
      s.insert(G.mul(x, y));
    }
  }
  return s;
}

inline Set center(Group const& G) {
  Set s;
  for (int z = 0; z < G.size(); ++z) {
    if (centralizer(G, z).size() == static_cast<std::size_t>(G.size())) {
      s.insert(z);
    }
  }
  return s;
}

// Number of distinct classes meeting X (X assumed invariant).
inline int eta(Group const& G, Set const& X) {
  std::set<Set> classes;
  for (int x : X) {
    classes.insert(conjugacy_class(G, x));
  }
  return static_cast<int>(classes.size());
}

inline int eta_of_product(Group const& G, int a, int b) {
  return eta(G, product(G, conjugacy_class(G, a), conjugacy_class(G, b)));
}

inline bool is_subgroup(Group const& G, Set const& S) {
  for (int x : S) {
    for (int y : S) {
      if (!S.count(G.mul(x, y))) {
        return false;
      }
    }
  }
  return !S.empty();
}

inline bool is_normal(Group const& G, Set const& S) {
  if (!is_subgroup(G, S)) {
    return false;
  }
  for (int x : S) {
    for (int g = 0; g < G.size(); ++g) {
      if (!S.count(G.conj(x, g))) {
        return false;
      }
    }
  }
  return true;
}

inline std::multiset<std::size_t> class_sizes(Group const& G) {
  std::set<Set> classes;
  for (int x = 0; x < G.size(); ++x) {
    classes.insert(conjugacy_class(G, x));
  }
  std::multiset<std::size_t> sizes;
  for (auto const& c : classes) {
    sizes.insert(c.size());
  }
  return sizes;
}

struct TheoremATally {
  int pairs       = 0;  // ordered pairs with equal centralizers
  int homogeneous = 0;
  int exceptions  = 0;  // LHS != RHS
};

// Over every ordered pair (a, b) with C(a) = C(b).
inline TheoremATally theorem_a(Group const& G) {
  TheoremATally t;
  std::vector<Set> cent, comm, cls;
  for (int x = 0; x < G.size(); ++x) {
    cent.push_back(centralizer(G, x));
    comm.push_back(commutators(G, x));
    cls.push_back(conjugacy_class(G, x));
  }
  for (int a = 0; a < G.size(); ++a) {
    for (int b = 0; b < G.size(); ++b) {
      if (cent[a] != cent[b]) {
        continue;
      }
      ++t.pairs;
      int const  ab  = G.mul(a, b);
      bool const lhs = product(G, cls[a], cls[b]) == cls[ab];
      bool const rhs = comm[a] == comm[b] && comm[b] == comm[ab]
                       && is_normal(G, comm[ab]);
      t.homogeneous += lhs;
      t.exceptions += lhs != rhs;
    }
  }
  return t;
}

// All normal subgroups, as joins of normal closures of single classes.
inline std::set<Set> normal_subgroups(Group const& G) {
  auto close_set = [&](Set S) {
    bool grown = true;
    while (grown) {
      grown = false;
      Set next = S;
      for (int x : S) {
        for (int y : S) {
          next.insert(G.mul(x, y));
        }
      }
      if (next.size() != S.size()) {
        S     = std::move(next);
        grown = true;
      }
    }
    return S;
  };
  std::set<Set> closures;
  for (int x = 0; x < G.size(); ++x) {
    Set c = conjugacy_class(G, x);
    c.insert(G.identity);
    closures.insert(close_set(c));
  }
  std::set<Set> out{Set{G.identity}};
  bool          grown = true;
  while (grown) {
    grown = false;
    for (auto const& N : std::set<Set>(out)) {
      for (auto const& M : closures) {
        Set u = N;
        u.insert(M.begin(), M.end());
        if (out.insert(close_set(u)).second) {
          grown = true;
        }
      }
    }
  }
  return out;
}


// Standard groups, built without the library's constructions.

inline Group cyclic(int n) {
  Elt r(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
  }
  return permutation_group({r});
}

// Order 2n symmetries of an n-gon, n >= 3.
inline Group dihedral(int n) {
  Elt r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return permutation_group({r, s});
}

inline Group symmetric(int n) {
  Elt r(n), t(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    t[i] = i;
  }
  std::swap(t[0], t[1]);
  return permutation_group({r, t});
}

// Generated by the 3-cycles (0 1 k).
inline Group alternating(int n) {
  std::vector<Elt> gens;
  for (int k = 2; k < n; ++k) {
    Elt c(n);
    for (int i = 0; i < n; ++i) {
      c[i] = i;
    }
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(c);
  }
  return permutation_group(gens);
}

// Left multiplication by i and j on the quaternion basis (1, i, j, k), as
// 4x4 integer matrices stored row-major.
inline Group quaternion8() {
  auto op = [](Elt const& x, Elt const& y) {
    Elt z(16, 0);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        for (int m = 0; m < 4; ++m) {
          z[r * 4 + c] += x[r * 4 + m] * y[m * 4 + c];
        }
      }
    }
    return z;
  };
  Elt const id{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
  // i*1 = i, i*i = -1, i*j = k, i*k = -j (columns are images of basis).
  Elt const i{0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0};
  // j*1 = j, j*i = -k, j*j = -1, j*k = i.
  Elt const j{0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0};
  return close({i, j}, id, op);
}

}  // namespace oracle

#endif  // CLASSPROD_TESTS_ORACLE_HPP_
