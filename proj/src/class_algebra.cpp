#include "classprod/class_algebra.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "classprod/arith.hpp"
#include "classprod/errors.hpp"

namespace classprod {

namespace {
  // Subgroup generated by `gens`: breadth-first closure of the identity
  // under right multiplication by the generators.
  ElementSet close_under(FiniteGroup const& G, std::vector<index_t> const& gens) {
    ElementSet           H = G.singleton(0);
    std::vector<index_t> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto s : gens) {
        index_t y = G.product(queue[i], s);
        if (!H.contains(y)) {
          H.insert(y);
          queue.push_back(y);
        }
      }
    }
    return H;
  }

  // Grows H to <H, S>, adding a generator only when it is not yet in H so
  // the generating list stays logarithmic in |G|.
  ElementSet extend_subgroup(FiniteGroup const& G, std::vector<index_t>& gens,
                             ElementSet H, ElementSet const& S) {
    S.for_each([&](index_t s) {
      if (!H.contains(s)) {
        gens.push_back(s);
        H = close_under(G, gens);
      }
    });
    return H;
  }

  ElementSet normal_closure_of_class(FiniteGroup const& G, std::size_t k) {
    ClassTable const& ct = G.class_table();
    ElementSet        cls = G.make_set(ct.classes[k]);
    return subgroup_generated(G, cls);
  }
}  // namespace

ConjugacyClass conjugacy_class(FiniteGroup const& G, Element a) {
  G.check(a);
  ElementSet orbit = G.empty_set();
  for (index_t g = 0; g < G.order(); ++g) {
    orbit.insert(G.conjugate(a.index, g));
  }
  index_t rep = orbit.min();
  return ConjugacyClass{std::move(orbit), G.element(rep)};
}

ElementSet centralizer(FiniteGroup const& G, Element a) {
  G.check(a);
  ElementSet C = G.empty_set();
  for (index_t g = 0; g < G.order(); ++g) {
    if (G.product(a.index, g) == G.product(g, a.index)) {
      C.insert(g);
    }
  }
  return C;
}

ElementSet commutator_set(FiniteGroup const& G, Element a) {
  G.check(a);
  ElementSet S = G.empty_set();
  for (index_t g = 0; g < G.order(); ++g) {
    S.insert(G.commutator(a.index, g));
  }
  return S;
}

ElementSet set_product(FiniteGroup const& G, ElementSet const& X,
                       ElementSet const& Y) {
  G.check(X);
  G.check(Y);
  ElementSet           out = G.empty_set();
  std::vector<index_t> ys  = Y.members();
  X.for_each([&](index_t x) {
    for (auto y : ys) {
      out.insert(G.product(x, y));
    }
  });
  return out;
}

ElementSet translate(FiniteGroup const& G, Element a, ElementSet const& X) {
  G.check(a);
  G.check(X);
  ElementSet out = G.empty_set();
  X.for_each([&](index_t x) { out.insert(G.product(a.index, x)); });
  return out;
}

bool is_invariant(FiniteGroup const& G, ElementSet const& X) {
  G.check(X);
  ClassTable const& ct = G.class_table();
  bool              ok = true;
  X.for_each([&](index_t x) {
    if (!ok) {
      return;
    }
    for (auto y : ct.classes[ct.class_of[x]]) {
      if (!X.contains(y)) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

ClassDecomposition decompose(FiniteGroup const& G, ElementSet const& X) {
  G.check(X);
  ClassTable const&          ct = G.class_table();
  std::vector<std::uint32_t> ids;
  X.for_each([&](index_t x) {
    auto k = ct.class_of[x];
    if (ids.empty() || std::find(ids.begin(), ids.end(), k) == ids.end()) {
      ids.push_back(k);
    }
  });
  std::sort(ids.begin(), ids.end());

  ClassDecomposition out;
  out.source = X;
  for (auto k : ids) {
    ElementSet carrier = G.empty_set();
    for (auto y : ct.classes[k]) {
      if (!X.contains(y)) {
        // Find x in X and g with x^g = y.
        index_t witness_x = 0, witness_g = 0;
        bool    found = false;
        for (auto cand : ct.classes[k]) {
          if (!X.contains(cand)) {
            continue;
          }
          for (index_t g = 0; g < G.order() && !found; ++g) {
            if (G.conjugate(cand, g) == y) {
              witness_x = cand;
              witness_g = g;
              found     = true;
            }
          }
          if (found) {
            break;
          }
        }
        throw NotInvariant("set is not G-invariant: " + G.name(witness_x)
                           + " conjugated by " + G.name(witness_g) + " gives "
                           + G.name(y) + ", which is not in the set (indices "
                           + std::to_string(witness_x) + ", "
                           + std::to_string(witness_g) + ")");
      }
      carrier.insert(y);
    }
    out.classes.push_back(
        ConjugacyClass{std::move(carrier), G.element(ct.representative(k))});
  }
  return out;
}

std::size_t eta(FiniteGroup const& G, ElementSet const& X) {
  return decompose(G, X).eta();
}

std::size_t eta_of_product(FiniteGroup const& G, Element a, Element b) {
  return eta(G, set_product(G, conjugacy_class(G, a).carrier,
                            conjugacy_class(G, b).carrier));
}

bool is_subgroup(FiniteGroup const& G, ElementSet const& S) {
  G.check(S);
  if (S.empty()) {
    return false;
  }
  std::vector<index_t> members = S.members();
  for (auto x : members) {
    for (auto y : members) {
      if (!S.contains(G.product(x, y))) {
        return false;
      }
    }
  }
  return true;
}

bool is_normal(FiniteGroup const& G, ElementSet const& S) {
  if (!is_subgroup(G, S)) {
    return false;
  }
  bool ok = true;
  S.for_each([&](index_t s) {
    for (index_t g = 0; g < G.order() && ok; ++g) {
      ok = S.contains(G.conjugate(s, g));
    }
  });
  return ok;
}

ElementSet subgroup_generated(FiniteGroup const& G, ElementSet const& S) {
  G.check(S);
  std::vector<index_t> gens;
  return extend_subgroup(G, gens, G.singleton(0), S);
}

ElementSet normal_closure(FiniteGroup const& G, Element a) {
  return subgroup_generated(G, conjugacy_class(G, a).carrier);
}

std::vector<ElementSet> minimal_normal_subgroups(FiniteGroup const& G) {
  if (G.order() == 1) {
    throw TrivialGroup("the trivial group has no minimal normal subgroups");
  }
  ClassTable const&       ct = G.class_table();
  std::vector<ElementSet> candidates;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (std::size_t k = 1; k < ct.count(); ++k) {
    ElementSet N = normal_closure_of_class(G, k);
    if (seen.insert(N).second) {
      candidates.push_back(std::move(N));
    }
  }
  std::vector<ElementSet> minimal;
  for (auto const& N : candidates) {
    bool is_min = true;
    for (auto const& M : candidates) {
      if (&M != &N && M.is_subset_of(N) && !(M == N)) {
        is_min = false;
        break;
      }
    }
    if (is_min) {
      minimal.push_back(N);
    }
  }
  std::sort(minimal.begin(), minimal.end(), order_then_members_less);
  return minimal;
}

NormalSubgroupList normal_subgroups(FiniteGroup const& G, std::size_t limit) {
  ClassTable const&       ct = G.class_table();
  std::vector<ElementSet> closures;
  for (std::size_t k = 1; k < ct.count(); ++k) {
    closures.push_back(normal_closure_of_class(G, k));
  }

  NormalSubgroupList                             out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  out.subgroups.push_back(G.singleton(0));
  seen.insert(out.subgroups.back());
  for (std::size_t i = 0; i < out.subgroups.size(); ++i) {
    for (auto const& M : closures) {
      ElementSet const N = out.subgroups[i];
      if (M.is_subset_of(N)) {
        continue;
      }
      std::vector<index_t> gens;
      ElementSet           join = extend_subgroup(G, gens, G.singleton(0), N);
      join                      = extend_subgroup(G, gens, join, M);
      if (seen.insert(join).second) {
        if (out.subgroups.size() >= limit) {
          out.truncated = true;
          break;
        }
        out.subgroups.push_back(std::move(join));
      }
    }
    if (out.truncated) {
      break;
    }
  }
  std::sort(out.subgroups.begin(), out.subgroups.end(), order_then_members_less);
  return out;
}

QuotientMap quotient(FiniteGroup const& G, ElementSet const& N) {
  G.check(N);
  if (!is_normal(G, N)) {
    throw NotNormal("subgroup is not normal in " + G.id());
  }
  constexpr index_t    unset = ~index_t(0);
  std::vector<index_t> proj(G.order(), unset);
  std::vector<index_t> reps;
  std::vector<index_t> kernel = N.members();
  for (index_t x = 0; x < G.order(); ++x) {
    if (proj[x] != unset) {
      continue;
    }
    auto c = static_cast<index_t>(reps.size());
    reps.push_back(x);
    for (auto n : kernel) {
      proj[G.product(x, n)] = c;
    }
  }

  std::size_t const m = reps.size();
  GroupTable        t;
  t.order = m;
  t.table.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      t.table[i * m + j] = proj[G.product(reps[i], reps[j])];
    }
  }
  t.names.reserve(m);
  for (auto r : reps) {
    t.names.push_back(G.name(r) + "N");
  }
  for (auto g : G.generators()) {
    t.generators.push_back(proj[g]);
  }
  std::string id = G.id() + "/N" + std::to_string(N.size());
  return QuotientMap{FiniteGroup::from_trusted_table(std::move(t), std::move(id)),
                     std::move(proj), N};
}

bool is_nilpotent(FiniteGroup const& G) {
  ElementSet gamma = G.full_set();
  while (true) {
    ElementSet commutators = G.empty_set();
    gamma.for_each([&](index_t x) {
      for (index_t g = 0; g < G.order(); ++g) {
        commutators.insert(G.commutator(x, g));
      }
    });
    ElementSet next = subgroup_generated(G, commutators);
    if (next == gamma) {
      return gamma.size() == 1;
    }
    gamma = std::move(next);
  }
}

std::vector<std::size_t> chief_factor_orders(FiniteGroup const&           G,
                                             std::optional<std::uint64_t> seed,
                                             bool stop_at_composite) {
  std::vector<std::size_t> orders;
  std::mt19937_64          rng(seed.value_or(0));
  FiniteGroup              current = G;
  while (current.order() > 1) {
    auto        mins = minimal_normal_subgroups(current);
    std::size_t pick = 0;
    if (seed) {
      pick = std::uniform_int_distribution<std::size_t>(0, mins.size() - 1)(rng);
    }
    orders.push_back(mins[pick].size());
    if (stop_at_composite && !is_prime(orders.back())) {
      break;
    }
    current = quotient(current, mins[pick]).quotient;
  }
  return orders;
}

bool is_supersolvable(FiniteGroup const& G, std::optional<std::uint64_t> seed) {
  auto orders = chief_factor_orders(G, seed, true);
  return std::all_of(orders.begin(), orders.end(),
                     [](std::size_t k) { return is_prime(k); });
}

bool is_simple_nonabelian(FiniteGroup const& G) {
  if (G.is_abelian()) {
    return false;
  }
  ClassTable const& ct = G.class_table();
  for (std::size_t k = 1; k < ct.count(); ++k) {
    if (normal_closure_of_class(G, k).size() != G.order()) {
      return false;
    }
  }
  return true;
}

bool is_p_group(FiniteGroup const& G) {
  return is_prime_power_or_one(G.order());
}

}  // namespace classprod
