// Conjugacy classes, commutator sets, class products and the class count eta
// of a G-invariant set, together with the subgroup machinery (normal
// closures, minimal normal subgroups, quotients) behind the nilpotent,
// supersolvable and simple predicates.
//
// All functions are pure; they take the owning group explicitly and throw
// GroupMismatch when handed elements or sets of a different group.

#ifndef CLASSPROD_CLASS_ALGEBRA_HPP_
#define CLASSPROD_CLASS_ALGEBRA_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "classprod/element_set.hpp"
#include "classprod/finite_group.hpp"

namespace classprod {

struct ConjugacyClass {
  ElementSet carrier;
  //! The member with the smallest index.
  Element representative;

  std::size_t size() const {
    return carrier.size();
  }
};

struct ClassDecomposition {
  //! Sorted by representative index; pairwise disjoint, union == source.
  std::vector<ConjugacyClass> classes;
  ElementSet                  source;

  std::size_t eta() const noexcept {
    return classes.size();
  }
};

struct QuotientMap {
  FiniteGroup quotient;
  //! projection[x] is the coset of x, cosets sorted by minimal member.
  std::vector<index_t> projection;
  ElementSet           kernel;
};

//! a^G, computed as the orbit {g^-1 a g : g in G}.
ConjugacyClass conjugacy_class(FiniteGroup const& G, Element a);
//! C_G(a) = {g : a^g = a}.
ElementSet centralizer(FiniteGroup const& G, Element a);
//! [a,G] = {a^-1 a^g : g in G}.
ElementSet commutator_set(FiniteGroup const& G, Element a);

//! XY = {xy : x in X, y in Y}, as a set.
ElementSet set_product(FiniteGroup const& G, ElementSet const& X,
                       ElementSet const& Y);
//! aX = {ax : x in X}.
ElementSet translate(FiniteGroup const& G, Element a, ElementSet const& X);

//! True iff X^g = X for every g.
bool is_invariant(FiniteGroup const& G, ElementSet const& X);

//! Splits a G-invariant set into its conjugacy classes. Throws NotInvariant
//! naming x in X and g with x^g outside X.
ClassDecomposition decompose(FiniteGroup const& G, ElementSet const& X);

//! Number of classes in a G-invariant set.
std::size_t eta(FiniteGroup const& G, ElementSet const& X);

//! eta(a^G b^G); equals 1 iff a^G b^G = (ab)^G.
std::size_t eta_of_product(FiniteGroup const& G, Element a, Element b);

bool is_subgroup(FiniteGroup const& G, ElementSet const& S);
bool is_normal(FiniteGroup const& G, ElementSet const& S);

ElementSet subgroup_generated(FiniteGroup const& G, ElementSet const& S);
//! Subgroup generated by a^G.
ElementSet normal_closure(FiniteGroup const& G, Element a);

//! Inclusion-minimal nontrivial normal subgroups, sorted by order then by
//! member list. Throws TrivialGroup when |G| = 1.
std::vector<ElementSet> minimal_normal_subgroups(FiniteGroup const& G);

struct NormalSubgroupList {
  std::vector<ElementSet> subgroups;  // sorted by order then member list
  bool                    truncated = false;
};

//! All normal subgroups, found as joins of normal closures of class
//! representatives. Stops once `limit` subgroups are known.
NormalSubgroupList normal_subgroups(FiniteGroup const& G,
                                    std::size_t        limit = 4096);

//! G/N. Throws NotNormal.
QuotientMap quotient(FiniteGroup const& G, ElementSet const& N);

//! Lower central series reaches the trivial subgroup.
bool is_nilpotent(FiniteGroup const& G);

//! Orders of the factors of one chief series, bottom up. Each step takes a
//! minimal normal subgroup of the current quotient: the first in sorted
//! order, or a uniformly random one when `seed` is given. Stops early after
//! the first non-prime factor when `stop_at_composite` is set.
std::vector<std::size_t> chief_factor_orders(
    FiniteGroup const&           G,
    std::optional<std::uint64_t> seed              = std::nullopt,
    bool                         stop_at_composite = false);

//! Every chief factor has prime order.
bool is_supersolvable(FiniteGroup const&           G,
                      std::optional<std::uint64_t> seed = std::nullopt);

bool is_simple_nonabelian(FiniteGroup const& G);

//! |G| is 1 or a prime power.
bool is_p_group(FiniteGroup const& G);

}  // namespace classprod

#endif  // CLASSPROD_CLASS_ALGEBRA_HPP_
