// Named groups and combinators.
//
// Permutation models (degree n, generators in this order):
//   cyclic(n)       (1 2 ... n)
//   dihedral(n)     order 2n; n >= 3: (1 2 ... n) and the reflection fixing
//                   point 1; n = 2: (1 2), (3 4); n = 1: (1 2)
//   symmetric(n)    (1 2 ... n), (1 2)
//   alternating(n)  (1 2 3), (1 2 4), ..., (1 2 n)
//   quaternion8()   regular representation (1 2 3 4)(5 6 7 8),
//                   (1 5 3 7)(2 8 4 6), elements named 1 -1 i -i j -j k -k
//                   with i, j the generators and k = ij
//
// extraspecial_p3(p) is the Heisenberg group of triples over Z/p with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'); element (a,b,c) has index
// a*p^2 + b*p + c and is named "(a,b,c)".
//
// direct_product(G, K) indexes (x, y) as x*|K| + y and names it "(x,y)".

#ifndef CLASSPROD_CONSTRUCTIONS_HPP_
#define CLASSPROD_CONSTRUCTIONS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "classprod/finite_group.hpp"

namespace classprod {

FiniteGroup cyclic(std::size_t n, std::size_t max_order = default_max_order);
FiniteGroup dihedral(std::size_t n, std::size_t max_order = default_max_order);
FiniteGroup symmetric(std::size_t n, std::size_t max_order = default_max_order);
FiniteGroup alternating(std::size_t n,
                        std::size_t max_order = default_max_order);
FiniteGroup quaternion8();

//! Throws NotOddPrime unless p is an odd prime, OrderExceeded if p^3 is
//! above the cap.
FiniteGroup extraspecial_p3(std::size_t p,
                            std::size_t max_order = default_max_order);

//! Throws OrderExceeded if |G||K| is above the cap.
FiniteGroup direct_product(FiniteGroup const& G, FiniteGroup const& K,
                           std::size_t max_order = default_max_order);

//! Index of (x, y) in direct_product(G, K).
index_t pair_index(FiniteGroup const& K, index_t x, index_t y) noexcept;

struct Eta1Witness {
  FiniteGroup group;
  Element     element;
};

//! A nilpotent group with an element a such that |a^G| = n and
//! a^G a^G = (a^2)^G: for n = prod p_i^e_i, the direct product of e_i
//! copies of extraspecial_p3(p_i) (primes ascending), with a = (1,0,0) in
//! every factor. n = 1 gives the trivial group and its identity.
//! Throws EvenN for even n, OrderExceeded above the cap.
Eta1Witness odd_eta1_witness(std::size_t n,
                             std::size_t max_order = default_max_order);

enum class GroupKind {
  cyclic,
  dihedral,
  symmetric,
  alternating,
  quaternion8,
  extraspecial_p3,
  direct_product,
  from_file
};

//! Address of a group. String syntax:
//!   cyclic:7  dihedral:4  sym:4  alt:5  q8  es:3  es:3^2  prod(es:3,es:5)
//!   file:path.gens  file:path.cayley
//! `X^k` (k >= 1) is the direct product of k copies of an atomic spec X.
struct GroupSpec {
  GroupKind              kind      = GroupKind::cyclic;
  std::size_t            parameter = 1;  // n, or p for es
  std::vector<GroupSpec> factors;        // direct_product
  std::string            path;           // from_file

  //! Canonical spelling; parse_group_spec(s.to_string()) == s.
  std::string to_string() const;

  friend bool operator==(GroupSpec const&, GroupSpec const&) = default;
};

//! Throws BadSpec with a description of the problem.
GroupSpec parse_group_spec(std::string_view text);

//! Builds the group, tagged with spec.to_string().
FiniteGroup build_group(GroupSpec const& spec,
                        std::size_t      max_order = default_max_order);
FiniteGroup build_group(std::string_view spec,
                        std::size_t      max_order = default_max_order);

}  // namespace classprod

#endif  // CLASSPROD_CONSTRUCTIONS_HPP_
