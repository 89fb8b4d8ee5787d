// Concrete finite groups given by a full multiplication table.
//
// Conventions used everywhere in classprod:
//
//   conjugation   a^g   = g^-1 a g
//   commutator    [a,g] = a^-1 a^g
//
// Index 0 is always the identity. Groups closed from permutation generators
// list their elements in breadth-first discovery order; groups read from a
// Cayley table keep the table order with the identity moved to the front.

#ifndef CLASSPROD_FINITE_GROUP_HPP_
#define CLASSPROD_FINITE_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "classprod/element_set.hpp"
#include "classprod/permutation.hpp"

namespace classprod {

constexpr std::size_t default_max_order = 4096;

//! The order cap: CLASSPROD_MAX_ORDER when set to a positive integer,
//! default_max_order otherwise.
std::size_t max_order_from_env();

//! Conjugacy classes of a group, computed once per group and cached.
struct ClassTable {
  //! classes[k] lists the members of the k-th class in ascending order;
  //! classes are sorted by their minimal member (the representative).
  std::vector<std::vector<index_t>> classes;
  //! class_of[x] is the position of x's class in `classes`.
  std::vector<std::uint32_t> class_of;

  std::size_t count() const noexcept {
    return classes.size();
  }
  index_t representative(std::size_t k) const noexcept {
    return classes[k].front();
  }
};

//! Raw ingredients of a group, used by the constructors below.
struct GroupTable {
  std::size_t              order = 0;
  std::vector<index_t>     table;  // row-major, table[i * order + j] = i*j
  std::vector<std::string> names;  // empty, or one label per element
  std::vector<index_t>     generators;
};

//! An immutable finite group. Copies share the underlying tables, so a
//! FiniteGroup is cheap to pass by value and safe to read concurrently.
class FiniteGroup {
 public:
  //! The trivial group.
  FiniteGroup();

  //! Builds a group from a table that is already known to satisfy the group
  //! axioms with identity 0. No validation beyond shape is performed; use
  //! from_cayley_table for untrusted input.
  static FiniteGroup from_trusted_table(GroupTable table, std::string id);

  std::size_t order() const noexcept;

  //! Report tag, e.g. "es:3" or "sym:4".
  std::string const& id() const noexcept {
    return _id;
  }

  //! Same group under a different report tag. Elements and sets stay valid.
  FiniteGroup with_id(std::string id) const;

  //! Identifies the element universe; shared by copies and with_id.
  std::uint64_t token() const noexcept;

  Element identity() const noexcept {
    return Element{0, token()};
  }

  //! Throws Error if `index` is out of range.
  Element element(index_t index) const;

  // Index-level arithmetic. Arguments must be valid indices of this group.
  index_t product(index_t a, index_t b) const noexcept {
    return _table[static_cast<std::size_t>(a) * _order + b];
  }
  index_t     inverse(index_t a) const noexcept;
  index_t     conjugate(index_t a, index_t g) const noexcept;
  index_t     commutator(index_t a, index_t g) const noexcept;
  index_t     power(index_t a, std::int64_t k) const noexcept;
  std::size_t element_order(index_t a) const noexcept;

  // Element-level arithmetic; throw GroupMismatch on foreign elements.
  Element     mul(Element a, Element b) const;
  Element     inv(Element a) const;
  Element     conjugate(Element a, Element g) const;
  Element     commutator(Element a, Element g) const;
  std::size_t element_order(Element a) const;

  //! Throws GroupMismatch unless `x` belongs to this group.
  void check(Element x) const;
  void check(ElementSet const& x) const;

  bool                        has_names() const noexcept;
  std::string                 name(index_t a) const;
  std::optional<index_t>      find_name(std::string_view label) const;
  std::vector<index_t> const& generators() const noexcept;

  ElementSet empty_set() const;
  ElementSet full_set() const;
  ElementSet singleton(index_t a) const;
  ElementSet make_set(std::vector<index_t> const& members) const;

  //! {z : zg = gz for all g}.
  ElementSet center() const;
  bool       is_abelian() const;
  //! Least common multiple of element orders.
  std::size_t exponent() const;

  //! Conjugacy classes, computed on first use (thread-safe).
  ClassTable const& class_table() const;

  //! The multiplication table as n rows of n indices.
  std::vector<std::vector<index_t>> cayley_table() const;

 private:
  struct Data;

  FiniteGroup(std::shared_ptr<Data const> data, std::string id);

  std::shared_ptr<Data const> _data;
  index_t const*              _table = nullptr;
  std::size_t                 _order = 0;
  std::string                 _id;
};

//! Closure of a nonempty list of same-degree permutations. Element order is
//! breadth-first from the identity, expanding each element by right
//! multiplication with the generators in list order. Throws OrderExceeded if
//! the closure grows past `max_order`, InvalidPermutation if the generators
//! have different degrees or the list is empty.
FiniteGroup close_from_generators(std::vector<Permutation> const& gens,
                                  std::size_t max_order = default_max_order,
                                  std::string id        = "perm");

//! Validates a Cayley table and builds the group it describes, relabelling
//! so that the identity is index 0. Throws NotAssociative, NoIdentity or
//! NoInverse with a witness, or ParseError on a malformed shape.
FiniteGroup from_cayley_table(std::vector<std::vector<index_t>> const& table,
                              std::string id        = "table",
                              std::size_t max_order = default_max_order);

}  // namespace classprod

#endif  // CLASSPROD_FINITE_GROUP_HPP_
