#ifndef CLASSPROD_ELEMENT_SET_HPP_
#define CLASSPROD_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace classprod {

using index_t = std::uint32_t;

//! Element of a specific FiniteGroup: an index plus the token of the group
//! that owns it. Binary operations on elements with different tokens throw
//! GroupMismatch.
struct Element {
  index_t       index = 0;
  std::uint64_t token = 0;

  friend bool operator==(Element const&, Element const&) = default;
};

//! A subset of the elements of one group, stored as a bitset over 0..n-1.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::uint64_t token, std::size_t universe)
      : _token(token), _universe(universe), _words((universe + 63) / 64, 0) {}

  std::uint64_t token() const noexcept {
    return _token;
  }

  //! Order of the owning group.
  std::size_t universe() const noexcept {
    return _universe;
  }

  void insert(index_t x) noexcept {
    _words[x >> 6] |= std::uint64_t(1) << (x & 63);
  }

  void erase(index_t x) noexcept {
    _words[x >> 6] &= ~(std::uint64_t(1) << (x & 63));
  }

  bool contains(index_t x) const noexcept {
    return (_words[x >> 6] >> (x & 63)) & 1;
  }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : _words) {
      total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
  }

  bool empty() const noexcept {
    for (auto w : _words) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  //! Smallest member; undefined on the empty set.
  index_t min() const noexcept {
    for (std::size_t i = 0; i < _words.size(); ++i) {
      if (_words[i] != 0) {
        return static_cast<index_t>(i * 64 + std::countr_zero(_words[i]));
      }
    }
    return 0;
  }

  template <typename Func>
  void for_each(Func&& f) const {
    for (std::size_t i = 0; i < _words.size(); ++i) {
      std::uint64_t w = _words[i];
      while (w != 0) {
        f(static_cast<index_t>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  //! Members in ascending index order.
  std::vector<index_t> members() const {
    std::vector<index_t> out;
    out.reserve(size());
    for_each([&out](index_t x) { out.push_back(x); });
    return out;
  }

  bool is_subset_of(ElementSet const& that) const noexcept {
    for (std::size_t i = 0; i < _words.size(); ++i) {
      if (_words[i] & ~that._words[i]) {
        return false;
      }
    }
    return true;
  }

  bool intersects(ElementSet const& that) const noexcept {
    for (std::size_t i = 0; i < _words.size(); ++i) {
      if (_words[i] & that._words[i]) {
        return true;
      }
    }
    return false;
  }

  ElementSet& operator|=(ElementSet const& that) noexcept {
    for (std::size_t i = 0; i < _words.size(); ++i) {
      _words[i] |= that._words[i];
    }
    return *this;
  }

  ElementSet& operator&=(ElementSet const& that) noexcept {
    for (std::size_t i = 0; i < _words.size(); ++i) {
      _words[i] &= that._words[i];
    }
    return *this;
  }

  std::size_t hash() const noexcept {
    std::size_t seed = _universe;
    for (auto w : _words) {
      seed ^= w + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }

  friend bool operator==(ElementSet const&, ElementSet const&) = default;

 private:
  std::uint64_t              _token    = 0;
  std::size_t                _universe = 0;
  std::vector<std::uint64_t> _words;
};

//! Orders sets by size, then by their ascending member lists.
bool order_then_members_less(ElementSet const& x, ElementSet const& y);

struct ElementSetHash {
  std::size_t operator()(ElementSet const& s) const noexcept {
    return s.hash();
  }
};

}  // namespace classprod

#endif  // CLASSPROD_ELEMENT_SET_HPP_
