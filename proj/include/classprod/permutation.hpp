#ifndef CLASSPROD_PERMUTATION_HPP_
#define CLASSPROD_PERMUTATION_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace classprod {

//! A bijection on the points 1..degree, stored 0-based.
//!
//! Composition is left-to-right: (p * q)(x) = q(p(x)), i.e. the left factor
//! is applied first. This convention is fixed throughout the project.
class Permutation {
 public:
  using point_type = std::uint32_t;

  //! Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  //! Throws InvalidPermutation unless `images` is a bijection on
  //! 0..images.size()-1.
  static Permutation from_images(std::vector<point_type> images);

  //! Parses 1-based disjoint-cycle notation such as "(1 2 3)(4 5)". The empty
  //! string and "()" denote the identity. Throws ParseError on malformed text
  //! and InvalidPermutation when a point repeats or exceeds `degree`.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept {
    return _images.size();
  }

  point_type operator[](point_type x) const noexcept {
    return _images[x];
  }

  std::vector<point_type> const& images() const noexcept {
    return _images;
  }

  Permutation operator*(Permutation const& that) const;
  Permutation inverse() const;
  bool        is_identity() const noexcept;

  //! 1-based cycle notation, fixed points omitted, "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<point_type> _images;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

}  // namespace classprod

#endif  // CLASSPROD_PERMUTATION_HPP_
