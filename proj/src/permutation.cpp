#include "classprod/permutation.hpp"

#include <cctype>
#include <numeric>

#include "classprod/errors.hpp"

namespace classprod {

Permutation::Permutation(std::size_t degree) : _images(degree) {
  std::iota(_images.begin(), _images.end(), point_type(0));
}

Permutation Permutation::from_images(std::vector<point_type> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    point_type y = images[i];
    if (y >= images.size() || seen[y]) {
      throw InvalidPermutation("image table is not a bijection (point "
                               + std::to_string(i + 1) + " maps to "
                               + std::to_string(y + 1) + ")");
    }
    seen[y] = true;
  }
  Permutation p(0);
  p._images = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation        result(degree);
  std::vector<bool>  used(degree, false);
  std::size_t        pos = 0;
  auto               skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("expected '(' in cycle string \"" + std::string(text)
                       + "\"");
    }
    ++pos;
    std::vector<point_type> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) {
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character '" + std::string(1, text[pos])
                         + "' in cycle string \"" + std::string(text) + "\"");
      }
      std::size_t value = 0;
      while (pos < text.size()
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > (std::size_t(1) << 24)) {
          throw ParseError("point out of range in \"" + std::string(text)
                           + "\"");
        }
        ++pos;
      }
      if (value == 0 || value > degree) {
        throw InvalidPermutation("point " + std::to_string(value)
                                 + " outside 1.." + std::to_string(degree));
      }
      point_type x = static_cast<point_type>(value - 1);
      if (used[x]) {
        throw InvalidPermutation("point " + std::to_string(value)
                                 + " repeated in \"" + std::string(text)
                                 + "\"");
      }
      used[x] = true;
      cycle.push_back(x);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      result._images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return result;
}

Permutation Permutation::operator*(Permutation const& that) const {
  Permutation result(0);
  result._images.resize(_images.size());
  for (std::size_t x = 0; x < _images.size(); ++x) {
    result._images[x] = that._images[_images[x]];
  }
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result(0);
  result._images.resize(_images.size());
  for (std::size_t x = 0; x < _images.size(); ++x) {
    result._images[_images[x]] = static_cast<point_type>(x);
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < _images.size(); ++x) {
    if (_images[x] != x) {
      return false;
    }
  }
  return true;
}

std::string Permutation::to_cycles() const {
  std::string       out;
  std::vector<bool> seen(_images.size(), false);
  for (std::size_t x = 0; x < _images.size(); ++x) {
    if (seen[x] || _images[x] == x) {
      continue;
    }
    out += '(';
    std::size_t y = x;
    bool        first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) {
        out += ' ';
      }
      out += std::to_string(y + 1);
      first = false;
      y     = _images[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::size_t seed = p.degree();
  for (auto x : p.images()) {
    seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

}  // namespace classprod
