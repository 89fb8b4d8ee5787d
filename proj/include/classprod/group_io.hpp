// Text formats for group input.
//
// .gens    UTF-8 text. `degree <d>` on the first non-comment line, then one
//          `gen <cycles>` line per generator in 1-based disjoint-cycle
//          notation, e.g. `gen (1 2 3)(4 5)`. Lines starting with `#` are
//          comments; blank lines are ignored.
//
// .cayley  First line `n`, then n lines of n whitespace-separated 0-based
//          indices, row i giving i*j for j = 0..n-1.

#ifndef CLASSPROD_GROUP_IO_HPP_
#define CLASSPROD_GROUP_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "classprod/finite_group.hpp"
#include "classprod/permutation.hpp"

namespace classprod {

struct GeneratorFile {
  std::size_t              degree = 0;
  std::vector<Permutation> generators;
};

GeneratorFile                     parse_gens(std::string_view text);
std::vector<std::vector<index_t>> parse_cayley(std::string_view text);

std::string format_cayley(FiniteGroup const& group);

//! Reads a whole file; throws IoError when it cannot be opened.
std::string read_text_file(std::filesystem::path const& path);

//! Loads a .gens or .cayley file according to its extension.
FiniteGroup load_group_file(std::filesystem::path const& path,
                            std::string                  id,
                            std::size_t max_order = default_max_order);

}  // namespace classprod

#endif  // CLASSPROD_GROUP_IO_HPP_
