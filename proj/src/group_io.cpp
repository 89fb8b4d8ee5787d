#include "classprod/group_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "classprod/errors.hpp"

namespace classprod {

namespace {
  std::string_view trim(std::string_view s) {
    auto const ws = " \t\r\n\f\v";
    auto       b  = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
      return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  }

  std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t                   start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      out.push_back(text.substr(start, end - start));
      start = end + 1;
    }
    return out;
  }

  std::size_t parse_count(std::string_view s, std::string const& what) {
    std::size_t value = 0;
    auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("expected a non-negative integer for " + what + ", got \""
                       + std::string(s) + "\"");
    }
    return value;
  }
}  // namespace

GeneratorFile parse_gens(std::string_view text) {
  GeneratorFile            out;
  std::vector<std::string> cycle_lines;
  std::size_t              lineno = 0;
  for (auto raw : lines_of(text)) {
    ++lineno;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    auto sp      = line.find_first_of(" \t");
    auto keyword = line.substr(0, sp);
    auto rest    = sp == std::string_view::npos ? std::string_view{}
                                                : trim(line.substr(sp));
    if (keyword == "degree") {
      if (out.degree != 0) {
        throw ParseError("line " + std::to_string(lineno)
                         + ": duplicate degree line");
      }
      out.degree = parse_count(rest, "degree");
      if (out.degree == 0) {
        throw ParseError("line " + std::to_string(lineno)
                         + ": degree must be positive");
      }
    } else if (keyword == "gen") {
      if (out.degree == 0) {
        throw ParseError("line " + std::to_string(lineno)
                         + ": gen line before degree line");
      }
      out.generators.push_back(Permutation::from_cycles(rest, out.degree));
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown keyword \""
                       + std::string(keyword) + "\"");
    }
  }
  if (out.degree == 0) {
    throw ParseError("missing degree line");
  }
  if (out.generators.empty()) {
    throw ParseError("no gen lines");
  }
  return out;
}

std::vector<std::vector<index_t>> parse_cayley(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string        token;
  if (!(in >> token)) {
    throw ParseError("empty Cayley file");
  }
  std::size_t n = parse_count(token, "Cayley order");
  if (n == 0) {
    throw ParseError("Cayley order must be positive");
  }
  std::vector<std::vector<index_t>> table(n, std::vector<index_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> token)) {
        throw ParseError("Cayley table truncated at row " + std::to_string(i)
                         + ", column " + std::to_string(j));
      }
      std::size_t v = parse_count(token, "Cayley entry");
      if (v >= n) {
        throw ParseError("Cayley entry " + std::to_string(v)
                         + " out of range at row " + std::to_string(i));
      }
      table[i][j] = static_cast<index_t>(v);
    }
  }
  if (in >> token) {
    throw ParseError("trailing data after Cayley table");
  }
  return table;
}

std::string format_cayley(FiniteGroup const& group) {
  std::string       out = std::to_string(group.order()) + "\n";
  std::size_t const n   = group.order();
  for (index_t a = 0; a < n; ++a) {
    for (index_t b = 0; b < n; ++b) {
      if (b != 0) {
        out += ' ';
      }
      out += std::to_string(group.product(a, b));
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteGroup load_group_file(std::filesystem::path const& path,
                            std::string                  id,
                            std::size_t                  max_order) {
  auto ext  = path.extension().string();
  auto text = read_text_file(path);
  if (ext == ".gens") {
    auto file = parse_gens(text);
    return close_from_generators(file.generators, max_order, std::move(id));
  }
  if (ext == ".cayley") {
    return from_cayley_table(parse_cayley(text), std::move(id), max_order);
  }
  throw ParseError("unknown group file extension \"" + ext + "\" for "
                   + path.string());
}

}  // namespace classprod
