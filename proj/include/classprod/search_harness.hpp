// Catalog-wide scans for homogeneous class products.
//
// A catalog is a list of group specs: the built-in groups plus .gens and
// .cayley files ingested from directories. Scans run one task per group
// (optionally on several worker threads) and merge rows in canonical order,
// so output does not depend on the worker count.
//
// Pair enumeration. With equal centralizers required, a ranges over class
// representatives and b over every element with C_G(b) = C_G(a); otherwise
// both a and b range over class representatives. eta(a^G b^G) depends only
// on the classes of a and b, and the centralizer condition is covariant under
// simultaneous conjugation, so no homogeneous class pair is missed.

#ifndef CLASSPROD_SEARCH_HARNESS_HPP_
#define CLASSPROD_SEARCH_HARNESS_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "classprod/constructions.hpp"
#include "classprod/finite_group.hpp"

namespace classprod {

struct IngestIssue {
  std::string path;
  std::string message;

  friend bool operator==(IngestIssue const&, IngestIssue const&) = default;
};

struct Catalog {
  std::vector<GroupSpec>   entries;
  std::vector<std::string> source_dirs;
  std::size_t              order_cap = default_max_order;
  //! Files that could not be parsed or are not groups.
  std::vector<IngestIssue> failures;
  //! Entries skipped because their order is above order_cap.
  std::vector<IngestIssue> skipped;
};

//! cyclic:1..12, dihedral:3..6, sym:3..4, alt:4..5, q8, es:3.
std::vector<GroupSpec> small_builtin_specs();

//! small_builtin_specs() followed by larger groups up to order 3375.
std::vector<GroupSpec> builtin_specs();

//! Adds specs in order, dropping duplicates (by canonical spelling) and
//! entries above the cap (recorded in `skipped`).
void add_entries(Catalog& catalog, std::vector<GroupSpec> const& specs);

//! The built-in groups under the cap.
Catalog builtin_catalog(std::size_t order_cap = max_order_from_env());

//! Built-ins plus every .gens/.cayley file in `dir` (sorted by file name).
//! Malformed files land in `failures`. Throws IoError if `dir` is not a
//! readable directory.
Catalog ingest(std::filesystem::path const& dir,
               std::size_t                  order_cap = max_order_from_env());

struct ScanFlags {
  bool nilpotent         = false;
  bool supersolvable     = false;
  bool simple_nonabelian = false;
  bool odd_order         = false;
  bool p_group           = false;

  friend bool operator==(ScanFlags const&, ScanFlags const&) = default;
};

ScanFlags compute_flags(FiniteGroup const& G);

struct ScanRow {
  std::string group_id;
  std::size_t order = 0;
  index_t     a_rep = 0;
  index_t     b_rep = 0;
  std::string a_name;
  std::string b_name;
  std::size_t a_class_size       = 0;
  std::size_t eta                = 0;
  bool        equal_centralizers = false;
  bool        homogeneous        = false;
  ScanFlags   flags;

  friend bool operator==(ScanRow const&, ScanRow const&) = default;
};

//! Sort order of scan output: (order, group_id, a_rep, b_rep).
bool scan_row_less(ScanRow const& x, ScanRow const& y);

struct ScanOptions {
  bool        require_equal_centralizers = true;
  std::size_t workers                    = 1;
};

//! Homogeneous rows of one group. Every row with equal centralizers is
//! re-checked against the right-hand side of Theorem A; a mismatch throws
//! InternalContradiction.
std::vector<ScanRow> scan_group_homogeneous(FiniteGroup const& G,
                                            bool require_equal_centralizers);

std::vector<ScanRow> scan_homogeneous(Catalog const&     catalog,
                                      ScanOptions const& options = {});

//! Homogeneous equal-centralizer rows with |a^G| = 2^n, n >= 1. Throws
//! InternalContradiction if a hit lies in a supersolvable group.
std::vector<ScanRow> open_question_scan(Catalog const& catalog,
                                        std::size_t    workers = 1);

//! [ab,G] = [a,G] = [b,G] and [ab,G] normal.
bool theorem_a_rhs(FiniteGroup const& G, index_t a, index_t b);

struct ScanSummary {
  std::size_t total = 0;
  //! Row counts per group, in row order.
  std::vector<std::pair<std::string, std::size_t>> by_group;
  //! Row counts per |a^G|, ascending.
  std::vector<std::pair<std::size_t, std::size_t>> by_class_size;
  //! Row counts per flag, in ScanFlags field order.
  std::vector<std::pair<std::string, std::size_t>> by_flag;

  friend bool operator==(ScanSummary const&, ScanSummary const&) = default;
};

ScanSummary summarize(std::vector<ScanRow> const& rows);

//! Plain-text table of a summary.
std::string format_summary(ScanSummary const& summary);

}  // namespace classprod

#endif  // CLASSPROD_SEARCH_HARNESS_HPP_
