// The `classprod` command line, callable in-process.
//
// Verbs: build, classes, product, check, scan, construct. Exit codes:
//   0  success; for `check`, every verdict holds or is vacuous (a
//      DISCREPANCY banner is printed when a sub-verdict disagrees)
//   1  `check` found a failing verdict
//   2  bad arguments, group spec, statement id, selector or catalog directory
//   3  `product --require-equal-centralizers` with C_G(a) != C_G(b)

#ifndef CLASSPROD_CLI_HPP_
#define CLASSPROD_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "classprod/finite_group.hpp"

namespace classprod {

//! Resolves an element selector: an element name, then a decimal index,
//! then a generator word such as `g0*g1^2` or `g1^-1`. Returns nullopt when
//! nothing matches.
std::optional<index_t> resolve_selector(FiniteGroup const& G,
                                        std::string_view   text);

//! `args` excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace classprod

#endif  // CLASSPROD_CLI_HPP_
