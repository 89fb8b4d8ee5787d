#include "classprod/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "classprod/class_algebra.hpp"
#include "classprod/constructions.hpp"
#include "classprod/errors.hpp"
#include "classprod/group_io.hpp"
#include "classprod/report_json.hpp"
#include "classprod/search_harness.hpp"
#include "classprod/theorem_suite.hpp"

namespace classprod {

namespace {
  constexpr int exit_ok       = 0;
  constexpr int exit_fails    = 1;
  constexpr int exit_usage    = 2;
  constexpr int exit_centralizer = 3;

  // Raised for user errors that map to exit code 2.
  class UsageError : public Error {
    using Error::Error;
  };

  template <typename T>
  std::optional<T> parse_integer(std::string_view text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
      return std::nullopt;
    }
    return value;
  }

  std::optional<index_t> resolve_word(FiniteGroup const& G, std::string_view text) {
    auto const& gens   = G.generators();
    index_t     result = 0;
    while (!text.empty()) {
      auto const       star = text.find('*');
      std::string_view tok  = text.substr(0, star);
      text = star == std::string_view::npos ? std::string_view() : text.substr(star + 1);
      if (star != std::string_view::npos && text.empty()) {
        return std::nullopt;
      }
      if (tok.size() < 2 || tok[0] != 'g') {
        return std::nullopt;
      }
      std::int64_t     exponent = 1;
      auto const       caret    = tok.find('^');
      std::string_view number   = tok.substr(1, caret == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : caret - 1);
      if (caret != std::string_view::npos) {
        auto e = parse_integer<std::int64_t>(tok.substr(caret + 1));
        if (!e) {
          return std::nullopt;
        }
        exponent = *e;
      }
      auto k = parse_integer<std::size_t>(number);
      if (!k || *k >= gens.size()) {
        return std::nullopt;
      }
      result = G.product(result, G.power(gens[*k], exponent));
    }
    return result;
  }

  std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  // Left-aligned columns separated by two spaces.
  std::string format_table(std::vector<std::vector<std::string>> const& rows) {
    std::vector<std::size_t> width;
    for (auto const& row : rows) {
      width.resize(std::max(width.size(), row.size()));
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    std::string out;
    for (auto const& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) {
          line += std::string(width[c] - row[c].size() + 2, ' ');
        }
      }
      out += line + "\n";
    }
    return out;
  }

  FiniteGroup load_group(std::string const& spec) {
    return build_group(spec, max_order_from_env());
  }

  index_t select(FiniteGroup const& G, std::string const& text, char const* what) {
    auto x = resolve_selector(G, text);
    if (!x) {
      throw UsageError(std::string("cannot resolve ") + what + " selector \""
                       + text + "\" in " + G.id());
    }
    return *x;
  }

  std::string witness_text(Witness const& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.names.size(); ++i) {
      out += (i ? ", " : "") + w.names[i];
    }
    out += ")";
    for (auto const& [key, v] : w.values) {
      out += " " + key + "=";
      std::visit(
          [&](auto const& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>) {
              out += x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
              out += x;
            } else {
              out += std::to_string(x);
            }
          },
          v);
    }
    return out;
  }

  // ---------------------------------------------------------------------

  struct BuildArgs {
    std::string group, export_cayley;
    bool        json = false;
  };

  int cmd_build(BuildArgs const& a, std::ostream& out, std::ostream& err) {
    FiniteGroup const G = load_group(a.group);
    ScanFlags const   f = compute_flags(G);
    std::vector<std::string> gens;
    for (auto g : G.generators()) {
      gens.push_back(G.name(g));
    }
    if (!a.export_cayley.empty()) {
      std::ofstream file(a.export_cayley, std::ios::binary);
      file << format_cayley(G);
      if (!file) {
        throw IoError("cannot write " + a.export_cayley);
      }
      err << "wrote Cayley table to " << a.export_cayley << "\n";
    }
    if (a.json) {
      Json j{{"group_id", G.id()},
             {"order", G.order()},
             {"classes", G.class_table().count()},
             {"generators", gens},
             {"abelian", G.is_abelian()},
             {"center_order", G.center().size()},
             {"exponent", G.exponent()},
             {"flags", to_json(f)}};
      out << j.dump(2) << "\n";
      return exit_ok;
    }
    std::string joined;
    for (auto const& g : gens) {
      joined += (joined.empty() ? "" : " ") + g;
    }
    out << format_table({{"group:", G.id()},
                         {"order:", std::to_string(G.order())},
                         {"classes:", std::to_string(G.class_table().count())},
                         {"generators:", joined.empty() ? "-" : joined},
                         {"center order:", std::to_string(G.center().size())},
                         {"exponent:", std::to_string(G.exponent())},
                         {"abelian:", yes_no(G.is_abelian())},
                         {"nilpotent:", yes_no(f.nilpotent)},
                         {"supersolvable:", yes_no(f.supersolvable)},
                         {"simple nonabelian:", yes_no(f.simple_nonabelian)},
                         {"p-group:", yes_no(f.p_group)}});
    return exit_ok;
  }

  struct ClassesArgs {
    std::string group;
    bool        json = false;
  };

  int cmd_classes(ClassesArgs const& a, std::ostream& out) {
    FiniteGroup const G  = load_group(a.group);
    ClassTable const& ct = G.class_table();
    std::vector<std::vector<std::string>> rows{
        {"index", "name", "size", "|C(a)|", "|[a,G]|", "subgroup", "normal"}};
    Json j = Json::array();
    for (std::size_t k = 0; k < ct.count(); ++k) {
      index_t const    x    = ct.representative(k);
      ElementSet const comm = commutator_set(G, G.element(x));
      std::size_t const c   = centralizer(G, G.element(x)).size();
      bool const       sub  = is_subgroup(G, comm);
      bool const       nor  = sub && is_normal(G, comm);
      rows.push_back({std::to_string(x), G.name(x), std::to_string(ct.classes[k].size()),
                      std::to_string(c), std::to_string(comm.size()), yes_no(sub),
                      yes_no(nor)});
      j.push_back(Json{{"representative", x},
                       {"name", G.name(x)},
                       {"size", ct.classes[k].size()},
                       {"centralizer_order", c},
                       {"commutator_set_size", comm.size()},
                       {"commutator_set_is_subgroup", sub},
                       {"commutator_set_is_normal", nor}});
    }
    if (a.json) {
      out << Json{{"group_id", G.id()}, {"classes", j}}.dump(2) << "\n";
    } else {
      out << format_table(rows);
    }
    return exit_ok;
  }

  struct ProductArgs {
    std::string group, a, b;
    bool        require_equal = false;
    bool        json          = false;
  };

  int cmd_product(ProductArgs const& p, std::ostream& out, std::ostream& err) {
    FiniteGroup const G  = load_group(p.group);
    index_t const     a  = select(G, p.a, "-a");
    index_t const     b  = select(G, p.b, "-b");
    index_t const     ab = G.product(a, b);
    bool const equal = centralizer(G, G.element(a)) == centralizer(G, G.element(b));
    if (p.require_equal && !equal) {
      err << "note: C_G(" << G.name(a) << ") != C_G(" << G.name(b)
          << "); the equal-centralizer hypothesis does not hold\n";
      return exit_centralizer;
    }
    ElementSet const   ca   = conjugacy_class(G, G.element(a)).carrier;
    ElementSet const   cb   = conjugacy_class(G, G.element(b)).carrier;
    ElementSet const   prod = set_product(G, ca, cb);
    ClassDecomposition d    = decompose(G, prod);
    ElementSet const   A    = commutator_set(G, G.element(a));
    ElementSet const   B    = commutator_set(G, G.element(b));
    ElementSet const   AB   = commutator_set(G, G.element(ab));
    bool const         same = A == B && B == AB;
    bool const         nor  = is_normal(G, AB);
    bool const         hom  = d.eta() == 1;

    if (p.json) {
      Json classes = Json::array();
      for (auto const& c : d.classes) {
        classes.push_back(Json{{"representative", c.representative.index},
                               {"name", G.name(c.representative.index)},
                               {"size", c.size()}});
      }
      Json j{{"group_id", G.id()},
             {"a", a},
             {"a_name", G.name(a)},
             {"b", b},
             {"b_name", G.name(b)},
             {"a_class_size", ca.size()},
             {"b_class_size", cb.size()},
             {"product_size", prod.size()},
             {"eta", d.eta()},
             {"decomposition", classes},
             {"equal_centralizers", equal},
             {"commutator_sets_equal", same},
             {"ab_commutator_set_normal", nor},
             {"theorem_a_rhs", same && nor},
             {"homogeneous", hom}};
      out << j.dump(2) << "\n";
      return exit_ok;
    }
    out << format_table(
        {{"group:", G.id()},
         {"a:", G.name(a) + " (index " + std::to_string(a) + ")"},
         {"b:", G.name(b) + " (index " + std::to_string(b) + ")"},
         {"|a^G|:", std::to_string(ca.size())},
         {"|b^G|:", std::to_string(cb.size())},
         {"|a^G b^G|:", std::to_string(prod.size())},
         {"eta:", std::to_string(d.eta())}});
    out << "decomposition:\n";
    std::vector<std::vector<std::string>> rows;
    for (auto const& c : d.classes) {
      rows.push_back({"  " + G.name(c.representative.index),
                      "size " + std::to_string(c.size())});
    }
    out << format_table(rows);
    out << format_table(
        {{"equal centralizers:", yes_no(equal)},
         {"[a,G] = [b,G] = [ab,G]:", yes_no(same)},
         {"[ab,G] normal:", yes_no(nor)},
         {"theorem-a rhs:", yes_no(same && nor)},
         {"homogeneous:", yes_no(hom)}});
    return exit_ok;
  }

  struct CheckArgs {
    std::string statement, group, scope = "representatives";
    std::size_t n = 0, p = 3, copies = 1, normal_limit = 64, product_cap = 729;
    bool        json = false;
  };

  void print_report(VerifierReport const& r, std::ostream& out) {
    out << format_table({{r.statement_id, std::string(to_string(r.verdict)),
                          "pairs " + std::to_string(r.pairs_checked)}});
    for (auto const& s : r.sub_verdicts) {
      out << format_table({{"  " + s.clause, std::string(to_string(s.verdict)),
                            "pairs " + std::to_string(s.pairs_checked)}});
    }
    for (auto const& n : r.notes) {
      out << "    note: " << n << "\n";
    }
    if (r.verdict == Verdict::fails) {
      for (std::size_t i = 0; i < std::min<std::size_t>(r.witnesses.size(), 5); ++i) {
        out << "    witness: " << witness_text(r.witnesses[i]) << "\n";
      }
    }
    for (auto const& s : r.sub_verdicts) {
      if (s.verdict == Verdict::discrepancy || s.verdict == Verdict::fails) {
        for (std::size_t i = 0; i < std::min<std::size_t>(s.witnesses.size(), 5); ++i) {
          out << "    " << s.clause << " witness: " << witness_text(s.witnesses[i])
              << "\n";
        }
      }
    }
  }

  int cmd_check(CheckArgs const& c, std::ostream& out, std::ostream& err) {
    std::vector<VerifierReport> reports;
    bool single = c.statement != "all";
    if (c.statement == statement::eta1_witness) {
      if (c.n == 0) {
        throw UsageError("prop-eta1example needs --n");
      }
      reports.push_back(check_eta1_witness(c.n, max_order_from_env()));
    } else if (c.statement == statement::extraspecial_power) {
      reports.push_back(check_extraspecial_power(c.p, c.copies, max_order_from_env()));
    } else {
      auto const& ids = statement::group_statements();
      if (single && std::find(ids.begin(), ids.end(), c.statement) == ids.end()) {
        throw UsageError("unknown statement id \"" + c.statement + "\"");
      }
      if (c.group.empty()) {
        throw UsageError("check " + c.statement + " needs --group");
      }
      CheckOptions options;
      options.normal_subgroup_limit = c.normal_limit;
      options.direct_product_cap    = c.product_cap;
      if (c.scope == "all") {
        options.product_formula_scope = PairScope::all;
      } else if (c.scope == "class-representatives") {
        options.product_formula_scope = PairScope::class_representatives;
      } else if (c.scope != "representatives") {
        throw UsageError("unknown --scope \"" + c.scope + "\"");
      }
      FiniteGroup const G = load_group(c.group);
      if (single) {
        try {
          reports.push_back(check_statement(G, c.statement, options));
        } catch (HypothesisViolated const& e) {
          VerifierReport r;
          r.statement_id   = c.statement;
          r.group_id       = G.id();
          r.hypotheses_met = false;
          r.verdict        = Verdict::vacuous;
          r.notes.push_back(e.what());
          reports.push_back(std::move(r));
        }
      } else {
        reports = check_all(G, options);
      }
    }

    bool failed = false, discrepancy = false;
    for (auto const& r : reports) {
      failed      = failed || r.verdict == Verdict::fails;
      discrepancy = discrepancy || r.has_discrepancy();
    }
    if (c.json) {
      out << (single ? to_json(reports.front()) : to_json(reports)).dump(2) << "\n";
    } else {
      for (auto const& r : reports) {
        print_report(r, out);
      }
    }
    if (discrepancy) {
      std::string clauses;
      for (auto const& r : reports) {
        for (auto const& s : r.sub_verdicts) {
          if (s.verdict == Verdict::discrepancy) {
            clauses += (clauses.empty() ? "" : ", ") + r.statement_id + "/" + s.clause;
          }
        }
      }
      err << "*** DISCREPANCY: " << clauses
          << " disagrees with the computed main clause; see witnesses ***\n";
    }
    return failed ? exit_fails : exit_ok;
  }

  struct ScanArgs {
    std::string catalog, mode = "homogeneous", json_file;
    std::size_t workers      = 1;
    bool        summary_json = false;
    bool        all_pairs    = false;
  };

  int cmd_scan(ScanArgs const& s, std::ostream& out, std::ostream& err) {
    if (s.mode != "homogeneous" && s.mode != "open-question") {
      throw UsageError("unknown --mode \"" + s.mode + "\"");
    }
    Catalog const catalog = ingest(s.catalog, max_order_from_env());
    for (auto const& f : catalog.failures) {
      err << "warning: skipped " << f.path << ": " << f.message << "\n";
    }
    for (auto const& f : catalog.skipped) {
      err << "warning: skipped " << f.path << ": " << f.message << "\n";
    }
    std::vector<ScanRow> rows
        = s.mode == "open-question"
              ? open_question_scan(catalog, s.workers)
              : scan_homogeneous(catalog, ScanOptions{!s.all_pairs, s.workers});
    std::string const path
        = s.json_file.empty() ? "scan-" + s.mode + ".jsonl" : s.json_file;
    std::ofstream file(path, std::ios::binary);
    file << to_json_lines(rows);
    if (!file) {
      throw IoError("cannot write " + path);
    }
    err << "scanned " << catalog.entries.size() << " groups; wrote "
        << rows.size() << " rows to " << path << "\n";
    ScanSummary const summary = summarize(rows);
    if (s.summary_json) {
      out << to_json(summary).dump(2) << "\n";
    } else {
      out << format_summary(summary);
    }
    return exit_ok;
  }

  struct ConstructArgs {
    std::string what;
    std::size_t n    = 0;
    bool        json = false;
  };

  int cmd_construct(ConstructArgs const& c, std::ostream& out) {
    if (c.what != "eta1-witness") {
      throw UsageError("unknown construction \"" + c.what + "\"");
    }
    Eta1Witness const  w = odd_eta1_witness(c.n, max_order_from_env());
    FiniteGroup const& G = w.group;
    index_t const      a = w.element.index;
    std::size_t const  size = conjugacy_class(G, w.element).size();
    std::size_t const  e    = eta_of_product(G, w.element, w.element);
    if (c.json) {
      out << Json{{"n", c.n},
                  {"group_id", G.id()},
                  {"order", G.order()},
                  {"element", a},
                  {"element_name", G.name(a)},
                  {"class_size", size},
                  {"square_eta", e}}
                 .dump(2)
          << "\n";
      return exit_ok;
    }
    out << format_table({{"group:", G.id()},
                         {"order:", std::to_string(G.order())},
                         {"element:", G.name(a) + " (index " + std::to_string(a) + ")"},
                         {"|a^G|:", std::to_string(size)},
                         {"eta(a^G a^G):", std::to_string(e)}});
    return exit_ok;
  }
}  // namespace

std::optional<index_t> resolve_selector(FiniteGroup const& G,
                                        std::string_view   text) {
  if (auto x = G.find_name(text)) {
    return x;
  }
  if (auto x = parse_integer<std::size_t>(text)) {
    if (*x < G.order()) {
      return static_cast<index_t>(*x);
    }
    return std::nullopt;
  }
  return resolve_word(G, text);
}

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Conjugacy class products in finite groups", "classprod"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every verb");

  BuildArgs build;
  auto*     build_cmd = app.add_subcommand("build", "Build a group and summarise it");
  build_cmd->add_option("--group", build.group, "Group spec")->required();
  build_cmd->add_option("--export-cayley", build.export_cayley,
                        "Write the Cayley table to this file");
  build_cmd->add_flag("--json", build.json, "JSON output");

  ClassesArgs classes;
  auto* classes_cmd = app.add_subcommand("classes", "List conjugacy classes");
  classes_cmd->add_option("--group", classes.group, "Group spec")->required();
  classes_cmd->add_flag("--json", classes.json, "JSON output");

  ProductArgs product;
  auto* product_cmd = app.add_subcommand("product", "Product of two classes");
  product_cmd->add_option("--group", product.group, "Group spec")->required();
  product_cmd->add_option("-a", product.a, "Element selector")->required();
  product_cmd->add_option("-b", product.b, "Element selector")->required();
  product_cmd->add_flag("--require-equal-centralizers", product.require_equal,
                        "Exit 3 unless C_G(a) = C_G(b)");
  product_cmd->add_flag("--json", product.json, "JSON output");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run statement verifiers");
  check_cmd->add_option("statement", check.statement, "Statement id or 'all'")
      ->required();
  check_cmd->add_option("--group", check.group, "Group spec");
  check_cmd->add_option("--n", check.n, "n for prop-eta1example");
  check_cmd->add_option("--p", check.p, "p for lemma-observation2");
  check_cmd->add_option("--copies", check.copies, "copies for lemma-observation2");
  check_cmd->add_option("--scope", check.scope,
                        "lemma-productsn pairs: representatives, "
                        "class-representatives or all");
  check_cmd->add_option("--normal-limit", check.normal_limit,
                        "Normal subgroups examined by lemma-quotient-eta");
  check_cmd->add_option("--product-cap", check.product_cap,
                        "Largest |G|^2 for lemma-observation1");
  check_cmd->add_flag("--json", check.json, "JSON output");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Scan a catalog for homogeneous products");
  scan_cmd->add_option("--catalog", scan.catalog, "Directory of .gens/.cayley files")
      ->required();
  scan_cmd->add_option("--mode", scan.mode, "homogeneous or open-question");
  scan_cmd->add_option("--json", scan.json_file,
                       "JSON Lines output file (default scan-<mode>.jsonl)");
  scan_cmd->add_flag("--summary-json", scan.summary_json, "Print the summary as JSON");
  scan_cmd->add_option("--workers", scan.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--all-pairs", scan.all_pairs,
                     "Do not require equal centralizers (homogeneous mode)");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build example groups");
  construct_cmd->add_option("what", construct.what, "eta1-witness")->required();
  construct_cmd->add_option("--n", construct.n, "Odd class size")->required();
  construct_cmd->add_flag("--json", construct.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*build_cmd) {
      return cmd_build(build, out, err);
    }
    if (*classes_cmd) {
      return cmd_classes(classes, out);
    }
    if (*product_cmd) {
      return cmd_product(product, out, err);
    }
    if (*check_cmd) {
      return cmd_check(check, out, err);
    }
    if (*scan_cmd) {
      return cmd_scan(scan, out, err);
    }
    if (*construct_cmd) {
      return cmd_construct(construct, out);
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace classprod
