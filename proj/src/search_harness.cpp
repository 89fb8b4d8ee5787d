#include "classprod/search_harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "classprod/arith.hpp"
#include "classprod/class_algebra.hpp"
#include "classprod/errors.hpp"
#include "classprod/group_io.hpp"
#include "classprod/theorem_suite.hpp"

namespace classprod {

namespace {
  GroupSpec atom(GroupKind kind, std::size_t parameter) {
    return GroupSpec{kind, parameter, {}, {}};
  }

  GroupSpec product_of(std::vector<GroupSpec> factors) {
    return GroupSpec{GroupKind::direct_product, 0, std::move(factors), {}};
  }

  std::size_t saturating_mul(std::size_t x, std::size_t y, std::size_t cap) {
    if (x != 0 && y > (cap + 1) / x) {
      return cap + 1;
    }
    return std::min(x * y, cap + 1);
  }

  // Order of a named group without building it; 0 for file specs.
  std::size_t nominal_order(GroupSpec const& spec, std::size_t cap) {
    switch (spec.kind) {
      case GroupKind::cyclic:
        return spec.parameter;
      case GroupKind::dihedral:
        return 2 * spec.parameter;
      case GroupKind::symmetric:
      case GroupKind::alternating: {
        std::size_t f = 1;
        for (std::size_t k = 2; k <= spec.parameter; ++k) {
          f = saturating_mul(f, k, 2 * cap + 1);
        }
        if (spec.kind == GroupKind::alternating && spec.parameter >= 2) {
          f /= 2;
        }
        return std::min(f, cap + 1);
      }
      case GroupKind::quaternion8:
        return 8;
      case GroupKind::extraspecial_p3:
        return saturating_mul(spec.parameter * spec.parameter, spec.parameter, cap);
      case GroupKind::direct_product: {
        std::size_t n = 1;
        for (auto const& f : spec.factors) {
          std::size_t const m = nominal_order(f, cap);
          if (m == 0) {
            return 0;
          }
          n = saturating_mul(n, m, cap);
        }
        return n;
      }
      case GroupKind::from_file:
        return 0;
    }
    return 0;
  }

  // Runs task(i) for i in [0, count) on up to `workers` threads. The first
  // exception (by task index) is rethrown after all threads finish.
  template <typename Task>
  void run_tasks(std::size_t count, std::size_t workers, Task task) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t>        next{0};
    auto                            worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

  template <typename PerGroup>
  std::vector<ScanRow> scan_catalog(Catalog const& catalog, std::size_t workers,
                                    PerGroup per_group) {
    std::vector<std::vector<ScanRow>> parts(catalog.entries.size());
    run_tasks(catalog.entries.size(), workers, [&](std::size_t i) {
      parts[i] = per_group(build_group(catalog.entries[i], catalog.order_cap));
    });
    std::vector<ScanRow> rows;
    for (auto& p : parts) {
      rows.insert(rows.end(), p.begin(), p.end());
    }
    std::sort(rows.begin(), rows.end(), scan_row_less);
    return rows;
  }
}  // namespace

std::vector<GroupSpec> small_builtin_specs() {
  std::vector<GroupSpec> out;
  for (std::size_t n = 1; n <= 12; ++n) {
    out.push_back(atom(GroupKind::cyclic, n));
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    out.push_back(atom(GroupKind::dihedral, n));
  }
  out.push_back(atom(GroupKind::symmetric, 3));
  out.push_back(atom(GroupKind::symmetric, 4));
  out.push_back(atom(GroupKind::alternating, 4));
  out.push_back(atom(GroupKind::alternating, 5));
  out.push_back(atom(GroupKind::quaternion8, 0));
  out.push_back(atom(GroupKind::extraspecial_p3, 3));
  return out;
}

std::vector<GroupSpec> builtin_specs() {
  std::vector<GroupSpec> out = small_builtin_specs();
  for (std::size_t n = 7; n <= 12; ++n) {
    out.push_back(atom(GroupKind::dihedral, n));
  }
  out.push_back(atom(GroupKind::symmetric, 5));
  out.push_back(atom(GroupKind::symmetric, 6));
  out.push_back(atom(GroupKind::alternating, 6));
  out.push_back(atom(GroupKind::extraspecial_p3, 5));
  out.push_back(atom(GroupKind::extraspecial_p3, 7));
  GroupSpec const c2 = atom(GroupKind::cyclic, 2);
  GroupSpec const q8 = atom(GroupKind::quaternion8, 0);
  GroupSpec const e3 = atom(GroupKind::extraspecial_p3, 3);
  out.push_back(product_of({c2, c2, c2}));
  out.push_back(product_of({q8, c2}));
  out.push_back(product_of({q8, atom(GroupKind::symmetric, 3)}));
  out.push_back(product_of({q8, q8}));
  out.push_back(product_of({atom(GroupKind::symmetric, 3),
                            atom(GroupKind::symmetric, 3)}));
  out.push_back(product_of({atom(GroupKind::alternating, 4), c2}));
  out.push_back(product_of({e3, e3}));
  out.push_back(product_of({e3, atom(GroupKind::extraspecial_p3, 5)}));
  return out;
}

void add_entries(Catalog& catalog, std::vector<GroupSpec> const& specs) {
  std::set<std::string> seen;
  for (auto const& e : catalog.entries) {
    seen.insert(e.to_string());
  }
  for (auto const& spec : specs) {
    std::string const name = spec.to_string();
    if (seen.count(name)) {
      continue;
    }
    std::size_t const n = nominal_order(spec, catalog.order_cap);
    if (n > catalog.order_cap) {
      catalog.skipped.push_back(
          IngestIssue{name, "order above cap " + std::to_string(catalog.order_cap)});
      continue;
    }
    seen.insert(name);
    catalog.entries.push_back(spec);
  }
}

Catalog builtin_catalog(std::size_t order_cap) {
  Catalog catalog;
  catalog.order_cap = order_cap;
  add_entries(catalog, builtin_specs());
  return catalog;
}

Catalog ingest(std::filesystem::path const& dir, std::size_t order_cap) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("cannot read catalog directory " + dir.string());
  }
  std::vector<fs::path> files;
  fs::directory_iterator it(dir, ec);
  if (ec) {
    throw IoError("cannot read catalog directory " + dir.string() + ": "
                  + ec.message());
  }
  for (auto const& entry : it) {
    auto ext = entry.path().extension();
    if (entry.is_regular_file(ec) && (ext == ".gens" || ext == ".cayley")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  Catalog catalog = builtin_catalog(order_cap);
  catalog.source_dirs.push_back(dir.string());
  std::vector<GroupSpec> specs;
  for (auto const& path : files) {
    GroupSpec spec{GroupKind::from_file, 0, {}, path.generic_string()};
    try {
      load_group_file(path, spec.to_string(), order_cap);
      specs.push_back(std::move(spec));
    } catch (OrderExceeded const& e) {
      catalog.skipped.push_back(IngestIssue{path.generic_string(), e.what()});
    } catch (Error const& e) {
      catalog.failures.push_back(IngestIssue{path.generic_string(), e.what()});
    }
  }
  add_entries(catalog, specs);
  return catalog;
}

ScanFlags compute_flags(FiniteGroup const& G) {
  ScanFlags f;
  f.nilpotent         = is_nilpotent(G);
  f.supersolvable     = is_supersolvable(G);
  f.simple_nonabelian = is_simple_nonabelian(G);
  f.odd_order         = G.order() % 2 == 1;
  f.p_group           = is_p_group(G);
  return f;
}

bool scan_row_less(ScanRow const& x, ScanRow const& y) {
  return std::tie(x.order, x.group_id, x.a_rep, x.b_rep)
         < std::tie(y.order, y.group_id, y.a_rep, y.b_rep);
}

bool theorem_a_rhs(FiniteGroup const& G, index_t a, index_t b) {
  ElementSet const A  = commutator_set(G, G.element(a));
  ElementSet const B  = commutator_set(G, G.element(b));
  ElementSet const AB = commutator_set(G, G.element(G.product(a, b)));
  return A == B && B == AB && is_normal(G, AB);
}

std::vector<ScanRow> scan_group_homogeneous(FiniteGroup const& G,
                                            bool require_equal_centralizers) {
  ClassTable const&    ct = G.class_table();
  std::vector<index_t> reps;
  for (std::size_t k = 0; k < ct.count(); ++k) {
    reps.push_back(ct.representative(k));
  }
  std::vector<std::pair<index_t, index_t>> pairs;
  if (require_equal_centralizers) {
    for (auto const& p : equal_centralizer_pairs(G)) {
      pairs.emplace_back(p.a.index, p.b.index);
    }
  } else {
    for (auto a : reps) {
      for (auto b : reps) {
        pairs.emplace_back(a, b);
      }
    }
  }

  std::vector<ElementSet> classes;
  for (auto const& members : ct.classes) {
    classes.push_back(G.make_set(members));
  }
  std::vector<std::optional<ElementSet>> centralizers(G.order());
  auto centralizer_of = [&](index_t x) -> ElementSet const& {
    if (!centralizers[x]) {
      centralizers[x] = centralizer(G, G.element(x));
    }
    return *centralizers[x];
  };

  std::optional<ScanFlags> flags;
  std::vector<ScanRow>     rows;
  for (auto [a, b] : pairs) {
    ElementSet const& ca = classes[ct.class_of[a]];
    ElementSet const  product = set_product(G, ca, classes[ct.class_of[b]]);
    std::size_t const e       = eta(G, product);
    if (e != 1) {
      continue;
    }
    bool const equal = centralizer_of(a) == centralizer_of(b);
    if (equal && !theorem_a_rhs(G, a, b)) {
      throw InternalContradiction("homogeneous pair (" + G.name(a) + ", "
                                  + G.name(b) + ") in " + G.id()
                                  + " fails the right-hand side of Theorem A");
    }
    if (!flags) {
      flags = compute_flags(G);
    }
    ScanRow row;
    row.group_id           = G.id();
    row.order              = G.order();
    row.a_rep              = a;
    row.b_rep              = b;
    row.a_name             = G.name(a);
    row.b_name             = G.name(b);
    row.a_class_size       = ca.size();
    row.eta                = e;
    row.equal_centralizers = equal;
    row.homogeneous        = true;
    row.flags              = *flags;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), scan_row_less);
  return rows;
}

std::vector<ScanRow> scan_homogeneous(Catalog const&     catalog,
                                      ScanOptions const& options) {
  return scan_catalog(catalog, options.workers, [&](FiniteGroup const& G) {
    return scan_group_homogeneous(G, options.require_equal_centralizers);
  });
}

std::vector<ScanRow> open_question_scan(Catalog const& catalog,
                                        std::size_t    workers) {
  return scan_catalog(catalog, workers, [](FiniteGroup const& G) {
    ClassTable const& ct        = G.class_table();
    bool              candidate = false;
    for (auto const& c : ct.classes) {
      candidate = candidate || is_power_of_two_above_one(c.size());
    }
    std::vector<ScanRow> hits;
    if (!candidate) {
      return hits;
    }
    for (auto& row : scan_group_homogeneous(G, true)) {
      if (!is_power_of_two_above_one(row.a_class_size)) {
        continue;
      }
      if (row.flags.supersolvable) {
        throw InternalContradiction(
            "supersolvable group " + G.id() + " has a homogeneous class square "
            "of 2-power size at (" + row.a_name + ", " + row.b_name + ")");
      }
      hits.push_back(std::move(row));
    }
    return hits;
  });
}

ScanSummary summarize(std::vector<ScanRow> const& rows) {
  ScanSummary                       s;
  std::map<std::size_t, std::size_t> sizes;
  std::size_t nil = 0, sup = 0, simple = 0, odd = 0, pg = 0;
  for (auto const& r : rows) {
    ++s.total;
    if (s.by_group.empty() || s.by_group.back().first != r.group_id) {
      s.by_group.emplace_back(r.group_id, 0);
    }
    ++s.by_group.back().second;
    ++sizes[r.a_class_size];
    nil += r.flags.nilpotent;
    sup += r.flags.supersolvable;
    simple += r.flags.simple_nonabelian;
    odd += r.flags.odd_order;
    pg += r.flags.p_group;
  }
  s.by_class_size.assign(sizes.begin(), sizes.end());
  s.by_flag = {{"nilpotent", nil},
               {"supersolvable", sup},
               {"simple_nonabelian", simple},
               {"odd_order", odd},
               {"p_group", pg}};
  return s;
}

std::string format_summary(ScanSummary const& s) {
  std::ostringstream out;
  out << "rows: " << s.total << "\n";
  if (s.total == 0) {
    return out.str();
  }
  std::size_t width = 5;
  for (auto const& [g, n] : s.by_group) {
    width = std::max(width, g.size());
  }
  out << "\n" << std::string("group") << std::string(width - 5 + 2, ' ')
      << "rows\n";
  for (auto const& [g, n] : s.by_group) {
    out << g << std::string(width - g.size() + 2, ' ') << n << "\n";
  }
  out << "\n|a^G|  rows\n";
  for (auto const& [size, n] : s.by_class_size) {
    std::string const k = std::to_string(size);
    out << k << std::string(k.size() < 7 ? 7 - k.size() : 1, ' ') << n << "\n";
  }
  out << "\nflag               rows\n";
  for (auto const& [flag, n] : s.by_flag) {
    out << flag << std::string(19 - flag.size(), ' ') << n << "\n";
  }
  return out.str();
}

}  // namespace classprod
