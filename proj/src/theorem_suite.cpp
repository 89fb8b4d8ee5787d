#include "classprod/theorem_suite.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

#include "classprod/arith.hpp"
#include "classprod/class_algebra.hpp"
#include "classprod/constructions.hpp"
#include "classprod/errors.hpp"

namespace classprod {

namespace statement {
  std::vector<std::string_view> const& group_statements() {
    static std::vector<std::string_view> const ids = {
        theorem_a,           theorem_b, product_formula,
        subgroup_is_normal,  quotient_eta,
        center_intersection, size2,     supersolvable_pow2,
        nilpotent_odd,       direct_product_eta};
    return ids;
  }
}  // namespace statement

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::vacuous:
      return "vacuous";
    case Verdict::discrepancy:
      return "discrepancy";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view name) {
  for (auto v : {Verdict::holds, Verdict::fails, Verdict::vacuous,
                 Verdict::discrepancy}) {
    if (to_string(v) == name) {
      return v;
    }
  }
  throw Error("unknown verdict \"" + std::string(name) + "\"");
}

bool VerifierReport::has_discrepancy() const noexcept {
  return std::any_of(sub_verdicts.begin(), sub_verdicts.end(),
                     [](SubVerdict const& s) {
                       return s.verdict == Verdict::discrepancy;
                     });
}

namespace {
  constexpr std::size_t witness_limit = 32;

  // Memoised per-element sets for one group. Each set is computed by the
  // corresponding class_algebra function on first request.
  class Cache {
   public:
    explicit Cache(FiniteGroup const& G)
        : _G(G), _classes(G.order()), _commutators(G.order()),
          _centralizers(G.order()) {}

    FiniteGroup const& group() const noexcept {
      return _G;
    }

    ElementSet const& klass(index_t x) {
      if (!_classes[x]) {
        _classes[x] = conjugacy_class(_G, _G.element(x)).carrier;
      }
      return *_classes[x];
    }

    ElementSet const& commutators(index_t x) {
      if (!_commutators[x]) {
        _commutators[x] = commutator_set(_G, _G.element(x));
      }
      return *_commutators[x];
    }

    ElementSet const& centralizer_of(index_t x) {
      if (!_centralizers[x]) {
        _centralizers[x] = centralizer(_G, _G.element(x));
      }
      return *_centralizers[x];
    }

    ElementSet const& center() {
      if (!_center) {
        _center = _G.center();
      }
      return *_center;
    }

    ElementSet class_product(index_t a, index_t b) {
      return set_product(_G, klass(a), klass(b));
    }

   private:
    FiniteGroup                            _G;
    std::vector<std::optional<ElementSet>> _classes;
    std::vector<std::optional<ElementSet>> _commutators;
    std::vector<std::optional<ElementSet>> _centralizers;
    std::optional<ElementSet>              _center;
  };

  Witness make_witness(FiniteGroup const&                                  G,
                       std::vector<index_t>                                elements,
                       std::vector<std::pair<std::string, WitnessValue>> values) {
    Witness w;
    for (auto x : elements) {
      w.names.push_back(G.name(x));
    }
    w.elements = std::move(elements);
    w.values   = std::move(values);
    return w;
  }

  WitnessValue num(std::size_t v) {
    return WitnessValue(static_cast<std::int64_t>(v));
  }

  // Accumulates per-case outcomes into a verdict.
  class Tally {
   public:
    void pass() {
      ++_checked;
    }

    void fail(Witness w) {
      ++_checked;
      ++_failures;
      if (_witnesses.size() < witness_limit) {
        _witnesses.push_back(std::move(w));
      }
    }

    void record(bool ok, Witness w) {
      if (ok) {
        pass();
      } else {
        fail(std::move(w));
      }
    }

    std::size_t checked() const noexcept {
      return _checked;
    }

    Verdict verdict(Verdict on_failure = Verdict::fails) const noexcept {
      if (_failures > 0) {
        return on_failure;
      }
      return _checked == 0 ? Verdict::vacuous : Verdict::holds;
    }

    void finish(VerifierReport& r) {
      r.pairs_checked = _checked;
      r.verdict       = verdict();
      omitted_note(r.notes);
      r.witnesses.insert(r.witnesses.end(), _witnesses.begin(), _witnesses.end());
    }

    SubVerdict sub(std::string_view clause) {
      SubVerdict s;
      s.clause        = std::string(clause);
      s.pairs_checked = _checked;
      s.verdict       = verdict(Verdict::discrepancy);
      s.witnesses     = _witnesses;
      return s;
    }

    void omitted_note(std::vector<std::string>& notes) const {
      if (_failures > _witnesses.size()) {
        notes.push_back(std::to_string(_failures - _witnesses.size())
                        + " further failing cases omitted");
      }
    }

   private:
    std::size_t          _checked  = 0;
    std::size_t          _failures = 0;
    std::vector<Witness> _witnesses;
  };

  VerifierReport start(std::string_view id, FiniteGroup const& G) {
    VerifierReport r;
    r.statement_id   = std::string(id);
    r.group_id       = G.id();
    r.hypotheses_met = true;
    return r;
  }

  std::vector<index_t> representatives(FiniteGroup const& G) {
    ClassTable const&    ct = G.class_table();
    std::vector<index_t> reps;
    for (std::size_t k = 0; k < ct.count(); ++k) {
      reps.push_back(ct.representative(k));
    }
    return reps;
  }

  std::vector<std::pair<index_t, index_t>> equal_centralizer_index_pairs(
      Cache& cache) {
    FiniteGroup const& G = cache.group();
    std::unordered_map<ElementSet, std::vector<index_t>, ElementSetHash> by_centralizer;
    for (index_t b = 0; b < G.order(); ++b) {
      by_centralizer[cache.centralizer_of(b)].push_back(b);
    }
    std::vector<std::pair<index_t, index_t>> pairs;
    for (auto a : representatives(G)) {
      for (auto b : by_centralizer.at(cache.centralizer_of(a))) {
        pairs.emplace_back(a, b);
      }
    }
    return pairs;
  }

  // ---------------------------------------------------------------------
  // Theorem A

  struct TheoremAEval {
    bool        lhs               = false;
    bool        commutators_equal = false;
    bool        ab_normal         = false;
    bool        rhs               = false;
    std::size_t eta               = 0;
    std::size_t a_size = 0, b_size = 0, ab_size = 0;
    // b = a only
    bool a_normal        = false;
    bool a_is_center     = false;
    std::size_t a_comm_size = 0;
  };

  TheoremAEval evaluate_theorem_a(Cache& cache, index_t a, index_t b) {
    FiniteGroup const& G  = cache.group();
    index_t const      ab = G.product(a, b);
    TheoremAEval       e;

    ElementSet const product = cache.class_product(a, b);
    e.lhs    = product == cache.klass(ab);
    e.eta    = eta(G, product);
    e.a_size = cache.klass(a).size();
    e.b_size = cache.klass(b).size();
    e.ab_size = cache.klass(ab).size();

    ElementSet const& A  = cache.commutators(a);
    ElementSet const& B  = cache.commutators(b);
    ElementSet const& AB = cache.commutators(ab);
    e.commutators_equal  = A == B && B == AB;
    e.ab_normal          = is_normal(G, AB);
    e.rhs                = e.commutators_equal && e.ab_normal;
    if (a == b) {
      e.a_normal    = is_normal(G, A);
      e.a_is_center = A == cache.center();
      e.a_comm_size = A.size();
    }
    return e;
  }

  Witness theorem_a_witness(FiniteGroup const& G, index_t a, index_t b,
                            TheoremAEval const& e) {
    return make_witness(G, {a, b},
                        {{"a_class_size", num(e.a_size)},
                         {"b_class_size", num(e.b_size)},
                         {"ab_class_size", num(e.ab_size)},
                         {"eta", num(e.eta)},
                         {"lhs_homogeneous", e.lhs},
                         {"commutator_sets_equal", e.commutators_equal},
                         {"ab_commutator_set_normal", e.ab_normal},
                         {"rhs", e.rhs}});
  }

  Witness in_particular_witness(FiniteGroup const& G, index_t a,
                                TheoremAEval const& e) {
    return make_witness(G, {a},
                        {{"a_class_size", num(e.a_size)},
                         {"eta", num(e.eta)},
                         {"lhs_homogeneous", e.lhs},
                         {"a_commutator_set_size", num(e.a_comm_size)},
                         {"a_commutator_set_is_center", e.a_is_center},
                         {"a_commutator_set_normal", e.a_normal}});
  }

  constexpr char const* in_particular_note
      = "in-particular clause tracked separately: a^G a^G = (a^2)^G iff "
        "[a,G] is normal";

  // ---------------------------------------------------------------------
  // Lemma: quotient eta

  struct QuotientEval {
    bool        disjoint_quotient = false;
    bool        disjoint_group    = false;
    std::size_t eta_quotient      = 0;
    std::size_t eta_group         = 0;

    bool pullback_holds() const noexcept {
      return !disjoint_quotient || disjoint_group;
    }
    bool monotone() const noexcept {
      return eta_quotient <= eta_group;
    }
  };

  Witness quotient_witness(FiniteGroup const& G, ElementSet const& N, index_t a,
                           index_t b, QuotientEval const& e) {
    return make_witness(G, {a, b},
                        {{"normal_subgroup_order", num(N.size())},
                         {"quotient_classes_disjoint", e.disjoint_quotient},
                         {"classes_disjoint", e.disjoint_group},
                         {"eta_quotient", num(e.eta_quotient)},
                         {"eta", num(e.eta_group)}});
  }

  void p_group_scope_note(FiniteGroup const& G, VerifierReport& r) {
    if (!is_p_group(G)) {
      r.notes.push_back("statement is given for p-groups; checked here on a "
                        "group of order "
                        + std::to_string(G.order()) + ", which is not a p-group");
    }
  }

  // ---------------------------------------------------------------------
  // Lemma: direct products

  struct DirectProductEval {
    std::size_t a_size = 0, b_size = 0, pair_size = 0, pair_eta = 0;
    bool        class_is_product = false;

    bool holds() const noexcept {
      return class_is_product && pair_size == a_size * b_size && pair_eta == 1;
    }
  };

  DirectProductEval evaluate_direct_product(FiniteGroup const& G, index_t a,
                                            FiniteGroup const& K, index_t b,
                                            FiniteGroup const& P) {
    DirectProductEval e;
    ElementSet const  ca = conjugacy_class(G, G.element(a)).carrier;
    ElementSet const  cb = conjugacy_class(K, K.element(b)).carrier;
    ElementSet const  cp = conjugacy_class(P, P.element(pair_index(K, a, b))).carrier;
    e.a_size             = ca.size();
    e.b_size             = cb.size();
    e.pair_size          = cp.size();
    ElementSet expected  = P.empty_set();
    ca.for_each([&](index_t u) {
      cb.for_each([&](index_t v) { expected.insert(pair_index(K, u, v)); });
    });
    e.class_is_product = expected == cp;
    e.pair_eta         = eta(P, set_product(P, cp, cp));
    return e;
  }

  Witness direct_product_witness(FiniteGroup const& G, index_t a,
                                 FiniteGroup const& K, index_t b,
                                 DirectProductEval const& e) {
    Witness w;
    w.elements = {a, b};
    w.names    = {G.name(a), K.name(b)};
    w.values   = {{"a_class_size", num(e.a_size)},
                {"b_class_size", num(e.b_size)},
                {"pair_class_size", num(e.pair_size)},
                {"pair_class_is_product", e.class_is_product},
                {"pair_square_eta", num(e.pair_eta)}};
    return w;
  }

  bool homogeneous_square(FiniteGroup const& G, index_t a) {
    return eta_of_product(G, G.element(a), G.element(a)) == 1;
  }
}  // namespace

std::vector<ElementPair> equal_centralizer_pairs(FiniteGroup const& G) {
  Cache                    cache(G);
  std::vector<ElementPair> out;
  for (auto [a, b] : equal_centralizer_index_pairs(cache)) {
    out.push_back(ElementPair{G.element(a), G.element(b)});
  }
  return out;
}

VerifierReport check_theorem_a(FiniteGroup const& G, Element a, Element b) {
  G.check(a);
  G.check(b);
  Cache cache(G);
  if (!(cache.centralizer_of(a.index) == cache.centralizer_of(b.index))) {
    throw HypothesisViolated("theorem-a requires C_G(a) = C_G(b); "
                             + G.name(a.index) + " and " + G.name(b.index)
                             + " have different centralizers in " + G.id());
  }
  VerifierReport r = start(statement::theorem_a, G);
  TheoremAEval   e = evaluate_theorem_a(cache, a.index, b.index);
  r.pairs_checked  = 1;
  r.verdict        = e.lhs == e.rhs ? Verdict::holds : Verdict::fails;
  r.witnesses.push_back(theorem_a_witness(G, a.index, b.index, e));
  if (a == b) {
    SubVerdict s;
    s.clause        = std::string(statement::in_particular);
    s.pairs_checked = 1;
    s.verdict       = e.lhs == e.a_normal ? Verdict::holds : Verdict::discrepancy;
    s.witnesses.push_back(in_particular_witness(G, a.index, e));
    r.sub_verdicts.push_back(std::move(s));
    r.notes.push_back(in_particular_note);
  }
  return r;
}

VerifierReport check_theorem_a(FiniteGroup const& G) {
  Cache          cache(G);
  VerifierReport r = start(statement::theorem_a, G);
  Tally          main, particular;
  for (auto [a, b] : equal_centralizer_index_pairs(cache)) {
    TheoremAEval e = evaluate_theorem_a(cache, a, b);
    main.record(e.lhs == e.rhs, theorem_a_witness(G, a, b, e));
    if (a == b) {
      particular.record(e.lhs == e.a_normal, in_particular_witness(G, a, e));
    }
  }
  main.finish(r);
  r.sub_verdicts.push_back(particular.sub(statement::in_particular));
  r.notes.push_back(in_particular_note);
  return r;
}

VerifierReport check_theorem_b(FiniteGroup const& G) {
  if (!is_simple_nonabelian(G)) {
    throw HypothesisViolated("theorem-b requires a nonabelian simple group; "
                             + G.id() + " is not");
  }
  Cache          cache(G);
  VerifierReport r = start(statement::theorem_b, G);
  Tally          main;
  std::size_t    homogeneous = 0;
  for (auto [a, b] : equal_centralizer_index_pairs(cache)) {
    bool const is_hom   = cache.class_product(a, b) == cache.klass(G.product(a, b));
    bool const expected = a == 0 && b == 0;
    Witness    w        = make_witness(G, {a, b},
                                       {{"homogeneous", is_hom},
                                        {"expected_homogeneous", expected}});
    if (is_hom) {
      ++homogeneous;
      if (expected) {
        r.witnesses.push_back(w);
      }
    }
    main.record(is_hom == expected, std::move(w));
  }
  Tally particular;
  for (auto a : representatives(G)) {
    bool const is_hom = homogeneous_square(G, a);
    particular.record(is_hom == (a == 0),
                      make_witness(G, {a}, {{"square_homogeneous", is_hom}}));
  }
  main.finish(r);
  r.notes.push_back("homogeneous equal-centralizer pairs: "
                    + std::to_string(homogeneous));
  r.sub_verdicts.push_back(particular.sub(statement::in_particular));
  return r;
}

namespace {
  struct ProductFormulaEval {
    bool        general         = false;  // exponent b
    bool        literal         = false;  // exponent b^-1
    bool        commuting       = false;  // a^b = a
    bool        commuting_holds = true;
    std::size_t lhs_size = 0, rhs_size = 0;
  };

  ProductFormulaEval evaluate_product_formula(Cache& cache, index_t a,
                                              index_t b) {
    FiniteGroup const& G   = cache.group();
    index_t const      ab  = G.product(a, b);
    ProductFormulaEval e;
    ElementSet const   lhs = cache.class_product(a, b);
    auto rhs_for = [&](index_t x) {
      return translate(G, G.element(ab),
                       set_product(G, cache.commutators(x), cache.commutators(b)));
    };
    ElementSet const rhs = rhs_for(G.conjugate(a, b));
    e.general            = lhs == rhs;
    e.literal            = lhs == rhs_for(G.conjugate(a, G.inverse(b)));
    e.lhs_size           = lhs.size();
    e.rhs_size           = rhs.size();
    if (G.conjugate(a, b) == a) {
      e.commuting       = true;
      e.commuting_holds = lhs
                          == translate(G, G.element(ab),
                                       set_product(G, cache.commutators(a),
                                                   cache.commutators(b)));
    }
    return e;
  }

  constexpr char const* literal_exponent_note
      = "main clause uses ab[a^b,G][b,G], the form that holds with "
        "a^g = g^-1 a g; literal-exponent tracks ab[a^(b^-1),G][b,G]";

  Witness product_formula_witness(FiniteGroup const& G, index_t a, index_t b,
                                  ProductFormulaEval const& e) {
    return make_witness(G, {a, b},
                        {{"lhs_size", num(e.lhs_size)},
                         {"rhs_size", num(e.rhs_size)},
                         {"general_form_equal", e.general},
                         {"literal_exponent_equal", e.literal},
                         {"commuting", e.commuting},
                         {"commuting_form_equal", e.commuting_holds}});
  }
}  // namespace

VerifierReport check_product_formula(FiniteGroup const& G, Element a,
                                     Element b) {
  G.check(a);
  G.check(b);
  Cache              cache(G);
  VerifierReport     r = start(statement::product_formula, G);
  ProductFormulaEval e = evaluate_product_formula(cache, a.index, b.index);
  r.pairs_checked      = 1;
  r.verdict = e.general && e.commuting_holds ? Verdict::holds : Verdict::fails;
  r.witnesses.push_back(product_formula_witness(G, a.index, b.index, e));
  SubVerdict s;
  s.clause        = "literal-exponent";
  s.pairs_checked = 1;
  s.verdict       = e.literal ? Verdict::holds : Verdict::discrepancy;
  if (!e.literal) {
    s.witnesses.push_back(r.witnesses.back());
  }
  r.sub_verdicts.push_back(std::move(s));
  r.notes.push_back(literal_exponent_note);
  return r;
}

VerifierReport check_product_formula(FiniteGroup const& G, PairScope scope) {
  Cache                cache(G);
  VerifierReport       r = start(statement::product_formula, G);
  std::vector<index_t> all(G.order());
  for (index_t x = 0; x < G.order(); ++x) {
    all[x] = x;
  }
  std::vector<index_t> const reps = representatives(G);
  auto const&          as         = scope == PairScope::all ? all : reps;
  auto const& bs = scope == PairScope::class_representatives ? reps : all;

  Tally main, commuting, literal;
  for (auto a : as) {
    for (auto b : bs) {
      ProductFormulaEval e = evaluate_product_formula(cache, a, b);
      main.record(e.general, product_formula_witness(G, a, b, e));
      literal.record(e.literal, product_formula_witness(G, a, b, e));
      if (e.commuting) {
        commuting.record(e.commuting_holds, product_formula_witness(G, a, b, e));
      }
    }
  }
  main.finish(r);
  SubVerdict s = commuting.sub("commuting-case");
  if (s.verdict == Verdict::discrepancy) {
    r.verdict = Verdict::fails;
    s.verdict = Verdict::fails;
  }
  r.sub_verdicts.push_back(std::move(s));
  r.sub_verdicts.push_back(literal.sub("literal-exponent"));
  r.notes.push_back(literal_exponent_note);
  r.notes.push_back(std::string("pair scope: ")
                    + (scope == PairScope::all ? "all pairs"
                       : scope == PairScope::representatives
                           ? "class representative a, all b"
                           : "class representative pairs"));
  return r;
}

VerifierReport check_subgroup_implies_normal(FiniteGroup const& G) {
  VerifierReport r = start(statement::subgroup_is_normal, G);
  Tally          tally;
  std::size_t    subgroups = 0;
  for (index_t c = 0; c < G.order(); ++c) {
    ElementSet const S = commutator_set(G, G.element(c));
    if (!is_subgroup(G, S)) {
      continue;
    }
    ++subgroups;
    tally.record(is_normal(G, S),
                 make_witness(G, {c}, {{"commutator_set_size", num(S.size())},
                                       {"is_subgroup", true},
                                       {"is_normal", false}}));
  }
  tally.finish(r);
  r.notes.push_back("elements examined: " + std::to_string(G.order())
                    + "; [c,G] a subgroup for " + std::to_string(subgroups));
  return r;
}

VerifierReport check_quotient_eta(FiniteGroup const& G, ElementSet const& N,
                                  Element a, Element b) {
  G.check(a);
  G.check(b);
  QuotientMap const  qm = quotient(G, N);
  FiniteGroup const& Q  = qm.quotient;
  Cache              cache(G);
  QuotientEval       e;
  ElementSet const   qa = conjugacy_class(Q, Q.element(qm.projection[a.index])).carrier;
  ElementSet const   qb = conjugacy_class(Q, Q.element(qm.projection[b.index])).carrier;
  e.disjoint_quotient = !qa.intersects(qb);
  e.disjoint_group    = !cache.klass(a.index).intersects(cache.klass(b.index));
  e.eta_quotient      = eta(Q, set_product(Q, qa, qb));
  e.eta_group         = eta(G, cache.class_product(a.index, b.index));

  VerifierReport r = start(statement::quotient_eta, G);
  r.pairs_checked  = 1;
  r.verdict = e.pullback_holds() && e.monotone() ? Verdict::holds : Verdict::fails;
  r.witnesses.push_back(quotient_witness(G, N, a.index, b.index, e));
  p_group_scope_note(G, r);
  return r;
}

VerifierReport check_quotient_eta(FiniteGroup const& G, std::size_t normal_limit) {
  VerifierReport             r = start(statement::quotient_eta, G);
  Cache                      cache(G);
  std::vector<index_t> const reps = representatives(G);
  std::size_t const          k    = reps.size();

  std::vector<std::size_t> eta_g(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      eta_g[i * k + j] = eta(G, cache.class_product(reps[i], reps[j]));
    }
  }

  NormalSubgroupList const normals = normal_subgroups(G, normal_limit);
  Tally                    pullback, monotone;
  for (auto const& N : normals.subgroups) {
    QuotientMap const  qm = quotient(G, N);
    FiniteGroup const& Q  = qm.quotient;
    Cache              qcache(Q);
    ClassTable const&  qct = Q.class_table();
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> eta_q;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        index_t const a = reps[i], b = reps[j];
        index_t const qa = qm.projection[a], qb = qm.projection[b];
        QuotientEval  e;
        e.disjoint_quotient = qct.class_of[qa] != qct.class_of[qb];
        e.disjoint_group    = i != j;
        auto key            = std::make_pair(qct.class_of[qa], qct.class_of[qb]);
        auto it             = eta_q.find(key);
        if (it == eta_q.end()) {
          it = eta_q.emplace(key, eta(Q, qcache.class_product(qa, qb))).first;
        }
        e.eta_quotient = it->second;
        e.eta_group    = eta_g[i * k + j];
        pullback.record(e.pullback_holds(), quotient_witness(G, N, a, b, e));
        monotone.record(e.monotone(), quotient_witness(G, N, a, b, e));
      }
    }
  }
  monotone.finish(r);
  SubVerdict s = pullback.sub("disjoint-pullback");
  if (s.verdict == Verdict::discrepancy) {
    s.verdict = Verdict::fails;
    r.verdict = Verdict::fails;
  }
  r.sub_verdicts.push_back(std::move(s));
  r.notes.push_back("normal subgroups examined: "
                    + std::to_string(normals.subgroups.size())
                    + (normals.truncated ? " (enumeration truncated)" : ""));
  r.notes.push_back("pairs range over class representatives of G");
  p_group_scope_note(G, r);
  return r;
}

CenterIntersection evaluate_center_intersection(FiniteGroup const& G, Element a) {
  G.check(a);
  CenterIntersection e;
  ElementSet const   cls    = conjugacy_class(G, a).carrier;
  ElementSet const   square = set_product(G, cls, cls);
  e.class_size              = cls.size();
  e.meets_center            = square.intersects(G.center());
  e.iff_holds               = e.meets_center == (e.class_size == 1);
  ClassDecomposition d      = decompose(G, square);
  e.square_eta              = d.eta();
  e.rider_holds             = true;
  if (e.class_size > 1) {
    for (auto const& c : d.classes) {
      e.rider_holds = e.rider_holds && c.size() > 1;
    }
  }
  return e;
}

namespace {
  void require_odd_order(FiniteGroup const& G) {
    if (G.order() % 2 == 0) {
      throw HypothesisViolated(
          "prop-notinthecenter requires |G| odd; " + G.id() + " has order "
          + std::to_string(G.order())
          + " (q8 shows the statement may fail for even order)");
    }
  }

  Witness center_witness(FiniteGroup const& G, index_t a,
                         CenterIntersection const& e) {
    return make_witness(G, {a},
                        {{"class_size", num(e.class_size)},
                         {"square_meets_center", e.meets_center},
                         {"square_eta", num(e.square_eta)},
                         {"iff_holds", e.iff_holds},
                         {"rider_holds", e.rider_holds}});
  }
}  // namespace

VerifierReport check_center_intersection(FiniteGroup const& G, Element a) {
  require_odd_order(G);
  CenterIntersection e = evaluate_center_intersection(G, a);
  VerifierReport     r = start(statement::center_intersection, G);
  r.pairs_checked      = 1;
  r.verdict = e.iff_holds && e.rider_holds ? Verdict::holds : Verdict::fails;
  r.witnesses.push_back(center_witness(G, a.index, e));
  return r;
}

VerifierReport check_center_intersection(FiniteGroup const& G) {
  require_odd_order(G);
  VerifierReport r = start(statement::center_intersection, G);
  Tally          tally;
  for (auto a : representatives(G)) {
    CenterIntersection e = evaluate_center_intersection(G, G.element(a));
    tally.record(e.iff_holds && e.rider_holds, center_witness(G, a, e));
  }
  tally.finish(r);
  return r;
}

namespace {
  struct Size2Eval {
    std::size_t eta         = 0;
    bool        shape_holds = false;
  };

  Size2Eval evaluate_size2(Cache& cache, index_t a, index_t b) {
    FiniteGroup const& G = cache.group();
    Size2Eval          e;
    ElementSet const   product = cache.class_product(a, b);
    e.eta                      = eta(G, product);
    ElementSet const& N        = cache.centralizer_of(a);
    index_t           g        = 0;
    while (N.contains(g)) {
      ++g;
    }
    index_t const ab = G.product(a, b);
    index_t const ca = G.commutator(a, g), cb = G.commutator(b, g);
    ElementSet    shape = G.make_set({ab, G.product(ab, ca), G.product(ab, cb),
                                   G.product(G.product(ab, ca), cb)});
    e.shape_holds       = shape == product;
    return e;
  }

  Witness size2_witness(FiniteGroup const& G, index_t a, index_t b,
                        Size2Eval const& e) {
    return make_witness(G, {a, b},
                        {{"eta", num(e.eta)},
                         {"product_shape_holds", e.shape_holds}});
  }
}  // namespace

VerifierReport check_size2(FiniteGroup const& G, Element a, Element b) {
  G.check(a);
  G.check(b);
  Cache cache(G);
  if (!(cache.centralizer_of(a.index) == cache.centralizer_of(b.index))
      || cache.klass(a.index).size() != 2) {
    throw HypothesisViolated(
        "prop-squaresofsize2 requires C_G(a) = C_G(b) and |a^G| = 2");
  }
  Size2Eval      e = evaluate_size2(cache, a.index, b.index);
  VerifierReport r = start(statement::size2, G);
  r.pairs_checked  = 1;
  r.verdict = e.eta == 2 && e.shape_holds ? Verdict::holds : Verdict::fails;
  r.witnesses.push_back(size2_witness(G, a.index, b.index, e));
  return r;
}

VerifierReport check_size2(FiniteGroup const& G) {
  Cache          cache(G);
  VerifierReport r = start(statement::size2, G);
  Tally          main, shape;
  for (auto [a, b] : equal_centralizer_index_pairs(cache)) {
    if (cache.klass(a).size() != 2) {
      continue;
    }
    Size2Eval e = evaluate_size2(cache, a, b);
    main.record(e.eta == 2, size2_witness(G, a, b, e));
    shape.record(e.shape_holds, size2_witness(G, a, b, e));
  }
  main.finish(r);
  SubVerdict s = shape.sub("product-shape");
  if (s.verdict == Verdict::discrepancy) {
    s.verdict = Verdict::fails;
    r.verdict = Verdict::fails;
  }
  r.sub_verdicts.push_back(std::move(s));
  return r;
}

VerifierReport check_supersolvable_pow2(FiniteGroup const& G, Element a,
                                        Element b) {
  G.check(a);
  G.check(b);
  Cache cache(G);
  if (!is_supersolvable(G)
      || !(cache.centralizer_of(a.index) == cache.centralizer_of(b.index))
      || !is_power_of_two_above_one(cache.klass(a.index).size())) {
    throw HypothesisViolated("prop-supersolvable requires G supersolvable, "
                             "C_G(a) = C_G(b) and |a^G| = 2^n with n > 0");
  }
  std::size_t const e = eta(G, cache.class_product(a.index, b.index));
  VerifierReport    r = start(statement::supersolvable_pow2, G);
  r.pairs_checked     = 1;
  r.verdict           = e >= 2 ? Verdict::holds : Verdict::fails;
  r.witnesses.push_back(make_witness(
      G, {a.index, b.index},
      {{"a_class_size", num(cache.klass(a.index).size())}, {"eta", num(e)}}));
  return r;
}

VerifierReport check_supersolvable_pow2(FiniteGroup const& G) {
  if (!is_supersolvable(G)) {
    throw HypothesisViolated("prop-supersolvable requires a supersolvable "
                             "group; "
                             + G.id() + " is not");
  }
  Cache          cache(G);
  VerifierReport r = start(statement::supersolvable_pow2, G);
  Tally          tally;
  for (auto [a, b] : equal_centralizer_index_pairs(cache)) {
    std::size_t const size = cache.klass(a).size();
    if (!is_power_of_two_above_one(size)) {
      continue;
    }
    std::size_t const e = eta(G, cache.class_product(a, b));
    tally.record(e >= 2, make_witness(G, {a, b},
                                      {{"a_class_size", num(size)},
                                       {"eta", num(e)}}));
  }
  tally.finish(r);
  return r;
}

VerifierReport check_nilpotent_odd(FiniteGroup const& G) {
  if (!is_nilpotent(G)) {
    throw HypothesisViolated("cor-nilpotent requires a nilpotent group; "
                             + G.id() + " is not");
  }
  Cache          cache(G);
  VerifierReport r = start(statement::nilpotent_odd, G);
  Tally          tally;
  for (auto a : representatives(G)) {
    ElementSet const  square = cache.class_product(a, a);
    if (!(square == cache.klass(G.product(a, a)))) {
      continue;
    }
    std::size_t const size = cache.klass(a).size();
    tally.record(size % 2 == 1,
                 make_witness(G, {a}, {{"class_size", num(size)},
                                       {"square_homogeneous", true}}));
  }
  tally.finish(r);
  return r;
}

VerifierReport check_direct_product_eta(FiniteGroup const& G, Element a,
                                        FiniteGroup const& K, Element b,
                                        std::size_t max_order) {
  G.check(a);
  K.check(b);
  if (!homogeneous_square(G, a.index) || !homogeneous_square(K, b.index)) {
    throw HypothesisViolated(
        "lemma-observation1 requires eta(a^G a^G) = eta(b^K b^K) = 1");
  }
  FiniteGroup const P = direct_product(G, K, max_order);
  DirectProductEval e = evaluate_direct_product(G, a.index, K, b.index, P);
  VerifierReport    r = start(statement::direct_product_eta, G);
  r.group_id          = P.id();
  r.pairs_checked     = 1;
  r.verdict           = e.holds() ? Verdict::holds : Verdict::fails;
  r.witnesses.push_back(direct_product_witness(G, a.index, K, b.index, e));
  return r;
}

VerifierReport check_direct_product_eta(FiniteGroup const& G,
                                        std::size_t        max_order) {
  VerifierReport r = start(statement::direct_product_eta, G);
  if (G.order() * G.order() > max_order) {
    r.hypotheses_met = false;
    r.verdict        = Verdict::vacuous;
    r.notes.push_back("G x G has order " + std::to_string(G.order() * G.order())
                      + ", above the cap of " + std::to_string(max_order)
                      + " for this check");
    return r;
  }
  FiniteGroup const    P = direct_product(G, G, max_order);
  std::vector<index_t> hom;
  for (auto a : representatives(G)) {
    if (homogeneous_square(G, a)) {
      hom.push_back(a);
    }
  }
  Tally tally;
  for (auto a : hom) {
    for (auto b : hom) {
      DirectProductEval e = evaluate_direct_product(G, a, G, b, P);
      tally.record(e.holds(), direct_product_witness(G, a, G, b, e));
    }
  }
  tally.finish(r);
  r.notes.push_back("K = G; pairs of class representatives with homogeneous "
                    "squares");
  return r;
}

VerifierReport check_extraspecial_power(std::size_t p, std::size_t copies,
                                        std::size_t max_order) {
  if (copies == 0) {
    throw Error("lemma-observation2 needs at least one copy");
  }
  GroupSpec spec{GroupKind::extraspecial_p3, p, {}, {}};
  if (copies > 1) {
    spec = GroupSpec{GroupKind::direct_product, 0,
                     std::vector<GroupSpec>(copies, spec), {}};
  }
  FiniteGroup const G = build_group(spec, max_order);
  FiniteGroup const E = extraspecial_p3(p, max_order);
  index_t           a = static_cast<index_t>(p * p);
  for (std::size_t i = 1; i < copies; ++i) {
    a = pair_index(E, a, static_cast<index_t>(p * p));
  }
  ElementSet const cls      = conjugacy_class(G, G.element(a)).carrier;
  bool const       coset    = cls == translate(G, G.element(a), G.center());
  std::size_t      expected = 1;
  for (std::size_t i = 0; i < copies; ++i) {
    expected *= p;
  }
  index_t const a2 = G.product(a, a);
  bool const    hom
      = set_product(G, cls, cls) == conjugacy_class(G, G.element(a2)).carrier;

  VerifierReport r = start(statement::extraspecial_power, G);
  r.pairs_checked  = 1;
  r.verdict = coset && cls.size() == expected && hom ? Verdict::holds
                                                     : Verdict::fails;
  r.witnesses.push_back(make_witness(
      G, {a},
      {{"copies", num(copies)},
       {"class_size", num(cls.size())},
       {"expected_class_size", num(expected)},
       {"class_is_center_coset", coset},
       {"square_homogeneous", hom}}));
  r.notes.push_back("reading: n copies of the extraspecial group with "
                    "|a^G| = p^n");
  return r;
}

VerifierReport check_eta1_witness(std::size_t n, std::size_t max_order) {
  Eta1Witness const  w = odd_eta1_witness(n, max_order);
  FiniteGroup const& G = w.group;
  index_t const      a = w.element.index;
  ElementSet const   cls = conjugacy_class(G, w.element).carrier;
  bool const         hom = set_product(G, cls, cls)
                   == conjugacy_class(G, G.element(G.product(a, a))).carrier;
  bool const nilpotent = is_nilpotent(G);

  VerifierReport r = start(statement::eta1_witness, G);
  r.pairs_checked  = 1;
  r.verdict = cls.size() == n && hom && nilpotent ? Verdict::holds
                                                  : Verdict::fails;
  r.witnesses.push_back(make_witness(G, {a},
                                     {{"n", num(n)},
                                      {"group_order", num(G.order())},
                                      {"class_size", num(cls.size())},
                                      {"square_homogeneous", hom},
                                      {"nilpotent", nilpotent}}));
  return r;
}

VerifierReport check_statement(FiniteGroup const& G, std::string_view id,
                               CheckOptions const& options) {
  if (id == statement::theorem_a) {
    return check_theorem_a(G);
  }
  if (id == statement::theorem_b) {
    return check_theorem_b(G);
  }
  if (id == statement::product_formula) {
    return check_product_formula(G, options.product_formula_scope);
  }
  if (id == statement::subgroup_is_normal) {
    return check_subgroup_implies_normal(G);
  }
  if (id == statement::quotient_eta) {
    return check_quotient_eta(G, options.normal_subgroup_limit);
  }
  if (id == statement::center_intersection) {
    return check_center_intersection(G);
  }
  if (id == statement::size2) {
    return check_size2(G);
  }
  if (id == statement::supersolvable_pow2) {
    return check_supersolvable_pow2(G);
  }
  if (id == statement::nilpotent_odd) {
    return check_nilpotent_odd(G);
  }
  if (id == statement::direct_product_eta) {
    return check_direct_product_eta(G, options.direct_product_cap);
  }
  throw Error("unknown statement id \"" + std::string(id) + "\"");
}

std::vector<VerifierReport> check_all(FiniteGroup const&  G,
                                      CheckOptions const& options) {
  std::vector<VerifierReport> out;
  for (auto id : statement::group_statements()) {
    try {
      out.push_back(check_statement(G, id, options));
    } catch (HypothesisViolated const& e) {
      VerifierReport r;
      r.statement_id   = std::string(id);
      r.group_id       = G.id();
      r.hypotheses_met = false;
      r.verdict        = Verdict::vacuous;
      r.notes.push_back(e.what());
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace classprod
