// Executable checks of statements about homogeneous class products.
//
// Every verifier evaluates both sides of its claim through separate code
// paths (class products and decompositions on one side, commutator sets and
// normality on the other) and reports agreement, disagreement or vacuous
// truth. Pair-level verifiers throw HypothesisViolated when their premises
// fail; check_all turns those into "vacuous" rows instead.
//
// Pair enumeration. Every quantity involved (a^G, b^G, (ab)^G, [a,G],
// C_G(a), eta, normality) is covariant under simultaneous conjugation of
// (a, b), so it suffices to let a range over class representatives and b
// over all of G. Checks whose inputs depend only on the classes of a and b
// (eta(a^G b^G), quotient classes) use representative pairs for both.

#ifndef CLASSPROD_THEOREM_SUITE_HPP_
#define CLASSPROD_THEOREM_SUITE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "classprod/element_set.hpp"
#include "classprod/finite_group.hpp"

namespace classprod {

namespace statement {
  inline constexpr std::string_view theorem_a           = "theorem-a";
  inline constexpr std::string_view theorem_b           = "theorem-b";
  inline constexpr std::string_view product_formula     = "lemma-productsn";
  inline constexpr std::string_view subgroup_is_normal  = "lemma-groupimpliesnormal";
  inline constexpr std::string_view quotient_eta        = "lemma-quotient-eta";
  inline constexpr std::string_view center_intersection = "prop-notinthecenter";
  inline constexpr std::string_view size2               = "prop-squaresofsize2";
  inline constexpr std::string_view supersolvable_pow2  = "prop-supersolvable";
  inline constexpr std::string_view nilpotent_odd       = "cor-nilpotent";
  inline constexpr std::string_view direct_product_eta  = "lemma-observation1";
  inline constexpr std::string_view extraspecial_power  = "lemma-observation2";
  inline constexpr std::string_view eta1_witness        = "prop-eta1example";

  //! Name of the Theorem A sub-verdict for the b = a shortcut.
  inline constexpr std::string_view in_particular = "in-particular";

  //! Ids accepted by check_statement, in check_all order.
  std::vector<std::string_view> const& group_statements();
}  // namespace statement

enum class Verdict { holds, fails, vacuous, discrepancy };

std::string_view to_string(Verdict v) noexcept;
//! Throws Error on an unknown name.
Verdict verdict_from_string(std::string_view name);

using WitnessValue = std::variant<bool, std::int64_t, std::string>;

struct Witness {
  std::vector<index_t>                              elements;
  std::vector<std::string>                          names;
  std::vector<std::pair<std::string, WitnessValue>> values;

  friend bool operator==(Witness const&, Witness const&) = default;
};

struct SubVerdict {
  std::string          clause;
  Verdict              verdict       = Verdict::vacuous;
  std::size_t          pairs_checked = 0;
  std::vector<Witness> witnesses;

  friend bool operator==(SubVerdict const&, SubVerdict const&) = default;
};

struct VerifierReport {
  std::string              statement_id;
  std::string              group_id;
  bool                     hypotheses_met = false;
  std::size_t              pairs_checked  = 0;
  Verdict                  verdict        = Verdict::vacuous;
  std::vector<Witness>     witnesses;
  std::vector<std::string> notes;
  std::vector<SubVerdict>  sub_verdicts;

  //! True when some sub-verdict is a discrepancy.
  bool has_discrepancy() const noexcept;

  friend bool operator==(VerifierReport const&, VerifierReport const&) = default;
};

struct ElementPair {
  Element a;
  Element b;
};

//! Pairs (a, b) with C_G(a) = C_G(b), a a class representative and b any
//! element; sorted by (a, b).
std::vector<ElementPair> equal_centralizer_pairs(FiniteGroup const& G);

enum class PairScope {
  //! a and b both class representatives.
  class_representatives,
  //! a a class representative, b arbitrary.
  representatives,
  //! every ordered pair.
  all
};

//! Theorem A for one pair: a^G b^G = (ab)^G iff [a,G] = [b,G] = [ab,G] and
//! [ab,G] is normal. For b = a the shortcut "a^G a^G = (a^2)^G iff [a,G] is
//! normal" is recorded as the "in-particular" sub-verdict.
VerifierReport check_theorem_a(FiniteGroup const& G, Element a, Element b);
//! Theorem A over equal_centralizer_pairs(G).
VerifierReport check_theorem_a(FiniteGroup const& G);

//! For nonabelian simple G, the only homogeneous equal-centralizer pair is
//! (1, 1). Throws HypothesisViolated otherwise.
VerifierReport check_theorem_b(FiniteGroup const& G);

//! a^G b^G = ab [a^b, G][b, G], and = ab [a,G][b,G] when a^b = a. The
//! same identity with exponent b^-1 is the "literal-exponent" sub-verdict.
VerifierReport check_product_formula(FiniteGroup const& G, Element a,
                                     Element b);
VerifierReport check_product_formula(
    FiniteGroup const& G, PairScope scope = PairScope::representatives);

//! Every [c,G] that is a subgroup is normal, over all c in G.
VerifierReport check_subgroup_implies_normal(FiniteGroup const& G);

//! Disjoint classes in G/N pull back to disjoint classes, and
//! eta((aN)(bN)) in G/N <= eta(a^G b^G). Throws NotNormal.
VerifierReport check_quotient_eta(FiniteGroup const& G, ElementSet const& N,
                                  Element a, Element b);
//! Over the normal subgroups of G (at most `normal_limit` of them) and all
//! pairs of class representatives.
VerifierReport check_quotient_eta(FiniteGroup const& G,
                                  std::size_t        normal_limit = 64);

struct CenterIntersection {
  std::size_t class_size    = 0;
  bool        meets_center  = false;  // Z(G) meets a^G a^G
  bool        iff_holds     = false;  // meets_center == (class_size == 1)
  bool        rider_holds   = false;  // |a^G| > 1 => all classes in a^G a^G nontrivial
  std::size_t square_eta    = 0;
};

//! The odd-order predicate evaluated without checking |G| odd.
CenterIntersection evaluate_center_intersection(FiniteGroup const& G, Element a);

//! Requires |G| odd (HypothesisViolated otherwise).
VerifierReport check_center_intersection(FiniteGroup const& G, Element a);
VerifierReport check_center_intersection(FiniteGroup const& G);

//! C(a) = C(b), |a^G| = 2 gives eta(a^G b^G) = 2 and
//! a^G b^G = {ab, ab[a,g], ab[b,g], ab[a,g][b,g]} for g outside C(a).
VerifierReport check_size2(FiniteGroup const& G, Element a, Element b);
VerifierReport check_size2(FiniteGroup const& G);

//! G supersolvable, C(a) = C(b), |a^G| = 2^n with n > 0 gives
//! eta(a^G b^G) >= 2.
VerifierReport check_supersolvable_pow2(FiniteGroup const& G, Element a,
                                        Element b);
VerifierReport check_supersolvable_pow2(FiniteGroup const& G);

//! G nilpotent and a^G a^G = (a^2)^G gives |a^G| odd.
VerifierReport check_nilpotent_odd(FiniteGroup const& G);

//! eta(a^G a^G) = eta(b^K b^K) = 1 gives eta = 1 for (a,b) in G x K and
//! |(a,b)^(GxK)| = |a^G||b^K|.
VerifierReport check_direct_product_eta(FiniteGroup const& G, Element a,
                                        FiniteGroup const& K, Element b,
                                        std::size_t max_order = default_max_order);
//! Over representative pairs of G x G, when |G|^2 fits under `max_order`.
VerifierReport check_direct_product_eta(FiniteGroup const& G,
                                        std::size_t max_order = 729);

//! In n copies of es:p with a = (1,0,0) in each copy: a^G = aZ(G),
//! |a^G| = p^n and a^G a^G = (a^2)^G.
VerifierReport check_extraspecial_power(std::size_t p, std::size_t copies,
                                        std::size_t max_order = default_max_order);

//! odd_eta1_witness(n) is nilpotent with |a^G| = n and a^G a^G = (a^2)^G.
VerifierReport check_eta1_witness(std::size_t n,
                                  std::size_t max_order = default_max_order);

struct CheckOptions {
  PairScope   product_formula_scope = PairScope::representatives;
  std::size_t normal_subgroup_limit = 64;
  //! Largest |G|^2 for the G x G direct-product check.
  std::size_t direct_product_cap = 729;
};

//! One group-level verifier by id (see statement::group_statements()).
//! Throws Error on an unknown id, HypothesisViolated as the verifier does.
VerifierReport check_statement(FiniteGroup const& G, std::string_view id,
                               CheckOptions const& options = {});

//! Every group-level verifier in canonical order; verifiers whose
//! hypotheses fail become "vacuous" rows with a note.
std::vector<VerifierReport> check_all(FiniteGroup const&  G,
                                      CheckOptions const& options = {});

}  // namespace classprod

#endif  // CLASSPROD_THEOREM_SUITE_HPP_
