#include <doctest.h>

#include <random>

#include "classprod/class_algebra.hpp"
#include "classprod/constructions.hpp"
#include "classprod/errors.hpp"
#include "test_support.hpp"

using namespace classprod;

namespace {
  std::vector<char const*> const small_specs = {
      "cyclic:1", "cyclic:6",  "cyclic:8",   "dihedral:4", "dihedral:5",
      "sym:3",    "sym:4",     "alt:4",      "q8",         "es:3",
      "alt:5",    "cyclic:2^3", "prod(q8,cyclic:2)"};

  index_t named(FiniteGroup const& G, std::string_view name) {
    auto x = G.find_name(name);
    REQUIRE(x.has_value());
    return *x;
  }
}  // namespace

TEST_CASE("class and centralizer sizes satisfy the index law") {
  for (auto spec : small_specs) {
    FiniteGroup G = build_group(spec);
    CAPTURE(spec);
    for (index_t a = 0; a < G.order(); ++a) {
      auto cls = conjugacy_class(G, G.element(a));
      CHECK(cls.size() * centralizer(G, G.element(a)).size() == G.order());
      CHECK(cls.carrier.contains(a));
      CHECK(cls.representative.index == cls.carrier.min());
    }
  }
}

TEST_CASE("a^G = a[a,G] and (ab)^G lies in a^G b^G") {
  for (auto spec : small_specs) {
    FiniteGroup G = build_group(spec);
    CAPTURE(spec);
    for (index_t a = 0; a < G.order(); ++a) {
      auto cls = conjugacy_class(G, G.element(a)).carrier;
      CHECK(translate(G, G.element(a), commutator_set(G, G.element(a))) == cls);
      CHECK(commutator_set(G, G.element(a)).contains(0));
      for (index_t b = 0; b < G.order(); b += 3) {
        auto prod = set_product(G, cls, conjugacy_class(G, G.element(b)).carrier);
        CHECK(conjugacy_class(G, G.element(G.product(a, b))).carrier.is_subset_of(prod));
        CHECK(is_invariant(G, prod));
      }
    }
  }
}

TEST_CASE("eta agrees with the oracle on every class pair") {
  std::vector<std::pair<std::string, oracle::Group>> cases = {
      {"sym:4", oracle::symmetric(4)},
      {"q8", oracle::quaternion8()},
      {"es:3", oracle::heisenberg(3)},
      {"alt:5", oracle::alternating(5)}};
  for (auto const& [spec, ref] : cases) {
    CAPTURE(spec);
    FiniteGroup H = test_support::from_oracle(ref);
    for (int a = 0; a < ref.size(); ++a) {
      for (int b = 0; b < ref.size(); ++b) {
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(eta_of_product(H, H.element(a), H.element(b))
                == static_cast<std::size_t>(oracle::eta_of_product(ref, a, b)));
      }
    }
  }
}

TEST_CASE("Q8 and S3 fixtures") {
  FiniteGroup Q = quaternion8();
  index_t     i = named(Q, "i");
  auto        ci = conjugacy_class(Q, Q.element(i)).carrier;
  CHECK(ci == Q.make_set({i, named(Q, "-i")}));
  auto square = set_product(Q, ci, ci);
  CHECK(square == Q.center());
  CHECK(eta(Q, Q.center()) == 2);
  CHECK(commutator_set(Q, Q.element(i)) == Q.center());

  FiniteGroup S = symmetric(3);
  index_t     c = named(S, "(1 2 3)");
  CHECK(eta_of_product(S, S.element(c), S.element(c)) == 2);
  CHECK(eta_of_product(S, S.identity(), S.element(c)) == 1);
}

TEST_CASE("decompose rejects sets that are not invariant") {
  FiniteGroup S = symmetric(3);
  ElementSet  X = S.singleton(named(S, "(1 2)"));
  CHECK_FALSE(is_invariant(S, X));
  CHECK_THROWS_AS(decompose(S, X), NotInvariant);
  auto d = decompose(S, S.full_set());
  CHECK(d.eta() == 3);
  CHECK(d.classes.front().representative.index == 0);
}

TEST_CASE("normal subgroup enumeration matches the oracle") {
  std::vector<std::pair<std::string, oracle::Group>> cases = {
      {"sym:4", oracle::symmetric(4)},       {"q8", oracle::quaternion8()},
      {"dihedral:4", oracle::dihedral(4)},   {"es:3", oracle::heisenberg(3)},
      {"alt:4", oracle::alternating(4)},     {"alt:5", oracle::alternating(5)},
      {"dihedral:6", oracle::dihedral(6)},   {"cyclic:12", oracle::cyclic(12)}};
  // Frozen from the oracle.
  std::map<std::string, std::size_t> expected = {
      {"sym:4", 4}, {"q8", 6},    {"dihedral:4", 6}, {"es:3", 7},
      {"alt:4", 3}, {"alt:5", 2}, {"dihedral:6", 7}, {"cyclic:12", 6}};
  for (auto const& [spec, ref] : cases) {
    CAPTURE(spec);
    FiniteGroup G     = build_group(spec);
    auto        found = normal_subgroups(G);
    CHECK_FALSE(found.truncated);
    CHECK(found.subgroups.size() == oracle::normal_subgroups(ref).size());
    CHECK(found.subgroups.size() == expected.at(spec));
    for (auto const& N : found.subgroups) {
      CHECK(is_normal(G, N));
    }
  }
}

TEST_CASE("minimal normal subgroups") {
  auto S4 = minimal_normal_subgroups(symmetric(4));
  REQUIRE(S4.size() == 1);
  CHECK(S4[0].size() == 4);
  auto C6 = minimal_normal_subgroups(cyclic(6));
  REQUIRE(C6.size() == 2);
  CHECK(C6[0].size() == 2);
  CHECK(C6[1].size() == 3);
  FiniteGroup E = extraspecial_p3(3);
  auto        mE = minimal_normal_subgroups(E);
  REQUIRE(mE.size() == 1);
  CHECK(mE[0] == E.center());
  CHECK_THROWS_AS(minimal_normal_subgroups(cyclic(1)), TrivialGroup);
}

TEST_CASE("quotient maps are homomorphisms") {
  for (auto spec : {"sym:4", "q8", "es:3", "dihedral:6"}) {
    FiniteGroup G = build_group(spec);
    CAPTURE(spec);
    for (auto const& N : normal_subgroups(G).subgroups) {
      auto qm = quotient(G, N);
      CHECK(qm.quotient.order() * N.size() == G.order());
      CHECK(qm.projection[0] == 0);
      for (index_t x = 0; x < G.order(); ++x) {
        CHECK((qm.projection[x] == 0) == N.contains(x));
        for (index_t y = 0; y < G.order(); y += 5) {
          CHECK(qm.projection[G.product(x, y)]
                == qm.quotient.product(qm.projection[x], qm.projection[y]));
        }
      }
    }
  }
  FiniteGroup S = symmetric(3);
  CHECK_THROWS_AS(quotient(S, S.make_set({0, named(S, "(1 2)")})), NotNormal);
}

TEST_CASE("E27 modulo its center is abelian of order 9") {
  FiniteGroup E  = extraspecial_p3(3);
  auto        qm = quotient(E, E.center());
  CHECK(qm.quotient.order() == 9);
  CHECK(qm.quotient.is_abelian());
}

TEST_CASE("supersolvable, nilpotent and simple verdicts") {
  CHECK(is_supersolvable(symmetric(3)));
  CHECK_FALSE(is_supersolvable(symmetric(4)));
  CHECK_FALSE(is_supersolvable(alternating(4)));
  CHECK(is_supersolvable(quaternion8()));
  CHECK(is_supersolvable(extraspecial_p3(3)));
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(is_supersolvable(cyclic(n)));
    CHECK(is_nilpotent(cyclic(n)));
  }
  CHECK(is_supersolvable(build_group("cyclic:2^3")));

  CHECK(is_nilpotent(quaternion8()));
  CHECK(is_nilpotent(dihedral(4)));
  CHECK_FALSE(is_nilpotent(symmetric(3)));
  CHECK_FALSE(is_nilpotent(dihedral(6)));

  CHECK(is_simple_nonabelian(alternating(5)));
  CHECK_FALSE(is_simple_nonabelian(alternating(4)));
  CHECK_FALSE(is_simple_nonabelian(cyclic(5)));
  CHECK_FALSE(is_simple_nonabelian(symmetric(5)));

  CHECK(is_p_group(extraspecial_p3(5)));
  CHECK(is_p_group(cyclic(1)));
  CHECK_FALSE(is_p_group(symmetric(3)));
}

TEST_CASE("chief factor orders do not depend on tie-breaking") {
  for (auto spec : {"cyclic:12", "dihedral:6", "sym:4", "cyclic:2^3",
                    "prod(q8,cyclic:2)", "sym:3^2"}) {
    FiniteGroup G = build_group(spec);
    CAPTURE(spec);
    auto base = chief_factor_orders(G, std::nullopt, false);
    std::sort(base.begin(), base.end());
    std::size_t product = 1;
    for (auto k : base) {
      product *= k;
    }
    CHECK(product == G.order());
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      auto orders = chief_factor_orders(G, seed, false);
      std::sort(orders.begin(), orders.end());
      CHECK(orders == base);
      CHECK(is_supersolvable(G, seed) == is_supersolvable(G));
    }
  }
}

TEST_CASE("subgroup generation") {
  FiniteGroup S = symmetric(4);
  index_t     t = named(S, "(1 2)");
  CHECK(subgroup_generated(S, S.singleton(t)).size() == 2);
  CHECK(normal_closure(S, S.element(t)).size() == 24);
  CHECK(is_subgroup(S, S.singleton(0)));
  CHECK_FALSE(is_subgroup(S, S.empty_set()));
  CHECK_FALSE(is_subgroup(S, S.singleton(t)));
}
