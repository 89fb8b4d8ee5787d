#include <doctest.h>

#include "classprod/arith.hpp"
#include "classprod/class_algebra.hpp"
#include "classprod/constructions.hpp"
#include "classprod/errors.hpp"
#include "test_support.hpp"

using namespace classprod;

TEST_CASE("named group orders") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(7).order() == 7);
  CHECK(dihedral(1).order() == 2);
  CHECK(dihedral(2).order() == 4);
  CHECK(dihedral(2).is_abelian());
  CHECK(dihedral(6).order() == 12);
  CHECK(symmetric(1).order() == 1);
  CHECK(symmetric(5).order() == 120);
  CHECK(alternating(3).order() == 3);
  CHECK(alternating(6).order() == 360);
  CHECK(quaternion8().order() == 8);
  CHECK(extraspecial_p3(7).order() == 343);
}

TEST_CASE("quaternion names") {
  FiniteGroup Q = quaternion8();
  auto        n = [&](char const* s) { return *Q.find_name(s); };
  CHECK(Q.product(n("i"), n("j")) == n("k"));
  CHECK(Q.product(n("j"), n("i")) == n("-k"));
  CHECK(Q.product(n("i"), n("i")) == n("-1"));
  CHECK(Q.name(0) == "1");
}

TEST_CASE("extraspecial groups") {
  for (std::size_t p : {3, 5, 7}) {
    FiniteGroup E = extraspecial_p3(p);
    CAPTURE(p);
    CHECK(E.center().size() == p);
    CHECK(E.exponent() == p);
    CHECK(E.class_table().count() == p * p + p - 1);
    index_t a = *E.find_name("(1,0,0)");
    CHECK(a == p * p);
    auto cls = conjugacy_class(E, E.element(a)).carrier;
    CHECK(cls == translate(E, E.element(a), E.center()));
  }
  CHECK_THROWS_AS(extraspecial_p3(2), NotOddPrime);
  CHECK_THROWS_AS(extraspecial_p3(9), NotOddPrime);
  CHECK(test_support::class_sizes(extraspecial_p3(5))
        == oracle::class_sizes(oracle::heisenberg(5)));
}

TEST_CASE("direct products") {
  FiniteGroup E = extraspecial_p3(3);
  FiniteGroup F = extraspecial_p3(5);
  FiniteGroup P = direct_product(E, F);
  CHECK(P.order() == 3375);
  index_t x = pair_index(F, 9, 25);
  CHECK(P.name(x) == "((1,0,0),(1,0,0))");
  CHECK(conjugacy_class(P, P.element(x)).size() == 15);
  CHECK_THROWS_AS(direct_product(F, F), OrderExceeded);

  FiniteGroup S = symmetric(3);
  FiniteGroup Q = quaternion8();
  FiniteGroup SQ = direct_product(S, Q);
  CHECK(test_support::class_sizes(SQ)
        == oracle::class_sizes(oracle::direct_product(oracle::symmetric(3),
                                                      oracle::quaternion8())));
}

TEST_CASE("odd eta1 witnesses") {
  for (std::size_t n : {1, 3, 5, 9}) {
    auto w = odd_eta1_witness(n);
    CAPTURE(n);
    CHECK(conjugacy_class(w.group, w.element).size() == n);
    CHECK(eta_of_product(w.group, w.element, w.element) == 1);
    CHECK(is_nilpotent(w.group));
  }
  CHECK(odd_eta1_witness(9).group.id() == "es:3^2");
  CHECK(odd_eta1_witness(15).group.id() == "prod(es:3,es:5)");
  CHECK_THROWS_AS(odd_eta1_witness(4), EvenN);
  CHECK_THROWS_AS(odd_eta1_witness(27), OrderExceeded);
}

TEST_CASE("group spec syntax") {
  for (std::string text : {"cyclic:7", "dihedral:4", "sym:4", "alt:5", "q8", "es:3",
                    "es:3^2", "prod(es:3,es:5)", "prod(q8,sym:3)",
                    "file:builtin/q8_regular.gens"}) {
    CAPTURE(text);
    CHECK(parse_group_spec(text).to_string() == text);
  }
  CHECK(parse_group_spec("dih:4").to_string() == "dihedral:4");
  CHECK(parse_group_spec(" sym:3 ").to_string() == "sym:3");
  CHECK(parse_group_spec("prod(es:3,es:3)").to_string() == "es:3^2");
  CHECK(build_group("q8^2").order() == 64);
  CHECK(build_group("sym:3").id() == "sym:3");
  for (std::string bad : {"", "cyclic:", "cyclic:0", "cyc:3", "prod(", "prod()",
                   "q8^0", "sym:3x", "prod(q8,)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_spec(bad), BadSpec);
  }
  CHECK_THROWS_AS(parse_group_spec("es:4"), NotOddPrime);
}

TEST_CASE("arithmetic helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(factorize(360) == std::vector<std::pair<std::size_t, std::size_t>>{
                              {2, 3}, {3, 2}, {5, 1}});
  CHECK(is_power_of_two_above_one(2));
  CHECK(is_power_of_two_above_one(64));
  CHECK_FALSE(is_power_of_two_above_one(1));
  CHECK_FALSE(is_power_of_two_above_one(12));
  CHECK(is_prime_power_or_one(1));
  CHECK(is_prime_power_or_one(27));
  CHECK_FALSE(is_prime_power_or_one(6));
}
