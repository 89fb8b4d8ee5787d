#include <doctest.h>

#include <cstdlib>

#include "classprod/class_algebra.hpp"
#include "classprod/constructions.hpp"
#include "classprod/errors.hpp"
#include "classprod/finite_group.hpp"
#include "classprod/group_io.hpp"
#include "classprod/permutation.hpp"
#include "test_support.hpp"

using namespace classprod;

namespace {
  FiniteGroup s3() {
    return close_from_generators({Permutation::from_cycles("(1 2 3)", 3),
                                  Permutation::from_cycles("(1 2)", 3)});
  }
}  // namespace

TEST_CASE("closure order and indexing") {
  FiniteGroup G = s3();
  REQUIRE(G.order() == 6);
  CHECK(G.name(0) == "()");
  // Breadth-first from the identity, generators in list order.
  CHECK(G.name(1) == "(1 2 3)");
  CHECK(G.name(2) == "(1 2)");
  CHECK(G.generators() == std::vector<index_t>{1, 2});
  for (index_t x = 0; x < G.order(); ++x) {
    CHECK(G.product(0, x) == x);
    CHECK(G.product(x, 0) == x);
    CHECK(G.product(x, G.inverse(x)) == 0);
  }
}

TEST_CASE("conjugation convention a^g = g^-1 a g") {
  FiniteGroup G  = s3();
  index_t     a  = *G.find_name("(1 2)");
  index_t     g  = *G.find_name("(1 3)");
  CHECK(G.name(G.conjugate(a, g)) == "(2 3)");
  CHECK(G.conjugate(a, 0) == a);
  CHECK(G.name(G.commutator(a, g)) == G.name(G.product(G.inverse(a), G.conjugate(a, g))));
}

TEST_CASE("conjugation laws hold exhaustively on small groups") {
  for (auto spec : {"sym:4", "q8", "es:3", "dihedral:5", "alt:5"}) {
    FiniteGroup G = build_group(spec);
    CAPTURE(spec);
    std::size_t bad = 0;
    for (index_t a = 0; a < G.order(); ++a) {
      for (index_t g = 0; g < G.order(); ++g) {
        bad += G.product(a, G.commutator(a, g)) != G.conjugate(a, g);
        for (index_t h = 0; h < G.order(); h += 7) {
          bad += G.conjugate(G.conjugate(a, g), h) != G.conjugate(a, G.product(g, h));
        }
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("central elements are fixed by conjugation") {
  FiniteGroup G = quaternion8();
  index_t     z = *G.find_name("-1");
  for (index_t g = 0; g < G.order(); ++g) {
    CHECK(G.conjugate(z, g) == z);
  }
  CHECK(G.center().size() == 2);
}

TEST_CASE("power and element order") {
  FiniteGroup G = cyclic(12);
  index_t     g = G.generators()[0];
  CHECK(G.element_order(g) == 12);
  CHECK(G.power(g, 12) == 0);
  CHECK(G.power(g, -1) == G.inverse(g));
  CHECK(G.exponent() == 12);
  CHECK(quaternion8().exponent() == 4);
}

TEST_CASE("Cayley tables are validated") {
  std::vector<std::vector<index_t>> z3 = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  FiniteGroup                       G  = from_cayley_table(z3);
  CHECK(G.order() == 3);
  // The identity (old index 2) is relabelled to 0.
  CHECK(G.product(0, 1) == 1);

  std::vector<std::vector<index_t>> nonassoc = {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
  CHECK_THROWS_AS(from_cayley_table(nonassoc), NotAssociative);
  std::vector<std::vector<index_t>> noid = {{0, 0}, {0, 0}};
  CHECK_THROWS_AS(from_cayley_table(noid), NoIdentity);
  std::vector<std::vector<index_t>> noinv = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(from_cayley_table(noinv), NoInverse);
  std::vector<std::vector<index_t>> ragged = {{0, 1}, {1}};
  CHECK_THROWS_AS(from_cayley_table(ragged), ParseError);
}

TEST_CASE("Cayley round trip preserves structure") {
  for (auto spec : {"q8", "sym:4", "es:3"}) {
    FiniteGroup G = build_group(spec);
    FiniteGroup H = from_cayley_table(parse_cayley(format_cayley(G)));
    CHECK(H.cayley_table() == G.cayley_table());
    CHECK(test_support::class_sizes(H) == test_support::class_sizes(G));
  }
}

TEST_CASE("elements of different groups do not mix") {
  FiniteGroup G = cyclic(4);
  FiniteGroup K = cyclic(4);
  CHECK_THROWS_AS(G.mul(G.element(1), K.element(1)), GroupMismatch);
  CHECK_THROWS_AS(G.check(K.full_set()), GroupMismatch);
  CHECK_NOTHROW(G.mul(G.element(1), G.with_id("other").element(1)));
  CHECK_THROWS_AS(G.element(4), Error);
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(symmetric(7), OrderExceeded);
  CHECK_THROWS_AS(cyclic(10, 9), OrderExceeded);
  CHECK(cyclic(9, 9).order() == 9);
  setenv("CLASSPROD_MAX_ORDER", "100", 1);
  CHECK(max_order_from_env() == 100);
  unsetenv("CLASSPROD_MAX_ORDER");
  CHECK(max_order_from_env() == default_max_order);
}

TEST_CASE("generator and Cayley file parsing") {
  auto file = parse_gens("# comment\ndegree 4\ngen (1 2 3 4)\ngen (1 3)\n");
  CHECK(file.degree == 4);
  CHECK(file.generators.size() == 2);
  CHECK(close_from_generators(file.generators).order() == 8);
  CHECK_THROWS_AS(parse_gens("degree 3\ngen (1 2)(2 3)\n"), Error);
  CHECK_THROWS_AS(parse_gens("gen (1 2)\n"), ParseError);
  CHECK_THROWS_AS(parse_cayley("2\n0 1\n1\n"), ParseError);
  CHECK_THROWS_AS(read_text_file("/nonexistent/file.gens"), IoError);
}

TEST_CASE("library classes agree with the oracle") {
  struct Case {
    char const*   spec;
    oracle::Group reference;
  };
  std::vector<Case> cases = {{"cyclic:12", oracle::cyclic(12)},
                             {"dihedral:6", oracle::dihedral(6)},
                             {"sym:4", oracle::symmetric(4)},
                             {"alt:5", oracle::alternating(5)},
                             {"q8", oracle::quaternion8()},
                             {"es:3", oracle::heisenberg(3)},
                             {"es:5", oracle::heisenberg(5)}};
  for (auto const& c : cases) {
    CAPTURE(c.spec);
    FiniteGroup G = build_group(c.spec);
    REQUIRE(G.order() == static_cast<std::size_t>(c.reference.size()));
    CHECK(test_support::class_sizes(G) == oracle::class_sizes(c.reference));
    CHECK(G.center().size() == oracle::center(c.reference).size());
    FiniteGroup H = test_support::from_oracle(c.reference);
    CHECK(test_support::class_sizes(H) == oracle::class_sizes(c.reference));
  }
}
