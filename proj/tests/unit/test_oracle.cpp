#include <doctest.h>

#include "cohere/error.hpp"
#include "cohere/oracle.hpp"
#include "helpers.hpp"

using namespace cohere;
using Points = std::vector<std::vector<Rational>>;

TEST_CASE("simplex has the unit vectors as vertices") {
  oracle::Polytope p{{{1, 1, 1}}, {1}};
  CHECK(oracle::vertices(p) == Points{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("a single point") {
  oracle::Polytope p{{{1, 1}, {1, -1}}, {1, 1}};
  CHECK(oracle::vertices(p) == Points{{1, 0}});
}

TEST_CASE("empty polytope and degenerate vertices") {
  CHECK(oracle::vertices(oracle::Polytope{{{1, 1}}, {-1}}).empty());
  // x1 + x2 + x3 = 1 and x1 = x2: the vertex (0,0,1) is reached by several bases.
  oracle::Polytope p{{{1, 1, 1}, {1, -1, 0}}, {1, 0}};
  CHECK(oracle::vertices(p) == Points{{0, 0, 1}, {Rational(1, 2), Rational(1, 2), 0}});
}

TEST_CASE("size limit") {
  oracle::Polytope p{{std::vector<Rational>(oracle::kMaxVariables + 1, Rational(1))}, {1}};
  CHECK_THROWS_AS(oracle::vertices(p), SizeLimitError);
}

TEST_CASE("polytope from Sigma") {
  Context ctx({"A", "B"});
  Assessment a(ctx, testing::family({"A | B", "B | A"}, ctx), testing::qs({"1/2", "1/2"}));
  auto p = oracle::polytope(build_sigma(a));
  CHECK(p.rows.size() == 3);
  CHECK(p.rhs == std::vector<Rational>{Rational(1, 2), Rational(1, 2), 1});
  Rational third(1, 3);
  CHECK(oracle::vertices(p) == Points{{third, third, third}});
  CHECK(oracle::is_coherent(a));
}

TEST_CASE("brute-force extension") {
  Context ctx({"A", "H", "B", "K"});
  auto f = testing::family({"A | H", "B | K"}, ctx);
  Assessment a(ctx, f, testing::qs({"1/2", "1/2"}));
  CHECK(oracle::extension_interval_bruteforce(a, quasi_conjunction(f)) == testing::iv("0", "2/3"));
  CHECK(oracle::extension_interval_bruteforce(a, quasi_disjunction(f)) == testing::iv("1/3", "1"));
}
