#include "ade/error.hpp"
#include "ade/local_model.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace ade;

TEST_CASE("parsing polynomials") {
  const std::vector<std::string> names{"x", "y", "s"};
  const Poly p = parse_poly("x^2 - 3/2*y*s + (s - 1)^2", names);
  CHECK(p.evaluate({Rational(1), Rational(2), Rational(3)}) == Rational(1) - Rational(9) + Rational(4));
  CHECK(parse_poly("-(x+y)*(x-y)", names) == parse_poly("y^2 - x^2", names));
  CHECK(parse_poly("0", names).is_zero());
  for (const char* bad : {"x +", "w", "x^", "(x", "x**2", "1/0"}) {
    CHECK_THROWS_AS(parse_poly(bad, names), DomainError);
  }
}

TEST_CASE("conifold graded dimensions are (d+1)^2") {
  const TruncRing r = conifold_ring(10);
  CHECK(graded_dim(r, 0) == 1);
  CHECK(graded_dim(r, 1) == 4);
  CHECK(graded_dim(r, 2) == 9);
  for (int d = 0; d <= 10; ++d) {
    // s-degree 0 and 1 over C[x,y,z]
    const long want = oracle::binomial(d + 2, 2) + oracle::binomial(d + 1, 2);
    CHECK(static_cast<long>(graded_dim(r, d)) == want);
  }
  CHECK_THROWS_AS(graded_dim(r, 11), DomainError);
  CHECK_THROWS_AS(graded_dim(r, -1), DomainError);
  CHECK(r.normal_form(r.parse("s^2 - x^2 + y^2 - z^2")).is_zero());
}

TEST_CASE("graded dimensions stabilize under a larger truncation") {
  const TruncRing small = conifold_ring(5);
  const TruncRing big = conifold_ring(9);
  for (int d = 0; d <= 5; ++d) CHECK(graded_dim(small, d) == graded_dim(big, d));
}

TEST_CASE("normal form rewriting is confluent") {
  std::mt19937_64 rng(53);
  const std::vector<std::string> names{"a", "b", "c", "d"};
  std::uniform_int_distribution<long> c(-3, 3);
  auto random_form = [&](int deg, const std::vector<std::size_t>& vars) {
    Poly p(4);
    const TruncRing fr = TruncRing::free_ring(names, 8);
    for (const auto& m : fr.monomials(deg, vars)) p.add_term(m, c(rng));
    return p;
  };
  for (int trial = 0; trial < 40; ++trial) {
    // d^2 = q(a, b, c), c^3 = g(a, b): solvable and acyclic
    std::vector<Relation> rels{{3, 2, random_form(2, {0, 1, 2})}, {2, 3, random_form(3, {0, 1})}};
    const TruncRing r(names, {1, 1, 1, 1}, rels, 8);
    for (int k = 0; k < 10; ++k) {
      const Poly p = random_form(6, {0, 1, 2, 3}) + random_form(5, {2, 3}) * random_form(1, {3});
      const Poly det = r.normal_form(p);
      CHECK(r.normal_form(p, &rng) == det);
      for (const auto& [m, coef] : det.terms()) CHECK(r.is_normal(m));
    }
  }
}

TEST_CASE("invalid rings are refused") {
  const std::vector<std::string> names{"x", "y"};
  auto expect_invalid = [&](std::vector<Relation> rels, std::vector<int> deg = {1, 1}) {
    try {
      TruncRing r(names, deg, std::move(rels), 6);
      FAIL("expected InvalidRing");
    } catch (const DomainError& e) {
      CHECK(e.code() == ErrorCode::InvalidRing);
    }
  };
  const Poly x = parse_poly("x", names), y = parse_poly("y", names);
  expect_invalid({{0, 2, x * y}});                      // rhs contains its variable
  expect_invalid({{0, 2, y}});                          // not homogeneous
  expect_invalid({{0, 1, y}, {0, 2, y * y}});           // repeated left side
  expect_invalid({{0, 1, y}, {1, 1, x}});               // cyclic
  expect_invalid({}, {1, 0});                           // degree must be positive
}

TEST_CASE("generation and freeness over the downstairs ring") {
  const int D = 8;
  const TruncRing r = conifold_ring(D);
  const GradedModule all = make_ideal(r, {"1"});
  CHECK(check_generate(r, all, make_module(r, {"1", "s"}, {"x", "y", "z"}), D).ok);
  const auto one = check_generate(r, all, make_module(r, {"1"}, {"x", "y", "z"}), D);
  CHECK_FALSE(one.ok);
  CHECK(one.first_failure_degree == 1);

  const GradedModule ideal = make_ideal(r, {"x - y", "z + s"});
  const GradedModule pair = make_module(r, {"x - y", "z + s"}, {"x", "y", "z"});
  CHECK(check_generate(r, ideal, pair, D).ok);
  CHECK(check_free(r, pair, D).ok);
  CHECK(check_free(r, make_module(r, {"1", "s"}, {"x", "y", "z"}), D).ok);
  CHECK_FALSE(check_free(r, make_module(r, {"x", "x"}, {"x", "y", "z"}), D).ok);
  // Over the full ring s is a coefficient, so {1, s} has a syzygy.
  CHECK_FALSE(check_free(r, make_module(r, {"1", "s"}, {"x", "y", "z", "s"}), D).ok);
}

TEST_CASE("minimal generators: Weil versus Cartier") {
  const TruncRing r = conifold_ring(8);
  CHECK(min_generators_at_origin(r, {r.parse("x - y"), r.parse("z - s")}, 8) == 2);
  CHECK(min_generators_at_origin(r, {r.parse("x - y")}, 8) == 1);
  // Redundant generators do not count.
  CHECK(min_generators_at_origin(r, {r.parse("x - y"), r.parse("x^2 - x*y")}, 8) == 1);
  const TruncRing f = TruncRing::free_ring({"x"}, 6);
  CHECK(min_generators_at_origin(f, {f.parse("x")}, 6) == 1);
  const TruncRing f3 = TruncRing::free_ring({"x", "y", "z"}, 6);
  CHECK(min_generators_at_origin(f3, {f3.parse("x"), f3.parse("y"), f3.parse("z")}, 6) == 3);
}

TEST_CASE("singular locus rank") {
  const std::vector<std::string> names{"s", "x", "y", "z"};
  const Poly q = parse_poly("s^2 - x^2 + y^2 - z^2", names);
  CHECK(singular_locus_rank({q}, {0, 0, 0, 0}) == 0);
  CHECK(singular_locus_rank({q}, {1, 1, 0, 0}) == 1);
  const Poly smooth = parse_poly("u^2 + v", {"u", "v"});
  CHECK(singular_locus_rank({smooth}, {0, 0}) == 1);
}

TEST_CASE("exceptional curve splits") {
  const auto [direct, free] = exceptional_curve_splits();
  CHECK(direct == SplitType{-1, 1});
  CHECK(free == SplitType{0, 0});
}

TEST_CASE("extension chain and the full conifold suite") {
  for (int D : {4, 6}) {
    const ChainReport c = verify_extension_chain(D);
    CHECK(c.passed());
    CHECK(c.direct_sum_split == SplitType{-1, 1});
    CHECK(c.free_split == SplitType{0, 0});
  }
  const ChainReport s = conifold_suite(8);
  CHECK(s.passed());
  for (const auto& chk : s.checks) {
    INFO(chk.id);
    CHECK(chk.passed);
  }
  CHECK(s.checks.size() >= 12);
}
