#include "ade/error.hpp"
#include "ade/polynomial.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace ade;

namespace {

QPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> c(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rational> v;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) {
    Rational r(c(rng), den(rng));
    r.canonicalize();
    v.push_back(r);
  }
  return QPoly(v);
}

QPoly linear(long a, long b) { return QPoly({Rational(b), Rational(a)}); }  // a t + b

}  // namespace

TEST_CASE("basic arithmetic and printing") {
  const QPoly t = QPoly::variable();
  const QPoly p = t * t - QPoly(1);
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 8);
  CHECK(p.derivative() == QPoly::monomial(2, 1));
  CHECK(pow(t + QPoly(1), 3) == QPoly({1, 3, 3, 1}));
  CHECK(QPoly().degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(p.to_string() == "t^2 - 1");
  CHECK(QPoly({Rational(0), Rational(-1, 2)}).to_string("u") == "-1/2*u");
  CHECK(QPoly().to_string() == "0");
}

TEST_CASE("division identity a = q b + r with deg r < deg b") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const QPoly a = random_poly(rng, 8);
    QPoly b = random_poly(rng, 5);
    if (b.is_zero()) b = QPoly(1);
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(divmod(QPoly(1), QPoly()), DomainError);
  CHECK_THROWS_AS(exact_div(QPoly::variable(), QPoly::variable() + QPoly(1)), DomainError);
}

TEST_CASE("gcd divides both inputs and recovers a planted factor") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const QPoly g = random_poly(rng, 3);
    if (g.degree() < 1) continue;
    const QPoly a = g * random_poly(rng, 4);
    const QPoly b = g * random_poly(rng, 4);
    if (a.is_zero() || b.is_zero()) continue;
    const QPoly d = gcd(a, b);
    CHECK(divmod(a, d).second.is_zero());
    CHECK(divmod(b, d).second.is_zero());
    CHECK(divmod(d, g.monic()).second.is_zero());
    CHECK(d.leading() == 1);
  }
}

TEST_CASE("squarefree decomposition reconstructs the input") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> r(-5, 5);
  std::uniform_int_distribution<int> e(1, 3);
  for (int i = 0; i < 200; ++i) {
    // Product of powers of distinct linear factors: multiplicities known.
    std::map<long, int> mult;
    for (int k = 0; k < 4; ++k) mult[r(rng)] += e(rng);
    QPoly p(3);
    int maxm = 0;
    for (const auto& [root, m] : mult) {
      p *= pow(linear(1, -root), static_cast<unsigned>(m));
      maxm = std::max(maxm, m);
    }
    const auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == static_cast<std::size_t>(maxm));
    QPoly back(3);
    for (std::size_t k = 0; k < parts.size(); ++k) back *= pow(parts[k], static_cast<unsigned>(k + 1));
    CHECK(back == p);
    for (const auto& [root, m] : mult) CHECK(parts[static_cast<std::size_t>(m - 1)](Rational(root)) == 0);
  }
}

TEST_CASE("rational roots") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
  for (int i = 0; i < 200; ++i) {
    std::set<Rational> want;
    QPoly p = QPoly({1, 0, 1});  // t^2 + 1 has no rational roots
    for (int k = 0; k < 3; ++k) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      want.insert(q);
      p *= QPoly({-q, Rational(1)});
    }
    const auto rr = rational_roots(p * QPoly(7));
    CHECK(rr.complete);
    CHECK(std::vector<Rational>(want.begin(), want.end()) == rr.roots);
  }
  CHECK(rational_roots(QPoly({-2, 0, 1})).roots.empty());
  CHECK(rational_roots(QPoly(5)).roots.empty());
  CHECK(rational_roots(QPoly({0, 0, 1})).roots == std::vector<Rational>{0});
}
