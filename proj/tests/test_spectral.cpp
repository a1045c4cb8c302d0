#include "ade/error.hpp"
#include "ade/spectral.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace ade;

namespace {

const QPoly t = QPoly::variable();

// Cover prod_i (u - r_i(t)).
CoverPoly cover_from_roots(const std::vector<QPoly>& roots) {
  std::vector<QPoly> f{QPoly(1)};  // coefficients in u, low first
  for (const auto& r : roots) {
    std::vector<QPoly> g(f.size() + 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      g[i + 1] += f[i];
      g[i] -= r * f[i];
    }
    f = std::move(g);
  }
  f.pop_back();
  return make_cover(static_cast<int>(roots.size()), f);
}

// (-1)^{n(n-1)/2} prod_{i<j} (r_i - r_j)^2
QPoly disc_oracle(const std::vector<QPoly>& roots) {
  const std::size_t n = roots.size();
  QPoly out(((n * (n - 1) / 2) % 2) ? -1 : 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out *= pow(roots[i] - roots[j], 2);
  return out;
}

}  // namespace

TEST_CASE("double point u^2 - t") {
  const CoverPoly c = make_cover(2, {-t, QPoly()});
  CHECK(discriminant(c) == QPoly(-4) * t);
  CHECK(fiber_profile(c, 0) == std::vector<int>{2});
  CHECK(fiber_profile(c, 1) == std::vector<int>{1, 1});
  CHECK(fiber_profile(c, 2) == std::vector<int>{1, 1});
  const BranchReport r = analyze_cover(c);
  REQUIRE(r.branch_points.size() == 1);
  CHECK(r.branch_points[0].t == 0);
  CHECK(r.branch_points[0].partition == std::vector<int>{2});
  CHECK(r.nonrational_factors.empty());
}

TEST_CASE("disjoint sheets u^2 - 1") {
  const CoverPoly c = make_cover(2, {QPoly(-1), QPoly()});
  const QPoly d = discriminant(c);
  CHECK(d.degree() == 0);
  CHECK(d == QPoly(-4));
  CHECK(analyze_cover(c).branch_points.empty());
}

TEST_CASE("cubic u^3 - 3u + 2t") {
  const CoverPoly c = make_cover(3, {QPoly(2) * t, QPoly(-3), QPoly()});
  const QPoly d = discriminant(c);
  CHECK(d(Rational(1)) == 0);
  CHECK(d(Rational(-1)) == 0);
  CHECK(d.degree() == 2);
  CHECK(fiber_profile(c, 1) == std::vector<int>{2, 1});
  CHECK(fiber_profile(c, -1) == std::vector<int>{2, 1});
  CHECK(fiber_profile(c, 0) == std::vector<int>{1, 1, 1});
  const BranchReport r = analyze_cover(c);
  REQUIRE(r.branch_points.size() == 2);
  CHECK(r.branch_points[0].t == -1);
  CHECK(r.branch_points[1].t == 1);
}

TEST_CASE("irrational branch points are kept as factors") {
  // u^2 - (t^2 - 2): discriminant -4(t^2 - 2)
  const CoverPoly c = make_cover(2, {QPoly(2) - t * t, QPoly()});
  const BranchReport r = analyze_cover(c);
  CHECK(r.branch_points.empty());
  REQUIRE(r.nonrational_factors.size() == 1);
  CHECK(r.nonrational_factors[0] == t * t - QPoly(2));
}

TEST_CASE("discriminant agrees with the root-difference product") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<int> nn(2, 5);
  for (int i = 0; i < 150; ++i) {
    std::vector<QPoly> roots;
    const int n = nn(rng);
    for (int k = 0; k < n; ++k) roots.push_back(QPoly({Rational(c(rng)), Rational(c(rng))}));
    const QPoly want = disc_oracle(roots);
    const CoverPoly cov = cover_from_roots(roots);
    if (want.is_zero()) {
      CHECK_THROWS_AS(discriminant(cov), DomainError);
      continue;
    }
    CHECK(discriminant(cov) == want);
    // Both resultant routes agree.
    const auto f = cov.u_coefficients();
    std::vector<QPoly> fu;
    for (std::size_t k = 1; k < f.size(); ++k) fu.push_back(QPoly(static_cast<long>(k)) * f[k]);
    CHECK(resultant_sylvester(f, fu) == resultant_subresultant(f, fu));

    // disc(t0) = 0 exactly when a part >= 2 appears.
    const BranchReport r = analyze_cover(cov);
    for (const auto& b : r.branch_points) {
      CHECK(want(b.t) == 0);
      CHECK(b.partition.front() >= 2);
      CHECK(std::accumulate(b.partition.begin(), b.partition.end(), 0) == n);
    }
    for (long x = -5; x <= 5; ++x) {
      const auto prof = fiber_profile(cov, x);
      CHECK((want(Rational(x)) == 0) == (prof.front() >= 2));
    }
  }
}

TEST_CASE("resultant routes agree on random pairs") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> c(-3, 3);
  std::uniform_int_distribution<int> dd(1, 4);
  for (int i = 0; i < 100; ++i) {
    TPolyInU a, b;
    const int da = dd(rng), db = dd(rng);
    for (int k = 0; k <= da; ++k) a.push_back(QPoly({Rational(c(rng)), Rational(c(rng)), Rational(c(rng))}));
    for (int k = 0; k <= db; ++k) b.push_back(QPoly({Rational(c(rng)), Rational(c(rng))}));
    if (a.back().is_zero()) a.back() = QPoly(1);
    if (b.back().is_zero()) b.back() = QPoly(1);
    CHECK(resultant_sylvester(a, b) == resultant_subresultant(a, b));
  }
}

TEST_CASE("non-reduced cover is refused") {
  const CoverPoly c = cover_from_roots({t, t});
  try {
    (void)discriminant(c);
    FAIL("expected NonReducedCover");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NonReducedCover);
  }
  CHECK_THROWS_AS(make_cover(2, {QPoly(1)}), DomainError);
}

TEST_CASE("Sen family") {
  const SenFamily g = sen_delta(t, QPoly(1), t);
  CHECK(g.delta == t * t - QPoly(1));
  CHECK(g.cover_degree == 12);
  CHECK(g.delta_fiber_degree == 6);
  CHECK_FALSE(g.degenerate);

  const SenFamily z = sen_delta(QPoly(1), t, t * t);
  CHECK(z.delta.is_zero());
  CHECK(z.degenerate);
  CHECK_FALSE(z.warnings.empty());

  for (int k = 1; k <= 6; ++k) CHECK(sen_delta(t, QPoly(1), t, {2, k}).cover_degree == 4 * k + 8);

  try {
    (void)sen_delta(pow(t, 5), QPoly(1), t);
    FAIL("expected InconsistentDegrees");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::InconsistentDegrees);
  }
  CHECK_THROWS_AS(sen_delta(t, QPoly(1), pow(t, 3), {2, 1}), DomainError);
}

TEST_CASE("fiber Picard decomposition") {
  for (int n = 1; n <= 10; ++n) {
    const FiberPicard fp = fiber_picard(n);
    const SurfaceModel m = build_surface(SurfaceKind::HirzebruchBlowup, n);
    CHECK(fp.root_block.generators.size() == static_cast<std::size_t>(n - 1));
    CHECK(fp.complement.generators.size() == 3);
    CHECK(fp.index == n);
    for (const auto& x : fp.root_block.generators)
      for (const auto& y : fp.complement.generators) CHECK(m.pair(x, y) == 0);
    CHECK(fp.root_type == "A" + std::to_string(n - 1));

    const FiberPicard pp = fiber_picard(build_surface(SurfaceKind::P2Blowup, n + 1));
    CHECK(pp.index == n);
    CHECK(pp.root_block.generators.size() == static_cast<std::size_t>(n - 1));
  }
  const FiberPicard two = fiber_picard(2);
  CHECK(two.root_type == "A1");
  CHECK(fiber_picard(1).root_block.generators.empty());
}
