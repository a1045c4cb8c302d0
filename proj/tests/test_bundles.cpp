#include "ade/bundles.hpp"
#include "ade/error.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace ade;

TEST_CASE("tautological bundles: rank, c1 and boundary degrees") {
  for (int n = 1; n <= 16; ++n) {
    const SurfaceModel m = build_surface(SurfaceKind::HirzebruchBlowup, n);
    const FormalBundle a = build_tautological(m, Representation::FundamentalA);
    CHECK(a.rank() == static_cast<std::size_t>(n));
    LatticeClass sum = m.zero();
    for (int i = 1; i <= n; ++i) sum += m.line(i);
    CHECK(a.c1(m) == sum);
    for (const auto& s : a.summands()) CHECK(boundary_degree(m, s.cls) == 1);
    const FormalBundle at = twist(a, -m.line(0));
    for (const auto& s : at.summands()) CHECK(boundary_degree(m, s.cls) == 0);

    const FormalBundle d = build_tautological(m, Representation::VectorD);
    CHECK(d.rank() == static_cast<std::size_t>(2 * n));
    CHECK(d.c1(m) == Integer(n) * *m.fiber_class());

    const FormalBundle ad = build_tautological(m, Representation::Adjoint);
    CHECK(ad.rank() == static_cast<std::size_t>(n * n - 1));
    CHECK(ad.c1(m).is_zero());
    for (const auto& s : ad.summands()) CHECK(boundary_degree(m, s.cls) == 0);
  }
}

TEST_CASE("configuration size on the two models") {
  CHECK(configuration_size(build_surface(SurfaceKind::HirzebruchBlowup, 5)) == 5);
  CHECK(configuration_size(build_surface(SurfaceKind::P2Blowup, 6)) == 5);
  const SurfaceModel p = build_surface(SurfaceKind::P2Blowup, 6);
  CHECK(build_tautological(p, Representation::FundamentalA).rank() == 5);
  CHECK_THROWS_AS(build_tautological(p, Representation::VectorD), DomainError);
  CHECK_THROWS_AS(build_tautological(build_surface(SurfaceKind::P2Blowup, 0), Representation::FundamentalA),
                  DomainError);
}

TEST_CASE("restriction to the boundary") {
  const int n = 4;
  const std::int64_t N = 12;
  const SurfaceModel m = build_surface(SurfaceKind::HirzebruchBlowup, n);
  const FormalBundle v = twist(build_tautological(m, Representation::FundamentalA), -m.line(0));
  const Marking mk{{1, {1}}, {2, {5}}, {3, {5}}, {4, {1}}};
  const EBundleClass e = restrict_to_boundary(m, v, mk, N);
  CHECK(e.rank() == n);
  REQUIRE(e.points.size() == 2);
  CHECK(e.points[0] == EPointEntry{{1}, 2, false});
  CHECK(e.points[1] == EPointEntry{{5}, 2, false});

  CHECK(restrict_class(m, m.line(2) - m.line(1), mk, N).value == 4);
  CHECK(restrict_class(m, m.line(1) - m.line(2), mk, N).value == 8);

  // Boundary degree must vanish.
  try {
    (void)restrict_to_boundary(m, build_tautological(m, Representation::FundamentalA), mk, N);
    FAIL("expected a boundary-degree error");
  } catch (const DomainError& e2) {
    CHECK(e2.code() == ErrorCode::NonzeroBoundaryDegree);
  }
  try {
    (void)restrict_to_boundary(m, v, Marking{{1, {1}}}, N);
    FAIL("expected a missing marking");
  } catch (const DomainError& e2) {
    CHECK(e2.code() == ErrorCode::MissingMarking);
  }
  Marking bad = mk;
  bad[0] = {3};
  CHECK_THROWS_AS(restrict_to_boundary(m, v, bad, N), DomainError);
  CHECK_THROWS_AS(restrict_to_boundary(build_surface(SurfaceKind::HirzebruchBlowup, 5), v, mk, N),
                  DomainError);
  CHECK_THROWS_AS(reduce_mod(3, 0), DomainError);
}

TEST_CASE("restriction is additive on classes") {
  std::mt19937_64 rng(19);
  const std::int64_t N = 720;
  const SurfaceModel m = build_surface(SurfaceKind::HirzebruchBlowup, 6);
  std::uniform_int_distribution<std::int64_t> pt(0, N - 1);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int t = 0; t < 200; ++t) {
    Marking mk;
    for (int i = 1; i <= 6; ++i) mk[i] = {pt(rng)};
    std::vector<Integer> a, b;
    for (std::size_t i = 0; i < m.rank(); ++i) {
      a.emplace_back(c(rng));
      b.emplace_back(c(rng));
    }
    const LatticeClass x = m.make_class(a), y = m.make_class(b);
    const auto rx = restrict_class(m, x, mk, N).value;
    const auto ry = restrict_class(m, y, mk, N).value;
    CHECK(restrict_class(m, x + y, mk, N).value == (rx + ry) % N);
  }
}

TEST_CASE("normalization and SU constraint") {
  EBundleClass e;
  e.order = 10;
  e.points = {{{3}, 1, false}, {{1}, 2, true}, {{3}, 2, false}};
  e.normalize();
  CHECK(e.points == std::vector<EPointEntry>{{{1}, 2, true}, {{3}, 3, false}});
  CHECK(e.rank() == 5);

  const std::vector<EGroupPoint> ok{{3}, {7}}, bad{{3}, {8}};
  CHECK(check_su_constraint(ok, 10));
  CHECK_FALSE(check_su_constraint(bad, 10));
  CHECK(reduce_mod(-1, 10) == 9);
}
