#include "ade/error.hpp"
#include "ade/lattice.hpp"

#include <doctest.h>

#include <random>

using namespace ade;

namespace {

LatticeClass random_class(const SurfaceModel& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-7, 7);
  std::vector<Integer> v;
  for (std::size_t i = 0; i < m.rank(); ++i) v.emplace_back(d(rng));
  return m.make_class(std::move(v));
}

}  // namespace

TEST_CASE("p2 blowup gram and canonical class") {
  for (int n = 0; n <= 9; ++n) {
    const SurfaceModel m = build_surface(SurfaceKind::P2Blowup, n);
    CHECK(m.rank() == static_cast<std::size_t>(n + 1));
    CHECK(m.pair(m.canonical(), m.canonical()) == 9 - n);
    CHECK(signature(m) == std::pair{1, n});
    for (int i = 0; i < n; ++i) {
      CHECK(m.pair(m.line(i), m.line(i)) == -1);
      CHECK(m.pair(m.line(i), m.canonical()) == -1);
    }
    CHECK(m.boundary() == -m.canonical());
  }
  const SurfaceModel six = build_surface(SurfaceKind::P2Blowup, 6);
  CHECK(six.id() == "p2_blowup:6");
  CHECK(six.pair(six.canonical(), six.canonical()) == 3);
}

TEST_CASE("hirzebruch blowup gram") {
  for (int n = 0; n <= 12; ++n) {
    const SurfaceModel m = build_surface(SurfaceKind::HirzebruchBlowup, n);
    const LatticeClass b = *m.base_class(), f = *m.fiber_class();
    CHECK(m.pair(b, b) == -1);
    CHECK(m.pair(b, f) == 1);
    CHECK(m.pair(f, f) == 0);
    CHECK(m.pair(m.canonical(), m.canonical()) == 8 - n);
    CHECK(m.pair(m.canonical(), f) == -2);
    CHECK(m.line(0) == b);
    CHECK(signature(m) == std::pair{1, n + 1});
  }
}

TEST_CASE("change of basis is an isometry between the two descriptions") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 8; ++n) {
    const SurfaceModel h = build_surface(SurfaceKind::HirzebruchBlowup, n);
    const SurfaceModel p = build_surface(SurfaceKind::P2Blowup, n + 1);
    CHECK(change_basis(h, p, h.canonical()) == p.canonical());
    CHECK(change_basis(p, h, p.canonical()) == h.canonical());
    CHECK(change_basis(h, p, *h.fiber_class()) == p.basis_vector(0) - p.line(0));
    for (int i = 0; i < 50; ++i) {
      const LatticeClass x = random_class(h, rng), y = random_class(h, rng);
      const LatticeClass px = change_basis(h, p, x), py = change_basis(h, p, y);
      CHECK(p.pair(px, py) == h.pair(x, y));
      CHECK(change_basis(p, h, px) == x);
    }
  }
  const SurfaceModel a = build_surface(SurfaceKind::P2Blowup, 3);
  const SurfaceModel b = build_surface(SurfaceKind::P2Blowup, 5);
  CHECK_THROWS_AS(change_basis(a, b, a.canonical()), DomainError);
  CHECK(change_basis(a, a, a.line(1)) == a.line(1));
}

TEST_CASE("model ids round trip and reject junk") {
  for (const char* id : {"p2_blowup:0", "p2_blowup:8", "hirzebruch_blowup:3"}) {
    CHECK(model_from_id(id).id() == id);
  }
  for (const char* id : {"p2_blowup", "p2_blowup:x", "torus:1", "p2_blowup:65", "p2_blowup:-1"}) {
    CHECK_THROWS_AS(model_from_id(id), DomainError);
  }
  CHECK_THROWS_AS(build_surface(SurfaceKind::P2Blowup, kMaxBlowups + 1), DomainError);
}

TEST_CASE("classes from different models do not pair") {
  const SurfaceModel a = build_surface(SurfaceKind::P2Blowup, 3);
  const SurfaceModel b = build_surface(SurfaceKind::HirzebruchBlowup, 2);
  try {
    (void)a.pair(a.line(0), b.line(0));
    FAIL("expected a basis mismatch");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::BasisMismatch);
  }
  CHECK_THROWS_AS(a.line(3), DomainError);
  CHECK_THROWS_AS(a.make_class({1, 0}), DomainError);
}

TEST_CASE("class arithmetic and ordering") {
  const SurfaceModel m = build_surface(SurfaceKind::P2Blowup, 2);
  const LatticeClass x = m.make_class({1, -1, 0});
  CHECK(x + (-x) == m.zero());
  CHECK((x - x).is_zero());
  CHECK(Integer(3) * x == x + x + x);
  CHECK(m.zero() < m.basis_vector(0));
  CHECK(m.basis_labels() == std::vector<std::string>{"h", "l0", "l1"});
}
