#include "ade/suite.hpp"

#include "ade/error.hpp"

#include <chrono>
#include <functional>
#include <random>

namespace ade {

namespace {

using Clock = std::chrono::steady_clock;

CriterionReport timed(int id, std::string name, const std::function<bool(Json&)>& body) {
  CriterionReport r;
  r.id = id;
  r.name = std::move(name);
  const auto start = Clock::now();
  try {
    r.passed = body(r.detail);
  } catch (const DomainError& e) {
    r.passed = false;
    r.detail["error"] = error_json(e)["error"];
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

bool line_counts(Json& detail) {
  const std::vector<std::size_t> expected{1, 3, 6, 10, 16, 27, 56, 240};
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    const auto lines = enumerate_lines(build_surface(SurfaceKind::P2Blowup, n));
    detail["counts"].push_back(lines.size());
    ok = ok && lines.size() == expected[static_cast<std::size_t>(n - 1)];
  }
  return ok;
}

bool root_data(Json& detail) {
  bool ok = true;
  for (int n = 2; n <= 10; ++n) {
    const SurfaceModel m = build_surface(SurfaceKind::HirzebruchBlowup, n);
    const RootDatum d = enumerate_roots(m, {true, true, true});
    bool simple = d.simple_roots.size() == static_cast<std::size_t>(n - 1);
    for (int i = 1; simple && i < n; ++i) {
      simple = d.simple_roots[static_cast<std::size_t>(i - 1)] == m.line(i) - m.line(i + 1);
    }
    const auto orbit = weyl_orbit(m, d, m.line(1) - m.line(0), 10'000);
    detail["A"].push_back({{"n", n}, {"type", d.type_label()}, {"orbit", orbit.size()}});
    ok = ok && simple && d.type_label() == "A" + std::to_string(n - 1) &&
         orbit.size() == static_cast<std::size_t>(n);
  }
  const RootDatum e6 = enumerate_roots(build_surface(SurfaceKind::P2Blowup, 6), {});
  detail["E6"] = {{"type", e6.type_label()}, {"count", e6.roots.size()}};
  return ok && e6.roots.size() == 72 && e6.type_label() == "E6";
}

bool ext_index(Json& detail) {
  const SurfaceModel m = build_surface(SurfaceKind::HirzebruchBlowup, 2);
  const ExtProfile with = ext_profile(m, make_collisions(m, {{1, 2}}), m.line(1), m.line(2));
  const ExtProfile without = ext_profile(m, make_collisions(m, {}), m.line(1), m.line(2));
  const Integer chi = euler_char(m, m.line(2) - m.line(1));
  detail["collided"] = to_json(with);
  detail["generic"] = to_json(without);
  detail["chi"] = to_json(chi);
  const auto is = [](const ExtProfile& p, long a, long b, long c, long i) {
    return p.ext0 && *p.ext0 == a && *p.ext1 == b && *p.ext2 == c && *p.index == i;
  };
  return is(with, 1, 1, 0, 0) && is(without, 0, 0, 0, 0) && chi == 0;
}

bool boundary_degrees(Json& detail) {
  bool ok = true;
  long checked = 0;
  for (int n = 1; n <= 16; ++n) {
    const SurfaceModel m = build_surface(SurfaceKind::HirzebruchBlowup, n);
    for (auto rep : {Representation::FundamentalA, Representation::VectorD}) {
      const FormalBundle raw = build_tautological(m, rep);
      const FormalBundle tw = twist(raw, -m.line(0));
      for (std::size_t i = 0; i < raw.rank(); ++i) {
        ok = ok && boundary_degree(m, raw.summands()[i].cls) == 1 &&
             boundary_degree(m, tw.summands()[i].cls) == 0;
        ++checked;
      }
    }
  }
  detail["summands_checked"] = checked;
  return ok;
}

SpectralFiberDatum random_datum(std::mt19937_64& rng, bool force_collision) {
  std::uniform_int_distribution<int> n_dist(force_collision ? 2 : 1, 16);
  const int n = n_dist(rng);
  SpectralFiberDatum d;
  d.order = kDefaultGroupOrder;
  std::uniform_int_distribution<std::int64_t> p_dist(0, d.order - 1);
  for (int i = 0; i < n; ++i) d.sheets.push_back({{p_dist(rng)}, 1});
  if (force_collision) {
    std::uniform_int_distribution<int> idx(0, n - 1);
    const int a = idx(rng);
    int b = idx(rng);
    if (b == a) b = (a + 1) % n;
    d.sheets[static_cast<std::size_t>(b)].point = d.sheets[static_cast<std::size_t>(a)].point;
  }
  return d;
}

bool transform_compatibility(const SuiteOptions& o, Json& detail) {
  std::mt19937_64 rng(o.seed);
  int collided = 0, failures = 0;
  for (int i = 0; i < o.transform_cases; ++i) {
    const bool force = i < o.forced_collisions || i % 5 == 0;
    const SpectralFiberDatum d = random_datum(rng, force);
    const int n = d.cover_degree();
    const SurfaceModel m = i % 2 == 0 ? build_surface(SurfaceKind::HirzebruchBlowup, n)
                                      : build_surface(SurfaceKind::P2Blowup, n + 1);
    if (!collisions_for(m, d).pairs.empty()) ++collided;
    if (!check_restriction_compatibility(m, d)) ++failures;
  }
  detail["cases"] = o.transform_cases;
  detail["with_collisions"] = collided;
  detail["failures"] = failures;
  return failures == 0 && collided >= o.forced_collisions;
}

bool local_models(const SuiteOptions& o, Json& detail) {
  const ChainReport r = conifold_suite(o.maxdeg);
  detail = to_json(r);
  return r.passed();
}

bool spectral_checks(Json& detail) {
  const CoverPoly c = make_cover(2, {QPoly({0, -1}), QPoly()});
  const BranchReport r = analyze_cover(c);
  detail["branch"] = to_json(r);
  const bool branch = r.branch_points.size() == 1 && r.branch_points[0].t == 0 &&
                      r.branch_points[0].partition == std::vector<int>{2} && r.nonrational_factors.empty();
  bool sen = true;
  for (int k = 1; k <= 6; ++k) {
    const SenFamily f = sen_delta(QPoly::variable(), QPoly(1), QPoly::variable(), {2, k});
    detail["cover_degrees"].push_back(f.cover_degree);
    sen = sen && f.cover_degree == 4 * k + 8;
  }
  return branch && sen;
}

LatticeClass random_class(const SurfaceModel& m, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<Integer> v;
  for (std::size_t i = 0; i < m.rank(); ++i) v.emplace_back(c(rng));
  return m.make_class(std::move(v));
}

bool properties(const SuiteOptions& o, Json& detail) {
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  int fail_reflect = 0, fail_serre = 0, fail_confluence = 0, fail_stable = 0;

  std::vector<std::pair<SurfaceModel, RootDatum>> systems;
  for (int n = 3; n <= 8; ++n) {
    const SurfaceModel m = build_surface(SurfaceKind::P2Blowup, n);
    systems.emplace_back(m, enumerate_roots(m, {}));
  }
  for (int i = 0; i < o.property_cases; ++i) {
    const auto& [m, d] = systems[static_cast<std::size_t>(i) % systems.size()];
    const LatticeClass r = d.roots[std::uniform_int_distribution<std::size_t>(0, d.roots.size() - 1)(rng)];
    const LatticeClass x = random_class(m, rng, 6), y = random_class(m, rng, 6);
    const LatticeClass sx = reflect(m, r, x), sy = reflect(m, r, y);
    if (m.pair(sx, sy) != m.pair(x, y) || reflect(m, r, sx) != x) ++fail_reflect;
  }
  for (int i = 0; i < o.property_cases; ++i) {
    const SurfaceModel m = build_surface(i % 2 ? SurfaceKind::P2Blowup : SurfaceKind::HirzebruchBlowup, 1 + i % 9);
    const LatticeClass D = random_class(m, rng, 9);
    if (euler_char(m, D) != euler_char(m, m.canonical() - D)) ++fail_serre;
  }

  const TruncRing R = conifold_ring(6);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 6);
  for (int i = 0; i < o.property_cases; ++i) {
    const int d = deg(rng);
    Poly p(R.nvars());
    for (const auto& mono : R.monomials(d, {0, 1, 2, 3})) p.add_term(mono, coef(rng));
    if (R.normal_form(p) != R.normal_form(p, &rng)) ++fail_confluence;
  }
  for (int i = 0; i < o.property_cases; ++i) {
    const int lo = 1 + i % 5, hi = lo + 1 + i % 3;
    const TruncRing a = conifold_ring(lo), b = conifold_ring(hi);
    const int d = std::uniform_int_distribution<int>(0, lo)(rng);
    if (graded_dim(a, d) != graded_dim(b, d)) ++fail_stable;
  }
  detail = {{"cases", o.property_cases},
            {"reflection_isometry_failures", fail_reflect},
            {"serre_symmetry_failures", fail_serre},
            {"confluence_failures", fail_confluence},
            {"stabilization_failures", fail_stable}};
  return fail_reflect + fail_serre + fail_confluence + fail_stable == 0;
}

}  // namespace

std::vector<CriterionReport> run_paper_checks(const SuiteOptions& o) {
  std::vector<CriterionReport> out;
  out.push_back(timed(1, "line_count", line_counts));
  out.push_back(timed(2, "root_data", root_data));
  out.push_back(timed(3, "ext_index", ext_index));
  out.push_back(timed(4, "boundary_degrees", boundary_degrees));
  out.push_back(timed(5, "transform_compatibility", [&](Json& j) { return transform_compatibility(o, j); }));
  out.push_back(timed(6, "local_models", [&](Json& j) { return local_models(o, j); }));
  out.push_back(timed(7, "spectral", spectral_checks));
  out.push_back(timed(8, "property_suites", [&](Json& j) { return properties(o, j); }));
  return out;
}

Json suite_json(const std::vector<CriterionReport>& reports) {
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : reports) {
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return {{"suite", "paper-checks"}, {"passed", all}, {"criteria", criteria}};
}

}  // namespace ade
