#include "ade/divisor.hpp"

#include "ade/error.hpp"

#include <algorithm>
#include <functional>

namespace ade {

CollisionConfig make_collisions(const SurfaceModel& model, std::vector<std::pair<int, int>> pairs) {
  CollisionConfig cfg;
  for (const auto& [i, j] : pairs) {
    if (i == j) {
      throw DomainError(ErrorCode::OutOfRange, "a point cannot collide with itself");
    }
    LatticeClass c = model.line(j) - model.line(i);
    if (model.pair(c, c) != -2 || sgn(model.pair(c, model.canonical())) != 0) {
      throw DomainError(ErrorCode::OutOfRange,
                        "collision (" + std::to_string(i) + "," + std::to_string(j) +
                            ") does not induce a -2 curve");
    }
    cfg.induced_curves.push_back(std::move(c));
  }
  cfg.pairs = std::move(pairs);
  return cfg;
}

Integer euler_char(const SurfaceModel& model, const LatticeClass& d) {
  const Integer num = model.pair(d, d) - model.pair(d, model.canonical());
  if (!mpz_even_p(num.get_mpz_t())) {
    throw DomainError(ErrorCode::ParityViolation, "D.D - D.K is odd; the Gram matrix is not even-compatible");
  }
  return 1 + num / 2;
}

std::string_view effectivity_name(Effectivity e) {
  switch (e) {
    case Effectivity::Effective: return "effective";
    case Effectivity::NotEffective: return "not_effective";
    case Effectivity::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

// A class H with H.g > 0 on every generator bounds each multiplicity by
// H.D / H.g. Candidates: t(-K) + s * sum_i i l_i for growing t, s = +-1, 0.
std::optional<LatticeClass> find_positive_functional(const SurfaceModel& model,
                                                     const std::vector<LatticeClass>& gens) {
  LatticeClass ramp = model.zero();
  for (int i = model.min_line_label(); i <= model.max_line_label(); ++i) {
    ramp += Integer(i) * model.line(i);
  }
  const LatticeClass anti = model.boundary();
  const int t_max = 4 * (model.n() + 2);
  for (int t = 1; t <= t_max; ++t) {
    for (int s : {0, -1, 1}) {
      const LatticeClass h = Integer(t) * anti + Integer(s) * ramp;
      bool ok = true;
      for (const auto& g : gens) {
        if (sgn(model.pair(h, g)) <= 0) {
          ok = false;
          break;
        }
      }
      if (ok) return h;
    }
  }
  return std::nullopt;
}

}  // namespace

EffectivityResult is_effective(const SurfaceModel& model, const CollisionConfig& collisions,
                               const LatticeClass& d, const EffectivitySearch& search) {
  model.require_own(d);
  EffectivityResult res;
  if (d.is_zero()) {
    res.status = Effectivity::Effective;
    return res;
  }

  std::vector<LatticeClass> gens = model.effective_generators();
  for (const auto& c : collisions.induced_curves) gens.push_back(c);

  const auto h = find_positive_functional(model, gens);
  if (!h) {
    res.note = "no class pairs positively with every generator";
    return res;
  }
  const Integer budget = model.pair(*h, d);
  if (sgn(budget) <= 0) {
    res.status = Effectivity::NotEffective;
    res.note = "H.D <= 0 for H positive on all generators";
    return res;
  }

  std::vector<Integer> weight(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) weight[i] = model.pair(*h, gens[i]);

  // Residual search: choose multiplicities generator by generator; the
  // H-degree of the residual must stay non-negative.
  std::vector<Integer> mult(gens.size(), Integer(0));
  std::size_t nodes = 0;
  bool exhausted = false;
  std::function<bool(std::size_t, const LatticeClass&, const Integer&)> dfs =
      [&](std::size_t i, const LatticeClass& residual, const Integer& remaining) -> bool {
    if (residual.is_zero()) return true;
    if (i == gens.size() || sgn(remaining) <= 0) return false;
    const Integer cap = remaining / weight[i];
    for (Integer k = cap; k >= 0; --k) {
      if (++nodes > search.max_nodes) {
        exhausted = true;
        return false;
      }
      mult[i] = k;
      if (dfs(i + 1, residual - k * gens[i], remaining - k * weight[i])) return true;
      if (exhausted) return false;
    }
    mult[i] = 0;
    return false;
  };

  if (dfs(0, d, budget)) {
    res.status = Effectivity::Effective;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (sgn(mult[i]) > 0) res.certificate.emplace_back(gens[i], mult[i]);
    }
    return res;
  }
  if (exhausted) {
    res.note = "search node limit reached";
    return res;
  }
  res.status = Effectivity::NotEffective;
  return res;
}

ExtProfile ext_profile(const SurfaceModel& model, const CollisionConfig& collisions,
                       const LatticeClass& l1, const LatticeClass& l2) {
  const LatticeClass d = l2 - l1;
  model.require_own(d);
  if (sgn(model.pair(d, d)) > 0) {
    throw DomainError(ErrorCode::UnsupportedRegime,
                      "ext_profile covers classes L2 - L1 with non-positive self-intersection");
  }
  ExtProfile p;
  const auto eff = is_effective(model, collisions, d);
  p.status = eff.status;
  p.certificate = eff.certificate;
  if (eff.status == Effectivity::Indeterminate) return p;

  p.ext2 = Integer(0);
  p.index = euler_char(model, d);
  p.ext0 = Integer(eff.status == Effectivity::Effective ? 1 : 0);
  p.ext1 = *p.ext0 + *p.ext2 - *p.index;
  if (sgn(*p.ext1) < 0) {
    throw DomainError(ErrorCode::UnsupportedRegime,
                      "negative Ext^1 from the index: h^0 exceeds one for this class");
  }
  return p;
}

}  // namespace ade
