#include "ade/bundles.hpp"

#include "ade/error.hpp"

#include <algorithm>

namespace ade {

LatticeClass FormalBundle::c1(const SurfaceModel& model) const {
  LatticeClass total = model.zero();
  for (const auto& s : summands_) total += s.cls;
  return total;
}

std::string_view representation_name(Representation rep) {
  switch (rep) {
    case Representation::FundamentalA: return "fundamental_A";
    case Representation::VectorD: return "vector_D";
    case Representation::Adjoint: return "adjoint";
  }
  return "fundamental_A";
}

int configuration_size(const SurfaceModel& model) {
  return model.kind() == SurfaceKind::HirzebruchBlowup ? model.n() : model.n() - 1;
}

FormalBundle build_tautological(const SurfaceModel& model, Representation rep) {
  const int n = configuration_size(model);
  if (n < 0) {
    throw DomainError(ErrorCode::RepresentationMismatch,
                      "model '" + model.id() + "' carries no l_0 and cannot host an A/D configuration");
  }
  std::vector<Summand> out;
  switch (rep) {
    case Representation::FundamentalA:
      for (int i = 1; i <= n; ++i) out.push_back({model.line(i), 0});
      break;
    case Representation::VectorD: {
      if (!model.fiber_class()) {
        throw DomainError(ErrorCode::RepresentationMismatch,
                          "vector_D needs the fibred Hirzebruch model, got '" + model.id() + "'");
      }
      for (int i = 1; i <= n; ++i) out.push_back({model.line(i), 0});
      for (int i = 1; i <= n; ++i) out.push_back({*model.fiber_class() - model.line(i), 0});
      break;
    }
    case Representation::Adjoint:
      for (int i = 1; i < n; ++i) out.push_back({model.zero(), 0});
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j) out.push_back({model.line(i) - model.line(j), 0});
      break;
  }
  return {model.id(), std::move(out)};
}

FormalBundle twist(const FormalBundle& bundle, const LatticeClass& by) {
  std::vector<Summand> out = bundle.summands();
  for (auto& s : out) s.cls += by;
  return {bundle.model_id(), std::move(out)};
}

Integer boundary_degree(const SurfaceModel& model, const LatticeClass& cls) {
  return model.pair(cls, model.boundary());
}

std::int64_t reduce_mod(const Integer& v, std::int64_t order) {
  if (order <= 0) throw DomainError(ErrorCode::InvalidDatum, "group order must be positive");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), Integer(order).get_mpz_t());
  return r.get_si();
}

int EBundleClass::rank() const {
  int r = 0;
  for (const auto& p : points) r += p.multiplicity;
  return r;
}

void EBundleClass::normalize() {
  std::vector<EPointEntry> merged;
  std::map<EGroupPoint, int> plain;
  for (const auto& e : points) {
    if (e.regular) {
      merged.push_back(e);
    } else {
      plain[e.point] += e.multiplicity;
    }
  }
  for (const auto& [p, m] : plain) merged.push_back({p, m, false});
  std::sort(merged.begin(), merged.end());
  points = std::move(merged);
}

EGroupPoint restrict_class(const SurfaceModel& model, const LatticeClass& cls,
                           const Marking& marking, std::int64_t order) {
  model.require_own(cls);
  if (auto it = marking.find(0); it != marking.end() && reduce_mod(Integer(it->second.value), order) != 0) {
    throw DomainError(ErrorCode::MissingMarking, "l_0 must be marked by the origin p_0");
  }
  Integer total = 0;
  for (int label = 1; label <= model.max_line_label(); ++label) {
    const Integer& c = cls[model.line_coordinate(label)];
    if (sgn(c) == 0) continue;
    const auto it = marking.find(label);
    if (it == marking.end()) {
      throw DomainError(ErrorCode::MissingMarking,
                        "no boundary point marked for l" + std::to_string(label));
    }
    total += c * it->second.value;
  }
  return {reduce_mod(total, order)};
}

EBundleClass restrict_to_boundary(const SurfaceModel& model, const FormalBundle& bundle,
                                  const Marking& marking, std::int64_t order) {
  if (bundle.model_id() != model.id()) {
    throw DomainError(ErrorCode::BasisMismatch, "bundle and model differ");
  }
  EBundleClass out;
  out.order = order;
  std::map<int, std::map<EGroupPoint, int>> blocks;
  for (const auto& s : bundle.summands()) {
    const Integer deg = boundary_degree(model, s.cls);
    if (sgn(deg) != 0) {
      throw DomainError(ErrorCode::NonzeroBoundaryDegree,
                        "summand has boundary degree " + deg.get_str() + "; twist by -l_0 first");
    }
    const EGroupPoint p = restrict_class(model, s.cls, marking, order);
    if (s.ext_group == 0) {
      out.points.push_back({p, 1, false});
    } else {
      blocks[s.ext_group][p] += 1;
    }
  }
  // Extensions between distinct degree-zero line bundles split on E; only
  // equal points inside one block stay indecomposable.
  for (const auto& [id, pts] : blocks) {
    for (const auto& [p, m] : pts) out.points.push_back({p, m, m >= 2});
  }
  out.normalize();
  return out;
}

bool check_su_constraint(std::span<const EGroupPoint> points, std::int64_t order) {
  Integer total = 0;
  for (const auto& p : points) total += p.value;
  return reduce_mod(total, order) == 0;
}

}  // namespace ade
