#include "ade/transform.hpp"

#include "ade/error.hpp"
#include "ade/local_model.hpp"

#include <algorithm>
#include <map>

namespace ade {

int SpectralFiberDatum::cover_degree() const {
  int n = 0;
  for (const auto& s : sheets) n += s.degree;
  return n;
}

void validate(const SpectralFiberDatum& datum) {
  if (datum.order <= 0) throw DomainError(ErrorCode::InvalidDatum, "group order must be positive");
  Integer total = 0;
  for (const auto& s : datum.sheets) {
    if (s.degree < 1) throw DomainError(ErrorCode::InvalidDatum, "sheet degree must be at least 1");
    if (s.point.value < 0 || s.point.value >= datum.order) {
      throw DomainError(ErrorCode::InvalidDatum, "point " + std::to_string(s.point.value) +
                                                     " outside 0.." + std::to_string(datum.order - 1));
    }
    total += Integer(s.point.value) * s.degree;
  }
  if (datum.su_constraint && reduce_mod(total, datum.order) != 0) {
    throw DomainError(ErrorCode::InvalidDatum, "points do not sum to the origin");
  }
}

std::string_view twist_mode_name(TwistMode mode) {
  switch (mode) {
    case TwistMode::RawD: return "raw_D";
    case TwistMode::MinusL0: return "minus_l0";
    case TwistMode::FullP: return "full_P";
  }
  return "full_P";
}

TwistMode twist_mode_from_name(std::string_view name) {
  if (name == "raw_D" || name == "raw") return TwistMode::RawD;
  if (name == "minus_l0") return TwistMode::MinusL0;
  if (name == "full_P" || name == "full") return TwistMode::FullP;
  throw DomainError(ErrorCode::InvalidDatum, "unknown twist mode '" + std::string(name) + "'");
}

namespace {

struct Group {
  EGroupPoint point;
  int first_label = 1;
  int multiplicity = 0;
};

std::vector<Group> group_labels(const SpectralFiberDatum& datum) {
  std::map<EGroupPoint, int> mult;
  for (const auto& s : datum.sheets) mult[s.point] += s.degree;
  std::vector<Group> out;
  int label = 1;
  for (const auto& [p, m] : mult) {
    out.push_back({p, label, m});
    label += m;
  }
  return out;
}

}  // namespace

Marking marking_for(const SpectralFiberDatum& datum) {
  Marking marking{{0, EGroupPoint{0}}};
  for (const auto& g : group_labels(datum))
    for (int k = 0; k < g.multiplicity; ++k) marking[g.first_label + k] = g.point;
  return marking;
}

CollisionConfig collisions_for(const SurfaceModel& model, const SpectralFiberDatum& datum) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& g : group_labels(datum))
    for (int k = 0; k + 1 < g.multiplicity; ++k) pairs.emplace_back(g.first_label + k, g.first_label + k + 1);
  return make_collisions(model, std::move(pairs));
}

TransformResult transform(const SurfaceModel& model, const SpectralFiberDatum& datum, TwistMode mode,
                          const CollisionConfig& collisions) {
  validate(datum);
  const int n = datum.cover_degree();
  if (configuration_size(model) != n) {
    throw DomainError(ErrorCode::RepresentationMismatch,
                      "cover of degree " + std::to_string(n) + " needs an A-type surface with n = " +
                          std::to_string(n) + ", got '" + model.id() + "'");
  }
  const auto has_pair = [&](int a, int b) {
    return std::find(collisions.pairs.begin(), collisions.pairs.end(), std::pair{a, b}) !=
           collisions.pairs.end();
  };
  const LatticeClass shift = mode == TwistMode::RawD ? model.zero() : -model.line(0);
  const auto cls = [&](int label) { return model.line(label) + shift; };

  TransformResult out;
  out.marking = marking_for(datum);
  std::vector<Summand> summands;
  int next_group = 1;
  for (const auto& g : group_labels(datum)) {
    if (g.multiplicity == 1) {
      summands.push_back({cls(g.first_label), 0});
      continue;
    }
    for (int k = 0; k + 1 < g.multiplicity; ++k) {
      if (!has_pair(g.first_label + k, g.first_label + k + 1)) {
        throw DomainError(ErrorCode::MissingCollision,
                          "point " + std::to_string(g.point.value) + " has multiplicity " +
                              std::to_string(g.multiplicity) + " but l" +
                              std::to_string(g.first_label + k) + ", l" +
                              std::to_string(g.first_label + k + 1) + " are not collided");
      }
    }
    CollisionBlock block;
    block.point = g.point;
    block.multiplicity = g.multiplicity;
    block.ext_group = next_group++;
    for (int label = g.first_label + g.multiplicity - 1; label >= g.first_label; --label) {
      block.labels.push_back(label);
      block.filtration.push_back(cls(label));
      summands.push_back({cls(label), block.ext_group});
    }
    out.collision_blocks.push_back(std::move(block));
  }
  for (const auto& g : group_labels(datum))
    if (g.point.value == 0) out.sigma_sheets += g.multiplicity;

  out.bundle = FormalBundle(model.id(), std::move(summands));
  out.c1_fiber = boundary_degree(model, out.bundle.c1(model));
  out.base_twist_degree = datum.base_twist_degree + (mode == TwistMode::FullP ? 1 : 0);
  if (mode == TwistMode::RawD) {
    out.boundary = restrict_to_boundary(model, twist(out.bundle, -model.line(0)), out.marking, datum.order);
    out.boundary.degree = 1;
  } else {
    out.boundary = restrict_to_boundary(model, out.bundle, out.marking, datum.order);
  }
  return out;
}

TransformResult transform(const SurfaceModel& model, const SpectralFiberDatum& datum, TwistMode mode) {
  validate(datum);
  return transform(model, datum, mode, collisions_for(model, datum));
}

EBundleClass fm_classlevel(const SpectralFiberDatum& datum) {
  validate(datum);
  std::map<EGroupPoint, int> mult;
  for (const auto& s : datum.sheets) mult[s.point] += s.degree;
  EBundleClass out;
  out.order = datum.order;
  for (const auto& [p, m] : mult) {
    if (m >= 2) {
      out.points.push_back({p, m, true});
    } else {
      out.points.push_back({p, 1, false});
    }
  }
  out.normalize();
  return out;
}

bool check_restriction_compatibility(const SurfaceModel& model, const SpectralFiberDatum& datum) {
  const TransformResult t = transform(model, datum, TwistMode::FullP);
  return restrict_to_boundary(model, t.bundle, t.marking, datum.order) == fm_classlevel(datum);
}

LocalIsomorphism local_isomorphism_class(int multiplicity, int maxdeg) {
  if (multiplicity < 1) throw DomainError(ErrorCode::OutOfRange, "multiplicity must be at least 1");
  LocalIsomorphism out;
  out.multiplicity = multiplicity;
  out.rank = multiplicity;
  out.description = "free of rank " + std::to_string(multiplicity);
  if (multiplicity == 1) {
    out.exceptional_split = std::pair{0, 0};
    out.cross_checked = true;
    out.description += " (unramified sheet)";
    return out;
  }
  if (multiplicity == 2) {
    const TruncRing R = conifold_ring(maxdeg);
    const GradedModule whole = make_ideal(R, {"1"});
    const bool generates =
        check_generate(R, whole, make_module(R, {"1", "s"}, {"x", "y", "z"}), maxdeg).ok &&
        check_generate(R, make_ideal(R, {"x - y", "z + s"}),
                       make_module(R, {"x - y", "z + s"}, {"x", "y", "z"}), maxdeg)
            .ok;
    const bool free = check_free(R, make_module(R, {"x - y", "z + s"}, {"x", "y", "z"}), maxdeg).ok;
    out.locally_free = generates && free;
    out.exceptional_split = exceptional_curve_splits().second;
    out.cross_checked = true;
    if (!out.locally_free) out.description = "not free in the conifold model";
    return out;
  }
  out.description += " (no local model checked)";
  return out;
}

}  // namespace ade
