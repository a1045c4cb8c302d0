#pragma once

#include "ade/bundles.hpp"
#include "ade/divisor.hpp"
#include "ade/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ade {

struct Sheet {
  EGroupPoint point;
  /// Local ramification multiplicity of the sheet over the fiber.
  int degree = 1;
};

/// Spectral data over one point of the base: where the cover meets the
/// boundary curve, with multiplicities.
struct SpectralFiberDatum {
  std::int64_t order = kDefaultGroupOrder;
  std::vector<Sheet> sheets;
  bool su_constraint = false;
  std::int64_t base_twist_degree = 0;

  [[nodiscard]] int cover_degree() const;
};

/// Throws InvalidDatum for a nonpositive order, sheet degree below 1, or a
/// violated SU constraint.
void validate(const SpectralFiberDatum& datum);

enum class TwistMode { RawD, MinusL0, FullP };

std::string_view twist_mode_name(TwistMode mode);
TwistMode twist_mode_from_name(std::string_view name);

struct CollisionBlock {
  EGroupPoint point;
  int multiplicity = 0;
  std::vector<int> labels;
  /// Sub-object first.
  std::vector<LatticeClass> filtration;
  int ext_group = 0;
};

struct TransformResult {
  FormalBundle bundle;
  std::vector<CollisionBlock> collision_blocks;
  Integer c1_fiber;  // c1 . E
  EBundleClass boundary;
  Marking marking;
  std::int64_t base_twist_degree = 0;
  /// Sheets through the origin p_0, met by the section.
  int sigma_sheets = 0;
};

/// Labels l_1..l_n assigned to the sheets in order of their points.
Marking marking_for(const SpectralFiberDatum& datum);

/// Collision pairs (a, a+1), ..., (a+m-2, a+m-1) for every point of
/// multiplicity m >= 2 under marking_for.
CollisionConfig collisions_for(const SurfaceModel& model, const SpectralFiberDatum& datum);

TransformResult transform(const SurfaceModel& model, const SpectralFiberDatum& datum, TwistMode mode,
                          const CollisionConfig& collisions);
/// Uses collisions_for(model, datum).
TransformResult transform(const SurfaceModel& model, const SpectralFiberDatum& datum, TwistMode mode);

EBundleClass fm_classlevel(const SpectralFiberDatum& datum);

bool check_restriction_compatibility(const SurfaceModel& model, const SpectralFiberDatum& datum);

struct LocalIsomorphism {
  int multiplicity = 1;
  int rank = 1;
  bool locally_free = true;
  /// Splitting type on the exceptional curve, when computed.
  std::optional<std::pair<int, int>> exceptional_split;
  bool cross_checked = false;
  std::string description;
};

LocalIsomorphism local_isomorphism_class(int multiplicity, int maxdeg = 4);

}  // namespace ade
