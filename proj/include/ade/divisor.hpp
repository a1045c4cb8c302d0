#pragma once

#include "ade/lattice.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ade {

/// Collided blowup points. A pair (i, j) produces the -2 curve l_j - l_i.
struct CollisionConfig {
  std::vector<std::pair<int, int>> pairs;
  std::vector<LatticeClass> induced_curves;
};

CollisionConfig make_collisions(const SurfaceModel& model, std::vector<std::pair<int, int>> pairs);

/// Riemann-Roch on a rational surface: 1 + (D.D - D.K) / 2.
Integer euler_char(const SurfaceModel& model, const LatticeClass& d);

enum class Effectivity { Effective, NotEffective, Indeterminate };

std::string_view effectivity_name(Effectivity e);

struct EffectivityResult {
  Effectivity status = Effectivity::Indeterminate;
  /// Generator classes with positive multiplicities summing to D.
  std::vector<std::pair<LatticeClass, Integer>> certificate;
  std::string note;
};

struct EffectivitySearch {
  std::size_t max_nodes = 2'000'000;
};

EffectivityResult is_effective(const SurfaceModel& model, const CollisionConfig& collisions,
                               const LatticeClass& d, const EffectivitySearch& search = {});

struct ExtProfile {
  Effectivity status = Effectivity::Indeterminate;
  /// Unset when effectivity of L2 - L1 is indeterminate.
  std::optional<Integer> ext0, ext1, ext2, index;
  std::vector<std::pair<LatticeClass, Integer>> certificate;
};

/// dim Ext^i(O(L1), O(L2)) for differences of line classes and -2 curves,
/// where h^0(L2 - L1) is 0 or 1 and Ext^2 vanishes.
ExtProfile ext_profile(const SurfaceModel& model, const CollisionConfig& collisions,
                       const LatticeClass& l1, const LatticeClass& l2);

}  // namespace ade
