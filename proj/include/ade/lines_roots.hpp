#pragma once

#include "ade/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ade {

struct EnumerationLimits {
  std::size_t max_nodes = 20'000'000;
  std::size_t max_results = 1'000'000;
};

/// Linear condition x . cls = value.
struct PairingConstraint {
  LatticeClass cls;
  Integer value;
};

/// Per-coordinate search window certified by Cauchy-Schwarz on the
/// negative-definite complement of the constraint span.
struct CoordinateBox {
  std::vector<Integer> lower;
  std::vector<Integer> upper;
};

/// Solutions of x.x = norm subject to the constraints, or an empty box
/// when the constraints are inconsistent. Throws EnumerationBoundExceeded
/// when the complement of the constraint span is not negative definite.
CoordinateBox coordinate_box(const SurfaceModel& model, const Integer& norm,
                             const std::vector<PairingConstraint>& constraints);

/// All integer classes x with x.x = norm satisfying every constraint,
/// sorted lexicographically.
std::vector<LatticeClass> enumerate_vectors(const SurfaceModel& model, const Integer& norm,
                                            const std::vector<PairingConstraint>& constraints,
                                            const EnumerationLimits& limits = {});

struct LineConstraints {
  Integer self_intersection = -1;
  Integer canonical_degree = -1;
  std::optional<Integer> fiber_degree;
};

std::vector<LatticeClass> enumerate_lines(const SurfaceModel& model,
                                          const LineConstraints& constraints = {},
                                          const EnumerationLimits& limits = {});

struct OrthogonalitySet {
  bool K = true;
  bool f = false;
  bool b = false;
};

struct DynkinComponent {
  char series = 'A';  // 'A', 'D', 'E', or '?' when unrecognised
  int rank = 0;
  std::vector<std::size_t> nodes;  // indices into simple_roots

  [[nodiscard]] std::string label() const;
};

struct RootDatum {
  std::string basis_id;
  std::vector<LatticeClass> roots;
  std::vector<LatticeClass> simple_roots;
  /// Standard Cartan matrix 2 (x_i . x_j) / (x_j . x_j) = -(x_i . x_j).
  std::vector<std::vector<int>> cartan;
  std::vector<DynkinComponent> components;

  /// "A0" for the empty system, otherwise component labels joined by "x".
  [[nodiscard]] std::string type_label() const;
};

RootDatum enumerate_roots(const SurfaceModel& model, const OrthogonalitySet& orthogonal_to,
                          const EnumerationLimits& limits = {});

/// Builds simple roots, Cartan matrix and Dynkin type for a root set
/// that is closed under negation.
RootDatum make_root_datum(const SurfaceModel& model, std::vector<LatticeClass> roots);

/// s_r(x) = x + (x.r) r for a root r (r.r = -2).
LatticeClass reflect(const SurfaceModel& model, const LatticeClass& root, const LatticeClass& cls);

/// Closure of {cls} under the simple reflections, sorted. Throws
/// OrbitCapExceeded once more than `cap` classes are found.
std::vector<LatticeClass> weyl_orbit(const SurfaceModel& model, const RootDatum& datum,
                                     const LatticeClass& cls, std::size_t cap);

/// entries[i] = cls . alpha_i
std::vector<Integer> weight_of(const SurfaceModel& model, const RootDatum& datum,
                               const LatticeClass& cls);

}  // namespace ade
