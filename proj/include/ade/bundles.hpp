#pragma once

#include "ade/lattice.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace ade {

struct Summand {
  LatticeClass cls;
  /// 0 marks a plain direct summand; equal nonzero ids form one filtration
  /// block, listed sub-object first.
  int ext_group = 0;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// A bundle recorded by the divisor classes of its line-bundle pieces.
class FormalBundle {
 public:
  FormalBundle() = default;
  FormalBundle(std::string model_id, std::vector<Summand> summands)
      : model_id_(std::move(model_id)), summands_(std::move(summands)) {}

  [[nodiscard]] const std::string& model_id() const { return model_id_; }
  [[nodiscard]] const std::vector<Summand>& summands() const { return summands_; }
  [[nodiscard]] std::size_t rank() const { return summands_.size(); }
  /// Sum of the summand classes.
  [[nodiscard]] LatticeClass c1(const SurfaceModel& model) const;

  friend bool operator==(const FormalBundle&, const FormalBundle&) = default;

 private:
  std::string model_id_;
  std::vector<Summand> summands_;
};

enum class Representation { FundamentalA, VectorD, Adjoint };

std::string_view representation_name(Representation rep);

/// Tautological bundle of the A_{n-1} or D_n configuration. The A surface
/// is HirzebruchBlowup(n) (b kept as l_0) or P2Blowup(n+1); the D surface
/// is HirzebruchBlowup(n).
FormalBundle build_tautological(const SurfaceModel& model, Representation rep);

/// Number n of the A_{n-1}/D_n configuration carried by the model.
int configuration_size(const SurfaceModel& model);

FormalBundle twist(const FormalBundle& bundle, const LatticeClass& by);

/// cls . E with E = -K.
Integer boundary_degree(const SurfaceModel& model, const LatticeClass& cls);

/// A point of the boundary curve, modelled as an element of Z/N with the
/// origin p_0 at 0.
struct EGroupPoint {
  std::int64_t value = 0;
  friend auto operator<=>(const EGroupPoint&, const EGroupPoint&) = default;
};

inline constexpr std::int64_t kDefaultGroupOrder = 720;

std::int64_t reduce_mod(const Integer& v, std::int64_t order);

struct EPointEntry {
  EGroupPoint point;
  int multiplicity = 1;
  /// Set on a point carried by a single extension block (Jordan block).
  bool regular = false;

  friend auto operator<=>(const EPointEntry&, const EPointEntry&) = default;
};

/// A flat bundle on the boundary curve up to class-level data: the points
/// p with O(p - p_0) factors (twisted by `degree` p_0 when nonzero).
struct EBundleClass {
  std::int64_t order = kDefaultGroupOrder;
  std::int64_t degree = 0;
  std::vector<EPointEntry> points;

  [[nodiscard]] int rank() const;
  /// Sorts entries and merges plain entries at equal points.
  void normalize();

  friend bool operator==(const EBundleClass&, const EBundleClass&) = default;
};

/// Line label -> point; l_0 always maps to the origin.
using Marking = std::map<int, EGroupPoint>;

/// Image of a class in the group of the boundary: sum_i c_i p_i over the
/// exceptional coefficients c_i (h restricts to 3 p_0).
EGroupPoint restrict_class(const SurfaceModel& model, const LatticeClass& cls,
                           const Marking& marking, std::int64_t order);

EBundleClass restrict_to_boundary(const SurfaceModel& model, const FormalBundle& bundle,
                                  const Marking& marking, std::int64_t order);

bool check_su_constraint(std::span<const EGroupPoint> points, std::int64_t order);

}  // namespace ade
