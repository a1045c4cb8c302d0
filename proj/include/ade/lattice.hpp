#pragma once

#include "ade/linalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ade {

enum class SurfaceKind { HirzebruchBlowup, P2Blowup };

std::string_view surface_kind_name(SurfaceKind kind);

/// A divisor class: integer coordinates in the fixed basis of one surface model.
class LatticeClass {
 public:
  LatticeClass() = default;
  LatticeClass(std::string basis_id, std::vector<Integer> coeffs)
      : basis_id_(std::move(basis_id)), coeffs_(std::move(coeffs)) {}

  [[nodiscard]] const std::string& basis_id() const { return basis_id_; }
  [[nodiscard]] const std::vector<Integer>& coeffs() const { return coeffs_; }
  [[nodiscard]] std::size_t rank() const { return coeffs_.size(); }
  [[nodiscard]] const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] bool is_zero() const;

  LatticeClass& operator+=(const LatticeClass& other);
  LatticeClass& operator-=(const LatticeClass& other);

  friend LatticeClass operator+(LatticeClass a, const LatticeClass& b) { return a += b; }
  friend LatticeClass operator-(LatticeClass a, const LatticeClass& b) { return a -= b; }
  friend LatticeClass operator-(const LatticeClass& a);
  friend LatticeClass operator*(const Integer& k, const LatticeClass& a);

  friend bool operator==(const LatticeClass& a, const LatticeClass& b) {
    return a.basis_id_ == b.basis_id_ && a.coeffs_ == b.coeffs_;
  }
  /// Lexicographic on (basis_id, coefficients); the canonical output order.
  friend bool operator<(const LatticeClass& a, const LatticeClass& b);

 private:
  void require_same_basis(const LatticeClass& other) const;

  std::string basis_id_;
  std::vector<Integer> coeffs_;
};

using IntMatrix = std::vector<std::vector<Integer>>;

/// Picard lattice of a blown-up rational surface together with its
/// distinguished classes.
///
/// Basis order:
///   HirzebruchBlowup(n): (b, f, l_1, ..., l_n); b is also called l_0.
///   P2Blowup(n):         (h, l_0, ..., l_{n-1}).
class SurfaceModel {
 public:
  [[nodiscard]] SurfaceKind kind() const { return kind_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t rank() const { return gram_.size(); }
  [[nodiscard]] const std::string& id() const { return id_; }
  [[nodiscard]] const IntMatrix& gram() const { return gram_; }
  [[nodiscard]] const LatticeClass& canonical() const { return canonical_; }
  /// Anticanonical boundary class E = -K.
  [[nodiscard]] const LatticeClass& boundary() const { return boundary_; }
  [[nodiscard]] const std::optional<LatticeClass>& fiber_class() const { return fiber_; }
  [[nodiscard]] const std::optional<LatticeClass>& base_class() const { return base_; }
  [[nodiscard]] const std::vector<LatticeClass>& effective_generators() const {
    return effective_generators_;
  }
  [[nodiscard]] std::vector<std::string> basis_labels() const;

  [[nodiscard]] LatticeClass zero() const;
  [[nodiscard]] LatticeClass basis_vector(std::size_t i) const;
  [[nodiscard]] LatticeClass make_class(std::vector<Integer> coeffs) const;
  [[nodiscard]] LatticeClass make_class(std::initializer_list<long> coeffs) const;

  /// Smallest and largest valid line label: 0..n for Hirzebruch (0 is b),
  /// 0..n-1 for P2.
  [[nodiscard]] int min_line_label() const { return 0; }
  [[nodiscard]] int max_line_label() const;
  /// Exceptional class l_label.
  [[nodiscard]] LatticeClass line(int label) const;
  /// Basis coordinate holding l_label.
  [[nodiscard]] std::size_t line_coordinate(int label) const;

  /// Intersection pairing; both classes must live in this model's basis.
  [[nodiscard]] Integer pair(const LatticeClass& a, const LatticeClass& b) const;
  /// Throws BasisMismatch unless the class belongs to this model.
  void require_own(const LatticeClass& c) const;

  [[nodiscard]] QMatrix gram_rational() const;

  friend SurfaceModel build_surface(SurfaceKind kind, int n);

 private:
  SurfaceKind kind_ = SurfaceKind::P2Blowup;
  int n_ = 0;
  std::string id_;
  IntMatrix gram_;
  LatticeClass canonical_;
  LatticeClass boundary_;
  std::optional<LatticeClass> fiber_;
  std::optional<LatticeClass> base_;
  std::vector<LatticeClass> effective_generators_;
};

inline constexpr int kMaxBlowups = 64;

SurfaceModel build_surface(SurfaceKind kind, int n);

/// Rebuilds a model from its id ("hirzebruch_blowup:3", "p2_blowup:6").
SurfaceModel model_from_id(std::string_view id);

/// Isometry between HirzebruchBlowup(n) and P2Blowup(n+1):
///   b -> l_0, f -> h - l_0, l_i -> l_i   (and inverse h -> b + f, l_0 -> b).
/// The identity when both models coincide.
LatticeClass change_basis(const SurfaceModel& from, const SurfaceModel& to,
                          const LatticeClass& cls);

/// (positive, negative) inertia of the Gram matrix.
std::pair<int, int> signature(const SurfaceModel& model);

}  // namespace ade
