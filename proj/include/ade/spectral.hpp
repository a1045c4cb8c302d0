#pragma once

#include "ade/lattice.hpp"
#include "ade/polynomial.hpp"

#include <string>
#include <vector>

namespace ade {

/// Monic cover F(t, u) = u^n + c_{n-1}(t) u^{n-1} + ... + c_0(t) of the
/// base line with coordinate t.
struct CoverPoly {
  int n = 0;
  std::vector<QPoly> coeffs;  // c_0 .. c_{n-1}

  /// F(t0, u) as a polynomial in u.
  [[nodiscard]] QPoly fiber(const Rational& t0) const;
  /// Coefficients of F in u (length n + 1, leading entry 1).
  [[nodiscard]] std::vector<QPoly> u_coefficients() const;
};

/// Throws InvalidDatum when the coefficient count does not match n.
CoverPoly make_cover(int n, std::vector<QPoly> coeffs);

/// Polynomials in u over Q[t], lowest coefficient first.
using TPolyInU = std::vector<QPoly>;

/// Determinant of the Sylvester matrix, by fraction-free elimination over Q[t].
QPoly resultant_sylvester(const TPolyInU& a, const TPolyInU& b);
/// Same resultant through the subresultant remainder sequence.
QPoly resultant_subresultant(const TPolyInU& a, const TPolyInU& b);

/// Res_u(F, dF/du). Throws NonReducedCover when it vanishes identically.
QPoly discriminant(const CoverPoly& cover);

/// Root multiplicities of F(t0, u) over the algebraic closure, descending.
std::vector<int> fiber_profile(const CoverPoly& cover, const Rational& t0);

struct BranchPoint {
  Rational t;
  std::vector<int> partition;
};

struct BranchReport {
  QPoly discriminant;
  std::vector<BranchPoint> branch_points;  // rational roots, ascending
  /// Monic squarefree pieces of the discriminant with no rational root.
  std::vector<QPoly> nonrational_factors;
  bool roots_complete = true;
};

BranchReport analyze_cover(const CoverPoly& cover);

/// Fiber degrees of K_F^{-1} and of the twisting line bundle.
struct SenDegreeData {
  int d_K = 2;
  int k = 1;
};

struct SenFamily {
  QPoly b2, b4, b6, delta;
  SenDegreeData degrees;
  int delta_fiber_degree = 0;
  /// Degree over the base of the spectral cover (double cover of Delta = 0).
  int cover_degree = 0;
  bool degenerate = false;
  std::vector<std::string> warnings;
};

/// Delta = b2 b6 - b4^2; each b_i must fit its declared fiber degree.
SenFamily sen_delta(const QPoly& b2, const QPoly& b4, const QPoly& b6,
                    const SenDegreeData& degrees = {});

struct PicardBlock {
  std::vector<LatticeClass> generators;
  /// Basis coordinates on which the generators are supported.
  std::vector<std::size_t> support;
};

struct FiberPicard {
  std::string model_id;
  int n = 0;
  PicardBlock root_block;   // simple roots of A_{n-1}
  PicardBlock complement;   // E, l_0, f
  std::string root_type;
  /// Index of root_block + complement in the full lattice.
  Integer index;
};

/// H^2 of a fiber split as A_{n-1} roots plus span(E, l_0, f). Accepts the
/// Hirzebruch model with n blowups or the P2 model with n + 1; throws
/// DecompositionFailed if the Gram checks fail.
FiberPicard fiber_picard(const SurfaceModel& model);
FiberPicard fiber_picard(int n);

}  // namespace ade
