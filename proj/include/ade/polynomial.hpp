#pragma once

#include "ade/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ade {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
/// The zero polynomial has no coefficients and degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(long constant);  // NOLINT(google-explicit-constructor)
  static QPoly monomial(const Rational& c, int degree);
  static QPoly variable() { return monomial(1, 1); }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] Rational coeff(int i) const;
  [[nodiscard]] Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] QPoly derivative() const;
  [[nodiscard]] QPoly monic() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  [[nodiscard]] std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

QPoly pow(const QPoly& p, unsigned e);

/// Euclidean division; throws on division by zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Exact quotient; throws if the remainder is nonzero.
QPoly exact_div(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

/// Yun's algorithm: monic squarefree factors a_1, a_2, ... with
/// p = lc * prod a_k^k; entry k-1 holds a_k (possibly 1).
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

struct RationalRoots {
  std::vector<Rational> roots;  // distinct, ascending
  /// False when an integer coefficient could not be fully factored and
  /// some candidate denominators or numerators may have been skipped.
  bool complete = true;
};

RationalRoots rational_roots(const QPoly& p);

}  // namespace ade
