#pragma once

#include "ade/linalg.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ade {

/// Exponent vector; negative entries are allowed for Laurent arithmetic.
using Monomial = std::vector<int>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly term(Monomial m, const Rational& c);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

  [[nodiscard]] Poly pow(unsigned e) const;
  [[nodiscard]] Poly derivative(std::size_t var) const;
  [[nodiscard]] Rational evaluate(const QVector& point) const;
  /// Replaces variable i by images[i]; the images may live in another ring.
  /// Negative exponents require monomial images.
  [[nodiscard]] Poly substitute(const std::vector<Poly>& images) const;

  [[nodiscard]] bool contains_var(std::size_t var) const;
  /// Weighted degree if every term has the same one.
  [[nodiscard]] std::optional<int> homogeneous_degree(const std::vector<int>& weights) const;
  [[nodiscard]] int total_degree() const;

  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Parses "x^2 - 3/2*y*z + (s - 1)^2" over the named variables.
Poly parse_poly(std::string_view text, const std::vector<std::string>& names);

/// var^power = rhs, with rhs free of var.
struct Relation {
  std::size_t var = 0;
  int power = 1;
  Poly rhs;
};

/// Graded quotient of a polynomial ring by solvable relations, with all
/// queries restricted to degrees up to max_degree.
class TruncRing {
 public:
  /// Throws InvalidRing unless the relations are homogeneous, use distinct
  /// left-hand variables and have acyclic variable dependencies.
  TruncRing(std::vector<std::string> names, std::vector<int> degrees,
            std::vector<Relation> relations, int max_degree);

  static TruncRing free_ring(std::vector<std::string> names, int max_degree);

  [[nodiscard]] std::size_t nvars() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::vector<int>& degrees() const { return degrees_; }
  [[nodiscard]] const std::vector<Relation>& relations() const { return relations_; }
  [[nodiscard]] int max_degree() const { return max_degree_; }
  [[nodiscard]] std::size_t index_of(std::string_view name) const;

  [[nodiscard]] Poly var(std::string_view name) const;
  [[nodiscard]] Poly one() const;
  [[nodiscard]] Poly parse(std::string_view text) const { return parse_poly(text, names_); }

  [[nodiscard]] int degree(const Monomial& m) const;
  [[nodiscard]] bool is_normal(const Monomial& m) const;
  /// Rewrites until every monomial is normal. With an rng the term and
  /// relation used at each step are chosen at random.
  [[nodiscard]] Poly normal_form(const Poly& p, std::mt19937_64* rng = nullptr) const;

  /// Normal monomials of degree d, sorted.
  [[nodiscard]] std::vector<Monomial> normal_basis(int d) const;
  /// All monomials of degree d in the given variables.
  [[nodiscard]] std::vector<Monomial> monomials(int d, const std::vector<std::size_t>& vars) const;
  /// Coordinates of a homogeneous degree-d element in normal_basis(d).
  [[nodiscard]] QVector coordinates(const Poly& p, int d) const;

  /// The relations as polynomials var^power - rhs.
  [[nodiscard]] std::vector<Poly> relation_polys() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<Relation> relations_;
  int max_degree_ = 8;
};

std::size_t graded_dim(const TruncRing& ring, int d);

/// Submodule generated by homogeneous elements over the subring spanned by
/// the listed variables.
struct GradedModule {
  std::vector<Poly> generators;
  std::vector<std::size_t> over_subring;
};

GradedModule make_module(const TruncRing& ring, const std::vector<std::string>& gens,
                         const std::vector<std::string>& subring_vars);
/// The ideal generated by gens (coefficients from the whole ring).
GradedModule make_ideal(const TruncRing& ring, const std::vector<std::string>& gens);

/// Spanning vectors of the degree-d piece in normal_basis(d) coordinates.
std::vector<QVector> degree_piece(const TruncRing& ring, const GradedModule& module, int d);

struct CheckResult {
  bool ok = true;
  std::optional<int> first_failure_degree;
};

/// Whether candidate and target have equal degree-d pieces for d <= maxdeg.
CheckResult check_generate(const TruncRing& ring, const GradedModule& target,
                           const GradedModule& candidate, int maxdeg);

/// Whether the generators carry no syzygy over the subring in degrees <= maxdeg.
CheckResult check_free(const TruncRing& ring, const GradedModule& candidate, int maxdeg);

/// sum_d dim (I / m I)_d for d <= maxdeg.
std::size_t min_generators_at_origin(const TruncRing& ring, const std::vector<Poly>& ideal_gens,
                                     int maxdeg);

/// Rank of the Jacobian of the relations at a rational point.
std::size_t singular_locus_rank(const std::vector<Poly>& relations, const QVector& point);

/// C[x, y, z, s] / (s^2 = x^2 - y^2 + z^2).
TruncRing conifold_ring(int max_degree);

struct SubCheck {
  std::string id;
  std::string description;
  bool passed = true;
  std::optional<int> failure_degree;
  std::map<std::string, std::vector<long>> dims;
};

/// Restriction degrees of two line bundles to the exceptional curve.
using SplitType = std::pair<int, int>;

struct ChainReport {
  int maxdeg = 0;
  std::vector<SubCheck> checks;
  SplitType direct_sum_split{0, 0};
  SplitType free_split{0, 0};
  std::vector<std::string> warnings;

  [[nodiscard]] bool passed() const;
};

/// Degree splits on the exceptional curve of the small blow-up: the sum
/// O(-l_1) + O(-l_2) and the pulled-back free module, from the generator
/// transition functions between the two charts.
std::pair<SplitType, SplitType> exceptional_curve_splits();

ChainReport verify_extension_chain(int maxdeg);

/// Every local claim about the conifold model at the given degree bound.
ChainReport conifold_suite(int maxdeg);

}  // namespace ade
