#include "ade/spectral.hpp"

#include "ade/bundles.hpp"
#include "ade/error.hpp"

#include <algorithm>
#include <set>

namespace ade {

QPoly CoverPoly::fiber(const Rational& t0) const {
  std::vector<Rational> c;
  c.reserve(coeffs.size() + 1);
  for (const auto& p : coeffs) c.push_back(p(t0));
  c.emplace_back(1);
  return QPoly(std::move(c));
}

std::vector<QPoly> CoverPoly::u_coefficients() const {
  std::vector<QPoly> out = coeffs;
  out.emplace_back(1);
  return out;
}

CoverPoly make_cover(int n, std::vector<QPoly> coeffs) {
  if (n < 1) throw DomainError(ErrorCode::InvalidDatum, "cover degree must be at least 1");
  if (coeffs.size() != static_cast<std::size_t>(n)) {
    throw DomainError(ErrorCode::InvalidDatum, "cover of degree " + std::to_string(n) + " needs " +
                                                   std::to_string(n) + " coefficients, got " +
                                                   std::to_string(coeffs.size()));
  }
  return {n, std::move(coeffs)};
}

namespace {

void trim(TPolyInU& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const TPolyInU& p) { return static_cast<int>(p.size()) - 1; }

QPoly power(const QPoly& p, int e) { return pow(p, static_cast<unsigned>(e)); }

// Pseudo-remainder lc(b)^(deg a - deg b + 1) a mod b.
TPolyInU pseudo_remainder(TPolyInU a, const TPolyInU& b) {
  const int db = udeg(b);
  const QPoly& lb = b.back();
  int e = udeg(a) - db + 1;
  while (udeg(a) >= db) {
    const QPoly s = a.back();
    const int shift = udeg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= s * b[static_cast<std::size_t>(j)];
    a.pop_back();
    trim(a);
    --e;
  }
  if (e > 0) {
    const QPoly f = power(lb, e);
    for (auto& c : a) c *= f;
  }
  return a;
}

}  // namespace

QPoly resultant_sylvester(const TPolyInU& a_in, const TPolyInU& b_in) {
  TPolyInU a = a_in, b = b_in;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return {};
  const int m = udeg(a), n = udeg(b);
  const int size = m + n;
  if (size == 0) return QPoly(1);
  std::vector<std::vector<QPoly>> M(static_cast<std::size_t>(size),
                                    std::vector<QPoly>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[r][r + j] = a[static_cast<std::size_t>(m - j)];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[n + r][r + j] = b[static_cast<std::size_t>(n - j)];

  QPoly prev(1);
  bool negate = false;
  for (int k = 0; k + 1 < size; ++k) {
    if (M[k][k].is_zero()) {
      int piv = k + 1;
      while (piv < size && M[piv][k].is_zero()) ++piv;
      if (piv == size) return {};
      std::swap(M[k], M[piv]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        M[i][j] = exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      }
      M[i][k] = QPoly{};
    }
    prev = M[k][k];
  }
  QPoly det = M[size - 1][size - 1];
  return negate ? -det : det;
}

QPoly resultant_subresultant(const TPolyInU& a_in, const TPolyInU& b_in) {
  TPolyInU a = a_in, b = b_in;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return {};
  bool negate = false;
  if (udeg(a) < udeg(b)) {
    if (udeg(a) % 2 == 1 && udeg(b) % 2 == 1) negate = true;
    std::swap(a, b);
  }
  if (udeg(b) == 0) {
    QPoly r = power(b[0], udeg(a));
    return negate ? -r : r;
  }
  QPoly g(1), h(1);
  while (true) {
    const int delta = udeg(a) - udeg(b);
    if (udeg(a) % 2 == 1 && udeg(b) % 2 == 1) negate = !negate;
    TPolyInU r = pseudo_remainder(a, b);
    a = std::move(b);
    const QPoly div = g * power(h, delta);
    for (auto& c : r) c = exact_div(c, div);
    b = std::move(r);
    g = a.back();
    if (delta >= 1) h = exact_div(power(g, delta), power(h, delta - 1));
    if (b.empty()) return {};
    if (udeg(b) == 0) break;
  }
  const int da = udeg(a);
  QPoly res = exact_div(power(b[0], da), power(h, da - 1));
  return negate ? -res : res;
}

QPoly discriminant(const CoverPoly& cover) {
  const TPolyInU f = cover.u_coefficients();
  TPolyInU fu;
  for (std::size_t k = 1; k < f.size(); ++k) fu.push_back(f[k] * QPoly(static_cast<long>(k)));
  QPoly d = resultant_sylvester(f, fu);
  if (d.is_zero()) {
    throw DomainError(ErrorCode::NonReducedCover,
                      "discriminant vanishes identically: the cover has a repeated component");
  }
  return d;
}

std::vector<int> fiber_profile(const CoverPoly& cover, const Rational& t0) {
  const auto parts = squarefree_decomposition(cover.fiber(t0));
  std::vector<int> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (int i = 0; i < parts[k].degree(); ++i) out.push_back(static_cast<int>(k) + 1);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

BranchReport analyze_cover(const CoverPoly& cover) {
  BranchReport rep;
  rep.discriminant = discriminant(cover);
  const RationalRoots rr = rational_roots(rep.discriminant);
  rep.roots_complete = rr.complete;
  for (const auto& r : rr.roots) rep.branch_points.push_back({r, fiber_profile(cover, r)});
  for (QPoly piece : squarefree_decomposition(rep.discriminant)) {
    for (const auto& r : rr.roots) {
      if (sgn(piece(r)) == 0) piece = exact_div(piece, QPoly({-r, Rational(1)}));
    }
    if (piece.degree() >= 1) rep.nonrational_factors.push_back(piece.monic());
  }
  return rep;
}

SenFamily sen_delta(const QPoly& b2, const QPoly& b4, const QPoly& b6,
                    const SenDegreeData& degrees) {
  if (degrees.d_K < 0 || degrees.k < 0) {
    throw DomainError(ErrorCode::InconsistentDegrees, "fiber degrees must be nonnegative");
  }
  const auto check = [](const QPoly& p, int bound, const char* name) {
    if (p.degree() > bound) {
      throw DomainError(ErrorCode::InconsistentDegrees,
                        std::string(name) + " has degree " + std::to_string(p.degree()) +
                            " above its fiber degree " + std::to_string(bound));
    }
  };
  check(b2, 2 * degrees.d_K, "b2");
  check(b4, degrees.d_K + degrees.k, "b4");
  check(b6, 2 * degrees.k, "b6");

  SenFamily fam;
  fam.b2 = b2;
  fam.b4 = b4;
  fam.b6 = b6;
  fam.delta = b2 * b6 - b4 * b4;
  fam.degrees = degrees;
  fam.delta_fiber_degree = 2 * degrees.d_K + 2 * degrees.k;
  fam.cover_degree = 2 * fam.delta_fiber_degree;
  if (fam.delta.is_zero()) {
    fam.degenerate = true;
    fam.warnings.emplace_back("Delta vanishes identically: every conic is a double line");
  }
  return fam;
}

namespace {

std::vector<std::size_t> support_of(const std::vector<LatticeClass>& gens) {
  std::set<std::size_t> s;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < g.rank(); ++i)
      if (sgn(g[i]) != 0) s.insert(i);
  return {s.begin(), s.end()};
}

QMatrix gram_of(const SurfaceModel& model, const std::vector<LatticeClass>& gens) {
  QMatrix m(gens.size(), gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) m(i, j) = Rational(model.pair(gens[i], gens[j]));
  return m;
}

[[noreturn]] void fail(const std::string& what) {
  throw DomainError(ErrorCode::DecompositionFailed, "fiber Picard decomposition: " + what);
}

}  // namespace

FiberPicard fiber_picard(const SurfaceModel& model) {
  const int n = configuration_size(model);
  if (n < 1) {
    throw DomainError(ErrorCode::OutOfRange, "model '" + model.id() + "' carries no A configuration");
  }
  const bool p2 = model.kind() == SurfaceKind::P2Blowup;
  const LatticeClass b = p2 ? model.line(0) : *model.base_class();
  const LatticeClass f = p2 ? model.basis_vector(0) - model.line(0) : *model.fiber_class();

  FiberPicard out;
  out.model_id = model.id();
  out.n = n;
  for (int i = 1; i < n; ++i) out.root_block.generators.push_back(model.line(i) - model.line(i + 1));
  out.complement.generators = {model.boundary(), b, f};
  out.root_block.support = support_of(out.root_block.generators);
  out.complement.support = support_of(out.complement.generators);

  for (const auto& x : out.root_block.generators)
    for (const auto& y : out.complement.generators)
      if (sgn(model.pair(x, y)) != 0) fail("root and complement blocks pair nontrivially");

  const auto& roots = out.root_block.generators;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const long want = i == j ? -2 : (i + 1 == j || j + 1 == i ? 1 : 0);
      if (model.pair(roots[i], roots[j]) != want) fail("root block is not of type A");
    }
  out.root_type = "A" + std::to_string(n - 1);

  std::vector<LatticeClass> all = roots;
  all.insert(all.end(), out.complement.generators.begin(), out.complement.generators.end());
  if (all.size() != model.rank()) fail("generator count differs from the lattice rank");
  const Rational d_all = gram_of(model, all).determinant();
  const Rational d_root = roots.empty() ? Rational(1) : gram_of(model, roots).determinant();
  const Rational d_comp = gram_of(model, out.complement.generators).determinant();
  if (sgn(d_all) == 0) fail("blocks do not span a full-rank sublattice");
  if (d_all != d_root * d_comp) fail("Gram matrix is not block diagonal");
  if (abs(d_root) != abs(d_comp)) fail("blocks are not mutual orthogonal complements");
  const Rational ratio = abs(d_all / model.gram_rational().determinant());
  if (ratio.get_den() != 1 || !mpz_perfect_square_p(ratio.get_num().get_mpz_t())) {
    fail("sublattice index is not an integer");
  }
  out.index = sqrt(ratio.get_num());
  return out;
}

FiberPicard fiber_picard(int n) { return fiber_picard(build_surface(SurfaceKind::HirzebruchBlowup, n)); }

}  // namespace ade
