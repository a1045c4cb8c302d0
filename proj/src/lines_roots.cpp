#include "ade/lines_roots.hpp"

#include "ade/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace ade {
namespace {

QVector to_rational(const LatticeClass& c) {
  QVector v;
  v.reserve(c.rank());
  for (const auto& x : c.coeffs()) v.emplace_back(x);
  return v;
}

// Smallest integer >= 0 whose square is >= floor(t); used only to widen a
// candidate window that is filtered exactly afterwards.
Integer isqrt_floor(const Rational& t) {
  if (sgn(t) <= 0) return 0;
  Integer fl = t.get_num() / t.get_den();
  return sqrt(fl);
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Decomposition of the affine search problem
//   x.x = norm, x.c_j = k_j
// as x = u + z with u in span(c_j) and z in the orthogonal complement.
struct AffineProblem {
  bool consistent = true;
  std::vector<std::size_t> independent;  // indices of independent constraints
  QMatrix gram_c;                        // M_jl = c_j . c_l
  QMatrix gram_c_inv;
  QVector center;                        // u in coordinates
  Rational radius;                       // R = u.u - norm = -z.z
};

AffineProblem set_up(const SurfaceModel& model, const Integer& norm,
                     const std::vector<PairingConstraint>& constraints) {
  const QMatrix g = model.gram_rational();
  const std::size_t r = model.rank();
  AffineProblem p;

  // Functionals x -> x.c_j with their values, to detect dependent constraints.
  std::vector<QVector> functionals;
  std::vector<QVector> augmented;
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    model.require_own(constraints[j].cls);
    QVector f = g * to_rational(constraints[j].cls);
    QVector aug = f;
    aug.emplace_back(constraints[j].value);
    functionals.push_back(f);
    if (span_rank(functionals) > p.independent.size()) {
      p.independent.push_back(j);
    } else {
      functionals.pop_back();
    }
    augmented.push_back(std::move(aug));
  }
  if (!augmented.empty() && span_rank(augmented) != p.independent.size()) {
    p.consistent = false;
    return p;
  }

  const std::size_t m = p.independent.size();
  p.gram_c = QMatrix(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      p.gram_c(a, b) = Rational(model.pair(constraints[p.independent[a]].cls,
                                           constraints[p.independent[b]].cls));

  const auto [pos, neg] = inertia(p.gram_c);
  if (m == 0 || pos != 1 || neg != static_cast<int>(m) - 1) {
    throw DomainError(ErrorCode::EnumerationBoundExceeded,
                      "orthogonal complement of the constraints is not negative definite on '" +
                          model.id() + "'; the solution set is not finite");
  }
  p.gram_c_inv = p.gram_c.inverse();

  QVector k(m);
  for (std::size_t a = 0; a < m; ++a) k[a] = Rational(constraints[p.independent[a]].value);
  const QVector mu = p.gram_c_inv * k;
  p.center.assign(r, Rational(0));
  Rational u2 = 0;
  for (std::size_t a = 0; a < m; ++a) {
    const auto& c = constraints[p.independent[a]].cls;
    for (std::size_t i = 0; i < r; ++i) p.center[i] += mu[a] * Rational(c[i]);
    u2 += mu[a] * k[a];
  }
  p.radius = u2 - Rational(norm);
  return p;
}

}  // namespace

CoordinateBox coordinate_box(const SurfaceModel& model, const Integer& norm,
                             const std::vector<PairingConstraint>& constraints) {
  const AffineProblem p = set_up(model, norm, constraints);
  CoordinateBox box;
  if (!p.consistent || sgn(p.radius) < 0) return box;

  const std::size_t r = model.rank();
  const QMatrix g_inv = model.gram_rational().inverse();
  const std::size_t m = p.independent.size();
  box.lower.resize(r);
  box.upper.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    // w_i = projection of the dual basis vector e_i^* onto the complement;
    // |x_i - u_i| = |z . w_i| <= sqrt(R * (-w_i . w_i)).
    QVector b(m);
    for (std::size_t a = 0; a < m; ++a) b[a] = Rational(constraints[p.independent[a]].cls[i]);
    const QVector nu = p.gram_c_inv * b;
    Rational proj = 0;
    for (std::size_t a = 0; a < m; ++a) proj += nu[a] * b[a];
    const Rational neg_w2 = proj - g_inv(i, i);
    const Rational t = p.radius * neg_w2;
    const Integer s = isqrt_floor(t) + 1;
    const Integer fc = floor_of(p.center[i]);
    Integer lo = fc - s;
    Integer hi = fc + s + 1;
    auto inside = [&](const Integer& x) {
      const Rational d = Rational(x) - p.center[i];
      return d * d <= t;
    };
    while (lo <= hi && !inside(lo)) ++lo;
    while (hi >= lo && !inside(hi)) --hi;
    box.lower[i] = lo;
    box.upper[i] = hi;
  }
  return box;
}

std::vector<LatticeClass> enumerate_vectors(const SurfaceModel& model, const Integer& norm,
                                            const std::vector<PairingConstraint>& constraints,
                                            const EnumerationLimits& limits) {
  const AffineProblem p = set_up(model, norm, constraints);
  std::vector<LatticeClass> out;
  if (!p.consistent || sgn(p.radius) < 0) return out;

  const std::size_t r = model.rank();
  const std::size_t m = p.independent.size();
  const QMatrix g = model.gram_rational();

  // Positive definite form A = -G + W M^-1 W^T + lambda W W^T, W = G C.
  // On the affine solution space A(x - u) = R; lambda > R makes every
  // integer point off that space exceed the radius.
  QMatrix w(r, m);
  for (std::size_t a = 0; a < m; ++a) {
    const QVector col = g * to_rational(constraints[p.independent[a]].cls);
    for (std::size_t i = 0; i < r; ++i) w(i, a) = col[i];
  }
  const Rational lambda = Rational(floor_of(p.radius) + 1);
  QMatrix a = w * p.gram_c_inv * w.transpose();
  const QMatrix wwt = w * w.transpose();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) += lambda * wwt(i, j) - g(i, j);

  // A = U^T D U with U unit upper triangular (stored above the diagonal).
  QMatrix q = a;
  for (std::size_t i = 0; i < r; ++i) {
    if (sgn(q(i, i)) <= 0) {
      throw DomainError(ErrorCode::EnumerationBoundExceeded, "search form is not positive definite");
    }
    for (std::size_t j = i + 1; j < r; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < r; ++k)
      for (std::size_t l = k; l < r; ++l) q(k, l) -= q(k, i) * q(i, l);
  }

  std::vector<Integer> x(r);
  QVector z(r);
  std::size_t nodes = 0;

  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level,
                                                                  const Rational& budget) {
    const std::size_t i = level - 1;
    Rational shift = 0;
    for (std::size_t j = i + 1; j < r; ++j) shift += q(i, j) * z[j];
    const Rational c = p.center[i] - shift;
    const Rational t = budget / q(i, i);
    const Integer s = isqrt_floor(t) + 1;
    const Integer fc = floor_of(c);
    for (Integer xi = fc - s; xi <= fc + s; ++xi) {
      const Rational d = Rational(xi) - c;
      const Rational used = q(i, i) * d * d;
      if (used > budget) continue;
      if (++nodes > limits.max_nodes) {
        throw DomainError(ErrorCode::EnumerationBoundExceeded,
                          "enumeration node limit exceeded on '" + model.id() + "'");
      }
      x[i] = xi;
      z[i] = Rational(xi) - p.center[i];
      if (i == 0) {
        LatticeClass cand = model.make_class(x);
        if (model.pair(cand, cand) != norm) continue;
        bool ok = true;
        for (const auto& con : constraints) {
          if (model.pair(cand, con.cls) != con.value) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        out.push_back(std::move(cand));
        if (out.size() > limits.max_results) {
          throw DomainError(ErrorCode::EnumerationBoundExceeded, "too many solutions");
        }
      } else {
        descend(i, budget - used);
      }
    }
  };
  descend(r, p.radius);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeClass> enumerate_lines(const SurfaceModel& model,
                                          const LineConstraints& constraints,
                                          const EnumerationLimits& limits) {
  std::vector<PairingConstraint> cons{{model.canonical(), constraints.canonical_degree}};
  if (constraints.fiber_degree) {
    if (!model.fiber_class()) {
      throw DomainError(ErrorCode::OutOfRange, "model '" + model.id() + "' has no fiber class");
    }
    cons.push_back({*model.fiber_class(), *constraints.fiber_degree});
  }
  return enumerate_vectors(model, constraints.self_intersection, cons, limits);
}

std::string DynkinComponent::label() const {
  if (series == '?') return "X" + std::to_string(rank);
  return std::string(1, series) + std::to_string(rank);
}

std::string RootDatum::type_label() const {
  if (components.empty()) return "A0";
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += "x";
    out += c.label();
  }
  return out;
}

namespace {

bool is_positive(const LatticeClass& c) {
  for (const auto& x : c.coeffs()) {
    if (sgn(x) != 0) return sgn(x) > 0;
  }
  return false;
}

DynkinComponent classify(const std::vector<std::size_t>& nodes,
                         const std::vector<std::vector<std::size_t>>& adj, bool simply_laced) {
  DynkinComponent comp;
  comp.nodes = nodes;
  comp.rank = static_cast<int>(nodes.size());
  comp.series = '?';
  if (!simply_laced) return comp;

  std::size_t edges = 0;
  std::vector<std::size_t> branch;
  for (auto v : nodes) {
    edges += adj[v].size();
    if (adj[v].size() > 3) return comp;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  edges /= 2;
  if (edges + 1 != nodes.size()) return comp;  // not a tree
  if (branch.empty()) {
    comp.series = 'A';
    return comp;
  }
  if (branch.size() > 1) return comp;

  std::vector<int> arms;
  for (auto start : adj[branch[0]]) {
    int len = 1;
    std::size_t prev = branch[0];
    std::size_t cur = start;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    comp.series = 'D';
  } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    comp.series = 'E';
  }
  return comp;
}

}  // namespace

RootDatum make_root_datum(const SurfaceModel& model, std::vector<LatticeClass> roots) {
  RootDatum d;
  d.basis_id = model.id();
  std::sort(roots.begin(), roots.end());
  d.roots = std::move(roots);

  std::vector<LatticeClass> positive;
  for (const auto& r : d.roots)
    if (is_positive(r)) positive.push_back(r);
  const std::set<LatticeClass> positive_set(positive.begin(), positive.end());

  for (const auto& a : positive) {
    bool decomposable = false;
    for (const auto& b : positive) {
      if (b == a) continue;
      if (positive_set.count(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) d.simple_roots.push_back(a);
  }
  std::sort(d.simple_roots.begin(), d.simple_roots.end(),
            [](const LatticeClass& x, const LatticeClass& y) { return y < x; });

  const std::size_t k = d.simple_roots.size();
  d.cartan.assign(k, std::vector<int>(k, 0));
  std::vector<std::vector<std::size_t>> adj(k);
  bool simply_laced = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Integer p = model.pair(d.simple_roots[i], d.simple_roots[j]);
      d.cartan[i][j] = static_cast<int>(-p.get_si());
      if (i != j && sgn(p) != 0) {
        if (p != 1) simply_laced = false;
        adj[i].push_back(j);
      }
    }
  }

  std::vector<bool> seen(k, false);
  for (std::size_t s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> nodes;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      nodes.push_back(v);
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    d.components.push_back(classify(nodes, adj, simply_laced));
  }
  return d;
}

RootDatum enumerate_roots(const SurfaceModel& model, const OrthogonalitySet& orthogonal_to,
                          const EnumerationLimits& limits) {
  std::vector<PairingConstraint> cons;
  if (orthogonal_to.K) cons.push_back({model.canonical(), 0});
  const bool p2 = model.kind() == SurfaceKind::P2Blowup;
  if (orthogonal_to.f) {
    if (model.fiber_class()) {
      cons.push_back({*model.fiber_class(), 0});
    } else if (p2 && model.n() >= 1) {
      cons.push_back({model.basis_vector(0) - model.line(0), 0});
    } else {
      throw DomainError(ErrorCode::OutOfRange, "model '" + model.id() + "' has no fiber class");
    }
  }
  if (orthogonal_to.b) {
    if (model.base_class()) {
      cons.push_back({*model.base_class(), 0});
    } else if (p2 && model.n() >= 1) {
      cons.push_back({model.line(0), 0});
    } else {
      throw DomainError(ErrorCode::OutOfRange, "model '" + model.id() + "' has no base class");
    }
  }
  return make_root_datum(model, enumerate_vectors(model, Integer(-2), cons, limits));
}

LatticeClass reflect(const SurfaceModel& model, const LatticeClass& root, const LatticeClass& cls) {
  if (model.pair(root, root) != -2) {
    throw DomainError(ErrorCode::NotARoot, "reflection in a class with self-intersection != -2");
  }
  return cls + model.pair(cls, root) * root;
}

std::vector<LatticeClass> weyl_orbit(const SurfaceModel& model, const RootDatum& datum,
                                     const LatticeClass& cls, std::size_t cap) {
  if (cap < 1) throw DomainError(ErrorCode::OutOfRange, "orbit cap must be positive");
  model.require_own(cls);
  std::set<LatticeClass> seen{cls};
  std::deque<LatticeClass> queue{cls};
  while (!queue.empty()) {
    const LatticeClass x = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : datum.simple_roots) {
      LatticeClass y = reflect(model, a, x);
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw DomainError(ErrorCode::OrbitCapExceeded,
                            "Weyl orbit exceeds cap " + std::to_string(cap));
        }
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Integer> weight_of(const SurfaceModel& model, const RootDatum& datum,
                               const LatticeClass& cls) {
  std::vector<Integer> w;
  w.reserve(datum.simple_roots.size());
  for (const auto& a : datum.simple_roots) w.push_back(model.pair(cls, a));
  return w;
}

}  // namespace ade
