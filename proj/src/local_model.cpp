#include "ade/local_model.hpp"

#include "ade/error.hpp"
#include "ade/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace ade {

// ---------------------------------------------------------------- Poly

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars, 0);
  m.at(i) = 1;
  return term(std::move(m), 1);
}

Poly Poly::term(Monomial m, const Rational& c) {
  Poly p(m.size());
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) {
    if (terms_.empty() && nvars_ == 0) {
      nvars_ = m.size();
    } else {
      throw DomainError(ErrorCode::InvalidRing, "monomial has the wrong number of variables");
    }
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  if (nvars_ == 0) nvars_ = o.nvars_;
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  if (nvars_ == 0) nvars_ = o.nvars_;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly out(a.nvars_);
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(std::max(a.nvars_, b.nvars_));
  Monomial m(out.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly operator*(const Rational& c, const Poly& a) {
  Poly out(a.nvars_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, v] : a.terms_) out.terms_.emplace(m, c * v);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  Poly out(nvars_);
  for (const auto& [mono, c] : terms_) {
    const int e = mono.at(var);
    if (e == 0) continue;
    Monomial m = mono;
    m[var] = e - 1;
    out.add_term(m, c * e);
  }
  return out;
}

Rational Poly::evaluate(const QVector& point) const {
  if (point.size() != nvars_) throw DomainError(ErrorCode::OutOfRange, "point has the wrong dimension");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < std::abs(m[i]); ++k) {
        if (m[i] > 0) {
          v *= point[i];
        } else {
          if (sgn(point[i]) == 0) throw DomainError(ErrorCode::OutOfRange, "pole at evaluation point");
          v /= point[i];
        }
      }
    }
    total += v;
  }
  return total;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != nvars_) throw DomainError(ErrorCode::InvalidRing, "substitution arity mismatch");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  Poly out(target);
  for (const auto& [m, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] > 0) {
        t = t * images[i].pow(static_cast<unsigned>(m[i]));
      } else if (m[i] < 0) {
        if (images[i].terms().size() != 1) {
          throw DomainError(ErrorCode::InvalidRing, "negative power of a non-monomial");
        }
        const auto& [im, ic] = *images[i].terms().begin();
        Monomial inv(im.size());
        for (std::size_t j = 0; j < im.size(); ++j) inv[j] = -im[j];
        t = t * term(std::move(inv), 1 / ic).pow(static_cast<unsigned>(-m[i]));
      }
    }
    out += t;
  }
  return out;
}

bool Poly::contains_var(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.at(var) != 0; });
}

std::optional<int> Poly::homogeneous_degree(const std::vector<int>& weights) const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weights.at(i);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

int Poly::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int e : m) d += e;
    best = std::max(best, d);
  }
  return best;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool constant_term = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    const Rational a = abs(c);
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    first = false;
    bool need_star = false;
    if (constant_term || a != 1) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << names.at(i);
      if (m[i] != 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError(ErrorCode::Parse, "polynomial '" + std::string(text_) + "': " + what +
                                            " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  Poly expr() {
    Poly acc(names_.size());
    bool negate = eat('-');
    if (!negate) eat('+');
    while (true) {
      Poly t = product();
      acc = negate ? acc - t : acc + t;
      if (eat('+')) {
        negate = false;
      } else if (eat('-')) {
        negate = true;
      } else {
        return acc;
      }
    }
  }
  Poly product() {
    Poly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }
  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      const Integer e = integer();
      if (e > 64) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }
  Poly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(integer());
      if (eat('/')) {
        const Integer d = integer();
        if (d == 0) fail("zero denominator");
        q /= Rational(d);
      }
      return Poly::constant(names_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) fail("unknown variable '" + name + "'");
      return Poly::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& names) {
  return PolyParser(text, names).parse();
}

// ---------------------------------------------------------------- TruncRing

namespace {

[[noreturn]] void bad_ring(const std::string& what) { throw DomainError(ErrorCode::InvalidRing, what); }

}  // namespace

TruncRing::TruncRing(std::vector<std::string> names, std::vector<int> degrees,
                     std::vector<Relation> relations, int max_degree)
    : names_(std::move(names)),
      degrees_(std::move(degrees)),
      relations_(std::move(relations)),
      max_degree_(max_degree) {
  const std::size_t n = names_.size();
  if (n == 0) bad_ring("ring needs at least one variable");
  if (degrees_.size() != n) bad_ring("one degree per variable is required");
  if (max_degree_ < 0) bad_ring("max_degree must be nonnegative");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) bad_ring("duplicate variable names");
  for (int d : degrees_)
    if (d <= 0) bad_ring("variable degrees must be positive");

  std::vector<int> rel_of(n, -1);
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    auto& rel = relations_[r];
    if (rel.var >= n) bad_ring("relation refers to an unknown variable");
    const std::string& v = names_[rel.var];
    if (rel_of[rel.var] >= 0) bad_ring("two relations rewrite " + v);
    rel_of[rel.var] = static_cast<int>(r);
    if (rel.power < 1) bad_ring("relation power for " + v + " must be positive");
    if (rel.rhs.is_zero()) {
      rel.rhs = Poly(n);
      continue;
    }
    if (rel.rhs.nvars() != n) bad_ring("relation for " + v + " has the wrong arity");
    if (rel.rhs.contains_var(rel.var)) bad_ring("relation for " + v + " mentions " + v + " on the right");
    for (const auto& [m, c] : rel.rhs.terms())
      for (int e : m)
        if (e < 0) bad_ring("relation for " + v + " has a negative exponent");
    const auto deg = rel.rhs.homogeneous_degree(degrees_);
    if (!deg || *deg != rel.power * degrees_[rel.var]) {
      bad_ring("relation for " + v + " is not homogeneous of degree " +
               std::to_string(rel.power * degrees_[rel.var]));
    }
  }

  // Rewriting terminates iff the variable dependencies are acyclic.
  std::vector<int> state(n, 0);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    if (state[v] == 2) return;
    if (state[v] == 1) bad_ring("relations depend on each other cyclically through " + names_[v]);
    state[v] = 1;
    if (rel_of[v] >= 0) {
      const Poly& rhs = relations_[static_cast<std::size_t>(rel_of[v])].rhs;
      for (std::size_t w = 0; w < n; ++w)
        if (rel_of[w] >= 0 && rhs.contains_var(w)) visit(w);
    }
    state[v] = 2;
  };
  for (std::size_t v = 0; v < n; ++v) visit(v);
}

TruncRing TruncRing::free_ring(std::vector<std::string> names, int max_degree) {
  std::vector<int> degrees(names.size(), 1);
  return {std::move(names), std::move(degrees), {}, max_degree};
}

std::size_t TruncRing::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) bad_ring("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

Poly TruncRing::var(std::string_view name) const { return Poly::variable(nvars(), index_of(name)); }

Poly TruncRing::one() const { return Poly::constant(nvars(), 1); }

int TruncRing::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * degrees_[i];
  return d;
}

bool TruncRing::is_normal(const Monomial& m) const {
  return std::none_of(relations_.begin(), relations_.end(),
                      [&](const Relation& r) { return m[r.var] >= r.power; });
}

Poly TruncRing::normal_form(const Poly& p, std::mt19937_64* rng) const {
  if (!p.is_zero() && p.nvars() != nvars()) bad_ring("polynomial does not belong to this ring");
  Poly result(nvars());
  std::map<Monomial, Rational> work = p.terms();
  std::vector<const Relation*> applicable;
  while (!work.empty()) {
    auto it = work.begin();
    if (rng) std::advance(it, std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(*rng));
    const Monomial m = it->first;
    const Rational c = it->second;
    work.erase(it);

    applicable.clear();
    for (const auto& r : relations_)
      if (m[r.var] >= r.power) applicable.push_back(&r);
    if (applicable.empty()) {
      result.add_term(m, c);
      continue;
    }
    const Relation& r =
        rng ? *applicable[std::uniform_int_distribution<std::size_t>(0, applicable.size() - 1)(*rng)]
            : *applicable.front();
    Monomial base = m;
    base[r.var] -= r.power;
    for (const auto& [rm, rc] : r.rhs.terms()) {
      Monomial t = base;
      for (std::size_t i = 0; i < t.size(); ++i) t[i] += rm[i];
      auto [wit, inserted] = work.try_emplace(t, c * rc);
      if (!inserted) {
        wit->second += c * rc;
        if (sgn(wit->second) == 0) work.erase(wit);
      }
    }
  }
  return result;
}

std::vector<Monomial> TruncRing::monomials(int d, const std::vector<std::size_t>& vars) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m(nvars(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == vars.size()) {
      if (left == 0) out.push_back(m);
      return;
    }
    const std::size_t v = vars[k];
    for (int e = 0; e * degrees_[v] <= left; ++e) {
      m[v] = e;
      rec(k + 1, left - e * degrees_[v]);
    }
    m[v] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> TruncRing::normal_basis(int d) const {
  if (d < 0 || d > max_degree_) {
    throw DomainError(ErrorCode::OutOfRange, "degree " + std::to_string(d) + " outside 0.." +
                                                 std::to_string(max_degree_));
  }
  std::vector<std::size_t> all(nvars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto mons = monomials(d, all);
  std::erase_if(mons, [&](const Monomial& m) { return !is_normal(m); });
  return mons;
}

namespace {

using BasisIndex = std::map<Monomial, std::size_t>;

BasisIndex index_basis(const std::vector<Monomial>& basis) {
  BasisIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

QVector to_coords(const Poly& normal, const BasisIndex& idx) {
  QVector v(idx.size(), Rational(0));
  for (const auto& [m, c] : normal.terms()) {
    const auto it = idx.find(m);
    if (it == idx.end()) throw DomainError(ErrorCode::InvalidRing, "element is not of the expected degree");
    v[it->second] = c;
  }
  return v;
}

}  // namespace

QVector TruncRing::coordinates(const Poly& p, int d) const {
  return to_coords(normal_form(p), index_basis(normal_basis(d)));
}

std::vector<Poly> TruncRing::relation_polys() const {
  std::vector<Poly> out;
  for (const auto& r : relations_) {
    Poly lhs = Poly::variable(nvars(), r.var).pow(static_cast<unsigned>(r.power));
    out.push_back(lhs - r.rhs);
  }
  return out;
}

std::size_t graded_dim(const TruncRing& ring, int d) { return ring.normal_basis(d).size(); }

// ---------------------------------------------------------------- modules

namespace {

std::vector<std::size_t> all_vars(const TruncRing& ring) {
  std::vector<std::size_t> v(ring.nvars());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

int generator_degree(const TruncRing& ring, const Poly& g) {
  if (g.is_zero()) bad_ring("module generators must be nonzero");
  const auto d = g.homogeneous_degree(ring.degrees());
  if (!d) bad_ring("module generators must be homogeneous");
  return *d;
}

void require_degree(const TruncRing& ring, int maxdeg) {
  if (maxdeg < 0 || maxdeg > ring.max_degree()) {
    throw DomainError(ErrorCode::OutOfRange, "maxdeg " + std::to_string(maxdeg) + " outside 0.." +
                                                 std::to_string(ring.max_degree()));
  }
}

// Rows m*g for generators g and subring monomials m of degree d - deg g
// with deg m >= min_mult_degree.
std::vector<QVector> piece(const TruncRing& ring, const std::vector<Poly>& gens,
                           const std::vector<std::size_t>& vars, int d, int min_mult_degree) {
  const BasisIndex idx = index_basis(ring.normal_basis(d));
  std::vector<QVector> rows;
  for (const auto& g : gens) {
    const int e = d - generator_degree(ring, g);
    if (e < min_mult_degree) continue;
    for (const auto& m : ring.monomials(e, vars)) {
      rows.push_back(to_coords(ring.normal_form(Poly::term(m, 1) * g), idx));
    }
  }
  return rows;
}

std::size_t subring_dim(const TruncRing& ring, const std::vector<std::size_t>& vars, int e) {
  if (e < 0) return 0;
  return span_rank(piece(ring, {ring.one()}, vars, e, 0));
}

}  // namespace

GradedModule make_module(const TruncRing& ring, const std::vector<std::string>& gens,
                         const std::vector<std::string>& subring_vars) {
  GradedModule m;
  for (const auto& g : gens) {
    m.generators.push_back(ring.parse(g));
    generator_degree(ring, m.generators.back());
  }
  for (const auto& v : subring_vars) m.over_subring.push_back(ring.index_of(v));
  return m;
}

GradedModule make_ideal(const TruncRing& ring, const std::vector<std::string>& gens) {
  return make_module(ring, gens, ring.names());
}

std::vector<QVector> degree_piece(const TruncRing& ring, const GradedModule& module, int d) {
  return piece(ring, module.generators, module.over_subring, d, 0);
}

CheckResult check_generate(const TruncRing& ring, const GradedModule& target,
                           const GradedModule& candidate, int maxdeg) {
  require_degree(ring, maxdeg);
  for (int d = 0; d <= maxdeg; ++d) {
    auto a = degree_piece(ring, target, d);
    const auto b = degree_piece(ring, candidate, d);
    const std::size_t ra = span_rank(a), rb = span_rank(b);
    a.insert(a.end(), b.begin(), b.end());
    if (ra != rb || span_rank(a) != ra) return {false, d};
  }
  return {};
}

CheckResult check_free(const TruncRing& ring, const GradedModule& candidate, int maxdeg) {
  require_degree(ring, maxdeg);
  for (int d = 0; d <= maxdeg; ++d) {
    std::size_t domain = 0;
    for (const auto& g : candidate.generators) {
      domain += subring_dim(ring, candidate.over_subring, d - generator_degree(ring, g));
    }
    if (span_rank(degree_piece(ring, candidate, d)) != domain) return {false, d};
  }
  return {};
}

std::size_t min_generators_at_origin(const TruncRing& ring, const std::vector<Poly>& ideal_gens,
                                     int maxdeg) {
  require_degree(ring, maxdeg);
  const auto vars = all_vars(ring);
  std::size_t total = 0;
  for (int d = 0; d <= maxdeg; ++d) {
    total += span_rank(piece(ring, ideal_gens, vars, d, 0)) -
             span_rank(piece(ring, ideal_gens, vars, d, 1));
  }
  return total;
}

std::size_t singular_locus_rank(const std::vector<Poly>& relations, const QVector& point) {
  std::vector<QVector> rows;
  for (const auto& r : relations) {
    QVector row;
    for (std::size_t i = 0; i < point.size(); ++i) row.push_back(r.derivative(i).evaluate(point));
    rows.push_back(std::move(row));
  }
  return span_rank(rows);
}

TruncRing conifold_ring(int max_degree) {
  const std::vector<std::string> names{"x", "y", "z", "s"};
  return {names, {1, 1, 1, 1}, {{3, 2, parse_poly("x^2 - y^2 + z^2", names)}}, max_degree};
}

// ---------------------------------------------------------------- extension chain

bool ChainReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed; });
}

namespace {

// Affine chart of the small blow-up of x^2 - y^2 + z^2 = 0 with
// coordinates (c, w); the exceptional curve is c = 0.
struct Chart {
  std::vector<std::string> names;
  Poly x, y, z, lambda1, lambda2;
};

Chart chart_lambda1() {
  const std::vector<std::string> n{"v", "l2"};
  // x + y = v, x - y = -v l2^2, z = v l2
  return {n, parse_poly("1/2*v - 1/2*v*l2^2", n), parse_poly("1/2*v + 1/2*v*l2^2", n),
          parse_poly("v*l2", n), parse_poly("1", n), parse_poly("l2", n)};
}

Chart chart_lambda2() {
  const std::vector<std::string> n{"u", "l1"};
  // x - y = u, z = -u l1, x + y = -u l1^2
  return {n, parse_poly("1/2*u - 1/2*u*l1^2", n), parse_poly("-1/2*u - 1/2*u*l1^2", n),
          parse_poly("-u*l1", n), parse_poly("l1", n), parse_poly("1", n)};
}

// Chart 1 coordinates written in chart 2 coordinates.
std::vector<Poly> chart1_in_chart2() {
  const std::vector<std::string> n{"u", "l1"};
  return {parse_poly("-u*l1^2", n), Poly::term({0, -1}, 1)};
}

std::vector<Monomial> monomials_upto(std::size_t nvars, int D) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == nvars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[k] = e;
      rec(k + 1, left - e);
    }
    m[k] = 0;
  };
  rec(0, D);
  std::sort(out.begin(), out.end());
  return out;
}

QVector filtered_coords(const Poly& p, const BasisIndex& idx) {
  QVector v(idx.size(), Rational(0));
  for (const auto& [m, c] : p.terms()) {
    const auto it = idx.find(m);
    if (it == idx.end()) throw DomainError(ErrorCode::InvalidRing, "element exceeds the filtration bound");
    v[it->second] = c;
  }
  return v;
}

// Span of {m g : g in gens, deg(m g) <= D} in the free polynomial ring.
std::vector<QVector> filtered_ideal(const std::vector<Poly>& gens, std::size_t nvars, int D) {
  const BasisIndex idx = index_basis(monomials_upto(nvars, D));
  std::vector<QVector> rows;
  for (const auto& g : gens) {
    const int e = D - g.total_degree();
    if (e < 0) continue;
    for (const auto& m : monomials_upto(nvars, e)) rows.push_back(filtered_coords(Poly::term(m, 1) * g, idx));
  }
  return rows;
}

bool same_span(std::vector<QVector> a, const std::vector<QVector>& b) {
  const std::size_t ra = span_rank(a), rb = span_rank(b);
  a.insert(a.end(), b.begin(), b.end());
  return ra == rb && span_rank(a) == ra;
}

// Solutions (f2, f3), each of degree <= D, of z f2 + (x - y) f3 = 0 in the
// chart, compared with the multiples of the expected syzygy generator.
bool syzygy_matches(const Chart& ch, const Poly& g2, const Poly& g3, int D, long& dimension) {
  const std::size_t nv = ch.names.size();
  const Poly z = ch.z;
  const Poly xmy = ch.x - ch.y;
  const auto unknowns = monomials_upto(nv, D);
  const int out_deg = D + std::max(z.total_degree(), xmy.total_degree());
  const BasisIndex out_idx = index_basis(monomials_upto(nv, out_deg));
  QMatrix M(out_idx.size(), 2 * unknowns.size());
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    const Poly m = Poly::term(unknowns[j], 1);
    const QVector a = filtered_coords(z * m, out_idx);
    const QVector b = filtered_coords(xmy * m, out_idx);
    for (std::size_t i = 0; i < a.size(); ++i) {
      M(i, j) = a[i];
      M(i, unknowns.size() + j) = b[i];
    }
  }
  const auto kernel = M.nullspace();
  dimension = static_cast<long>(kernel.size());

  const BasisIndex in_idx = index_basis(unknowns);
  const int e = D - std::max(g2.total_degree(), g3.total_degree());
  std::vector<QVector> expected;
  for (const auto& m : e >= 0 ? monomials_upto(nv, e) : std::vector<Monomial>{}) {
    const Poly q = Poly::term(m, 1);
    QVector row = filtered_coords(g2 * q, in_idx);
    const QVector tail = filtered_coords(g3 * q, in_idx);
    row.insert(row.end(), tail.begin(), tail.end());
    expected.push_back(std::move(row));
  }
  return same_span(kernel, expected);
}

// Degree on the exceptional curve of the line bundle with local generator
// g1 on chart 1 and g2 on chart 2: g1 = l1^k g2 along the curve gives k.
std::optional<int> transition_degree(const Poly& g1, const Poly& g2) {
  const Poly g1_in_2 = g1.substitute(chart1_in_chart2());
  if (g1_in_2.terms().size() != 1 || g2.terms().size() != 1) return std::nullopt;
  const auto& [m1, c1] = *g1_in_2.terms().begin();
  const auto& [m2, c2] = *g2.terms().begin();
  if (m1[0] != m2[0]) return std::nullopt;  // ratio must be a unit along u = 0
  return m1[1] - m2[1];
}

SubCheck make_check(std::string id, std::string description) {
  SubCheck c;
  c.id = std::move(id);
  c.description = std::move(description);
  return c;
}

void fail_at(SubCheck& c, int d) {
  if (c.passed) c.failure_degree = d;
  c.passed = false;
}

}  // namespace

std::pair<SplitType, SplitType> exceptional_curve_splits() {
  const Chart c1 = chart_lambda1();
  const Chart c2 = chart_lambda2();
  // O(-l_1) is cut out by lambda2; O(-l_2) is the pulled-back (x - y, z),
  // principal in each chart with the generators found by the syzygy check.
  const auto d1 = transition_degree(c1.lambda2, c2.lambda2);
  const auto d2 = transition_degree(parse_poly("v*l2", c1.names), parse_poly("u", c2.names));
  // The free module is pulled back from downstairs: both frames are the
  // same global functions.
  const auto f1 = transition_degree(c1.x - c1.y, c2.x - c2.y);
  const auto f2 = transition_degree(c1.z, c2.z);
  if (!d1 || !d2 || !f1 || !f2) {
    throw DomainError(ErrorCode::InvalidRing, "chart transition is not a unit along the exceptional curve");
  }
  return {{*d1, *d2}, {*f1, *f2}};
}

ChainReport verify_extension_chain(int maxdeg) {
  if (maxdeg < 1) throw DomainError(ErrorCode::OutOfRange, "maxdeg must be at least 1");
  ChainReport rep;
  rep.maxdeg = maxdeg;

  // (a0) 0 -> I(D') -> R -> R / I(D') -> 0, with R / I(D') = R|_{y = x, s = -z}.
  {
    SubCheck c = make_check("pushforward_sequence",
                            "dim R_d = dim I(D')_d + dim (R/I(D'))_d with D': x - y = z + s = 0");
    const TruncRing R = conifold_ring(maxdeg);
    const std::vector<std::string> names = R.names();
    const TruncRing Dp(names, {1, 1, 1, 1},
                       {{1, 1, parse_poly("x", names)}, {3, 1, parse_poly("-z", names)}}, maxdeg);
    if (!Dp.normal_form(R.relation_polys().front()).is_zero()) fail_at(c, 2);
    const GradedModule I = make_ideal(R, {"x - y", "z + s"});
    for (int d = 0; d <= maxdeg; ++d) {
      const long r = static_cast<long>(graded_dim(R, d));
      const long i = static_cast<long>(span_rank(degree_piece(R, I, d)));
      const long q = static_cast<long>(graded_dim(Dp, d));
      c.dims["R"].push_back(r);
      c.dims["I_Dprime"].push_back(i);
      c.dims["quotient"].push_back(q);
      if (r != i + q) fail_at(c, d);
    }
    rep.checks.push_back(std::move(c));
  }

  // (a) F_2 = <x - y, z + s> over the fiber t = 0, and its image under s -> 0.
  {
    SubCheck c = make_check("restriction_sequence",
                            "F_2 is free and s -> 0 maps it onto (x - y, z) with additive dimensions");
    const std::vector<std::string> n4{"x", "y", "z", "s"};
    const std::vector<std::string> n3{"x", "y", "z"};
    const TruncRing R0(n4, {1, 1, 1, 1},
                       {{3, 2, Poly(4)}, {1, 2, parse_poly("x^2 + z^2", n4)}}, maxdeg);
    const TruncRing S0(n3, {1, 1, 1}, {{1, 2, parse_poly("x^2 + z^2", n3)}}, maxdeg);
    const GradedModule F2 = make_module(R0, {"x - y", "z + s"}, {"x", "y", "z"});
    const GradedModule target = make_ideal(S0, {"x - y", "z"});
    const GradedModule sR0 = make_module(R0, {"s"}, n4);

    const CheckResult free = check_free(R0, F2, maxdeg);
    if (!free.ok) fail_at(c, *free.first_failure_degree);

    const std::vector<Poly> s_to_zero{S0.var("x"), S0.var("y"), S0.var("z"), Poly(3)};
    for (int d = 0; d <= maxdeg; ++d) {
      const BasisIndex idx = index_basis(S0.normal_basis(d));
      std::vector<QVector> image;
      for (const auto& g : F2.generators) {
        for (const auto& m : R0.monomials(d - generator_degree(R0, g), F2.over_subring)) {
          const Poly elt = R0.normal_form(Poly::term(m, 1) * g);
          image.push_back(to_coords(S0.normal_form(elt.substitute(s_to_zero)), idx));
        }
      }
      auto f2 = degree_piece(R0, F2, d);
      const auto sr = degree_piece(R0, sR0, d);
      const long dim_f2 = static_cast<long>(span_rank(f2));
      const long dim_sr = static_cast<long>(span_rank(sr));
      f2.insert(f2.end(), sr.begin(), sr.end());
      const long dim_kernel = dim_f2 + dim_sr - static_cast<long>(span_rank(f2));
      const long dim_image = static_cast<long>(span_rank(image));
      c.dims["F2"].push_back(dim_f2);
      c.dims["image"].push_back(dim_image);
      c.dims["kernel"].push_back(dim_kernel);
      if (!same_span(image, degree_piece(S0, target, d))) fail_at(c, d);
      if (dim_f2 != dim_image + dim_kernel) fail_at(c, d);
    }
    rep.checks.push_back(std::move(c));
  }

  // (b) On the blow-up the kernel becomes principal.
  {
    SubCheck c = make_check("blowup_charts",
                            "chart equations hold; syzygies of (z, x - y) are generated by "
                            "(lambda2, lambda1); pulled-back (x - y, z) is principal");
    const Chart c1 = chart_lambda1();
    const Chart c2 = chart_lambda2();
    for (const Chart* ch : {&c1, &c2}) {
      const Poly r1 = (ch->x - ch->y) * ch->lambda1 + ch->z * ch->lambda2;
      const Poly r2 = -(ch->z * ch->lambda1) + (ch->x + ch->y) * ch->lambda2;
      const Poly quad = ch->x * ch->x - ch->y * ch->y + ch->z * ch->z;
      if (!r1.is_zero() || !r2.is_zero() || !quad.is_zero()) fail_at(c, 0);
    }
    const auto img = chart1_in_chart2();
    for (const auto& [p1, p2] : {std::pair{c1.x, c2.x}, {c1.y, c2.y}, {c1.z, c2.z}}) {
      if (p1.substitute(img) != p2) fail_at(c, 0);
    }
    for (int D = 1; D <= maxdeg; ++D) {
      long k1 = 0, k2 = 0;
      if (!syzygy_matches(c1, c1.lambda2, c1.lambda1, D, k1)) fail_at(c, D);
      if (!syzygy_matches(c2, c2.lambda2, c2.lambda1, D, k2)) fail_at(c, D);
      c.dims["syzygies_chart1"].push_back(k1);
      c.dims["syzygies_chart2"].push_back(k2);
      if (!same_span(filtered_ideal({c1.x - c1.y, c1.z}, 2, D),
                     filtered_ideal({parse_poly("v*l2", c1.names)}, 2, D)))
        fail_at(c, D);
      if (!same_span(filtered_ideal({c2.x - c2.y, c2.z}, 2, D),
                     filtered_ideal({parse_poly("u", c2.names)}, 2, D)))
        fail_at(c, D);
    }
    rep.checks.push_back(std::move(c));
  }

  // (c) Degrees along the exceptional curve C = l_2 - l_1.
  {
    SubCheck c = make_check("exceptional_degrees",
                            "O(-l_1) + O(-l_2) restricts as (-1, +1) and the free module as (0, 0)");
    const auto [direct, free] = exceptional_curve_splits();
    rep.direct_sum_split = direct;
    rep.free_split = free;
    if (direct != SplitType{-1, 1} || free != SplitType{0, 0}) fail_at(c, 0);
    if (direct.first + direct.second != free.first + free.second) fail_at(c, 0);
    const SurfaceModel s = build_surface(SurfaceKind::HirzebruchBlowup, 2);
    const LatticeClass C = s.line(2) - s.line(1);
    if (s.pair(-s.line(1), C) != direct.first || s.pair(-s.line(2), C) != direct.second) fail_at(c, 0);
    if (s.pair(s.line(1), s.line(1)) != -1 || s.pair(C, C) != -2) fail_at(c, 0);
    c.dims["direct_sum"] = {direct.first, direct.second};
    c.dims["free"] = {free.first, free.second};
    rep.checks.push_back(std::move(c));
  }

  const TruncRing small = conifold_ring(maxdeg);
  const TruncRing large = conifold_ring(maxdeg + 2);
  for (int d = 0; d <= maxdeg; ++d) {
    if (graded_dim(small, d) != graded_dim(large, d)) {
      rep.warnings.push_back("graded dimension in degree " + std::to_string(d) +
                             " changed when the truncation was raised");
    }
  }
  return rep;
}

ChainReport conifold_suite(int maxdeg) {
  if (maxdeg < 1) throw DomainError(ErrorCode::OutOfRange, "maxdeg must be at least 1");
  const TruncRing R = conifold_ring(maxdeg);
  ChainReport rep;
  rep.maxdeg = maxdeg;
  const GradedModule whole = make_ideal(R, {"1"});

  const auto generate = [&](std::string id, std::string desc, const GradedModule& target,
                            const GradedModule& cand) {
    SubCheck c = make_check(std::move(id), std::move(desc));
    const CheckResult r = check_generate(R, target, cand, maxdeg);
    if (!r.ok) fail_at(c, *r.first_failure_degree);
    rep.checks.push_back(std::move(c));
  };
  const auto free = [&](std::string id, std::string desc, const GradedModule& cand) {
    SubCheck c = make_check(std::move(id), std::move(desc));
    const CheckResult r = check_free(R, cand, maxdeg);
    if (!r.ok) fail_at(c, *r.first_failure_degree);
    rep.checks.push_back(std::move(c));
  };

  {
    SubCheck c = make_check("graded_dims", "dim R_d = (d + 1)^2");
    for (int d = 0; d <= maxdeg; ++d) {
      const long dim = static_cast<long>(graded_dim(R, d));
      c.dims["R"].push_back(dim);
      if (dim != static_cast<long>(d + 1) * (d + 1)) fail_at(c, d);
    }
    rep.checks.push_back(std::move(c));
  }
  generate("pushforward_generators", "{1, s} generate R over C[x, y, z]", whole,
           make_module(R, {"1", "s"}, {"x", "y", "z"}));
  {
    SubCheck c = make_check("pushforward_single_generator", "{1} alone misses s in degree 1");
    const CheckResult r = check_generate(R, whole, make_module(R, {"1"}, {"x", "y", "z"}), maxdeg);
    c.passed = !r.ok && r.first_failure_degree == 1;
    if (!c.passed) c.failure_degree = r.first_failure_degree.value_or(-1);
    rep.checks.push_back(std::move(c));
  }
  free("pushforward_free", "{1, s} is free over C[x, y, z]", make_module(R, {"1", "s"}, {"x", "y", "z"}));
  generate("ideal_generators", "x - y and z + s generate I(D') over C[x, y, z]",
           make_ideal(R, {"x - y", "z + s"}), make_module(R, {"x - y", "z + s"}, {"x", "y", "z"}));
  free("ideal_free", "x - y and z + s have no syzygy over C[x, y, z]",
       make_module(R, {"x - y", "z + s"}, {"x", "y", "z"}));
  {
    SubCheck c = make_check("weil_not_cartier", "(x - y, z - s) needs 2 generators, (x - y) needs 1");
    const long d = static_cast<long>(min_generators_at_origin(R, {R.parse("x - y"), R.parse("z - s")}, maxdeg));
    const long dd = static_cast<long>(min_generators_at_origin(R, {R.parse("x - y")}, maxdeg));
    c.dims["D"] = {d};
    c.dims["D_plus_Dprime"] = {dd};
    c.passed = d == 2 && dd == 1;
    rep.checks.push_back(std::move(c));
  }
  {
    SubCheck c = make_check("conifold_point", "Jacobian rank 0 at the origin and 1 at (1, 0, 0, 1)");
    const auto rels = R.relation_polys();
    const long at0 = static_cast<long>(singular_locus_rank(rels, {0, 0, 0, 0}));
    const long at1 = static_cast<long>(singular_locus_rank(rels, {1, 0, 0, 1}));
    c.dims["jacobian_rank"] = {at0, at1};
    c.passed = at0 == 0 && at1 == 1;
    rep.checks.push_back(std::move(c));
  }

  ChainReport chain = verify_extension_chain(maxdeg);
  for (auto& c : chain.checks) rep.checks.push_back(std::move(c));
  rep.direct_sum_split = chain.direct_sum_split;
  rep.free_split = chain.free_split;
  rep.warnings = std::move(chain.warnings);
  return rep;
}

}  // namespace ade
