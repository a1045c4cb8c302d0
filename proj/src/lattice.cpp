#include "ade/lattice.hpp"

#include "ade/error.hpp"

#include <charconv>

namespace ade {

std::string_view surface_kind_name(SurfaceKind kind) {
  return kind == SurfaceKind::HirzebruchBlowup ? "hirzebruch_blowup" : "p2_blowup";
}

bool LatticeClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

void LatticeClass::require_same_basis(const LatticeClass& other) const {
  if (basis_id_ != other.basis_id_ || coeffs_.size() != other.coeffs_.size()) {
    throw DomainError(ErrorCode::BasisMismatch,
                      "class arithmetic across bases: '" + basis_id_ + "' vs '" +
                          other.basis_id_ + "'");
  }
}

LatticeClass& LatticeClass::operator+=(const LatticeClass& other) {
  require_same_basis(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

LatticeClass& LatticeClass::operator-=(const LatticeClass& other) {
  require_same_basis(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

LatticeClass operator-(const LatticeClass& a) {
  LatticeClass out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LatticeClass operator*(const Integer& k, const LatticeClass& a) {
  LatticeClass out = a;
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

bool operator<(const LatticeClass& a, const LatticeClass& b) {
  if (a.basis_id_ != b.basis_id_) return a.basis_id_ < b.basis_id_;
  const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return a.coeffs_.size() < b.coeffs_.size();
}

std::vector<std::string> SurfaceModel::basis_labels() const {
  std::vector<std::string> labels;
  if (kind_ == SurfaceKind::HirzebruchBlowup) {
    labels = {"b", "f"};
    for (int i = 1; i <= n_; ++i) labels.push_back("l" + std::to_string(i));
  } else {
    labels = {"h"};
    for (int i = 0; i < n_; ++i) labels.push_back("l" + std::to_string(i));
  }
  return labels;
}

LatticeClass SurfaceModel::zero() const {
  return {id_, std::vector<Integer>(rank(), Integer(0))};
}

LatticeClass SurfaceModel::basis_vector(std::size_t i) const {
  if (i >= rank()) throw DomainError(ErrorCode::OutOfRange, "basis index out of range");
  std::vector<Integer> c(rank(), Integer(0));
  c[i] = 1;
  return {id_, std::move(c)};
}

LatticeClass SurfaceModel::make_class(std::vector<Integer> coeffs) const {
  if (coeffs.size() != rank()) {
    throw DomainError(ErrorCode::BasisMismatch,
                      "class has " + std::to_string(coeffs.size()) + " coefficients, model '" +
                          id_ + "' has rank " + std::to_string(rank()));
  }
  return {id_, std::move(coeffs)};
}

LatticeClass SurfaceModel::make_class(std::initializer_list<long> coeffs) const {
  std::vector<Integer> c;
  for (long v : coeffs) c.emplace_back(v);
  return make_class(std::move(c));
}

int SurfaceModel::max_line_label() const {
  return kind_ == SurfaceKind::HirzebruchBlowup ? n_ : n_ - 1;
}

std::size_t SurfaceModel::line_coordinate(int label) const {
  if (label < 0 || label > max_line_label()) {
    throw DomainError(ErrorCode::OutOfRange,
                      "line label l" + std::to_string(label) + " not in model '" + id_ + "'");
  }
  if (kind_ == SurfaceKind::HirzebruchBlowup) {
    return label == 0 ? 0 : static_cast<std::size_t>(label) + 1;
  }
  return static_cast<std::size_t>(label) + 1;
}

LatticeClass SurfaceModel::line(int label) const { return basis_vector(line_coordinate(label)); }

void SurfaceModel::require_own(const LatticeClass& c) const {
  if (c.basis_id() != id_ || c.rank() != rank()) {
    throw DomainError(ErrorCode::BasisMismatch,
                      "class in basis '" + c.basis_id() + "' used with model '" + id_ + "'");
  }
}

Integer SurfaceModel::pair(const LatticeClass& a, const LatticeClass& b) const {
  require_own(a);
  require_own(b);
  Integer total = 0;
  const std::size_t r = rank();
  for (std::size_t i = 0; i < r; ++i) {
    if (sgn(a[i]) == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (sgn(gram_[i][j]) != 0 && sgn(b[j]) != 0) row += gram_[i][j] * b[j];
    }
    total += a[i] * row;
  }
  return total;
}

QMatrix SurfaceModel::gram_rational() const {
  QMatrix g(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) g(i, j) = gram_[i][j];
  return g;
}

SurfaceModel build_surface(SurfaceKind kind, int n) {
  if (n < 0 || n > kMaxBlowups) {
    throw DomainError(ErrorCode::OutOfRange,
                      "number of blowups must lie in [0, " + std::to_string(kMaxBlowups) +
                          "], got " + std::to_string(n));
  }
  SurfaceModel m;
  m.kind_ = kind;
  m.n_ = n;
  m.id_ = std::string(surface_kind_name(kind)) + ":" + std::to_string(n);

  if (kind == SurfaceKind::HirzebruchBlowup) {
    const std::size_t r = static_cast<std::size_t>(n) + 2;
    m.gram_.assign(r, std::vector<Integer>(r, Integer(0)));
    m.gram_[0][0] = -1;  // b.b
    m.gram_[0][1] = 1;   // b.f
    m.gram_[1][0] = 1;
    for (std::size_t i = 2; i < r; ++i) m.gram_[i][i] = -1;

    std::vector<Integer> k(r, Integer(1));
    k[0] = -2;
    k[1] = -3;
    m.canonical_ = {m.id_, k};
    m.base_ = m.basis_vector(0);
    m.fiber_ = m.basis_vector(1);

    m.effective_generators_.push_back(*m.base_);
    m.effective_generators_.push_back(*m.fiber_);
    for (int i = 1; i <= n; ++i) m.effective_generators_.push_back(m.line(i));
    for (int i = 1; i <= n; ++i) m.effective_generators_.push_back(*m.fiber_ - m.line(i));
  } else {
    const std::size_t r = static_cast<std::size_t>(n) + 1;
    m.gram_.assign(r, std::vector<Integer>(r, Integer(0)));
    m.gram_[0][0] = 1;
    for (std::size_t i = 1; i < r; ++i) m.gram_[i][i] = -1;

    std::vector<Integer> k(r, Integer(1));
    k[0] = -3;
    m.canonical_ = {m.id_, k};
    const LatticeClass h = m.basis_vector(0);

    for (int i = 0; i < n; ++i) m.effective_generators_.push_back(m.line(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        m.effective_generators_.push_back(h - m.line(i) - m.line(j));
    if (n >= 1) {
      m.effective_generators_.push_back(h - m.line(0));
    } else {
      m.effective_generators_.push_back(h);
    }
  }
  m.boundary_ = -m.canonical_;
  return m;
}

SurfaceModel model_from_id(std::string_view id) {
  const auto colon = id.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError(ErrorCode::Schema, "malformed basis id '" + std::string(id) + "'");
  }
  const std::string_view kind = id.substr(0, colon);
  const std::string_view num = id.substr(colon + 1);
  int n = -1;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  if (ec != std::errc() || ptr != num.data() + num.size()) {
    throw DomainError(ErrorCode::Schema, "malformed basis id '" + std::string(id) + "'");
  }
  if (kind == surface_kind_name(SurfaceKind::HirzebruchBlowup)) {
    return build_surface(SurfaceKind::HirzebruchBlowup, n);
  }
  if (kind == surface_kind_name(SurfaceKind::P2Blowup)) {
    return build_surface(SurfaceKind::P2Blowup, n);
  }
  throw DomainError(ErrorCode::Schema, "unknown surface kind in basis id '" + std::string(id) + "'");
}

LatticeClass change_basis(const SurfaceModel& from, const SurfaceModel& to,
                          const LatticeClass& cls) {
  from.require_own(cls);
  if (from.id() == to.id()) return cls;

  const auto& c = cls.coeffs();
  if (from.kind() == SurfaceKind::HirzebruchBlowup && to.kind() == SurfaceKind::P2Blowup &&
      to.n() == from.n() + 1) {
    // beta*b + phi*f + sum c_i l_i  ->  phi*h + (beta - phi) l_0 + sum c_i l_i
    std::vector<Integer> out(to.rank(), Integer(0));
    out[0] = c[1];
    out[1] = c[0] - c[1];
    for (int i = 1; i <= from.n(); ++i) out[to.line_coordinate(i)] = c[from.line_coordinate(i)];
    return to.make_class(std::move(out));
  }
  if (from.kind() == SurfaceKind::P2Blowup && to.kind() == SurfaceKind::HirzebruchBlowup &&
      from.n() == to.n() + 1) {
    // d*h + c_0 l_0 + ...  ->  (d + c_0) b + d f + ...
    std::vector<Integer> out(to.rank(), Integer(0));
    out[0] = c[0] + c[1];
    out[1] = c[0];
    for (int i = 1; i <= to.n(); ++i) out[to.line_coordinate(i)] = c[from.line_coordinate(i)];
    return to.make_class(std::move(out));
  }
  throw DomainError(ErrorCode::UnrelatedModels,
                    "no basis dictionary between '" + from.id() + "' and '" + to.id() + "'");
}

std::pair<int, int> signature(const SurfaceModel& model) {
  return inertia(model.gram_rational());
}

}  // namespace ade
