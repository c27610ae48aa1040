// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pgd/projlin.hpp"

#include <sstream>
#include <utility>

namespace pgd {

namespace {

void normalize_in_place(const Field& f, std::span<Code> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1) {
      const Code s = f.inv(v[i]);
      for (std::size_t j = i; j < v.size(); ++j) v[j] = f.mul(v[j], s);
    }
    return;
  }
  throw Error(Errc::ZeroVector, "all coordinates are zero");
}

void check_same_space(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(Errc::AmbientMismatch, "PG(" + std::to_string(a.ambient()) + ") vs PG(" +
                                           std::to_string(b.ambient()) + ")");
  }
  if (!a.field()->same_as(*b.field())) {
    throw Error(Errc::MixedFields, a.field()->name() + " vs " + b.field()->name());
  }
}

linalg::Matrix stack(const linalg::Matrix& a, const linalg::Matrix& b) {
  linalg::Matrix m(a.rows + b.rows, a.cols);
  std::copy(a.data.begin(), a.data.end(), m.data.begin());
  std::copy(b.data.begin(), b.data.end(), m.data.begin() + static_cast<std::ptrdiff_t>(a.data.size()));
  return m;
}

}  // namespace

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(FieldPtr field, std::vector<Code> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  for (Code c : coords_) {
    if (c >= field_->order()) throw Error(Errc::InvalidField, "coordinate out of range");
  }
  normalize_in_place(*field_, coords_);
}

ProjPoint ProjPoint::from_elements(std::span<const FieldElement> raw) {
  if (raw.empty()) throw Error(Errc::ZeroVector, "no coordinates");
  std::vector<Code> c;
  c.reserve(raw.size());
  for (const auto& e : raw) {
    if (!e.field()->same_as(*raw.front().field())) throw Error(Errc::MixedFields, "coordinates from different fields");
    c.push_back(e.code());
  }
  return {raw.front().field(), std::move(c)};
}

ProjPoint normalize(std::span<const FieldElement> raw) { return ProjPoint::from_elements(raw); }

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << field_->to_string(coords_[i]);
  }
  os << ')';
  return os.str();
}

// ----------------------------------------------------------------- Subspace

Subspace::Subspace(FieldPtr field, int n, linalg::Matrix basis, std::vector<std::size_t> pivots)
    : field_(std::move(field)), n_(n), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace::Subspace(const ProjPoint& p) : field_(p.field()), n_(p.ambient()), basis_(1, p.coords().size()) {
  basis_.data = p.coords();
  std::size_t lead = 0;
  while (p.coords()[lead] == 0) ++lead;
  pivots_ = {lead};
}

Subspace Subspace::empty(FieldPtr field, int n) {
  return {std::move(field), n, linalg::Matrix(0, static_cast<std::size_t>(n) + 1), {}};
}

Subspace Subspace::whole(FieldPtr field, int n) {
  const auto k = static_cast<std::size_t>(n) + 1;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  return {std::move(field), n, linalg::Matrix::identity(k), std::move(piv)};
}

Subspace Subspace::from_rows(FieldPtr field, int n, linalg::Matrix rows) {
  if (rows.cols != static_cast<std::size_t>(n) + 1) throw Error(Errc::AmbientMismatch, "row length mismatch");
  auto piv = linalg::rref(*field, rows);
  return {std::move(field), n, std::move(rows), std::move(piv)};
}

bool Subspace::contains(const ProjPoint& p) const {
  if (p.ambient() != n_) throw Error(Errc::AmbientMismatch, "point and subspace ambient differ");
  if (is_empty()) return false;
  // Subtract the combination read off the pivot columns; remainder must vanish.
  const Field& f = *field_;
  const auto& x = p.coords();
  for (std::size_t c = 0; c < x.size(); ++c) {
    Code acc = 0;
    for (std::size_t r = 0; r < basis_.rows; ++r) acc = f.add(acc, f.mul(x[pivots_[r]], basis_.at(r, c)));
    if (acc != x[c]) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& s) const {
  check_same_space(*this, s);
  for (std::size_t r = 0; r < s.basis_.rows; ++r) {
    std::vector<Code> row(s.basis_.row(r), s.basis_.row(r) + s.basis_.cols);
    if (!contains(ProjPoint(field_, std::move(row)))) return false;
  }
  return true;
}

linalg::Matrix Subspace::annihilator() const {
  if (is_empty()) return linalg::Matrix::identity(static_cast<std::size_t>(n_) + 1);
  return linalg::nullspace(*field_, basis_);
}

ProjPoint Subspace::intrinsic(const ProjPoint& p) const {
  if (!contains(p)) throw Error(Errc::NotInSubspace, p.to_string() + " not in subspace");
  std::vector<Code> local(basis_.rows);
  for (std::size_t r = 0; r < basis_.rows; ++r) local[r] = p.coords()[pivots_[r]];
  return {field_, std::move(local)};
}

ProjPoint Subspace::embed(const ProjPoint& local) const {
  if (local.ambient() != dim()) throw Error(Errc::AmbientMismatch, "local point has wrong dimension");
  const Field& f = *field_;
  std::vector<Code> x(basis_.cols, 0);
  for (std::size_t r = 0; r < basis_.rows; ++r) {
    const Code a = local.coords()[r];
    if (a == 0) continue;
    for (std::size_t c = 0; c < basis_.cols; ++c) x[c] = f.add(x[c], f.mul(a, basis_.at(r, c)));
  }
  return {field_, std::move(x)};
}

Subspace Subspace::intrinsic(const Subspace& s) const {
  if (!contains(s)) throw Error(Errc::NotInSubspace, "subspace not contained");
  linalg::Matrix rows(s.basis_.rows, basis_.rows);
  for (std::size_t i = 0; i < s.basis_.rows; ++i) {
    for (std::size_t r = 0; r < basis_.rows; ++r) rows.at(i, r) = s.basis_.at(i, pivots_[r]);
  }
  return from_rows(field_, dim(), std::move(rows));
}

Subspace Subspace::embed(const Subspace& local) const {
  if (local.ambient() != dim()) throw Error(Errc::AmbientMismatch, "local subspace has wrong dimension");
  return from_rows(field_, n_, linalg::multiply(*field_, local.basis_, basis_));
}

std::vector<ProjPoint> Subspace::points() const {
  std::vector<ProjPoint> out;
  if (is_empty()) return out;
  const auto local = all_points(field_, dim());
  out.reserve(local.size());
  for (const auto& l : local) out.push_back(embed(l));
  return out;
}

ProjPoint Subspace::point() const {
  if (is_empty()) throw Error(Errc::ZeroVector, "empty subspace has no points");
  return {field_, std::vector<Code>(basis_.row(0), basis_.row(0) + basis_.cols)};
}

std::size_t Subspace::hash() const noexcept {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
  for (auto c : basis_.data) h = (h ^ c) * 1099511628211ull;
  return (h ^ basis_.rows) * 1099511628211ull;
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "<dim " << dim() << ":";
  for (std::size_t r = 0; r < basis_.rows; ++r) {
    os << (r ? ";" : " ") << '[';
    for (std::size_t c = 0; c < basis_.cols; ++c) {
      if (c) os << ',';
      os << field_->to_string(basis_.at(r, c));
    }
    os << ']';
  }
  os << '>';
  return os.str();
}

// ------------------------------------------------------------ join and meet

Subspace join(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  return Subspace::from_rows(a.field(), a.ambient(), stack(a.basis(), b.basis()));
}

Subspace join(std::span<const Subspace> parts) {
  if (parts.empty()) throw Error(Errc::AmbientMismatch, "join of nothing has no ambient space");
  linalg::Matrix rows(0, parts.front().basis().cols);
  for (const auto& p : parts) {
    check_same_space(parts.front(), p);
    rows = stack(rows, p.basis());
  }
  return Subspace::from_rows(parts.front().field(), parts.front().ambient(), std::move(rows));
}

Subspace join(std::initializer_list<Subspace> parts) {
  return join(std::span<const Subspace>(parts.begin(), parts.size()));
}

Subspace span(std::span<const ProjPoint> points) {
  if (points.empty()) throw Error(Errc::AmbientMismatch, "span of no points has no ambient space");
  const auto& first = points.front();
  linalg::Matrix rows(points.size(), first.coords().size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].ambient() != first.ambient()) throw Error(Errc::AmbientMismatch, "points in different spaces");
    if (!points[i].field()->same_as(*first.field())) throw Error(Errc::MixedFields, "points over different fields");
    std::copy(points[i].coords().begin(), points[i].coords().end(), rows.row(i));
  }
  return Subspace::from_rows(first.field(), first.ambient(), std::move(rows));
}

Subspace meet(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  const linalg::Matrix dual = stack(a.annihilator(), b.annihilator());
  if (dual.rows == 0) return Subspace::whole(a.field(), a.ambient());
  return Subspace::from_rows(a.field(), a.ambient(), linalg::nullspace(*a.field(), dual));
}

Subspace hyperplane_from_dual(FieldPtr field, std::span<const Code> coeffs) {
  const ProjPoint normal(field, std::vector<Code>(coeffs.begin(), coeffs.end()));
  linalg::Matrix eq(1, coeffs.size());
  eq.data = normal.coords();
  const int n = static_cast<int>(coeffs.size()) - 1;
  return Subspace::from_rows(field, n, linalg::nullspace(*field, eq));
}

Subspace hyperplane_from_dual(std::span<const FieldElement> coeffs) {
  const ProjPoint normal = ProjPoint::from_elements(coeffs);
  return hyperplane_from_dual(normal.field(), normal.coords());
}

ProjPoint dual_coordinates(const Subspace& hyperplane) {
  if (!hyperplane.is_hyperplane()) throw Error(Errc::NotAHyperplane, "dimension " + std::to_string(hyperplane.dim()));
  const auto ann = hyperplane.annihilator();
  return {hyperplane.field(), std::vector<Code>(ann.row(0), ann.row(0) + ann.cols)};
}

// -------------------------------------------------------------- Collineation

Collineation::Collineation(FieldPtr field, linalg::Matrix m) : field_(std::move(field)), m_(std::move(m)) {
  if (m_.rows != m_.cols || m_.rows == 0) throw Error(Errc::AmbientMismatch, "collineation matrix must be square");
  if (linalg::rank(*field_, m_) != m_.rows) throw Error(Errc::NotASimplex, "collineation matrix is singular");
  std::size_t lead = 0;
  while (m_.data[lead] == 0) ++lead;
  if (const Code s = field_->inv(m_.data[lead]); s != 1) {
    for (auto& x : m_.data) x = field_->mul(x, s);
  }
}

Collineation Collineation::identity(FieldPtr field, int n) {
  return {std::move(field), linalg::Matrix::identity(static_cast<std::size_t>(n) + 1)};
}

ProjPoint Collineation::operator()(const ProjPoint& p) const {
  if (p.ambient() != ambient()) throw Error(Errc::AmbientMismatch, "point ambient differs from collineation");
  const Field& f = *field_;
  std::vector<Code> y(m_.rows, 0);
  for (std::size_t i = 0; i < m_.rows; ++i) {
    Code acc = 0;
    for (std::size_t j = 0; j < m_.cols; ++j) acc = f.add(acc, f.mul(m_.at(i, j), p.coords()[j]));
    y[i] = acc;
  }
  return {field_, std::move(y)};
}

Subspace Collineation::operator()(const Subspace& s) const {
  if (s.ambient() != ambient()) throw Error(Errc::AmbientMismatch, "subspace ambient differs from collineation");
  return Subspace::from_rows(field_, ambient(), linalg::multiply(*field_, s.basis(), linalg::transpose(m_)));
}

Collineation Collineation::inverse() const { return {field_, linalg::inverse(*field_, m_)}; }

Collineation Collineation::then(const Collineation& next) const {
  return {field_, linalg::multiply(*field_, next.m_, m_)};
}

Collineation collineation_to_hyperplane(const Subspace& source, const Subspace& target) {
  check_same_space(source, target);
  if (!source.is_hyperplane()) throw Error(Errc::NotAHyperplane, "source has dimension " + std::to_string(source.dim()));
  if (!target.is_hyperplane()) throw Error(Errc::NotAHyperplane, "target has dimension " + std::to_string(target.dim()));
  const Field& f = *source.field();
  const auto a = dual_coordinates(source).coords();
  const auto b = dual_coordinates(target).coords();
  const std::size_t k = a.size();
  std::size_t i = 0, j = 0;
  while (a[i] == 0) ++i;
  while (b[j] == 0) ++j;

  auto elementary = [k](const std::vector<Code>& v, std::size_t lead) {
    linalg::Matrix e = linalg::Matrix::identity(k);
    for (std::size_t r = 0; r < k; ++r) e.at(r, lead) = v[r];
    return e;
  };
  linalg::Matrix perm = linalg::Matrix::identity(k);
  if (i != j) {
    perm.at(i, i) = perm.at(j, j) = 0;
    perm.at(i, j) = perm.at(j, i) = 1;
  }
  const auto eb_inv = linalg::inverse(f, elementary(b, j));
  const auto g = linalg::multiply(f, linalg::multiply(f, elementary(a, i), perm), eb_inv);
  return {source.field(), linalg::transpose(g)};
}

// ---------------------------------------------------------------- point sets

std::size_t point_count(std::uint32_t q, int n) {
  std::size_t total = 0, pw = 1;
  for (int i = 0; i <= n; ++i) {
    total += pw;
    pw *= q;
  }
  return total;
}

std::vector<ProjPoint> all_points(const FieldPtr& field, int n) {
  std::vector<ProjPoint> out;
  const std::uint32_t q = field->order();
  out.reserve(point_count(q, n));
  const auto k = static_cast<std::size_t>(n) + 1;
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<Code> v(k, 0);
    v[lead] = 1;
    while (true) {
      out.emplace_back(field, v);
      std::size_t pos = k;
      while (pos-- > lead + 1) {
        if (++v[pos] < q) break;
        v[pos] = 0;
      }
      if (pos == lead) break;
    }
  }
  return out;
}

}  // namespace pgd
