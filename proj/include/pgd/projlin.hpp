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

/// @file projlin.hpp
/// Points, subspaces and collineations of PG(n,q).
///
/// Dimensions are projective: a point has dimension 0, a line 1, and the
/// empty subspace -1, so that dim<E,F> + dim(E n F) = dim E + dim F holds
/// without special cases.

#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pgd/field.hpp"
#include "pgd/linalg.hpp"

namespace pgd {

/// Homogeneous point, normalized so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  /// Normalizes; throws ZeroVector when every entry is zero.
  ProjPoint(FieldPtr field, std::vector<Code> coords);
  static ProjPoint from_elements(std::span<const FieldElement> raw);

  const FieldPtr& field() const noexcept { return field_; }
  /// Projective dimension of the ambient space (coordinate count minus one).
  int ambient() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  const std::vector<Code>& coords() const noexcept { return coords_; }
  FieldElement coord(std::size_t i) const { return {field_, coords_.at(i)}; }

  bool operator==(const ProjPoint& o) const noexcept {
    return coords_ == o.coords_ && field_->same_as(*o.field_);
  }
  bool operator<(const ProjPoint& o) const noexcept { return coords_ < o.coords_; }

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Code> coords_;
};

ProjPoint normalize(std::span<const FieldElement> raw);

/// Projective subspace stored as the row span of a canonical RREF basis.
class Subspace {
 public:
  /// Empty subspace (dimension -1) of PG(n, field).
  static Subspace empty(FieldPtr field, int n);
  static Subspace whole(FieldPtr field, int n);
  /// Span of arbitrary rows (zero rows allowed).
  static Subspace from_rows(FieldPtr field, int n, linalg::Matrix rows);

  /// The point itself as a 0-dimensional subspace.
  Subspace(const ProjPoint& p);  // NOLINT(google-explicit-constructor)

  const FieldPtr& field() const noexcept { return field_; }
  int ambient() const noexcept { return n_; }
  int dim() const noexcept { return static_cast<int>(basis_.rows) - 1; }
  bool is_empty() const noexcept { return basis_.rows == 0; }
  bool is_hyperplane() const noexcept { return dim() == n_ - 1; }
  const linalg::Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const ProjPoint& p) const;
  bool contains(const Subspace& s) const;

  /// Rows spanning the annihilator (dual subspace); n - dim rows.
  linalg::Matrix annihilator() const;

  /// Coordinates of a point of this subspace relative to the RREF basis.
  /// These are the entries at the pivot columns. Throws NotInSubspace.
  ProjPoint intrinsic(const ProjPoint& p) const;
  /// Inverse of intrinsic(): linear combination of basis rows.
  ProjPoint embed(const ProjPoint& local) const;
  /// Same as intrinsic() applied to every basis vector of a subspace inside
  /// this one.
  Subspace intrinsic(const Subspace& s) const;
  Subspace embed(const Subspace& local) const;

  /// Every point of the subspace, in canonical order of the coefficient
  /// vectors. Size (q^(d+1) - 1)/(q - 1).
  std::vector<ProjPoint> points() const;
  /// A representative point (first basis row); throws if empty.
  ProjPoint point() const;

  bool operator==(const Subspace& o) const noexcept {
    return n_ == o.n_ && basis_ == o.basis_ && field_->same_as(*o.field_);
  }

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  Subspace(FieldPtr field, int n, linalg::Matrix basis, std::vector<std::size_t> pivots);

  FieldPtr field_;
  int n_;
  linalg::Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept { return s.hash(); }
};

Subspace join(const Subspace& a, const Subspace& b);
Subspace join(std::span<const Subspace> parts);
Subspace join(std::initializer_list<Subspace> parts);
Subspace span(std::span<const ProjPoint> points);
Subspace meet(const Subspace& a, const Subspace& b);

/// { x : sum coeffs_i x_i = 0 }. Throws ZeroVector.
Subspace hyperplane_from_dual(FieldPtr field, std::span<const Code> coeffs);
Subspace hyperplane_from_dual(std::span<const FieldElement> coeffs);
/// Normalized coefficient vector of a hyperplane, as a point of the dual space.
ProjPoint dual_coordinates(const Subspace& hyperplane);

/// Projectivity x -> M x of PG(n,q). The matrix is scaled so the first
/// nonzero entry of its first row is 1.
class Collineation {
 public:
  Collineation(FieldPtr field, linalg::Matrix m);
  static Collineation identity(FieldPtr field, int n);

  const FieldPtr& field() const noexcept { return field_; }
  int ambient() const noexcept { return static_cast<int>(m_.rows) - 1; }
  const linalg::Matrix& matrix() const noexcept { return m_; }

  ProjPoint operator()(const ProjPoint& p) const;
  Subspace operator()(const Subspace& s) const;
  Collineation inverse() const;
  Collineation then(const Collineation& next) const;

  bool operator==(const Collineation& o) const noexcept { return m_ == o.m_; }

 private:
  FieldPtr field_;
  linalg::Matrix m_;
};

/// A collineation mapping hyperplane `source` onto hyperplane `target`.
///
/// With a, b the normalized dual vectors and i, j their leading positions,
/// the transpose of the map is E_a P_ij E_b^-1, where E_v is the identity
/// with column i replaced by v. Source == target gives the identity.
Collineation collineation_to_hyperplane(const Subspace& source, const Subspace& target);

template <class T>
T apply_collineation(const Collineation& c, const T& x) {
  return c(x);
}

/// Canonical list of every point of PG(n,q): leading-one position ascending,
/// then the trailing coordinates as base-q digits with the last one fastest.
std::vector<ProjPoint> all_points(const FieldPtr& field, int n);
std::size_t point_count(std::uint32_t q, int n);

}  // namespace pgd

template <>
struct std::hash<pgd::Subspace> {
  std::size_t operator()(const pgd::Subspace& s) const noexcept { return s.hash(); }
};
template <>
struct std::hash<pgd::ProjPoint> {
  std::size_t operator()(const pgd::ProjPoint& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : p.coords()) h = (h ^ c) * 1099511628211ull;
    return h;
  }
};
