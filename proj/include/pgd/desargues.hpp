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

/// @file desargues.hpp
/// Sections of arcs, simplexes in perspective, and the constructions that go
/// back and forth between them.
///
/// Symbols are 1-based (the arc point with index i-1 carries symbol i).
/// Simplex indices inside a PerspectivePair are 0-based.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pgd/arcs.hpp"
#include "pgd/projlin.hpp"
#include "pgd/random.hpp"

namespace pgd {

/// Unordered pair of symbols, stored with i < j.
struct Label {
  int i = 0;
  int j = 0;

  Label() = default;
  Label(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

  bool shares_symbol(const Label& o) const noexcept { return i == o.i || i == o.j || j == o.i || j == o.j; }
  bool has(int s) const noexcept { return i == s || j == s; }
  auto operator<=>(const Label&) const = default;
};

/// Points of PG(n) labelled by unordered pairs of symbols.
///
/// A full configuration has n+3 symbols (the section of an (n+3)-arc).
/// restrict() yields a view over a subset of symbols that shares the parent's
/// table, so the same label names the same point at every level.
class LabeledConfiguration {
 public:
  using Table = std::map<Label, ProjPoint>;

  /// The table must contain every pair of the symbols it mentions, with
  /// pairwise-distinct points of PG(n). Throws InvalidConfiguration.
  LabeledConfiguration(int n, FieldPtr field, Table table);

  int ambient() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<int>& symbols() const noexcept { return symbols_; }
  std::size_t symbol_count() const noexcept { return symbols_.size(); }
  std::size_t size() const noexcept { return symbols_.size() * (symbols_.size() - (symbols_.empty() ? 0 : 1)) / 2; }
  bool is_full() const noexcept { return symbols_.size() == static_cast<std::size_t>(n_) + 3; }
  bool has_symbol(int s) const noexcept;

  /// Throws BadSymbols for unknown or equal symbols.
  const ProjPoint& at(int a, int b) const;
  const ProjPoint& at(const Label& l) const { return at(l.i, l.j); }
  /// Labels in lexicographic order.
  std::vector<Label> labels() const;
  std::vector<ProjPoint> points() const;

  LabeledConfiguration restrict(std::vector<int> symbols) const;
  /// New table with symbol s renamed to perm[s]; perm must be a bijection on
  /// the symbol set.
  LabeledConfiguration relabel(const std::map<int, int>& perm) const;

 private:
  LabeledConfiguration(int n, FieldPtr field, std::shared_ptr<const Table> table, std::vector<int> symbols);

  int n_;
  FieldPtr field_;
  std::shared_ptr<const Table> table_;
  std::vector<int> symbols_;
};

/// Two corresponding simplexes of PG(n), n >= 2.
///
/// Construction checks that both are simplexes, that they share no point and
/// that no face of one equals a face of the other (face k is spanned by all
/// points except index k).
class PerspectivePair {
 public:
  PerspectivePair(std::vector<ProjPoint> a, std::vector<ProjPoint> b);

  int ambient() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return a_.front().field(); }
  std::size_t size() const noexcept { return a_.size(); }
  const std::vector<ProjPoint>& a() const noexcept { return a_; }
  const std::vector<ProjPoint>& b() const noexcept { return b_; }
  const Subspace& face_a(std::size_t k) const { return faces_a_.at(k); }
  const Subspace& face_b(std::size_t k) const { return faces_b_.at(k); }

 private:
  int n_;
  std::vector<ProjPoint> a_;
  std::vector<ProjPoint> b_;
  std::vector<Subspace> faces_a_;
  std::vector<Subspace> faces_b_;
};

/// Section of an (n+3)-arc of PG(n+1) by a hyperplane h.
///
/// Entry {i,j} is the point where the line through arc points i and j meets
/// h, written in the coordinates of h's canonical basis (Subspace::intrinsic),
/// so the result lives in PG(n).
/// Throws FieldTooSmall (q = 2), WrongCount, NotAHyperplane,
/// PointOnHyperplane, DegenerateSection.
LabeledConfiguration section_arc(const Arc& gamma, const Subspace& h);

struct ExtractedPair {
  PerspectivePair pair;
  ProjPoint vertex;
  /// Symbol carried by simplex index k.
  std::vector<int> symbols;
};

/// A = {(a,i)}, B = {(b,i)} over the remaining symbols in ascending order,
/// vertex (a,b). Requires a full configuration. Throws BadSymbols.
ExtractedPair extract_perspective_pair(const LabeledConfiguration& config, int a, int b);

/// The common point of the lines A_i B_i, given that every pair of
/// corresponding edges meets in a point. Throws EdgesDisjoint, NoCommonVertex.
ProjPoint find_vertex(const PerspectivePair& pair);

using IndexPair = std::pair<int, int>;

/// A_i A_j meet B_i B_j for every i < j, keyed by 0-based (i, j).
std::map<IndexPair, ProjPoint> edge_intersections(const PerspectivePair& pair);

/// Hyperplane spanned by the edge intersections. Also checks that it holds
/// every corresponding face meet.
Subspace axis_hyperplane(const PerspectivePair& pair);

struct TSpaceMeet {
  std::vector<int> indices;  // the t+1 simplex indices
  Subspace meet;
};

/// Meets of corresponding t-spaces for every (t+1)-subset of indices,
/// 1 <= t <= n-1. Each is checked to be a (t-1)-space inside the axis.
/// Throws BadT.
std::vector<TSpaceMeet> tspace_intersections(const PerspectivePair& pair, int t);

/// join(face_i(A) n face_j(A), face_i(B) n face_j(B)) for i < j; each is
/// checked to be a hyperplane.
std::vector<Subspace> face_pair_joins(const PerspectivePair& pair);

/// The hyperplane from which A and B are in perspective, if there is one:
/// every corresponding t-space meet (t = 1..n-1) is a (t-1)-space and all of
/// them together span a hyperplane.
std::optional<Subspace> perspective_hyperplane(const PerspectivePair& pair);

/// Faces of A and B as points of the dual space.
PerspectivePair dual_pair(const PerspectivePair& pair);

/// Vertex of a pair that is in perspective from a hyperplane, computed in the
/// dual space: the dual pair's axis is the vertex. Throws NoCommonVertex when
/// the pair is not in perspective from a hyperplane.
ProjPoint converse_vertex(const PerspectivePair& pair);

/// Builds an (n+3)-arc of PG(n+1) whose section by h contains the pair.
///
/// The pair and vertex are given in the coordinates of h (see section_arc).
/// A line l through V not in h carries arc points 1 and 2; point i+3 is
/// line(1, A_i) meet line(2, B_i). Without an rng, l is spanned by V and the
/// first point of PG(n+1) off h, and points 1, 2 are the first two points of l
/// other than V. With an rng both choices are random.
/// Throws SharedFace when V lies on a face of A or B.
Arc lift_to_arc(const PerspectivePair& pair, const ProjPoint& vertex, const Subspace& h, Rng* rng = nullptr);

struct ConwayLift {
  ProjPoint a_star;     // lift of A_2 (index 1)
  ProjPoint b_star;     // lift of B_2
  Subspace h1;          // span of the lifted A
  Subspace h2;          // span of the lifted B
  Subspace lifted_axis; // h1 n h2
  Subspace axis;        // projection of lifted_axis from w into h, in h's coordinates
};

/// Lifts A_2, B_2 off h through w, intersects the two hyperplanes spanned by
/// the lifted simplexes and projects the result back into h from w.
/// Throws WInH, DegenerateLift.
ConwayLift conway_lift(const PerspectivePair& pair, const Subspace& h, const ProjPoint& w);
Subspace conway_lift_axis(const PerspectivePair& pair, const Subspace& h, const ProjPoint& w);

/// Random (n+3)-arc of PG(n+1) avoiding h; greedy with restarts.
Arc random_arc_off(const Subspace& h, std::size_t m, Rng& rng);
/// Section of a random arc by a random hyperplane of PG(n+1).
LabeledConfiguration random_sectioned_config(int n, const FieldPtr& field, Rng& rng);
/// A random vertex label of a random sectioned configuration.
ExtractedPair random_sectioned_pair(int n, const FieldPtr& field, Rng& rng);

}  // namespace pgd
