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

/// @file config.hpp
/// Structure of the labelled configurations produced by sections: symbol
/// incidence, substructure counts, the vertex sweep, self-replication and the
/// three semi-simplex theorem.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pgd/desargues.hpp"

namespace pgd {

/// total = simplex_points + vertex + residual, as integers.
struct PartitionIdentity {
  std::uint64_t total = 0;
  std::uint64_t simplex_points = 0;
  std::uint64_t vertex = 1;
  std::uint64_t residual = 0;
  bool holds() const noexcept { return total == simplex_points + vertex + residual; }
};

/// C(n+3,2) = 2(n+1) + 1 + C(n+1,2).
PartitionIdentity vertex_partition(int n);
/// C(n+1,2) = 2(n-1) + 1 + C(n-1,2).
PartitionIdentity replication_partition(int n);

/// Two sets of points, each spanning a hyperplane of the space W spanned by
/// the table they come from, in perspective from a vertex.
class SemiSimplexPair {
 public:
  /// Throws InvalidConfiguration unless c and d each span a hyperplane of w.
  SemiSimplexPair(Subspace w, std::vector<ProjPoint> c, std::vector<ProjPoint> d, ProjPoint vertex);

  const Subspace& space() const noexcept { return w_; }
  const std::vector<ProjPoint>& c() const noexcept { return c_; }
  const std::vector<ProjPoint>& d() const noexcept { return d_; }
  const ProjPoint& vertex() const noexcept { return v_; }

 private:
  Subspace w_;
  std::vector<ProjPoint> c_;
  std::vector<ProjPoint> d_;
  ProjPoint v_;
};

struct IncidenceReport {
  std::size_t symbol_lines = 0;
  /// Symbol triangles that are not collinear, plus table points on a symbol
  /// line {i,j,k} whose label meets {i,j,k} in exactly one symbol. The arc
  /// property rules both out for every n >= 2.
  std::size_t forced_failures = 0;
  /// Collinear table triples whose labels are not of the form (i,j), (i,k),
  /// (j,k). The arc property excludes them only from n = 4 on.
  std::vector<std::array<Label, 3>> accidental;

  bool forced_ok() const noexcept { return forced_failures == 0; }
  bool strict() const noexcept { return forced_ok() && accidental.empty(); }
};

IncidenceReport symbol_incidence_report(const LabeledConfiguration& config);

/// Two table points lie on a line with a third table point exactly when
/// their labels share a symbol, and that line carries exactly (i,j), (i,k),
/// (j,k). Same as symbol_incidence_report(config).strict().
bool verify_symbol_incidence(const LabeledConfiguration& config);

struct SubstructureCounts {
  /// Projective dimension -> number of distinct joins found at that dimension.
  std::map<int, std::size_t> by_dimension;
  /// Every k-subset of symbols (k = 2..n+1) spans a distinct (k-2)-space.
  bool consistent = false;
};

SubstructureCounts substructure_counts(const LabeledConfiguration& config);

struct VertexCheck {
  Label label;
  bool passed = false;
  std::string failure;  // empty when passed
};

struct SweepReport {
  int n = 0;
  std::size_t points = 0;
  std::vector<VertexCheck> vertices;
  std::size_t passed = 0;
  PartitionIdentity identity;
  bool all_passed() const noexcept { return passed == vertices.size() && identity.holds(); }
};

/// For every label (a,b) of a full configuration: extracts the simplex pair,
/// checks that the vertex is (a,b), that the edge intersections are the points
/// labelled away from a and b, and that A, B, V and the edge intersections
/// partition the table.
SweepReport vertex_sweep(const LabeledConfiguration& config);

struct Replication {
  SemiSimplexPair pair;
  LabeledConfiguration residual;
  PartitionIdentity partition;
};

/// Splits a table over s >= 3 symbols whose points span a space of
/// dimension s-2 (the shape of the restricted tables below a full
/// configuration). C = {(a,i)}, D = {(b,i)}, vertex (a,b); the residual keeps
/// the remaining symbols. Checks perspectivity and that the edge meets of C
/// and D are the residual points.
/// Throws TooFewSymbols, BadSymbols, InvalidConfiguration, TheoremViolation.
Replication replicate(const LabeledConfiguration& table, const Label& vertex);

struct TraceStep {
  std::size_t symbols = 0;   // symbols in the table being split
  int span_dim = -1;         // dimension of the space the table spans
  Label vertex;
  std::size_t pair_size = 0; // points in each of the two (semi-)simplexes
  std::size_t residual_points = 0;
  bool partition_holds = false;
};

/// From a full configuration: one simplex extraction on its two smallest
/// symbols, then replicate on the two smallest remaining symbols until fewer
/// than 3 symbols are left.
std::vector<TraceStep> replication_trace(const LabeledConfiguration& config);

struct TripleReport {
  Subspace axis;                       // Z
  std::array<Subspace, 3> spans;       // spans of A, B, C
  bool vertices_collinear = false;
  bool edge_sets_in_axis = false;
  bool axis_is_common_meet = false;    // Z = <X> n <Y> for each pair
  bool axis_from_first_row = false;    // Z = join of (4,5),...,(4,n+3)
  bool ok() const noexcept {
    return vertices_collinear && edge_sets_in_axis && axis_is_common_meet && axis_from_first_row;
  }
};

/// Semi-simplexes A = {(1,i)}, B = {(2,i)}, C = {(3,i)}, i = 4..n+3, of a
/// full configuration with symbols 1..n+3, and their common axis Z spanned by
/// the points (i,j) with 4 <= i < j. Z has dimension n-2: it is a hyperplane
/// of each semi-simplex span. Throws InvalidConfiguration.
TripleReport triple_perspective_axis(const LabeledConfiguration& config);

struct AxisStructure {
  std::size_t lines = 0;
  std::size_t planes = 0;
  std::vector<std::size_t> planes_per_line;
  std::vector<std::size_t> lines_per_point;
  std::vector<std::size_t> planes_per_point;
};

/// Lines and planes of the axis of vertex (a,b) spanned by symbol triples
/// and quadruples, with geometric incidence counts among them.
AxisStructure axis_structure(const LabeledConfiguration& config, int a, int b);

}  // namespace pgd
