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

/// @file io.hpp
/// JSON and CSV encodings of fields, points, arcs, configurations and pairs.
///
/// Field elements are plain residues over prime fields and coefficient
/// arrays (constant term first) over extension fields. Every decoder throws
/// ParseError on malformed input.

#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "pgd/config.hpp"
#include "pgd/enumerate.hpp"

namespace pgd::io {

using Json = nlohmann::ordered_json;

Json to_json(const FieldPtr& field);
FieldPtr field_from_json(const Json& j);

Json to_json(const FieldPtr& field, Code element);
Code element_from_json(const FieldPtr& field, const Json& j);

Json to_json(const ProjPoint& p);
ProjPoint point_from_json(const FieldPtr& field, const Json& j);

/// {"n", "dim", "basis": RREF rows}.
Json to_json(const Subspace& s);
Subspace subspace_from_json(const FieldPtr& field, const Json& j);

struct ArcFile {
  Arc arc;
  std::optional<Subspace> hyperplane;
};

/// {"field", "n", "points", "hyperplane"?}; the hyperplane is written as its
/// dual coordinate vector.
Json to_json(const Arc& arc, const std::optional<Subspace>& hyperplane = std::nullopt);
ArcFile arc_from_json(const Json& j);

Json to_json(const LabeledConfiguration& config);
LabeledConfiguration config_from_json(const Json& j);

struct PairFile {
  PerspectivePair pair;
  std::optional<ProjPoint> vertex;
  /// Hyperplane of PG(n+1) that carries the pair (see section_arc).
  std::optional<Subspace> hyperplane;
};

Json to_json(const PerspectivePair& pair, const std::optional<ProjPoint>& vertex,
             const std::optional<Subspace>& hyperplane = std::nullopt);
PairFile pair_from_json(const Json& j);

/// Rows: points "i-j"; columns: symbol lines "i-j-k"; entry 1 when the point
/// lies on the line spanned by (i,j), (i,k), (j,k).
std::string incidence_csv(const LabeledConfiguration& config);
Json incidence_json(const LabeledConfiguration& config);

Json to_json(const SweepReport& r);
Json to_json(const SubstructureCounts& c);
Json to_json(const IncidenceReport& r);
Json to_json(const std::vector<TraceStep>& trace);
Json to_json(const TripleReport& r);
/// Job echo plus counts; wall time only when asked for, so that repeated
/// runs produce identical records.
Json to_json(const EnumJob& job, const EnumResult& r, bool with_time);

Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace pgd::io
