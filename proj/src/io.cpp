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

#include "pgd/io.hpp"

#include <fstream>
#include <sstream>

namespace pgd::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("bad value for ") + what);
  }
}

std::string label_name(const Label& l) { return std::to_string(l.i) + "-" + std::to_string(l.j); }

}  // namespace

Json to_json(const FieldPtr& field) {
  Json j;
  j["p"] = field->characteristic();
  j["k"] = field->degree();
  j["modulus"] = field->modulus();
  return j;
}

FieldPtr field_from_json(const Json& j) {
  const auto p = as<std::uint32_t>(need(j, "p"), "p");
  const auto k = j.contains("k") ? as<std::uint32_t>(j.at("k"), "k") : 1u;
  std::vector<Code> modulus;
  if (j.contains("modulus")) modulus = as<std::vector<Code>>(j.at("modulus"), "modulus");
  return Field::make(p, k, modulus);
}

Json to_json(const FieldPtr& field, Code element) {
  if (field->is_prime()) return element;
  return field->coefficients(element);
}

Code element_from_json(const FieldPtr& field, const Json& j) {
  if (field->is_prime()) {
    if (!j.is_number_integer()) bad("expected an integer residue");
    const auto v = j.get<long long>();
    if (v < 0 || v >= static_cast<long long>(field->order())) bad("residue out of range");
    return static_cast<Code>(v);
  }
  const auto c = as<std::vector<long long>>(j, "coefficient array");
  if (c.size() != field->degree()) bad("expected " + std::to_string(field->degree()) + " coefficients");
  std::vector<Code> cc;
  for (auto x : c) {
    if (x < 0 || x >= static_cast<long long>(field->characteristic())) bad("coefficient out of range");
    cc.push_back(static_cast<Code>(x));
  }
  return field->from_coefficients(cc);
}

Json to_json(const ProjPoint& p) {
  Json a = Json::array();
  for (auto c : p.coords()) a.push_back(to_json(p.field(), c));
  return a;
}

ProjPoint point_from_json(const FieldPtr& field, const Json& j) {
  if (!j.is_array() || j.size() < 2) bad("a point is an array of at least 2 coordinates");
  std::vector<Code> v;
  for (const auto& x : j) v.push_back(element_from_json(field, x));
  return {field, v};
}

Json to_json(const Subspace& s) {
  Json j;
  j["n"] = s.ambient();
  j["dim"] = s.dim();
  Json rows = Json::array();
  for (std::size_t r = 0; r < s.basis().rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < s.basis().cols; ++c) row.push_back(to_json(s.field(), s.basis().at(r, c)));
    rows.push_back(row);
  }
  j["basis"] = rows;
  return j;
}

Subspace subspace_from_json(const FieldPtr& field, const Json& j) {
  const int n = as<int>(need(j, "n"), "n");
  if (n < 1) bad("n must be positive");
  const auto& rows = need(j, "basis");
  if (!rows.is_array()) bad("basis must be an array");
  linalg::Matrix m(rows.size(), static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != m.cols) bad("basis row has the wrong length");
    for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = element_from_json(field, rows[r][c]);
  }
  return Subspace::from_rows(field, n, std::move(m));
}

Json to_json(const Arc& arc, const std::optional<Subspace>& hyperplane) {
  Json j;
  j["field"] = to_json(arc.field());
  j["n"] = arc.ambient();
  Json pts = Json::array();
  for (const auto& p : arc.points()) pts.push_back(to_json(p));
  j["points"] = pts;
  if (hyperplane) j["hyperplane"] = to_json(dual_coordinates(*hyperplane));
  return j;
}

namespace {

std::vector<ProjPoint> points_from(const FieldPtr& f, const Json& arr, int n, const char* what) {
  if (!arr.is_array()) bad(std::string(what) + " must be an array");
  std::vector<ProjPoint> out;
  for (const auto& x : arr) {
    out.push_back(point_from_json(f, x));
    if (out.back().ambient() != n) bad(std::string(what) + ": point of the wrong length");
  }
  return out;
}

std::optional<Subspace> hyperplane_from(const FieldPtr& f, const Json& j, int n) {
  if (!j.contains("hyperplane")) return std::nullopt;
  const ProjPoint d = point_from_json(f, j.at("hyperplane"));
  if (d.ambient() != n) bad("hyperplane has the wrong length");
  return hyperplane_from_dual(f, d.coords());
}

}  // namespace

ArcFile arc_from_json(const Json& j) {
  const FieldPtr f = field_from_json(need(j, "field"));
  const int n = as<int>(need(j, "n"), "n");
  return {Arc(points_from(f, need(j, "points"), n, "points")), hyperplane_from(f, j, n)};
}

Json to_json(const LabeledConfiguration& config) {
  Json j;
  j["n"] = config.ambient();
  j["field"] = to_json(config.field());
  Json pts = Json::array();
  for (const auto& l : config.labels()) {
    Json e;
    e["label"] = {l.i, l.j};
    e["coords"] = to_json(config.at(l));
    pts.push_back(e);
  }
  j["points"] = pts;
  return j;
}

LabeledConfiguration config_from_json(const Json& j) {
  const FieldPtr f = field_from_json(need(j, "field"));
  const int n = as<int>(need(j, "n"), "n");
  const auto& arr = need(j, "points");
  if (!arr.is_array()) bad("points must be an array");
  LabeledConfiguration::Table t;
  for (const auto& e : arr) {
    const auto lab = as<std::vector<int>>(need(e, "label"), "label");
    if (lab.size() != 2 || lab[0] == lab[1] || lab[0] < 1 || lab[1] < 1) bad("label must be two distinct positive symbols");
    ProjPoint p = point_from_json(f, need(e, "coords"));
    if (p.ambient() != n) bad("point of the wrong length");
    if (!t.emplace(Label(lab[0], lab[1]), std::move(p)).second) bad("label listed twice");
  }
  return {n, f, std::move(t)};
}

Json to_json(const PerspectivePair& pair, const std::optional<ProjPoint>& vertex, const std::optional<Subspace>& hyperplane) {
  Json j;
  j["n"] = pair.ambient();
  j["field"] = to_json(pair.field());
  Json a = Json::array(), b = Json::array();
  for (const auto& p : pair.a()) a.push_back(to_json(p));
  for (const auto& p : pair.b()) b.push_back(to_json(p));
  j["A"] = a;
  j["B"] = b;
  if (vertex) j["vertex"] = to_json(*vertex);
  if (hyperplane) j["hyperplane"] = to_json(dual_coordinates(*hyperplane));
  return j;
}

PairFile pair_from_json(const Json& j) {
  const FieldPtr f = field_from_json(need(j, "field"));
  const int n = as<int>(need(j, "n"), "n");
  PerspectivePair pair(points_from(f, need(j, "A"), n, "A"), points_from(f, need(j, "B"), n, "B"));
  std::optional<ProjPoint> v;
  if (j.contains("vertex")) {
    v = point_from_json(f, j.at("vertex"));
    if (v->ambient() != n) bad("vertex of the wrong length");
  }
  return {std::move(pair), v, hyperplane_from(f, j, n + 1)};
}

namespace {

struct Incidence {
  std::vector<Label> rows;
  std::vector<std::array<int, 3>> cols;
  std::vector<std::vector<int>> m;
};

Incidence incidence(const LabeledConfiguration& config) {
  Incidence inc;
  inc.rows = config.labels();
  const auto& s = config.symbols();
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      for (std::size_t c = b + 1; c < s.size(); ++c) inc.cols.push_back({s[a], s[b], s[c]});
  std::vector<Subspace> lines;
  for (const auto& t : inc.cols) lines.push_back(join(Subspace(config.at(t[0], t[1])), Subspace(config.at(t[0], t[2]))));
  for (const auto& l : inc.rows) {
    std::vector<int> row;
    for (const auto& line : lines) row.push_back(line.contains(config.at(l)) ? 1 : 0);
    inc.m.push_back(std::move(row));
  }
  return inc;
}

std::string col_name(const std::array<int, 3>& t) {
  return std::to_string(t[0]) + "-" + std::to_string(t[1]) + "-" + std::to_string(t[2]);
}

}  // namespace

std::string incidence_csv(const LabeledConfiguration& config) {
  const auto inc = incidence(config);
  std::ostringstream os;
  os << "point";
  for (const auto& c : inc.cols) os << ',' << col_name(c);
  os << '\n';
  for (std::size_t r = 0; r < inc.rows.size(); ++r) {
    os << label_name(inc.rows[r]);
    for (int v : inc.m[r]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

Json incidence_json(const LabeledConfiguration& config) {
  const auto inc = incidence(config);
  Json j;
  Json rows = Json::array(), cols = Json::array();
  for (const auto& l : inc.rows) rows.push_back(label_name(l));
  for (const auto& c : inc.cols) cols.push_back(col_name(c));
  j["rows"] = rows;
  j["columns"] = cols;
  j["matrix"] = inc.m;
  return j;
}

Json to_json(const SweepReport& r) {
  Json j;
  j["n"] = r.n;
  j["points"] = r.points;
  j["passed"] = r.passed;
  j["vertices"] = r.vertices.size();
  j["identity"] = {{"total", r.identity.total},
                   {"simplex_points", r.identity.simplex_points},
                   {"vertex", r.identity.vertex},
                   {"residual", r.identity.residual},
                   {"holds", r.identity.holds()}};
  Json fails = Json::array();
  for (const auto& v : r.vertices) {
    if (!v.passed) fails.push_back({{"label", {v.label.i, v.label.j}}, {"failure", v.failure}});
  }
  j["failures"] = fails;
  return j;
}

Json to_json(const SubstructureCounts& c) {
  Json j;
  Json by = Json::object();
  for (const auto& [d, k] : c.by_dimension) by[std::to_string(d)] = k;
  j["by_dimension"] = by;
  j["consistent"] = c.consistent;
  return j;
}

Json to_json(const IncidenceReport& r) {
  Json j;
  j["symbol_lines"] = r.symbol_lines;
  j["forced_failures"] = r.forced_failures;
  Json acc = Json::array();
  for (const auto& t : r.accidental) {
    acc.push_back({label_name(t[0]), label_name(t[1]), label_name(t[2])});
  }
  j["accidental_collinear_triples"] = acc;
  j["strict"] = r.strict();
  return j;
}

Json to_json(const std::vector<TraceStep>& trace) {
  Json a = Json::array();
  for (const auto& s : trace) {
    a.push_back({{"symbols", s.symbols},
                 {"span_dim", s.span_dim},
                 {"vertex", {s.vertex.i, s.vertex.j}},
                 {"pair_size", s.pair_size},
                 {"residual_points", s.residual_points},
                 {"partition_holds", s.partition_holds}});
  }
  return a;
}

Json to_json(const TripleReport& r) {
  Json j;
  j["axis"] = to_json(r.axis);
  j["vertices_collinear"] = r.vertices_collinear;
  j["edge_sets_in_axis"] = r.edge_sets_in_axis;
  j["axis_is_common_meet"] = r.axis_is_common_meet;
  j["axis_from_first_row"] = r.axis_from_first_row;
  return j;
}

Json to_json(const EnumJob& job, const EnumResult& r, bool with_time) {
  Json j;
  Json echo;
  echo["kind"] = enum_kind_name(job.kind);
  echo["n"] = job.n;
  echo["field"] = to_json(job.field);
  echo["m"] = r.m;
  if (job.avoid) echo["avoid"] = to_json(dual_coordinates(*job.avoid));
  echo["budget"] = job.budget;
  j["job"] = echo;
  j["raw"] = r.raw;
  j["quotient"] = r.quotient;
  j["nodes"] = r.nodes;
  if (job.kind == EnumKind::SectionedConfigs) {
    j["samples"] = r.samples;
    j["sample_failures"] = r.sample_failures;
  }
  if (with_time) j["wall_ms"] = r.wall_ms;
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

}  // namespace pgd::io
