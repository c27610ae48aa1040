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

#include "pgd/desargues.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "pgd/combinatorics.hpp"

namespace pgd {

namespace {

std::string idx(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Subspace line(const ProjPoint& p, const ProjPoint& q) { return join(Subspace(p), Subspace(q)); }

Subspace span_of(const std::vector<ProjPoint>& pts, const std::vector<int>& indices) {
  std::vector<ProjPoint> sel;
  sel.reserve(indices.size());
  for (int i : indices) sel.push_back(pts[static_cast<std::size_t>(i)]);
  return span(sel);
}

std::vector<Subspace> faces_of(const std::vector<ProjPoint>& pts) {
  std::vector<Subspace> faces;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::vector<ProjPoint> rest;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i != k) rest.push_back(pts[i]);
    }
    faces.push_back(span(rest));
  }
  return faces;
}

// Meet of two corresponding edges; throws unless it is a single point.
ProjPoint edge_meet(const PerspectivePair& pair, int i, int j) {
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  const Subspace ea = line(pair.a()[ui], pair.a()[uj]);
  const Subspace eb = line(pair.b()[ui], pair.b()[uj]);
  if (ea == eb) throw Error(Errc::EdgesDisjoint, "edges " + idx(i, j) + " coincide");
  const Subspace m = meet(ea, eb);
  if (m.dim() != 0) throw Error(Errc::EdgesDisjoint, "edges " + idx(i, j) + " are skew");
  return m.point();
}

void check_vertex_on_lines(const PerspectivePair& pair, const ProjPoint& v) {
  for (std::size_t i = 0; i < pair.size(); ++i) {
    if (!line(pair.a()[i], pair.b()[i]).contains(v)) {
      throw Error(Errc::NoCommonVertex, "line A_" + std::to_string(i) + "B_" + std::to_string(i) + " misses the vertex");
    }
  }
}

}  // namespace

// ------------------------------------------------------ LabeledConfiguration

LabeledConfiguration::LabeledConfiguration(int n, FieldPtr field, Table table) : n_(n), field_(std::move(field)) {
  std::set<int> syms;
  for (const auto& [label, p] : table) {
    if (label.i == label.j || label.i < 1) throw Error(Errc::InvalidConfiguration, "bad label " + idx(label.i, label.j));
    if (p.ambient() != n_) throw Error(Errc::InvalidConfiguration, "point " + p.to_string() + " not in PG(" + std::to_string(n_) + ")");
    if (!p.field()->same_as(*field_)) throw Error(Errc::MixedFields, "point over a different field");
    syms.insert(label.i);
    syms.insert(label.j);
  }
  symbols_.assign(syms.begin(), syms.end());
  if (table.size() != binomial(symbols_.size(), 2)) {
    throw Error(Errc::InvalidConfiguration, "table does not cover every pair of its " + std::to_string(symbols_.size()) + " symbols");
  }
  std::unordered_set<ProjPoint> seen;
  for (const auto& [label, p] : table) {
    if (!seen.insert(p).second) throw Error(Errc::InvalidConfiguration, "label " + idx(label.i, label.j) + " repeats a point");
  }
  table_ = std::make_shared<const Table>(std::move(table));
}

LabeledConfiguration::LabeledConfiguration(int n, FieldPtr field, std::shared_ptr<const Table> table, std::vector<int> symbols)
    : n_(n), field_(std::move(field)), table_(std::move(table)), symbols_(std::move(symbols)) {}

bool LabeledConfiguration::has_symbol(int s) const noexcept {
  return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

const ProjPoint& LabeledConfiguration::at(int a, int b) const {
  if (a == b || !has_symbol(a) || !has_symbol(b)) throw Error(Errc::BadSymbols, "no point labelled " + idx(a, b));
  return table_->at(Label(a, b));
}

std::vector<Label> LabeledConfiguration::labels() const {
  std::vector<Label> out;
  for (std::size_t x = 0; x < symbols_.size(); ++x) {
    for (std::size_t y = x + 1; y < symbols_.size(); ++y) out.emplace_back(symbols_[x], symbols_[y]);
  }
  return out;
}

std::vector<ProjPoint> LabeledConfiguration::points() const {
  std::vector<ProjPoint> out;
  for (const auto& l : labels()) out.push_back(at(l));
  return out;
}

LabeledConfiguration LabeledConfiguration::restrict(std::vector<int> symbols) const {
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  for (int s : symbols) {
    if (!has_symbol(s)) throw Error(Errc::BadSymbols, "symbol " + std::to_string(s) + " not in configuration");
  }
  return {n_, field_, table_, std::move(symbols)};
}

LabeledConfiguration LabeledConfiguration::relabel(const std::map<int, int>& perm) const {
  std::set<int> image;
  for (int s : symbols_) {
    auto it = perm.find(s);
    if (it == perm.end()) throw Error(Errc::BadSymbols, "permutation misses symbol " + std::to_string(s));
    image.insert(it->second);
  }
  if (image.size() != symbols_.size()) throw Error(Errc::BadSymbols, "relabelling is not injective");
  Table t;
  for (const auto& l : labels()) t.emplace(Label(perm.at(l.i), perm.at(l.j)), at(l));
  return {n_, field_, std::move(t)};
}

// ----------------------------------------------------------- PerspectivePair

PerspectivePair::PerspectivePair(std::vector<ProjPoint> a, std::vector<ProjPoint> b)
    : n_(a.empty() ? -1 : a.front().ambient()), a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) throw Error(Errc::WrongCount, "simplexes of different sizes");
  if (n_ < 2) throw Error(Errc::TooFew, "perspective pairs need dimension at least 2");
  if (!is_simplex(a_)) throw Error(Errc::NotASimplex, "A does not span the space");
  if (!is_simplex(b_)) throw Error(Errc::NotASimplex, "B does not span the space");
  if (b_.front().ambient() != n_) throw Error(Errc::AmbientMismatch, "A and B in different spaces");
  for (const auto& p : a_) {
    if (std::find(b_.begin(), b_.end(), p) != b_.end()) throw Error(Errc::SharedPoint, p.to_string() + " is in A and B");
  }
  faces_a_ = faces_of(a_);
  faces_b_ = faces_of(b_);
  for (std::size_t i = 0; i < faces_a_.size(); ++i) {
    for (std::size_t j = 0; j < faces_b_.size(); ++j) {
      if (faces_a_[i] == faces_b_[j]) {
        throw Error(Errc::SharedFace, "face " + std::to_string(i) + " of A is face " + std::to_string(j) + " of B");
      }
    }
  }
}

// ------------------------------------------------------------------ section

LabeledConfiguration section_arc(const Arc& gamma, const Subspace& h) {
  if (h.field()->order() <= 2) throw Error(Errc::FieldTooSmall, "sections need q > 2");
  if (!h.is_hyperplane()) throw Error(Errc::NotAHyperplane, "dimension " + std::to_string(h.dim()));
  if (gamma.ambient() != h.ambient()) throw Error(Errc::AmbientMismatch, "arc and hyperplane in different spaces");
  const int n = h.ambient() - 1;
  const int s = n + 3;
  if (gamma.size() != static_cast<std::size_t>(s)) {
    throw Error(Errc::WrongCount, "section needs " + std::to_string(s) + " arc points, got " + std::to_string(gamma.size()));
  }
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (h.contains(gamma[i])) throw Error(Errc::PointOnHyperplane, "arc point " + std::to_string(i + 1) + " lies on the hyperplane");
  }
  LabeledConfiguration::Table table;
  std::unordered_set<ProjPoint> seen;
  for (int i = 1; i <= s; ++i) {
    for (int j = i + 1; j <= s; ++j) {
      const Subspace m = meet(line(gamma[static_cast<std::size_t>(i - 1)], gamma[static_cast<std::size_t>(j - 1)]), h);
      if (m.dim() != 0) throw Error(Errc::DegenerateSection, "line " + idx(i, j) + " does not cut the hyperplane in a point");
      ProjPoint local = h.intrinsic(m.point());
      if (!seen.insert(local).second) throw Error(Errc::DegenerateSection, "label " + idx(i, j) + " repeats a point");
      table.emplace(Label(i, j), std::move(local));
    }
  }
  return {n, h.field(), std::move(table)};
}

ExtractedPair extract_perspective_pair(const LabeledConfiguration& config, int a, int b) {
  if (a == b || !config.has_symbol(a) || !config.has_symbol(b)) throw Error(Errc::BadSymbols, "vertex " + idx(a, b));
  if (!config.is_full()) {
    throw Error(Errc::InvalidConfiguration, "perspective simplexes need all n+3 symbols; use replicate on sub-tables");
  }
  std::vector<ProjPoint> pa, pb;
  std::vector<int> syms;
  for (int s : config.symbols()) {
    if (s == a || s == b) continue;
    pa.push_back(config.at(a, s));
    pb.push_back(config.at(b, s));
    syms.push_back(s);
  }
  return {PerspectivePair(std::move(pa), std::move(pb)), config.at(a, b), std::move(syms)};
}

// --------------------------------------------------------- perspective pair

ProjPoint find_vertex(const PerspectivePair& pair) {
  const int m = static_cast<int>(pair.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) edge_meet(pair, i, j);
  }
  const Subspace v = meet(line(pair.a()[0], pair.b()[0]), line(pair.a()[1], pair.b()[1]));
  if (v.dim() != 0) throw Error(Errc::NoCommonVertex, "lines A_0B_0 and A_1B_1 do not meet in a point");
  ProjPoint vertex = v.point();
  check_vertex_on_lines(pair, vertex);
  for (std::size_t i = 0; i < pair.size(); ++i) {
    if (vertex == pair.a()[i] || vertex == pair.b()[i]) {
      throw Error(Errc::InvalidConfiguration, "vertex coincides with a simplex point");
    }
  }
  return vertex;
}

std::map<IndexPair, ProjPoint> edge_intersections(const PerspectivePair& pair) {
  const int m = static_cast<int>(pair.size());
  std::map<IndexPair, ProjPoint> out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) out.emplace(IndexPair{i, j}, edge_meet(pair, i, j));
  }
  const ProjPoint v = find_vertex(pair);
  std::unordered_set<ProjPoint> seen;
  for (const auto& [ij, p] : out) {
    if (!seen.insert(p).second) throw Error(Errc::TheoremViolation, "edge intersections " + idx(ij.first, ij.second) + " repeat");
    if (p == v) throw Error(Errc::TheoremViolation, "edge intersection equals the vertex");
    for (std::size_t k = 0; k < pair.size(); ++k) {
      if (p == pair.a()[k] || p == pair.b()[k]) throw Error(Errc::TheoremViolation, "edge intersection is a simplex point");
    }
  }
  return out;
}

Subspace axis_hyperplane(const PerspectivePair& pair) {
  std::vector<ProjPoint> pts;
  for (const auto& [ij, p] : edge_intersections(pair)) pts.push_back(p);
  Subspace axis = span(pts);
  const int n = pair.ambient();
  if (axis.dim() != n - 1) throw Error(Errc::TheoremViolation, "edge intersections span dimension " + std::to_string(axis.dim()));
  for (std::size_t k = 0; k < pair.size(); ++k) {
    const Subspace fm = meet(pair.face_a(k), pair.face_b(k));
    if (fm.dim() != n - 2 || !axis.contains(fm)) {
      throw Error(Errc::TheoremViolation, "face pair " + std::to_string(k) + " does not meet in an (n-2)-space of the axis");
    }
  }
  return axis;
}

std::vector<TSpaceMeet> tspace_intersections(const PerspectivePair& pair, int t) {
  const int n = pair.ambient();
  if (t < 1 || t > n - 1) throw Error(Errc::BadT, "t = " + std::to_string(t) + " outside 1.." + std::to_string(n - 1));
  const Subspace axis = axis_hyperplane(pair);
  std::vector<TSpaceMeet> out;
  for_each_combination(static_cast<int>(pair.size()), t + 1, [&](const std::vector<int>& j) {
    Subspace m = meet(span_of(pair.a(), j), span_of(pair.b(), j));
    if (m.dim() != t - 1 || !axis.contains(m)) {
      throw Error(Errc::TheoremViolation, "corresponding " + std::to_string(t) + "-spaces meet in dimension " + std::to_string(m.dim()));
    }
    out.push_back({j, std::move(m)});
    return true;
  });
  return out;
}

std::vector<Subspace> face_pair_joins(const PerspectivePair& pair) {
  const int n = pair.ambient();
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    for (std::size_t j = i + 1; j < pair.size(); ++j) {
      Subspace s = join(meet(pair.face_a(i), pair.face_a(j)), meet(pair.face_b(i), pair.face_b(j)));
      if (s.dim() != n - 1) throw Error(Errc::TheoremViolation, "face pair join has dimension " + std::to_string(s.dim()));
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::optional<Subspace> perspective_hyperplane(const PerspectivePair& pair) {
  const int n = pair.ambient();
  const int m = static_cast<int>(pair.size());
  std::vector<Subspace> meets;
  for (int t = 1; t <= n - 1; ++t) {
    const bool ok = for_each_combination(m, t + 1, [&](const std::vector<int>& j) {
      Subspace s = meet(span_of(pair.a(), j), span_of(pair.b(), j));
      if (s.dim() != t - 1) return false;
      meets.push_back(std::move(s));
      return true;
    });
    if (!ok) return std::nullopt;
  }
  Subspace all = join(meets);
  if (all.dim() != n - 1) return std::nullopt;
  return all;
}

PerspectivePair dual_pair(const PerspectivePair& pair) {
  std::vector<ProjPoint> da, db;
  for (std::size_t k = 0; k < pair.size(); ++k) {
    da.push_back(dual_coordinates(pair.face_a(k)));
    db.push_back(dual_coordinates(pair.face_b(k)));
  }
  return {std::move(da), std::move(db)};
}

ProjPoint converse_vertex(const PerspectivePair& pair) {
  const auto axis = perspective_hyperplane(pair);
  if (!axis) throw Error(Errc::NoCommonVertex, "pair is not in perspective from a hyperplane");
  const PerspectivePair dual = dual_pair(pair);
  if (find_vertex(dual) != dual_coordinates(*axis)) {
    throw Error(Errc::TheoremViolation, "dual vertex differs from the axis");
  }
  const Subspace dual_axis = axis_hyperplane(dual);
  ProjPoint v = dual_coordinates(dual_axis);
  check_vertex_on_lines(pair, v);
  return v;
}

// --------------------------------------------------------------------- lift

Arc lift_to_arc(const PerspectivePair& pair, const ProjPoint& vertex, const Subspace& h, Rng* rng) {
  const int n = pair.ambient();
  if (!h.is_hyperplane()) throw Error(Errc::NotAHyperplane, "dimension " + std::to_string(h.dim()));
  if (h.dim() != n) throw Error(Errc::AmbientMismatch, "h must be a copy of PG(" + std::to_string(n) + ")");
  if (vertex.ambient() != n) throw Error(Errc::AmbientMismatch, "vertex not in the pair's space");
  for (std::size_t k = 0; k < pair.size(); ++k) {
    if (pair.face_a(k).contains(vertex) || pair.face_b(k).contains(vertex)) {
      throw Error(Errc::SharedFace, "vertex lies on face " + std::to_string(k));
    }
  }
  check_vertex_on_lines(pair, vertex);

  const FieldPtr& field = h.field();
  const ProjPoint v = h.embed(vertex);

  std::optional<ProjPoint> off;
  if (rng) {
    do {
      off = random_point(field, h.ambient(), *rng);
    } while (h.contains(*off));
  } else {
    for (const auto& p : all_points(field, h.ambient())) {
      if (!h.contains(p)) {
        off = p;
        break;
      }
    }
  }
  const Subspace l = line(v, *off);
  std::vector<ProjPoint> candidates;
  for (const auto& p : l.points()) {
    if (p != v && !h.contains(p)) candidates.push_back(p);
  }
  std::size_t c1 = 0, c2 = 1;
  if (rng) {
    c1 = rng->below(candidates.size());
    c2 = rng->below(candidates.size() - 1);
    if (c2 >= c1) ++c2;
  }
  const ProjPoint p1 = candidates.at(c1);
  const ProjPoint p2 = candidates.at(c2);

  std::vector<ProjPoint> pts{p1, p2};
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const Subspace m = meet(line(p1, h.embed(pair.a()[i])), line(p2, h.embed(pair.b()[i])));
    if (m.dim() != 0) throw Error(Errc::TheoremViolation, "lines 1A_i and 2B_i do not meet in a point");
    pts.push_back(m.point());
  }
  for (const auto& p : pts) {
    if (h.contains(p)) throw Error(Errc::TheoremViolation, "lifted point lies on h");
  }
  if (!is_arc(pts)) throw Error(Errc::TheoremViolation, "lifted points do not form an arc");
  return Arc(std::move(pts));
}

ConwayLift conway_lift(const PerspectivePair& pair, const Subspace& h, const ProjPoint& w) {
  const int n = pair.ambient();
  if (!h.is_hyperplane() || h.dim() != n) throw Error(Errc::NotAHyperplane, "h must be a hyperplane of PG(" + std::to_string(n + 1) + ")");
  if (w.ambient() != h.ambient()) throw Error(Errc::AmbientMismatch, "w not in the ambient space of h");
  if (h.contains(w)) throw Error(Errc::WInH, "w lies on h");

  const ProjPoint v = h.embed(find_vertex(pair));
  std::vector<ProjPoint> a, b;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    a.push_back(h.embed(pair.a()[i]));
    b.push_back(h.embed(pair.b()[i]));
  }
  if (span(std::vector<ProjPoint>{w, a[1], b[1]}).dim() < 2) throw Error(Errc::DegenerateLift, "w, A_2, B_2 are collinear");

  std::optional<ProjPoint> a_star;
  for (const auto& p : line(w, a[1]).points()) {
    if (p != w && p != a[1]) {
      a_star = p;
      break;
    }
  }
  const Subspace bm = meet(line(v, *a_star), line(w, b[1]));
  if (bm.dim() != 0) throw Error(Errc::DegenerateLift, "lines VA_2* and wB_2 do not meet in a point");
  const ProjPoint b_star = bm.point();

  a[1] = *a_star;
  b[1] = b_star;
  Subspace h1 = span(a);
  Subspace h2 = span(b);
  if (h1.dim() != n || h2.dim() != n) throw Error(Errc::TheoremViolation, "lifted simplexes do not span hyperplanes");
  if (h1 == h2) throw Error(Errc::TheoremViolation, "lifted simplexes lie in the same hyperplane");
  Subspace lifted = meet(h1, h2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Subspace e = meet(line(a[i], a[j]), line(b[i], b[j]));
      if (e.dim() != 0 || !lifted.contains(e)) throw Error(Errc::TheoremViolation, "lifted edge meet outside h1 n h2");
    }
  }
  const Subspace projected = meet(join(Subspace(w), lifted), h);
  if (projected.dim() != n - 1) throw Error(Errc::TheoremViolation, "projected axis has dimension " + std::to_string(projected.dim()));
  return {*a_star, b_star, std::move(h1), std::move(h2), std::move(lifted), h.intrinsic(projected)};
}

Subspace conway_lift_axis(const PerspectivePair& pair, const Subspace& h, const ProjPoint& w) {
  return conway_lift(pair, h, w).axis;
}

// ------------------------------------------------------------------ sampling

Arc random_arc_off(const Subspace& h, std::size_t m, Rng& rng) {
  const FieldPtr& field = h.field();
  const int n = h.ambient();
  const auto full = static_cast<std::size_t>(n) + 1;
  constexpr int kTriesPerPoint = 400;
  while (true) {
    std::vector<ProjPoint> pts;
    bool stuck = false;
    while (pts.size() < m && !stuck) {
      stuck = true;
      for (int attempt = 0; attempt < kTriesPerPoint; ++attempt) {
        ProjPoint p = random_point(field, n, rng);
        if (h.contains(p)) continue;
        pts.push_back(p);
        const bool ok = pts.size() <= full ? span(pts).dim() + 1 == static_cast<int>(pts.size()) : is_arc(pts);
        if (ok) {
          stuck = false;
          break;
        }
        pts.pop_back();
      }
    }
    if (!stuck) return Arc(std::move(pts));
  }
}

LabeledConfiguration random_sectioned_config(int n, const FieldPtr& field, Rng& rng) {
  if (field->order() <= 2) throw Error(Errc::FieldTooSmall, "sections need q > 2");
  const Subspace h = random_hyperplane(field, n + 1, rng);
  return section_arc(random_arc_off(h, static_cast<std::size_t>(n) + 3, rng), h);
}

ExtractedPair random_sectioned_pair(int n, const FieldPtr& field, Rng& rng) {
  const auto config = random_sectioned_config(n, field, rng);
  const auto labels = config.labels();
  const Label l = labels[rng.below(labels.size())];
  return extract_perspective_pair(config, l.i, l.j);
}

}  // namespace pgd
