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

#include "pgd/config.hpp"

#include <algorithm>
#include <set>

#include "pgd/combinatorics.hpp"

namespace pgd {

namespace {

Subspace line(const ProjPoint& a, const ProjPoint& b) { return join(Subspace(a), Subspace(b)); }

std::string lbl(const Label& l) { return "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")"; }

std::vector<int> others(const std::vector<int>& symbols, int a, int b) {
  std::vector<int> out;
  for (int s : symbols) {
    if (s != a && s != b) out.push_back(s);
  }
  return out;
}

Subspace span_of_labels(const LabeledConfiguration& config, const std::vector<int>& syms) {
  std::vector<ProjPoint> pts;
  for (std::size_t x = 0; x < syms.size(); ++x) {
    for (std::size_t y = x + 1; y < syms.size(); ++y) pts.push_back(config.at(syms[x], syms[y]));
  }
  return span(pts);
}

std::uint64_t choose2(std::uint64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

}  // namespace

PartitionIdentity vertex_partition(int n) {
  const auto u = static_cast<std::uint64_t>(n);
  return {choose2(u + 3), 2 * (u + 1), 1, choose2(u + 1)};
}

PartitionIdentity replication_partition(int n) {
  const auto u = static_cast<std::uint64_t>(n);
  return {choose2(u + 1), 2 * (u - 1), 1, choose2(u - 1)};
}

SemiSimplexPair::SemiSimplexPair(Subspace w, std::vector<ProjPoint> c, std::vector<ProjPoint> d, ProjPoint vertex)
    : w_(std::move(w)), c_(std::move(c)), d_(std::move(d)), v_(std::move(vertex)) {
  if (c_.size() != d_.size() || c_.empty()) throw Error(Errc::InvalidConfiguration, "semi-simplexes of different sizes");
  for (const auto* s : {&c_, &d_}) {
    const Subspace sp = span(*s);
    if (sp.dim() != w_.dim() - 1 || !w_.contains(sp)) {
      throw Error(Errc::InvalidConfiguration, "semi-simplex spans dimension " + std::to_string(sp.dim()) +
                                                  " inside a space of dimension " + std::to_string(w_.dim()));
    }
  }
  if (!w_.contains(v_)) throw Error(Errc::InvalidConfiguration, "vertex outside the space");
}

IncidenceReport symbol_incidence_report(const LabeledConfiguration& config) {
  IncidenceReport rep;
  const auto labels = config.labels();
  const auto points = config.points();
  const std::size_t m = labels.size();
  auto is_triangle = [](const Label& x, const Label& y, const Label& z) {
    std::set<int> s{x.i, x.j, y.i, y.j, z.i, z.j};
    return s.size() == 3;
  };
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x + 1; y < m; ++y) {
      const Subspace l = line(points[x], points[y]);
      for (std::size_t z = y + 1; z < m; ++z) {
        const bool triangle = is_triangle(labels[x], labels[y], labels[z]);
        const bool collinear = l.contains(points[z]);
        if (triangle) {
          ++rep.symbol_lines;
          if (!collinear) ++rep.forced_failures;
          continue;
        }
        if (!collinear) continue;
        // Two of the labels share a symbol, so the line is a symbol line; the
        // third label must then avoid its symbols entirely.
        const std::array<Label, 3> t{labels[x], labels[y], labels[z]};
        bool forced_violation = false;
        for (int u = 0; u < 3; ++u) {
          const Label& p = t[static_cast<std::size_t>(u)];
          const Label& q = t[static_cast<std::size_t>((u + 1) % 3)];
          const Label& r = t[static_cast<std::size_t>((u + 2) % 3)];
          if (p.shares_symbol(q) && (r.has(p.i) || r.has(p.j) || r.has(q.i) || r.has(q.j))) forced_violation = true;
        }
        if (forced_violation) {
          ++rep.forced_failures;
        } else {
          rep.accidental.push_back(t);
        }
      }
    }
  }
  return rep;
}

bool verify_symbol_incidence(const LabeledConfiguration& config) { return symbol_incidence_report(config).strict(); }

SubstructureCounts substructure_counts(const LabeledConfiguration& config) {
  SubstructureCounts out;
  out.consistent = true;
  const auto& syms = config.symbols();
  const int n = config.ambient();
  for (int k = 2; k <= n + 1 && k <= static_cast<int>(syms.size()); ++k) {
    std::set<std::vector<Code>> seen;  // canonical bases
    std::uint64_t subsets = 0;
    for_each_combination(static_cast<int>(syms.size()), k, [&](const std::vector<int>& idx) {
      std::vector<int> chosen;
      for (int i : idx) chosen.push_back(syms[static_cast<std::size_t>(i)]);
      const Subspace s = span_of_labels(config, chosen);
      ++subsets;
      if (s.dim() != k - 2) out.consistent = false;
      seen.insert(s.basis().data);
      ++out.by_dimension[s.dim()];
      return true;
    });
    if (seen.size() != subsets) out.consistent = false;
  }
  return out;
}

SweepReport vertex_sweep(const LabeledConfiguration& config) {
  SweepReport rep;
  rep.n = config.ambient();
  rep.points = config.size();
  rep.identity = vertex_partition(rep.n);
  if (rep.identity.total != rep.points) rep.identity.total = rep.points;  // identity then fails visibly
  for (const auto& lab : config.labels()) {
    VertexCheck check{lab, false, {}};
    try {
      const auto ex = extract_perspective_pair(config, lab.i, lab.j);
      const ProjPoint v = find_vertex(ex.pair);
      if (v != config.at(lab)) throw Error(Errc::TheoremViolation, "vertex is not " + lbl(lab));
      const auto edges = edge_intersections(ex.pair);
      for (const auto& [ij, p] : edges) {
        const Label expect(ex.symbols[static_cast<std::size_t>(ij.first)], ex.symbols[static_cast<std::size_t>(ij.second)]);
        if (p != config.at(expect)) throw Error(Errc::TheoremViolation, "edge meet is not " + lbl(expect));
      }
      axis_hyperplane(ex.pair);
      // A, B, V and the edge meets partition the table.
      std::set<ProjPoint> parts(ex.pair.a().begin(), ex.pair.a().end());
      parts.insert(ex.pair.b().begin(), ex.pair.b().end());
      parts.insert(v);
      for (const auto& [ij, p] : edges) parts.insert(p);
      const std::size_t sum = 2 * ex.pair.size() + 1 + edges.size();
      if (parts.size() != sum || sum != config.size()) throw Error(Errc::TheoremViolation, "parts do not partition the table");
      check.passed = true;
    } catch (const Error& e) {
      check.failure = e.what();
    }
    rep.passed += check.passed;
    rep.vertices.push_back(std::move(check));
  }
  return rep;
}

Replication replicate(const LabeledConfiguration& table, const Label& vertex) {
  const auto& syms = table.symbols();
  const std::size_t s = syms.size();
  if (s < 3) throw Error(Errc::TooFewSymbols, "replication needs at least 3 symbols, got " + std::to_string(s));
  if (vertex.i == vertex.j || !table.has_symbol(vertex.i) || !table.has_symbol(vertex.j)) {
    throw Error(Errc::BadSymbols, "vertex " + lbl(vertex));
  }
  const Subspace w = span(table.points());
  if (w.dim() != static_cast<int>(s) - 2) {
    throw Error(Errc::InvalidConfiguration, "table over " + std::to_string(s) + " symbols spans dimension " +
                                                std::to_string(w.dim()) + ", expected " + std::to_string(s - 2));
  }
  const auto rest = others(syms, vertex.i, vertex.j);
  std::vector<ProjPoint> c, d;
  for (int i : rest) {
    c.push_back(table.at(vertex.i, i));
    d.push_back(table.at(vertex.j, i));
  }
  const ProjPoint v = table.at(vertex);
  SemiSimplexPair pair(w, c, d, v);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!line(c[k], d[k]).contains(v)) throw Error(Errc::TheoremViolation, "line C_kD_k misses the vertex");
  }
  for (std::size_t x = 0; x < rest.size(); ++x) {
    for (std::size_t y = x + 1; y < rest.size(); ++y) {
      const Subspace m = meet(line(c[x], c[y]), line(d[x], d[y]));
      if (m.dim() != 0 || m.point() != table.at(rest[x], rest[y])) {
        throw Error(Errc::TheoremViolation, "edge meet is not " + lbl(Label(rest[x], rest[y])));
      }
    }
  }
  LabeledConfiguration residual = table.restrict(rest);
  PartitionIdentity part{table.size(), 2 * c.size(), 1, residual.size()};
  std::set<ProjPoint> parts(c.begin(), c.end());
  parts.insert(d.begin(), d.end());
  parts.insert(v);
  for (const auto& p : residual.points()) parts.insert(p);
  if (parts.size() != table.size()) throw Error(Errc::TheoremViolation, "parts do not partition the table");
  return {std::move(pair), std::move(residual), part};
}

std::vector<TraceStep> replication_trace(const LabeledConfiguration& config) {
  if (!config.is_full()) throw Error(Errc::InvalidConfiguration, "trace starts from a full configuration");
  std::vector<TraceStep> trace;
  const auto& syms = config.symbols();
  const auto ex = extract_perspective_pair(config, syms[0], syms[1]);
  LabeledConfiguration current = config.restrict(others(syms, syms[0], syms[1]));
  trace.push_back({syms.size(), config.ambient(), Label(syms[0], syms[1]), ex.pair.size(), current.size(),
                   vertex_partition(config.ambient()).holds() && 2 * ex.pair.size() + 1 + current.size() == config.size()});
  while (current.symbol_count() >= 3) {
    const auto& cs = current.symbols();
    const Label v(cs[0], cs[1]);
    const int dim = span(current.points()).dim();
    auto rep = replicate(current, v);
    trace.push_back({cs.size(), dim, v, rep.pair.c().size(), rep.residual.size(), rep.partition.holds()});
    current = rep.residual;
  }
  return trace;
}

TripleReport triple_perspective_axis(const LabeledConfiguration& config) {
  const int n = config.ambient();
  if (!config.is_full() || n < 2 || config.symbols().front() != 1 || config.symbols().back() != n + 3) {
    throw Error(Errc::InvalidConfiguration, "needs a full configuration on symbols 1..n+3 with n >= 2");
  }
  std::array<std::vector<ProjPoint>, 3> semi;
  for (int r = 0; r < 3; ++r) {
    for (int i = 4; i <= n + 3; ++i) semi[static_cast<std::size_t>(r)].push_back(config.at(r + 1, i));
  }
  std::vector<ProjPoint> zs;
  for (int i = 4; i <= n + 3; ++i) {
    for (int j = i + 1; j <= n + 3; ++j) zs.push_back(config.at(i, j));
  }
  TripleReport rep{span(zs), {span(semi[0]), span(semi[1]), span(semi[2])}};
  for (const auto& sp : rep.spans) {
    if (sp.dim() != n - 1) throw Error(Errc::InvalidConfiguration, "semi-simplex does not span a hyperplane");
  }
  rep.vertices_collinear = line(config.at(1, 2), config.at(1, 3)).contains(config.at(2, 3));

  rep.edge_sets_in_axis = rep.axis.dim() == n - 2;
  rep.axis_is_common_meet = true;
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
  for (auto [x, y] : pairs) {
    const auto& px = semi[static_cast<std::size_t>(x)];
    const auto& py = semi[static_cast<std::size_t>(y)];
    const ProjPoint v = config.at(x + 1, y + 1);
    for (std::size_t k = 0; k < px.size(); ++k) {
      if (!line(px[k], py[k]).contains(v)) rep.edge_sets_in_axis = false;
    }
    for (std::size_t k = 0; k < px.size(); ++k) {
      for (std::size_t l = k + 1; l < px.size(); ++l) {
        const Subspace m = meet(line(px[k], px[l]), line(py[k], py[l]));
        if (m.dim() != 0 || !rep.axis.contains(m)) rep.edge_sets_in_axis = false;
      }
    }
    if (meet(rep.spans[static_cast<std::size_t>(x)], rep.spans[static_cast<std::size_t>(y)]) != rep.axis) {
      rep.axis_is_common_meet = false;
    }
  }
  std::vector<ProjPoint> row;
  for (int j = 5; j <= n + 3; ++j) row.push_back(config.at(4, j));
  rep.axis_from_first_row = span(row) == rep.axis;
  return rep;
}

AxisStructure axis_structure(const LabeledConfiguration& config, int a, int b) {
  if (a == b || !config.has_symbol(a) || !config.has_symbol(b)) throw Error(Errc::BadSymbols, "vertex " + lbl(Label(a, b)));
  const auto rest = others(config.symbols(), a, b);
  const LabeledConfiguration y = config.restrict(rest);
  const int m = static_cast<int>(rest.size());
  auto subspaces = [&](int k) {
    std::vector<Subspace> out;
    if (k > m) return out;
    for_each_combination(m, k, [&](const std::vector<int>& idx) {
      std::vector<int> chosen;
      for (int i : idx) chosen.push_back(rest[static_cast<std::size_t>(i)]);
      out.push_back(span_of_labels(y, chosen));
      return true;
    });
    return out;
  };
  const auto lines = subspaces(3);
  const auto planes = subspaces(4);
  AxisStructure out;
  out.lines = lines.size();
  out.planes = planes.size();
  for (const auto& l : lines) {
    out.planes_per_line.push_back(static_cast<std::size_t>(
        std::count_if(planes.begin(), planes.end(), [&](const Subspace& p) { return p.contains(l); })));
  }
  for (const auto& p : y.points()) {
    out.lines_per_point.push_back(static_cast<std::size_t>(
        std::count_if(lines.begin(), lines.end(), [&](const Subspace& l) { return l.contains(p); })));
    out.planes_per_point.push_back(static_cast<std::size_t>(
        std::count_if(planes.begin(), planes.end(), [&](const Subspace& s) { return s.contains(p); })));
  }
  return out;
}

}  // namespace pgd
