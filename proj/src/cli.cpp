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

#include "pgd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pgd/combinatorics.hpp"
#include "pgd/io.hpp"

namespace pgd::cli {

namespace {

using io::Json;

struct Options {
  int n = 3;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::vector<Code> modulus;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  std::uint64_t budget = 1'000'000'000;
  bool verbose = false;
  std::string input;
  std::string kind = "frames";
  std::size_t m = 0;
  unsigned threads = 0;
  std::vector<Code> avoid;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldPtr field_of(const Options& o) {
  if (o.p == 0) throw UsageError("--p is required");
  return Field::make(o.p, o.k, o.modulus);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("--out: cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_json(const Options& o, const char* cmd) {
  if (o.format != "json") throw UsageError(std::string("--format ") + o.format + " is not available for " + cmd);
}

Subspace last_coordinate_hyperplane(const FieldPtr& f, int n) {
  std::vector<Code> d(static_cast<std::size_t>(n) + 1, 0);
  d.back() = 1;
  return hyperplane_from_dual(f, d);
}

ProjPoint first_point_off(const Subspace& h) {
  for (const auto& p : all_points(h.field(), h.ambient())) {
    if (!h.contains(p)) return p;
  }
  throw Error(Errc::TheoremViolation, "hyperplane contains every point");
}

// ------------------------------------------------------------------ checks

struct Check {
  std::string name;
  bool passed = false;
  bool gating = true;
  std::string detail;
};

template <class Fn>
Check run_check(std::string name, Fn&& fn, bool gating = true) {
  Check c{std::move(name), false, gating, {}};
  try {
    c.detail = fn();
    c.passed = true;
  } catch (const Error& e) {
    c.detail = e.what();
  }
  return c;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::TheoremViolation, what);
}

std::vector<Check> pair_checks(const PerspectivePair& pair, const std::optional<ProjPoint>& given_vertex,
                               const Subspace& h) {
  std::vector<Check> out;
  const int n = pair.ambient();
  std::optional<ProjPoint> v;
  out.push_back(run_check("vertex", [&] {
    v = find_vertex(pair);
    if (given_vertex) require(*v == *given_vertex, "vertex differs from the one given");
    return v->to_string();
  }));
  out.push_back(run_check("edge_intersections", [&] {
    const auto e = edge_intersections(pair);
    require(e.size() == binomial(static_cast<std::uint64_t>(n) + 1, 2), "wrong number of edge intersections");
    return std::to_string(e.size()) + " distinct points";
  }));
  out.push_back(run_check("axis", [&] { return axis_hyperplane(pair).to_string(); }));
  out.push_back(run_check("tspace_meets", [&] {
    std::size_t total = 0;
    for (int t = 1; t <= n - 1; ++t) total += tspace_intersections(pair, t).size();
    return std::to_string(total) + " corresponding t-space meets";
  }));
  out.push_back(run_check("face_pair_joins", [&] {
    return std::to_string(face_pair_joins(pair).size()) + " hyperplanes";
  }));
  out.push_back(run_check("converse", [&] {
    const auto hyper = perspective_hyperplane(pair);
    require(hyper.has_value(), "not in perspective from a hyperplane");
    const ProjPoint cv = converse_vertex(pair);
    if (v) require(cv == *v, "dual vertex differs from the vertex");
    return cv.to_string();
  }));
  out.push_back(run_check("lift_round_trip", [&] {
    require(v.has_value(), "no vertex");
    const Arc arc = lift_to_arc(pair, *v, h);
    const auto back = section_arc(arc, h);
    require(back.at(1, 2) == *v, "vertex not reproduced");
    for (std::size_t i = 0; i < pair.size(); ++i) {
      require(back.at(1, static_cast<int>(i) + 3) == pair.a()[i], "A not reproduced");
      require(back.at(2, static_cast<int>(i) + 3) == pair.b()[i], "B not reproduced");
    }
    return std::to_string(arc.size()) + "-arc";
  }));
  out.push_back(run_check("conway_lift_axis", [&] {
    const ProjPoint w = first_point_off(h);
    require(conway_lift_axis(pair, h, w) == axis_hyperplane(pair), "projected axis differs");
    return std::string("agrees with the axis");
  }));
  return out;
}

Json checks_json(const std::vector<Check>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) {
    a.push_back({{"name", c.name}, {"passed", c.passed}, {"gating", c.gating}, {"detail", c.detail}});
  }
  return a;
}

bool all_gating_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (c.gating && !c.passed) return false;
  }
  return true;
}

// --------------------------------------------------------------- commands

int cmd_demo(const Options& o, std::ostream& out) {
  const FieldPtr f = field_of(o);
  if (o.n < 2) throw UsageError("--n must be at least 2");
  if (f->order() <= 2) throw Error(Errc::FieldTooSmall, "the construction needs q > 2");
  Rng rng(o.seed);
  const Subspace h = random_hyperplane(f, o.n + 1, rng);
  const Arc frame = frame_off_hyperplane(h);
  const auto config = section_arc(frame, h);
  const auto sweep = vertex_sweep(config);
  const auto& id = sweep.identity;
  if (o.format == "json") {
    Json j;
    j["field"] = io::to_json(f);
    j["n"] = o.n;
    j["seed"] = o.seed;
    j["hyperplane"] = io::to_json(dual_coordinates(h));
    j["arc"] = io::to_json(frame, h);
    j["config"] = io::to_json(config);
    j["sweep"] = io::to_json(sweep);
    emit(o, dump(j), out);
  } else if (o.format == "text") {
    std::ostringstream os;
    os << "PG(" << o.n << "," << f->order() << ") section of a frame of PG(" << o.n + 1 << "," << f->order()
       << "), seed " << o.seed << "\n";
    os << sweep.points << " points, " << sweep.passed << "/" << sweep.vertices.size() << " vertices pass, identity "
       << id.total << " = " << id.simplex_points << "+" << id.vertex << "+" << id.residual << "\n";
    for (const auto& v : sweep.vertices) {
      if (!v.passed) os << "vertex (" << v.label.i << "," << v.label.j << ") failed: " << v.failure << "\n";
    }
    emit(o, os.str(), out);
  } else {
    throw UsageError("--format must be text or json for demo");
  }
  return sweep.all_passed() ? kOk : kVerificationFailed;
}

int cmd_section(const Options& o, std::ostream& out) {
  require_json(o, "section");
  const auto file = io::arc_from_json(io::read_file(o.input));
  if (!file.hyperplane) throw UsageError("arc file has no \"hyperplane\"");
  emit(o, dump(io::to_json(section_arc(file.arc, *file.hyperplane))), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_json(o, "verify");
  const Json doc = io::read_file(o.input);
  Json rep;
  std::vector<Check> checks;
  if (doc.contains("A")) {
    const auto file = io::pair_from_json(doc);
    const Subspace h = file.hyperplane ? *file.hyperplane : last_coordinate_hyperplane(file.pair.field(), file.pair.ambient() + 1);
    rep["kind"] = "pair";
    rep["n"] = file.pair.ambient();
    checks = pair_checks(file.pair, file.vertex, h);
  } else {
    const auto config = io::config_from_json(doc);
    const int n = config.ambient();
    if (!config.is_full()) throw Error(Errc::InvalidConfiguration, "verify needs all n+3 symbols");
    rep["kind"] = "config";
    rep["n"] = n;
    const auto inc = symbol_incidence_report(config);
    rep["symbol_incidence"] = io::to_json(inc);
    checks.push_back(run_check("symbol_incidence_forced", [&] {
      require(inc.forced_ok(), std::to_string(inc.forced_failures) + " forced incidences fail");
      return std::to_string(inc.symbol_lines) + " symbol lines";
    }));
    checks.push_back(run_check("symbol_incidence_strict", [&] {
      require(inc.strict(), std::to_string(inc.accidental.size()) + " accidental collinear triples");
      return std::string("no extra collinearities");
    }, false));
    const auto counts = substructure_counts(config);
    rep["substructures"] = io::to_json(counts);
    checks.push_back(run_check("substructure_counts", [&] {
      require(counts.consistent, "symbol subsets do not span distinct subspaces of the expected dimension");
      return std::string("consistent");
    }));
    const auto sweep = vertex_sweep(config);
    rep["sweep"] = io::to_json(sweep);
    checks.push_back(run_check("vertex_sweep", [&] {
      require(sweep.all_passed(), std::to_string(sweep.passed) + "/" + std::to_string(sweep.vertices.size()) + " vertices pass");
      return std::to_string(sweep.passed) + "/" + std::to_string(sweep.vertices.size()) + " vertices pass";
    }));
    std::vector<TraceStep> trace;
    checks.push_back(run_check("replication_trace", [&] {
      trace = replication_trace(config);
      for (const auto& s : trace) require(s.partition_holds, "partition fails");
      return std::to_string(trace.size()) + " steps";
    }));
    rep["trace"] = io::to_json(trace);
    const auto& syms = config.symbols();
    if (syms.front() == 1 && syms.back() == n + 3) {
      std::optional<TripleReport> triple;
      checks.push_back(run_check("triple_perspective", [&] {
        triple = triple_perspective_axis(config);
        require(triple->ok(), "semi-simplexes do not share the axis");
        return triple->axis.to_string();
      }));
      if (triple) rep["triple"] = io::to_json(*triple);
    }
    // Pair-level theorems at every vertex.
    const Subspace h = last_coordinate_hyperplane(config.field(), n + 1);
    std::size_t vertices = 0, passed = 0;
    std::string first_failure;
    for (const auto& l : config.labels()) {
      ++vertices;
      try {
        const auto ex = extract_perspective_pair(config, l.i, l.j);
        bool ok = true;
        for (const auto& c : pair_checks(ex.pair, ex.vertex, h)) {
          if (!c.passed && ok) {
            ok = false;
            if (first_failure.empty()) first_failure = "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ") " + c.name + ": " + c.detail;
          }
        }
        passed += ok;
      } catch (const Error& e) {
        if (first_failure.empty()) first_failure = e.what();
      }
    }
    checks.push_back(run_check("pair_theorems_all_vertices", [&] {
      require(passed == vertices, first_failure);
      return std::to_string(passed) + "/" + std::to_string(vertices) + " vertices";
    }));
  }
  const bool ok = all_gating_pass(checks);
  rep["checks"] = checks_json(checks);
  rep["all_passed"] = ok;
  emit(o, dump(rep), out);
  return ok ? kOk : kVerificationFailed;
}

int cmd_lift(const Options& o, std::ostream& out) {
  require_json(o, "lift");
  const auto file = io::pair_from_json(io::read_file(o.input));
  const Subspace h = file.hyperplane ? *file.hyperplane : last_coordinate_hyperplane(file.pair.field(), file.pair.ambient() + 1);
  const ProjPoint v = file.vertex ? *file.vertex : find_vertex(file.pair);
  emit(o, dump(io::to_json(lift_to_arc(file.pair, v, h), h)), out);
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  EnumJob job;
  if (o.kind == "arcs") {
    job.kind = EnumKind::Arcs;
  } else if (o.kind == "frames") {
    job.kind = EnumKind::Frames;
  } else if (o.kind == "sectioned") {
    job.kind = EnumKind::SectionedConfigs;
  } else {
    throw UsageError("--kind must be arcs, frames or sectioned");
  }
  job.n = o.n;
  job.field = field_of(o);
  job.m = o.m;
  job.budget = o.budget;
  job.threads = o.threads;
  const int dim = job.kind == EnumKind::SectionedConfigs ? o.n + 1 : o.n;
  if (!o.avoid.empty()) {
    if (o.avoid.size() != static_cast<std::size_t>(dim) + 1) throw UsageError("--avoid needs " + std::to_string(dim + 1) + " coefficients");
    for (Code c : o.avoid) {
      if (c >= job.field->order()) throw UsageError("--avoid coefficient out of range");
    }
    job.avoid = hyperplane_from_dual(job.field, o.avoid);
  } else if (job.kind == EnumKind::SectionedConfigs) {
    job.avoid = last_coordinate_hyperplane(job.field, dim);
  }
  if (job.kind == EnumKind::Arcs && job.m == 0) throw UsageError("--m is required for --kind arcs");
  const auto r = run_enumeration(job);
  if (o.verbose) err << "enumerate: " << r.nodes << " nodes in " << r.wall_ms << " ms\n";
  if (o.format == "csv") {
    std::ostringstream os;
    os << "kind,n,q,m,raw,quotient,nodes\n"
       << enum_kind_name(job.kind) << ',' << job.n << ',' << job.field->order() << ',' << r.m << ',' << r.raw << ','
       << r.quotient << ',' << r.nodes << '\n';
    emit(o, os.str(), out);
  } else {
    require_json(o, "enumerate");
    emit(o, dump(io::to_json(job, r, o.verbose)), out);
  }
  return r.sample_failures == 0 ? kOk : kVerificationFailed;
}

int cmd_export(const Options& o, std::ostream& out) {
  const auto config = io::config_from_json(io::read_file(o.input));
  if (o.format == "csv") {
    emit(o, io::incidence_csv(config), out);
  } else if (o.format == "json") {
    emit(o, dump(io::incidence_json(config)), out);
  } else {
    throw UsageError("--format must be csv or json");
  }
  return kOk;
}

void add_field_flags(CLI::App* c, Options& o) {
  c->add_option("--p", o.p, "field characteristic");
  c->add_option("--k", o.k, "extension degree")->check(CLI::Range(1u, 16u));
  c->add_option("--modulus", o.modulus, "monic modulus, constant term first")->delimiter(',');
}

void add_common_flags(CLI::App* c, Options& o, const std::string& default_format) {
  c->add_option("--seed", o.seed, "seed for randomized choices");
  c->add_option("--format", o.format, "output format")->default_str(default_format);
  c->add_option("--out", o.out, "write the artifact to this file");
  c->add_option("--budget", o.budget, "node budget for searches")->check(CLI::PositiveNumber);
  c->add_flag("--verbose", o.verbose, "timings on stderr");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact projective geometry over finite fields: sections of arcs and simplexes in perspective", "pgd"};
  app.require_subcommand(1);

  auto* demo = app.add_subcommand("demo", "section a frame and run the vertex sweep");
  demo->add_option("--n", o.n, "dimension of the section");
  add_field_flags(demo, o);
  add_common_flags(demo, o, "text");

  auto* section = app.add_subcommand("section", "arc file -> configuration file");
  section->add_option("input", o.input, "arc JSON with a hyperplane")->required();
  add_common_flags(section, o, "json");

  auto* verify = app.add_subcommand("verify", "configuration or pair file -> theorem report");
  verify->add_option("input", o.input, "configuration or pair JSON")->required();
  add_common_flags(verify, o, "json");

  auto* lift = app.add_subcommand("lift", "pair file -> arc file");
  lift->add_option("input", o.input, "pair JSON")->required();
  add_common_flags(lift, o, "json");

  auto* enumerate = app.add_subcommand("enumerate", "count arcs, frames or sectioned configurations");
  enumerate->add_option("--kind", o.kind, "arcs | frames | sectioned");
  enumerate->add_option("--n", o.n, "dimension");
  enumerate->add_option("--m", o.m, "arc size for --kind arcs");
  enumerate->add_option("--threads", o.threads, "worker threads (0: all cores)");
  enumerate->add_option("--avoid", o.avoid, "dual coordinates of a hyperplane to avoid")->delimiter(',');
  add_field_flags(enumerate, o);
  add_common_flags(enumerate, o, "json");

  auto* exp = app.add_subcommand("export", "configuration file -> incidence matrix");
  exp->add_option("input", o.input, "configuration JSON")->required();
  add_common_flags(exp, o, "csv");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (demo->parsed()) {
      if (demo->count("--format") == 0) o.format = "text";
      return cmd_demo(o, out);
    }
    if (section->parsed()) return cmd_section(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (lift->parsed()) return cmd_lift(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    if (exp->parsed()) {
      if (exp->count("--format") == 0) o.format = "csv";
      return cmd_export(o, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::TheoremViolation ? kVerificationFailed : kUsage;
  }
  return kUsage;
}

}  // namespace pgd::cli
