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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pgd/cli.hpp"
#include "pgd/io.hpp"
#include "pgd/random.hpp"

namespace py = pybind11;
using namespace pgd;

namespace {

using FieldHolder = std::shared_ptr<Field>;

FieldHolder hold(const FieldPtr& f) { return std::const_pointer_cast<Field>(f); }

py::object to_python(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

using PyLabel = std::pair<int, int>;

py::dict result_dict(const EnumResult& r) {
  py::dict d;
  d["raw"] = r.raw;
  d["quotient"] = r.quotient;
  d["m"] = r.m;
  d["nodes"] = r.nodes;
  d["samples"] = r.samples;
  d["sample_failures"] = r.sample_failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact projective geometry over finite fields: sections of arcs and simplexes in perspective";

  // The module keeps the type alive; the handle is only borrowed.
  static py::handle error_type = py::exception<Error>(m, "PgdError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());
      exc.attr("code") = std::string(e.name());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Field, FieldHolder>(m, "Field")
      .def(py::init([](std::uint32_t p, std::uint32_t k, std::vector<Code> modulus) {
             return hold(Field::make(p, k, std::move(modulus)));
           }),
           py::arg("p"), py::arg("k") = 1, py::arg("modulus") = std::vector<Code>{})
      .def_property_readonly("p", &Field::characteristic)
      .def_property_readonly("k", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("neg", &Field::neg)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("div", &Field::div)
      .def("__eq__", [](const Field& a, const Field& b) { return a.same_as(b); })
      .def("__repr__", &Field::name);

  py::class_<ProjPoint>(m, "Point")
      .def(py::init([](const FieldHolder& f, std::vector<Code> coords) { return ProjPoint(f, std::move(coords)); }))
      .def_property_readonly("coords", &ProjPoint::coords)
      .def_property_readonly("ambient", &ProjPoint::ambient)
      .def_property_readonly("field", [](const ProjPoint& p) { return hold(p.field()); })
      .def("__eq__", &ProjPoint::operator==)
      .def("__lt__", &ProjPoint::operator<)
      .def("__hash__", [](const ProjPoint& p) { return std::hash<ProjPoint>{}(p); })
      .def("__repr__", &ProjPoint::to_string);

  py::class_<Subspace>(m, "Subspace")
      .def(py::init<const ProjPoint&>())
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("ambient", &Subspace::ambient)
      .def_property_readonly("field", [](const Subspace& s) { return hold(s.field()); })
      .def_property_readonly("is_hyperplane", &Subspace::is_hyperplane)
      .def_property_readonly("basis",
                             [](const Subspace& s) {
                               std::vector<std::vector<Code>> rows;
                               for (std::size_t r = 0; r < s.basis().rows; ++r) {
                                 rows.emplace_back(s.basis().row(r), s.basis().row(r) + s.basis().cols);
                               }
                               return rows;
                             })
      .def("contains", py::overload_cast<const ProjPoint&>(&Subspace::contains, py::const_))
      .def("contains", py::overload_cast<const Subspace&>(&Subspace::contains, py::const_))
      .def("points", &Subspace::points)
      .def("intrinsic", py::overload_cast<const ProjPoint&>(&Subspace::intrinsic, py::const_))
      .def("embed", py::overload_cast<const ProjPoint&>(&Subspace::embed, py::const_))
      .def("__eq__", &Subspace::operator==)
      .def("__hash__", &Subspace::hash)
      .def("__repr__", &Subspace::to_string);

  m.def("span", [](const std::vector<ProjPoint>& pts) { return span(pts); });
  m.def("meet", &meet);
  m.def("join", py::overload_cast<const Subspace&, const Subspace&>(&join));
  m.def("hyperplane_from_dual",
        [](const FieldHolder& f, const std::vector<Code>& c) { return hyperplane_from_dual(f, c); });
  m.def("dual_coordinates", &dual_coordinates);
  m.def("all_points", [](const FieldHolder& f, int n) { return all_points(f, n); });

  py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>());
  m.def("random_point", [](const FieldHolder& f, int n, Rng& r) { return random_point(f, n, r); });
  m.def("random_hyperplane", [](const FieldHolder& f, int n, Rng& r) { return random_hyperplane(f, n, r); });

  py::class_<Arc>(m, "Arc")
      .def(py::init<std::vector<ProjPoint>>())
      .def_property_readonly("points", &Arc::points)
      .def_property_readonly("ambient", &Arc::ambient)
      .def("__len__", &Arc::size);
  m.def("is_arc", [](const std::vector<ProjPoint>& p) { return is_arc(p); });
  m.def("is_simplex", [](const std::vector<ProjPoint>& p) { return is_simplex(p); });
  m.def("frame_off_hyperplane", &frame_off_hyperplane);
  m.def("random_arc_off", &random_arc_off);

  py::class_<LabeledConfiguration>(m, "Configuration")
      .def(py::init([](int n, const FieldHolder& f, const std::map<PyLabel, ProjPoint>& t) {
        LabeledConfiguration::Table table;
        for (const auto& [l, p] : t) table.emplace(Label(l.first, l.second), p);
        return LabeledConfiguration(n, f, std::move(table));
      }))
      .def_property_readonly("ambient", &LabeledConfiguration::ambient)
      .def_property_readonly("field", [](const LabeledConfiguration& c) { return hold(c.field()); })
      .def_property_readonly("symbols", &LabeledConfiguration::symbols)
      .def_property_readonly("is_full", &LabeledConfiguration::is_full)
      .def("labels",
           [](const LabeledConfiguration& c) {
             std::vector<PyLabel> out;
             for (const auto& l : c.labels()) out.emplace_back(l.i, l.j);
             return out;
           })
      .def("at", [](const LabeledConfiguration& c, int i, int j) { return c.at(i, j); })
      .def("points", &LabeledConfiguration::points)
      .def("restrict", &LabeledConfiguration::restrict)
      .def("relabel", &LabeledConfiguration::relabel)
      .def("__len__", &LabeledConfiguration::size);
  m.def("section_arc", &section_arc);

  py::class_<PerspectivePair>(m, "PerspectivePair")
      .def(py::init<std::vector<ProjPoint>, std::vector<ProjPoint>>())
      .def_property_readonly("a", &PerspectivePair::a)
      .def_property_readonly("b", &PerspectivePair::b)
      .def_property_readonly("ambient", &PerspectivePair::ambient)
      .def("face_a", &PerspectivePair::face_a)
      .def("face_b", &PerspectivePair::face_b)
      .def("__len__", &PerspectivePair::size);
  py::class_<ExtractedPair>(m, "ExtractedPair")
      .def_readonly("pair", &ExtractedPair::pair)
      .def_readonly("vertex", &ExtractedPair::vertex)
      .def_readonly("symbols", &ExtractedPair::symbols);

  m.def("extract_perspective_pair", &extract_perspective_pair);
  m.def("find_vertex", &find_vertex);
  m.def("edge_intersections", &edge_intersections);
  m.def("axis_hyperplane", &axis_hyperplane);
  m.def("tspace_intersections", [](const PerspectivePair& p, int t) {
    std::vector<std::pair<std::vector<int>, Subspace>> out;
    for (auto& tm : tspace_intersections(p, t)) out.emplace_back(tm.indices, tm.meet);
    return out;
  });
  m.def("face_pair_joins", &face_pair_joins);
  m.def("perspective_hyperplane", &perspective_hyperplane);
  m.def("dual_pair", &dual_pair);
  m.def("converse_vertex", &converse_vertex);
  m.def("lift_to_arc", [](const PerspectivePair& p, const ProjPoint& v, const Subspace& h) { return lift_to_arc(p, v, h); });
  m.def("conway_lift_axis", &conway_lift_axis);
  m.def("random_sectioned_config",
        [](int n, const FieldHolder& f, Rng& r) { return random_sectioned_config(n, f, r); });
  m.def("random_sectioned_pair", [](int n, const FieldHolder& f, Rng& r) { return random_sectioned_pair(n, f, r); });

  m.def("verify_symbol_incidence", &verify_symbol_incidence);
  m.def("symbol_incidence_report",
        [](const LabeledConfiguration& c) { return to_python(io::to_json(symbol_incidence_report(c))); });
  m.def("substructure_counts", [](const LabeledConfiguration& c) {
    const auto s = substructure_counts(c);
    py::dict d;
    for (const auto& [dim, count] : s.by_dimension) d[py::int_(dim)] = count;
    return py::make_tuple(d, s.consistent);
  });
  m.def("vertex_sweep", [](const LabeledConfiguration& c) { return to_python(io::to_json(vertex_sweep(c))); });
  m.def("replication_trace",
        [](const LabeledConfiguration& c) { return to_python(io::to_json(replication_trace(c))); });
  m.def("triple_perspective_axis",
        [](const LabeledConfiguration& c) { return to_python(io::to_json(triple_perspective_axis(c))); });

  m.def(
      "count_arcs",
      [](int n, const FieldHolder& f, std::size_t k, const std::optional<Subspace>& avoid, std::uint64_t budget) {
        return result_dict(count_arcs(n, f, k, avoid, budget));
      },
      py::arg("n"), py::arg("field"), py::arg("m"), py::arg("avoid") = std::nullopt,
      py::arg("budget") = 1'000'000'000ULL);
  m.def(
      "count_frames",
      [](int n, const FieldHolder& f, std::uint64_t budget) { return result_dict(count_frames(n, f, budget)); },
      py::arg("n"), py::arg("field"), py::arg("budget") = 1'000'000'000ULL);
  m.def(
      "count_sectioned_configs",
      [](int n, const FieldHolder& f, const Subspace& h, std::uint64_t budget) {
        return result_dict(count_sectioned_configs(n, f, h, budget));
      },
      py::arg("n"), py::arg("field"), py::arg("h"), py::arg("budget") = 1'000'000'000ULL);
  m.def("projectivity_group_order", &projectivity_group_order);

  m.def("config_to_json", [](const LabeledConfiguration& c) { return io::to_json(c).dump(); });
  m.def("config_from_json", [](const std::string& s) { return io::config_from_json(io::parse(s)); });
  m.def(
      "arc_to_json", [](const Arc& a, const std::optional<Subspace>& h) { return io::to_json(a, h).dump(); },
      py::arg("arc"), py::arg("hyperplane") = std::nullopt);
  m.def("arc_from_json", [](const std::string& s) {
    auto f = io::arc_from_json(io::parse(s));
    return py::make_tuple(f.arc, f.hyperplane);
  });
  m.def("incidence_csv", &io::incidence_csv);

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "pgd");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
