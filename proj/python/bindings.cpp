#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kautz/families.hpp"
#include "kautz/formulas.hpp"
#include "kautz/io.hpp"
#include "kautz/metrics.hpp"
#include "kautz/routing.hpp"
#include "kautz/verify.hpp"

namespace py = pybind11;
using namespace kautz;

namespace {

Word word_arg(const std::string& text, const FamilySpec& spec) {
  Word w = parse_word(text, spec.d);
  if (!is_valid_vertex(w, spec)) throw std::invalid_argument(text + " is not a vertex of " + spec.name());
  return w;
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

py::dict route_dict(const std::string& x, const std::string& y, const FamilySpec& spec) {
  const RouteResult r = route(word_arg(x, spec), word_arg(y, spec), spec);
  py::dict out;
  out["distance"] = r.distance;
  out["case"] = std::string(to_string(r.kind));
  out["analytic"] = r.analytic ? py::cast(*r.analytic) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kautz-family digraphs: construction, label routing and verification";

  py::register_exception<UnreachablePair>(m, "UnreachablePair", PyExc_ValueError);
  py::register_exception<NotStronglyConnected>(m, "NotStronglyConnected", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  py::enum_<Family>(m, "Family")
      .value("K", Family::K)
      .value("sK", Family::sK)
      .value("CK", Family::CK)
      .value("MCK", Family::MCK);

  py::class_<FamilySpec>(m, "FamilySpec")
      .def(py::init([](const std::string& family, int d, int l) {
             FamilySpec s{parse_family(family), d, l};
             s.validate();
             return s;
           }),
           py::arg("family"), py::arg("d"), py::arg("l"))
      .def_readonly("family", &FamilySpec::family)
      .def_readonly("d", &FamilySpec::d)
      .def_readonly("l", &FamilySpec::l)
      .def("name", &FamilySpec::name)
      .def("__repr__", &FamilySpec::name);

  py::class_<Digraph>(m, "Digraph")
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("arc_count", &Digraph::arc_count)
      .def("min_degree", &Digraph::min_degree)
      .def("max_degree", &Digraph::max_degree)
      .def("is_regular", &Digraph::is_regular)
      .def("out_neighbours", [](const Digraph& g, VertexId v) {
        auto s = g.out(v);
        return std::vector<VertexId>(s.begin(), s.end());
      })
      .def("arcs", [](const Digraph& g) {
        std::vector<std::pair<VertexId, VertexId>> out;
        for (const Arc& a : g.arcs()) out.emplace_back(a.tail, a.head);
        return out;
      });

  m.def("build", &build, py::arg("spec"));
  m.def("labels", [](const Digraph& g, int d) {
    std::vector<std::string> out;
    for (const Word& w : g.labels()) out.push_back(format_word(w, d));
    return out;
  });
  m.def("is_valid_vertex", [](const std::string& w, const FamilySpec& spec) {
    return is_valid_vertex(parse_word(w, spec.d), spec);
  });
  m.def("enumerate_vertices", [](const FamilySpec& spec) {
    std::vector<std::string> out;
    for (const Word& w : enumerate_vertices(spec)) out.push_back(format_word(w, spec.d));
    return out;
  });
  m.def("order_formula", &order_formula);
  m.def("distance", &route_dict, py::arg("x"), py::arg("y"), py::arg("spec"));
  m.def("shortest_path", [](const std::string& x, const std::string& y, const FamilySpec& spec) {
    std::vector<std::string> out;
    for (const Word& w : shortest_path(word_arg(x, spec), word_arg(y, spec), spec)) out.push_back(format_word(w, spec.d));
    return out;
  });
  m.def("diameter", py::overload_cast<const Digraph&>(&diameter));
  m.def("mean_distance", [](const Digraph& g) { return fraction(mean_distance(g)); });
  m.def("girth", &girth_bfs);
  m.def("semigirth", [](const Digraph& g) { return semigirth(g).gamma; });
  m.def("vertex_connectivity", &vertex_connectivity);
  m.def("arc_connectivity", &arc_connectivity);
  m.def("diameter_formula", [](const FamilySpec& spec) { return diameter_formula(spec).value; });
  m.def("girth_lower_bound", &girth_lower_bound);
  m.def("girth_periodic_search", [](const FamilySpec& spec, int k_max) {
    const PeriodicGirth p = girth_periodic_search(spec, k_max);
    py::dict out;
    out["girth"] = p.girth ? py::cast(*p.girth) : py::none();
    out["witness"] = p.witness ? py::cast(format_word(*p.witness, spec.d)) : py::none();
    out["lower_bound"] = p.lower_bound;
    return out;
  }, py::arg("spec"), py::arg("k_max") = 12);
  m.def("mean_distance_formula", [](const FamilySpec& spec) { return fraction(mean_distance_formula(spec)); });
  m.def("moore_bound", &moore_bound);
  m.def("moore_mean_distance", [](int degree, int diam) { return fraction(moore_mean_distance(degree, diam)); });
  m.def("graph_json", [](const FamilySpec& spec) { return graph_to_json(build(spec), spec).dump(); });
  m.def("analyze_json", [](const FamilySpec& spec, const std::vector<std::string>& checks) {
    std::vector<Check> selected;
    for (const auto& c : checks) selected.push_back(parse_check(c));
    if (selected.empty()) selected = all_checks();
    Budget budget;
    budget.timing = false;
    py::gil_scoped_release release;
    return to_json(std::vector<AnalysisReport>{analyze(spec, selected, budget)}).dump();
  }, py::arg("spec"), py::arg("checks") = std::vector<std::string>{});
}
