#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graceful/constructive.hpp"
#include "graceful/search.hpp"
#include "graceful/tree_model.hpp"

namespace py = pybind11;
using namespace graceful;

namespace {

// Python-side counterpart of Unsupported, carrying the reason name.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
T unwrap(Constructed<T> c) {
  if (auto* u = std::get_if<Unsupported>(&c)) {
    throw UnsupportedError(std::string(to_string(u->reason)) + ": " + u->detail);
  }
  return std::move(std::get<T>(c));
}

DaughterDegreeSequence sequence(const std::vector<std::int64_t>& degrees) { return DaughterDegreeSequence(degrees); }

py::dict construction_dict(const Construction& c) {
  py::dict out;
  out["labels"] = c.labelling.labels();
  out["method"] = to_string(c.trace.method);
  py::list steps;
  for (const auto& s : c.trace.steps) steps.append(py::make_tuple(to_string(s.kind), s.note));
  out["steps"] = steps;
  return out;
}

py::dict report_dict(const RotatabilityReport& r) {
  py::list orbits;
  for (const auto& e : r.entries) {
    py::dict entry;
    entry["representative"] = e.representative;
    entry["members"] = e.members;
    entry["verdict"] = to_string(e.verdict);
    entry["source"] = to_string(e.source);
    entry["witness"] = e.witness ? py::cast(e.witness->labels()) : py::none();
    entry["nodes"] = e.nodes;
    orbits.append(entry);
  }
  py::dict out;
  out["n"] = r.n;
  out["zero_rotatable"] = r.all_yes();
  out["orbits"] = orbits;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graceful labellings and 0-rotatability of rooted symmetric trees";

  py::register_exception<UnsupportedError>(m, "Unsupported", PyExc_ValueError);

  py::class_<GeneralTree>(m, "GeneralTree")
      .def(py::init<Vertex, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("size", &GeneralTree::size)
      .def_property_readonly("edges", &GeneralTree::edges)
      .def("degree", &GeneralTree::degree)
      .def("neighbours", [](const GeneralTree& t, Vertex v) {
        auto nb = t.neighbours(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      });

  py::class_<RootedSymmetricTree>(m, "RootedSymmetricTree")
      .def(py::init([](const std::vector<std::int64_t>& degrees) { return RootedSymmetricTree(sequence(degrees)); }),
           py::arg("degrees"))
      .def_property_readonly("degrees", [](const RootedSymmetricTree& t) { return t.sequence().degrees(); })
      .def_property_readonly("size", &RootedSymmetricTree::size)
      .def_property_readonly("levels", &RootedSymmetricTree::levels)
      .def_property_readonly("level_numbers", &RootedSymmetricTree::level_numbers)
      .def("level_of", &RootedSymmetricTree::level_of)
      .def("level_offset", &RootedSymmetricTree::level_offset)
      .def("level_width", &RootedSymmetricTree::level_width)
      .def("address_of", [](const RootedSymmetricTree& t, Vertex v) { return t.address_of(v).indices; })
      .def("index_of",
           [](const RootedSymmetricTree& t, std::vector<std::int64_t> a) { return t.index_of(VertexAddress{std::move(a)}); })
      .def("parent", &RootedSymmetricTree::parent)
      .def("general", &RootedSymmetricTree::general)
      .def("__repr__", [](const RootedSymmetricTree& t) { return "RootedSymmetricTree([" + t.sequence().to_string() + "])"; });

  m.def("level_numbers", [](const std::vector<std::int64_t>& degrees) { return level_numbers(sequence(degrees)); },
        py::arg("degrees"));

  m.def("classify", [](const GeneralTree& t) {
    const auto f = classify(t);
    py::dict out;
    out["is_path"] = f.is_path;
    out["is_caterpillar"] = f.is_caterpillar;
    out["is_spider"] = f.is_spider;
    out["is_symmetric_spider"] = f.is_symmetric_spider;
    out["is_symmetric_banana"] = f.is_symmetric_banana;
    return out;
  });
  m.def("vertex_orbits", [](const GeneralTree& t) { return vertex_orbits(t).orbits; });
  m.def("free_trees", &free_trees, py::arg("n"));

  m.def("is_graceful", [](const GeneralTree& t, std::vector<Label> labels) { return is_graceful(t, Labelling(std::move(labels))); },
        py::arg("tree"), py::arg("labels"));
  m.def("edge_labels", [](const GeneralTree& t, std::vector<Label> labels) { return edge_labels(t, Labelling(std::move(labels))); },
        py::arg("tree"), py::arg("labels"));

  m.def("algebraic_label", [](const RootedSymmetricTree& t) { return algebraic_label(t).labels(); });
  m.def("transposition_label", [](const RootedSymmetricTree& t) { return unwrap(transposition_label(t)).labels(); });
  m.def(
      "compose",
      [](const RootedSymmetricTree& t, int level, Label desired, std::optional<Vertex> target) {
        return construction_dict(unwrap(compose_broom_and_subtree(t, level, desired, target)));
      },
      py::arg("tree"), py::arg("level"), py::arg("desired") = 0, py::arg("target") = py::none());
  m.def(
      "zero_at",
      [](const RootedSymmetricTree& t, Vertex target, Label desired) {
        return construction_dict(unwrap(zero_at(ZeroAtRequest{&t, target, desired})));
      },
      py::arg("tree"), py::arg("target"), py::arg("desired") = 0);

  m.def(
      "find_graceful",
      [](const GeneralTree& t, std::vector<std::pair<Vertex, Label>> pins, std::optional<std::uint64_t> node_budget,
         std::optional<double> time_budget) -> py::object {
        SearchConstraints c;
        c.pins = std::move(pins);
        c.node_budget = node_budget;
        c.time_budget_secs = time_budget;
        SearchOutcome out;
        {
          py::gil_scoped_release release;
          out = find_graceful(t, c);
        }
        if (out.status == SearchStatus::kTimeout) throw std::runtime_error("search budget exhausted");
        if (!out.witness) return py::none();
        return py::cast(out.witness->labels());
      },
      py::arg("tree"), py::arg("pins") = std::vector<std::pair<Vertex, Label>>{}, py::arg("node_budget") = py::none(),
      py::arg("time_budget") = py::none());
  m.def(
      "count_graceful",
      [](const GeneralTree& t, bool force) {
        py::gil_scoped_release release;
        return count_graceful(t, CountOptions{10, force});
      },
      py::arg("tree"), py::arg("force") = false);
  m.def(
      "is_zero_rotatable",
      [](const GeneralTree& t, std::uint64_t node_budget, double time_budget, int jobs) {
        RotatabilityOptions options;
        options.node_budget = node_budget;
        options.time_budget_secs = time_budget;
        options.jobs = jobs;
        RotatabilityReport r;
        {
          py::gil_scoped_release release;
          r = is_zero_rotatable(t, options);
        }
        return report_dict(r);
      },
      py::arg("tree"), py::arg("node_budget") = kDefaultNodeBudget, py::arg("time_budget") = kDefaultTimeBudgetSecs,
      py::arg("jobs") = 1);
}
