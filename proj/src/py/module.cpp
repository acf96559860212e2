#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgeideals/bounds.hpp"
#include "edgeideals/enumerate.hpp"
#include "edgeideals/generator.hpp"
#include "edgeideals/instance_io.hpp"
#include "edgeideals/sdepth.hpp"

namespace py = pybind11;
namespace ei = edgeideals;

namespace {

std::vector<std::vector<int>> edges_out(const ei::Clutter& c) {
  std::vector<std::vector<int>> out;
  out.reserve(c.edge_count());
  for (ei::VertexSet e : c.edges()) out.push_back(e.indices());
  return out;
}

ei::Clutter clutter_in(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<ei::VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& e : edges) sets.push_back(ei::VertexSet::from_indices(e));
  return ei::Clutter(n, sets);
}

ei::PosetMode mode_in(const std::string& mode) {
  if (mode == "ideal") return ei::PosetMode::Ideal;
  if (mode == "quotient") return ei::PosetMode::Quotient;
  throw std::invalid_argument("mode must be 'ideal' or 'quotient'");
}

ei::SearchLimits limits_in(std::uint64_t budget) {
  ei::SearchLimits limits = ei::default_limits();
  if (budget > 0) limits.node_budget = budget;
  return limits;
}

int require_value(const ei::SdepthResult& r) {
  if (r.outcome != ei::Outcome::Computed) {
    throw std::runtime_error("search budget exhausted (result indeterminate)");
  }
  return r.value;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact invariants and proved bounds for edge ideals of clutters";

  py::class_<ei::Clutter>(m, "Clutter")
      .def(py::init(&clutter_in), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &ei::Clutter::n)
      .def_property_readonly("edges", &edges_out)
      .def_property_readonly("is_graph", &ei::Clutter::is_graph)
      .def("__eq__", [](const ei::Clutter& a, const ei::Clutter& b) { return a == b; })
      .def("__repr__", [](const ei::Clutter& c) {
        std::string out = "Clutter(n=" + std::to_string(c.n()) + ", edges=[";
        for (std::size_t i = 0; i < c.edge_count(); ++i) {
          if (i > 0) out += ",";
          out += c.edges()[i].to_string();
        }
        return out + "])";
      });

  m.def("minimalize", [](int n, const std::vector<std::vector<int>>& edges) {
    std::vector<ei::VertexSet> sets;
    for (const auto& e : edges) sets.push_back(ei::VertexSet::from_indices(e));
    return ei::Clutter::minimal(n, sets);
  }, py::arg("n"), py::arg("edges"), "drop non-minimal edges");

  m.def("reduce", [](const ei::Clutter& c) {
    const ei::ReduceResult r = ei::reduce(c);
    return py::make_tuple(r.reduced, r.isolated.indices());
  }, "remove isolated vertices; returns (clutter, isolated)");

  m.def("add_set", [](const ei::Clutter& c, const std::vector<int>& a) {
    return ei::add_set(c, ei::VertexSet::from_indices(a));
  });

  m.def("contract", [](const ei::Clutter& c, const std::vector<int>& a) {
    const ei::ContractResult r = ei::contract(c, ei::VertexSet::from_indices(a));
    return py::make_tuple(r.contracted, r.improper);
  }, "contract a vertex set; returns (clutter, improper)");

  m.def("alexander_dual", [](const ei::Clutter& c) {
    return ei::clutter_of(ei::alexander_dual(ei::edge_ideal(c)));
  }, "minimal vertex covers as a clutter");

  m.def("stanley_depth", [](const ei::Clutter& c, const std::string& mode, std::uint64_t budget) {
    return require_value(ei::stanley_depth(ei::edge_ideal(c), mode_in(mode), limits_in(budget)));
  }, py::arg("clutter"), py::arg("mode") = "quotient", py::arg("budget") = 0);

  m.def("stanley_regularity",
        [](const ei::Clutter& c, const std::string& mode, std::uint64_t budget) {
          return require_value(
              ei::stanley_regularity(ei::edge_ideal(c), mode_in(mode), limits_in(budget)));
        },
        py::arg("clutter"), py::arg("mode") = "quotient", py::arg("budget") = 0);

  m.def("homological_invariants", [](const ei::Clutter& c, const std::string& field) {
    const ei::FieldSpec spec = field == "q"
                                   ? ei::FieldSpec::q()
                                   : ei::FieldSpec::mod(static_cast<std::uint32_t>(
                                         std::stoul(field.substr(field.find(':') + 1))));
    const ei::HomologicalInvariants h = ei::homological_invariants(ei::edge_ideal(c), spec);
    return py::make_tuple(h.projdim, h.depth, h.reg);
  }, py::arg("clutter"), py::arg("field") = "q", "returns (projdim, depth, reg) of S/I");

  m.def("size", [](const ei::Clutter& c) { return ei::ideal_size(ei::edge_ideal(c)); });
  m.def("cosize", [](const ei::Clutter& c) { return ei::ideal_cosize(ei::edge_ideal(c)); });

  m.def("bound_report_json", [](const ei::Clutter& c, bool witnesses) {
    ei::ReportOptions options;
    options.witnesses = witnesses;
    const ei::BoundReport report = ei::bound_report(c, options, "py");
    ei::RecordOptions record;
    record.witnesses = witnesses;
    return ei::report_record(report, c, record);
  }, py::arg("clutter"), py::arg("witnesses") = false,
     "full invariant/bound/verdict record as a JSON string");

  m.def("random_clutter",
        [](std::uint64_t seed, int n, const std::string& mode, int d, double p, int edges) {
          ei::GenConfig config;
          config.n = n;
          config.d = d;
          config.p = p;
          config.edge_target = edges;
          if (mode == "uniform") {
            config.mode = ei::GenConfig::Mode::UniformProb;
          } else if (mode == "uniform-count") {
            config.mode = ei::GenConfig::Mode::UniformCount;
          } else if (mode == "mixed") {
            config.mode = ei::GenConfig::Mode::MixedProb;
            config.size_probs.assign(static_cast<std::size_t>(n), 0.0);
            if (n >= 2) config.size_probs[1] = p;
            if (n >= 3) config.size_probs[2] = p / 2;
          } else {
            throw std::invalid_argument("mode must be uniform, uniform-count or mixed");
          }
          ei::Rng rng(seed);
          return ei::random_clutter(config, rng);
        },
        py::arg("seed"), py::arg("n"), py::arg("mode") = "uniform", py::arg("d") = 2,
        py::arg("p") = 0.35, py::arg("edges") = 4);

  m.attr("MAX_VERTICES") = ei::kMaxVertices;
  m.attr("__version__") = "0.1.0";
}
