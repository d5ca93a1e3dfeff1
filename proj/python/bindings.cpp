#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubefire/dynamics.hpp"
#include "cubefire/hypercube.hpp"
#include "cubefire/io.hpp"
#include "cubefire/oracle.hpp"
#include "cubefire/partition.hpp"

namespace py = pybind11;
using namespace cubefire;

namespace {

py::dict census_dict(const PeriodCensus& c) {
    py::dict d;
    d["n"] = c.n;
    d["total"] = c.total;
    py::list entries;
    for (const auto& [key, count] : c.entries) {
        py::dict e;
        e["period"] = key.period;
        e["transient"] = key.transient;
        e["count"] = count;
        entries.append(e);
    }
    d["entries"] = entries;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Left cyclic partitions of n-cubes and the parallel chip firing game";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);
    py::register_exception<io::FormatError>(m, "FormatError", PyExc_ValueError);

    m.def("neighbors", &neighbors, py::arg("v"), py::arg("n"));
    m.def("parity", &parity, py::arg("v"));
    m.def("gray_cycle", &gray_cycle, py::arg("m"));
    m.def("even_cycle", [](int n, std::uint64_t p) { return even_cycle(n, p).vertices; },
          py::arg("n"), py::arg("p"));

    py::class_<LeftCyclicPartition>(m, "LeftCyclicPartition")
        .def(py::init([](int n, std::vector<std::vector<Vertex>> sets) {
                 LeftCyclicPartition p{n, std::move(sets)};
                 p.canonicalize();
                 return p;
             }),
             py::arg("n"), py::arg("sets"))
        .def_readonly("n", &LeftCyclicPartition::n)
        .def_readonly("sets", &LeftCyclicPartition::sets)
        .def_property_readonly("order", &LeftCyclicPartition::order)
        .def("to_json", [](const LeftCyclicPartition& p) { return io::to_json(p).dump(); })
        .def_static("from_json",
                    [](const std::string& s) { return io::partition_from_json(io::parse(s)); })
        .def("__eq__", [](const LeftCyclicPartition& a, const LeftCyclicPartition& b) { return a == b; })
        .def("__repr__", [](const LeftCyclicPartition& p) {
            return "LeftCyclicPartition(n=" + std::to_string(p.n) + ", k=" + std::to_string(p.order()) + ")";
        });

    m.def("validate", [](const LeftCyclicPartition& p) {
        const auto r = validate(p);
        py::list violations;
        for (const auto& v : r.violations) violations.append(v.describe(p.n));
        return py::make_tuple(r.valid, violations);
    }, "Returns (valid, [violation descriptions]).");
    m.def("construct_even", &construct_even, py::arg("n"), py::arg("p"));
    m.def("construct_odd", &construct_odd, py::arg("n"), py::arg("p"));
    m.def("construct", &construct, py::arg("n"), py::arg("p"));
    m.def("lift", &lift);
    m.def("double_minus_1", &double_minus_1);
    m.def("double_minus_3", &double_minus_3);
    m.def("h4_order5", &h4_order5);
    m.def("h4_order7", &h4_order7);
    m.def("max_odd", &max_odd, py::arg("n"));

    py::class_<Orientation>(m, "Orientation")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_edge_bits",
                    [](int n, const std::vector<std::uint8_t>& bits) { return Orientation::from_edge_bits(n, bits); })
        .def_property_readonly("n", &Orientation::dimension)
        .def("edge_bits", &Orientation::edge_bits)
        .def("in_degree", &Orientation::in_degree)
        .def("out_degree", &Orientation::out_degree)
        .def("to_json", [](const Orientation& o) { return io::to_json(o).dump(); })
        .def("__eq__", [](const Orientation& a, const Orientation& b) { return a == b; });

    m.def("sinks", &sinks);
    m.def("parallel_step", [](const Orientation& o) {
        auto r = parallel_step(o);
        return py::make_tuple(std::move(r.next), std::move(r.fired));
    });
    m.def("block_step", [](const Orientation& o, const std::vector<Vertex>& w) {
        auto r = block_step(o, w);
        return py::make_tuple(std::move(r.next), std::move(r.fired));
    });
    m.def("chips", [](const Orientation& o) { return chips(o).chips; });
    m.def("from_partition", &from_partition);
    m.def("hamiltonian_orientation", &hamiltonian_orientation, py::arg("n"));

    m.def("evolve", [](const Orientation& o, std::optional<std::vector<std::vector<Vertex>>> schedule,
                       std::uint64_t max_steps) {
        Schedule s = ParallelSchedule{};
        if (schedule) s = BlockSchedule{*schedule};
        EvolutionResult r;
        {
            py::gil_scoped_release release;
            r = evolve(o, s, max_steps);
        }
        return py::module_::import("json").attr("loads")(io::to_json(r).dump());
    }, py::arg("orientation"), py::arg("schedule") = py::none(), py::arg("max_steps") = kDefaultMaxSteps,
       "Evolution report as a dict (parallel schedule unless block sets are given).");

    m.def("search_partition", [](int n, std::size_t k) {
        SearchOutcome s;
        {
            py::gil_scoped_release release;
            s = search_partition(n, k);
        }
        return py::make_tuple(s.found, s.witness, s.nodes_explored);
    }, py::arg("n"), py::arg("k"), "Returns (found, witness or None, nodes explored).");
    m.def("census", [](int n) { return census_dict(census(n)); }, py::arg("n"));
    m.def("reference_period", [](const Orientation& o, std::uint64_t max_steps) -> py::object {
        const auto r = reference_period(o, max_steps);
        if (!r.determined) return py::none();
        return py::make_tuple(r.transient, r.period);
    }, py::arg("orientation"), py::arg("max_steps") = kDefaultMaxSteps);
    m.def("check_lemma23", &check_lemma23);
}
