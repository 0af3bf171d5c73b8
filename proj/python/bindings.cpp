#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "widthdual/io.hpp"
#include "widthdual/oracle.hpp"
#include "widthdual/solve.hpp"

namespace py = pybind11;
using namespace wdk;

namespace {

Instance graph_instance(int n, const std::vector<std::pair<int, int>>& edges) {
    Instance in;
    in.graph = Graph::make(n, edges);
    return in;
}

std::string solve_json(int n, const std::vector<std::pair<int, int>>& edges, const std::string& mode, int k, int w) {
    auto p = build_problem(graph_instance(n, edges), parse_mode(mode), k, w);
    auto sol = solve(p);
    auto j = witness_to_json(sol.witness);
    j["mode"] = mode_name(p.mode);
    j["k"] = p.k;
    j["width_param"] = width_param(p, sol.witness.side);
    j["classical"] = classical_object(p, sol.witness);
    return j.dump();
}

std::vector<std::string> verify_json(int n, const std::vector<std::pair<int, int>>& edges, const std::string& mode, int k, int w,
                                     const std::string& witness) {
    auto p = build_problem(graph_instance(n, edges), parse_mode(mode), k, w);
    return verify_witness(witness_from_json(parse_json(witness, "witness")), *p.family).problems;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<EngineError>(m, "EngineError", PyExc_RuntimeError);

    m.def("solve_json", &solve_json, py::arg("n"), py::arg("edges"), py::arg("mode"), py::arg("k"), py::arg("w") = 0);
    m.def("verify_json", &verify_json, py::arg("n"), py::arg("edges"), py::arg("mode"), py::arg("k"), py::arg("w"), py::arg("witness"));
    m.def("treewidth", [](int n, const std::vector<std::pair<int, int>>& e) { return treewidth_exact(Graph::make(n, e)); });
    m.def("pathwidth", [](int n, const std::vector<std::pair<int, int>>& e) { return pathwidth_exact(Graph::make(n, e)); });
    m.def("branchwidth", [](int n, const std::vector<std::pair<int, int>>& e) { return branchwidth_exact(Graph::make(n, e)); });
    m.def("branch_summary", [](int n, const std::vector<std::pair<int, int>>& e) {
        auto s = branch_summary(Graph::make(n, e));
        return std::pair{s.branch_width, s.tangle_number};
    });
}
