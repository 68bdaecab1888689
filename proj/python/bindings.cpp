#include "qsqrt/arith.hpp"
#include "qsqrt/circuit.hpp"
#include "qsqrt/expand.hpp"
#include "qsqrt/resources.hpp"
#include "qsqrt/simulate.hpp"
#include "qsqrt/sqrt_circuit.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace qsqrt;

namespace {

py::dict report_to_dict(const ResourceReport& rep) {
    py::dict hist;
    for (const auto& [kind, count] : rep.gate_histogram) {
        hist[py::str(std::string(gate_mnemonic(kind)))] = count;
    }
    using namespace py::literals;
    return py::dict("t_count"_a = rep.t_count,
                    "t_depth_global"_a = rep.t_depth_global,
                    "t_depth_per_qubit_max"_a = rep.t_depth_per_qubit_max,
                    "qubit_count"_a = rep.qubit_count,
                    "gate_count"_a = rep.gate_count,
                    "toffoli_count"_a = rep.toffoli_count,
                    "gate_histogram"_a = hist);
}

}  // namespace

PYBIND11_MODULE(_qsqrt, m) {
    m.doc() = "T-count-optimized non-restoring quantum square-root circuits";

    py::enum_<Level>(m, "Level")
        .value("MACRO", Level::Macro)
        .value("CLIFFORDT", Level::CliffordT);

    py::class_<SqrtLayout>(m, "SqrtLayout")
        .def_readonly("n", &SqrtLayout::n)
        .def_readonly("r_lo", &SqrtLayout::r_lo)
        .def_readonly("r_hi", &SqrtLayout::r_hi)
        .def_readonly("f_lo", &SqrtLayout::f_lo)
        .def_readonly("f_hi", &SqrtLayout::f_hi)
        .def_readonly("z", &SqrtLayout::z)
        .def_readonly("y_lo", &SqrtLayout::y_lo)
        .def_readonly("y_hi", &SqrtLayout::y_hi)
        .def_property_readonly("width", &SqrtLayout::width)
        .def("__repr__", [](const SqrtLayout& L) {
            return "SqrtLayout(n=" + std::to_string(L.n) + ", width=" +
                   std::to_string(L.width()) + ")";
        });

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("width", &Circuit::width)
        .def_property_readonly("level", &Circuit::level)
        .def_property_readonly(
            "gate_count", [](const Circuit& c) { return c.gates().size(); })
        .def("netlist", [](const Circuit& c) { return emit_netlist(c); })
        .def("qasm", [](const Circuit& c) { return emit_qasm(c); })
        .def("__eq__",
             [](const Circuit& a, const Circuit& b) { return a == b; })
        .def("__repr__", [](const Circuit& c) {
            return "Circuit(width=" + std::to_string(c.width()) + ", level=" +
                   std::string(level_name(c.level())) + ", gates=" +
                   std::to_string(c.gates().size()) + ")";
        });

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("y", &OracleResult::y)
        .def_readonly("remainder", &OracleResult::remainder)
        .def_property_readonly(
            "trace_text",
            [](const OracleResult& r) { return r.trace.to_text(); })
        .def("__repr__", [](const OracleResult& r) {
            return "OracleResult(y=" + std::to_string(r.y) + ", remainder=" +
                   std::to_string(r.remainder) + ")";
        });

    m.def("build_sqrt_circuit", &build_sqrt_circuit, py::arg("n"),
          "Synthesize the non-restoring square-root circuit; returns "
          "(circuit, layout).");
    m.def("expand_circuit", &expand_circuit, py::arg("circuit"),
          "Lower a macro-level circuit to Clifford+T.");
    m.def("invert", &invert, py::arg("circuit"));
    m.def("parse_netlist",
          [](const std::string& text) { return parse_netlist(text); },
          py::arg("text"));
    m.def("oracle", &nonrestoring_sqrt_oracle, py::arg("a"), py::arg("n"),
          "Classical non-restoring recurrence with its step trace.");
    m.def(
        "simulate_sqrt",
        [](std::uint32_t n, std::uint64_t a) {
            auto [c, layout] = build_sqrt_circuit(n);
            const BasisState out =
                apply_classical(c, encode_input(a, layout));
            const DecodedOutput d = decode_output(out, layout);
            return py::make_tuple(d.y, d.remainder, d.restored);
        },
        py::arg("n"), py::arg("a"),
        "Run one radicand through the circuit; returns (y, remainder, "
        "restored).");
    m.def(
        "verify_sqrt",
        [](std::uint32_t n, unsigned threads) {
            const VerifyResult res = verify_sqrt_exhaustive(n, threads);
            using namespace py::literals;
            return py::dict(
                "ok"_a = res.ok(), "inputs_checked"_a = res.inputs_checked,
                "first_failure"_a = res.failure
                    ? py::object(py::int_(res.failure->a))
                    : py::object(py::none()));
        },
        py::arg("n"), py::arg("threads") = 0,
        "Exhaustive equivalence check against the classical recurrence.");
    m.def("measure_resources",
          [](const Circuit& c) { return report_to_dict(measure_resources(c)); },
          py::arg("circuit"));
    m.def("analytic_tcount", &analytic_tcount, py::arg("n"));
    m.def("analytic_tdepth", &analytic_tdepth, py::arg("n"));
    m.def("analytic_qubits", &analytic_qubits, py::arg("n"));
    m.def("analytic_toffoli_count", &analytic_toffoli_count, py::arg("n"));
    m.def(
        "design_costs",
        [](std::uint32_t n) {
            py::list out;
            for (const DesignCostFormula& d : design_catalog()) {
                using namespace py::literals;
                out.append(py::dict(
                    "name"_a = d.name, "note"_a = d.note,
                    "t_count"_a = d.t_count(n),
                    "t_depth"_a = d.has_t_depth()
                        ? py::object(py::int_(d.t_depth(n)))
                        : py::object(py::none()),
                    "qubits"_a = d.qubits(n)));
            }
            return out;
        },
        py::arg("n"), "Evaluate every cataloged design's cost formulas at n.");
    m.def(
        "comparison_csv",
        [](const std::vector<std::uint32_t>& ns) {
            return comparison_table(ns).to_csv();
        },
        py::arg("n_values"));
    m.def(
        "comparison_text",
        [](const std::vector<std::uint32_t>& ns) {
            return comparison_table(ns).to_text();
        },
        py::arg("n_values"));
    m.def("improvement_x100", &improvement_x100, py::arg("baseline"),
          py::arg("proposed"),
          "100*(1 - proposed/baseline) in hundredths of a percent, half away "
          "from zero.");
    m.def("format_pct_x100", &format_pct_x100, py::arg("value_x100"));
}
