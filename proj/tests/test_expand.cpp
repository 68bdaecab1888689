#include "qsqrt/expand.hpp"

#include "qsqrt/resources.hpp"
#include "qsqrt/simulate.hpp"
#include "qsqrt/sqrt_circuit.hpp"

#include <doctest.h>

using namespace qsqrt;

namespace {

Circuit circuit_from(QubitIndex width, const std::vector<Gate>& gates,
                     Level level) {
    Circuit c = new_circuit(width, level);
    c.append(gates);
    return c;
}

}  // namespace

TEST_CASE("NCX lowers to X-conjugated CNOT and is T-free") {
    const std::vector<Gate> g = expand_ncx(0, 1);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == gate_x(0));
    CHECK(g[1] == gate_cnot(0, 1));
    CHECK(g[2] == gate_x(0));
    CHECK_THROWS_AS(expand_ncx(1, 1), std::invalid_argument);

    Circuit mac = new_circuit(2, Level::Macro);
    mac.ncx(0, 1);
    Matrix want = permutation_matrix_of(mac);
    Matrix got = unitary_of(circuit_from(2, g, Level::CliffordT));
    CHECK(max_abs_diff_up_to_global_phase(got, want) < 1e-12);
    CHECK(measure_resources(mac).t_count == 0);
}

TEST_CASE("SWAP lowers to three CNOTs and is T-free") {
    const std::vector<Gate> g = expand_swap(0, 1);
    REQUIRE(g.size() == 3);
    for (const Gate& x : g) CHECK(x.kind == GateKind::CNOT);
    CHECK_THROWS_AS(expand_swap(2, 2), std::invalid_argument);

    Circuit mac = new_circuit(2, Level::Macro);
    mac.swap(0, 1);
    Matrix want = permutation_matrix_of(mac);
    Matrix got = unitary_of(circuit_from(2, g, Level::CliffordT));
    CHECK(max_abs_diff_up_to_global_phase(got, want) < 1e-12);
    CHECK(measure_resources(mac).t_count == 0);
}

TEST_CASE("CCX lowers to the 16-gate network with 7 T gates in 3 layers") {
    const std::vector<Gate> g = expand_ccx(0, 1, 2);
    CHECK(g.size() == 16);
    CHECK_THROWS_AS(expand_ccx(0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(expand_ccx(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(expand_ccx(2, 1, 2), std::invalid_argument);

    Circuit mac = new_circuit(3, Level::Macro);
    mac.ccx(0, 1, 2);
    Matrix want = permutation_matrix_of(mac);
    Circuit flat = circuit_from(3, g, Level::CliffordT);
    Matrix got = unitary_of(flat);
    CHECK(max_abs_diff_up_to_global_phase(got, want) < 1e-10);
    CHECK(unitarity_defect(got) < 1e-12);

    const ResourceReport rep = measure_resources(flat);
    CHECK(rep.t_count == 7);
    CHECK(rep.t_depth_global == 3);
    CHECK(rep.t_depth_per_qubit_max == 3);
}

TEST_CASE("CCX lowering is correct on every operand permutation") {
    const QubitIndex perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
        Circuit mac = new_circuit(3, Level::Macro);
        mac.ccx(p[0], p[1], p[2]);
        Circuit flat = expand_circuit(mac);
        CHECK(max_abs_diff_up_to_global_phase(unitary_of(flat),
                                              permutation_matrix_of(mac)) <
              1e-10);
    }
}

TEST_CASE("expand_circuit lowers whole circuits and preserves metadata") {
    auto [c, layout] = build_sqrt_circuit(4);
    Circuit flat = expand_circuit(c);
    CHECK(flat.width() == c.width());
    CHECK(flat.level() == Level::CliffordT);
    REQUIRE(flat.layout().has_value());
    CHECK(*flat.layout() == *c.layout());
    for (const Gate& g : flat.gates()) {
        CHECK(is_cliffordt_kind(g.kind));
    }
    CHECK_THROWS_AS(expand_circuit(flat), std::invalid_argument);

    // Behavioral equivalence end to end: the lowered circuit maps every
    // encoded radicand to the same basis state as the macro circuit.
    for (std::uint64_t a = 0; a < 8; ++a) {
        const BasisState in = encode_input(a, layout);
        const BasisState want = apply_classical(c, in);
        StateVector out = run_statevector(flat, StateVector::basis(9, in.to_index()));
        const std::uint64_t idx = want.to_index();
        for (std::uint64_t k = 0; k < out.amps.size(); ++k) {
            const double expected = k == idx ? 1.0 : 0.0;
            CHECK(std::abs(std::abs(out.amps[k]) - expected) < 1e-9);
        }
    }
}

TEST_CASE("X and CNOT pass through expansion unchanged") {
    Circuit c = new_circuit(2, Level::Macro);
    c.x(0).cx(0, 1);
    Circuit flat = expand_circuit(c);
    REQUIRE(flat.gates().size() == 2);
    CHECK(flat.gates()[0] == gate_x(0));
    CHECK(flat.gates()[1] == gate_cnot(0, 1));
}
