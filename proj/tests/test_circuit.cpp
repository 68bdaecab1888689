#include "qsqrt/circuit.hpp"
#include "qsqrt/expand.hpp"
#include "qsqrt/simulate.hpp"
#include "qsqrt/sqrt_circuit.hpp"

#include <doctest.h>

#include <string>

using namespace qsqrt;

TEST_CASE("gate factories validate operand distinctness") {
    CHECK_THROWS_AS(gate_cnot(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(gate_swap(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gate_ccx(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(gate_ccx(5, 5, 1), std::invalid_argument);
    CHECK(gate_ccx(0, 1, 2).arity() == 3);
    CHECK(gate_x(7).arity() == 1);
    CHECK(gate_cnot(4, 9).target() == 9);
}

TEST_CASE("gate mnemonics round-trip") {
    for (GateKind k : {GateKind::X, GateKind::CNOT, GateKind::NCX, GateKind::SWAP,
                       GateKind::CCX, GateKind::H, GateKind::T, GateKind::TDG,
                       GateKind::S, GateKind::SDG}) {
        auto back = gate_kind_from_mnemonic(gate_mnemonic(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK(!gate_kind_from_mnemonic("cz").has_value());
    CHECK(!gate_kind_from_mnemonic("").has_value());
}

TEST_CASE("gate_inverse swaps T/Tdg and S/Sdg and fixes the rest") {
    CHECK(gate_inverse(gate_t(0)).kind == GateKind::TDG);
    CHECK(gate_inverse(gate_tdg(0)).kind == GateKind::T);
    CHECK(gate_inverse(gate_s(0)).kind == GateKind::SDG);
    CHECK(gate_inverse(gate_sdg(0)).kind == GateKind::S);
    for (const Gate& g : {gate_x(1), gate_h(1), gate_cnot(0, 1), gate_ncx(0, 1),
                          gate_swap(0, 1), gate_ccx(0, 1, 2)}) {
        CHECK(gate_inverse(g) == g);
    }
}

TEST_CASE("circuit enforces width, operand range, and level vocabulary") {
    CHECK_THROWS_AS(new_circuit(0, Level::Macro), std::invalid_argument);

    Circuit mac = new_circuit(3, Level::Macro);
    CHECK_THROWS_AS(mac.append(gate_x(3)), std::out_of_range);
    CHECK_THROWS_AS(mac.append(gate_ccx(0, 1, 5)), std::out_of_range);
    CHECK_THROWS_AS(mac.append(gate_h(0)), std::invalid_argument);
    CHECK_THROWS_AS(mac.append(gate_t(0)), std::invalid_argument);
    mac.ccx(0, 1, 2).ncx(0, 1).swap(1, 2).x(0).cx(0, 1);
    CHECK(mac.gates().size() == 5);

    Circuit ct = new_circuit(3, Level::CliffordT);
    CHECK_THROWS_AS(ct.append(gate_ccx(0, 1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(ct.append(gate_ncx(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(ct.append(gate_swap(0, 1)), std::invalid_argument);
    ct.h(2).t(0).tdg(1).s(2).sdg(0).x(1).cx(2, 0);
    CHECK(ct.gates().size() == 7);
}

TEST_CASE("register layout validation") {
    Circuit c = new_circuit(5, Level::Macro);
    RegisterLayout ok{{Register{"A", 0, 2}, Register{"B", 3, 3}, Register{"C", 4, 4}}};
    c.set_layout(ok);
    REQUIRE(c.layout().has_value());
    CHECK(c.layout()->find("B")->lo == 3);
    CHECK(c.layout()->find("missing") == nullptr);

    RegisterLayout overlap{{Register{"A", 0, 2}, Register{"B", 2, 4}}};
    CHECK_THROWS_AS(c.set_layout(overlap), std::invalid_argument);
    RegisterLayout gap{{Register{"A", 0, 2}, Register{"B", 4, 4}}};
    CHECK_THROWS_AS(c.set_layout(gap), std::invalid_argument);
    RegisterLayout oob{{Register{"A", 0, 5}}};
    CHECK_THROWS_AS(c.set_layout(oob), std::out_of_range);
    RegisterLayout inverted{{Register{"A", 2, 1}, Register{"B", 0, 0}}};
    CHECK_THROWS_AS(c.set_layout(inverted), std::invalid_argument);
}

TEST_CASE("invert reverses gate order and undoes the circuit") {
    Circuit c = new_circuit(4, Level::Macro);
    c.x(0).cx(0, 1).ccx(0, 1, 2).ncx(2, 3).swap(1, 3);
    Circuit inv = invert(c);
    REQUIRE(inv.gates().size() == c.gates().size());
    CHECK(inv.gates().front() == gate_swap(1, 3));
    CHECK(inv.gates().back() == gate_x(0));
    for (std::uint64_t idx = 0; idx < 16; ++idx) {
        BasisState in = BasisState::from_index(4, idx);
        BasisState mid = apply_classical(c, in);
        CHECK(apply_classical(inv, mid) == in);
    }

    Circuit ct = new_circuit(2, Level::CliffordT);
    ct.h(0).t(0).cx(0, 1).s(1);
    Circuit cti = invert(ct);
    CHECK(cti.gates()[0] == gate_sdg(1));
    CHECK(cti.gates()[1] == gate_cnot(0, 1));
    CHECK(cti.gates()[2] == gate_tdg(0));
    CHECK(cti.gates()[3] == gate_h(0));
}

TEST_CASE("netlist emit/parse round-trip on generated circuits") {
    for (std::uint32_t n : {4u, 6u}) {
        auto [c, layout] = build_sqrt_circuit(n);
        const std::string text = emit_netlist(c);
        CHECK(text.rfind("# qsqrt netlist v1\nwidth " + std::to_string(2 * n + 1),
                         0) == 0);
        Circuit parsed = parse_netlist(text);
        CHECK(parsed == c);
        CHECK(emit_netlist(parsed) == text);  // emit -> parse -> emit fixpoint

        Circuit flat = expand_circuit(c);
        const std::string flat_text = emit_netlist(flat);
        Circuit flat_parsed = parse_netlist(flat_text);
        CHECK(flat_parsed == flat);
        CHECK(flat_parsed.level() == Level::CliffordT);
        CHECK(emit_netlist(flat_parsed) == flat_text);
    }
}

TEST_CASE("netlist parser infers the level from the vocabulary") {
    Circuit mac = parse_netlist("width 3\nccx 0 1 2\nx 0\n");
    CHECK(mac.level() == Level::Macro);
    Circuit plain = parse_netlist("width 2\nx 0\ncx 0 1\n");
    CHECK(plain.level() == Level::Macro);
    Circuit ct = parse_netlist("width 2\nh 0\ncx 0 1\nt 1\n");
    CHECK(ct.level() == Level::CliffordT);
}

TEST_CASE("netlist parser accepts comments, blank lines, and reg lines") {
    const std::string text =
        "# header comment\n"
        "width 5\n"
        "\n"
        "reg R 0 2\n"
        "reg F 3 4\n"
        "x 0   # trailing comment\n"
        "swap 3 4\n";
    Circuit c = parse_netlist(text);
    CHECK(c.width() == 5);
    REQUIRE(c.layout().has_value());
    CHECK(c.layout()->regs.size() == 2);
    CHECK(c.layout()->find("F")->hi == 4);
    CHECK(c.gates().size() == 2);
}

TEST_CASE("netlist parse errors carry the line number") {
    CHECK_THROWS_WITH_AS(parse_netlist("x 0\n"),
                         "netlist line 1: expected 'width <k>' before other content",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_netlist(""), "netlist: missing 'width <k>' line",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_netlist("width 2\nwidth 2\n"),
                         "netlist line 2: duplicate width line", std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_netlist("width 2\ncz 0 1\n"),
                         "netlist line 2: unknown mnemonic 'cz'",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_netlist("width 2\ncx 0\n"),
                         "netlist line 2: 'cx' takes 2 qubit operand(s)",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_netlist("width 2\ncx 0 one\n"),
                         "netlist line 2: expected qubit index, got 'one'",
                         std::runtime_error);
    CHECK_THROWS_AS(parse_netlist("width 2\nx 0\nreg R 0 1\n"), std::runtime_error);
    // Range and distinctness violations keep their exception type but gain
    // the line prefix.
    CHECK_THROWS_WITH_AS(parse_netlist("width 2\ncx 0 2\n"),
                         "netlist line 2: gate operand 2 out of range for width 2",
                         std::out_of_range);
    CHECK_THROWS_WITH_AS(parse_netlist("width 2\ncx 1 1\n"),
                         "netlist line 2: gate operands must be pairwise distinct",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_netlist("width 0\n"), std::runtime_error);
}

TEST_CASE("qasm emission lowers NCX and keeps qelib1 vocabulary") {
    auto [c, layout] = build_sqrt_circuit(4);
    const std::string qasm = emit_qasm(c);
    CHECK(qasm.rfind("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[9];\n", 0) ==
          0);
    CHECK(qasm.find("// reg R 0 3") != std::string::npos);
    CHECK(qasm.find("ncx") == std::string::npos);
    CHECK(qasm.find("ccx q[") != std::string::npos);
    CHECK(qasm.find("swap q[") != std::string::npos);

    Circuit one = new_circuit(2, Level::Macro);
    one.ncx(0, 1);
    CHECK(emit_qasm(one) ==
          "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n"
          "x q[0];\ncx q[0],q[1];\nx q[0];\n");
}
