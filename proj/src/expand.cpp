#include "qsqrt/expand.hpp"

#include <stdexcept>

namespace qsqrt {

std::vector<Gate> expand_ncx(QubitIndex ctrl, QubitIndex tgt) {
    if (ctrl == tgt) throw std::invalid_argument("ncx operands must be distinct");
    return {gate_x(ctrl), gate_cnot(ctrl, tgt), gate_x(ctrl)};
}

std::vector<Gate> expand_swap(QubitIndex a, QubitIndex b) {
    if (a == b) throw std::invalid_argument("swap operands must be distinct");
    return {gate_cnot(a, b), gate_cnot(b, a), gate_cnot(a, b)};
}

std::vector<Gate> expand_ccx(QubitIndex c1, QubitIndex c2, QubitIndex tgt) {
    if (c1 == c2 || c1 == tgt || c2 == tgt)
        throw std::invalid_argument("ccx operands must be pairwise distinct");
    // Phase-polynomial schedule: the seven T/TDG gates hit the parities
    // c1, c2, t, c1^c2, c1^t, c2^t, c1^c2^t with signs summing to the CCZ
    // phase, sandwiched by H on the target. The CNOTs are arranged so greedy
    // layering packs the T gates into exactly three layers.
    const QubitIndex a = c1, b = c2, c = tgt;
    return {
        gate_cnot(b, a), gate_h(c),
        gate_tdg(a),     gate_t(b),  gate_t(c),
        gate_cnot(c, b), gate_cnot(b, a),
        gate_tdg(a),     gate_tdg(b),
        gate_cnot(c, a), gate_cnot(a, b),
        gate_t(a),       gate_t(b),
        gate_cnot(a, b), gate_cnot(c, b),
        gate_h(c),
    };
}

Circuit expand_circuit(const Circuit& c) {
    if (c.level() != Level::Macro)
        throw std::invalid_argument("expand_circuit requires a macro-level circuit");
    Circuit out(c.width(), Level::CliffordT);
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::X:
            case GateKind::CNOT:
                out.append(g);
                break;
            case GateKind::NCX:
                out.append(expand_ncx(g.ops[0], g.ops[1]));
                break;
            case GateKind::SWAP:
                out.append(expand_swap(g.ops[0], g.ops[1]));
                break;
            case GateKind::CCX:
                out.append(expand_ccx(g.ops[0], g.ops[1], g.ops[2]));
                break;
            default:
                throw std::invalid_argument("non-macro gate in macro circuit");
        }
    }
    if (c.layout()) out.set_layout(*c.layout());
    return out;
}

}  // namespace qsqrt
