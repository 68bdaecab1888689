#include "qsqrt/gates.hpp"

#include <stdexcept>
#include <string>

namespace qsqrt {

std::string_view gate_mnemonic(GateKind k) {
    switch (k) {
        case GateKind::X: return "x";
        case GateKind::CNOT: return "cx";
        case GateKind::NCX: return "ncx";
        case GateKind::SWAP: return "swap";
        case GateKind::CCX: return "ccx";
        case GateKind::H: return "h";
        case GateKind::T: return "t";
        case GateKind::TDG: return "tdg";
        case GateKind::S: return "s";
        case GateKind::SDG: return "sdg";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_mnemonic(std::string_view m) {
    if (m == "x") return GateKind::X;
    if (m == "cx") return GateKind::CNOT;
    if (m == "ncx") return GateKind::NCX;
    if (m == "swap") return GateKind::SWAP;
    if (m == "ccx") return GateKind::CCX;
    if (m == "h") return GateKind::H;
    if (m == "t") return GateKind::T;
    if (m == "tdg") return GateKind::TDG;
    if (m == "s") return GateKind::S;
    if (m == "sdg") return GateKind::SDG;
    return std::nullopt;
}

namespace {

Gate make1(GateKind k, QubitIndex q) { return Gate{k, {q, 0, 0}}; }

Gate make2(GateKind k, QubitIndex a, QubitIndex b) {
    if (a == b)
        throw std::invalid_argument(std::string(gate_mnemonic(k)) +
                                    " operands must be distinct");
    return Gate{k, {a, b, 0}};
}

Gate make3(GateKind k, QubitIndex a, QubitIndex b, QubitIndex c) {
    if (a == b || a == c || b == c)
        throw std::invalid_argument(std::string(gate_mnemonic(k)) +
                                    " operands must be pairwise distinct");
    return Gate{k, {a, b, c}};
}

}  // namespace

Gate gate_x(QubitIndex q) { return make1(GateKind::X, q); }
Gate gate_h(QubitIndex q) { return make1(GateKind::H, q); }
Gate gate_t(QubitIndex q) { return make1(GateKind::T, q); }
Gate gate_tdg(QubitIndex q) { return make1(GateKind::TDG, q); }
Gate gate_s(QubitIndex q) { return make1(GateKind::S, q); }
Gate gate_sdg(QubitIndex q) { return make1(GateKind::SDG, q); }
Gate gate_cnot(QubitIndex ctrl, QubitIndex tgt) { return make2(GateKind::CNOT, ctrl, tgt); }
Gate gate_ncx(QubitIndex ctrl, QubitIndex tgt) { return make2(GateKind::NCX, ctrl, tgt); }
Gate gate_swap(QubitIndex a, QubitIndex b) { return make2(GateKind::SWAP, a, b); }
Gate gate_ccx(QubitIndex c1, QubitIndex c2, QubitIndex tgt) {
    return make3(GateKind::CCX, c1, c2, tgt);
}

Gate gate_inverse(const Gate& g) {
    Gate out = g;
    if (g.kind == GateKind::T) out.kind = GateKind::TDG;
    else if (g.kind == GateKind::TDG) out.kind = GateKind::T;
    else if (g.kind == GateKind::S) out.kind = GateKind::SDG;
    else if (g.kind == GateKind::SDG) out.kind = GateKind::S;
    return out;
}

}  // namespace qsqrt
