#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qsqrt {

using QubitIndex = std::uint32_t;

// Gate vocabulary. Macro level uses the classical-reversible kinds
// (X, CNOT, NCX, SWAP, CCX); Clifford+T level uses {X, CNOT, H, T, TDG, S, SDG}.
// NCX is a CNOT with an inverted control: (A, B) -> (A, !A xor B).
enum class GateKind : std::uint8_t { X, CNOT, NCX, SWAP, CCX, H, T, TDG, S, SDG };

constexpr int gate_arity(GateKind k) {
    switch (k) {
        case GateKind::CNOT:
        case GateKind::NCX:
        case GateKind::SWAP: return 2;
        case GateKind::CCX: return 3;
        default: return 1;
    }
}

constexpr bool is_macro_kind(GateKind k) {
    switch (k) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::NCX:
        case GateKind::SWAP:
        case GateKind::CCX: return true;
        default: return false;
    }
}

constexpr bool is_cliffordt_kind(GateKind k) {
    switch (k) {
        case GateKind::NCX:
        case GateKind::SWAP:
        case GateKind::CCX: return false;
        default: return true;
    }
}

constexpr bool is_t_kind(GateKind k) { return k == GateKind::T || k == GateKind::TDG; }

std::string_view gate_mnemonic(GateKind k);
std::optional<GateKind> gate_kind_from_mnemonic(std::string_view m);

// Operand order for controlled kinds is controls first, target last.
struct Gate {
    GateKind kind{GateKind::X};
    std::array<QubitIndex, 3> ops{};  // first gate_arity(kind) entries are used

    int arity() const { return gate_arity(kind); }
    QubitIndex target() const { return ops[static_cast<std::size_t>(arity()) - 1]; }
    bool operator==(const Gate&) const = default;
};

// Factories validate operand distinctness and zero unused slots.
Gate gate_x(QubitIndex q);
Gate gate_h(QubitIndex q);
Gate gate_t(QubitIndex q);
Gate gate_tdg(QubitIndex q);
Gate gate_s(QubitIndex q);
Gate gate_sdg(QubitIndex q);
Gate gate_cnot(QubitIndex ctrl, QubitIndex tgt);
Gate gate_ncx(QubitIndex ctrl, QubitIndex tgt);
Gate gate_swap(QubitIndex a, QubitIndex b);
Gate gate_ccx(QubitIndex c1, QubitIndex c2, QubitIndex tgt);

// T <-> TDG, S <-> SDG; every other kind is self-inverse.
Gate gate_inverse(const Gate& g);

}  // namespace qsqrt
