#pragma once

#include "qsqrt/gates.hpp"

#include <cstdint>
#include <vector>

namespace qsqrt {

// An ordered operand window over register wires, least-significant bit first.
struct Slice {
    std::vector<QubitIndex> qubits;

    static Slice range(QubitIndex lo, QubitIndex len);
    QubitIndex width() const { return static_cast<QubitIndex>(qubits.size()); }
};

// Conditional adder-subtractor over two w-bit windows plus a control wire:
//   ctrl = 0  ->  target := (target + operand) mod 2^w
//   ctrl = 1  ->  target := (target - operand) mod 2^w
// Operand and ctrl are restored; no other wires are touched (ancilla-free).
// Subtraction uses the complement-add-complement identity, with the
// complement applied conditionally via CNOT fan-out from ctrl.
std::vector<Gate> build_addsub(QubitIndex ctrl, const Slice& target,
                               const Slice& operand);

// Controlled adder: ctrl = 1 -> target := (target + operand) mod 2^w, else
// identity. Operand and ctrl restored; ancilla-free.
std::vector<Gate> build_ctrl_add(QubitIndex ctrl, const Slice& target,
                                 const Slice& operand);

// Reference semantics for conformance fuzzing.
std::uint64_t addsub_oracle(int ctrl, std::uint64_t t, std::uint64_t f, int w);
std::uint64_t ctrl_add_oracle(int ctrl, std::uint64_t t, std::uint64_t f, int w);

}  // namespace qsqrt
