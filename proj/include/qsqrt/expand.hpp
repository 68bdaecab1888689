#pragma once

#include "qsqrt/circuit.hpp"

#include <vector>

namespace qsqrt {

// NCX lowering: [X(ctrl), CNOT(ctrl,tgt), X(ctrl)]; T-count 0.
std::vector<Gate> expand_ncx(QubitIndex ctrl, QubitIndex tgt);

// SWAP lowering: three CNOTs; T-count 0.
std::vector<Gate> expand_swap(QubitIndex a, QubitIndex b);

// Toffoli lowering: fixed 16-gate network (7 T/TDG, 7 CNOT, 2 H) whose
// unitary equals the CCX permutation exactly and whose greedy-layered
// T-depth is 3. Golden-tested; do not reorder.
std::vector<Gate> expand_ccx(QubitIndex c1, QubitIndex c2, QubitIndex tgt);

// Gate-for-gate lowering of a Macro circuit; X and CNOT pass through.
Circuit expand_circuit(const Circuit& c);

}  // namespace qsqrt
