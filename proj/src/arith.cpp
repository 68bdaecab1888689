#include "qsqrt/arith.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qsqrt {

Slice Slice::range(QubitIndex lo, QubitIndex len) {
    Slice s;
    s.qubits.reserve(len);
    for (QubitIndex k = 0; k < len; ++k) s.qubits.push_back(lo + k);
    return s;
}

namespace {

void check_block_operands(QubitIndex ctrl, const Slice& target, const Slice& operand) {
    const QubitIndex w = target.width();
    if (w < 2) throw std::invalid_argument("arithmetic block width must be >= 2");
    if (operand.width() != w)
        throw std::invalid_argument("target and operand widths must match");
    std::unordered_set<QubitIndex> seen{ctrl};
    for (const auto& s : {target, operand})
        for (QubitIndex q : s.qubits)
            if (!seen.insert(q).second)
                throw std::invalid_argument(
                    "arithmetic block wires must be pairwise disjoint (qubit " +
                    std::to_string(q) + " repeats)");
}

// In-place ripple adder, target += operand (mod 2^w), no ancilla. Carries are
// accumulated transiently in the operand wires and uncomputed on the way
// back down. When ctrl is set, every write into the target is promoted to a
// Toffoli controlled on ctrl, which leaves the target untouched for ctrl=0
// while the operand-side bookkeeping still cancels itself.
void emit_adder(std::vector<Gate>& g, const Slice& operand, const Slice& target,
                QubitIndex ctrl, bool controlled) {
    const auto& a = operand.qubits;
    const auto& b = target.qubits;
    const QubitIndex n = operand.width();
    auto write = [&](QubitIndex ai, QubitIndex bi) {
        if (controlled)
            g.push_back(gate_ccx(ctrl, ai, bi));
        else
            g.push_back(gate_cnot(ai, bi));
    };
    for (QubitIndex i = 1; i < n; ++i) write(a[i], b[i]);
    for (QubitIndex i = n - 1; i >= 2; --i) g.push_back(gate_cnot(a[i - 1], a[i]));
    for (QubitIndex i = 0; i + 1 < n; ++i) g.push_back(gate_ccx(a[i], b[i], a[i + 1]));
    for (QubitIndex i = n - 1; i >= 1; --i) {
        write(a[i], b[i]);
        g.push_back(gate_ccx(a[i - 1], b[i - 1], a[i]));
    }
    for (QubitIndex i = 1; i + 1 < n; ++i) g.push_back(gate_cnot(a[i], a[i + 1]));
    for (QubitIndex i = 0; i < n; ++i) write(a[i], b[i]);
}

}  // namespace

std::vector<Gate> build_addsub(QubitIndex ctrl, const Slice& target,
                               const Slice& operand) {
    check_block_operands(ctrl, target, operand);
    std::vector<Gate> g;
    for (QubitIndex q : target.qubits) g.push_back(gate_cnot(ctrl, q));
    emit_adder(g, operand, target, 0, false);
    for (QubitIndex q : target.qubits) g.push_back(gate_cnot(ctrl, q));
    return g;
}

std::vector<Gate> build_ctrl_add(QubitIndex ctrl, const Slice& target,
                                 const Slice& operand) {
    check_block_operands(ctrl, target, operand);
    std::vector<Gate> g;
    emit_adder(g, operand, target, ctrl, true);
    return g;
}

namespace {

std::uint64_t check_oracle_args(int ctrl, std::uint64_t t, std::uint64_t f, int w) {
    if (w < 1 || w > 63) throw std::invalid_argument("oracle width must be in 1..63");
    if (ctrl != 0 && ctrl != 1) throw std::invalid_argument("ctrl must be 0 or 1");
    const std::uint64_t mod = std::uint64_t{1} << w;
    if (t >= mod || f >= mod)
        throw std::out_of_range("operand does not fit in " + std::to_string(w) +
                                " bits");
    return mod;
}

}  // namespace

std::uint64_t addsub_oracle(int ctrl, std::uint64_t t, std::uint64_t f, int w) {
    const std::uint64_t mod = check_oracle_args(ctrl, t, f, w);
    return ctrl == 0 ? (t + f) % mod : (t + mod - f) % mod;
}

std::uint64_t ctrl_add_oracle(int ctrl, std::uint64_t t, std::uint64_t f, int w) {
    const std::uint64_t mod = check_oracle_args(ctrl, t, f, w);
    return ctrl == 1 ? (t + f) % mod : t;
}

}  // namespace qsqrt
