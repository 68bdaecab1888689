#pragma once

#include "qsqrt/gates.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsqrt {

struct Register {
    std::string name;
    QubitIndex lo{};
    QubitIndex hi{};  // inclusive
    bool operator==(const Register&) const = default;
};

// Named, contiguous, pairwise-disjoint ranges that jointly cover 0..width-1.
struct RegisterLayout {
    std::vector<Register> regs;
    void validate(QubitIndex width) const;
    const Register* find(std::string_view name) const;
    bool operator==(const RegisterLayout&) const = default;
};

enum class Level : std::uint8_t { Macro, CliffordT };

constexpr bool level_allows(Level lvl, GateKind k) {
    return lvl == Level::Macro ? is_macro_kind(k) : is_cliffordt_kind(k);
}

std::string_view level_name(Level lvl);

// Ordered gate sequence over width qubits. Program order is gate order.
// Treat instances as immutable once built; sharing read-only across threads
// is safe.
class Circuit {
public:
    Circuit(QubitIndex width, Level level);

    QubitIndex width() const { return width_; }
    Level level() const { return level_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    const std::optional<RegisterLayout>& layout() const { return layout_; }
    void set_layout(RegisterLayout layout);

    // Validates operand range, distinctness, and level compatibility.
    Circuit& append(const Gate& g);
    Circuit& append(const std::vector<Gate>& gs);

    Circuit& x(QubitIndex q) { return append(gate_x(q)); }
    Circuit& h(QubitIndex q) { return append(gate_h(q)); }
    Circuit& t(QubitIndex q) { return append(gate_t(q)); }
    Circuit& tdg(QubitIndex q) { return append(gate_tdg(q)); }
    Circuit& s(QubitIndex q) { return append(gate_s(q)); }
    Circuit& sdg(QubitIndex q) { return append(gate_sdg(q)); }
    Circuit& cx(QubitIndex c, QubitIndex t) { return append(gate_cnot(c, t)); }
    Circuit& ncx(QubitIndex c, QubitIndex t) { return append(gate_ncx(c, t)); }
    Circuit& swap(QubitIndex a, QubitIndex b) { return append(gate_swap(a, b)); }
    Circuit& ccx(QubitIndex c1, QubitIndex c2, QubitIndex t) {
        return append(gate_ccx(c1, c2, t));
    }

    bool operator==(const Circuit&) const = default;

private:
    QubitIndex width_;
    Level level_;
    std::vector<Gate> gates_;
    std::optional<RegisterLayout> layout_;
};

Circuit new_circuit(QubitIndex width, Level level);

// Reversed gate order with each gate inverted; an involution.
Circuit invert(const Circuit& c);

// Plain-text netlist: `# qsqrt netlist v1`, `width <k>`, optional
// `reg <name> <lo> <hi>` lines, then one lowercase gate mnemonic per line.
std::string emit_netlist(const Circuit& c);

// Inverse of emit_netlist. The format carries no level marker; the level is
// inferred (CliffordT iff any of h/t/tdg/s/sdg appears, Macro otherwise),
// which round-trips every circuit this library builds.
Circuit parse_netlist(std::string_view text);

// OpenQASM 2.0; ncx is lowered to x/cx/x, swap and ccx emit natively.
std::string emit_qasm(const Circuit& c);

}  // namespace qsqrt
