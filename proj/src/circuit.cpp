#include "qsqrt/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qsqrt {

void RegisterLayout::validate(QubitIndex width) const {
    std::vector<std::uint8_t> covered(width, 0);
    for (const auto& r : regs) {
        if (r.name.empty())
            throw std::invalid_argument("register name must not be empty");
        if (r.lo > r.hi)
            throw std::invalid_argument("register '" + r.name + "' has lo > hi");
        if (r.hi >= width)
            throw std::out_of_range("register '" + r.name + "' exceeds width " +
                                    std::to_string(width));
        for (QubitIndex q = r.lo; q <= r.hi; ++q) {
            if (covered[q])
                throw std::invalid_argument("register ranges overlap at qubit " +
                                            std::to_string(q));
            covered[q] = 1;
        }
    }
    for (QubitIndex q = 0; q < width; ++q)
        if (!covered[q])
            throw std::invalid_argument("register ranges do not cover qubit " +
                                        std::to_string(q));
}

const Register* RegisterLayout::find(std::string_view name) const {
    for (const auto& r : regs)
        if (r.name == name) return &r;
    return nullptr;
}

std::string_view level_name(Level lvl) {
    return lvl == Level::Macro ? "macro" : "cliffordt";
}

Circuit::Circuit(QubitIndex width, Level level) : width_(width), level_(level) {
    if (width == 0) throw std::invalid_argument("circuit width must be >= 1");
}

void Circuit::set_layout(RegisterLayout layout) {
    layout.validate(width_);
    layout_ = std::move(layout);
}

Circuit& Circuit::append(const Gate& g) {
    const int n = g.arity();
    for (int i = 0; i < n; ++i) {
        if (g.ops[static_cast<std::size_t>(i)] >= width_)
            throw std::out_of_range(
                "gate operand " + std::to_string(g.ops[static_cast<std::size_t>(i)]) +
                " out of range for width " + std::to_string(width_));
        for (int j = i + 1; j < n; ++j)
            if (g.ops[static_cast<std::size_t>(i)] == g.ops[static_cast<std::size_t>(j)])
                throw std::invalid_argument("gate operands must be pairwise distinct");
    }
    if (!level_allows(level_, g.kind))
        throw std::invalid_argument("gate '" + std::string(gate_mnemonic(g.kind)) +
                                    "' is not allowed at " +
                                    std::string(level_name(level_)) + " level");
    gates_.push_back(g);
    return *this;
}

Circuit& Circuit::append(const std::vector<Gate>& gs) {
    for (const auto& g : gs) append(g);
    return *this;
}

Circuit new_circuit(QubitIndex width, Level level) { return Circuit(width, level); }

Circuit invert(const Circuit& c) {
    Circuit out(c.width(), c.level());
    const auto& gs = c.gates();
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) out.append(gate_inverse(*it));
    if (c.layout()) out.set_layout(*c.layout());
    return out;
}

std::string emit_netlist(const Circuit& c) {
    std::ostringstream os;
    os << "# qsqrt netlist v1\n";
    os << "width " << c.width() << "\n";
    if (c.layout())
        for (const auto& r : c.layout()->regs)
            os << "reg " << r.name << " " << r.lo << " " << r.hi << "\n";
    for (const auto& g : c.gates()) {
        os << gate_mnemonic(g.kind);
        for (int i = 0; i < g.arity(); ++i)
            os << " " << g.ops[static_cast<std::size_t>(i)];
        os << "\n";
    }
    return os.str();
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

QubitIndex parse_index(std::string_view tok, std::size_t line_no) {
    QubitIndex v{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw std::runtime_error("netlist line " + std::to_string(line_no) +
                                 ": expected qubit index, got '" + std::string(tok) + "'");
    return v;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("netlist line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Circuit parse_netlist(std::string_view text) {
    struct PendingGate {
        std::size_t line_no;
        GateKind kind;
        std::vector<QubitIndex> ops;
    };
    std::optional<QubitIndex> width;
    RegisterLayout layout;
    std::vector<PendingGate> pending;
    bool saw_gate = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? text.size() - pos
                                                     : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = split_tokens(line);
        if (toks.empty()) continue;

        if (toks[0] == "width") {
            if (width) parse_fail(line_no, "duplicate width line");
            if (toks.size() != 2) parse_fail(line_no, "width takes one argument");
            width = parse_index(toks[1], line_no);
            if (*width == 0) parse_fail(line_no, "width must be >= 1");
            continue;
        }
        if (!width) parse_fail(line_no, "expected 'width <k>' before other content");
        if (toks[0] == "reg") {
            if (saw_gate) parse_fail(line_no, "reg lines must precede gates");
            if (toks.size() != 4) parse_fail(line_no, "reg takes name, lo, hi");
            layout.regs.push_back(Register{std::string(toks[1]),
                                           parse_index(toks[2], line_no),
                                           parse_index(toks[3], line_no)});
            continue;
        }
        auto kind = gate_kind_from_mnemonic(toks[0]);
        if (!kind) parse_fail(line_no, "unknown mnemonic '" + std::string(toks[0]) + "'");
        const int arity = gate_arity(*kind);
        if (static_cast<int>(toks.size()) - 1 != arity)
            parse_fail(line_no, "'" + std::string(toks[0]) + "' takes " +
                                    std::to_string(arity) + " qubit operand(s)");
        PendingGate pg{line_no, *kind, {}};
        for (int i = 0; i < arity; ++i)
            pg.ops.push_back(parse_index(toks[static_cast<std::size_t>(i) + 1], line_no));
        pending.push_back(std::move(pg));
        saw_gate = true;
    }
    if (!width) throw std::runtime_error("netlist: missing 'width <k>' line");

    Level level = Level::Macro;
    for (const auto& pg : pending)
        if (!is_macro_kind(pg.kind)) level = Level::CliffordT;

    Circuit c(*width, level);
    for (const auto& pg : pending) {
        try {
            Gate g{pg.kind, {}};
            for (std::size_t i = 0; i < pg.ops.size(); ++i) g.ops[i] = pg.ops[i];
            c.append(g);
        } catch (const std::out_of_range& e) {
            throw std::out_of_range("netlist line " + std::to_string(pg.line_no) + ": " +
                                    e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("netlist line " + std::to_string(pg.line_no) +
                                        ": " + e.what());
        }
    }
    if (!layout.regs.empty()) c.set_layout(std::move(layout));
    return c;
}

std::string emit_qasm(const Circuit& c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << c.width() << "];\n";
    if (c.layout())
        for (const auto& r : c.layout()->regs)
            os << "// reg " << r.name << " " << r.lo << " " << r.hi << "\n";
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::NCX) {
            os << "x q[" << g.ops[0] << "];\n";
            os << "cx q[" << g.ops[0] << "],q[" << g.ops[1] << "];\n";
            os << "x q[" << g.ops[0] << "];\n";
            continue;
        }
        os << gate_mnemonic(g.kind);
        for (int i = 0; i < g.arity(); ++i)
            os << (i == 0 ? " " : ",") << "q[" << g.ops[static_cast<std::size_t>(i)] << "]";
        os << ";\n";
    }
    return os.str();
}

}  // namespace qsqrt
