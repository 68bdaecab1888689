#include "qsqrt/resources.hpp"

#include "qsqrt/expand.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace qsqrt {

namespace {

void require_valid_n(std::uint32_t n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("n must be even and >= 4");
    }
}

std::uint64_t u(std::uint32_t n) { return static_cast<std::uint64_t>(n); }

// Greedy ASAP layering: a gate lands one layer past the latest layer of any
// qubit it touches, so gates in one layer act on disjoint qubits.
void fill_t_depths(const Circuit& c, ResourceReport& rep) {
    const auto& gates = c.gates();
    std::vector<std::uint64_t> last(c.width(), 0);
    std::vector<std::uint64_t> gate_layer(gates.size(), 0);
    std::unordered_set<std::uint64_t> t_layers;
    for (std::size_t k = 0; k < gates.size(); ++k) {
        const Gate& g = gates[k];
        std::uint64_t layer = 0;
        for (int j = 0; j < g.arity(); ++j) {
            layer = std::max(layer, last[g.ops[j]]);
        }
        ++layer;
        for (int j = 0; j < g.arity(); ++j) {
            last[g.ops[j]] = layer;
        }
        gate_layer[k] = layer;
        if (is_t_kind(g.kind)) t_layers.insert(layer);
    }
    rep.t_depth_global = t_layers.size();

    std::vector<std::uint64_t> per_qubit(c.width(), 0);
    for (std::size_t k = 0; k < gates.size(); ++k) {
        if (!t_layers.count(gate_layer[k])) continue;
        const Gate& g = gates[k];
        for (int j = 0; j < g.arity(); ++j) {
            ++per_qubit[g.ops[j]];
        }
    }
    rep.t_depth_per_qubit_max =
        per_qubit.empty() ? 0 : *std::max_element(per_qubit.begin(), per_qubit.end());
}

std::uint64_t d1_tcount(std::uint32_t n) { return 7 * u(n) * u(n) + 14 * u(n); }
std::uint64_t d1_tdepth(std::uint32_t n) { return 3 * u(n) + 8; }
std::uint64_t d1_qubits(std::uint32_t n) { return u(n) * u(n) / 4 + 6 * u(n) - 2; }

std::uint64_t d2_tcount(std::uint32_t n) {
    return 420 * u(n) * u(n) + 168 * u(n) - 364;
}
std::uint64_t d2_qubits(std::uint32_t n) { return 42 * u(n) + 10; }

std::uint64_t d3_tcount(std::uint32_t n) {
    return 21 * u(n) * u(n) / 4 + 105 * u(n) / 2 - 42;
}
std::uint64_t d3_qubits(std::uint32_t n) { return u(n) * u(n) / 2 + 7 * u(n) + 2; }

std::uint64_t d4_tcount(std::uint32_t n) {
    return 21 * u(n) * u(n) / 4 + 7 * u(n) / 2 - 14;
}
std::uint64_t d4_qubits(std::uint32_t n) { return u(n) * u(n) / 2 + 3 * u(n) + 4; }

std::uint64_t proposed_tcount(std::uint32_t n) { return analytic_tcount(n); }
std::uint64_t proposed_tdepth(std::uint32_t n) { return analytic_tdepth(n); }
std::uint64_t proposed_qubits(std::uint32_t n) { return analytic_qubits(n); }

}  // namespace

ResourceReport measure_resources(const Circuit& c) {
    ResourceReport rep;
    rep.qubit_count = c.width();
    rep.gate_count = c.gates().size();
    for (const Gate& g : c.gates()) {
        ++rep.gate_histogram[g.kind];
        if (g.kind == GateKind::CCX) ++rep.toffoli_count;
    }

    std::optional<Circuit> expanded;
    if (c.level() == Level::Macro) {
        expanded = expand_circuit(c);
    }
    const Circuit& flat = expanded ? *expanded : c;
    for (const Gate& g : flat.gates()) {
        if (is_t_kind(g.kind)) ++rep.t_count;
    }
    fill_t_depths(flat, rep);
    return rep;
}

std::uint64_t analytic_tcount(std::uint32_t n) {
    require_valid_n(n);
    return 7 * u(n) * u(n) / 2 + 21 * u(n) - 28;
}

std::uint64_t analytic_tcount_summation(std::uint32_t n) {
    require_valid_n(n);
    std::uint64_t total = 0;
    for (std::uint32_t i = 1; i <= n / 2 - 1; ++i) {
        total += 28 * u(i) + 14;
    }
    return total + 21 * u(n) - 14;
}

TcountBreakdown analytic_tcount_breakdown(std::uint32_t n) {
    require_valid_n(n);
    TcountBreakdown b;
    b.part1 = 42;
    for (std::uint32_t i = 2; i <= n / 2 - 1; ++i) {
        b.part2_rounds.push_back(28 * u(i) + 14);
    }
    b.part3 = 21 * u(n) - 14;
    b.total = b.part1 + b.part3;
    for (std::uint64_t t : b.part2_rounds) b.total += t;
    return b;
}

std::uint64_t analytic_tdepth(std::uint32_t n) {
    require_valid_n(n);
    return 5 * u(n) + 3;
}

TdepthBreakdown analytic_tdepth_breakdown(std::uint32_t n) {
    require_valid_n(n);
    TdepthBreakdown b;
    b.r_path_part1 = 10;
    b.r_path_part2 = 5 * u(n) - 20;
    b.r_path_part3 = 13;
    b.r_path_total = b.r_path_part1 + b.r_path_part2 + b.r_path_part3;
    b.z_path_total = 2 * u(n);
    b.total = std::max(b.r_path_total, b.z_path_total);
    return b;
}

std::uint64_t analytic_qubits(std::uint32_t n) {
    require_valid_n(n);
    return 2 * u(n) + 1;
}

std::uint64_t analytic_toffoli_count(std::uint32_t n) {
    require_valid_n(n);
    return u(n) * u(n) / 2 + 5 * u(n) - 6;
}

std::vector<DesignCostFormula> design_catalog() {
    return {
        {"design-1", "restoring baseline; quadratic qubit growth", d1_tcount,
         d1_tdepth, d1_qubits},
        {"design-2", "linear qubit growth with large constant factors",
         d2_tcount, nullptr, d2_qubits},
        {"design-3", "quadratic qubits, reduced leading T coefficient",
         d3_tcount, nullptr, d3_qubits},
        {"design-4", "quadratic qubits, lowest baseline T-count", d4_tcount,
         nullptr, d4_qubits},
        {"proposed", "non-restoring synthesis on 2n+1 qubits", proposed_tcount,
         proposed_tdepth, proposed_qubits},
    };
}

std::int64_t improvement_x100(std::uint64_t baseline, std::uint64_t proposed) {
    if (baseline == 0) {
        throw std::invalid_argument("baseline cost must be positive");
    }
    const std::int64_t b = static_cast<std::int64_t>(baseline);
    const std::int64_t r =
        10000 * (b - static_cast<std::int64_t>(proposed));
    const std::int64_t q = (2 * std::llabs(r) + b) / (2 * b);
    return r < 0 ? -q : q;
}

std::string format_pct_x100(std::int64_t value_x100) {
    std::ostringstream os;
    if (value_x100 < 0) os << '-';
    const std::int64_t v = std::llabs(value_x100);
    os << v / 100 << '.';
    os << static_cast<char>('0' + (v / 10) % 10)
       << static_cast<char>('0' + v % 10);
    return os.str();
}

ComparisonTable comparison_table(const std::vector<std::uint32_t>& ns) {
    ComparisonTable table;
    const auto designs = design_catalog();
    for (std::uint32_t n : ns) {
        require_valid_n(n);
        const std::uint64_t pt = analytic_tcount(n);
        const std::uint64_t pq = analytic_qubits(n);
        for (const DesignCostFormula& d : designs) {
            ComparisonRow row;
            row.n = n;
            row.design = d.name;
            row.t_count = d.t_count(n);
            if (d.has_t_depth()) row.t_depth = d.t_depth(n);
            row.qubits = d.qubits(n);
            if (d.name != "proposed") {
                row.tcount_saving_x100 = improvement_x100(row.t_count, pt);
                row.qubit_saving_x100 = improvement_x100(row.qubits, pq);
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

std::string ComparisonTable::to_csv() const {
    std::ostringstream os;
    os << "n,design,t_count,t_depth,qubits,tcount_saving_pct,qubit_saving_pct\n";
    for (const ComparisonRow& r : rows) {
        os << r.n << ',' << r.design << ',' << r.t_count << ',';
        if (r.t_depth) {
            os << *r.t_depth;
        } else {
            os << "NA";
        }
        os << ',' << r.qubits << ',';
        if (r.tcount_saving_x100) {
            os << format_pct_x100(*r.tcount_saving_x100);
        } else {
            os << "NA";
        }
        os << ',';
        if (r.qubit_saving_x100) {
            os << format_pct_x100(*r.qubit_saving_x100);
        } else {
            os << "NA";
        }
        os << '\n';
    }
    return os.str();
}

std::string ComparisonTable::to_text() const {
    const std::vector<std::string> headers = {
        "n", "design", "t_count", "t_depth", "qubits", "t_saving%", "q_saving%"};
    std::vector<std::vector<std::string>> cells;
    cells.push_back(headers);
    for (const ComparisonRow& r : rows) {
        cells.push_back(
            {std::to_string(r.n), r.design, std::to_string(r.t_count),
             r.t_depth ? std::to_string(*r.t_depth) : "NA",
             std::to_string(r.qubits),
             r.tcount_saving_x100 ? format_pct_x100(*r.tcount_saving_x100) : "NA",
             r.qubit_saving_x100 ? format_pct_x100(*r.qubit_saving_x100) : "NA"});
    }
    std::vector<std::size_t> width(headers.size(), 0);
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            width[j] = std::max(width[j], row[j].size());
        }
    }
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::string cell = row[j];
            cell.resize(width[j], ' ');
            os << cell << (j + 1 == row.size() ? "" : "  ");
        }
        os << '\n';
    }
    return os.str();
}

std::vector<AverageSavings> average_savings() {
    std::vector<std::uint32_t> even_ns;
    for (std::uint32_t n = 4; n <= 512; n += 2) even_ns.push_back(n);
    std::vector<std::uint32_t> pow2_ns;
    for (std::uint32_t n = 4; n <= 512; n *= 2) pow2_ns.push_back(n);

    auto mean_savings = [](const DesignCostFormula& d,
                           const std::vector<std::uint32_t>& ns, bool qubits) {
        double sum = 0.0;
        for (std::uint32_t n : ns) {
            const std::uint64_t base = qubits ? d.qubits(n) : d.t_count(n);
            const std::uint64_t prop =
                qubits ? analytic_qubits(n) : analytic_tcount(n);
            sum += static_cast<double>(improvement_x100(base, prop)) / 100.0;
        }
        return sum / static_cast<double>(ns.size());
    };

    std::vector<AverageSavings> out;
    for (const DesignCostFormula& d : design_catalog()) {
        if (d.name == "proposed") continue;
        AverageSavings s;
        s.design = d.name;
        s.tcount_even_pct = mean_savings(d, even_ns, false);
        s.tcount_pow2_pct = mean_savings(d, pow2_ns, false);
        s.qubit_even_pct = mean_savings(d, even_ns, true);
        s.qubit_pow2_pct = mean_savings(d, pow2_ns, true);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace qsqrt
