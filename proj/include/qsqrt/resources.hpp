#pragma once

#include "qsqrt/circuit.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsqrt {

// Costs measured from an actual gate list. For macro-level circuits the
// T metrics are those of the Clifford+T expansion; the histogram, Toffoli
// count, and qubit count describe the circuit as given.
struct ResourceReport {
    std::uint64_t t_count{};
    // Number of distinct greedy layers containing a T or Tdg gate.
    std::uint64_t t_depth_global{};
    // Max over qubits of the number of T-bearing layers that touch the qubit.
    std::uint64_t t_depth_per_qubit_max{};
    std::uint32_t qubit_count{};
    std::uint64_t gate_count{};
    std::uint64_t toffoli_count{};
    std::map<GateKind, std::uint64_t> gate_histogram;
};

ResourceReport measure_resources(const Circuit& c);

// Closed-form costs of the synthesized circuit (n even, >= 4).
std::uint64_t analytic_tcount(std::uint32_t n);  // 7n^2/2 + 21n - 28
// Same value accumulated term by term: 42 for the opening stage, 28i+14 per
// middle round, 21n-14 for the closing stage.
std::uint64_t analytic_tcount_summation(std::uint32_t n);

struct TcountBreakdown {
    std::uint64_t part1{};
    std::vector<std::uint64_t> part2_rounds;  // i = 2 .. n/2-1
    std::uint64_t part3{};
    std::uint64_t total{};
};
TcountBreakdown analytic_tcount_breakdown(std::uint32_t n);

std::uint64_t analytic_tdepth(std::uint32_t n);  // 5n + 3

struct TdepthBreakdown {
    // Longest chain runs along the remainder register.
    std::uint64_t r_path_part1{};  // 10
    std::uint64_t r_path_part2{};  // 5n - 20
    std::uint64_t r_path_part3{};  // 13
    std::uint64_t r_path_total{};  // 5n + 3
    std::uint64_t z_path_total{};  // 2n (shorter, so not the bound)
    std::uint64_t total{};         // max of the two paths
};
TdepthBreakdown analytic_tdepth_breakdown(std::uint32_t n);

std::uint64_t analytic_qubits(std::uint32_t n);  // 2n + 1

// Toffoli gates in the synthesized macro circuit: n^2/2 + 5n - 6.
std::uint64_t analytic_toffoli_count(std::uint32_t n);

// Published cost formulas of comparable designs, all as functions of the
// radicand width n (even). t_depth is null where the source gives none.
struct DesignCostFormula {
    std::string name;
    std::string note;
    std::uint64_t (*t_count)(std::uint32_t);
    std::uint64_t (*t_depth)(std::uint32_t);
    std::uint64_t (*qubits)(std::uint32_t);
    bool has_t_depth() const { return t_depth != nullptr; }
};

// Four prior designs ("design-1".."design-4") followed by "proposed".
std::vector<DesignCostFormula> design_catalog();

// 100 * (1 - proposed/baseline) in hundredths of a percent, computed in
// exact integer arithmetic and rounded half away from zero.
std::int64_t improvement_x100(std::uint64_t baseline, std::uint64_t proposed);

// "-33.33" style rendering of a value scaled by 100.
std::string format_pct_x100(std::int64_t value_x100);

struct ComparisonRow {
    std::uint32_t n{};
    std::string design;
    std::uint64_t t_count{};
    std::optional<std::uint64_t> t_depth;
    std::uint64_t qubits{};
    // Savings of the proposed design against this row; empty on the
    // "proposed" row itself.
    std::optional<std::int64_t> tcount_saving_x100;
    std::optional<std::int64_t> qubit_saving_x100;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
    std::string to_csv() const;   // header + one line per row, NA for blanks
    std::string to_text() const;  // aligned human-readable table
};

ComparisonTable comparison_table(const std::vector<std::uint32_t>& ns);

// Mean T-count/qubit savings of the proposed design against each baseline,
// averaged over two width populations: every even n in [4, 512] and the
// powers of two in [4, 512].
struct AverageSavings {
    std::string design;
    double tcount_even_pct{};
    double tcount_pow2_pct{};
    double qubit_even_pct{};
    double qubit_pow2_pct{};
};

std::vector<AverageSavings> average_savings();

}  // namespace qsqrt
