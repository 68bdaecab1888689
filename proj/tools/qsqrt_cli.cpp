#include "qsqrt/circuit.hpp"
#include "qsqrt/expand.hpp"
#include "qsqrt/resources.hpp"
#include "qsqrt/simulate.hpp"
#include "qsqrt/sqrt_circuit.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::vector<std::uint32_t> parse_n_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) {
            throw std::invalid_argument("invalid n value: " + item);
        }
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty()) {
        throw std::invalid_argument("no n values given");
    }
    return out;
}

int write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream os(out_path);
    if (!os) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitIo;
    }
    os << text;
    os.flush();
    if (!os) {
        std::cerr << "error: write to " << out_path << " failed\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_synth(std::uint32_t n, const std::string& format,
              const std::string& level, const std::string& out_path) {
    auto [circuit, layout] = qsqrt::build_sqrt_circuit(n);
    qsqrt::Circuit emitted = std::move(circuit);
    if (level == "cliffordt") {
        emitted = qsqrt::expand_circuit(emitted);
    }
    const std::string text = format == "qasm" ? qsqrt::emit_qasm(emitted)
                                              : qsqrt::emit_netlist(emitted);
    return write_text(text, out_path);
}

int run_simulate(std::uint32_t n, std::uint64_t a, bool trace) {
    const qsqrt::OracleResult oracle = qsqrt::nonrestoring_sqrt_oracle(a, n);
    auto [circuit, layout] = qsqrt::build_sqrt_circuit(n);
    const qsqrt::BasisState out =
        qsqrt::apply_classical(circuit, qsqrt::encode_input(a, layout));
    const qsqrt::DecodedOutput decoded = qsqrt::decode_output(out, layout);
    if (trace) {
        std::cout << oracle.trace.to_text();
    }
    std::cout << "Y=" << decoded.y << " remainder=" << decoded.remainder
              << " restored=" << (decoded.restored ? "true" : "false") << "\n";
    if (decoded.y != oracle.y || decoded.remainder != oracle.remainder ||
        !decoded.restored) {
        std::cerr << "error: circuit output disagrees with the classical "
                     "recurrence (expected Y="
                  << oracle.y << " remainder=" << oracle.remainder << ")\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_verify(const std::string& n_list, bool allow_large) {
    const std::vector<std::uint32_t> ns = parse_n_list(n_list);
    for (std::uint32_t n : ns) {
        if (n > 12 && !allow_large) {
            throw std::invalid_argument(
                "verify caps n at 12; pass --allow-large to override");
        }
    }
    for (std::uint32_t n : ns) {
        const qsqrt::VerifyResult res = qsqrt::verify_sqrt_exhaustive(n);
        if (res.ok()) {
            std::cout << "n=" << n << ": " << res.inputs_checked
                      << " inputs, all pass\n";
            continue;
        }
        const qsqrt::VerifyFailure& f = *res.failure;
        std::cout << "n=" << n << ": FAIL at a=" << f.a << " (got Y=" << f.got_y
                  << " remainder=" << f.got_remainder << " restored="
                  << (f.got_restored ? "true" : "false") << "; want Y="
                  << f.want_y << " remainder=" << f.want_remainder << ")\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_report(std::uint32_t n) {
    const qsqrt::TcountBreakdown tc = qsqrt::analytic_tcount_breakdown(n);
    const qsqrt::TdepthBreakdown td = qsqrt::analytic_tdepth_breakdown(n);
    std::uint64_t part2_sum = 0;
    for (std::uint64_t v : tc.part2_rounds) part2_sum += v;

    std::cout << "analytic resources for n=" << n << "\n";
    std::cout << "  T-count: " << qsqrt::analytic_tcount(n) << "\n";
    std::cout << "    part 1: " << tc.part1 << "\n";
    if (tc.part2_rounds.empty()) {
        std::cout << "    part 2: 0 (no middle rounds at n=4)\n";
    } else {
        std::cout << "    part 2 (rounds i=2.." << n / 2 - 1
                  << "): " << part2_sum << "\n";
    }
    std::cout << "    part 3: " << tc.part3 << "\n";
    std::cout << "    summation total: " << qsqrt::analytic_tcount_summation(n)
              << "\n";
    std::cout << "  T-depth: " << td.total << "\n";
    std::cout << "    R-path: " << td.r_path_part1 << " + " << td.r_path_part2
              << " + " << td.r_path_part3 << " = " << td.r_path_total << "\n";
    std::cout << "    z-path: " << td.z_path_total << " (not the bound)\n";
    std::cout << "  qubits: " << qsqrt::analytic_qubits(n) << "\n";
    std::cout << "  Toffoli gates: " << qsqrt::analytic_toffoli_count(n)
              << "\n";

    if (n > 32) {
        std::cout << "measured report skipped for n > 32 (pass a smaller n "
                     "to cross-check the formulas)\n";
        return kExitOk;
    }
    auto [circuit, layout] = qsqrt::build_sqrt_circuit(n);
    const qsqrt::ResourceReport rep = qsqrt::measure_resources(circuit);
    const double ratio = static_cast<double>(rep.t_count) /
                         static_cast<double>(qsqrt::analytic_tcount(n));
    char ratio_buf[32];
    std::snprintf(ratio_buf, sizeof(ratio_buf), "%.5f", ratio);
    std::cout << "measured (reference expansion) for n=" << n << "\n";
    std::cout << "  gates: " << rep.gate_count
              << "  Toffoli: " << rep.toffoli_count << "\n";
    std::cout << "  T-count: " << rep.t_count << " (measured/analytic = "
              << ratio_buf << ")\n";
    std::cout << "  T-depth (global layers): " << rep.t_depth_global << "\n";
    std::cout << "  T-depth (per-qubit max): " << rep.t_depth_per_qubit_max
              << "\n";
    std::cout << "  qubits: " << rep.qubit_count << "\n";
    return kExitOk;
}

void require_compare_domain(const std::vector<std::uint32_t>& ns) {
    for (std::uint32_t n : ns) {
        if (n < 4 || n > 512 || n % 2 != 0) {
            throw std::invalid_argument(
                "compare requires even n in 4..512");
        }
    }
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

int run_compare(const std::string& n_list, bool csv, bool averages,
                const std::string& out_path) {
    std::ostringstream os;
    if (!n_list.empty()) {
        const std::vector<std::uint32_t> ns = parse_n_list(n_list);
        require_compare_domain(ns);
        const qsqrt::ComparisonTable table = qsqrt::comparison_table(ns);
        os << (csv ? table.to_csv() : table.to_text());
        if (!csv) {
            bool negative = false;
            for (const qsqrt::ComparisonRow& r : table.rows) {
                negative = negative ||
                           (r.tcount_saving_x100 && *r.tcount_saving_x100 < 0) ||
                           (r.qubit_saving_x100 && *r.qubit_saving_x100 < 0);
            }
            if (negative) {
                os << "note: negative savings mean the proposed design costs "
                      "more at that width\n";
            }
        }
    }
    if (averages) {
        os << "average savings of the proposed design (percent)\n";
        os << "  populations: even n in 4..512; powers of two in 4..512\n";
        for (const qsqrt::AverageSavings& s : qsqrt::average_savings()) {
            os << "  " << s.design << ": T-count " << fmt2(s.tcount_even_pct)
               << " (even), " << fmt2(s.tcount_pow2_pct) << " (pow2); qubits "
               << fmt2(s.qubit_even_pct) << " (even), "
               << fmt2(s.qubit_pow2_pct) << " (pow2)\n";
        }
    }
    if (n_list.empty() && !averages) {
        throw std::invalid_argument("compare needs --n and/or --averages");
    }
    return write_text(os.str(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-restoring quantum square-root circuit toolkit"};
    app.require_subcommand(1);

    std::uint32_t n = 0;
    std::uint64_t a = 0;
    std::string format = "netlist";
    std::string level = "macro";
    std::string out_path;
    std::string n_list;
    bool trace = false;
    bool allow_large = false;
    bool csv = false;
    bool averages = false;

    CLI::App* synth = app.add_subcommand("synth", "emit the circuit");
    synth->add_option("--n", n, "radicand width (even, >= 4)")->required();
    synth->add_option("--format", format, "netlist|qasm")
        ->check(CLI::IsMember({"netlist", "qasm"}));
    synth->add_option("--level", level, "macro|cliffordt")
        ->check(CLI::IsMember({"macro", "cliffordt"}));
    synth->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* simulate =
        app.add_subcommand("simulate", "run one radicand through the circuit");
    simulate->add_option("--n", n, "radicand width (even, >= 4)")->required();
    simulate->add_option("--a", a, "radicand, 0 <= a < 2^(n-1)")->required();
    simulate->add_flag("--trace", trace, "print the recurrence trace table");

    CLI::App* verify = app.add_subcommand(
        "verify", "check the circuit against the classical recurrence "
                  "exhaustively");
    verify->add_option("--n", n_list, "comma-separated widths, e.g. 4,6,8")
        ->required();
    verify->add_flag("--allow-large", allow_large,
                     "permit n > 12 (exponential runtime)");

    CLI::App* report =
        app.add_subcommand("report", "analytic and measured resource costs");
    report->add_option("--n", n, "radicand width (even, >= 4)")->required();

    CLI::App* compare = app.add_subcommand(
        "compare", "cost comparison against prior designs");
    compare->add_option("--n", n_list, "comma-separated widths in 4..512");
    compare->add_flag("--csv", csv, "emit CSV instead of aligned text");
    compare->add_flag("--averages", averages,
                      "append population-averaged savings");
    compare->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(synth)) {
            return run_synth(n, format, level, out_path);
        }
        if (app.got_subcommand(simulate)) {
            return run_simulate(n, a, trace);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(n_list, allow_large);
        }
        if (app.got_subcommand(report)) {
            return run_report(n);
        }
        if (app.got_subcommand(compare)) {
            return run_compare(n_list, csv, averages, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
