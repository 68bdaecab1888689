#include "qsqrt/sqrt_circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qsqrt {

namespace {

constexpr std::uint32_t kOracleMaxBits = 62;

void require_valid_n(std::uint32_t n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("n must be even and >= 4");
    }
}

std::uint64_t nbit_mask(std::uint32_t n) {
    return n >= 64 ? ~0ull : (1ull << n) - 1;
}

std::string bit_string(std::uint64_t v, std::uint32_t n) {
    std::string s(n, '0');
    for (std::uint32_t i = 0; i < n; ++i) {
        if ((v >> (n - 1 - i)) & 1) s[i] = '1';
    }
    return s;
}

struct RecurrenceResult {
    std::uint64_t y{};
    std::uint64_t remainder{};
};

// The classical digit recurrence. R is tracked as a signed value; displayed
// rows mask it to n-bit two's complement. When trace is null only the final
// (y, remainder) is produced.
RecurrenceResult run_recurrence(std::uint64_t a, std::uint32_t n,
                                OracleTrace* trace) {
    const std::uint32_t half = n / 2;
    const std::uint64_t mask = nbit_mask(n);
    std::int64_t r = static_cast<std::int64_t>((a >> (n - 2)) & 3);
    std::uint64_t f = 1;
    std::uint64_t y = 0;

    auto row = [&](std::string note) {
        if (trace) {
            trace->rows.push_back(
                {static_cast<std::uint64_t>(r) & mask, f & mask, std::move(note)});
        }
    };

    if (trace) {
        row("init: R = a" + std::to_string(n - 1) + " a" + std::to_string(n - 2) +
            "; F = 1");
    }
    r -= static_cast<std::int64_t>(f);
    row("trial subtract: R -= F");

    for (std::uint32_t i = half - 1; i >= 1; --i) {
        const bool neg = r < 0;
        if (!neg) y |= 1ull << i;
        r = 4 * r + static_cast<std::int64_t>((a >> (2 * i - 2)) & 3);
        f = ((y >> i) << 2) | (neg ? 0b11u : 0b01u);
        if (trace) {
            std::ostringstream os;
            os << "i=" << i << ": R " << (neg ? "< 0 so Y" : ">= 0 so Y") << i
               << "=" << (neg ? 0 : 1) << "; shift in a" << (2 * i - 1) << " a"
               << (2 * i - 2) << "; F = ";
            if (i == half - 1) {
                os << "Y" << i;
            } else {
                os << "Y" << (half - 1) << "..Y" << i;
            }
            os << (neg ? " 11" : " 01");
            row(os.str());
        }
        if (neg) {
            r += static_cast<std::int64_t>(f);
            row("add: R += F");
        } else {
            r -= static_cast<std::int64_t>(f);
            row("subtract: R -= F");
        }
    }

    const bool neg = r < 0;
    if (!neg) y |= 1;
    f = (y << 2) | 0b01u;
    row(std::string("final: R ") + (neg ? "< 0 so Y0=0" : ">= 0 so Y0=1") +
        "; F = Y 01");
    if (neg) {
        r += static_cast<std::int64_t>(2 * y + 1);
        row("restore: R += 2*Y + 1");
    } else {
        row("no restore needed");
    }
    return {y, static_cast<std::uint64_t>(r)};
}

}  // namespace

SqrtLayout SqrtLayout::make(std::uint32_t n) {
    require_valid_n(n);
    SqrtLayout layout;
    layout.n = n;
    layout.r_lo = 0;
    layout.r_hi = n - 1;
    layout.f_lo = n;
    layout.f_hi = 2 * n - 1;
    layout.z = 2 * n;
    layout.y_lo = layout.f(2);
    layout.y_hi = layout.f(n / 2 + 1);
    return layout;
}

RegisterLayout SqrtLayout::registers() const {
    return RegisterLayout{{Register{"R", r_lo, r_hi}, Register{"F", f_lo, f_hi},
                           Register{"z", z, z}}};
}

std::string OracleTrace::to_text() const {
    const std::size_t col = std::max<std::size_t>(n, 1);
    auto pad = [col](std::string s) {
        if (s.size() < col) s.append(col - s.size(), ' ');
        return s;
    };
    std::ostringstream os;
    os << pad("R") << "  " << pad("F") << "  note\n";
    for (const TraceRow& row : rows) {
        os << bit_string(row.r, n) << "  " << bit_string(row.f, n) << "  "
           << row.note << "\n";
    }
    return os.str();
}

OracleResult nonrestoring_sqrt_oracle(std::uint64_t a, std::uint32_t n) {
    require_valid_n(n);
    if (n > kOracleMaxBits) {
        throw std::invalid_argument("classical oracle supports n <= 62");
    }
    if (a >> (n - 1)) {
        throw std::invalid_argument("a must satisfy 0 <= a < 2^(n-1)");
    }
    OracleResult result;
    result.trace.n = n;
    const RecurrenceResult core = run_recurrence(a, n, &result.trace);
    result.y = core.y;
    result.remainder = core.remainder;
    return result;
}

std::vector<Gate> build_part1(std::uint32_t n) {
    const SqrtLayout L = SqrtLayout::make(n);
    std::vector<Gate> gates{
        gate_x(L.r(n - 2)),
        gate_cnot(L.r(n - 2), L.r(n - 1)),
        gate_cnot(L.r(n - 1), L.f(1)),
        gate_ncx(L.r(n - 1), L.z),
        gate_ncx(L.r(n - 1), L.f(2)),
    };
    const std::vector<Gate> block =
        build_addsub(L.z, Slice::range(L.r(n - 4), 4), Slice::range(L.f(0), 4));
    gates.insert(gates.end(), block.begin(), block.end());
    return gates;
}

std::vector<Gate> build_part2(std::uint32_t n, std::uint32_t i) {
    require_valid_n(n);
    if (n < 6) {
        throw std::invalid_argument("part 2 requires n >= 6");
    }
    if (i < 2 || i > n / 2 - 1) {
        throw std::invalid_argument("part 2 round index must be in [2, n/2 - 1]");
    }
    const SqrtLayout L = SqrtLayout::make(n);
    std::vector<Gate> gates{
        gate_ncx(L.z, L.f(1)),
        gate_cnot(L.f(2), L.z),
        gate_cnot(L.r(n - 1), L.f(1)),
        gate_ncx(L.r(n - 1), L.z),
        gate_ncx(L.r(n - 1), L.f(i + 1)),
    };
    for (std::uint32_t j = i + 1; j >= 3; --j) {
        gates.push_back(gate_swap(L.f(j), L.f(j - 1)));
    }
    const std::uint32_t w = 2 * i + 2;
    const std::vector<Gate> block =
        build_addsub(L.z, Slice::range(L.r(n - w), w), Slice::range(L.f(0), w));
    gates.insert(gates.end(), block.begin(), block.end());
    return gates;
}

std::vector<Gate> build_part3(std::uint32_t n) {
    const SqrtLayout L = SqrtLayout::make(n);
    std::vector<Gate> gates{
        gate_ncx(L.z, L.f(1)),
        gate_cnot(L.f(2), L.z),
        gate_ncx(L.r(n - 1), L.z),
        gate_ncx(L.r(n - 1), L.f(n / 2 + 1)),
        gate_x(L.z),
    };
    const std::vector<Gate> block =
        build_ctrl_add(L.z, Slice::range(L.r(0), n), Slice::range(L.f(0), n));
    gates.insert(gates.end(), block.begin(), block.end());
    gates.push_back(gate_x(L.z));
    for (std::uint32_t j = n / 2 + 1; j >= 3; --j) {
        gates.push_back(gate_swap(L.f(j), L.f(j - 1)));
    }
    gates.push_back(gate_cnot(L.f(2), L.z));
    return gates;
}

std::pair<Circuit, SqrtLayout> build_sqrt_circuit(std::uint32_t n) {
    const SqrtLayout layout = SqrtLayout::make(n);
    Circuit c = new_circuit(layout.width(), Level::Macro);
    c.set_layout(layout.registers());
    c.append(build_part1(n));
    for (std::uint32_t i = 2; i <= n / 2 - 1; ++i) {
        c.append(build_part2(n, i));
    }
    c.append(build_part3(n));
    return {std::move(c), layout};
}

BasisState encode_input(std::uint64_t a, const SqrtLayout& layout) {
    if (layout.n > kOracleMaxBits) {
        throw std::invalid_argument("classical encoding supports n <= 62");
    }
    if (a >> (layout.n - 1)) {
        throw std::invalid_argument("a must satisfy 0 <= a < 2^(n-1)");
    }
    BasisState s = BasisState::zeros(layout.width());
    s.set_range_value(layout.r_lo, layout.n, a);
    s.set_range_value(layout.f_lo, layout.n, 1);
    s.set_bit(layout.z, 0);
    return s;
}

DecodedOutput decode_output(const BasisState& s, const SqrtLayout& layout) {
    const std::uint32_t n = layout.n;
    DecodedOutput out;
    out.y = s.range_value(layout.y_lo, n / 2);
    out.remainder = s.range_value(layout.r_lo, n);
    bool restored = s.bit(layout.z) == 0 && s.bit(layout.f(0)) == 1 &&
                    s.bit(layout.f(1)) == 0;
    for (std::uint32_t k = n / 2 + 2; k < n; ++k) {
        restored = restored && s.bit(layout.f(k)) == 0;
    }
    out.restored = restored;
    return out;
}

VerifyResult verify_against_oracle(const Circuit& c, const SqrtLayout& layout,
                                   unsigned threads) {
    if (c.width() != layout.width()) {
        throw std::invalid_argument("circuit width does not match layout");
    }
    const std::uint32_t n = layout.n;
    const std::uint64_t total = 1ull << (n - 1);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, total));

    std::vector<std::optional<VerifyFailure>> worst(threads);
    auto worker = [&](unsigned tid) {
        for (std::uint64_t a = tid; a < total; a += threads) {
            const RecurrenceResult want = run_recurrence(a, n, nullptr);
            const BasisState out = apply_classical(c, encode_input(a, layout));
            const DecodedOutput got = decode_output(out, layout);
            if (got.y != want.y || got.remainder != want.remainder ||
                !got.restored) {
                if (!worst[tid] || a < worst[tid]->a) {
                    worst[tid] = VerifyFailure{a,      got.y,  got.remainder,
                                               got.restored, want.y,
                                               want.remainder};
                }
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (std::thread& t : pool) t.join();
    }

    VerifyResult result;
    result.inputs_checked = total;
    for (const auto& w : worst) {
        if (w && (!result.failure || w->a < result.failure->a)) {
            result.failure = w;
        }
    }
    return result;
}

VerifyResult verify_sqrt_exhaustive(std::uint32_t n, unsigned threads) {
    auto [circuit, layout] = build_sqrt_circuit(n);
    return verify_against_oracle(circuit, layout, threads);
}

}  // namespace qsqrt
