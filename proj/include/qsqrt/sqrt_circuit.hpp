#pragma once

#include "qsqrt/arith.hpp"
#include "qsqrt/circuit.hpp"
#include "qsqrt/simulate.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsqrt {

// Canonical wire layout of the square-root circuit for an n-bit radicand:
// qubits 0..n-1 hold R (radicand in, remainder out), n..2n-1 hold F
// (initialized to the integer 1), and 2n is the single flag wire z.
// The root Y ends up in F_2..F_{n/2+1}, least significant at F_2.
struct SqrtLayout {
    std::uint32_t n{};
    QubitIndex r_lo{}, r_hi{};
    QubitIndex f_lo{}, f_hi{};
    QubitIndex z{};
    QubitIndex y_lo{}, y_hi{};

    static SqrtLayout make(std::uint32_t n);
    QubitIndex width() const { return 2 * n + 1; }
    QubitIndex r(std::uint32_t i) const { return r_lo + i; }
    QubitIndex f(std::uint32_t i) const { return f_lo + i; }
    RegisterLayout registers() const;
};

struct TraceRow {
    std::uint64_t r{};  // two's-complement bit pattern, n bits
    std::uint64_t f{};
    std::string note;
};

// Step-by-step R/F snapshots of the classical non-restoring recurrence,
// mirroring the two-column worked-example table.
struct OracleTrace {
    std::uint32_t n{};
    std::vector<TraceRow> rows;
    std::string to_text() const;
};

struct OracleResult {
    std::uint64_t y{};
    std::uint64_t remainder{};
    OracleTrace trace;
};

// Classical non-restoring square root: returns floor(sqrt(a)) and
// a - floor(sqrt(a))^2 with the full trace. Requires even n in [4, 62]
// and 0 <= a < 2^(n-1).
OracleResult nonrestoring_sqrt_oracle(std::uint64_t a, std::uint32_t n);

// The three synthesis stages. Part 2 runs for i = 2..n/2-1 and is absent
// for n = 4.
std::vector<Gate> build_part1(std::uint32_t n);
std::vector<Gate> build_part2(std::uint32_t n, std::uint32_t i);
std::vector<Gate> build_part3(std::uint32_t n);

// Full circuit: Part 1, Part 2 for ascending i, Part 3. Width is exactly
// 2n+1 and every input is computed garbage-free.
std::pair<Circuit, SqrtLayout> build_sqrt_circuit(std::uint32_t n);

// R = a, F = 1, z = 0.
BasisState encode_input(std::uint64_t a, const SqrtLayout& layout);

struct DecodedOutput {
    std::uint64_t y{};
    std::uint64_t remainder{};
    // true iff z = 0, F1F0 = 01, and the F bits above the Y window are 0.
    bool restored{};
};

DecodedOutput decode_output(const BasisState& s, const SqrtLayout& layout);

struct VerifyFailure {
    std::uint64_t a{};
    std::uint64_t got_y{}, got_remainder{};
    bool got_restored{};
    std::uint64_t want_y{}, want_remainder{};
};

struct VerifyResult {
    std::uint64_t inputs_checked{};
    std::optional<VerifyFailure> failure;
    bool ok() const { return !failure.has_value(); }
};

// Exhaustive bitvector simulation of c against the classical oracle over all
// valid radicands; inputs are distributed across threads (0 = hardware
// default). Reports the smallest failing radicand, if any.
VerifyResult verify_against_oracle(const Circuit& c, const SqrtLayout& layout,
                                   unsigned threads = 0);

// Convenience wrapper: build_sqrt_circuit(n) then verify_against_oracle.
VerifyResult verify_sqrt_exhaustive(std::uint32_t n, unsigned threads = 0);

}  // namespace qsqrt
