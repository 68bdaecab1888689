#pragma once

#include "qsqrt/circuit.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace qsqrt {

inline constexpr QubitIndex kStatevectorWidthLimit = 20;
inline constexpr QubitIndex kUnitaryWidthLimit = 6;

// Computational basis state; bit i is the value of qubit i.
struct BasisState {
    QubitIndex width{};
    std::vector<std::uint8_t> bits;

    static BasisState zeros(QubitIndex width);
    // Interprets the whole state as an integer, qubit 0 least significant
    // (width <= 64).
    static BasisState from_index(QubitIndex width, std::uint64_t index);
    std::uint64_t to_index() const;

    std::uint8_t bit(QubitIndex q) const { return bits[q]; }
    void set_bit(QubitIndex q, std::uint8_t v) { bits[q] = v ? 1 : 0; }
    // Value of the contiguous range [lo, lo+len), least significant at lo.
    std::uint64_t range_value(QubitIndex lo, QubitIndex len) const;
    void set_range_value(QubitIndex lo, QubitIndex len, std::uint64_t value);

    bool operator==(const BasisState&) const = default;
};

// Classical-reversible semantics of Macro gates: X flips, CNOT xors the
// control in, NCX xors the negated control in, SWAP exchanges, CCX xors the
// AND of both controls into the target.
BasisState apply_classical(const Circuit& c, const BasisState& s);

struct StateVector {
    QubitIndex width{};
    std::vector<std::complex<double>> amps;  // size 2^width, qubit i = bit i

    // Validates dimensions and normalizes (throws if the norm is ~0).
    StateVector(QubitIndex width, std::vector<std::complex<double>> amplitudes);
    static StateVector basis(QubitIndex width, std::uint64_t index);
};

StateVector run_statevector(const Circuit& c, const StateVector& s);

struct Matrix {
    std::size_t dim{};
    std::vector<std::complex<double>> a;  // row-major, dim x dim

    static Matrix identity(std::size_t dim);
    std::complex<double>& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const {
        return a[r * dim + c];
    }
};

// Column-by-column statevector simulation; width <= kUnitaryWidthLimit.
Matrix unitary_of(const Circuit& c);

// Permutation matrix of a Macro circuit's classical action (same width limit).
Matrix permutation_matrix_of(const Circuit& c);

// max_ij |A_ij - lambda * B_ij| minimized over unit-modulus lambda (global
// phase); returns a large value if shapes differ.
double max_abs_diff_up_to_global_phase(const Matrix& A, const Matrix& B);

// max-norm of U * U^dagger - I.
double unitarity_defect(const Matrix& U);

}  // namespace qsqrt
