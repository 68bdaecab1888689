#include "qsqrt/simulate.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsqrt {

BasisState BasisState::zeros(QubitIndex width) {
    return BasisState{width, std::vector<std::uint8_t>(width, 0)};
}

BasisState BasisState::from_index(QubitIndex width, std::uint64_t index) {
    if (width > 64) throw std::invalid_argument("from_index supports width <= 64");
    BasisState s = zeros(width);
    for (QubitIndex q = 0; q < width; ++q) s.bits[q] = (index >> q) & 1u;
    return s;
}

std::uint64_t BasisState::to_index() const {
    if (width > 64) throw std::invalid_argument("to_index supports width <= 64");
    std::uint64_t v = 0;
    for (QubitIndex q = 0; q < width; ++q)
        v |= static_cast<std::uint64_t>(bits[q] & 1u) << q;
    return v;
}

std::uint64_t BasisState::range_value(QubitIndex lo, QubitIndex len) const {
    if (len > 64 || lo + len > width)
        throw std::out_of_range("bit range out of bounds");
    std::uint64_t v = 0;
    for (QubitIndex k = 0; k < len; ++k)
        v |= static_cast<std::uint64_t>(bits[lo + k] & 1u) << k;
    return v;
}

void BasisState::set_range_value(QubitIndex lo, QubitIndex len, std::uint64_t value) {
    if (len > 64 || lo + len > width)
        throw std::out_of_range("bit range out of bounds");
    if (len < 64 && (value >> len) != 0)
        throw std::invalid_argument("value does not fit in bit range");
    for (QubitIndex k = 0; k < len; ++k) bits[lo + k] = (value >> k) & 1u;
}

BasisState apply_classical(const Circuit& c, const BasisState& s) {
    if (c.level() != Level::Macro)
        throw std::invalid_argument("apply_classical requires a macro-level circuit");
    if (s.width != c.width())
        throw std::invalid_argument("state width " + std::to_string(s.width) +
                                    " does not match circuit width " +
                                    std::to_string(c.width()));
    BasisState out = s;
    auto& b = out.bits;
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::X: b[g.ops[0]] ^= 1u; break;
            case GateKind::CNOT: b[g.ops[1]] ^= b[g.ops[0]]; break;
            case GateKind::NCX: b[g.ops[1]] ^= b[g.ops[0]] ^ 1u; break;
            case GateKind::SWAP: std::swap(b[g.ops[0]], b[g.ops[1]]); break;
            case GateKind::CCX: b[g.ops[2]] ^= b[g.ops[0]] & b[g.ops[1]]; break;
            default:
                throw std::invalid_argument("non-classical gate in macro circuit");
        }
    }
    return out;
}

StateVector::StateVector(QubitIndex w, std::vector<std::complex<double>> amplitudes)
    : width(w), amps(std::move(amplitudes)) {
    if (width > kStatevectorWidthLimit)
        throw std::invalid_argument("statevector width " + std::to_string(width) +
                                    " exceeds limit " +
                                    std::to_string(kStatevectorWidthLimit));
    if (amps.size() != (std::uint64_t{1} << width))
        throw std::invalid_argument("amplitude count must be 2^width");
    double norm2 = 0;
    for (const auto& a : amps) norm2 += std::norm(a);
    if (norm2 < 1e-12)
        throw std::invalid_argument("statevector norm is zero");
    if (std::abs(norm2 - 1.0) > 1e-12) {
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& a : amps) a *= inv;
    }
}

StateVector StateVector::basis(QubitIndex width, std::uint64_t index) {
    if (width > kStatevectorWidthLimit)
        throw std::invalid_argument("statevector width exceeds limit");
    std::vector<std::complex<double>> amps(std::uint64_t{1} << width,
                                           std::complex<double>{0, 0});
    if (index >= amps.size())
        throw std::out_of_range("basis index out of range");
    amps[index] = {1, 0};
    return StateVector(width, std::move(amps));
}

namespace {

void apply_single(std::vector<std::complex<double>>& amps, QubitIndex q,
                  const std::complex<double> m00, const std::complex<double> m01,
                  const std::complex<double> m10, const std::complex<double> m11) {
    const std::uint64_t mask = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & mask) continue;
        const auto a0 = amps[i];
        const auto a1 = amps[i | mask];
        amps[i] = m00 * a0 + m01 * a1;
        amps[i | mask] = m10 * a0 + m11 * a1;
    }
}

void apply_perm_swap(std::vector<std::complex<double>>& amps, std::uint64_t sel_mask,
                     std::uint64_t sel_val, std::uint64_t flip_mask) {
    // Swaps amplitude pairs (i, i^flip_mask); the selector must match exactly
    // one element of each pair.
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & sel_mask) != sel_val) continue;
        std::swap(amps[i], amps[i ^ flip_mask]);
    }
}

}  // namespace

StateVector run_statevector(const Circuit& c, const StateVector& s) {
    if (s.width != c.width())
        throw std::invalid_argument("state width does not match circuit width");
    if (c.width() > kStatevectorWidthLimit)
        throw std::invalid_argument("circuit width exceeds statevector limit");
    StateVector out = s;
    auto& amps = out.amps;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::complex<double> omega =
        std::exp(std::complex<double>{0, std::numbers::pi / 4});
    for (const auto& g : c.gates()) {
        const auto q0 = std::uint64_t{1} << g.ops[0];
        switch (g.kind) {
            case GateKind::X:
                apply_single(amps, g.ops[0], 0, 1, 1, 0);
                break;
            case GateKind::H:
                apply_single(amps, g.ops[0], inv_sqrt2, inv_sqrt2, inv_sqrt2,
                             -inv_sqrt2);
                break;
            case GateKind::T:
                apply_single(amps, g.ops[0], 1, 0, 0, omega);
                break;
            case GateKind::TDG:
                apply_single(amps, g.ops[0], 1, 0, 0, std::conj(omega));
                break;
            case GateKind::S:
                apply_single(amps, g.ops[0], 1, 0, 0, {0, 1});
                break;
            case GateKind::SDG:
                apply_single(amps, g.ops[0], 1, 0, 0, {0, -1});
                break;
            case GateKind::CNOT: {
                const auto qt = std::uint64_t{1} << g.ops[1];
                apply_perm_swap(amps, q0 | qt, q0, qt);
                break;
            }
            case GateKind::NCX: {
                const auto qt = std::uint64_t{1} << g.ops[1];
                apply_perm_swap(amps, q0 | qt, 0, qt);
                break;
            }
            case GateKind::SWAP: {
                const auto q1 = std::uint64_t{1} << g.ops[1];
                // exchange |..1..0..> with |..0..1..>
                apply_perm_swap(amps, q0 | q1, q0, q0 | q1);
                break;
            }
            case GateKind::CCX: {
                const auto q1 = std::uint64_t{1} << g.ops[1];
                const auto qt = std::uint64_t{1} << g.ops[2];
                apply_perm_swap(amps, q0 | q1 | qt, q0 | q1, qt);
                break;
            }
        }
    }
    return out;
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m{dim, std::vector<std::complex<double>>(dim * dim, {0, 0})};
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = {1, 0};
    return m;
}

Matrix unitary_of(const Circuit& c) {
    if (c.width() > kUnitaryWidthLimit)
        throw std::invalid_argument("unitary_of supports width <= " +
                                    std::to_string(kUnitaryWidthLimit));
    const std::size_t dim = std::size_t{1} << c.width();
    Matrix m{dim, std::vector<std::complex<double>>(dim * dim, {0, 0})};
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector out = run_statevector(c, StateVector::basis(c.width(), col));
        for (std::size_t row = 0; row < dim; ++row) m.at(row, col) = out.amps[row];
    }
    return m;
}

Matrix permutation_matrix_of(const Circuit& c) {
    if (c.width() > kUnitaryWidthLimit)
        throw std::invalid_argument("permutation_matrix_of supports width <= " +
                                    std::to_string(kUnitaryWidthLimit));
    const std::size_t dim = std::size_t{1} << c.width();
    Matrix m{dim, std::vector<std::complex<double>>(dim * dim, {0, 0})};
    for (std::size_t col = 0; col < dim; ++col) {
        const auto out = apply_classical(c, BasisState::from_index(c.width(), col));
        m.at(out.to_index(), col) = {1, 0};
    }
    return m;
}

double max_abs_diff_up_to_global_phase(const Matrix& A, const Matrix& B) {
    if (A.dim != B.dim) return std::numeric_limits<double>::infinity();
    // Anchor the phase at B's largest entry.
    std::size_t best = 0;
    double best_mag = -1;
    for (std::size_t i = 0; i < B.a.size(); ++i)
        if (std::abs(B.a[i]) > best_mag) { best_mag = std::abs(B.a[i]); best = i; }
    if (best_mag < 1e-14) return std::numeric_limits<double>::infinity();
    const std::complex<double> lambda = A.a[best] / B.a[best];
    if (std::abs(std::abs(lambda) - 1.0) > 1e-6)
        return std::numeric_limits<double>::infinity();
    double worst = 0;
    for (std::size_t i = 0; i < A.a.size(); ++i)
        worst = std::max(worst, std::abs(A.a[i] - lambda * B.a[i]));
    return worst;
}

double unitarity_defect(const Matrix& U) {
    double worst = 0;
    for (std::size_t r = 0; r < U.dim; ++r) {
        for (std::size_t c = 0; c < U.dim; ++c) {
            std::complex<double> dot{0, 0};
            for (std::size_t k = 0; k < U.dim; ++k)
                dot += U.at(r, k) * std::conj(U.at(c, k));
            const std::complex<double> want = r == c ? std::complex<double>{1, 0}
                                                     : std::complex<double>{0, 0};
            worst = std::max(worst, std::abs(dot - want));
        }
    }
    return worst;
}

}  // namespace qsqrt
