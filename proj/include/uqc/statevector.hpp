#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "uqc/gates.hpp"

namespace uqc {

using cplx = std::complex<double>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

/// exp(i pi k / 4) for k in [0, 8); the eight powers of the T phase.
inline cplx t_phase_power(unsigned k) {
    static const cplx table[8] = {
        {1.0, 0.0},
        {kInvSqrt2, kInvSqrt2},
        {0.0, 1.0},
        {-kInvSqrt2, kInvSqrt2},
        {-1.0, 0.0},
        {-kInvSqrt2, -kInvSqrt2},
        {0.0, -1.0},
        {kInvSqrt2, -kInvSqrt2},
    };
    return table[k & 7u];
}

/// Phase exponent (in eighths of a turn) a diagonal single-qubit kind applies
/// to |1>.  Returns false for non-diagonal kinds.
inline bool diagonal_phase_eighths(GateKind k, unsigned& eighths) {
    switch (k) {
        case GateKind::T: eighths = 1; return true;
        case GateKind::S: eighths = 2; return true;
        case GateKind::Z: eighths = 4; return true;
        case GateKind::Sdag: eighths = 6; return true;
        case GateKind::Tdag: eighths = 7; return true;
        default: return false;
    }
}

/// Dense amplitude vector over 2^n basis states, little-endian: bit i of the
/// amplitude index is the value of qubit i.
struct StateVector {
    uint32_t n_qubits = 0;
    std::vector<cplx> amps;

    StateVector() = default;
    explicit StateVector(uint32_t n) : n_qubits(n), amps(size_t(1) << n, cplx{}) {}

    size_t dim() const { return amps.size(); }

    double norm2() const {
        double s = 0;
        for (const cplx& a : amps) s += std::norm(a);
        return s;
    }
};

/// Basis state from a bit string, index 0 = qubit 0.  Accepts '0'/'1' chars.
inline StateVector basis_state(std::string_view bits) {
    StateVector s(static_cast<uint32_t>(bits.size()));
    size_t index = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            index |= size_t(1) << i;
        else if (bits[i] != '0')
            throw CircuitError("basis_state: bits must be '0' or '1'");
    }
    s.amps[index] = 1.0;
    return s;
}

inline StateVector basis_state(uint32_t n_qubits, uint64_t index) {
    StateVector s(n_qubits);
    s.amps[index] = 1.0;
    return s;
}

namespace detail {

inline uint64_t mask_of(const std::vector<uint32_t>& qubits, size_t from, size_t to) {
    uint64_t m = 0;
    for (size_t i = from; i < to; ++i) m |= uint64_t(1) << qubits[i];
    return m;
}

}  // namespace detail

inline void apply_gate_inplace(StateVector& s, const Gate& g);

inline void run_inplace(StateVector& s, const Circuit& c) {
    if (c.n_qubits != s.n_qubits) throw CircuitError("run: register width mismatch");
    for (const auto& layer : c.layers)
        for (const Gate& g : layer.gates) apply_gate_inplace(s, g);
}

inline void apply_gate_inplace(StateVector& s, const Gate& g) {
    const size_t dim = s.dim();
    unsigned eighths = 0;
    switch (g.kind) {
        case GateKind::H: {
            const uint64_t bit = uint64_t(1) << g.qubits[0];
            for (size_t k = 0; k < dim; ++k) {
                if (k & bit) continue;
                cplx a = s.amps[k], b = s.amps[k | bit];
                s.amps[k] = (a + b) * kInvSqrt2;
                s.amps[k | bit] = (a - b) * kInvSqrt2;
            }
            return;
        }
        case GateKind::T:
        case GateKind::S:
        case GateKind::Z:
        case GateKind::Sdag:
        case GateKind::Tdag: {
            diagonal_phase_eighths(g.kind, eighths);
            const cplx phase = t_phase_power(eighths);
            const uint64_t bit = uint64_t(1) << g.qubits[0];
            for (size_t k = 0; k < dim; ++k)
                if (k & bit) s.amps[k] *= phase;
            return;
        }
        case GateKind::X: {
            const uint64_t bit = uint64_t(1) << g.qubits[0];
            for (size_t k = 0; k < dim; ++k)
                if (!(k & bit)) std::swap(s.amps[k], s.amps[k | bit]);
            return;
        }
        case GateKind::Cnot:
        case GateKind::Toffoli: {
            const uint64_t cmask = detail::mask_of(g.qubits, 0, g.qubits.size() - 1);
            const uint64_t tbit = uint64_t(1) << g.qubits.back();
            for (size_t k = 0; k < dim; ++k)
                if ((k & cmask) == cmask && !(k & tbit)) std::swap(s.amps[k], s.amps[k | tbit]);
            return;
        }
        case GateKind::Fanout: {
            const uint64_t cbit = uint64_t(1) << g.qubits[0];
            const uint64_t tmask = detail::mask_of(g.qubits, 1, g.qubits.size());
            for (size_t k = 0; k < dim; ++k) {
                if (!(k & cbit)) continue;
                const size_t j = k ^ tmask;
                if (k < j) std::swap(s.amps[k], s.amps[j]);
            }
            return;
        }
        case GateKind::ZFanout: {
            const uint64_t cbit = uint64_t(1) << g.qubits[0];
            const uint64_t tmask = detail::mask_of(g.qubits, 1, g.qubits.size());
            for (size_t k = 0; k < dim; ++k)
                if ((k & cbit) && (std::popcount(k & tmask) & 1)) s.amps[k] = -s.amps[k];
            return;
        }
        case GateKind::GeneralizedZ: {
            const uint64_t mask = detail::mask_of(g.qubits, 0, g.qubits.size());
            for (size_t k = 0; k < dim; ++k)
                if ((k & mask) == mask) s.amps[k] = -s.amps[k];
            return;
        }
        case GateKind::GadgetRef: {
            for (const auto& layer : g.gadget->layers)
                for (const Gate& sub : layer.gates)
                    apply_gate_inplace(s, detail::remap_gate(sub, g.qubits));
            return;
        }
    }
}

/// Pure-value API: the input state is left untouched.
inline StateVector apply_gate(StateVector s, const Gate& g) {
    apply_gate_inplace(s, g);
    return s;
}

inline StateVector run(const Circuit& c, StateVector s) {
    run_inplace(s, c);
    return s;
}

}  // namespace uqc
