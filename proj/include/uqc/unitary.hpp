#pragma once

#include <algorithm>
#include <limits>

#include "uqc/statevector.hpp"

namespace uqc {

/// Square complex matrix, row-major.  Sized for gadget oracles, not for
/// large-register work.
struct Matrix {
    size_t dim = 0;
    std::vector<cplx> a;

    Matrix() = default;
    explicit Matrix(size_t d) : dim(d), a(d * d, cplx{}) {}

    cplx& at(size_t row, size_t col) { return a[row * dim + col]; }
    const cplx& at(size_t row, size_t col) const { return a[row * dim + col]; }

    static Matrix identity(size_t d) {
        Matrix m(d);
        for (size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

inline double max_abs_diff(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.dim != rhs.dim) return std::numeric_limits<double>::infinity();
    double worst = 0;
    for (size_t i = 0; i < lhs.a.size(); ++i)
        worst = std::max(worst, std::abs(lhs.a[i] - rhs.a[i]));
    return worst;
}

/// deviation of U^dagger U from the identity, max component
inline double unitarity_defect(const Matrix& u) {
    double worst = 0;
    for (size_t i = 0; i < u.dim; ++i) {
        for (size_t j = 0; j < u.dim; ++j) {
            cplx dot = 0;
            for (size_t k = 0; k < u.dim; ++k) dot += std::conj(u.at(k, i)) * u.at(k, j);
            worst = std::max(worst, std::abs(dot - (i == j ? cplx{1.0} : cplx{})));
        }
    }
    return worst;
}

/// Full unitary of a circuit: column k is the image of basis state k.
/// Capped at 12 qubits; intended for gadget-sized oracles.
inline Matrix unitary_of(const Circuit& c) {
    if (c.n_qubits > 12) throw CircuitError("unitary_of: register too wide");
    const size_t d = size_t(1) << c.n_qubits;
    Matrix m(d);
    for (size_t k = 0; k < d; ++k) {
        StateVector col = run(c, basis_state(c.n_qubits, k));
        for (size_t r = 0; r < d; ++r) m.at(r, k) = col.amps[r];
    }
    return m;
}

/// Matrix built directly from a basis-state rule |k> -> phase * |perm(k)>.
/// Used by tests as an implementation-independent oracle for the
/// permutation/phase gate families.
template <typename PermFn, typename PhaseFn>
Matrix matrix_from_rule(uint32_t n_qubits, PermFn&& perm, PhaseFn&& phase) {
    const size_t d = size_t(1) << n_qubits;
    Matrix m(d);
    for (size_t k = 0; k < d; ++k) m.at(perm(k), k) = phase(k);
    return m;
}

}  // namespace uqc
