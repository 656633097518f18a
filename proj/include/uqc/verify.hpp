#pragma once

#include <sstream>

#include "uqc/random.hpp"
#include "uqc/sparse_state.hpp"
#include "uqc/specialize.hpp"

namespace uqc {

class DimensionError : public CircuitError {
public:
    using CircuitError::CircuitError;
};

enum class VerifyMode { AllBasis, RandomSuperposition };

inline const char* mode_name(VerifyMode m) {
    return m == VerifyMode::AllBasis ? "all-basis" : "random-superposition";
}

struct EquivalenceReport {
    VerifyMode mode = VerifyMode::AllBasis;
    uint32_t trials = 0;  // states checked (basis states plus random draws)
    double max_component_error = 0.0;
    double tolerance = 1e-9;
    bool ancilla_clean = true;
    bool encoding_restored = true;
    bool pass = false;

    std::string machine_record() const {
        std::ostringstream out;
        out << "report mode=" << mode_name(mode) << " trials=" << trials
            << " max_component_error=" << std::scientific << max_component_error
            << " tolerance=" << tolerance << " ancilla_clean=" << (ancilla_clean ? 1 : 0)
            << " encoding_restored=" << (encoding_restored ? 1 : 0) << " pass=" << (pass ? 1 : 0);
        return out.str();
    }
};

namespace detail {

/// Compare a sparse run result on (data+ancilla) against a dense reference on
/// data alone, ancillas expected |0>.  Returns the max component deviation and
/// tracks whether any out-of-tolerance weight sits on a dirty ancilla.
inline void compare_against_reference(const SparseState& out, const StateVector& expect_data,
                                      uint32_t n_data, double tol, double& max_err,
                                      bool& ancilla_clean) {
    std::unordered_map<BasisKey, cplx, BasisKeyHash> expected;
    expected.reserve(expect_data.dim());
    for (size_t z = 0; z < expect_data.dim(); ++z) {
        if (expect_data.amps[z] == cplx{}) continue;
        BasisKey k;
        for (uint32_t q = 0; q < n_data; ++q)
            if ((z >> q) & 1) k.set(q, true);
        expected.emplace(k, expect_data.amps[z]);
    }
    BasisKey data_mask;
    for (uint32_t q = 0; q < n_data; ++q) data_mask.set(q, true);
    for (const auto& [k, a] : out.entries) {
        BasisKey anc_bits = k ^ (k & data_mask);
        if (anc_bits.any()) {
            if (std::abs(a) > tol) ancilla_clean = false;
            max_err = std::max(max_err, std::abs(a));
            continue;
        }
        auto it = expected.find(k);
        if (it == expected.end()) {
            max_err = std::max(max_err, std::abs(a));
        } else {
            max_err = std::max(max_err, std::abs(a - it->second));
            expected.erase(it);
        }
    }
    for (const auto& [k, a] : expected) max_err = std::max(max_err, std::abs(a));
}

}  // namespace detail

/// Definition-1 oracle: does the template under encoding x act on every data
/// input exactly as the reference circuit, with ancillas returned to |0...0>
/// and the encoding left in place?  All-basis mode checks every basis input
/// (sufficient by linearity); random mode additionally drives seeded random
/// superpositions through both sides.
inline EquivalenceReport verify_encoding(const Circuit& tmpl, const RegisterLayout& layout,
                                         const Encoding& x, const Circuit& c_ref, VerifyMode mode,
                                         uint32_t trials = 8, uint64_t seed = 1,
                                         double tol = 1e-9) {
    if (c_ref.n_qubits != layout.data_count)
        throw DimensionError("verify: reference circuit width " + std::to_string(c_ref.n_qubits) +
                             " does not match template data register " +
                             std::to_string(layout.data_count));
    if (layout.data_count > 16) throw DimensionError("verify: data register too wide to enumerate");

    EquivalenceReport rep;
    rep.mode = mode;
    rep.tolerance = tol;

    SpecializedCircuit spec = specialize_classical(tmpl, layout, x);
    rep.encoding_restored = spec.encoding_restored;

    const uint32_t n = layout.data_count;
    const uint32_t total = spec.circuit.n_qubits;
    const size_t dim = size_t(1) << n;

    for (size_t y = 0; y < dim; ++y) {
        BasisKey key;
        for (uint32_t q = 0; q < n; ++q)
            if ((y >> q) & 1) key.set(q, true);
        SparseState out = run_sparse(spec.circuit, SparseState::basis(total, key));
        StateVector expect = run(c_ref, basis_state(n, y));
        detail::compare_against_reference(out, expect, n, tol, rep.max_component_error,
                                          rep.ancilla_clean);
        ++rep.trials;
    }

    if (mode == VerifyMode::RandomSuperposition) {
        Rng rng(seed);
        for (uint32_t trial = 0; trial < trials; ++trial) {
            StateVector psi(n);
            double norm = 0;
            for (auto& a : psi.amps) {
                a = cplx{rng.gaussian(), rng.gaussian()};
                norm += std::norm(a);
            }
            norm = std::sqrt(norm);
            for (auto& a : psi.amps) a /= norm;

            SparseState in;
            in.n_qubits = total;
            for (size_t y = 0; y < dim; ++y) {
                BasisKey key;
                for (uint32_t q = 0; q < n; ++q)
                    if ((y >> q) & 1) key.set(q, true);
                in.entries.emplace_back(key, psi.amps[y]);
            }
            SparseState out = run_sparse(spec.circuit, std::move(in));
            StateVector expect = run(c_ref, psi);
            detail::compare_against_reference(out, expect, n, tol, rep.max_component_error,
                                              rep.ancilla_clean);
            ++rep.trials;
        }
    }

    rep.pass = rep.max_component_error <= tol && rep.encoding_restored;
    return rep;
}

}  // namespace uqc
