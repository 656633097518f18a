#pragma once

#include "uqc/gadgets.hpp"
#include "uqc/layout.hpp"
#include "uqc/statevector.hpp"

namespace uqc {

/// Raised when a template would push an encoding qubit out of a basis state;
/// that signals a malformed template, not a bad encoding.
class ClassicalityError : public CircuitError {
public:
    using CircuitError::CircuitError;
};

/// Result of specializing a template against one encoding: an equivalent
/// circuit over the data+ancilla register only (data first, then ancillas in
/// ascending template order).
struct SpecializedCircuit {
    Circuit circuit;
    uint32_t n_data = 0;
    uint32_t n_ancilla = 0;
    bool encoding_restored = true;  // encoding qubits end with their input values
};

/// Evaluates the classical evolution of the encoding qubits and strips them
/// out: controls fed from the encoding become "gate present/absent", X on an
/// encoding qubit flips the tracked bit, diagonal phases on encoding qubits
/// accumulate into one global phase which is re-emitted on a |0> ancilla at
/// the end.  Exploits the template property that encoding qubits stay in
/// basis states for every input.
inline SpecializedCircuit specialize_classical(const Circuit& tmpl, const RegisterLayout& layout,
                                               const Encoding& x) {
    if (tmpl.n_qubits != layout.n_total)
        throw CircuitError("specialize: layout does not match circuit width");
    if (x.size() != layout.encoding.size())
        throw CircuitError("specialize: encoding length does not match layout");

    constexpr uint32_t kDynamic = UINT32_MAX;
    std::vector<uint32_t> new_index(tmpl.n_qubits, kDynamic);
    std::vector<int> enc_slot(tmpl.n_qubits, -1);
    for (uint32_t i = 0; i < layout.data_count; ++i) new_index[layout.data_begin + i] = i;
    uint32_t next = layout.data_count;
    std::vector<uint32_t> anc_sorted = layout.ancilla;
    std::sort(anc_sorted.begin(), anc_sorted.end());
    for (uint32_t q : anc_sorted) new_index[q] = next++;
    for (size_t i = 0; i < layout.encoding.size(); ++i) enc_slot[layout.encoding[i]] = int(i);

    std::vector<uint8_t> bit(x.bits);
    auto is_enc = [&](uint32_t q) { return enc_slot[q] >= 0; };
    auto enc_bit = [&](uint32_t q) -> uint8_t& { return bit[enc_slot[q]]; };

    SpecializedCircuit result;
    result.n_data = layout.data_count;
    result.n_ancilla = static_cast<uint32_t>(anc_sorted.size());
    result.circuit = Circuit(result.n_data + result.n_ancilla, tmpl.family);

    unsigned phase_eighths = 0;  // global phase exp(i pi/4)^phase_eighths

    Layer* out = nullptr;
    auto emit = [&](Gate g) {
        for (auto& q : g.qubits) q = new_index[q];
        out->gates.push_back(std::move(g));
    };

    auto process = [&](const Gate& g, auto&& self) -> void {
        switch (g.kind) {
            case GateKind::GadgetRef: {
                for (const Layer& l : g.gadget->layers)
                    for (const Gate& sub : l.gates) self(detail::remap_gate(sub, g.qubits), self);
                return;
            }
            case GateKind::H:
                if (is_enc(g.qubits[0]))
                    throw ClassicalityError("specialize: H would put encoding qubit " +
                                            std::to_string(g.qubits[0]) + " in superposition");
                emit(g);
                return;
            case GateKind::X:
                if (is_enc(g.qubits[0])) {
                    enc_bit(g.qubits[0]) ^= 1;
                    return;
                }
                emit(g);
                return;
            case GateKind::T:
            case GateKind::S:
            case GateKind::Z:
            case GateKind::Sdag:
            case GateKind::Tdag: {
                if (is_enc(g.qubits[0])) {
                    unsigned eighths = 0;
                    diagonal_phase_eighths(g.kind, eighths);
                    if (enc_bit(g.qubits[0])) phase_eighths = (phase_eighths + eighths) & 7u;
                    return;
                }
                emit(g);
                return;
            }
            case GateKind::Cnot: {
                const uint32_t c = g.qubits[0], t = g.qubits[1];
                if (is_enc(t)) {
                    if (!is_enc(c))
                        throw ClassicalityError("specialize: CNOT with dynamic control writes encoding qubit");
                    if (enc_bit(c)) enc_bit(t) ^= 1;
                    return;
                }
                if (is_enc(c)) {
                    if (enc_bit(c)) emit(Gate::x(t));
                    return;
                }
                emit(g);
                return;
            }
            case GateKind::Toffoli: {
                std::vector<uint32_t> dyn_controls;
                for (size_t i = 0; i + 1 < g.qubits.size(); ++i) {
                    const uint32_t c = g.qubits[i];
                    if (is_enc(c)) {
                        if (!enc_bit(c)) return;  // control clear: gate absent
                    } else {
                        dyn_controls.push_back(c);
                    }
                }
                const uint32_t t = g.qubits.back();
                if (is_enc(t)) {
                    if (!dyn_controls.empty())
                        throw ClassicalityError("specialize: Toffoli with dynamic controls writes encoding qubit");
                    enc_bit(t) ^= 1;
                    return;
                }
                if (dyn_controls.empty())
                    emit(Gate::x(t));
                else if (dyn_controls.size() == 1)
                    emit(Gate::cnot(dyn_controls[0], t));
                else
                    emit(Gate::toffoli(std::move(dyn_controls), t));
                return;
            }
            case GateKind::Fanout: {
                const uint32_t c = g.qubits[0];
                if (is_enc(c)) {
                    if (!enc_bit(c)) return;
                    for (size_t i = 1; i < g.qubits.size(); ++i) {
                        const uint32_t t = g.qubits[i];
                        if (is_enc(t))
                            enc_bit(t) ^= 1;
                        else
                            emit(Gate::x(t));
                    }
                    return;
                }
                std::vector<uint32_t> dyn_targets;
                for (size_t i = 1; i < g.qubits.size(); ++i) {
                    if (is_enc(g.qubits[i]))
                        throw ClassicalityError("specialize: fanout with dynamic control writes encoding qubit");
                    dyn_targets.push_back(g.qubits[i]);
                }
                emit(Gate::fanout(c, std::move(dyn_targets)));
                return;
            }
            case GateKind::ZFanout: {
                const uint32_t c = g.qubits[0];
                if (is_enc(c)) {
                    if (!enc_bit(c)) return;
                    for (size_t i = 1; i < g.qubits.size(); ++i) {
                        const uint32_t t = g.qubits[i];
                        if (is_enc(t)) {
                            if (enc_bit(t)) phase_eighths = (phase_eighths + 4) & 7u;
                        } else {
                            emit(Gate::z(t));
                        }
                    }
                    return;
                }
                std::vector<uint32_t> dyn_targets;
                unsigned enc_parity = 0;
                for (size_t i = 1; i < g.qubits.size(); ++i) {
                    const uint32_t t = g.qubits[i];
                    if (is_enc(t))
                        enc_parity ^= enc_bit(t);
                    else
                        dyn_targets.push_back(t);
                }
                if (enc_parity) emit(Gate::z(c));
                if (!dyn_targets.empty()) emit(Gate::zfanout(c, std::move(dyn_targets)));
                return;
            }
            case GateKind::GeneralizedZ: {
                std::vector<uint32_t> dyn;
                for (uint32_t q : g.qubits) {
                    if (is_enc(q)) {
                        if (!enc_bit(q)) return;  // a zero factor kills the phase
                    } else {
                        dyn.push_back(q);
                    }
                }
                if (dyn.empty())
                    phase_eighths = (phase_eighths + 4) & 7u;
                else if (dyn.size() == 1)
                    emit(Gate::z(dyn[0]));
                else
                    emit(Gate::gz(std::move(dyn)));
                return;
            }
        }
    };

    for (const Layer& layer : tmpl.layers) {
        Layer scratch;
        out = &scratch;
        for (const Gate& g : layer.gates) process(g, process);
        if (!scratch.gates.empty()) result.circuit.layers.push_back(std::move(scratch));
    }

    if (phase_eighths != 0) {
        // exp(i pi k/4) as a circuit: T^k seen by a transient |1> ancilla
        if (result.n_ancilla == 0)
            throw CircuitError("specialize: nonzero net phase but no ancilla to carry it");
        const uint32_t anc = result.n_data;  // first ancilla, |0> at this point
        Layer pre;
        pre.gates.push_back(Gate::x(anc));
        result.circuit.layers.push_back(std::move(pre));
        for (unsigned i = 0; i < phase_eighths; ++i) {
            Layer l;
            l.gates.push_back(Gate::t(anc));
            result.circuit.layers.push_back(std::move(l));
        }
        Layer post;
        post.gates.push_back(Gate::x(anc));
        result.circuit.layers.push_back(std::move(post));
    }

    for (size_t i = 0; i < x.bits.size(); ++i)
        if (bit[i] != x.bits[i]) result.encoding_restored = false;
    return result;
}

}  // namespace uqc
