#pragma once

#include <algorithm>

#include "uqc/gates.hpp"

namespace uqc {

inline Circuit circuit_from_layers(uint32_t n_qubits, std::vector<Layer> layers,
                                   Family fam = Family::Fprime) {
    Circuit c(n_qubits, fam);
    c.layers = std::move(layers);
    return c;
}

/// k sequential T gates on one qubit; diag(1, exp(i pi k / 4)).  T^8 = I, so
/// S = T^2, Z = T^4, Sdag = T^6 and Tdag = T^7 are all reachable this way.
inline Circuit power_of_t(unsigned k) {
    if (k >= 8) throw CircuitError("power_of_t: exponent must be in [0, 8)");
    Circuit c(1, Family::F);
    for (unsigned i = 0; i < k; ++i) c.append_layer().gates.push_back(Gate::t(0));
    return c;
}

/// Fanout_w as a CNOT tree on qubits (0 = control, 1..w = targets) with the
/// copy-doubling schedule: each round, every qubit that holds the control
/// value fans to one fresh target.  Depth is ceil(log2(w+1)).
///
/// The tree reproduces Fanout_w exactly on inputs whose targets are |0>
/// (the copy usage, which is how every construction here applies it; see
/// README on fanout semantics).  For w <= 2 the tree degenerates to CNOTs
/// from the control only and equals the full fanout unitary.
inline Circuit expand_fanout(uint32_t w) {
    if (w < 1) throw CircuitError("expand_fanout: need at least one target");
    Circuit c(w + 1, Family::F);
    std::vector<uint32_t> holders{0};
    uint32_t next = 1;
    while (next <= w) {
        Layer& layer = c.append_layer();
        const size_t holders_now = holders.size();
        for (size_t i = 0; i < holders_now && next <= w; ++i) {
            layer.gates.push_back(Gate::cnot(holders[i], next));
            holders.push_back(next);
            ++next;
        }
    }
    return c;
}

/// H-conjugation between Fanout_w and ZFanout_w on the gate's own qubits:
/// H on every target, the swapped-kind gate, H on every target again.
inline std::vector<Layer> conjugate_fanout_zfanout(const Gate& g) {
    if (g.kind != GateKind::Fanout && g.kind != GateKind::ZFanout)
        throw CircuitError("conjugate_fanout_zfanout: expected fanout or zfanout");
    check_gate_shape(g);
    Layer hs;
    for (size_t i = 1; i < g.qubits.size(); ++i) hs.gates.push_back(Gate::h(g.qubits[i]));
    Gate swapped = g;
    swapped.kind = g.kind == GateKind::Fanout ? GateKind::ZFanout : GateKind::Fanout;
    Layer mid;
    mid.gates.push_back(std::move(swapped));
    return {hs, std::move(mid), hs};
}

/// H-conjugation between Toffoli_w (w controls, one target) and the
/// generalized Z gate on the same w+1 qubits.  Only the target is conjugated;
/// for a generalized Z input the last listed qubit plays the target role.
inline std::vector<Layer> toffoli_z_conjugation(const Gate& g) {
    check_gate_shape(g);
    if (g.kind == GateKind::Toffoli) {
        Layer h;
        h.gates.push_back(Gate::h(g.qubits.back()));
        Layer mid;
        mid.gates.push_back(Gate::gz(g.qubits));
        return {h, std::move(mid), h};
    }
    if (g.kind == GateKind::GeneralizedZ) {
        if (g.qubits.size() < 3)
            throw CircuitError("toffoli_z_conjugation: gz narrower than 3 qubits has no Toffoli_w form");
        Layer h;
        h.gates.push_back(Gate::h(g.qubits.back()));
        Layer mid;
        std::vector<uint32_t> controls(g.qubits.begin(), g.qubits.end() - 1);
        mid.gates.push_back(Gate::toffoli(std::move(controls), g.qubits.back()));
        return {h, std::move(mid), h};
    }
    throw CircuitError("toffoli_z_conjugation: expected toffoli or gz");
}

/// Exact controlled-T on (control 0, target 1) with a workspace qubit 2
/// supplied as |0> and returned to |0>: Toffoli writes the AND, T puts the
/// phase on it, the mirror Toffoli erases it.
inline Circuit controlled_t_gadget() {
    Circuit c(3, Family::Fprime);
    c.append_layer().gates.push_back(Gate::toffoli({0, 1}, 2));
    c.append_layer().gates.push_back(Gate::t(2));
    c.append_layer().gates.push_back(Gate::toffoli({0, 1}, 2));
    return c;
}

/// Same ancilla trick for any diagonal power of T: phase exp(i pi k/4) on
/// control AND target.
inline Circuit controlled_t_power_gadget(unsigned k) {
    if (k >= 8) throw CircuitError("controlled_t_power_gadget: exponent must be in [0, 8)");
    Circuit c(3, Family::Fprime);
    c.append_layer().gates.push_back(Gate::toffoli({0, 1}, 2));
    for (unsigned i = 0; i < k; ++i) c.append_layer().gates.push_back(Gate::t(2));
    c.append_layer().gates.push_back(Gate::toffoli({0, 1}, 2));
    return c;
}

/// Controlled single-qubit gates, phase-exact (no global-phase slack).
/// Control is qubit 0, target qubit 1; the T/S/Sdag/Tdag forms carry a
/// workspace qubit 2.  The controlled-H identity used here is
///     (S H T) X (T' H S') = H   with   (S H T)(T' H S') = I,
/// so a single CNOT conjugated by those one-qubit words gives C-H exactly.
inline Circuit controlled_gadget(GateKind kind) {
    switch (kind) {
        case GateKind::X: {
            Circuit c(2, Family::F);
            c.append_layer().gates.push_back(Gate::cnot(0, 1));
            return c;
        }
        case GateKind::Z: {
            Circuit c(2, Family::F);
            c.append_layer().gates.push_back(Gate::h(1));
            c.append_layer().gates.push_back(Gate::cnot(0, 1));
            c.append_layer().gates.push_back(Gate::h(1));
            return c;
        }
        case GateKind::H: {
            Circuit c(2, Family::F);
            c.append_layer().gates.push_back(Gate::sdag(1));
            c.append_layer().gates.push_back(Gate::h(1));
            c.append_layer().gates.push_back(Gate::tdag(1));
            c.append_layer().gates.push_back(Gate::cnot(0, 1));
            c.append_layer().gates.push_back(Gate::t(1));
            c.append_layer().gates.push_back(Gate::h(1));
            c.append_layer().gates.push_back(Gate::s(1));
            return c;
        }
        case GateKind::T: return controlled_t_power_gadget(1);
        case GateKind::S: return controlled_t_power_gadget(2);
        case GateKind::Sdag: return controlled_t_power_gadget(6);
        case GateKind::Tdag: return controlled_t_power_gadget(7);
        default:
            throw CircuitError(std::string("controlled_gadget: unsupported kind ") +
                               kind_name(kind));
    }
}

/// Controlled swap of qubits 1 and 2 under control 0:
/// CNOT(2->1), Toffoli(0,1 -> 2), CNOT(2->1).
inline Circuit cswap_gadget() {
    Circuit c(3, Family::Fprime);
    c.append_layer().gates.push_back(Gate::cnot(2, 1));
    c.append_layer().gates.push_back(Gate::toffoli({0, 1}, 2));
    c.append_layer().gates.push_back(Gate::cnot(2, 1));
    return c;
}

/// Toffoli_w as an AND-accumulation chain of width-2 Toffolis.  Register:
/// controls 0..w-1, target w, then w-2 chain ancillas (supplied |0>, returned
/// to |0>).  Gate count is 2(w-2)+1 for w >= 3.
inline Circuit decompose_toffoli_n(uint32_t w) {
    if (w < 2) throw CircuitError("decompose_toffoli_n: width must be >= 2");
    const uint32_t target = w;
    if (w == 2) {
        Circuit c(3, Family::Fprime);
        c.append_layer().gates.push_back(Gate::toffoli({0, 1}, target));
        return c;
    }
    const uint32_t anc0 = w + 1;
    Circuit c(w + 1 + (w - 2), Family::Fprime);
    std::vector<Gate> compute;
    compute.push_back(Gate::toffoli({0, 1}, anc0));
    for (uint32_t i = 0; i + 3 < w; ++i)
        compute.push_back(Gate::toffoli({2 + i, anc0 + i}, anc0 + i + 1));
    for (const Gate& g : compute) c.append_layer().gates.push_back(g);
    c.append_layer().gates.push_back(Gate::toffoli({w - 1, anc0 + (w - 3)}, target));
    for (auto it = compute.rbegin(); it != compute.rend(); ++it)
        c.append_layer().gates.push_back(*it);
    return c;
}

/// The standard 15-gate {H, T, Tdag, CNOT} realization of the width-2
/// Toffoli (controls 0, 1, target 2), exact including phase.  11 layers.
inline Circuit toffoli3_to_standard() {
    const uint32_t a = 0, b = 1, t = 2;
    Circuit c(3, Family::F);
    auto layer = [&](std::vector<Gate> gs) {
        Layer& l = c.append_layer();
        l.gates = std::move(gs);
    };
    layer({Gate::h(t)});
    layer({Gate::cnot(b, t)});
    layer({Gate::tdag(t)});
    layer({Gate::cnot(a, t)});
    layer({Gate::t(t)});
    layer({Gate::cnot(b, t)});
    layer({Gate::tdag(t), Gate::t(b)});
    layer({Gate::cnot(a, t)});
    layer({Gate::t(t), Gate::cnot(a, b)});
    layer({Gate::h(t), Gate::t(a), Gate::tdag(b)});
    layer({Gate::cnot(a, b)});
    return c;
}

namespace detail {

inline std::vector<Layer> remap_layers(const std::vector<Layer>& layers,
                                       const std::vector<uint32_t>& map) {
    std::vector<Layer> out;
    out.reserve(layers.size());
    for (const Layer& l : layers) {
        Layer nl;
        nl.gates.reserve(l.gates.size());
        for (const Gate& g : l.gates) nl.gates.push_back(remap_gate(g, map));
        out.push_back(std::move(nl));
    }
    return out;
}

}  // namespace detail

/// Rewrites a circuit so that it only contains gates the declared family can
/// express directly: gadget refs are inlined, and under family F every
/// width-2 Toffoli becomes its standard {H,T,Tdag,CNOT} realization.  Gates
/// expanded in parallel within a source layer stay aligned layer by layer, so
/// the depth of a lowered layer is the deepest of its expansions.
inline Circuit lower_gates(const Circuit& c, Family fam) {
    Circuit out(c.n_qubits, fam);
    for (const Layer& layer : c.layers) {
        std::vector<std::vector<Layer>> expansions;
        size_t depth = layer.gates.empty() ? 1 : 0;
        for (const Gate& g : layer.gates) {
            std::vector<Layer> exp;
            if (g.kind == GateKind::GadgetRef) {
                Circuit sub = lower_gates(*g.gadget, fam);
                exp = detail::remap_layers(sub.layers, g.qubits);
            } else if (g.kind == GateKind::Toffoli && fam == Family::F) {
                if (g.width() != 2)
                    throw CircuitError("lower_gates: wide Toffoli needs chain ancillas; decompose first");
                exp = detail::remap_layers(toffoli3_to_standard().layers, g.qubits);
            } else if (g.kind == GateKind::GeneralizedZ && fam == Family::F &&
                       g.qubits.size() > 1) {
                throw CircuitError("lower_gates: generalized Z is not expressible under family F");
            } else if (g.kind == GateKind::GeneralizedZ && g.qubits.size() == 1) {
                Layer l;
                l.gates.push_back(Gate::z(g.qubits[0]));
                exp = {std::move(l)};
            } else {
                Layer l;
                l.gates.push_back(g);
                exp = {std::move(l)};
            }
            depth = std::max(depth, exp.size());
            expansions.push_back(std::move(exp));
        }
        const size_t base = out.layers.size();
        for (size_t i = 0; i < depth; ++i) out.append_layer();
        for (const auto& exp : expansions)
            for (size_t i = 0; i < exp.size(); ++i) {
                Layer& dst = out.layers[base + i];
                dst.gates.insert(dst.gates.end(), exp[i].gates.begin(), exp[i].gates.end());
            }
    }
    return out;
}

}  // namespace uqc
