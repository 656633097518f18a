#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqc {

class CircuitError : public std::runtime_error {
public:
    explicit CircuitError(const std::string& what) : std::runtime_error(what) {}
};

/// Gate families of the layered IR.  F is {H, T, Fanout_n}; Fprime adds
/// Toffoli_n.  Both admit the family-expressible abbreviations
/// (S = T^2, X = H T^4 H, CNOT = Fanout_1, Z-fanout = H-conjugated fanout, ...).
enum class Family { F, Fprime };

enum class GateKind {
    H,
    T,
    Tdag,
    S,
    Sdag,
    X,
    Z,
    Cnot,          // control, target
    Toffoli,       // w >= 2 controls, then one target
    Fanout,        // control, then w >= 1 targets
    ZFanout,       // control, then w >= 1 targets
    GeneralizedZ,  // w >= 1 qubits, phase (-1)^{x1 x2 ... xw}
    GadgetRef,     // synthetic: applies a sub-circuit on the listed qubits
};

struct Circuit;

struct Gate {
    GateKind kind;
    std::vector<uint32_t> qubits;  // controls first, then targets
    std::shared_ptr<const Circuit> gadget;  // only for GadgetRef

    static Gate single(GateKind k, uint32_t q) { return Gate{k, {q}, nullptr}; }
    static Gate h(uint32_t q) { return single(GateKind::H, q); }
    static Gate t(uint32_t q) { return single(GateKind::T, q); }
    static Gate tdag(uint32_t q) { return single(GateKind::Tdag, q); }
    static Gate s(uint32_t q) { return single(GateKind::S, q); }
    static Gate sdag(uint32_t q) { return single(GateKind::Sdag, q); }
    static Gate x(uint32_t q) { return single(GateKind::X, q); }
    static Gate z(uint32_t q) { return single(GateKind::Z, q); }

    static Gate cnot(uint32_t control, uint32_t target) {
        return Gate{GateKind::Cnot, {control, target}, nullptr};
    }
    static Gate toffoli(std::vector<uint32_t> controls, uint32_t target) {
        controls.push_back(target);
        return Gate{GateKind::Toffoli, std::move(controls), nullptr};
    }
    static Gate fanout(uint32_t control, std::vector<uint32_t> targets) {
        std::vector<uint32_t> qs{control};
        qs.insert(qs.end(), targets.begin(), targets.end());
        return Gate{GateKind::Fanout, std::move(qs), nullptr};
    }
    static Gate zfanout(uint32_t control, std::vector<uint32_t> targets) {
        std::vector<uint32_t> qs{control};
        qs.insert(qs.end(), targets.begin(), targets.end());
        return Gate{GateKind::ZFanout, std::move(qs), nullptr};
    }
    static Gate gz(std::vector<uint32_t> qs) {
        return Gate{GateKind::GeneralizedZ, std::move(qs), nullptr};
    }
    static Gate gadget_ref(std::shared_ptr<const Circuit> sub, std::vector<uint32_t> qs) {
        return Gate{GateKind::GadgetRef, std::move(qs), std::move(sub)};
    }

    /// Width parameter of the parameterized kinds: number of targets for
    /// Fanout/ZFanout, number of controls for Toffoli, number of qubits for
    /// GeneralizedZ.  Zero for the fixed-arity kinds.
    uint32_t width() const {
        switch (kind) {
            case GateKind::Toffoli:
            case GateKind::Fanout:
            case GateKind::ZFanout:
                return static_cast<uint32_t>(qubits.size()) - 1;
            case GateKind::GeneralizedZ:
                return static_cast<uint32_t>(qubits.size());
            default:
                return 0;
        }
    }

    bool operator==(const Gate& other) const;
};

struct Layer {
    std::vector<Gate> gates;

    bool operator==(const Layer& other) const { return gates == other.gates; }
};

/// Layered circuit over a declared gate family.  Layers apply left to right;
/// gates within a layer act on pairwise disjoint qubit sets.
struct Circuit {
    uint32_t n_qubits = 0;
    std::vector<Layer> layers;
    Family family = Family::F;

    Circuit() = default;
    explicit Circuit(uint32_t n, Family fam = Family::F) : n_qubits(n), family(fam) {}

    Layer& append_layer() {
        layers.emplace_back();
        return layers.back();
    }

    bool operator==(const Circuit& other) const {
        return n_qubits == other.n_qubits && layers == other.layers;
    }
};

inline bool Gate::operator==(const Gate& other) const {
    if (kind != other.kind || qubits != other.qubits) return false;
    if (kind != GateKind::GadgetRef) return true;
    if (gadget == other.gadget) return true;
    if (!gadget || !other.gadget) return false;
    return *gadget == *other.gadget;
}

struct CircuitMetrics {
    uint32_t depth = 0;  // number of layers
    uint64_t size = 0;   // total gate count
    uint32_t width = 0;  // qubit count
};

inline CircuitMetrics metrics(const Circuit& c) {
    CircuitMetrics m;
    m.depth = static_cast<uint32_t>(c.layers.size());
    m.width = c.n_qubits;
    for (const auto& layer : c.layers) m.size += layer.gates.size();
    return m;
}

inline const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::T: return "t";
        case GateKind::Tdag: return "tdag";
        case GateKind::S: return "s";
        case GateKind::Sdag: return "sdag";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::Cnot: return "cnot";
        case GateKind::Toffoli: return "toffoli";
        case GateKind::Fanout: return "fanout";
        case GateKind::ZFanout: return "zfanout";
        case GateKind::GeneralizedZ: return "gz";
        case GateKind::GadgetRef: return "gadget";
    }
    return "?";
}

/// Arity / width sanity for a single gate, independent of any register.
inline void check_gate_shape(const Gate& g) {
    const size_t n = g.qubits.size();
    switch (g.kind) {
        case GateKind::H:
        case GateKind::T:
        case GateKind::Tdag:
        case GateKind::S:
        case GateKind::Sdag:
        case GateKind::X:
        case GateKind::Z:
            if (n != 1) throw CircuitError("single-qubit gate needs exactly one qubit");
            break;
        case GateKind::Cnot:
            if (n != 2) throw CircuitError("cnot needs exactly two qubits");
            break;
        case GateKind::Toffoli:
            if (n < 3) throw CircuitError("toffoli needs at least two controls and a target");
            break;
        case GateKind::Fanout:
        case GateKind::ZFanout:
            if (n < 2) throw CircuitError("fanout/zfanout needs a control and at least one target");
            break;
        case GateKind::GeneralizedZ:
            if (n < 1) throw CircuitError("gz needs at least one qubit");
            break;
        case GateKind::GadgetRef:
            if (!g.gadget) throw CircuitError("gadget ref without sub-circuit");
            if (n != g.gadget->n_qubits)
                throw CircuitError("gadget ref qubit count does not match sub-circuit");
            break;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (g.qubits[i] == g.qubits[j])
                throw CircuitError("gate uses qubit " + std::to_string(g.qubits[i]) + " twice");
}

inline bool kind_in_family(GateKind k, Family fam) {
    switch (k) {
        case GateKind::Toffoli:
        case GateKind::GeneralizedZ:
            return fam == Family::Fprime;
        default:
            return true;
    }
}

/// Full structural validation: gate shapes, register bounds, per-layer
/// disjointness, family membership.  Throws CircuitError.
inline void validate(const Circuit& c) {
    std::vector<uint32_t> seen(c.n_qubits, 0);
    uint32_t stamp = 0;
    for (size_t li = 0; li < c.layers.size(); ++li) {
        ++stamp;
        for (const Gate& g : c.layers[li].gates) {
            check_gate_shape(g);
            if (!kind_in_family(g.kind, c.family))
                throw CircuitError(std::string(kind_name(g.kind)) + " not allowed under declared family");
            if (g.kind == GateKind::GadgetRef) validate(*g.gadget);
            for (uint32_t q : g.qubits) {
                if (q >= c.n_qubits)
                    throw CircuitError("qubit " + std::to_string(q) + " out of range in layer " +
                                       std::to_string(li));
                if (seen[q] == stamp)
                    throw CircuitError("qubit " + std::to_string(q) + " used twice in layer " +
                                       std::to_string(li));
                seen[q] = stamp;
            }
        }
    }
}

namespace detail {

inline Gate remap_gate(const Gate& g, const std::vector<uint32_t>& map) {
    Gate out = g;
    for (auto& q : out.qubits) q = map[q];
    return out;
}

}  // namespace detail

/// Minimal family able to hold every gate of the circuit.
inline Family infer_family(const Circuit& c) {
    for (const auto& layer : c.layers)
        for (const Gate& g : layer.gates)
            if (g.kind == GateKind::Toffoli || g.kind == GateKind::GeneralizedZ)
                return Family::Fprime;
    return Family::F;
}

}  // namespace uqc
