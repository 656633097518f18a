#pragma once

#include <array>
#include <bit>
#include <unordered_map>

#include "uqc/statevector.hpp"

namespace uqc {

/// 256-bit basis label; bit i = qubit i.  Wide enough for the size-universal
/// templates at desk scale, where registers run past 64 qubits.
struct BasisKey {
    static constexpr uint32_t kMaxQubits = 256;
    std::array<uint64_t, 4> w{};

    static BasisKey zero() { return {}; }

    bool get(uint32_t q) const { return (w[q >> 6] >> (q & 63)) & 1u; }
    void set(uint32_t q, bool v) {
        const uint64_t bit = uint64_t(1) << (q & 63);
        if (v)
            w[q >> 6] |= bit;
        else
            w[q >> 6] &= ~bit;
    }
    void flip(uint32_t q) { w[q >> 6] ^= uint64_t(1) << (q & 63); }

    BasisKey operator^(const BasisKey& o) const {
        BasisKey r;
        for (int i = 0; i < 4; ++i) r.w[i] = w[i] ^ o.w[i];
        return r;
    }
    BasisKey operator&(const BasisKey& o) const {
        BasisKey r;
        for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    bool operator==(const BasisKey& o) const { return w == o.w; }

    bool covers(const BasisKey& mask) const {  // (this & mask) == mask
        for (int i = 0; i < 4; ++i)
            if ((w[i] & mask.w[i]) != mask.w[i]) return false;
        return true;
    }
    bool intersects(const BasisKey& mask) const {
        for (int i = 0; i < 4; ++i)
            if (w[i] & mask.w[i]) return true;
        return false;
    }
    unsigned parity_under(const BasisKey& mask) const {
        uint64_t acc = 0;
        for (int i = 0; i < 4; ++i) acc ^= w[i] & mask.w[i];
        return std::popcount(acc) & 1u;
    }
    bool any() const { return w[0] | w[1] | w[2] | w[3]; }
};

struct BasisKeyHash {
    size_t operator()(const BasisKey& k) const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t x : k.w) {
            x ^= x >> 30;
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 27;
            h = (h ^ x) * 0x94d049bb133111ebull;
        }
        return static_cast<size_t>(h ^ (h >> 31));
    }
};

inline BasisKey key_mask(const std::vector<uint32_t>& qubits, size_t from, size_t to) {
    BasisKey m;
    for (size_t i = from; i < to; ++i) m.set(qubits[i], true);
    return m;
}

/// Sparse state: the amplitudes of the basis states in the support.  Entries
/// hold distinct keys; order is not significant.  Suited to circuits that are
/// mostly permutation/phase gates, where the support never grows.
struct SparseState {
    uint32_t n_qubits = 0;
    std::vector<std::pair<BasisKey, cplx>> entries;

    static SparseState basis(uint32_t n, const BasisKey& k) {
        SparseState s;
        s.n_qubits = n;
        s.entries.emplace_back(k, cplx{1.0, 0.0});
        return s;
    }

    double norm2() const {
        double t = 0;
        for (const auto& [k, a] : entries) t += std::norm(a);
        return t;
    }

    /// Amplitudes below this magnitude are numerical residue of exact
    /// cancellation and are dropped when the support is rebuilt.
    static constexpr double kDropBelow = 1e-13;
};

namespace detail {

inline void sparse_h(SparseState& s, uint32_t q) {
    std::unordered_map<BasisKey, cplx, BasisKeyHash> acc;
    acc.reserve(s.entries.size() * 2);
    for (const auto& [k, a] : s.entries) {
        BasisKey k0 = k, k1 = k;
        k0.set(q, false);
        k1.set(q, true);
        if (!k.get(q)) {
            acc[k0] += a * kInvSqrt2;
            acc[k1] += a * kInvSqrt2;
        } else {
            acc[k0] += a * kInvSqrt2;
            acc[k1] -= a * kInvSqrt2;
        }
    }
    s.entries.clear();
    for (auto& [k, a] : acc)
        if (std::abs(a.real()) > SparseState::kDropBelow ||
            std::abs(a.imag()) > SparseState::kDropBelow)
            s.entries.emplace_back(k, a);
}

}  // namespace detail

inline void apply_gate_inplace(SparseState& s, const Gate& g) {
    switch (g.kind) {
        case GateKind::H:
            detail::sparse_h(s, g.qubits[0]);
            return;
        case GateKind::T:
        case GateKind::S:
        case GateKind::Z:
        case GateKind::Sdag:
        case GateKind::Tdag: {
            unsigned eighths = 0;
            diagonal_phase_eighths(g.kind, eighths);
            const cplx phase = t_phase_power(eighths);
            const uint32_t q = g.qubits[0];
            for (auto& [k, a] : s.entries)
                if (k.get(q)) a *= phase;
            return;
        }
        case GateKind::X: {
            const uint32_t q = g.qubits[0];
            for (auto& [k, a] : s.entries) k.flip(q);
            return;
        }
        case GateKind::Cnot:
        case GateKind::Toffoli: {
            const BasisKey cmask = key_mask(g.qubits, 0, g.qubits.size() - 1);
            const uint32_t t = g.qubits.back();
            for (auto& [k, a] : s.entries)
                if (k.covers(cmask)) k.flip(t);
            return;
        }
        case GateKind::Fanout: {
            const uint32_t c = g.qubits[0];
            const BasisKey tmask = key_mask(g.qubits, 1, g.qubits.size());
            for (auto& [k, a] : s.entries)
                if (k.get(c)) k = k ^ tmask;
            return;
        }
        case GateKind::ZFanout: {
            const uint32_t c = g.qubits[0];
            const BasisKey tmask = key_mask(g.qubits, 1, g.qubits.size());
            for (auto& [k, a] : s.entries)
                if (k.get(c) && k.parity_under(tmask)) a = -a;
            return;
        }
        case GateKind::GeneralizedZ: {
            const BasisKey mask = key_mask(g.qubits, 0, g.qubits.size());
            for (auto& [k, a] : s.entries)
                if (k.covers(mask)) a = -a;
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

inline void run_inplace(SparseState& s, const Circuit& c) {
    if (c.n_qubits != s.n_qubits) throw CircuitError("run: register width mismatch");
    for (const auto& layer : c.layers)
        for (const Gate& g : layer.gates) apply_gate_inplace(s, g);
}

inline SparseState run_sparse(const Circuit& c, SparseState s) {
    run_inplace(s, c);
    return s;
}

inline SparseState to_sparse(const StateVector& dense) {
    SparseState s;
    s.n_qubits = dense.n_qubits;
    for (size_t k = 0; k < dense.dim(); ++k) {
        if (dense.amps[k] == cplx{}) continue;
        BasisKey key;
        for (uint32_t q = 0; q < dense.n_qubits; ++q)
            if ((k >> q) & 1) key.set(q, true);
        s.entries.emplace_back(key, dense.amps[k]);
    }
    return s;
}

}  // namespace uqc
