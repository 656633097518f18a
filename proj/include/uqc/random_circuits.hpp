#pragma once

#include "uqc/gates.hpp"
#include "uqc/random.hpp"

namespace uqc {

/// Random layered circuit over family F or F' (plus the family-expressible
/// abbreviations), exactly `depth` layers, every layer non-empty.
inline Circuit random_circuit(Rng& rng, uint32_t n, uint32_t depth, Family fam,
                              bool allow_sugar = true) {
    Circuit c(n, fam);
    for (uint32_t d = 0; d < depth; ++d) {
        Layer& layer = c.append_layer();
        std::vector<uint32_t> pool(n);
        for (uint32_t q = 0; q < n; ++q) pool[q] = q;
        for (uint32_t i = n; i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);

        size_t idx = 0;
        while (idx < pool.size()) {
            const size_t remaining = pool.size() - idx;
            const double roll = rng.uniform01();
            if (roll < 0.15) {  // leave this qubit idle
                ++idx;
                continue;
            }
            if (roll < 0.40 || remaining == 1) {
                GateKind k = GateKind::H;
                const double g = rng.uniform01();
                if (g < 0.45)
                    k = GateKind::H;
                else if (g < 0.80)
                    k = GateKind::T;
                else if (!allow_sugar)
                    k = GateKind::T;
                else {
                    static constexpr GateKind sugar[] = {GateKind::S, GateKind::Sdag,
                                                         GateKind::Tdag, GateKind::X, GateKind::Z};
                    k = sugar[rng.below(5)];
                }
                layer.gates.push_back(Gate::single(k, pool[idx]));
                ++idx;
                continue;
            }
            if (roll < 0.62) {
                layer.gates.push_back(Gate::cnot(pool[idx], pool[idx + 1]));
                idx += 2;
                continue;
            }
            const size_t w = 1 + rng.below(std::min<size_t>(remaining - 1, 3));
            std::vector<uint32_t> rest(pool.begin() + idx + 1, pool.begin() + idx + 1 + w);
            const bool zflavor = rng.chance(0.5);
            if (fam == Family::Fprime && rng.chance(0.4)) {
                if (zflavor && w >= 1) {
                    std::vector<uint32_t> qs(pool.begin() + idx, pool.begin() + idx + 1 + w);
                    layer.gates.push_back(Gate::gz(std::move(qs)));
                } else if (w >= 2) {
                    std::vector<uint32_t> controls(pool.begin() + idx, pool.begin() + idx + w);
                    layer.gates.push_back(Gate::toffoli(std::move(controls), pool[idx + w]));
                } else {
                    layer.gates.push_back(Gate::cnot(pool[idx], pool[idx + 1]));
                }
            } else {
                layer.gates.push_back(zflavor && allow_sugar
                                          ? Gate::zfanout(pool[idx], std::move(rest))
                                          : Gate::fanout(pool[idx], std::move(rest)));
            }
            idx += 1 + w;
        }
        if (layer.gates.empty())
            layer.gates.push_back(Gate::h(pool[rng.below(pool.size())]));
    }
    return c;
}

/// Random circuit of exactly `n_gates` gates drawn from a palette of
/// single- and two-qubit kinds, one gate per layer.
inline Circuit random_palette_circuit(Rng& rng, uint32_t n, uint32_t n_gates,
                                      const std::vector<GateKind>& palette) {
    Circuit c(n, Family::Fprime);
    for (uint32_t i = 0; i < n_gates; ++i) {
        const GateKind k = palette[rng.below(palette.size())];
        Layer& layer = c.append_layer();
        if (k == GateKind::Cnot) {
            if (n < 2) throw CircuitError("random_palette_circuit: cnot needs two qubits");
            uint32_t a = static_cast<uint32_t>(rng.below(n));
            uint32_t b = static_cast<uint32_t>(rng.below(n - 1));
            if (b >= a) ++b;
            layer.gates.push_back(Gate::cnot(a, b));
        } else {
            layer.gates.push_back(Gate::single(k, static_cast<uint32_t>(rng.below(n))));
        }
    }
    return c;
}

}  // namespace uqc
