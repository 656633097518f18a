#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace uqc {

/// Seeded generator with hand-rolled distributions so that identical seeds
/// give identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// uniform in [0, n)
    uint64_t below(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return r % n;
    }

    bool chance(double p) { return uniform01() < p; }

    /// uniform in [0, 1)
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// standard normal via Box-Muller
    double gaussian() {
        double u1;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace uqc
