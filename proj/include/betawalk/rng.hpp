#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace betawalk {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t counter_key(std::uint64_t seed, std::int64_t a, std::int64_t b, std::uint64_t salt = 0) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL * (salt + 1));
    h = mix64(h ^ (static_cast<std::uint64_t>(a) + 0x632be59bd9b4e019ULL));
    h = mix64(h ^ (static_cast<std::uint64_t>(b) + 0x8cb92ba72f3d8dd7ULL));
    return h;
}

// Per-site substream.  Only consumes its own state, so any site can be
// regenerated in any order on any thread.
class SiteStream {
public:
    explicit SiteStream(std::uint64_t key) : state_(key) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // uniform on the open interval (0, 1)
    double uniform() { return ((next() >> 11) + 0.5) * 0x1.0p-53; }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double r = std::sqrt(-2 * std::log(uniform()));
        double a = 2 * std::numbers::pi * uniform();
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // log of a Gamma(shape, 1) variate; Marsaglia-Tsang, boosted for shape < 1
    double log_gamma_variate(double shape) {
        if (shape == 1.0) return std::log(-std::log(uniform()));
        if (shape < 1.0) return log_gamma_variate(shape + 1.0) + std::log(uniform()) / shape;
        const double d = shape - 1.0 / 3.0, c = 1.0 / std::sqrt(9 * d);
        for (;;) {
            double x = normal();
            double v = 1 + c * x;
            if (v <= 0) continue;
            v = v * v * v;
            double lu = std::log(uniform());
            if (lu < 0.5 * x * x + d - d * v + d * std::log(v)) return std::log(d) + std::log(v);
        }
    }

private:
    std::uint64_t state_;
    double spare_ = 0;
    bool has_spare_ = false;
};

}  // namespace betawalk
