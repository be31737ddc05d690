#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace herbench {

// splitmix64 step, used for deriving independent stream seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Named substreams of a run seed. Every source of randomness in a run draws
// from its own stream so that consuming one stream never perturbs another.
enum class Stream : std::uint64_t {
    env_reset = 1,
    exploration = 2,
    sampler = 3,
    cluster = 4,
    param_init = 5,
    eval = 6,
};

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream + 0x51ed2701a49c8935ull));
}

inline std::uint64_t derive_seed(std::uint64_t base, Stream stream) {
    return derive_seed(base, static_cast<std::uint64_t>(stream));
}

// Deterministic random stream. The engine is std::mt19937_64 (algorithm fixed
// by the standard); all variate transforms are implemented here rather than
// with std::*_distribution so that draw sequences are pinned across library
// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], both inclusive.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    std::size_t uniform_index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

    // Standard normal via Box-Muller, spare variate cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u in (0, 1] so log(u) is finite.
        const double u = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double theta = 2.0 * 3.14159265358979323846 * v;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace herbench
