#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

namespace cddgan {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

// Derive an independent stream seed from a base seed and a tag, e.g. a
// patient id. Output order of consumers must not depend on scheduling.
inline uint64_t mix_seed(uint64_t seed, std::string_view tag) {
    return splitmix64(seed ^ fnv1a64(tag));
}

inline uint64_t mix_seed(uint64_t seed, std::string_view tag, std::string_view tag2) {
    return splitmix64(mix_seed(seed, tag) ^ fnv1a64(tag2));
}

// Deterministic RNG. Distribution mapping is implemented here (not via
// std::*_distribution) so sequences are reproducible across standard
// libraries; state round-trips through text for checkpointing.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : eng_(splitmix64(seed)) {}

    uint64_t next_u64() { return eng_(); }

    // [0, 1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [0, n)
    int uniform_int(int n) {
        int k = int(uniform() * n);
        return k >= n ? n - 1 : k;
    }

    // Standard normal via Box-Muller (no cached second sample, so state
    // is exactly the engine state).
    double normal() {
        double u1 = uniform(), u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    std::string state() const {
        std::ostringstream ss;
        ss << eng_;
        return ss.str();
    }

    void set_state(const std::string& s) {
        std::istringstream ss(s);
        ss >> eng_;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace cddgan
