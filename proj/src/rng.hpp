#pragma once

#include <cstdint>

// Counter-based randomness. Every draw is keyed by (seed, domain, indices),
// so outcomes are pure functions of their keys and never depend on call
// order or thread scheduling.
namespace sc::rng {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t mix(uint64_t a, uint64_t b) {
    return splitmix64(a ^ 0x632be59bd9b4e019ULL ^ splitmix64(b));
}

inline uint64_t key(uint64_t seed, uint64_t domain) { return mix(seed, domain); }

inline uint64_t key(uint64_t seed, uint64_t domain, uint64_t i) {
    return mix(mix(seed, domain), i);
}

inline uint64_t key(uint64_t seed, uint64_t domain, uint64_t i, uint64_t j) {
    return mix(mix(mix(seed, domain), i), j);
}

inline uint64_t key(uint64_t seed, uint64_t domain, uint64_t i, uint64_t j, uint64_t k) {
    return mix(mix(mix(mix(seed, domain), i), j), k);
}

inline uint64_t key(uint64_t seed, uint64_t domain, uint64_t i, uint64_t j, uint64_t k,
                    uint64_t l) {
    return mix(mix(mix(mix(mix(seed, domain), i), j), k), l);
}

// Uniform double in [0,1) from 53 top bits.
inline double to_unit(uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// A draw with probability p succeeds when the 64-bit key value lies below
// p * 2^64, evaluated in integer space.
inline bool bernoulli(uint64_t x, double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return to_unit(x) < p;
}

// Sequential stream for code that wants a classic generator.
class Stream {
public:
    explicit Stream(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    double unit() { return to_unit(next()); }

    // Unbiased bounded draw by rejection.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

private:
    uint64_t state_;
};

}  // namespace sc::rng
