#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace clab {

// Seed fan-out. Every randomized component gets its own stream derived from
// the master seed, a role tag, and a counter:
//
//     child = splitmix64(master ^ fnv1a64(tag) ^ splitmix64(counter))
//
// Adding a new consumer (say, one more sweep cell) therefore never perturbs
// the streams of existing consumers.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t counter = 0) {
    return splitmix64(master ^ fnv1a64(tag) ^ splitmix64(counter));
}

// Deterministic random stream. Wraps mt19937_64 (bit-exact by the standard)
// and hand-rolls the distributions, because the std:: distribution objects
// are not guaranteed to produce the same values across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = gen_();
            if (r >= threshold) return r % bound;
        }
    }

    std::size_t index(std::size_t bound) {
        return static_cast<std::size_t>(below(static_cast<std::uint64_t>(bound)));
    }

    bool coin() { return (gen_() & 1u) != 0; }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace clab
