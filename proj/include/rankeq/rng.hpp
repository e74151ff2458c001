#ifndef RANKEQ_RNG_HPP
#define RANKEQ_RNG_HPP

#include <cstdint>
#include <random>

namespace rankeq {

// Seeded, splittable random source. All randomness in the library flows
// through one of these so that runs are reproducible from a single seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t u64() { return gen_(); }

    // Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

    // Derive an independent child stream.
    Rng fork() { return Rng(gen_() ^ 0x9e3779b97f4a7c15ULL); }

private:
    std::mt19937_64 gen_;
};

}  // namespace rankeq

#endif
