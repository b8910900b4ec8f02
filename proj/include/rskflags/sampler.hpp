#pragma once

#include <cstdint>
#include <string_view>

#include "rskflags/flag.hpp"

namespace rskflags {

/// splitmix64; small, portable and reproducible across platforms, which the
/// reporting contract needs (std::uniform_int_distribution is not).
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }
};

uint64_t fnv1a(std::string_view s);

// Deterministic per-trial seed derivation, independent of scheduling.
uint64_t derive_seed(uint64_t master, uint64_t case_hash, uint64_t index);

struct FlagSample {
    Flag flag;
    int attempts = 1;  // full constructions started, including the successful one
};

inline constexpr int kDefaultMaxAttempts = 10000;

/// Builds each step as a uniformly random extension of the previous one inside
/// the preimage of the previous step, restarting from scratch whenever the
/// preimage is too small to extend. Uniform over each step's extensions, full
/// support on the stable flags of type mu. Throws SamplingExhausted after
/// max_attempts restarts.
FlagSample sample_stable_flag(const NilpotentOperator& x, const Composition& mu, Rng& rng,
                              int max_attempts = kDefaultMaxAttempts);

/// Samples a flag whose tableau equals t. Constructs a complete stable flag
/// along the standardization of t, one box at a time, choosing each new vector
/// uniformly among those that grow the restriction type by the prescribed box,
/// then coarsens to the content of t. Full support on the fiber of t.
FlagSample sample_flag_in_component(const NilpotentOperator& x, const Tableau& t, Rng& rng,
                                    int max_attempts = kDefaultMaxAttempts);

}  // namespace rskflags
