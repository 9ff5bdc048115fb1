#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdc/ring.hpp"

namespace sdc {

// Counter-based splittable generator (splitmix64); the whole search is a
// pure function of the seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // Uniform draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }
};

struct SearchConfig {
    RingId ring = RingId::F2;
    std::string group = "C4";
    std::string listing = "natural";
    bool v2_zero = false;
    bool ra_zero = false;
    std::uint64_t seed = 0;
    std::uint64_t max_trials = 1000;
    int min_dist = 12;
    int workers = 1;
    std::size_t max_results = static_cast<std::size_t>(-1);
    bool classify = true;  // extract enumerator params for n in {64, 68}
};

struct SearchHit {
    std::uint64_t trial = 0;
    std::string v1, v2, ra;
    int n = 0, k = 0, d = 0;
    std::string form;
    std::optional<long> beta, gamma;
};

// Draw (v1, v2, ra), keep specs passing the algebraic self-duality check,
// then filter by minimum distance of the binary Gray image.  Deterministic
// given the seed.
std::vector<SearchHit> run_search(const SearchConfig& cfg);

std::string search_hits_json(const SearchConfig& cfg, const std::vector<SearchHit>& hits);

}  // namespace sdc
