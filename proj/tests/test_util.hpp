#pragma once

#include <cstdint>
#include <vector>

#include "sdc/bincode.hpp"
#include "sdc/construction.hpp"
#include "sdc/graymap.hpp"
#include "sdc/search.hpp"
#include "sdc/transforms.hpp"

namespace sdc::testutil {

// Independent weight-distribution oracle: evaluates every codeword directly
// from its row-subset mask, no Gray walk shared with the implementation.
inline WeightDistribution naive_weight_distribution(const BinaryCode& c) {
    WeightDistribution d;
    d.counts.assign(static_cast<std::size_t>(c.length()) + 1, 0);
    const auto& rows = c.rows();
    const std::uint64_t total = std::uint64_t{1} << c.dimension();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Word128 w;
        for (int j = 0; j < c.dimension(); ++j)
            if ((mask >> j) & 1) w ^= rows[static_cast<std::size_t>(j)];
        ++d.counts[static_cast<std::size_t>(w.weight())];
    }
    return d;
}

inline std::vector<ringbits> random_word(SplitMix64& rng, RingId ring, int n) {
    std::vector<ringbits> w(static_cast<std::size_t>(n));
    for (auto& s : w) s = static_cast<ringbits>(rng.below(ring_size(ring)));
    return w;
}

inline ConstructionSpec random_spec(SplitMix64& rng, RingId ring, const GroupPtr& group, const Listing& listing) {
    const int n = group->order;
    return make_spec(ring, group, listing, random_word(rng, ring, n), random_word(rng, ring, n),
                     random_word(rng, ring, n));
}

// Small self-dual binary codes for neighbour tests, found by seeded search
// through the construction itself.
inline std::vector<BinaryCode> small_self_dual_codes(std::uint64_t seed, std::size_t count) {
    SearchConfig cfg;
    cfg.ring = RingId::F2;
    cfg.group = "C4";
    cfg.seed = seed;
    cfg.max_trials = 4000;
    cfg.min_dist = 1;
    cfg.classify = false;
    cfg.max_results = count;
    std::vector<BinaryCode> out;
    for (const auto& hit : run_search(cfg)) {
        const auto g = make_group(cfg.group);
        const ConstructionSpec spec = make_spec(cfg.ring, g, natural_listing(4), parse_word(cfg.ring, hit.v1),
                                                parse_word(cfg.ring, hit.v2), parse_word(cfg.ring, hit.ra));
        RingCode stage{cfg.ring, 16, build(spec).rows()};
        out.push_back(stage.binary_image());
    }
    return out;
}

// Raw neighbour formula < <x>^perp intersect C, x > without the membership
// guard, for the idempotence check.
inline BinaryCode raw_neighbour(const BinaryCode& base, const Word128& x) {
    std::vector<Word128> rows;
    std::size_t pivot = base.rows().size();
    for (std::size_t i = 0; i < base.rows().size(); ++i)
        if (base.rows()[i].dot(x)) {
            pivot = i;
            break;
        }
    for (std::size_t i = 0; i < base.rows().size(); ++i) {
        if (i == pivot) continue;
        Word128 r = base.rows()[i];
        if (pivot < base.rows().size() && r.dot(x)) r ^= base.rows()[pivot];
        rows.push_back(r);
    }
    rows.push_back(x);
    return BinaryCode::from_rows(rows, base.length());
}

}  // namespace sdc::testutil
