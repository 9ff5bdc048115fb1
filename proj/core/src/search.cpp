#include "sdc/search.hpp"

#include <json.hpp>

#include "sdc/construction.hpp"
#include "sdc/graymap.hpp"
#include "sdc/transforms.hpp"

namespace sdc {

std::vector<SearchHit> run_search(const SearchConfig& cfg) {
    const GroupPtr group = make_group(cfg.group);
    const Listing listing = make_listing(cfg.listing, *group);
    const int n = group->order;
    const std::uint64_t ring_sz = ring_size(cfg.ring);
    SplitMix64 rng(cfg.seed);

    std::vector<SearchHit> hits;
    std::vector<ringbits> v1(static_cast<std::size_t>(n)), v2(static_cast<std::size_t>(n)),
        ra(static_cast<std::size_t>(n));
    for (std::uint64_t trial = 0; trial < cfg.max_trials && hits.size() < cfg.max_results; ++trial) {
        for (auto& s : v1) s = static_cast<ringbits>(rng.below(ring_sz));
        for (auto& s : v2) s = cfg.v2_zero ? 0 : static_cast<ringbits>(rng.below(ring_sz));
        for (auto& s : ra) s = cfg.ra_zero ? 0 : static_cast<ringbits>(rng.below(ring_sz));

        const ConstructionSpec spec = make_spec(cfg.ring, group, listing, v1, v2, ra);
        if (!check_theorem2(spec)) continue;

        const GeneratorMatrix gen = build(spec);
        RingCode stage{cfg.ring, gen.length(), gen.rows()};
        const BinaryCode bin = stage.binary_image(GrayLayout::Block);
        if (!bin.is_self_dual()) continue;  // theorem-2 soundness makes this unreachable
        if (cfg.min_dist > 1 && bin.has_word_below(cfg.min_dist, cfg.workers)) continue;

        SearchHit hit;
        hit.trial = trial;
        hit.v1 = format_word(cfg.ring, v1);
        hit.v2 = format_word(cfg.ring, v2);
        hit.ra = format_word(cfg.ring, ra);
        hit.n = bin.length();
        hit.k = bin.dimension();
        if (cfg.classify) {
            const WeightDistribution dist = bin.weight_distribution(cfg.workers);
            hit.d = dist.min_positive_weight();
            if (bin.length() == 64 || bin.length() == 68) {
                try {
                    const EnumeratorParams p = enumerator_params(bin.length(), dist);
                    hit.form = form_name(p.form);
                    hit.beta = p.beta;
                    hit.gamma = p.gamma;
                } catch (const std::exception&) {
                    // Distance below 12 or a non-template distribution; the
                    // raw parameters still get reported.
                }
            }
        } else {
            hit.d = cfg.min_dist;
        }
        hits.push_back(std::move(hit));
    }
    return hits;
}

std::string search_hits_json(const SearchConfig& cfg, const std::vector<SearchHit>& hits) {
    nlohmann::ordered_json j;
    j["ring"] = ring_name(cfg.ring);
    j["group"] = cfg.group;
    j["listing"] = cfg.listing;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.max_trials;
    j["min_dist"] = cfg.min_dist;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& h : hits) {
        nlohmann::ordered_json e;
        e["trial"] = h.trial;
        e["v1"] = h.v1;
        e["v2"] = h.v2;
        e["ra"] = h.ra;
        e["n"] = h.n;
        e["k"] = h.k;
        e["d"] = h.d;
        e["form"] = h.form;
        if (h.beta)
            e["beta"] = *h.beta;
        else
            e["beta"] = nullptr;
        if (h.gamma)
            e["gamma"] = *h.gamma;
        else
            e["gamma"] = nullptr;
        arr.push_back(std::move(e));
    }
    j["hits"] = std::move(arr);
    return j.dump(2);
}

}  // namespace sdc
