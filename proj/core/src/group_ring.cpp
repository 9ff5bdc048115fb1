#include "sdc/group_ring.hpp"

#include <stdexcept>

namespace sdc {

namespace {

void require_compatible(const GroupRingElement& v, const GroupRingElement& w) {
    if (v.ring != w.ring) throw std::invalid_argument("ring mismatch in group ring op");
    if (!v.group || !w.group || v.group->order != w.group->order || v.group->mul_table != w.group->mul_table)
        throw std::invalid_argument("group mismatch in group ring op");
}

}  // namespace

bool GroupRingElement::is_zero() const {
    for (ringbits c : coeffs)
        if (c != 0) return false;
    return true;
}

bool GroupRingElement::is_one() const {
    if (coeffs.empty() || coeffs[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return false;
    return true;
}

GroupRingElement gr_zero(RingId ring, GroupPtr group) {
    GroupRingElement v;
    v.ring = ring;
    v.coeffs.assign(static_cast<std::size_t>(group->order), 0);
    v.group = std::move(group);
    return v;
}

GroupRingElement gr_from_word(RingId ring, GroupPtr group, const std::vector<ringbits>& coeffs) {
    if (static_cast<int>(coeffs.size()) != group->order)
        throw std::invalid_argument("coefficient count must equal group order");
    GroupRingElement v;
    v.ring = ring;
    v.group = std::move(group);
    v.coeffs = coeffs;
    return v;
}

GroupRingElement gr_add(const GroupRingElement& v, const GroupRingElement& w) {
    require_compatible(v, w);
    GroupRingElement r = v;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = ring_add(r.coeffs[i], w.coeffs[i]);
    return r;
}

GroupRingElement gr_mul(const GroupRingElement& v, const GroupRingElement& w) {
    require_compatible(v, w);
    GroupRingElement r = gr_zero(v.ring, v.group);
    const Group& g = *v.group;
    for (int i = 0; i < g.order; ++i) {
        if (v.coeffs[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < g.order; ++j) {
            const int k = g.mul(i, j);
            r.coeffs[static_cast<std::size_t>(k)] = ring_add(
                r.coeffs[static_cast<std::size_t>(k)],
                ring_mul(v.coeffs[static_cast<std::size_t>(i)], w.coeffs[static_cast<std::size_t>(j)]));
        }
    }
    return r;
}

GroupRingElement involution(const GroupRingElement& v) {
    GroupRingElement r = gr_zero(v.ring, v.group);
    for (int i = 0; i < v.group->order; ++i)
        r.coeffs[static_cast<std::size_t>(v.group->inv(i))] = v.coeffs[static_cast<std::size_t>(i)];
    return r;
}

bool is_unitary_unit(const GroupRingElement& v) { return gr_mul(v, involution(v)).is_one(); }

RingMatrix sigma(const GroupRingElement& v, const Listing& listing) {
    const Group& g = *v.group;
    const int n = g.order;
    if (listing.size() != n) throw std::invalid_argument("listing size must equal group order");
    // Inverse of the listing permutation: element index -> coefficient position.
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < n; ++p) {
        const int e = listing.at(p);
        if (e < 0 || e >= n || pos[static_cast<std::size_t>(e)] != -1)
            throw std::invalid_argument("listing is not a permutation of the group");
        pos[static_cast<std::size_t>(e)] = p;
    }
    RingMatrix m(v.ring, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int e = g.mul(g.inv(listing.at(i)), listing.at(j));
            m.set(i, j, v.coeffs[static_cast<std::size_t>(pos[static_cast<std::size_t>(e)])]);
        }
    return m;
}

}  // namespace sdc
