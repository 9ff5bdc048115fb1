#pragma once

#include "sdc/group.hpp"
#include "sdc/matrix.hpp"
#include "sdc/ring.hpp"

namespace sdc {

// v = sum_i coeffs[i] * g_i over the group's index listing.
struct GroupRingElement {
    RingId ring = RingId::F2;
    GroupPtr group;
    std::vector<ringbits> coeffs;

    bool is_zero() const;
    bool is_one() const;  // the group-ring identity 1 * e
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;
};

GroupRingElement gr_zero(RingId ring, GroupPtr group);
GroupRingElement gr_from_word(RingId ring, GroupPtr group, const std::vector<ringbits>& coeffs);

GroupRingElement gr_add(const GroupRingElement& v, const GroupRingElement& w);
GroupRingElement gr_mul(const GroupRingElement& v, const GroupRingElement& w);

// Canonical involution v* = sum alpha_g g^{-1}.
GroupRingElement involution(const GroupRingElement& v);

bool is_unitary_unit(const GroupRingElement& v);

// sigma(v) = (alpha_{g_i^{-1} g_j}) with positions mapped through the
// listing permutation.
RingMatrix sigma(const GroupRingElement& v, const Listing& listing);

}  // namespace sdc
