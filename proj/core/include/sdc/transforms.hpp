#pragma once

#include "sdc/bincode.hpp"
#include "sdc/graymap.hpp"
#include "sdc/ring.hpp"

namespace sdc {

// Generator rows of a code over one of the construction rings.
struct RingCode {
    RingId ring = RingId::F2;
    int length = 0;
    std::vector<std::vector<ringbits>> rows;

    // Sum x_i y_i of a row pair.
    static ringbits inner(const std::vector<ringbits>& x, const std::vector<ringbits>& y);

    // G * G^T = 0 over the ring.
    bool self_orthogonal() const;

    BinaryCode binary_image(GrayLayout layout = GrayLayout::Block) const;
};

// Length n -> n+2 extension: unit c with c^2 = 1 and <X,X> = 1; top row
// (1, 0 | X), then (y_i, c*y_i | r_i) with y_i = <r_i, X>.
RingCode extend(const RingCode& base, ringbits c, const std::vector<ringbits>& x);

// D = < <x>^perp  intersect  C, x >; x must lie outside the self-dual base
// and have even weight for the result to stay self-dual.
BinaryCode neighbour(const BinaryCode& base, const Word128& x);

std::vector<BinaryCode> neighbour_chain(const BinaryCode& base, const std::vector<Word128>& xs);

}  // namespace sdc
