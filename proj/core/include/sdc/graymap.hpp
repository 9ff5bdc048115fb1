#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "sdc/ring.hpp"

namespace sdc {

// Component ordering for the (a, b) / (b, a+b) images of whole words:
// Block puts all first components before all second components, Interleaved
// alternates them per symbol.
enum class GrayLayout { Block, Interleaved };

const char* layout_name(GrayLayout l);

// psi: s = w*a + (1+w)*b with a, b in F2+uF2; the 16-entry table is solved
// exhaustively from the defining equation and is a bijection.
const std::array<std::pair<ringbits, ringbits>, 16>& psi_table();

// psi on words: F4uF4^n -> (F2uF2)^{2n}.
std::vector<ringbits> psi_f4u(const std::vector<ringbits>& v, GrayLayout layout = GrayLayout::Block);

// phi: a + bu -> (b, a+b); F2uF2^n -> F2^{2n} (bits stored one per byte).
std::vector<std::uint8_t> phi_f2u(const std::vector<ringbits>& v, GrayLayout layout = GrayLayout::Block);

// Down to binary: F2 identity, F2uF2 via phi, F4uF4 via phi o psi.
std::vector<std::uint8_t> to_binary(RingId ring, const std::vector<ringbits>& v,
                                    GrayLayout layout = GrayLayout::Block);

// Lee weight of a word = Hamming weight of its binary image.
int lee_weight(RingId ring, const std::vector<ringbits>& v);

// Binary generator rows of the Gray image of the module generated by the
// given rows: for F2uF2 also emits u*row images, for F4uF4 additionally the
// w*row and uw*row images.  Rank is established downstream.
std::vector<std::vector<std::uint8_t>> map_generator(RingId ring, const std::vector<std::vector<ringbits>>& rows,
                                                     GrayLayout layout = GrayLayout::Block);

}  // namespace sdc
