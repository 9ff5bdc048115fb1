#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

// The three characteristic-2 Frobenius rings used throughout: F2, F2+uF2
// (u^2 = 0) and F4+uF4 (w^2 = w+1, u^2 = 0).
enum class RingId { F2, F2uF2, F4uF4 };

// Every element is stored as 4 bits over the ordered basis {uw, w, u, 1}:
// bit 3 = uw, bit 2 = w, bit 1 = u, bit 0 = 1.  F2 and F2+uF2 occupy the
// sub-patterns with the w-components zero.
using ringbits = std::uint8_t;

std::size_t ring_size(RingId r);
const char* ring_name(RingId r);
RingId parse_ring(std::string_view name);

// Addition is bitwise XOR for all three rings.
inline ringbits ring_add(ringbits a, ringbits b) { return a ^ b; }

// Product per u^2 = 0 and w^2 = w + 1, from a precomputed 16x16 table.
ringbits ring_mul(ringbits a, ringbits b);

// a is a unit iff some b has a*b = 1 (decided from the multiplication table).
bool ring_is_unit(RingId r, ringbits a);

// Multiplicative inverse; throws std::domain_error for non-units.
ringbits ring_inv(RingId r, ringbits a);

// Text alphabets: F2 uses {0,1}; F2+uF2 uses the paper's compact {0,1,u,3};
// F4+uF4 uses hexadecimal 0..F over the ordered basis above.
char format_symbol(RingId r, ringbits a);
ringbits parse_symbol(RingId r, char c);

std::vector<ringbits> parse_word(RingId r, std::string_view s);
std::string format_word(RingId r, const std::vector<ringbits>& w);

// All elements of a ring, in symbol order.
std::vector<ringbits> ring_elements(RingId r);

// Checked element wrapper matching the module contract; the bulk of the
// library works on raw ringbits with the RingId carried by the container.
struct RingElement {
    RingId ring;
    ringbits v;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement add(RingElement a, RingElement b);
RingElement mul(RingElement a, RingElement b);
bool is_unit(RingElement a);
RingElement parse_symbol_element(char c, RingId ring);

}  // namespace sdc
