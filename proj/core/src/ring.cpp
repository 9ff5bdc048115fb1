#include "sdc/ring.hpp"

#include <stdexcept>

namespace sdc {

namespace {

// F2+uF2 as 2 bits: x = x0 + x1*u.
constexpr std::uint8_t f2u_mul(std::uint8_t x, std::uint8_t y) {
    const std::uint8_t x0 = x & 1, x1 = (x >> 1) & 1;
    const std::uint8_t y0 = y & 1, y1 = (y >> 1) & 1;
    const std::uint8_t z0 = x0 & y0;
    const std::uint8_t z1 = (x0 & y1) ^ (x1 & y0);
    return static_cast<std::uint8_t>(z0 | (z1 << 1));
}

// F4+uF4 element a = p + q*w with p, q in F2+uF2:
//   (p1 + q1 w)(p2 + q2 w) = p1 p2 + q1 q2 + (p1 q2 + q1 p2 + q1 q2) w.
constexpr std::uint8_t full_mul(std::uint8_t a, std::uint8_t b) {
    const std::uint8_t p1 = a & 3, q1 = (a >> 2) & 3;
    const std::uint8_t p2 = b & 3, q2 = (b >> 2) & 3;
    const std::uint8_t c = f2u_mul(p1, p2) ^ f2u_mul(q1, q2);
    const std::uint8_t d = f2u_mul(p1, q2) ^ f2u_mul(q1, p2) ^ f2u_mul(q1, q2);
    return static_cast<std::uint8_t>(c | (d << 2));
}

constexpr std::array<std::uint8_t, 256> make_mul_table() {
    std::array<std::uint8_t, 256> t{};
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) t[static_cast<std::size_t>(a * 16 + b)] = full_mul(std::uint8_t(a), std::uint8_t(b));
    return t;
}

constexpr auto kMulTable = make_mul_table();

constexpr const char* kHex = "0123456789ABCDEF";

}  // namespace

std::size_t ring_size(RingId r) {
    switch (r) {
        case RingId::F2: return 2;
        case RingId::F2uF2: return 4;
        case RingId::F4uF4: return 16;
    }
    throw std::logic_error("bad RingId");
}

const char* ring_name(RingId r) {
    switch (r) {
        case RingId::F2: return "F2";
        case RingId::F2uF2: return "F2uF2";
        case RingId::F4uF4: return "F4uF4";
    }
    throw std::logic_error("bad RingId");
}

RingId parse_ring(std::string_view name) {
    if (name == "F2") return RingId::F2;
    if (name == "F2uF2") return RingId::F2uF2;
    if (name == "F4uF4") return RingId::F4uF4;
    throw std::invalid_argument("unknown ring: " + std::string(name));
}

ringbits ring_mul(ringbits a, ringbits b) { return kMulTable[static_cast<std::size_t>((a & 15) * 16 + (b & 15))]; }

bool ring_is_unit(RingId r, ringbits a) {
    for (ringbits b : ring_elements(r))
        if (ring_mul(a, b) == 1) return true;
    return false;
}

ringbits ring_inv(RingId r, ringbits a) {
    for (ringbits b : ring_elements(r))
        if (ring_mul(a, b) == 1) return b;
    throw std::domain_error(std::string("not a unit in ") + ring_name(r));
}

char format_symbol(RingId r, ringbits a) {
    switch (r) {
        case RingId::F2:
            if (a > 1) throw std::invalid_argument("element out of range for F2");
            return static_cast<char>('0' + a);
        case RingId::F2uF2:
            switch (a) {
                case 0: return '0';
                case 1: return '1';
                case 2: return 'u';
                case 3: return '3';
                default: throw std::invalid_argument("element out of range for F2uF2");
            }
        case RingId::F4uF4:
            if (a > 15) throw std::invalid_argument("element out of range for F4uF4");
            return kHex[a];
    }
    throw std::logic_error("bad RingId");
}

ringbits parse_symbol(RingId r, char c) {
    switch (r) {
        case RingId::F2:
            if (c == '0') return 0;
            if (c == '1') return 1;
            break;
        case RingId::F2uF2:
            if (c == '0') return 0;
            if (c == '1') return 1;
            if (c == 'u') return 2;
            if (c == '3') return 3;
            break;
        case RingId::F4uF4:
            if (c >= '0' && c <= '9') return static_cast<ringbits>(c - '0');
            if (c >= 'A' && c <= 'F') return static_cast<ringbits>(c - 'A' + 10);
            if (c >= 'a' && c <= 'f') return static_cast<ringbits>(c - 'a' + 10);
            break;
    }
    throw std::invalid_argument(std::string("invalid symbol '") + c + "' for ring " + ring_name(r));
}

std::vector<ringbits> parse_word(RingId r, std::string_view s) {
    std::vector<ringbits> w;
    w.reserve(s.size());
    for (char c : s) w.push_back(parse_symbol(r, c));
    return w;
}

std::string format_word(RingId r, const std::vector<ringbits>& w) {
    std::string s;
    s.reserve(w.size());
    for (ringbits a : w) s.push_back(format_symbol(r, a));
    return s;
}

std::vector<ringbits> ring_elements(RingId r) {
    std::vector<ringbits> e;
    for (ringbits a = 0; a < ring_size(r); ++a) e.push_back(a);
    return e;
}

RingElement add(RingElement a, RingElement b) {
    if (a.ring != b.ring) throw std::invalid_argument("ring mismatch in add");
    return {a.ring, ring_add(a.v, b.v)};
}

RingElement mul(RingElement a, RingElement b) {
    if (a.ring != b.ring) throw std::invalid_argument("ring mismatch in mul");
    return {a.ring, ring_mul(a.v, b.v)};
}

bool is_unit(RingElement a) { return ring_is_unit(a.ring, a.v); }

RingElement parse_symbol_element(char c, RingId ring) { return {ring, parse_symbol(ring, c)}; }

}  // namespace sdc
