#include "sdc/graymap.hpp"

#include <stdexcept>

namespace sdc {

const char* layout_name(GrayLayout l) { return l == GrayLayout::Block ? "block" : "interleaved"; }

const std::array<std::pair<ringbits, ringbits>, 16>& psi_table() {
    static const auto table = [] {
        std::array<std::pair<ringbits, ringbits>, 16> t{};
        const ringbits w = 4, wbar = 5;  // w and 1+w
        std::array<bool, 16> seen{};
        for (ringbits a = 0; a < 4; ++a)
            for (ringbits b = 0; b < 4; ++b) {
                const ringbits s = ring_add(ring_mul(w, a), ring_mul(wbar, b));
                if (seen[s]) throw std::logic_error("psi decomposition is not unique");
                seen[s] = true;
                t[s] = {a, b};
            }
        return t;
    }();
    return table;
}

std::vector<ringbits> psi_f4u(const std::vector<ringbits>& v, GrayLayout layout) {
    const auto& t = psi_table();
    const std::size_t n = v.size();
    std::vector<ringbits> out(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = t[v[i] & 15];
        if (layout == GrayLayout::Block) {
            out[i] = a;
            out[n + i] = b;
        } else {
            out[2 * i] = a;
            out[2 * i + 1] = b;
        }
    }
    return out;
}

std::vector<std::uint8_t> phi_f2u(const std::vector<ringbits>& v, GrayLayout layout) {
    const std::size_t n = v.size();
    std::vector<std::uint8_t> out(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] > 3) throw std::invalid_argument("phi_f2u needs an F2uF2 word");
        const std::uint8_t a = v[i] & 1;
        const std::uint8_t b = (v[i] >> 1) & 1;
        if (layout == GrayLayout::Block) {
            out[i] = b;
            out[n + i] = static_cast<std::uint8_t>(a ^ b);
        } else {
            out[2 * i] = b;
            out[2 * i + 1] = static_cast<std::uint8_t>(a ^ b);
        }
    }
    return out;
}

std::vector<std::uint8_t> to_binary(RingId ring, const std::vector<ringbits>& v, GrayLayout layout) {
    switch (ring) {
        case RingId::F2: {
            std::vector<std::uint8_t> out(v.begin(), v.end());
            for (std::uint8_t b : out)
                if (b > 1) throw std::invalid_argument("non-binary symbol in F2 word");
            return out;
        }
        case RingId::F2uF2:
            return phi_f2u(v, layout);
        case RingId::F4uF4:
            return phi_f2u(psi_f4u(v, layout), layout);
    }
    throw std::logic_error("bad RingId");
}

int lee_weight(RingId ring, const std::vector<ringbits>& v) {
    int w = 0;
    for (std::uint8_t b : to_binary(ring, v)) w += b;
    return w;
}

namespace {

std::vector<ringbits> scale(const std::vector<ringbits>& row, ringbits s) {
    std::vector<ringbits> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) out[i] = ring_mul(s, row[i]);
    return out;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> map_generator(RingId ring, const std::vector<std::vector<ringbits>>& rows,
                                                     GrayLayout layout) {
    std::vector<std::vector<std::uint8_t>> out;
    // F2-module generators of the row span: row, u*row (and w*row, uw*row
    // over F4uF4).
    std::vector<ringbits> scalars;
    switch (ring) {
        case RingId::F2: scalars = {1}; break;
        case RingId::F2uF2: scalars = {1, 2}; break;
        case RingId::F4uF4: scalars = {1, 2, 4, 8}; break;
    }
    out.reserve(rows.size() * scalars.size());
    for (const auto& r : rows)
        for (ringbits s : scalars) out.push_back(to_binary(ring, scale(r, s), layout));
    return out;
}

}  // namespace sdc
