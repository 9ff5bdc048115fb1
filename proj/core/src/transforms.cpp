#include "sdc/transforms.hpp"

#include <stdexcept>

namespace sdc {

ringbits RingCode::inner(const std::vector<ringbits>& x, const std::vector<ringbits>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch in inner product");
    ringbits acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = ring_add(acc, ring_mul(x[i], y[i]));
    return acc;
}

bool RingCode::self_orthogonal() const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (inner(rows[i], rows[j]) != 0) return false;
    return true;
}

BinaryCode RingCode::binary_image(GrayLayout layout) const {
    return BinaryCode::from_bit_rows(map_generator(ring, rows, layout));
}

RingCode extend(const RingCode& base, ringbits c, const std::vector<ringbits>& x) {
    if (static_cast<int>(x.size()) != base.length) throw std::invalid_argument("X must have the base code's length");
    if (!ring_is_unit(base.ring, c) || ring_mul(c, c) != 1)
        throw std::invalid_argument("c must be a unit with c^2 = 1");
    if (RingCode::inner(x, x) != 1) throw std::invalid_argument("<X,X> must be 1");

    RingCode out;
    out.ring = base.ring;
    out.length = base.length + 2;
    std::vector<ringbits> top;
    top.reserve(static_cast<std::size_t>(out.length));
    top.push_back(1);
    top.push_back(0);
    top.insert(top.end(), x.begin(), x.end());
    out.rows.push_back(std::move(top));
    for (const auto& r : base.rows) {
        const ringbits y = RingCode::inner(r, x);
        std::vector<ringbits> row;
        row.reserve(static_cast<std::size_t>(out.length));
        row.push_back(y);
        row.push_back(ring_mul(c, y));
        row.insert(row.end(), r.begin(), r.end());
        out.rows.push_back(std::move(row));
    }
    return out;
}

BinaryCode neighbour(const BinaryCode& base, const Word128& x) {
    if (base.contains(x)) throw std::invalid_argument("x lies in the base code");
    std::vector<Word128> rows = base.rows();
    // Split off one row meeting <r, x> = 1 and use it to clear the rest;
    // what remains generates <x>^perp intersect C.
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].dot(x)) {
            pivot = i;
            break;
        }
    std::vector<Word128> out;
    out.reserve(rows.size() + 1);
    if (pivot == rows.size()) {
        // x is orthogonal to all of C; for self-dual C this means x in C,
        // already rejected above.  Keep the full row set.
        out = rows;
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot) continue;
            out.push_back(rows[i].dot(x) ? rows[i] ^ rows[pivot] : rows[i]);
        }
    }
    out.push_back(x);
    return BinaryCode::from_rows(out, base.length());
}

std::vector<BinaryCode> neighbour_chain(const BinaryCode& base, const std::vector<Word128>& xs) {
    std::vector<BinaryCode> out;
    out.push_back(base);
    for (const auto& x : xs) out.push_back(neighbour(out.back(), x));
    return out;
}

}  // namespace sdc
