#pragma once

#include <vector>

#include "sdc/ring.hpp"

namespace sdc {

// Dense matrix over one of the three rings.  Sizes here top out at 34x68
// over a 16-element ring, so everything is plain row-major storage.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(RingId ring, int rows, int cols)
        : ring_(ring), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    RingId ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    ringbits at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, ringbits v) { a_[static_cast<std::size_t>(r) * cols_ + c] = v; }

    std::vector<ringbits> row(int r) const;

    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

private:
    RingId ring_ = RingId::F2;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<ringbits> a_;
};

RingMatrix identity_matrix(RingId ring, int n);
RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_transpose(const RingMatrix& a);

// circulant: row i is the first row rotated i places right, entry (i,j) =
// a[(j-i) mod n]; the matrix representing x |-> shifted convolution, and the
// image of sigma on cyclic groups with the natural listing.
RingMatrix circulant(RingId ring, const std::vector<ringbits>& first_row);

// reverse-circulant: entry (i,j) = a[(i+j) mod n]; always symmetric.
RingMatrix reverse_circulant(RingId ring, const std::vector<ringbits>& first_row);

bool is_circulant(const RingMatrix& m);

}  // namespace sdc
