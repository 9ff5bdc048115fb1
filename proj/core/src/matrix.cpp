#include "sdc/matrix.hpp"

#include <stdexcept>

namespace sdc {

std::vector<ringbits> RingMatrix::row(int r) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_, a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_};
}

bool RingMatrix::is_zero() const {
    for (ringbits v : a_)
        if (v != 0) return false;
    return true;
}

bool RingMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

RingMatrix identity_matrix(RingId ring, int n) {
    RingMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch in mat_add");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch in mat_add");
    RingMatrix c(a.ring(), a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int j = 0; j < a.cols(); ++j) c.set(r, j, ring_add(a.at(r, j), b.at(r, j)));
    return c;
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch in mat_mul");
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in mat_mul");
    RingMatrix c(a.ring(), a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int j = 0; j < b.cols(); ++j) {
            ringbits acc = 0;
            for (int k = 0; k < a.cols(); ++k) acc = ring_add(acc, ring_mul(a.at(r, k), b.at(k, j)));
            c.set(r, j, acc);
        }
    return c;
}

RingMatrix mat_transpose(const RingMatrix& a) {
    RingMatrix t(a.ring(), a.cols(), a.rows());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) t.set(c, r, a.at(r, c));
    return t;
}

RingMatrix circulant(RingId ring, const std::vector<ringbits>& first_row) {
    const int n = static_cast<int>(first_row.size());
    if (n == 0) throw std::invalid_argument("circulant needs a nonempty row");
    RingMatrix m(ring, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, first_row[static_cast<std::size_t>(((c - r) % n + n) % n)]);
    return m;
}

RingMatrix reverse_circulant(RingId ring, const std::vector<ringbits>& first_row) {
    const int n = static_cast<int>(first_row.size());
    if (n == 0) throw std::invalid_argument("reverse_circulant needs a nonempty row");
    RingMatrix m(ring, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, first_row[static_cast<std::size_t>((r + c) % n)]);
    return m;
}

bool is_circulant(const RingMatrix& m) {
    if (m.rows() != m.cols()) return false;
    const int n = m.rows();
    for (int r = 1; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (m.at(r, c) != m.at(0, ((c - r) % n + n) % n)) return false;
    return true;
}

}  // namespace sdc
