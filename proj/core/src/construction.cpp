#include "sdc/construction.hpp"

#include <stdexcept>

namespace sdc {

ConstructionSpec make_spec(RingId ring, GroupPtr group, Listing listing, const std::vector<ringbits>& v1,
                           const std::vector<ringbits>& v2, const std::vector<ringbits>& ra) {
    const int n = group->order;
    if (static_cast<int>(v1.size()) != n || static_cast<int>(v2.size()) != n || static_cast<int>(ra.size()) != n)
        throw std::invalid_argument("v1, v2 and ra must all have length equal to the group order");
    if (listing.size() != n) throw std::invalid_argument("listing length must equal the group order");
    for (const auto* w : {&v1, &v2, &ra})
        for (ringbits a : *w)
            if (a >= ring_size(ring)) throw std::invalid_argument("coefficient outside the ring alphabet");
    ConstructionSpec s;
    s.ring = ring;
    s.group = std::move(group);
    s.listing = std::move(listing);
    s.v1 = v1;
    s.v2 = v2;
    s.ra = ra;
    return s;
}

std::vector<std::vector<ringbits>> GeneratorMatrix::rows() const {
    std::vector<std::vector<ringbits>> out;
    out.reserve(static_cast<std::size_t>(k()));
    for (int r = 0; r < k(); ++r) {
        std::vector<ringbits> row(static_cast<std::size_t>(length()), 0);
        row[static_cast<std::size_t>(r)] = 1;
        for (int c = 0; c < k(); ++c) row[static_cast<std::size_t>(k() + c)] = right.at(r, c);
        out.push_back(std::move(row));
    }
    return out;
}

RingMatrix sigma_v1(const ConstructionSpec& spec) {
    return sigma(gr_from_word(spec.ring, spec.group, spec.v1), spec.listing);
}

RingMatrix sigma_v2_plus_a(const ConstructionSpec& spec) {
    return mat_add(sigma(gr_from_word(spec.ring, spec.group, spec.v2), spec.listing),
                   reverse_circulant(spec.ring, spec.ra));
}

GeneratorMatrix build(const ConstructionSpec& spec) {
    const int n = spec.group->order;
    const RingMatrix B = sigma_v1(spec);
    const RingMatrix C = sigma_v2_plus_a(spec);
    GeneratorMatrix g;
    g.ring = spec.ring;
    g.n = n;
    g.right = RingMatrix(spec.ring, 2 * n, 2 * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            g.right.set(r, c, B.at(r, c));
            g.right.set(r, n + c, C.at(r, c));
            g.right.set(n + r, c, C.at(r, c));
            g.right.set(n + r, n + c, B.at(r, c));
        }
    return g;
}

bool check_lemma1(const RingMatrix& B, const RingMatrix& C) {
    if (B.ring() != C.ring()) throw std::invalid_argument("ring mismatch in check_lemma1");
    if (B.rows() != B.cols() || B.rows() != C.rows() || C.rows() != C.cols())
        throw std::invalid_argument("check_lemma1 needs square matrices of equal size");
    const RingMatrix s = mat_add(B, C);
    if (!mat_mul(s, mat_transpose(s)).is_identity()) return false;
    return mat_mul(B, mat_transpose(C)) == mat_mul(C, mat_transpose(B));
}

bool check_theorem2(const ConstructionSpec& spec) {
    const auto v1 = gr_from_word(spec.ring, spec.group, spec.v1);
    const auto v2 = gr_from_word(spec.ring, spec.group, spec.v2);
    const auto sum = gr_add(v1, v2);
    const RingMatrix A = reverse_circulant(spec.ring, spec.ra);
    const RingMatrix left = mat_add(sigma(sum, spec.listing), A);
    const RingMatrix right = mat_add(sigma(involution(sum), spec.listing), A);
    if (!mat_mul(left, right).is_identity()) return false;
    const RingMatrix s1 = sigma(v1, spec.listing);
    const RingMatrix s1star = sigma(involution(v1), spec.listing);
    return mat_mul(s1, right) == mat_mul(left, s1star);
}

bool check_lemma7(const ConstructionSpec& spec) {
    if (!spec.group->cyclic) throw std::invalid_argument("check_lemma7 requires a cyclic group");
    const auto v1 = gr_from_word(spec.ring, spec.group, spec.v1);
    const auto v2 = gr_from_word(spec.ring, spec.group, spec.v2);
    const auto sum = gr_add(v1, v2);
    const RingMatrix A = reverse_circulant(spec.ring, spec.ra);
    const RingMatrix lhs = mat_add(sigma(gr_mul(sum, involution(sum)), spec.listing), mat_mul(A, A));
    if (!lhs.is_identity()) return false;
    return gr_mul(v1, involution(v2)) == gr_mul(v2, involution(v1));
}

bool check_lemma6(const ConstructionSpec& spec) {
    const auto v1 = gr_from_word(spec.ring, spec.group, spec.v1);
    const auto v2 = gr_from_word(spec.ring, spec.group, spec.v2);
    const auto sum = gr_add(v1, v2);
    const RingMatrix A = reverse_circulant(spec.ring, spec.ra);
    return mat_add(sigma(gr_mul(sum, sum), spec.listing), mat_mul(A, A)).is_identity();
}

bool check_lemma8(const ConstructionSpec& spec) {
    for (ringbits v : spec.ra)
        if (v != 0) throw std::invalid_argument("check_lemma8 requires A = 0");
    const auto v1 = gr_from_word(spec.ring, spec.group, spec.v1);
    const auto v2 = gr_from_word(spec.ring, spec.group, spec.v2);
    return is_unitary_unit(gr_add(v1, v2));
}

}  // namespace sdc
