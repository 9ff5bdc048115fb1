#pragma once

#include "sdc/group_ring.hpp"

namespace sdc {

// One candidate for the generator matrix
//   M = [ I_{2n} | sigma(v1)    sigma(v2)+A ]
//       [        | sigma(v2)+A  sigma(v1)   ]
// with A the reverse circulant built from ra.
struct ConstructionSpec {
    RingId ring = RingId::F2;
    GroupPtr group;
    Listing listing;
    std::vector<ringbits> v1, v2, ra;
};

ConstructionSpec make_spec(RingId ring, GroupPtr group, Listing listing, const std::vector<ringbits>& v1,
                           const std::vector<ringbits>& v2, const std::vector<ringbits>& ra);

struct GeneratorMatrix {
    RingId ring = RingId::F2;
    int n = 0;              // group order; code length is 4n, rank 2n
    RingMatrix right;       // the 2n x 2n non-identity half
    int k() const { return 2 * n; }
    int length() const { return 4 * n; }
    // Full rows (I | right), each of length 4n.
    std::vector<std::vector<ringbits>> rows() const;
};

GeneratorMatrix build(const ConstructionSpec& spec);

// Block pieces, exposed for the algebraic checks.
RingMatrix sigma_v1(const ConstructionSpec& spec);
RingMatrix sigma_v2_plus_a(const ConstructionSpec& spec);

// (B+C)(B+C)^T = I and B C^T = C B^T.
bool check_lemma1(const RingMatrix& B, const RingMatrix& C);

// The general self-duality criterion; single source of truth.
bool check_theorem2(const ConstructionSpec& spec);

// Cyclic-group specialization: sigma((v1+v2)(v1+v2)*) + A^2 = I and
// v1 v2* = v2 v1*.
bool check_lemma7(const ConstructionSpec& spec);

// Exponent-2 sufficient condition: sigma((v1+v2)^2) + A^2 = I, for
// circulant sigma(v1), sigma(v2).
bool check_lemma6(const ConstructionSpec& spec);

// With A = 0 and C_sigma self-dual, v1+v2 must be a unitary unit.
bool check_lemma8(const ConstructionSpec& spec);

}  // namespace sdc
