#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdc {

// One codeword of length <= 128, fixed two-word layout so the enumeration
// inner loop stays branch-free.
struct Word128 {
    std::uint64_t lo = 0, hi = 0;

    void flip(int i) {
        if (i < 64)
            lo ^= (std::uint64_t{1} << i);
        else
            hi ^= (std::uint64_t{1} << (i - 64));
    }
    bool get(int i) const { return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1; }
    Word128& operator^=(const Word128& o) {
        lo ^= o.lo;
        hi ^= o.hi;
        return *this;
    }
    friend Word128 operator^(Word128 a, const Word128& b) { return a ^= b; }
    int weight() const { return std::popcount(lo) + std::popcount(hi); }
    bool dot(const Word128& o) const { return ((std::popcount(lo & o.lo) + std::popcount(hi & o.hi)) & 1) != 0; }
    bool is_zero() const { return lo == 0 && hi == 0; }
    friend bool operator==(const Word128&, const Word128&) = default;
};

Word128 word_from_bits(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> bits_from_word(const Word128& w, int length);
Word128 word_from_string(const std::string& bits);  // '0'/'1'
std::string word_to_string(const Word128& w, int length);

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // counts[w] = A_w, w = 0..n

    std::uint64_t at(int w) const { return counts[static_cast<std::size_t>(w)]; }
    std::uint64_t total() const;
    int min_positive_weight() const;  // 0 if the code is {0}
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// Binary linear code held as a canonical RREF generator matrix.
class BinaryCode {
public:
    static constexpr int kMaxDim = 40;  // resource guard for enumeration

    BinaryCode() = default;
    static BinaryCode from_rows(const std::vector<Word128>& rows, int length);
    static BinaryCode from_bit_rows(const std::vector<std::vector<std::uint8_t>>& rows);

    int length() const { return length_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<Word128>& rows() const { return rows_; }

    bool contains(Word128 w) const;
    bool is_self_dual() const;

    // Exact A_w tallies by Gray-code traversal of all 2^k codewords,
    // partitioned over the top index bits when workers > 1.  Parallel and
    // serial tallies are identical.  Throws for k > kMaxDim.
    WeightDistribution weight_distribution(int workers = 1) const;

    int min_distance(int workers = 1) const;

    // Early-exit scan: true iff some nonzero codeword has weight < threshold.
    bool has_word_below(int threshold, int workers = 1) const;

    // Dimension of the intersection with another code of the same length.
    int intersection_dimension(const BinaryCode& other) const;

    // Pivot column of each generator row, ascending.
    std::vector<int> pivot_columns() const;

    // Permutation-equivalent code with the pivot columns moved to the front
    // in order (generator becomes [I_k | A]); identity on systematic codes.
    BinaryCode standard_form() const;

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

private:
    int length_ = 0;
    std::vector<Word128> rows_;  // RREF, linearly independent
};

enum class EnumForm { W64_1, W64_2, W68_1, W68_2 };
const char* form_name(EnumForm f);

struct EnumeratorParams {
    EnumForm form;
    long beta = 0;
    std::optional<long> gamma;
};

// Matches the distribution of a self-dual [64,32,12] / [68,34,12] code
// against the published enumerator templates; throws std::domain_error when
// beta/gamma fail to be integral or no form fits.
EnumeratorParams enumerator_params(int n, const WeightDistribution& dist);

enum class CodeType { TypeI, TypeII };

CodeType classify_type(const WeightDistribution& dist);

// Rains bound check; self-dual input assumed.
bool is_extremal(int n, int d, CodeType type);

}  // namespace sdc
