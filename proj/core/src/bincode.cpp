#include "sdc/bincode.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace sdc {

namespace {

int lowest_bit(const Word128& w) {
    if (w.lo != 0) return std::countr_zero(w.lo);
    if (w.hi != 0) return 64 + std::countr_zero(w.hi);
    return -1;
}

// Number of top rows fixed per partition; 2^12 partitions keep 8 workers
// busy while the per-partition Gray walk stays long enough to amortize.
int partition_bits(int k) { return k > 20 ? 12 : 0; }

}  // namespace

Word128 word_from_bits(const std::vector<std::uint8_t>& bits) {
    if (bits.size() > 128) throw std::invalid_argument("codeword length > 128");
    Word128 w;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1) w.flip(static_cast<int>(i));
    return w;
}

std::vector<std::uint8_t> bits_from_word(const Word128& w, int length) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) bits[static_cast<std::size_t>(i)] = w.get(i) ? 1 : 0;
    return bits;
}

Word128 word_from_string(const std::string& s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("binary string expected");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return word_from_bits(bits);
}

std::string word_to_string(const Word128& w, int length) {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i)
        if (w.get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

int WeightDistribution::min_positive_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w] != 0) return static_cast<int>(w);
    return 0;
}

BinaryCode BinaryCode::from_rows(const std::vector<Word128>& rows, int length) {
    if (length < 1 || length > 128) throw std::invalid_argument("code length must be in 1..128");
    BinaryCode c;
    c.length_ = length;
    std::vector<std::pair<int, Word128>> basis;  // (pivot, row), pivot ascending
    for (Word128 w : rows) {
        for (const auto& [p, r] : basis)
            if (w.get(p)) w ^= r;
        const int p = lowest_bit(w);
        if (p < 0) continue;  // dependent or zero row
        if (p >= length) throw std::invalid_argument("row has bits beyond the code length");
        // Back-substitute into the existing basis to keep RREF canonical.
        for (auto& [q, r] : basis)
            if (r.get(p)) r ^= w;
        basis.emplace_back(p, w);
        std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    c.rows_.reserve(basis.size());
    for (const auto& [p, r] : basis) c.rows_.push_back(r);
    return c;
}

BinaryCode BinaryCode::from_bit_rows(const std::vector<std::vector<std::uint8_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("no rows");
    std::vector<Word128> ws;
    ws.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) throw std::invalid_argument("ragged generator rows");
        ws.push_back(word_from_bits(r));
    }
    return from_rows(ws, static_cast<int>(rows.front().size()));
}

bool BinaryCode::contains(Word128 w) const {
    for (const auto& r : rows_) {
        const int p = lowest_bit(r);
        if (w.get(p)) w ^= r;
    }
    return w.is_zero();
}

bool BinaryCode::is_self_dual() const {
    if (2 * dimension() != length_) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = i; j < rows_.size(); ++j)
            if (rows_[i].dot(rows_[j])) return false;
    return true;
}

WeightDistribution BinaryCode::weight_distribution(int workers) const {
    const int k = dimension();
    if (k > kMaxDim) throw std::domain_error("dimension exceeds the enumeration guard (k <= 40)");
    if (workers < 1) workers = 1;

    const int t = partition_bits(k);
    const int low = k - t;
    const std::uint64_t parts = std::uint64_t{1} << t;
    const std::uint64_t steps = std::uint64_t{1} << low;

    std::vector<std::vector<std::uint64_t>> tallies(
        static_cast<std::size_t>(workers), std::vector<std::uint64_t>(static_cast<std::size_t>(length_) + 1, 0));

    auto run = [&](int wi, std::uint64_t p_begin, std::uint64_t p_end) {
        // Local aliasing-free copies keep the inner loop in registers.
        std::uint64_t rlo[kMaxDim] = {}, rhi[kMaxDim] = {};
        for (int j = 0; j < k; ++j) {
            rlo[j] = rows_[static_cast<std::size_t>(j)].lo;
            rhi[j] = rows_[static_cast<std::size_t>(j)].hi;
        }
        std::uint64_t cnt[129] = {};
        const std::uint64_t r0lo = rlo[0], r0hi = rhi[0];
        for (std::uint64_t p = p_begin; p < p_end; ++p) {
            std::uint64_t lo = 0, hi = 0;
            for (int j = 0; j < t; ++j)
                if ((p >> j) & 1) {
                    lo ^= rlo[low + j];
                    hi ^= rhi[low + j];
                }
            ++cnt[std::popcount(lo) + std::popcount(hi)];
            // Gray-code walk over the low rows; odd steps always flip row 0.
            std::uint64_t i = 1;
            for (; i + 1 < steps; i += 2) {
                lo ^= r0lo;
                hi ^= r0hi;
                ++cnt[std::popcount(lo) + std::popcount(hi)];
                const int j = std::countr_zero(i + 1);
                lo ^= rlo[j];
                hi ^= rhi[j];
                ++cnt[std::popcount(lo) + std::popcount(hi)];
            }
            if (i < steps) {
                lo ^= r0lo;
                hi ^= r0hi;
                ++cnt[std::popcount(lo) + std::popcount(hi)];
            }
        }
        auto& out = tallies[static_cast<std::size_t>(wi)];
        for (int w = 0; w <= length_; ++w) out[static_cast<std::size_t>(w)] = cnt[w];
    };

    if (workers == 1 || parts == 1) {
        run(0, 0, parts);
    } else {
        std::vector<std::thread> threads;
        const std::uint64_t chunk = (parts + workers - 1) / workers;
        for (int wi = 0; wi < workers; ++wi) {
            const std::uint64_t b = std::min<std::uint64_t>(parts, static_cast<std::uint64_t>(wi) * chunk);
            const std::uint64_t e = std::min<std::uint64_t>(parts, b + chunk);
            if (b < e) threads.emplace_back(run, wi, b, e);
        }
        for (auto& th : threads) th.join();
    }

    WeightDistribution d;
    d.counts.assign(static_cast<std::size_t>(length_) + 1, 0);
    for (const auto& tl : tallies)
        for (std::size_t w = 0; w < tl.size(); ++w) d.counts[w] += tl[w];
    return d;
}

int BinaryCode::min_distance(int workers) const { return weight_distribution(workers).min_positive_weight(); }

bool BinaryCode::has_word_below(int threshold, int workers) const {
    const int k = dimension();
    if (k > kMaxDim) throw std::domain_error("dimension exceeds the enumeration guard (k <= 40)");
    if (workers < 1) workers = 1;

    const int t = partition_bits(k);
    const int low = k - t;
    const std::uint64_t parts = std::uint64_t{1} << t;
    const std::uint64_t steps = std::uint64_t{1} << low;
    std::atomic<bool> found{false};

    auto run = [&](std::uint64_t p_begin, std::uint64_t p_end) {
        for (std::uint64_t p = p_begin; p < p_end && !found.load(std::memory_order_relaxed); ++p) {
            Word128 cw;
            for (int j = 0; j < t; ++j)
                if ((p >> j) & 1) cw ^= rows_[static_cast<std::size_t>(low + j)];
            if (!cw.is_zero() && cw.weight() < threshold) {
                found.store(true, std::memory_order_relaxed);
                return;
            }
            std::uint64_t lo = cw.lo, hi = cw.hi;
            for (std::uint64_t i = 1; i < steps; ++i) {
                const auto& r = rows_[static_cast<std::size_t>(std::countr_zero(i))];
                lo ^= r.lo;
                hi ^= r.hi;
                if (std::popcount(lo) + std::popcount(hi) < threshold) {
                    found.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    };

    if (workers == 1 || parts == 1) {
        run(0, parts);
    } else {
        std::vector<std::thread> threads;
        const std::uint64_t chunk = (parts + workers - 1) / workers;
        for (int wi = 0; wi < workers; ++wi) {
            const std::uint64_t b = std::min<std::uint64_t>(parts, static_cast<std::uint64_t>(wi) * chunk);
            const std::uint64_t e = std::min<std::uint64_t>(parts, b + chunk);
            if (b < e) threads.emplace_back(run, b, e);
        }
        for (auto& th : threads) th.join();
    }
    return found.load();
}

std::vector<int> BinaryCode::pivot_columns() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(lowest_bit(r));
    return p;
}

BinaryCode BinaryCode::standard_form() const {
    const auto piv = pivot_columns();
    std::vector<bool> is_pivot(static_cast<std::size_t>(length_), false);
    for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> newpos(static_cast<std::size_t>(length_));
    int idx = 0;
    for (int i = 0; i < length_; ++i)
        if (is_pivot[static_cast<std::size_t>(i)]) newpos[static_cast<std::size_t>(i)] = idx++;
    for (int i = 0; i < length_; ++i)
        if (!is_pivot[static_cast<std::size_t>(i)]) newpos[static_cast<std::size_t>(i)] = idx++;
    std::vector<Word128> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) {
        Word128 w;
        for (int i = 0; i < length_; ++i)
            if (r.get(i)) w.flip(newpos[static_cast<std::size_t>(i)]);
        rows.push_back(w);
    }
    return from_rows(rows, length_);
}

int BinaryCode::intersection_dimension(const BinaryCode& other) const {
    if (length_ != other.length_) throw std::invalid_argument("length mismatch in intersection");
    std::vector<Word128> all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    const int sum_dim = BinaryCode::from_rows(all, length_).dimension();
    return dimension() + other.dimension() - sum_dim;
}

const char* form_name(EnumForm f) {
    switch (f) {
        case EnumForm::W64_1: return "W64_1";
        case EnumForm::W64_2: return "W64_2";
        case EnumForm::W68_1: return "W68_1";
        case EnumForm::W68_2: return "W68_2";
    }
    throw std::logic_error("bad EnumForm");
}

EnumeratorParams enumerator_params(int n, const WeightDistribution& dist) {
    const long a12 = static_cast<long>(dist.at(12));
    const long a14 = static_cast<long>(dist.at(14));
    if (n == 64) {
        if ((a12 - 1312) % 16 != 0) throw std::domain_error("A_12 does not fit the W64 templates");
        const long beta = (a12 - 1312) / 16;
        if (a14 == 22016 - 64 * beta) return {EnumForm::W64_1, beta, std::nullopt};
        if (a14 == 23040 - 64 * beta) return {EnumForm::W64_2, beta, std::nullopt};
        throw std::domain_error("A_14 matches neither W64 form");
    }
    if (n == 68) {
        if ((a12 - 442) % 4 != 0) throw std::domain_error("A_12 does not fit the W68 templates");
        const long beta = (a12 - 442) / 4;
        if (a14 == 10864 - 8 * beta) return {EnumForm::W68_1, beta, std::nullopt};
        const long rem = 14960 - 8 * beta - a14;
        if (rem % 256 != 0) throw std::domain_error("A_14 matches neither W68 form");
        const long gamma = rem / 256;
        if (gamma < 0 || gamma > 9) throw std::domain_error("gamma outside 0..9");
        return {EnumForm::W68_2, beta, gamma};
    }
    throw std::invalid_argument("enumerator templates exist only for n = 64 and n = 68");
}

CodeType classify_type(const WeightDistribution& dist) {
    for (std::size_t w = 1; w < dist.counts.size(); ++w)
        if (dist.counts[w] != 0 && w % 4 != 0) return CodeType::TypeI;
    return CodeType::TypeII;
}

bool is_extremal(int n, int d, CodeType type) {
    const int base = 4 * (n / 24) + 4;
    if (type == CodeType::TypeII && n % 24 == 22) return d == base + 2;
    return d == base;
}

}  // namespace sdc
