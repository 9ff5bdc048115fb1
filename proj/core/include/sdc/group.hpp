#pragma once

#include <memory>
#include <string>
#include <vector>

namespace sdc {

// Finite group given by an explicit multiplication table over element
// indices 0..n-1, index 0 being the identity.
struct Group {
    std::string name;
    int order = 0;
    std::vector<int> mul_table;  // order x order, row-major
    std::vector<int> inv_table;
    bool cyclic = false;

    int mul(int i, int j) const { return mul_table[static_cast<std::size_t>(i) * order + j]; }
    int inv(int i) const { return inv_table[static_cast<std::size_t>(i)]; }

    bool is_abelian() const;
    int exponent() const;
    int element_order(int g) const;
    // Exhaustive table sanity: identity row/column, inverses, associativity.
    bool consistent() const;
};

using GroupPtr = std::shared_ptr<const Group>;

// Cyclic group <x | x^n = 1> listed 1, x, x^2, ...
GroupPtr make_cyclic(int n);

// Direct product Ca x Cb, element x^i y^j at index i + a*j, i.e. listed
// {1, x, ..., x^{a-1}, y, xy, ..., x^{a-1} y, ...}.
GroupPtr make_product_cyclic(int a, int b);

// Named lookup for corpus/CLI tags: "C4", "C8", "C17", "C4xC2", ...
GroupPtr make_group(const std::string& tag);

// Coefficient-to-element listing used by sigma: perm[pos] = element index of
// the coefficient stored at pos.
struct Listing {
    std::string name;
    std::vector<int> perm;

    int at(int pos) const { return perm[static_cast<std::size_t>(pos)]; }
    int size() const { return static_cast<int>(perm.size()); }
};

Listing natural_listing(int n);

// The C_{2p} split listing: coefficient at position i + p*j (0-based,
// i < p, j < 2) belongs to x^{2i+j}.
Listing c2p_split_listing(int n);

Listing explicit_listing(std::vector<int> perm, std::string name);

// For Ca x Cb built by make_product_cyclic: the listing ordered by i then j,
// {1, y, ..., x, xy, ...}.
Listing product_swapped_listing(int a, int b);

// Candidate listing by tag for a given group ("natural", "c2p_split",
// "lex_xy", "lex_yx").
Listing make_listing(const std::string& tag, const Group& g);

}  // namespace sdc
