#include "sdc/group.hpp"

#include <numeric>
#include <stdexcept>

namespace sdc {

bool Group::is_abelian() const {
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            if (mul(i, j) != mul(j, i)) return false;
    return true;
}

int Group::element_order(int g) const {
    int k = 1;
    int acc = g;
    while (acc != 0) {
        acc = mul(acc, g);
        ++k;
    }
    return k;
}

int Group::exponent() const {
    int e = 1;
    for (int g = 0; g < order; ++g) e = std::lcm(e, element_order(g));
    return e;
}

bool Group::consistent() const {
    for (int i = 0; i < order; ++i) {
        if (mul(0, i) != i || mul(i, 0) != i) return false;
        if (mul(i, inv(i)) != 0 || mul(inv(i), i) != 0) return false;
    }
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            for (int k = 0; k < order; ++k)
                if (mul(mul(i, j), k) != mul(i, mul(j, k))) return false;
    return true;
}

GroupPtr make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("group order must be positive");
    auto g = std::make_shared<Group>();
    g->name = "C" + std::to_string(n);
    g->order = n;
    g->cyclic = true;
    g->mul_table.resize(static_cast<std::size_t>(n) * n);
    g->inv_table.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g->inv_table[static_cast<std::size_t>(i)] = (n - i) % n;
        for (int j = 0; j < n; ++j) g->mul_table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    }
    return g;
}

GroupPtr make_product_cyclic(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("group order must be positive");
    const int n = a * b;
    auto g = std::make_shared<Group>();
    g->name = "C" + std::to_string(a) + "xC" + std::to_string(b);
    g->order = n;
    g->cyclic = (std::gcd(a, b) == 1);
    g->mul_table.resize(static_cast<std::size_t>(n) * n);
    g->inv_table.resize(static_cast<std::size_t>(n));
    auto idx = [a](int i, int j) { return i + a * j; };
    for (int i1 = 0; i1 < a; ++i1)
        for (int j1 = 0; j1 < b; ++j1) {
            const int e1 = idx(i1, j1);
            g->inv_table[static_cast<std::size_t>(e1)] = idx((a - i1) % a, (b - j1) % b);
            for (int i2 = 0; i2 < a; ++i2)
                for (int j2 = 0; j2 < b; ++j2)
                    g->mul_table[static_cast<std::size_t>(e1) * n + idx(i2, j2)] = idx((i1 + i2) % a, (j1 + j2) % b);
        }
    return g;
}

GroupPtr make_group(const std::string& tag) {
    auto x = tag.find('x');
    if (tag.empty() || tag[0] != 'C') throw std::invalid_argument("unknown group tag: " + tag);
    if (x == std::string::npos) return make_cyclic(std::stoi(tag.substr(1)));
    const std::string left = tag.substr(1, x - 1);
    const std::string right = tag.substr(x + 1);
    if (right.empty() || right[0] != 'C') throw std::invalid_argument("unknown group tag: " + tag);
    return make_product_cyclic(std::stoi(left), std::stoi(right.substr(1)));
}

Listing natural_listing(int n) {
    Listing l;
    l.name = "natural";
    l.perm.resize(static_cast<std::size_t>(n));
    std::iota(l.perm.begin(), l.perm.end(), 0);
    return l;
}

Listing c2p_split_listing(int n) {
    if (n % 2 != 0) throw std::invalid_argument("c2p_split needs even order");
    const int p = n / 2;
    Listing l;
    l.name = "c2p_split";
    l.perm.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < p; ++i) l.perm[static_cast<std::size_t>(i + p * j)] = (2 * i + j) % n;
    return l;
}

Listing explicit_listing(std::vector<int> perm, std::string name) {
    Listing l;
    l.name = std::move(name);
    l.perm = std::move(perm);
    return l;
}

Listing product_swapped_listing(int a, int b) {
    // Position ordered by i then j; element x^i y^j lives at index i + a*j.
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(a) * b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) perm.push_back(i + a * j);
    return explicit_listing(std::move(perm), "lex_yx");
}

Listing make_listing(const std::string& tag, const Group& g) {
    if (tag == "natural" || tag == "lex_xy") {
        Listing l = natural_listing(g.order);
        l.name = tag;
        return l;
    }
    if (tag == "c2p_split") return c2p_split_listing(g.order);
    if (tag == "lex_yx") {
        auto x = g.name.find("xC");
        if (x == std::string::npos) throw std::invalid_argument("lex_yx needs a product group");
        const int a = std::stoi(g.name.substr(1, x - 1));
        const int b = std::stoi(g.name.substr(x + 2));
        return product_swapped_listing(a, b);
    }
    throw std::invalid_argument("unknown listing tag: " + tag);
}

}  // namespace sdc
