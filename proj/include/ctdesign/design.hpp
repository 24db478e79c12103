#pragma once

// A design: a duplicate-free set of k-subsets of {0..v-1}.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ctdesign/ksubset.hpp"
#include "ctdesign/perm.hpp"

namespace ctd {

struct Design {
    int v = 0;
    int k = 0;
    std::vector<KSubset> blocks; // sorted by bit pattern, no duplicates

    Design(int v_, int k_, std::vector<KSubset> blocks_)
        : v(v_), k(k_), blocks(std::move(blocks_)) {
        GroundSet g(v);
        if (k < 1 || k > v)
            throw std::invalid_argument("Design: k must be in 1..v");
        if (blocks.empty())
            throw std::invalid_argument("Design: no blocks");
        for (const auto& b : blocks) {
            check_subset(b, g);
            if (b.k() != k)
                throw std::invalid_argument("Design: block cardinality != k");
        }
        std::sort(blocks.begin(), blocks.end());
        if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
            throw std::invalid_argument("Design: duplicate block");
    }

    std::size_t size() const { return blocks.size(); }
    GroundSet ground() const { return GroundSet(v); }

    bool contains(const KSubset& s) const {
        return std::binary_search(blocks.begin(), blocks.end(), s);
    }
};

// blockwise complement: a design in J(v, v-k); pairwise distances are
// preserved since |A^c & B^c| = v - 2k + |A & B|
inline Design complement_map(const Design& d) {
    const GroundSet g(d.v);
    std::vector<KSubset> out;
    out.reserve(d.blocks.size());
    for (const auto& b : d.blocks)
        out.push_back(complement(b, g));
    return Design(d.v, d.v - d.k, std::move(out));
}

// true iff g maps the block set onto itself
inline bool preserves(const Permutation& g, const Design& d) {
    if (g.degree() != d.v)
        return false;
    for (const auto& b : d.blocks)
        if (!d.contains(apply(g, b)))
            return false;
    return true;
}

} // namespace ctd
