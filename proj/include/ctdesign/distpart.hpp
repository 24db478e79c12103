#pragma once

// Distance partition of V(J(v,k)) with respect to a design: multi-source BFS
// storing one distance byte per rank.

#include <cstdint>
#include <vector>

#include "ctdesign/design.hpp"
#include "ctdesign/errors.hpp"

namespace ctd {

struct DistancePartition {
    int v = 0;
    int k = 0;
    int r = 0;                                      // covering radius
    std::vector<std::uint8_t> dist;                 // by rank
    std::vector<std::vector<std::uint32_t>> cells;  // cells[i] = ranks, ascending

    std::uint64_t cell_size(int i) const { return cells[i].size(); }
};

inline constexpr std::uint8_t kUnreached = 0xFF;

inline DistancePartition distance_partition(const Design& d,
                                            std::uint64_t max_ranks = kDefaultMaxRanks) {
    const GroundSet g(d.v);
    const std::uint64_t n = binom(d.v, d.k);
    if (n > max_ranks)
        throw MemoryCapError("distance_partition: C(v,k) exceeds rank cap");

    DistancePartition part;
    part.v = d.v;
    part.k = d.k;
    part.dist.assign(n, kUnreached);

    std::vector<std::uint64_t> frontier, next;
    frontier.reserve(d.blocks.size());
    for (const auto& b : d.blocks) {
        part.dist[rank(b, g)] = 0;
        frontier.push_back(b.bits);
    }

    const std::uint64_t full = g.full_mask();
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (const std::uint64_t bits : frontier) {
            const std::uint64_t outside = full & ~bits;
            for (std::uint64_t rm = bits; rm; rm &= rm - 1) {
                const std::uint64_t without = bits ^ (rm & -rm);
                for (std::uint64_t ad = outside; ad; ad &= ad - 1) {
                    const std::uint64_t nb = without | (ad & -ad);
                    auto& dn = part.dist[rank(KSubset{nb}, g)];
                    if (dn == kUnreached) {
                        dn = static_cast<std::uint8_t>(level);
                        next.push_back(nb);
                    }
                }
            }
        }
        frontier.swap(next);
    }
    part.r = level - 1;

    part.cells.assign(part.r + 1, {});
    for (std::uint64_t i = 0; i < n; ++i)
        part.cells[part.dist[i]].push_back(static_cast<std::uint32_t>(i));
    return part;
}

} // namespace ctd
