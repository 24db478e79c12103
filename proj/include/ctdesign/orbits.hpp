#pragma once

// Orbits of a permutation group in its induced action on k-subsets,
// computed by seeded BFS over colex ranks, plus the flag-orbit test.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "ctdesign/design.hpp"
#include "ctdesign/errors.hpp"
#include "ctdesign/group.hpp"
#include "ctdesign/ksubset.hpp"

namespace ctd {

struct OrbitPartition {
    int v = 0;
    int k = 0;
    std::vector<std::uint32_t> orbit_of;    // rank -> orbit id
    std::vector<std::uint64_t> sizes;       // per orbit id
    std::vector<SubsetRank> representative; // least rank per orbit id

    std::size_t count() const { return sizes.size(); }
};

inline OrbitPartition orbits_on_ksubsets(const PermGroup& G, int k,
                                         std::uint64_t max_ranks = kDefaultMaxRanks) {
    const GroundSet g(G.degree());
    if (k < 1 || k > g.v)
        throw std::invalid_argument("orbits_on_ksubsets: k out of range");
    const std::uint64_t n = binom(g.v, k);
    if (n > max_ranks)
        throw MemoryCapError("orbits_on_ksubsets: C(v,k) exceeds rank cap");

    OrbitPartition part;
    part.v = g.v;
    part.k = k;
    part.orbit_of.assign(n, UINT32_MAX);

    std::vector<std::uint64_t> queue;
    for (SubsetRank seed = 0; seed < n; ++seed) {
        if (part.orbit_of[seed] != UINT32_MAX)
            continue;
        const auto id = static_cast<std::uint32_t>(part.sizes.size());
        part.sizes.push_back(0);
        part.representative.push_back(seed);
        queue.clear();
        queue.push_back(unrank(seed, g, k).bits);
        part.orbit_of[seed] = id;
        part.sizes[id] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const KSubset s{queue[qi]};
            for (const auto& gen : G.generators()) {
                const KSubset img = apply(gen, s);
                const SubsetRank r = rank(img, g);
                if (part.orbit_of[r] == UINT32_MAX) {
                    part.orbit_of[r] = id;
                    ++part.sizes[id];
                    queue.push_back(img.bits);
                }
            }
        }
    }
    return part;
}

// Is the setwise stabilizer G_a transitive on a x (X \ a)?  Computed without
// forming G_a: take the G-orbit of the flag (a,x,y) and restrict to flags
// whose subset component is a; that restriction is the G_a-orbit of (x,y).
struct FlagOrbitResult {
    bool transitive = false;
    std::uint64_t restricted_size = 0; // flags with subset == a
    std::uint64_t full_size = 0;       // whole flag orbit
};

inline FlagOrbitResult flag_orbit_check(const PermGroup& G, const Design& d,
                                        const KSubset& a) {
    if (!d.contains(a))
        throw std::invalid_argument("flag_orbit_check: block not in design");
    const GroundSet g(d.v);

    struct Flag {
        std::uint64_t bits;
        std::uint8_t x, y;
        bool operator==(const Flag&) const = default;
    };
    struct FlagHash {
        std::size_t operator()(const Flag& f) const {
            std::uint64_t h = f.bits * 0x9e3779b97f4a7c15ULL;
            h ^= (std::uint64_t{f.x} << 8 | f.y) * 0xc2b2ae3d27d4eb4fULL;
            return static_cast<std::size_t>(h ^ (h >> 29));
        }
    };

    const int x0 = std::countr_zero(a.bits);
    const int y0 = std::countr_zero(~a.bits & g.full_mask());
    std::unordered_set<Flag, FlagHash> seen;
    std::vector<Flag> queue;
    const Flag start{a.bits, static_cast<std::uint8_t>(x0), static_cast<std::uint8_t>(y0)};
    seen.insert(start);
    queue.push_back(start);
    std::uint64_t restricted = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const Flag f = queue[qi];
        for (const auto& gen : G.generators()) {
            const Flag img{apply(gen, KSubset{f.bits}).bits,
                           static_cast<std::uint8_t>(gen(f.x)),
                           static_cast<std::uint8_t>(gen(f.y))};
            if (seen.insert(img).second) {
                if (img.bits == a.bits)
                    ++restricted;
                queue.push_back(img);
            }
        }
    }
    const std::uint64_t want =
        static_cast<std::uint64_t>(a.k()) * (g.v - a.k());
    return {restricted == want, restricted, seen.size()};
}

} // namespace ctd
