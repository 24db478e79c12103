#pragma once

// Core verdicts: minimum distance, strength, complete regularity
// (equitability of the distance partition), complete transitivity relative
// to a supplied group, opposite design, and the structural witnesses.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ctdesign/design.hpp"
#include "ctdesign/distpart.hpp"
#include "ctdesign/errors.hpp"
#include "ctdesign/orbits.hpp"

namespace ctd {

// minimum pairwise distance; nullopt for a single block (+infinity sentinel)
inline std::optional<int> min_distance(const Design& d) {
    if (d.blocks.size() < 2)
        return std::nullopt;
    int best = d.k;
    for (std::size_t i = 0; i < d.blocks.size() && best > 1; ++i)
        for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
            const int dist = d.k - std::popcount(d.blocks[i].bits & d.blocks[j].bits);
            if (dist < best) {
                best = dist;
                if (best == 1)
                    break;
            }
        }
    return best;
}

// largest t such that every t-subset of X lies in the same number of blocks;
// counted by iterating blocks x their t-subsets, descending trial over t
inline int strength(const Design& d) {
    for (int t = d.k; t >= 1; --t) {
        const std::uint64_t total = binom(d.v, t);
        std::unordered_map<std::uint64_t, std::uint64_t> coverage;
        coverage.reserve(std::min<std::uint64_t>(total, d.blocks.size() * binom(d.k, t)));
        for (const auto& b : d.blocks) {
            // enumerate t-subsets of the block
            const auto pts = b.points();
            std::vector<int> idx(t);
            for (int i = 0; i < t; ++i)
                idx[i] = i;
            while (true) {
                std::uint64_t m = 0;
                for (int i : idx)
                    m |= std::uint64_t{1} << pts[i];
                ++coverage[m];
                int i = t - 1;
                while (i >= 0 && idx[i] == d.k - t + i)
                    --i;
                if (i < 0)
                    break;
                ++idx[i];
                for (int j = i + 1; j < t; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }
        if (coverage.size() != total)
            continue; // some t-subset uncovered, coverage not constant
        const std::uint64_t lambda = coverage.begin()->second;
        bool constant = true;
        for (const auto& [m, c] : coverage)
            if (c != lambda) {
                constant = false;
                break;
            }
        if (constant)
            return t;
    }
    return 0;
}

// ---- complete regularity -------------------------------------------------

struct EquitabilityWitness {
    KSubset vertex;       // in cell i, with anomalous neighbor count into cell j
    int i = 0;
    int j = 0;
    std::int64_t count_expected = 0; // from the first vertex seen in cell i
    std::int64_t count_found = 0;
};

struct EquitabilityVerdict {
    bool equitable = false;
    bool trivial = false; // design is all of V(J(v,k)): r = 0, vacuously equitable
    std::vector<std::vector<std::int64_t>> intersection_numbers; // b[i][j]
    std::optional<EquitabilityWitness> witness;
};

inline EquitabilityVerdict check_equitable(const Design& d, const DistancePartition& part) {
    const GroundSet g(d.v);
    const int rr = part.r;
    EquitabilityVerdict verdict;
    if (rr == 0) {
        verdict.equitable = true;
        verdict.trivial = true;
        verdict.intersection_numbers = {{static_cast<std::int64_t>(d.k) * (d.v - d.k)}};
        return verdict;
    }
    std::vector<std::vector<std::int64_t>> b(rr + 1);
    const std::uint64_t full = g.full_mask();
    std::vector<std::int64_t> row(rr + 1);
    for (int ci = 0; ci <= rr; ++ci) {
        for (const std::uint32_t vrank : part.cells[ci]) {
            const std::uint64_t bits = unrank(vrank, g, d.k).bits;
            std::fill(row.begin(), row.end(), 0);
            const std::uint64_t outside = full & ~bits;
            for (std::uint64_t rm = bits; rm; rm &= rm - 1) {
                const std::uint64_t without = bits ^ (rm & -rm);
                for (std::uint64_t ad = outside; ad; ad &= ad - 1)
                    ++row[part.dist[rank(KSubset{without | (ad & -ad)}, g)]];
            }
            if (b[ci].empty()) {
                b[ci] = row;
            } else if (b[ci] != row) {
                int j = 0;
                while (b[ci][j] == row[j])
                    ++j;
                verdict.equitable = false;
                verdict.witness = EquitabilityWitness{KSubset{bits}, ci, j, b[ci][j], row[j]};
                return verdict;
            }
        }
    }
    verdict.equitable = true;
    verdict.intersection_numbers = std::move(b);
    return verdict;
}

inline EquitabilityVerdict is_completely_regular(const Design& d,
                                                 std::uint64_t max_ranks = kDefaultMaxRanks) {
    return check_equitable(d, distance_partition(d, max_ranks));
}

// ---- complete transitivity -------------------------------------------------

struct OrbitCensusRow {
    std::uint64_t size = 0;
    int distance = 0;        // distance of the orbit from the design
    SubsetRank representative = 0;
};

struct TransitivityVerdict {
    bool completely_transitive = false;
    int covering_radius = 0;
    std::vector<OrbitCensusRow> census; // sorted by (distance, representative)
};

inline void check_preserves(const PermGroup& G, const Design& d) {
    if (G.degree() != d.v)
        throw NotPreservedError("group degree != design point count");
    for (const auto& g : G.generators())
        if (!preserves(g, d))
            throw NotPreservedError("a generator does not preserve the block set");
}

inline TransitivityVerdict is_completely_transitive(const Design& d, const PermGroup& G,
                                                    std::uint64_t max_ranks = kDefaultMaxRanks) {
    check_preserves(G, d);
    const auto part = distance_partition(d, max_ranks);
    const auto orbs = orbits_on_ksubsets(G, d.k, max_ranks);

    TransitivityVerdict out;
    out.covering_radius = part.r;
    out.census.resize(orbs.count());
    for (std::size_t id = 0; id < orbs.count(); ++id) {
        out.census[id].size = orbs.sizes[id];
        out.census[id].representative = orbs.representative[id];
        // distance is constant on orbits because G preserves the design
        out.census[id].distance = part.dist[orbs.representative[id]];
    }
    std::sort(out.census.begin(), out.census.end(), [](const auto& a, const auto& b) {
        return a.distance != b.distance ? a.distance < b.distance
                                        : a.representative < b.representative;
    });
    out.completely_transitive =
        orbs.count() == static_cast<std::size_t>(part.r) + 1;
    return out;
}

// ---- opposite design -------------------------------------------------------

// the farthest cell C_r as a design
inline Design opposite(const Design& d, std::uint64_t max_ranks = kDefaultMaxRanks) {
    const auto part = distance_partition(d, max_ranks);
    const GroundSet g(d.v);
    std::vector<KSubset> blocks;
    blocks.reserve(part.cells[part.r].size());
    for (const std::uint32_t r : part.cells[part.r])
        blocks.push_back(unrank(r, g, d.k));
    return Design(d.v, d.k, std::move(blocks));
}

// ---- structural witnesses ----------------------------------------------------

struct PointClosure {
    KSubset closure;
    bool in_some_block = false; // false: x in no block, closure is the whole set
};

// intersection of all blocks containing x
inline PointClosure point_closure(const Design& d, int x) {
    if (x < 0 || x >= d.v)
        throw std::invalid_argument("point_closure: point out of range");
    const GroundSet g(d.v);
    std::uint64_t acc = g.full_mask();
    bool any = false;
    for (const auto& b : d.blocks)
        if (b.contains(x)) {
            acc &= b.bits;
            any = true;
        }
    if (!any)
        return {KSubset{g.full_mask()}, false};
    return {KSubset{acc}, true};
}

struct UniformPartition {
    int v = 0;
    int cell_size = 0; // a
    std::vector<KSubset> cells;

    UniformPartition(int v_, std::vector<KSubset> cells_)
        : v(v_), cells(std::move(cells_)) {
        const GroundSet g(v);
        if (cells.empty())
            throw std::invalid_argument("UniformPartition: no cells");
        cell_size = cells.front().k();
        std::uint64_t seen = 0;
        for (const auto& c : cells) {
            check_subset(c, g);
            if (c.k() != cell_size)
                throw std::invalid_argument("UniformPartition: cells not uniform");
            if (seen & c.bits)
                throw std::invalid_argument("UniformPartition: cells overlap");
            seen |= c.bits;
        }
        if (seen != g.full_mask())
            throw std::invalid_argument("UniformPartition: cells do not cover X");
    }

    int cell_count() const { return static_cast<int>(cells.size()); }
};

// contiguous cells {0..a-1}, {a..2a-1}, ...
inline UniformPartition contiguous_partition(int a, int b) {
    std::vector<KSubset> cells;
    for (int i = 0; i < b; ++i) {
        std::uint64_t bits = 0;
        for (int j = 0; j < a; ++j)
            bits |= std::uint64_t{1} << (i * a + j);
        cells.push_back(KSubset{bits});
    }
    return UniformPartition(a * b, std::move(cells));
}

// multiset { |s & Y_i| }, sorted descending; sums to |s|
inline std::vector<int> intersection_profile(const KSubset& s, const UniformPartition& P) {
    std::vector<int> e;
    e.reserve(P.cells.size());
    for (const auto& c : P.cells)
        e.push_back(std::popcount(s.bits & c.bits));
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

// ---- trichotomy for completely transitive designs with delta >= 3 ------------

enum class TrichotomyCase {
    two_disjoint_ksets,   // v = 2k >= 6, two disjoint blocks
    disjoint_triples,     // v = 3b, blocks = the b triples of a partition
    group_2transitive,    // the supplied group is 2-transitive on X
};

struct TrichotomyVerdict {
    TrichotomyCase which;
    bool flag_transitive = false; // G_alpha transitive on alpha x (X \ alpha)
};

inline TrichotomyVerdict theorem_trichotomy(const Design& d, const PermGroup& G,
                                            std::uint64_t max_ranks = kDefaultMaxRanks) {
    if (d.blocks.size() < 2)
        throw std::invalid_argument("trichotomy: needs at least two blocks");
    const auto delta = min_distance(d);
    if (!delta || *delta < 3)
        throw std::invalid_argument("trichotomy: needs minimum distance >= 3");
    if (!is_completely_transitive(d, G, max_ranks).completely_transitive)
        throw std::invalid_argument("trichotomy: design not completely transitive under G");

    TrichotomyVerdict out{TrichotomyCase::group_2transitive, false};
    out.flag_transitive = flag_orbit_check(G, d, d.blocks.front()).transitive;
    if (!out.flag_transitive)
        throw std::logic_error("trichotomy: block stabilizer not flag-transitive; "
                               "contradicts the classification");

    if (d.v == 2 * d.k && d.v >= 6 && d.blocks.size() == 2 &&
        (d.blocks[0].bits & d.blocks[1].bits) == 0) {
        out.which = TrichotomyCase::two_disjoint_ksets;
        return out;
    }
    if (d.k == 3 && d.v % 3 == 0 && d.blocks.size() == static_cast<std::size_t>(d.v) / 3) {
        std::uint64_t seen = 0;
        bool disjoint = true;
        for (const auto& b : d.blocks) {
            if (seen & b.bits) {
                disjoint = false;
                break;
            }
            seen |= b.bits;
        }
        if (disjoint) {
            out.which = TrichotomyCase::disjoint_triples;
            return out;
        }
    }
    if (!G.is_2transitive())
        throw std::logic_error("trichotomy: no case applies; "
                               "contradicts the classification");
    out.which = TrichotomyCase::group_2transitive;
    return out;
}

// ---- combined report -----------------------------------------------------------

struct GroupReport {
    BigInt order;
    TransitivityVerdict transitivity;
};

struct AnalysisReport {
    int v = 0;
    int k = 0;
    std::uint64_t block_count = 0;
    std::optional<int> delta; // nullopt = +infinity (single block)
    int covering_radius = 0;
    int strength = 0;
    std::vector<std::uint64_t> cell_sizes;
    EquitabilityVerdict completely_regular;
    std::optional<GroupReport> group;
};

inline AnalysisReport analyze(const Design& d, const PermGroup* G = nullptr,
                              std::uint64_t max_ranks = kDefaultMaxRanks) {
    AnalysisReport rep;
    rep.v = d.v;
    rep.k = d.k;
    rep.block_count = d.blocks.size();
    rep.delta = min_distance(d);
    rep.strength = strength(d);
    const auto part = distance_partition(d, max_ranks);
    rep.covering_radius = part.r;
    for (int i = 0; i <= part.r; ++i)
        rep.cell_sizes.push_back(part.cell_size(i));
    rep.completely_regular = check_equitable(d, part);
    if (G)
        rep.group = GroupReport{G->order(), is_completely_transitive(d, *G, max_ranks)};
    return rep;
}

} // namespace ctd
