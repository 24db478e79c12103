#pragma once

// Vertex arithmetic of the Johnson graph J(v,k): k-subsets of {0..v-1} as
// one-word bitsets, colexicographic ranking, distance and adjacency.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctdesign/binom.hpp"

namespace ctd {

// number of points; subsets live in {0..v-1}
struct GroundSet {
    int v = 0;

    explicit GroundSet(int v_) : v(v_) {
        if (v < 1 || v > kMaxPoints)
            throw std::invalid_argument("GroundSet: v must be in 1..64");
    }
    std::uint64_t full_mask() const {
        return v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
    }
};

// a k-subset as a bit mask; k is the population count
struct KSubset {
    std::uint64_t bits = 0;

    KSubset() = default;
    explicit KSubset(std::uint64_t b) : bits(b) {}

    static KSubset of_points(std::initializer_list<int> pts) {
        KSubset s;
        for (int p : pts) {
            if (p < 0 || p >= kMaxPoints)
                throw std::invalid_argument("KSubset: point out of range");
            s.bits |= std::uint64_t{1} << p;
        }
        return s;
    }

    template <typename Range>
    static KSubset of_range(const Range& pts) {
        KSubset s;
        for (int p : pts) {
            if (p < 0 || p >= kMaxPoints)
                throw std::invalid_argument("KSubset: point out of range");
            s.bits |= std::uint64_t{1} << p;
        }
        return s;
    }

    int k() const { return std::popcount(bits); }
    bool contains(int p) const { return (bits >> p) & 1; }
    bool operator==(const KSubset&) const = default;
    auto operator<=>(const KSubset&) const = default;

    std::vector<int> points() const {
        std::vector<int> out;
        out.reserve(k());
        for (std::uint64_t m = bits; m; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }
};

using SubsetRank = std::uint64_t;

inline void check_subset(const KSubset& s, const GroundSet& g) {
    if (s.bits & ~g.full_mask())
        throw std::invalid_argument("KSubset: set bit >= v");
}

// colexicographic (combinadic) rank: sum of C(c_i, i+1) over elements in
// increasing order
inline SubsetRank rank(const KSubset& s, const GroundSet& g) {
    check_subset(s, g);
    std::uint64_t r = 0;
    int i = 1;
    for (std::uint64_t m = s.bits; m; m &= m - 1, ++i)
        r += detail::kBinom.c[std::countr_zero(m)][i];
    return r;
}

inline KSubset unrank(SubsetRank idx, const GroundSet& g, int k) {
    if (k < 0 || k > g.v)
        throw std::invalid_argument("unrank: k out of range");
    if (idx >= binom(g.v, k))
        throw std::invalid_argument("unrank: index out of range");
    std::uint64_t bits = 0;
    int c = g.v;
    for (int i = k; i >= 1; --i) {
        --c;
        while (detail::kBinom.c[c][i] > idx)
            --c;
        bits |= std::uint64_t{1} << c;
        idx -= detail::kBinom.c[c][i];
    }
    return KSubset{bits};
}

inline void check_same_space(const KSubset& a, const KSubset& b) {
    if (a.k() != b.k())
        throw std::invalid_argument("k-subsets have different cardinality");
}

// graph distance in J(v,k): k - |a & b|
inline int distance(const KSubset& a, const KSubset& b) {
    check_same_space(a, b);
    return a.k() - std::popcount(a.bits & b.bits);
}

// the k(v-k) subsets at distance one
inline std::vector<KSubset> neighbors(const KSubset& a, const GroundSet& g) {
    check_subset(a, g);
    const int k = a.k();
    if (k == g.v)
        throw std::invalid_argument("neighbors: k = v is degenerate");
    std::vector<KSubset> out;
    out.reserve(static_cast<std::size_t>(k) * (g.v - k));
    const std::uint64_t outside = g.full_mask() & ~a.bits;
    for (std::uint64_t rm = a.bits; rm; rm &= rm - 1) {
        const std::uint64_t without = a.bits ^ (rm & -rm);
        for (std::uint64_t ad = outside; ad; ad &= ad - 1)
            out.push_back(KSubset{without | (ad & -ad)});
    }
    return out;
}

inline KSubset complement(const KSubset& s, const GroundSet& g) {
    check_subset(s, g);
    return KSubset{g.full_mask() & ~s.bits};
}

inline std::string to_string(const KSubset& s) {
    std::string out = "{";
    bool first = true;
    for (int p : s.points()) {
        if (!first)
            out += ' ';
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

} // namespace ctd
