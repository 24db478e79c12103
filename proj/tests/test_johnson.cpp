#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "ctdesign/ksubset.hpp"

using namespace ctd;

namespace {

// independent oracle: all k-subsets of {0..v-1} as sorted vectors, adjacency by
// set intersection, BFS over the explicit graph
std::vector<std::vector<int>> enumerate_subsets(int v, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < v; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> tmp;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(tmp));
    return (int)tmp.size();
}

std::vector<std::vector<int>> bfs_all_pairs(const std::vector<std::vector<int>>& verts, int k) {
    const int n = (int)verts.size();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (intersection_size(verts[i], verts[j]) == k - 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        dist[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u])
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][u] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

KSubset from_vec(const std::vector<int>& pts) {
    std::uint64_t bits = 0;
    for (int p : pts)
        bits |= std::uint64_t{1} << p;
    return KSubset{bits};
}

} // namespace

TEST_CASE("binomial table") {
    CHECK(binom(7, 3) == 35);
    CHECK(binom(24, 8) == 735471);
    CHECK(binom(64, 32) == 1832624140942590534ULL);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(5, 6) == 0);
    CHECK_THROWS_AS(binom(65, 1), std::invalid_argument);
    CHECK(binom_big(176, 19) == BigInt("13869983744176208910861600"));
}

TEST_CASE("rank: colex endpoints") {
    GroundSet g(7);
    CHECK(rank(KSubset::of_points({0, 1, 2}), g) == 0);
    CHECK(rank(KSubset::of_points({4, 5, 6}), g) == 34);
    CHECK(unrank(0, g, 3) == KSubset::of_points({0, 1, 2}));
    CHECK(unrank(34, g, 3) == KSubset::of_points({4, 5, 6}));
    CHECK_THROWS_AS(unrank(35, g, 3), std::invalid_argument);
    CHECK_THROWS_AS(rank(KSubset::of_points({7}), g), std::invalid_argument);
}

TEST_CASE("rank/unrank bijection, exhaustive") {
    // every (v,k) with C(v,k) <= 1e5
    for (int v = 1; v <= kMaxPoints; ++v) {
        GroundSet g(v);
        for (int k = 1; k <= v; ++k) {
            const std::uint64_t n = binom(v, k);
            if (n > 100000)
                continue;
            std::set<std::uint64_t> seen;
            for (std::uint64_t i = 0; i < n; ++i) {
                const KSubset s = unrank(i, g, k);
                REQUIRE(s.k() == k);
                REQUIRE(rank(s, g) == i);
                seen.insert(s.bits);
            }
            REQUIRE(seen.size() == n);
        }
    }
}

TEST_CASE("unrank v=13 k=4 all distinct") {
    GroundSet g(13);
    std::set<std::uint64_t> all;
    for (std::uint64_t i = 0; i < binom(13, 4); ++i)
        all.insert(unrank(i, g, 4).bits);
    CHECK(all.size() == 715);
}

TEST_CASE("distance basics") {
    CHECK(distance(KSubset::of_points({0, 1, 2}), KSubset::of_points({0, 1, 2})) == 0);
    CHECK(distance(KSubset::of_points({0, 1, 2}), KSubset::of_points({3, 4, 5})) == 3);
    CHECK(distance(KSubset::of_points({0, 1, 2}), KSubset::of_points({0, 1, 3})) == 1);
    CHECK_THROWS_AS(distance(KSubset::of_points({0, 1}), KSubset::of_points({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("distance equals BFS distance, exhaustively on small Johnson graphs") {
    for (auto [v, k] : {std::pair{7, 3}, std::pair{8, 4}, std::pair{9, 4}}) {
        const auto verts = enumerate_subsets(v, k);
        const auto dist = bfs_all_pairs(verts, k);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = 0; j < verts.size(); ++j) {
                const int formula = k - intersection_size(verts[i], verts[j]);
                REQUIRE(dist[i][j] == formula);
                REQUIRE(distance(from_vec(verts[i]), from_vec(verts[j])) == formula);
            }
    }
}

TEST_CASE("neighbors") {
    GroundSet g7(7);
    const KSubset a = KSubset::of_points({1, 3, 5});
    const auto nb = neighbors(a, g7);
    CHECK(nb.size() == 12); // k(v-k) = 3*4
    std::set<std::uint64_t> uniq;
    for (const auto& n : nb) {
        CHECK(distance(a, n) == 1);
        uniq.insert(n.bits);
    }
    CHECK(uniq.size() == nb.size());

    GroundSet g2(2);
    const auto nb2 = neighbors(KSubset::of_points({0}), g2);
    REQUIRE(nb2.size() == 1);
    CHECK(nb2[0] == KSubset::of_points({1}));

    CHECK_THROWS_AS(neighbors(KSubset::of_points({0, 1}), g2), std::invalid_argument);

    GroundSet g13(13);
    const KSubset b = KSubset::of_points({0, 2, 7, 12});
    for (const auto& n : neighbors(b, g13))
        CHECK(distance(b, n) == 1);
}

TEST_CASE("complement preserves distance") {
    GroundSet g(9);
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t n = binom(9, 4);
        const KSubset a = unrank(rng() % n, g, 4);
        const KSubset b = unrank(rng() % n, g, 4);
        CHECK(distance(complement(a, g), complement(b, g)) == distance(a, b));
    }
    CHECK(complement(complement(KSubset::of_points({0, 1, 2}), g), g) == KSubset::of_points({0, 1, 2}));
}
