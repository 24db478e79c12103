#pragma once

// The acceptance suite: every reproduction criterion as a checkable unit,
// shared by the `verify` CLI command and the acceptance test binary.

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "ctdesign/analysis.hpp"
#include "ctdesign/audit.hpp"
#include "ctdesign/constructions.hpp"
#include "ctdesign/screening.hpp"

namespace ctd {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget = 0.0;
    std::string detail; // failures, plus reported ground-truth notes
};

namespace detail_verify {

struct Checker {
    bool ok = true;
    std::string notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes += (notes.empty() ? "" : "; ") + std::string("FAIL: ") + what;
        }
    }
    void note(const std::string& what) {
        notes += (notes.empty() ? "" : "; ") + what;
    }
};

} // namespace detail_verify

// the designs and groups every property suite runs over
struct BundledExample {
    std::string name;
    Design design;
    std::shared_ptr<const PermGroup> group; // null: no canonical bundled group
};

inline std::vector<BundledExample> bundled_examples(const std::string& data_dir = default_data_dir()) {
    std::vector<BundledExample> out;
    auto add = [&](std::string name, Design d, std::optional<PermGroup> g) {
        out.push_back({std::move(name), std::move(d),
                       g ? std::make_shared<const PermGroup>(std::move(*g)) : nullptr});
    };
    {
        auto fano = pg_lines(2);
        add("fano", fano.lines, fano.pgl);
        auto pg3 = pg_lines(3);
        add("pg2(3)", pg3.lines, pg3.pgl);
    }
    add("ag2(4)", ag_lines(4), std::nullopt);
    add("biplane11", biplane11(), bundled_group("psl2_11", data_dir));
    add("example1(8,3,|Y|=2)", example1(8, 3, KSubset::of_points({0, 1})), young_group(8, 2));
    add("example1(9,3,|Y|=5)", example1(9, 3, KSubset::of_points({0, 1, 2, 3, 4})),
        young_group(9, 5));
    add("example2(4,2)", example2(4, 2), wreath_group(4, 2));
    add("two-disjoint-4-sets", example2(4, 4), wreath_group(4, 2));
    add("example3(4,2)", example3(4, 2), wreath_group(2, 4));
    add("example3(4,4)", example3(4, 4), wreath_group(2, 4));
    add("example4(3,3)", example4(3, 3), wreath_group(3, 3));
    add("example5(3,3)", example5(3, 3), wreath_group(3, 3));
    {
        std::vector<KSubset> triples;
        for (int i = 0; i < 3; ++i)
            triples.push_back(KSubset::of_points({3 * i, 3 * i + 1, 3 * i + 2}));
        add("disjoint-triples(9)", Design(9, 3, triples), wreath_group(3, 3));
    }
    add("witt12", witt(12, data_dir), bundled_group("m12", data_dir));
    {
        const PermGroup m11t = bundled_group("m11_deg12", data_dir);
        add("hadamard-3-(12,6,2)",
            Design(12, 6, block_orbit(m11t, KSubset::of_points({1, 3, 4, 5, 9, 11}))), m11t);
    }
    add("witt22", witt(22, data_dir), std::nullopt);
    add("witt23", witt(23, data_dir), bundled_group("m23", data_dir));
    add("witt24", witt(24, data_dir), bundled_group("m24", data_dir));
    add("inversive4", inversive_plane4(), pgammal2(16));
    return out;
}

inline std::vector<CriterionResult> run_acceptance(const std::string& data_dir = default_data_dir(),
                                                   std::uint64_t max_ranks = kDefaultMaxRanks) {
    using detail_verify::Checker;
    std::vector<CriterionResult> results;

    auto run = [&](int id, const std::string& name, double budget,
                   const std::function<void(Checker&)>& body) {
        CriterionResult res;
        res.id = id;
        res.name = name;
        res.budget = budget;
        Checker c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (res.seconds > budget)
            c.require(false, "runtime " + std::to_string(res.seconds) + "s exceeds budget");
        res.pass = c.ok;
        res.detail = c.notes;
        results.push_back(res);
    };

    run(1, "Fano plane in J(7,3)", 1.0, [&](Checker& c) {
        const auto fano = pg_lines(2);
        const auto rep = analyze(fano.lines, &fano.pgl, max_ranks);
        c.require(rep.covering_radius == 1, "r == 1");
        c.require(rep.completely_regular.equitable, "completely regular");
        c.require(rep.group->transitivity.completely_transitive,
                  "completely transitive under PGL(3,2)");
    });

    run(2, "PG2(3) lines in J(13,4)", 1.0, [&](Checker& c) {
        const auto pg3 = pg_lines(3);
        const auto rep = analyze(pg3.lines, &pg3.pgl, max_ranks);
        c.require(rep.delta == 3, "delta == 3");
        c.require(rep.covering_radius == 2, "r == 2");
        c.require(rep.group->transitivity.completely_transitive,
                  "completely transitive under PGL(3,3)");
    });

    run(3, "Witt design on 24 points in J(24,8)", 60.0, [&](Checker& c) {
        const Design w24 = witt(24, data_dir);
        c.require(w24.blocks.size() == 759, "759 blocks");
        c.require(strength(w24) == 5, "strength 5");
        const PermGroup m24 = bundled_group("m24", data_dir);
        const auto rep = analyze(w24, &m24, max_ranks);
        c.require(rep.covering_radius == 2, "r == 2");
        c.require(rep.completely_regular.equitable, "completely regular");
        c.require(rep.group->transitivity.census.size() == 3, "M24 has 3 orbits on 8-subsets");
        c.require(rep.group->transitivity.completely_transitive, "completely transitive");
        c.require(rep.cell_sizes == std::vector<std::uint64_t>{759, 97152, 637560},
                  "cells 759/97152/637560");
    });

    run(4, "Witt design on 23 points in J(23,7)", 60.0, [&](Checker& c) {
        const Design w23 = witt(23, data_dir);
        const PermGroup m23 = bundled_group("m23", data_dir);
        const auto rep = analyze(w23, &m23, max_ranks);
        c.require(rep.covering_radius == 3, "r == 3");
        c.require(rep.completely_regular.equitable, "completely regular");
        c.require(rep.group->transitivity.census.size() == 4, "M23 has 4 orbits on 7-subsets");
        c.require(rep.group->transitivity.completely_transitive, "completely transitive");
        c.require(rep.cell_sizes == std::vector<std::uint64_t>{253, 28336, 212520, 4048},
                  "cells 253/28336/212520/4048");
    });

    run(5, "Witt design on 22 points is not completely regular", 30.0, [&](Checker& c) {
        const auto verdict = is_completely_regular(witt(22, data_dir), max_ranks);
        c.require(!verdict.equitable, "not completely regular");
        c.require(verdict.witness.has_value(), "witness produced");
        if (verdict.witness) {
            const auto& w = *verdict.witness;
            c.note("witness: vertex " + to_string(w.vertex) + " in cell " +
                   std::to_string(w.i) + " has " + std::to_string(w.count_found) +
                   " neighbors in cell " + std::to_string(w.j) + ", expected " +
                   std::to_string(w.count_expected));
        }
    });

    run(6, "2-(11,5,2) biplane under PSL(2,11)", 5.0, [&](Checker& c) {
        const Design d = biplane11();
        const PermGroup psl = bundled_group("psl2_11", data_dir);
        const auto rep = analyze(d, &psl, max_ranks);
        c.require(rep.delta == 3, "delta == 3");
        c.require(rep.covering_radius == 2, "r == 2");
        c.require(rep.group->transitivity.census.size() == 4, "4 orbits on 5-subsets");
        c.require(!rep.group->transitivity.completely_transitive, "not completely transitive");
        std::multiset<std::uint64_t> sizes, stabs;
        for (const auto& row : rep.group->transitivity.census)
            if (row.distance > 0) {
                sizes.insert(row.size);
                stabs.insert(660 / row.size);
            }
        c.require(sizes == std::multiset<std::uint64_t>{330, 66, 55},
                  "census {330,66,55}");
        c.require(stabs == std::multiset<std::uint64_t>{2, 12, 10},
                  "stabilizer orders {2,12,10}");
    });

    run(7, "M11 on 12 points, 6-subsets", 5.0, [&](Checker& c) {
        const PermGroup m11t = bundled_group("m11_deg12", data_dir);
        const auto part = orbits_on_ksubsets(m11t, 6, max_ranks);
        auto sizes = part.sizes;
        std::sort(sizes.begin(), sizes.end());
        // ground truth: 3 orbits; the printed 4-orbit census {22,110,132,660}
        // is audited and reported as a mismatch
        c.require(sizes == std::vector<std::uint64_t>{22, 110, 792},
                  "computed orbit sizes {22,110,792}");
        c.note(sizes == std::vector<std::uint64_t>{22, 110, 132, 660}
                   ? "printed census {22,110,132,660} reproduced"
                   : "printed census {22,110,132,660} MISMATCH: ground truth is "
                     "3 orbits {22,110,792} (the non-hexads form one orbit)");

        const Design d22(12, 6, block_orbit(m11t, KSubset::of_points({1, 3, 4, 5, 9, 11})));
        c.require(d22.blocks.size() == 22, "22-block orbit");
        c.require(is_steiner_coverage(d22, 3, 2), "3-(12,6,2) design");
        c.require(min_distance(d22) == 3, "delta == 3");
        const auto rep = analyze(d22, &m11t, max_ranks);
        c.require(rep.covering_radius <= 2, "covering radius <= 2");
        // ground-truth verdicts where the draft is ambiguous
        c.require(rep.completely_regular.equitable, "ground truth: completely regular");
        c.require(rep.group->transitivity.completely_transitive,
                  "ground truth: completely transitive");
        c.note("ground truth: r=2, cells {22,792,110}, completely regular and "
               "completely transitive under the transitive M11");
    });

    run(8, "inversive plane of order 4 in J(17,5)", 5.0, [&](Checker& c) {
        const Design ip = inversive_plane4();
        c.require(ip.blocks.size() == 68, "68 circles");
        c.require(is_steiner_coverage(ip, 3, 1), "every triple on exactly one circle");
        const auto part = distance_partition(ip, max_ranks);
        c.require(part.r == 2, "r == 2");
        c.require(part.cell_size(2) == 2040, "|C2| == 2040");
        c.note(part.cell_size(2) == 8228
                   ? "printed |C2| = 2^2*11^2*17 reproduced"
                   : "printed |C2| = 2^2*11^2*17 = 8228 MISMATCH: recomputed "
                     "C(17,5)-68-4080 = 2040");
    });

    run(9, "AG(2,4) lines in J(16,4)", 5.0, [&](Checker& c) {
        const auto part = distance_partition(ag_lines(4), max_ranks);
        c.require(part.cell_size(2) == 840, "|C2| == 840 == 2^3*3*5*7");
    });

    run(10, "arithmetic screening reproduction", 1.0, [&](Checker& c) {
        for (const auto& r : screen_suzuki())
            c.require(r.verdict == "eliminated", "suzuki " + r.params + " eliminated");
        for (const auto& r : screen_u3())
            c.require(r.verdict == "eliminated", "u3 " + r.params + " eliminated");
        for (const auto& r : screen_ree())
            c.require(r.verdict == "eliminated", "ree " + r.params + " eliminated");
        c.require(l2_coarse_survivors() ==
                      std::vector<long long>{13, 16, 17, 19, 23, 25, 27, 32},
                  "L2 survivor set {13,16,17,19,23,25,27,32}");
        c.require(l2_deep_candidates() ==
                      std::vector<std::pair<long long, long long>>{{16, 5}, {17, 6}},
                  "L2 deep candidates (16,5),(17,6)");
        c.require(projective_coarse_list() ==
                      std::vector<std::pair<int, long long>>{{3, 2},
                                                             {3, 3},
                                                             {3, 4},
                                                             {3, 5},
                                                             {3, 7},
                                                             {3, 8},
                                                             {3, 9},
                                                             {4, 2},
                                                             {4, 3},
                                                             {5, 2},
                                                             {6, 2},
                                                             {7, 2}},
                  "projective coarse list d=3,q<=9; d=4,q<=3; 5<=d<=7,q=2");
        c.require(projective_refined_list() ==
                      std::vector<std::pair<int, long long>>{
                          {3, 2}, {3, 3}, {3, 4}, {3, 5}, {4, 2}},
                  "projective refined list d=3,q<=5; d=4,q=2");
        c.require(affine_list() == std::vector<std::pair<int, long long>>{{2, 2},
                                                                          {2, 3},
                                                                          {2, 4},
                                                                          {2, 5},
                                                                          {2, 7},
                                                                          {2, 8},
                                                                          {3, 2},
                                                                          {3, 3},
                                                                          {4, 2},
                                                                          {5, 2},
                                                                          {6, 2}},
                  "affine list d=2,q<=8; d=3,q<=3; 4<=d<=6");
        const auto mk = mathieu_k_ranges();
        c.require(mk.at(11) == std::vector<long long>{5}, "v=11: k=5");
        c.require(mk.at(12) == std::vector<long long>{6}, "v=12: k=6");
        c.require(mk.at(22) == std::vector<long long>{6, 7, 8, 10}, "v=22: k in {6,7,8,10}");
        c.require(mk.at(23) == std::vector<long long>{5, 7, 8, 9, 11},
                  "v=23: k in {5,7,8,9,11}");
        c.require(mk.at(24) == std::vector<long long>{6, 8, 9, 10, 12},
                  "v=24: k in {6,8,9,10,12}");
        c.require(hs_k_list_published() == std::vector<long long>{8, 11, 16},
                  "HS k in {8,11,16}");
    });

    run(11, "property suites", 120.0, [&](Checker& c) {
        // distance formula == BFS distance, exhaustively on J(7,3) and J(8,4)
        for (auto [v, k] : {std::pair{7, 3}, std::pair{8, 4}}) {
            const GroundSet g(v);
            const std::uint64_t n = binom(v, k);
            std::vector<KSubset> verts;
            for (std::uint64_t i = 0; i < n; ++i)
                verts.push_back(unrank(i, g, k));
            bool all_ok = true;
            for (std::uint64_t s = 0; s < n; ++s) {
                // BFS from s over the adjacency defined by intersection size
                std::vector<int> dist(n, -1);
                std::queue<std::uint64_t> q;
                dist[s] = 0;
                q.push(s);
                while (!q.empty()) {
                    const std::uint64_t u = q.front();
                    q.pop();
                    for (std::uint64_t w = 0; w < n; ++w)
                        if (dist[w] < 0 &&
                            std::popcount(verts[u].bits & verts[w].bits) == k - 1) {
                            dist[w] = dist[u] + 1;
                            q.push(w);
                        }
                }
                for (std::uint64_t w = 0; w < n; ++w)
                    all_ok &= dist[w] == distance(verts[s], verts[w]);
            }
            c.require(all_ok, "BFS oracle agrees on J(" + std::to_string(v) + "," +
                                  std::to_string(k) + ")");
        }

        const auto examples = bundled_examples(data_dir);

        // opposite of completely regular is completely regular, both directions
        for (const auto& ex : examples) {
            const bool cr = is_completely_regular(ex.design, max_ranks).equitable;
            const Design opp = opposite(ex.design, max_ranks);
            const bool cr_opp = is_completely_regular(opp, max_ranks).equitable;
            c.require(cr == cr_opp, ex.name + ": CR(design) == CR(opposite)");
            c.require(strength(ex.design) == strength(opp),
                      ex.name + ": strength == strength(opposite)");
        }

        // completely transitive implies completely regular
        for (const auto& ex : examples)
            if (ex.group) {
                const auto ct = is_completely_transitive(ex.design, *ex.group, max_ranks);
                if (ct.completely_transitive)
                    c.require(is_completely_regular(ex.design, max_ranks).equitable,
                              ex.name + ": CT implies CR");
            }

        // cells of example 1 are the subsets meeting Y in m-i points
        for (auto [v, k, m] : {std::tuple{8, 3, 2}, std::tuple{9, 4, 3}, std::tuple{9, 3, 5}}) {
            std::uint64_t ybits = 0;
            for (int i = 0; i < m; ++i)
                ybits |= std::uint64_t{1} << i;
            const KSubset Y{ybits};
            const Design d = example1(v, k, Y);
            const auto part = distance_partition(d, max_ranks);
            const GroundSet g(v);
            const int full = std::min(k, m);
            bool ok = true;
            for (int i = 0; i <= part.r; ++i)
                for (const auto r : part.cells[i])
                    ok &= std::popcount(unrank(r, g, k).bits & Y.bits) == full - i;
            c.require(ok, "example1(v=" + std::to_string(v) + ",k=" + std::to_string(k) +
                              ",m=" + std::to_string(m) + ") cell structure");
        }

        // trichotomy and flag transitivity on every bundled completely
        // transitive design with at least two blocks and delta >= 3
        int trichotomy_checked = 0;
        for (const auto& ex : examples) {
            if (!ex.group || ex.design.blocks.size() < 2)
                continue;
            const auto delta = min_distance(ex.design);
            if (!delta || *delta < 3)
                continue;
            if (!is_completely_transitive(ex.design, *ex.group, max_ranks).completely_transitive)
                continue;
            try {
                const auto verdict = theorem_trichotomy(ex.design, *ex.group, max_ranks);
                c.require(verdict.flag_transitive, ex.name + ": flag transitivity");
                ++trichotomy_checked;
            } catch (const std::exception& e) {
                c.require(false, ex.name + ": trichotomy threw: " + e.what());
            }
        }
        c.require(trichotomy_checked >= 6, "trichotomy exercised on the bundled designs");
    });

    return results;
}

} // namespace ctd
