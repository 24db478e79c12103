#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ctdesign/constructions.hpp"
#include "ctdesign/group.hpp"
#include "ctdesign/io.hpp"
#include "ctdesign/orbits.hpp"

using namespace ctd;

TEST_CASE("apply") {
    const Permutation id(5);
    const KSubset s = KSubset::of_points({0, 2, 4});
    CHECK(apply(id, s) == s);

    const Permutation g = parse_cycles("(0 1)", 3);
    CHECK(apply(g, KSubset::of_points({0, 2})) == KSubset::of_points({1, 2}));

    // inverse round-trip on random pairs at v = 13
    std::mt19937_64 rng(7);
    const GroundSet gs(13);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::uint8_t> im(13);
        std::iota(im.begin(), im.end(), 0);
        std::shuffle(im.begin(), im.end(), rng);
        const Permutation p(std::move(im));
        const KSubset x = unrank(rng() % binom(13, 4), gs, 4);
        CHECK(apply(p.inverse(), apply(p, x)) == x);
    }
}

TEST_CASE("cycle notation") {
    const Permutation g = parse_cycles("(0 1 2)(3 4)", 6);
    CHECK(g(0) == 1);
    CHECK(g(2) == 0);
    CHECK(g(3) == 4);
    CHECK(g(5) == 5);
    CHECK(format_cycles(g) == "(0 1 2)(3 4)");
    CHECK(parse_cycles("()", 4).is_identity());
    CHECK(format_cycles(Permutation(4)) == "()");
    CHECK_THROWS_AS(parse_cycles("(0 1", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(0 0)", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(0 9)", 4), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint8_t> im(17);
        std::iota(im.begin(), im.end(), 0);
        std::shuffle(im.begin(), im.end(), rng);
        const Permutation p(std::move(im));
        CHECK(parse_cycles(format_cycles(p), 17) == p);
    }
}

TEST_CASE("group order") {
    CHECK(sym_group(4).order() == 24);
    CHECK(sym_group(1).order() == 1);
    CHECK(sym_group(8).order() == 40320);

    const PermGroup m11 = bundled_group("m11");
    CHECK(m11.order() == 7920);          // sharply 4-transitive: 11*10*9*8
    CHECK(m11.order() == 11 * 10 * 9 * 8);

    // order is invariant under adding redundant generators
    auto gens = m11.generators();
    gens.push_back(gens[0] * gens[1]);
    gens.push_back(gens[1] * gens[0] * gens[1]);
    CHECK(PermGroup(11, gens).order() == 7920);

    // membership of every generator
    for (const auto& g : m11.generators())
        CHECK(m11.contains(g));
    CHECK_FALSE(m11.contains(parse_cycles("(0 1)", 11)));
}

TEST_CASE("bundled groups load, orders asserted") {
    CHECK(bundled_group("m12").order() == 95040);
    CHECK(bundled_group("m11_deg12").order() == 7920);
    CHECK(bundled_group("psl2_11").order() == 660);
    CHECK(bundled_group("m23").order() == 10200960);
    CHECK(bundled_group("m24").order() == 244823040);
}

TEST_CASE("pgl(3,q) orders from elementary-matrix generators") {
    auto order_formula = [](long long q) { // |PGL(3,q)| = q^3 (q^3-1)(q^2-1)
        return q * q * q * (q * q * q - 1) * (q * q - 1);
    };
    CHECK(pg_lines(2).pgl.order() == 168);
    CHECK(pg_lines(2).pgl.order() == order_formula(2));
    CHECK(pg_lines(3).pgl.order() == order_formula(3)); // 5616
    CHECK(pg_lines(4).pgl.order() == order_formula(4)); // 60480
    CHECK(pg_lines(5).pgl.order() == order_formula(5)); // 372000
}

TEST_CASE("orbits on k-subsets") {
    SECTION("symmetric group is k-homogeneous") {
        const auto part = orbits_on_ksubsets(sym_group(5), 2);
        REQUIRE(part.count() == 1);
        CHECK(part.sizes[0] == 10);
        const auto part7 = orbits_on_ksubsets(sym_group(7), 3);
        REQUIRE(part7.count() == 1);
        CHECK(part7.sizes[0] == 35);
    }
    SECTION("M24 on 8-subsets: three orbits") {
        const auto part = orbits_on_ksubsets(bundled_group("m24"), 8);
        REQUIRE(part.count() == 3);
        std::multiset<std::uint64_t> sizes(part.sizes.begin(), part.sizes.end());
        CHECK(sizes == std::multiset<std::uint64_t>{759, 97152, 637560});
    }
    SECTION("M23 on 7-subsets: four orbits") {
        const auto part = orbits_on_ksubsets(bundled_group("m23"), 7);
        REQUIRE(part.count() == 4);
        std::multiset<std::uint64_t> sizes(part.sizes.begin(), part.sizes.end());
        CHECK(sizes == std::multiset<std::uint64_t>{253, 4048, 28336, 212520});
    }
    SECTION("cells are generator-closed, sizes divide the order, total is C(v,k)") {
        const PermGroup G = bundled_group("psl2_11");
        const auto part = orbits_on_ksubsets(G, 5);
        const GroundSet g(11);
        std::uint64_t total = 0;
        for (auto s : part.sizes) {
            total += s;
            CHECK(660 % s == 0);
        }
        CHECK(total == binom(11, 5));
        for (SubsetRank r = 0; r < total; ++r) {
            const KSubset s = unrank(r, g, 5);
            for (const auto& gen : G.generators())
                CHECK(part.orbit_of[rank(apply(gen, s), g)] == part.orbit_of[r]);
        }
    }
    SECTION("memory cap refusal") {
        CHECK_THROWS_AS(orbits_on_ksubsets(sym_group(40), 20, 1000), MemoryCapError);
    }
}

TEST_CASE("classify action") {
    SECTION("young subgroup is intransitive with the right orbits") {
        const auto c = classify_action(young_group(7, 3));
        REQUIRE(c.kind == ActionKind::intransitive);
        REQUIRE(c.witness.size() == 2);
        CHECK(c.witness[0] == std::vector<int>{0, 1, 2});
        CHECK(c.witness[1] == std::vector<int>{3, 4, 5, 6});
    }
    SECTION("S2 wr S3 is imprimitive with blocks of size 2") {
        const auto c = classify_action(wreath_group(2, 3));
        REQUIRE(c.kind == ActionKind::transitive_imprimitive);
        REQUIRE(c.witness.size() == 3);
        for (const auto& blk : c.witness)
            CHECK(blk.size() == 2);
    }
    SECTION("PSL(2,11) on 11 points is 2-transitive") {
        const auto c = classify_action(bundled_group("psl2_11"));
        CHECK(c.kind == ActionKind::two_transitive);
    }
    SECTION("2-transitive iff one orbit on ordered distinct pairs") {
        for (const auto* stem : {"psl2_11", "m11", "m12"}) {
            const PermGroup G = bundled_group(stem);
            CHECK(G.orbits_on_ordered_pairs() == 1);
            CHECK(classify_action(G).kind == ActionKind::two_transitive);
        }
        const PermGroup w = wreath_group(3, 2);
        CHECK(w.orbits_on_ordered_pairs() > 1);
    }
    SECTION("cyclic group of prime degree: primitive but not 2-transitive") {
        const auto c = classify_action(PermGroup(5, {parse_cycles("(0 1 2 3 4)", 5)}));
        REQUIRE(c.kind == ActionKind::primitive_not_2transitive);
        CHECK(c.pair_orbit_count == 4);
    }
}

TEST_CASE("flag orbit check") {
    SECTION("full symmetric group on a single block") {
        const Design d(6, 3, {KSubset::of_points({0, 1, 2})});
        const auto res = flag_orbit_check(sym_group(6), d, d.blocks[0]);
        CHECK(res.transitive);
        CHECK(res.restricted_size == 9);
    }
    SECTION("biplane block under PSL(2,11): restricted orbit is 5*6") {
        const Design d = biplane11();
        const auto res = flag_orbit_check(bundled_group("psl2_11"), d, d.blocks[0]);
        CHECK(res.transitive);
        CHECK(res.restricted_size == 30);
    }
    SECTION("block must belong to the design") {
        const Design d = biplane11();
        CHECK_THROWS_AS(flag_orbit_check(bundled_group("psl2_11"), d,
                                         KSubset::of_points({0, 1, 2, 3, 4})),
                        std::invalid_argument);
    }
}
