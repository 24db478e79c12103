#pragma once

// Constructions: the partition-based families, finite-geometry designs,
// Witt/Steiner designs via the Golay code, the 11-point biplane, the order-4
// inversive plane, and the group builders that go with them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "ctdesign/analysis.hpp"
#include "ctdesign/design.hpp"
#include "ctdesign/gf.hpp"
#include "ctdesign/group.hpp"
#include "ctdesign/io.hpp"

namespace ctd {

// ---- subset enumeration helpers -----------------------------------------------

inline std::vector<KSubset> all_ksubsets(int v, int k) {
    const GroundSet g(v);
    const std::uint64_t n = binom(v, k);
    std::vector<KSubset> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i)
        out.push_back(unrank(i, g, k));
    return out;
}

// k-subsets of an arbitrary point set
inline std::vector<KSubset> ksubsets_of(const KSubset& universe, int k) {
    const auto pts = universe.points();
    const int m = static_cast<int>(pts.size());
    if (k > m)
        return {};
    std::vector<KSubset> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        std::uint64_t bits = 0;
        for (int i : idx)
            bits |= std::uint64_t{1} << pts[i];
        out.push_back(KSubset{bits});
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// ---- group builders --------------------------------------------------------------

inline PermGroup sym_group(int v) {
    std::vector<Permutation> gens;
    if (v == 1) {
        gens.emplace_back(1);
    } else {
        Permutation t(v);
        std::swap(t.images[0], t.images[1]);
        gens.push_back(t);
        if (v > 2) {
            Permutation c(v);
            for (int i = 0; i < v; ++i)
                c.images[i] = static_cast<std::uint8_t>((i + 1) % v);
            gens.push_back(c);
        }
    }
    return PermGroup(v, std::move(gens));
}

// Sym(Y) x Sym(X \ Y) for Y = {0..m-1}
inline PermGroup young_group(int v, int m) {
    if (m < 0 || m > v)
        throw std::invalid_argument("young_group: bad m");
    std::vector<Permutation> gens;
    auto add_sym = [&](int lo, int hi) { // on points [lo, hi)
        if (hi - lo < 2)
            return;
        Permutation t(v);
        std::swap(t.images[lo], t.images[lo + 1]);
        gens.push_back(t);
        if (hi - lo > 2) {
            Permutation c(v);
            for (int i = lo; i < hi; ++i)
                c.images[i] = static_cast<std::uint8_t>(lo + (i - lo + 1) % (hi - lo));
            gens.push_back(c);
        }
    };
    add_sym(0, m);
    add_sym(m, v);
    if (gens.empty())
        gens.emplace_back(v);
    return PermGroup(v, std::move(gens));
}

// S_a wr S_b in the imprimitive action on ab points, cells {ia..ia+a-1}
inline PermGroup wreath_group(int a, int b) {
    const int v = a * b;
    std::vector<Permutation> gens;
    if (a >= 2) {
        Permutation t(v);
        std::swap(t.images[0], t.images[1]);
        gens.push_back(t);
        if (a > 2) {
            Permutation c(v);
            for (int j = 0; j < a; ++j)
                c.images[j] = static_cast<std::uint8_t>((j + 1) % a);
            gens.push_back(c);
        }
    }
    if (b >= 2) {
        Permutation swap01(v); // cell 0 <-> cell 1
        for (int j = 0; j < a; ++j) {
            swap01.images[j] = static_cast<std::uint8_t>(a + j);
            swap01.images[a + j] = static_cast<std::uint8_t>(j);
        }
        gens.push_back(swap01);
        if (b > 2) {
            Permutation cyc(v); // cell i -> cell i+1
            for (int i = 0; i < b; ++i)
                for (int j = 0; j < a; ++j)
                    cyc.images[i * a + j] = static_cast<std::uint8_t>(((i + 1) % b) * a + j);
            gens.push_back(cyc);
        }
    }
    if (gens.empty())
        gens.emplace_back(v);
    return PermGroup(v, std::move(gens));
}

// ---- partition examples ------------------------------------------------------------

// k-subsets whose intersection with Y is maximal: all k-sets containing Y when
// k >= |Y|, else all k-subsets of Y
inline Design example1(int v, int k, const KSubset& Y) {
    const GroundSet g(v);
    check_subset(Y, g);
    const int m = Y.k();
    if (m == 0 || m == v)
        throw std::invalid_argument("example1: Y must be a nonempty proper subset");
    std::vector<KSubset> blocks;
    if (k >= m) {
        for (const auto& t : ksubsets_of(complement(Y, g), k - m))
            blocks.push_back(KSubset{Y.bits | t.bits});
    } else {
        blocks = ksubsets_of(Y, k);
    }
    return Design(v, k, std::move(blocks));
}

// all k-subsets of Y1 or Y2, |Yi| = a, v = 2a
inline Design example2(int a, int k) {
    if (k > a)
        throw std::invalid_argument("example2: needs k <= a");
    const auto part = contiguous_partition(a, 2);
    std::vector<KSubset> blocks;
    for (const auto& cell : part.cells)
        for (const auto& s : ksubsets_of(cell, k))
            blocks.push_back(s);
    return Design(2 * a, k, std::move(blocks));
}

// partial transversals: k-sets meeting each 2-cell at most once, v = 2b
inline Design example3(int b, int k) {
    if (k > b)
        throw std::invalid_argument("example3: needs k <= b");
    std::vector<KSubset> blocks;
    for (const auto& cells : ksubsets_of(KSubset{(std::uint64_t{1} << b) - 1}, k)) {
        const auto cs = cells.points();
        for (std::uint32_t m = 0; m < (1u << k); ++m) {
            std::uint64_t bits = 0;
            for (int i = 0; i < k; ++i)
                bits |= std::uint64_t{1} << (2 * cs[i] + ((m >> i) & 1));
            blocks.push_back(KSubset{bits});
        }
    }
    return Design(2 * b, k, std::move(blocks));
}

// triples meeting each a-cell in at most one point (k = 3, a,b >= 3)
inline Design example4(int a, int b) {
    if (a < 3 || b < 3)
        throw std::invalid_argument("example4: needs a,b >= 3");
    std::vector<KSubset> blocks;
    for (int c1 = 0; c1 < b; ++c1)
        for (int c2 = c1 + 1; c2 < b; ++c2)
            for (int c3 = c2 + 1; c3 < b; ++c3)
                for (int i = 0; i < a; ++i)
                    for (int j = 0; j < a; ++j)
                        for (int l = 0; l < a; ++l)
                            blocks.push_back(KSubset::of_points(
                                {c1 * a + i, c2 * a + j, c3 * a + l}));
    return Design(a * b, 3, std::move(blocks));
}

// pairs meeting each a-cell in at most one point (k = 2)
inline Design example5(int a, int b) {
    if (b < 2)
        throw std::invalid_argument("example5: needs b >= 2");
    std::vector<KSubset> blocks;
    for (int c1 = 0; c1 < b; ++c1)
        for (int c2 = c1 + 1; c2 < b; ++c2)
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < a; ++j)
                    blocks.push_back(KSubset::of_points({c1 * a + i, c2 * a + j}));
    return Design(a * b, 2, std::move(blocks));
}

// ---- projective / affine planes ------------------------------------------------------

namespace detail_geom {

// normalized points of PG(2,q) in lex order of (x0,x1,x2)
inline std::vector<std::array<int, 3>> pg2_points(const FiniteField& F) {
    std::vector<std::array<int, 3>> pts;
    for (int x0 = 0; x0 < F.q(); ++x0)
        for (int x1 = 0; x1 < F.q(); ++x1)
            for (int x2 = 0; x2 < F.q(); ++x2) {
                if (x0 == 0 && x1 == 0 && x2 == 0)
                    continue;
                const int lead = x0 != 0 ? x0 : (x1 != 0 ? x1 : x2);
                if (lead != 1)
                    continue;
                pts.push_back({x0, x1, x2});
            }
    return pts;
}

inline std::array<int, 3> normalize(const FiniteField& F, std::array<int, 3> x) {
    const int lead = x[0] != 0 ? x[0] : (x[1] != 0 ? x[1] : x[2]);
    const int li = F.inv(lead);
    for (int& c : x)
        c = F.mul(c, li);
    return x;
}

} // namespace detail_geom

struct ProjectivePlane {
    Design lines;
    PermGroup pgl; // PGL(3,q) from elementary matrices
};

inline ProjectivePlane pg_lines(int q) {
    static const std::set<int> supported{2, 3, 4, 5, 7, 8, 9};
    if (!supported.count(q))
        throw std::invalid_argument("pg_lines: q must be one of 2,3,4,5,7,8,9");
    const auto& F = FiniteField::get(q);
    const auto pts = detail_geom::pg2_points(F);
    const int v = static_cast<int>(pts.size()); // q^2+q+1

    std::map<std::array<int, 3>, int> index;
    for (int i = 0; i < v; ++i)
        index[pts[i]] = i;

    std::vector<KSubset> lines;
    for (const auto& l : pts) { // dual vectors run over the same normalized triples
        std::uint64_t bits = 0;
        for (int i = 0; i < v; ++i) {
            int s = 0;
            for (int c = 0; c < 3; ++c)
                s = F.add(s, F.mul(l[c], pts[i][c]));
            if (s == 0)
                bits |= std::uint64_t{1} << i;
        }
        lines.push_back(KSubset{bits});
    }

    // GL(3,q) generators: transvections I + w^e E_{ij} plus diag(w,1,1)
    std::vector<std::array<std::array<int, 3>, 3>> mats;
    const int w = F.primitive();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j)
                continue;
            int we = 1;
            for (int e = 0; e < F.a(); ++e) {
                std::array<std::array<int, 3>, 3> m{};
                for (int d = 0; d < 3; ++d)
                    m[d][d] = 1;
                m[i][j] = we;
                mats.push_back(m);
                we = F.mul(we, w);
            }
        }
    {
        std::array<std::array<int, 3>, 3> m{};
        m[0][0] = w;
        m[1][1] = 1;
        m[2][2] = 1;
        mats.push_back(m);
    }

    std::vector<Permutation> gens;
    for (const auto& m : mats) {
        Permutation g(v);
        for (int i = 0; i < v; ++i) {
            std::array<int, 3> y{};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    y[r] = F.add(y[r], F.mul(m[r][c], pts[i][c]));
            g.images[i] = static_cast<std::uint8_t>(index.at(detail_geom::normalize(F, y)));
        }
        gens.push_back(g);
    }

    return {Design(v, q + 1, std::move(lines)), PermGroup(v, std::move(gens))};
}

// lines of AG(2,q); point (x,y) has index q*x + y in field-table order
inline Design ag_lines(int q) {
    const auto& F = FiniteField::get(q);
    std::vector<KSubset> lines;
    for (int m = 0; m < q; ++m)
        for (int c = 0; c < q; ++c) {
            std::uint64_t bits = 0;
            for (int x = 0; x < q; ++x)
                bits |= std::uint64_t{1} << (q * x + F.add(F.mul(m, x), c));
            lines.push_back(KSubset{bits});
        }
    for (int c = 0; c < q; ++c) { // vertical lines x = c
        std::uint64_t bits = 0;
        for (int y = 0; y < q; ++y)
            bits |= std::uint64_t{1} << (q * c + y);
        lines.push_back(KSubset{bits});
    }
    return Design(q * q, q, std::move(lines));
}

// the 2-(11,5,2) biplane: translates of the quadratic residues mod 11
inline Design biplane11() {
    const int residues[] = {1, 3, 4, 5, 9};
    std::vector<KSubset> blocks;
    for (int i = 0; i < 11; ++i) {
        std::uint64_t bits = 0;
        for (int r : residues)
            bits |= std::uint64_t{1} << ((r + i) % 11);
        blocks.push_back(KSubset{bits});
    }
    return Design(11, 5, std::move(blocks));
}

// ---- Golay code and the Witt designs ---------------------------------------------

struct GolayCode {
    std::vector<std::uint32_t> basis; // 12 rows, 24-bit masks

    explicit GolayCode(std::vector<std::uint32_t> rows) : basis(std::move(rows)) {
        if (basis.size() != 12)
            throw std::invalid_argument("GolayCode: need 12 basis rows");
        // independence via row reduction
        std::vector<std::uint32_t> rr;
        for (std::uint32_t r : basis) {
            for (std::uint32_t b : rr)
                r = std::min(r, r ^ b);
            if (!r)
                throw std::invalid_argument("GolayCode: basis rows dependent");
            rr.push_back(r);
            std::sort(rr.rbegin(), rr.rend());
        }
        // weight distribution must be 0^1 8^759 12^2576 16^759 24^1
        std::array<int, 25> wd{};
        for (std::uint32_t m = 0; m < 4096; ++m) {
            std::uint32_t word = 0;
            for (int i = 0; i < 12; ++i)
                if ((m >> i) & 1)
                    word ^= basis[i];
            ++wd[std::popcount(word)];
        }
        const std::array<std::pair<int, int>, 5> want{
            {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}}};
        for (int w = 0; w <= 24; ++w) {
            int expect = 0;
            for (auto [ww, c] : want)
                if (ww == w)
                    expect = c;
            if (wd[w] != expect)
                throw std::invalid_argument("GolayCode: wrong weight distribution");
        }
    }

    static GolayCode bundled(const std::string& data_dir = default_data_dir()) {
        return GolayCode(load_golay_basis(data_dir));
    }

    std::vector<KSubset> octads() const {
        std::vector<KSubset> out;
        out.reserve(759);
        for (std::uint32_t m = 0; m < 4096; ++m) {
            std::uint32_t word = 0;
            for (int i = 0; i < 12; ++i)
                if ((m >> i) & 1)
                    word ^= basis[i];
            if (std::popcount(word) == 8)
                out.push_back(KSubset{word});
        }
        return out;
    }
};

// orbit of a base block under a group, as a block list
inline std::vector<KSubset> block_orbit(const PermGroup& G, const KSubset& base) {
    std::set<std::uint64_t> seen{base.bits};
    std::vector<std::uint64_t> queue{base.bits};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (const auto& g : G.generators()) {
            const std::uint64_t img = apply(g, KSubset{queue[qi]}).bits;
            if (seen.insert(img).second)
                queue.push_back(img);
        }
    std::vector<KSubset> out;
    out.reserve(seen.size());
    for (std::uint64_t b : seen)
        out.push_back(KSubset{b});
    return out;
}

// is every t-subset of X covered by exactly lambda blocks?
inline bool is_steiner_coverage(const Design& d, int t, std::uint64_t lambda) {
    std::unordered_map<std::uint64_t, std::uint64_t> cov;
    for (const auto& b : d.blocks)
        for (const auto& s : ksubsets_of(b, t))
            ++cov[s.bits];
    if (cov.size() != binom(d.v, t))
        return false;
    for (const auto& [m, c] : cov)
        if (c != lambda)
            return false;
    return true;
}

// Witt designs: n = 24 from the Golay octads, n = 23/22 by successive point
// derivation at the top point, n = 12 as an M12 block orbit
inline Design witt(int n, const std::string& data_dir = default_data_dir()) {
    switch (n) {
    case 24:
        return Design(24, 8, GolayCode::bundled(data_dir).octads());
    case 23:
    case 22: {
        Design d = witt(n + 1, data_dir);
        std::vector<KSubset> derived;
        const std::uint64_t top = std::uint64_t{1} << n;
        for (const auto& b : d.blocks)
            if (b.bits & top)
                derived.push_back(KSubset{b.bits & ~top});
        return Design(n, d.k - 1, std::move(derived));
    }
    case 12: {
        const PermGroup m12 = bundled_group("m12", data_dir);
        const Design base = bundled_design("witt12_base", data_dir);
        Design d(12, 6, block_orbit(m12, base.blocks.front()));
        if (d.blocks.size() != 132 || !is_steiner_coverage(d, 5, 1))
            throw std::logic_error("witt(12): orbit is not a 5-(12,6,1) system");
        return d;
    }
    default:
        throw std::invalid_argument("witt: n must be one of 12, 22, 23, 24");
    }
}

// ---- inversive plane of order 4 -----------------------------------------------------

// Mobius group PGL(2,q) on PG(1,q); point 0 = infinity, point 1+e = field element e
inline PermGroup pgl2(int q) {
    const auto& F = FiniteField::get(q);
    const int v = q + 1;
    Permutation shift(v), scale(v), invert(v);
    for (int e = 0; e < q; ++e) {
        shift.images[1 + e] = static_cast<std::uint8_t>(1 + F.add(e, 1));
        scale.images[1 + e] = static_cast<std::uint8_t>(1 + F.mul(e, F.primitive()));
        invert.images[1 + e] = static_cast<std::uint8_t>(e == 0 ? 0 : 1 + F.inv(e));
    }
    invert.images[0] = 1; // oo -> 0
    return PermGroup(v, {shift, scale, invert});
}

// PGammaL(2,q): PGL(2,q) extended by the Frobenius z -> z^p
inline PermGroup pgammal2(int q) {
    const auto& F = FiniteField::get(q);
    auto gens = pgl2(q).generators();
    if (F.a() > 1) {
        Permutation frob(q + 1);
        for (int e = 0; e < q; ++e)
            frob.images[1 + e] = static_cast<std::uint8_t>(1 + F.pow(e, F.p()));
        gens.push_back(frob);
    }
    return PermGroup(q + 1, std::move(gens));
}

// circles of the Miquelian inversive plane of order 4, a 3-(17,5,1) design:
// orbit of the subline GF(4) u {oo} under PGL(2,16)
inline Design inversive_plane4() {
    const auto& F = FiniteField::get(16);
    const int g5 = F.pow(F.primitive(), 5);   // generates the GF(4) subfield
    const int g10 = F.mul(g5, g5);
    const KSubset base = KSubset::of_points({0, 1 + 0, 1 + 1, 1 + g5, 1 + g10});
    Design d(17, 5, block_orbit(pgl2(16), base));
    if (d.blocks.size() != 68 || !is_steiner_coverage(d, 3, 1))
        throw std::logic_error("inversive_plane4: orbit is not a 3-(17,5,1) system");
    return d;
}

} // namespace ctd
