#pragma once

// Permutation groups given by generators. Deterministic Schreier-Sims with
// base 0,1,2,... (all points), so orders and membership are reproducible.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctdesign/binom.hpp"
#include "ctdesign/perm.hpp"

namespace ctd {

namespace detail {

struct ChainLevel {
    int beta = 0;
    std::vector<Permutation> gens;                  // fix base points above this level
    std::vector<int> orbit;                         // discovery order, orbit[0] == beta
    std::vector<std::optional<Permutation>> trans;  // trans[p] maps beta -> p
};

struct StabChain {
    int degree = 0;
    std::vector<ChainLevel> levels;

    explicit StabChain(int deg) : degree(deg), levels(deg) {
        for (int i = 0; i < deg; ++i) {
            levels[i].beta = i;
            levels[i].trans.assign(deg, std::nullopt);
        }
    }

    void recompute_orbit(int i) {
        auto& L = levels[i];
        L.orbit.clear();
        std::fill(L.trans.begin(), L.trans.end(), std::nullopt);
        L.orbit.push_back(L.beta);
        L.trans[L.beta] = Permutation(degree);
        for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
            const int p = L.orbit[qi];
            for (const auto& s : L.gens) {
                const int q = s(p);
                if (!L.trans[q]) {
                    L.trans[q] = *L.trans[p] * s;
                    L.orbit.push_back(q);
                }
            }
        }
    }

    // strip g through levels starting at `from`; returns residue and the level
    // where it stuck (residue == identity means full sift)
    std::pair<Permutation, int> sift(Permutation g, int from = 0) const {
        for (int i = from; i < degree; ++i) {
            const int q = g(levels[i].beta);
            if (q == levels[i].beta)
                continue;
            if (!levels[i].trans[q])
                return {std::move(g), i};
            g = g * levels[i].trans[q]->inverse();
        }
        return {std::move(g), degree}; // residue fixes everything => identity
    }

    // one closure pass over a level; returns true if a residue was deposited
    // somewhere (each deposit enlarges the orbit at its sticking level on the
    // next recompute, so global iteration terminates)
    bool close_level(int i) {
        recompute_orbit(i);
        auto& L = levels[i];
        bool changed = false;
        for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
            const int p = L.orbit[qi];
            for (std::size_t si = 0; si < L.gens.size(); ++si) {
                const Permutation& s = L.gens[si];
                const Permutation schreier =
                    (*L.trans[p] * s) * L.trans[s(p)]->inverse();
                auto [h, j] = sift(schreier, i + 1);
                if (j < degree && !h.is_identity()) {
                    for (int l = i + 1; l <= j; ++l)
                        levels[l].gens.push_back(h);
                    changed = true;
                }
            }
        }
        return changed;
    }

    void build(const std::vector<Permutation>& input) {
        for (const auto& g : input) {
            if (g.is_identity())
                continue;
            int first_moved = 0;
            while (g(first_moved) == first_moved)
                ++first_moved;
            for (int l = 0; l <= first_moved; ++l)
                levels[l].gens.push_back(g);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = degree - 1; i >= 0; --i)
                changed |= close_level(i);
        }
    }

    BigInt order() const {
        BigInt o = 1;
        for (const auto& L : levels)
            o *= static_cast<unsigned>(L.orbit.size());
        return o;
    }

    bool contains(const Permutation& g) const {
        auto [h, j] = sift(g);
        return j == degree && h.is_identity();
    }
};

} // namespace detail

class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> gens)
        : degree_(degree), gens_(std::move(gens)) {
        if (degree < 1 || degree > kMaxPoints)
            throw std::invalid_argument("PermGroup: degree must be in 1..64");
        if (gens_.empty())
            throw std::invalid_argument("PermGroup: need at least one generator");
        for (const auto& g : gens_) {
            if (g.degree() != degree_)
                throw std::invalid_argument("PermGroup: generator degree mismatch");
            g.validate();
        }
    }

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    BigInt order() const { return chain().order(); }
    bool contains(const Permutation& g) const {
        if (g.degree() != degree_)
            return false;
        return chain().contains(g);
    }

    std::vector<std::vector<int>> point_orbits() const {
        std::vector<int> orb(degree_, -1);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < degree_; ++s) {
            if (orb[s] >= 0)
                continue;
            const int id = static_cast<int>(out.size());
            out.emplace_back();
            orb[s] = id;
            out[id].push_back(s);
            for (std::size_t qi = 0; qi < out[id].size(); ++qi)
                for (const auto& g : gens_) {
                    const int q = g(out[id][qi]);
                    if (orb[q] < 0) {
                        orb[q] = id;
                        out[id].push_back(q);
                    }
                }
        }
        return out;
    }

    bool is_transitive() const { return point_orbits().size() == 1; }

    // orbit count of the action on ordered pairs of distinct points
    int orbits_on_ordered_pairs() const {
        std::vector<int> orb(static_cast<std::size_t>(degree_) * degree_, -1);
        int count = 0;
        std::vector<int> queue;
        for (int a = 0; a < degree_; ++a)
            for (int b = 0; b < degree_; ++b) {
                if (a == b || orb[a * degree_ + b] >= 0)
                    continue;
                ++count;
                queue.clear();
                queue.push_back(a * degree_ + b);
                orb[a * degree_ + b] = count;
                for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                    const int x = queue[qi] / degree_, y = queue[qi] % degree_;
                    for (const auto& g : gens_) {
                        const int z = g(x) * degree_ + g(y);
                        if (orb[z] < 0) {
                            orb[z] = count;
                            queue.push_back(z);
                        }
                    }
                }
            }
        return count;
    }

    bool is_2transitive() const {
        return is_transitive() && orbits_on_ordered_pairs() == 1;
    }

    // finest G-congruence identifying x and y (Atkinson); classes of the
    // returned partition are the minimal blocks
    std::vector<std::vector<int>> minimal_block_system(int x, int y) const {
        std::vector<int> parent(degree_);
        for (int i = 0; i < degree_; ++i)
            parent[i] = i;
        auto find = [&](int a) {
            while (parent[a] != a)
                a = parent[a] = parent[parent[a]];
            return a;
        };
        std::vector<std::pair<int, int>> work;
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a == b)
                return;
            if (a > b)
                std::swap(a, b);
            parent[b] = a;
        };
        unite(x, y);
        work.emplace_back(x, y);
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            for (const auto& g : gens_) {
                const int ga = g(a), gb = g(b);
                if (find(ga) != find(gb)) {
                    unite(ga, gb);
                    work.emplace_back(ga, gb);
                }
            }
        }
        std::vector<std::vector<int>> classes(degree_);
        for (int i = 0; i < degree_; ++i)
            classes[find(i)].push_back(i);
        std::erase_if(classes, [](const auto& c) { return c.empty(); });
        return classes;
    }

private:
    int degree_;
    std::vector<Permutation> gens_;
    mutable std::shared_ptr<detail::StabChain> chain_;

    const detail::StabChain& chain() const {
        if (!chain_) {
            auto c = std::make_shared<detail::StabChain>(degree_);
            c->build(gens_);
            for (const auto& g : gens_)
                if (!c->contains(g))
                    throw std::logic_error("stabilizer chain rejects its own generator");
            chain_ = std::move(c);
        }
        return *chain_;
    }
};

// ---- action classification ---------------------------------------------------

enum class ActionKind {
    intransitive,
    transitive_imprimitive,
    primitive_not_2transitive,
    two_transitive,
};

struct ActionClassification {
    ActionKind kind;
    // intransitive: the point orbits; imprimitive: a nontrivial block system
    std::vector<std::vector<int>> witness;
    int pair_orbit_count = 0; // filled for the primitive outcomes
};

inline const char* to_string(ActionKind k) {
    switch (k) {
    case ActionKind::intransitive: return "intransitive";
    case ActionKind::transitive_imprimitive: return "transitive-imprimitive";
    case ActionKind::primitive_not_2transitive: return "primitive-not-2-transitive";
    case ActionKind::two_transitive: return "2-transitive";
    }
    return "?";
}

inline ActionClassification classify_action(const PermGroup& G) {
    auto orbits = G.point_orbits();
    if (orbits.size() > 1)
        return {ActionKind::intransitive, std::move(orbits), 0};
    const int v = G.degree();
    for (int y = 1; y < v; ++y) {
        auto blocks = G.minimal_block_system(0, y);
        const std::size_t bsize = blocks.front().size();
        if (bsize > 1 && bsize < static_cast<std::size_t>(v))
            return {ActionKind::transitive_imprimitive, std::move(blocks), 0};
    }
    const int pairs = G.orbits_on_ordered_pairs();
    if (pairs == 1)
        return {ActionKind::two_transitive, {}, 1};
    return {ActionKind::primitive_not_2transitive, {}, pairs};
}

} // namespace ctd
