#pragma once

// Report documents. JSON output uses fixed key order and fixed array
// orderings so identical inputs produce byte-identical files.

#include <json.hpp>

#include <string>
#include <vector>

#include "ctdesign/analysis.hpp"
#include "ctdesign/audit.hpp"
#include "ctdesign/screening.hpp"

namespace ctd {

using Json = nlohmann::ordered_json;

inline Json to_json(const KSubset& s) { return Json(s.points()); }

inline Json to_json(const EquitabilityVerdict& v) {
    Json j;
    j["verdict"] = v.equitable;
    if (v.trivial)
        j["trivial"] = true;
    if (v.equitable) {
        j["intersection_numbers"] = v.intersection_numbers;
    } else {
        const auto& w = *v.witness;
        j["witness"] = {{"vertex", to_json(w.vertex)},
                        {"cell", w.i},
                        {"neighbor_cell", w.j},
                        {"count_expected", w.count_expected},
                        {"count_found", w.count_found}};
    }
    return j;
}

inline Json to_json(const AnalysisReport& rep, const Design& d) {
    Json j;
    j["v"] = rep.v;
    j["k"] = rep.k;
    Json blocks = Json::array();
    for (const auto& b : d.blocks)
        blocks.push_back(b.points());
    j["blocks"] = std::move(blocks);
    if (rep.delta)
        j["delta"] = *rep.delta;
    else
        j["delta"] = "infinity";
    j["r"] = rep.covering_radius;
    j["strength"] = rep.strength;
    j["cell_sizes"] = rep.cell_sizes;
    j["completely_regular"] = to_json(rep.completely_regular);
    if (rep.group) {
        Json g;
        g["order"] = rep.group->order.str();
        Json sizes = Json::array();
        Json census = Json::array();
        for (const auto& row : rep.group->transitivity.census) {
            sizes.push_back(row.size);
            census.push_back({{"size", row.size},
                              {"distance", row.distance},
                              {"representative", static_cast<std::uint64_t>(row.representative)}});
        }
        g["orbit_sizes"] = std::move(sizes);
        g["orbit_census"] = std::move(census);
        g["completely_transitive"] = rep.group->transitivity.completely_transitive;
        j["group"] = std::move(g);
    }
    return j;
}

inline std::string report_text(const AnalysisReport& rep) {
    std::string out;
    out += "J(" + std::to_string(rep.v) + "," + std::to_string(rep.k) + "), " +
           std::to_string(rep.block_count) + " blocks\n";
    out += "delta    = " + (rep.delta ? std::to_string(*rep.delta) : std::string("infinity")) + "\n";
    out += "r        = " + std::to_string(rep.covering_radius) + "\n";
    out += "strength = " + std::to_string(rep.strength) + "\n";
    out += "cells    =";
    for (auto c : rep.cell_sizes)
        out += " " + std::to_string(c);
    out += "\ncompletely regular: ";
    out += rep.completely_regular.equitable ? "yes" : "no";
    if (!rep.completely_regular.equitable) {
        const auto& w = *rep.completely_regular.witness;
        out += "  (witness " + to_string(w.vertex) + " in cell " + std::to_string(w.i) +
               ": neighbors in cell " + std::to_string(w.j) + " number " +
               std::to_string(w.count_found) + ", first vertex of the cell had " +
               std::to_string(w.count_expected) + ")";
    }
    out += "\n";
    if (rep.group) {
        out += "group order " + rep.group->order.str() + ", orbits on k-subsets:";
        for (const auto& row : rep.group->transitivity.census)
            out += " " + std::to_string(row.size) + "@d" + std::to_string(row.distance);
        out += "\ncompletely transitive: ";
        out += rep.group->transitivity.completely_transitive ? "yes" : "no";
        out += "\n";
    }
    return out;
}

// ---- orbit census (cmd_orbits) ------------------------------------------------

struct OrbitCensus {
    int degree = 0;
    int k = 0;
    BigInt group_order;
    std::vector<std::uint64_t> sizes;          // orbit id order
    std::vector<std::vector<int>> representatives;
    std::vector<std::vector<int>> min_distance; // inter-orbit minimum distances
};

inline OrbitCensus orbit_census(const PermGroup& G, int k,
                                std::uint64_t max_ranks = kDefaultMaxRanks) {
    const auto part = orbits_on_ksubsets(G, k, max_ranks);
    const GroundSet g(G.degree());
    OrbitCensus c;
    c.degree = G.degree();
    c.k = k;
    c.group_order = G.order();
    c.sizes = part.sizes;
    for (auto r : part.representative)
        c.representatives.push_back(unrank(r, g, k).points());

    const std::size_t n = part.orbit_of.size();
    const std::size_t m = part.count();
    if (m <= 16) { // distance matrix via one BFS per orbit
        c.min_distance.assign(m, std::vector<int>(m, -1));
        for (std::size_t src = 0; src < m; ++src) {
            std::vector<std::uint8_t> dist(n, kUnreached);
            std::vector<std::uint64_t> frontier, next;
            for (std::uint64_t i = 0; i < n; ++i)
                if (part.orbit_of[i] == src) {
                    dist[i] = 0;
                    frontier.push_back(unrank(i, g, k).bits);
                }
            int level = 0;
            const std::uint64_t full = g.full_mask();
            while (!frontier.empty()) {
                ++level;
                next.clear();
                for (const std::uint64_t bits : frontier) {
                    const std::uint64_t outside = full & ~bits;
                    for (std::uint64_t rm = bits; rm; rm &= rm - 1) {
                        const std::uint64_t without = bits ^ (rm & -rm);
                        for (std::uint64_t ad = outside; ad; ad &= ad - 1) {
                            const std::uint64_t nb = without | (ad & -ad);
                            auto& dn = dist[rank(KSubset{nb}, g)];
                            if (dn == kUnreached) {
                                dn = static_cast<std::uint8_t>(level);
                                next.push_back(nb);
                            }
                        }
                    }
                }
                frontier.swap(next);
            }
            for (std::uint64_t i = 0; i < n; ++i) {
                auto& cell = c.min_distance[src][part.orbit_of[i]];
                if (cell < 0 || dist[i] < cell)
                    cell = dist[i];
            }
        }
    }
    return c;
}

inline Json to_json(const OrbitCensus& c) {
    Json j;
    j["degree"] = c.degree;
    j["k"] = c.k;
    j["group_order"] = c.group_order.str();
    j["orbit_count"] = c.sizes.size();
    Json orbits = Json::array();
    for (std::size_t i = 0; i < c.sizes.size(); ++i)
        orbits.push_back({{"size", c.sizes[i]}, {"representative", c.representatives[i]}});
    j["orbits"] = std::move(orbits);
    if (!c.min_distance.empty())
        j["min_distance"] = c.min_distance;
    return j;
}

inline std::string census_text(const OrbitCensus& c) {
    std::string out = "group order " + c.group_order.str() + ", " +
                      std::to_string(c.sizes.size()) + " orbit(s) on " +
                      std::to_string(c.k) + "-subsets of " + std::to_string(c.degree) +
                      " points\n";
    for (std::size_t i = 0; i < c.sizes.size(); ++i) {
        out += "  orbit " + std::to_string(i) + ": size " + std::to_string(c.sizes[i]) +
               ", rep {";
        for (std::size_t t = 0; t < c.representatives[i].size(); ++t)
            out += (t ? " " : "") + std::to_string(c.representatives[i][t]);
        out += "}\n";
    }
    if (!c.min_distance.empty()) {
        out += "inter-orbit minimum distances:\n";
        for (const auto& row : c.min_distance) {
            out += "   ";
            for (int x : row)
                out += " " + std::to_string(x);
            out += "\n";
        }
    }
    return out;
}

// ---- screening tables -------------------------------------------------------------

inline std::string screen_csv(const std::vector<ScreenRow>& rows) {
    std::string out = "family,params,k,verdict,bound\n";
    for (const auto& r : rows) {
        auto esc = [](const std::string& s) {
            if (s.find(',') == std::string::npos)
                return s;
            return "\"" + s + "\"";
        };
        out += esc(r.family) + "," + esc(r.params) + "," + esc(r.k) + "," +
               esc(r.verdict) + "," + esc(r.bound) + "\n";
    }
    return out;
}

inline Json to_json(const std::vector<ScreenRow>& rows) {
    Json j = Json::array();
    for (const auto& r : rows)
        j.push_back({{"family", r.family},
                     {"params", r.params},
                     {"k", r.k},
                     {"verdict", r.verdict},
                     {"bound", r.bound}});
    return j;
}

inline std::string screen_text(const std::vector<ScreenRow>& rows) {
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w)
            s.resize(w, ' ');
        return s + " ";
    };
    std::string out;
    for (const auto& r : rows) {
        out += pad(r.family, 11) + pad(r.params, 24) +
               pad("k=" + (r.k.empty() ? "-" : r.k), 16) + pad(r.verdict, 10);
        if (!r.bound.empty())
            out += "[" + r.bound + "]";
        while (!out.empty() && out.back() == ' ')
            out.pop_back();
        out += "\n";
    }
    return out;
}

inline std::string audit_csv(const std::vector<AuditRow>& rows) {
    std::string out = "name,verdict,claim,recomputed,detail\n";
    auto esc = [](std::string s) {
        for (auto& c : s)
            if (c == '"')
                c = '\'';
        return "\"" + s + "\"";
    };
    for (const auto& r : rows)
        out += r.name + "," + r.verdict + "," + esc(r.claim) + "," + esc(r.recomputed) +
               "," + esc(r.detail) + "\n";
    return out;
}

inline Json to_json(const std::vector<AuditRow>& rows) {
    Json j = Json::array();
    for (const auto& r : rows)
        j.push_back({{"name", r.name},
                     {"verdict", r.verdict},
                     {"claim", r.claim},
                     {"recomputed", r.recomputed},
                     {"detail", r.detail}});
    return j;
}

} // namespace ctd
