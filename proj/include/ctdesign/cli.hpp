#pragma once

// Command-line front end: construct designs, run analyses, produce orbit
// censuses and screening tables, and run the full reproduction suite.
// Reports are deterministic: fixed orderings, no timestamps.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ctdesign/audit.hpp"
#include "ctdesign/report.hpp"
#include "ctdesign/verification.hpp"

namespace ctd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMemoryCap = 3;
inline constexpr int kExitVerify = 4;

namespace detail_cli {

inline void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + out_path);
    out << text;
}

struct ConstructResult {
    Design design;
    std::optional<PermGroup> group;
};

inline ConstructResult construct_named(const std::string& name, int q, int n, int a, int b,
                                       int v, int k, const std::vector<int>& y,
                                       const std::string& data_dir) {
    if (name == "pg-lines") {
        auto pg = pg_lines(q);
        return {std::move(pg.lines), std::move(pg.pgl)};
    }
    if (name == "ag-lines")
        return {ag_lines(q), std::nullopt};
    if (name == "biplane11")
        return {biplane11(), bundled_group("psl2_11", data_dir)};
    if (name == "witt") {
        std::optional<PermGroup> g;
        if (n == 24)
            g = bundled_group("m24", data_dir);
        else if (n == 23)
            g = bundled_group("m23", data_dir);
        else if (n == 12)
            g = bundled_group("m12", data_dir);
        return {witt(n, data_dir), std::move(g)};
    }
    if (name == "inversive4")
        return {inversive_plane4(), pgammal2(16)};
    if (name == "hadamard12")
        return {Design(12, 6,
                       block_orbit(bundled_group("m11_deg12", data_dir),
                                   KSubset::of_points({1, 3, 4, 5, 9, 11}))),
                bundled_group("m11_deg12", data_dir)};
    if (name == "example1") {
        if (y.empty())
            throw std::invalid_argument("example1 needs --y");
        const KSubset Y = KSubset::of_range(y);
        // Sym(Y) x Sym(X\Y): relabel-free generators
        std::vector<Permutation> gens;
        auto pts = Y.points();
        auto rest = complement(Y, GroundSet(v)).points();
        for (const auto& side : {pts, rest}) {
            if (side.size() >= 2) {
                Permutation t(v);
                std::swap(t.images[side[0]], t.images[side[1]]);
                gens.push_back(t);
                if (side.size() > 2) {
                    Permutation c(v);
                    for (std::size_t i = 0; i < side.size(); ++i)
                        c.images[side[i]] =
                            static_cast<std::uint8_t>(side[(i + 1) % side.size()]);
                    gens.push_back(c);
                }
            }
        }
        if (gens.empty())
            gens.emplace_back(v);
        return {example1(v, k, Y), PermGroup(v, std::move(gens))};
    }
    if (name == "example2")
        return {example2(a, k), wreath_group(a, 2)};
    if (name == "example3")
        return {example3(b, k), wreath_group(2, b)};
    if (name == "example4")
        return {example4(a, b), wreath_group(a, b)};
    if (name == "example5")
        return {example5(a, b), wreath_group(a, b)};
    throw std::invalid_argument("unknown construction: " + name);
}

} // namespace detail_cli

inline int run(int argc, const char* const* argv) {
    CLI::App app{"completely regular and completely transitive designs in Johnson graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string data_dir = default_data_dir();
    app.add_option("--data", data_dir, "data directory with bundled groups");

    std::uint64_t max_ranks = kDefaultMaxRanks;
    app.add_option("--max-ranks", max_ranks, "cap on per-rank arrays (default 2^27)");

    // construct
    auto* c = app.add_subcommand("construct", "build a named design (and its group)");
    std::string c_name, c_out, c_group_out;
    int c_q = 2, c_n = 24, c_a = 3, c_b = 3, c_v = 8, c_k = 3;
    std::vector<int> c_y;
    c->add_option("name", c_name,
                  "pg-lines | ag-lines | biplane11 | witt | inversive4 | hadamard12 | "
                  "example1..example5")
        ->required();
    c->add_option("--q", c_q, "field order (pg-lines, ag-lines)");
    c->add_option("--n", c_n, "points of the Witt design: 12, 22, 23, 24");
    c->add_option("--a", c_a, "cell size (example2/4/5)");
    c->add_option("--b", c_b, "cell count (example3/4/5)");
    c->add_option("--v", c_v, "point count (example1)");
    c->add_option("--k", c_k, "block size (example1/2/3)");
    c->add_option("--y", c_y, "points of Y (example1)");
    c->add_option("--out", c_out, "design file (stdout if omitted)");
    c->add_option("--group-out", c_group_out, "also write the paired group file");

    // analyze
    auto* an = app.add_subcommand("analyze", "full analysis of a design file");
    std::string a_design, a_group, a_out, a_format = "json";
    an->add_option("--design", a_design, "design file")->required();
    an->add_option("--group", a_group, "group file (enables the transitivity verdict)");
    an->add_option("--out", a_out, "output file (stdout if omitted)");
    an->add_option("--format", a_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    // orbits
    auto* orb = app.add_subcommand("orbits", "orbit census of a group on k-subsets");
    std::string o_group, o_out, o_format = "text";
    int o_k = 0;
    orb->add_option("--group", o_group, "group file")->required();
    orb->add_option("--k", o_k, "subset size")->required();
    orb->add_option("--out", o_out, "output file");
    orb->add_option("--format", o_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    // screen
    auto* sc = app.add_subcommand("screen", "arithmetic screening tables");
    std::string s_family = "all", s_out, s_format = "text";
    sc->add_option("--family", s_family,
                   "suzuki | ree | u3 | l2 | projective | affine | mathieu | hs | co3 | "
                   "unitals | all");
    sc->add_option("--out", s_out, "output file");
    sc->add_option("--format", s_format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // verify
    auto* ver = app.add_subcommand("verify", "run the full reproduction suite");
    bool ver_quiet = false;
    std::string ver_audit_csv;
    ver->add_flag("--quiet", ver_quiet, "only print the summary line");
    ver->add_option("--audit-csv", ver_audit_csv, "also write the audit table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*c) {
            auto res = detail_cli::construct_named(c_name, c_q, c_n, c_a, c_b, c_v, c_k,
                                                   c_y, data_dir);
            std::ostringstream os;
            write_design(os, res.design);
            detail_cli::emit(os.str(), c_out);
            if (!c_group_out.empty()) {
                if (!res.group)
                    throw std::invalid_argument("no bundled group for " + c_name);
                std::ostringstream gs;
                write_group(gs, *res.group);
                detail_cli::emit(gs.str(), c_group_out);
            }
        } else if (*an) {
            const Design d = load_design(a_design);
            std::optional<PermGroup> G;
            if (!a_group.empty())
                G = load_group(a_group).group;
            const auto rep = analyze(d, G ? &*G : nullptr, max_ranks);
            detail_cli::emit(a_format == "json" ? to_json(rep, d).dump(2) + "\n"
                                                : report_text(rep),
                             a_out);
        } else if (*orb) {
            const PermGroup G = load_group(o_group).group;
            const auto census = orbit_census(G, o_k, max_ranks);
            detail_cli::emit(o_format == "json" ? to_json(census).dump(2) + "\n"
                                                : census_text(census),
                             o_out);
        } else if (*sc) {
            std::vector<ScreenRow> rows;
            if (s_family == "all") {
                rows = screen_all();
            } else {
                bool found = false;
                for (Family f : {Family::suzuki, Family::ree, Family::u3, Family::l2,
                                 Family::projective, Family::affine, Family::mathieu,
                                 Family::hs, Family::co3, Family::unitals})
                    if (s_family == family_name(f)) {
                        rows = family_screen(f);
                        found = true;
                        break;
                    }
                if (!found)
                    throw std::invalid_argument("unknown family: " + s_family);
            }
            std::string text;
            if (s_format == "json")
                text = to_json(rows).dump(2) + "\n";
            else if (s_format == "csv")
                text = screen_csv(rows);
            else
                text = screen_text(rows);
            detail_cli::emit(text, s_out);
        } else if (*ver) {
            const auto results = run_acceptance(data_dir, max_ranks);
            int failures = 0;
            for (const auto& r : results) {
                failures += !r.pass;
                if (!ver_quiet) {
                    std::printf("[%s] criterion %2d: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL",
                                r.id, r.name.c_str(), r.seconds);
                    if (!r.detail.empty())
                        std::printf("       %s\n", r.detail.c_str());
                }
            }
            if (!ver_quiet || !ver_audit_csv.empty()) {
                const auto audits = run_audits(data_dir);
                if (!ver_quiet) {
                    std::printf("\naudit of published counts:\n");
                    for (const auto& row : audits)
                        std::printf("  [%-8s] %-26s %s -> %s\n", row.verdict.c_str(),
                                    row.name.c_str(), row.claim.c_str(),
                                    row.recomputed.c_str());
                }
                if (!ver_audit_csv.empty())
                    detail_cli::emit(audit_csv(audits), ver_audit_csv);
            }
            std::printf("%d/%zu criteria passed\n",
                        static_cast<int>(results.size()) - failures, results.size());
            return failures == 0 ? kExitOk : kExitVerify;
        }
    } catch (const MemoryCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMemoryCap;
    } catch (const NotPreservedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}

} // namespace ctd::cli
