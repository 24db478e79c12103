#pragma once

// File formats.
//
// Design file: line `v k n`, then n lines of k sorted 0-based points.
// Group file: line `degree v`, then one generator per line in disjoint-cycle
// notation over 0-based points, e.g. "(0 1 2)(3 4)".
//
// `#` comments and blank lines are ignored in both. Comment metadata that the
// loaders act on when present:
//   # order: <n>            asserted against the stabilizer chain
//   # checksum: fnv1a64:<hex16>   FNV-1a 64 of the payload lines joined by \n

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctdesign/design.hpp"
#include "ctdesign/group.hpp"

namespace ctd {

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

inline std::uint64_t fnv1a64(const std::string& payload) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct TextData {
    std::vector<std::string> payload;                 // non-comment lines, trimmed
    std::optional<std::uint64_t> declared_order;      // from "# order:"
    std::optional<std::string> name;                  // from "# name:"

    static TextData read(std::istream& in, const std::string& origin) {
        TextData td;
        std::optional<std::string> declared_checksum;
        std::string line;
        while (std::getline(in, line)) {
            const std::string t = trim(line);
            if (t.empty())
                continue;
            if (t[0] == '#') {
                const std::string body = trim(t.substr(1));
                if (body.starts_with("order:"))
                    td.declared_order = std::stoull(trim(body.substr(6)));
                else if (body.starts_with("checksum:"))
                    declared_checksum = trim(body.substr(9));
                else if (body.starts_with("name:"))
                    td.name = trim(body.substr(5));
                continue;
            }
            td.payload.push_back(t);
        }
        if (declared_checksum) {
            std::string joined;
            for (std::size_t i = 0; i < td.payload.size(); ++i) {
                if (i)
                    joined += '\n';
                joined += td.payload[i];
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                          static_cast<unsigned long long>(fnv1a64(joined)));
            if (*declared_checksum != buf)
                throw ParseError(origin + ": checksum mismatch (expected " +
                                 *declared_checksum + ", payload hashes to " + buf + ")");
        }
        return td;
    }
};

} // namespace detail

// ---- designs -------------------------------------------------------------------

inline Design read_design(std::istream& in, const std::string& origin = "<stream>") {
    const auto td = detail::TextData::read(in, origin);
    if (td.payload.empty())
        throw ParseError(origin + ": empty design file");
    std::istringstream head(td.payload[0]);
    int v = 0, k = 0;
    std::size_t n = 0;
    if (!(head >> v >> k >> n))
        throw ParseError(origin + ": bad header, expected `v k n`");
    if (td.payload.size() != n + 1)
        throw ParseError(origin + ": expected " + std::to_string(n) + " block lines, got " +
                         std::to_string(td.payload.size() - 1));
    std::vector<KSubset> blocks;
    blocks.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        std::istringstream ls(td.payload[i]);
        std::uint64_t bits = 0;
        int p = 0, cnt = 0;
        while (ls >> p) {
            if (p < 0 || p >= v)
                throw ParseError(origin + ": point out of range in block " + std::to_string(i));
            bits |= std::uint64_t{1} << p;
            ++cnt;
        }
        if (cnt != k)
            throw ParseError(origin + ": block " + std::to_string(i) + " has " +
                             std::to_string(cnt) + " points, expected " + std::to_string(k));
        blocks.push_back(KSubset{bits});
    }
    try {
        return Design(v, k, std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

inline void write_design(std::ostream& out, const Design& d) {
    out << d.v << ' ' << d.k << ' ' << d.blocks.size() << '\n';
    for (const auto& b : d.blocks) {
        bool first = true;
        for (int p : b.points()) {
            if (!first)
                out << ' ';
            out << p;
            first = false;
        }
        out << '\n';
    }
}

inline Design load_design(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open design file: " + path);
    return read_design(in, path);
}

inline void save_design(const std::string& path, const Design& d) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write design file: " + path);
    write_design(out, d);
}

// ---- groups --------------------------------------------------------------------

struct LoadedGroup {
    PermGroup group;
    std::optional<std::string> name;
};

inline LoadedGroup read_group(std::istream& in, const std::string& origin = "<stream>") {
    const auto td = detail::TextData::read(in, origin);
    if (td.payload.empty())
        throw ParseError(origin + ": empty group file");
    std::istringstream head(td.payload[0]);
    std::string kw;
    int degree = 0;
    if (!(head >> kw >> degree) || kw != "degree")
        throw ParseError(origin + ": bad header, expected `degree v`");
    if (td.payload.size() < 2)
        throw ParseError(origin + ": no generators");
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < td.payload.size(); ++i) {
        try {
            gens.push_back(parse_cycles(td.payload[i], degree));
        } catch (const std::invalid_argument& e) {
            throw ParseError(origin + ": generator " + std::to_string(i) + ": " + e.what());
        }
    }
    PermGroup G(degree, std::move(gens));
    if (td.declared_order && G.order() != *td.declared_order)
        throw ParseError(origin + ": declared order " + std::to_string(*td.declared_order) +
                         " != stabilizer-chain order " + G.order().str());
    return {std::move(G), td.name};
}

inline LoadedGroup load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open group file: " + path);
    return read_group(in, path);
}

inline void write_group(std::ostream& out, const PermGroup& G) {
    out << "degree " << G.degree() << '\n';
    for (const auto& g : G.generators())
        out << format_cycles(g) << '\n';
}

// ---- bundled data ---------------------------------------------------------------

inline std::string default_data_dir() {
#ifdef CTDESIGN_DATA_DIR
    return CTDESIGN_DATA_DIR;
#else
    return "data";
#endif
}

inline PermGroup bundled_group(const std::string& stem,
                               const std::string& data_dir = default_data_dir()) {
    return load_group(data_dir + "/groups/" + stem + ".grp").group;
}

// 12 basis rows of the extended [24,12,8] code, as 24-char 0/1 strings
inline std::vector<std::uint32_t>
load_golay_basis(const std::string& data_dir = default_data_dir()) {
    const std::string path = data_dir + "/golay24.txt";
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    const auto td = detail::TextData::read(in, path);
    if (td.payload.size() != 12)
        throw ParseError(path + ": expected 12 rows");
    std::vector<std::uint32_t> rows;
    for (const auto& line : td.payload) {
        if (line.size() != 24)
            throw ParseError(path + ": row must have 24 bits");
        std::uint32_t r = 0;
        for (int i = 0; i < 24; ++i) {
            if (line[i] == '1')
                r |= std::uint32_t{1} << i;
            else if (line[i] != '0')
                throw ParseError(path + ": row must be 0/1");
        }
        rows.push_back(r);
    }
    return rows;
}

inline Design bundled_design(const std::string& rel,
                             const std::string& data_dir = default_data_dir()) {
    return load_design(data_dir + "/designs/" + rel + ".dsgn");
}

} // namespace ctd
