#pragma once

// Point permutations of {0..v-1} and their induced action on k-subsets.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctdesign/ksubset.hpp"

namespace ctd {

struct Permutation {
    std::vector<std::uint8_t> images; // images[x] = x^g

    Permutation() = default;
    explicit Permutation(int degree) : images(degree) {
        std::iota(images.begin(), images.end(), std::uint8_t{0});
    }
    explicit Permutation(std::vector<std::uint8_t> im) : images(std::move(im)) {
        validate();
    }

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int x) const { return images[x]; }
    bool operator==(const Permutation&) const = default;

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images[i] != i)
                return false;
        return true;
    }

    void validate() const {
        if (images.size() > kMaxPoints)
            throw std::invalid_argument("Permutation: degree > 64");
        std::uint64_t seen = 0;
        for (std::uint8_t y : images) {
            if (y >= images.size() || (seen >> y) & 1)
                throw std::invalid_argument("Permutation: images not a bijection");
            seen |= std::uint64_t{1} << y;
        }
    }

    Permutation inverse() const {
        Permutation r;
        r.images.resize(images.size());
        for (int i = 0; i < degree(); ++i)
            r.images[images[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    // (a * b)(x) = b(a(x)): a first
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree())
            throw std::invalid_argument("Permutation: degree mismatch");
        Permutation r;
        r.images.resize(a.images.size());
        for (int i = 0; i < a.degree(); ++i)
            r.images[i] = b.images[a.images[i]];
        return r;
    }
};

inline KSubset apply(const Permutation& g, const KSubset& s) {
    std::uint64_t out = 0;
    for (std::uint64_t m = s.bits; m; m &= m - 1) {
        const int p = std::countr_zero(m);
        if (p >= g.degree())
            throw std::invalid_argument("apply: point exceeds permutation degree");
        out |= std::uint64_t{1} << g.images[p];
    }
    return KSubset{out};
}

// ---- disjoint-cycle notation -------------------------------------------------
// "(0 1 2)(3 4)"; "()" is the identity. 0-based points.

inline Permutation parse_cycles(const std::string& text, int degree) {
    Permutation g(degree);
    std::uint64_t assigned = 0;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
            ++i;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("cycle notation: expected '(' in \"" + text + "\"");
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("cycle notation: expected digit in \"" + text + "\"");
            int val = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                val = val * 10 + (text[i++] - '0');
            if (val >= degree)
                throw std::invalid_argument("cycle notation: point " + std::to_string(val) +
                                            " >= degree " + std::to_string(degree));
            cyc.push_back(val);
            skip_ws();
        }
        if (i == text.size())
            throw std::invalid_argument("cycle notation: unterminated cycle");
        ++i; // ')'
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            const int from = cyc[j];
            const int to = cyc[(j + 1) % cyc.size()];
            if ((assigned >> from) & 1)
                throw std::invalid_argument("cycle notation: repeated point " +
                                            std::to_string(from));
            assigned |= std::uint64_t{1} << from;
            g.images[from] = static_cast<std::uint8_t>(to);
        }
        any = true;
        skip_ws();
    }
    if (!any)
        throw std::invalid_argument("cycle notation: empty input");
    g.validate();
    return g;
}

inline std::string format_cycles(const Permutation& g) {
    std::string out;
    std::uint64_t seen = 0;
    for (int i = 0; i < g.degree(); ++i) {
        if ((seen >> i) & 1 || g(i) == i)
            continue;
        out += '(';
        int j = i;
        bool first = true;
        do {
            if (!first)
                out += ' ';
            out += std::to_string(j);
            seen |= std::uint64_t{1} << j;
            j = g(j);
            first = false;
        } while (j != i);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

} // namespace ctd
