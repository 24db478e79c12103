#pragma once

// Small finite fields GF(p^a) with explicit tables. Elements are encoded as
// integers in [0,q): the base-p digits are the polynomial coefficients, so the
// labeling is fixed by the reduction polynomial and reproducible across runs.

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace ctd {

class FiniteField {
public:
    explicit FiniteField(int q) : q_(q) {
        auto [p, a, red] = params_for(q);
        p_ = p;
        a_ = a;
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y) {
                add_[x * q + y] = add_poly(x, y);
                mul_[x * q + y] = mul_poly(x, y, red);
            }
        neg_.assign(q, 0);
        inv_.assign(q, 0);
        for (int x = 0; x < q; ++x) {
            for (int y = 0; y < q; ++y) {
                if (add_[x * q + y] == 0)
                    neg_[x] = y;
                if (x != 0 && mul_[x * q + y] == 1)
                    inv_[x] = y;
            }
        }
        // primitive element: x (encoded p) for extensions, else the smallest
        // generator of GF(p)*
        if (a_ > 1) {
            prim_ = p_;
        } else if (q_ == 2) {
            prim_ = 1;
        } else {
            for (int c = 2; c < q; ++c) {
                int e = c, ord = 1;
                while (e != 1) {
                    e = mul(e, c);
                    ++ord;
                }
                if (ord == q - 1) {
                    prim_ = c;
                    break;
                }
            }
        }
        if (prim_ == 0 || order_of(prim_) != q - 1)
            throw std::logic_error("FiniteField: primitive element check failed");
    }

    int q() const { return q_; }
    int p() const { return p_; }
    int a() const { return a_; }
    int primitive() const { return prim_; }

    int add(int x, int y) const { return add_[x * q_ + y]; }
    int sub(int x, int y) const { return add_[x * q_ + neg_[y]]; }
    int mul(int x, int y) const { return mul_[x * q_ + y]; }
    int neg(int x) const { return neg_[x]; }
    int inv(int x) const {
        if (x == 0)
            throw std::invalid_argument("FiniteField: inverse of zero");
        return inv_[x];
    }
    int div(int x, int y) const { return mul(x, inv(y)); }

    int pow(int x, int e) const {
        int r = 1;
        for (int i = 0; i < e; ++i)
            r = mul(r, x);
        return r;
    }

    int order_of(int x) const {
        if (x == 0)
            return 0;
        int e = x, ord = 1;
        while (e != 1) {
            e = mul(e, x);
            ++ord;
        }
        return ord;
    }

    static const FiniteField& get(int q) {
        static std::map<int, FiniteField> cache;
        auto it = cache.find(q);
        if (it == cache.end())
            it = cache.emplace(q, FiniteField(q)).first;
        return it->second;
    }

private:
    int q_, p_ = 0, a_ = 0, prim_ = 0;
    std::vector<int> add_, mul_, neg_, inv_;

    // fixed reduction polynomials (low coefficients c_0..c_{a-1} of the monic
    // x^a + c_{a-1} x^{a-1} + ... + c_0); x is primitive for each
    static std::tuple<int, int, std::vector<int>> params_for(int q) {
        switch (q) {
        case 2: return {2, 1, {}};
        case 3: return {3, 1, {}};
        case 4: return {2, 2, {1, 1}};       // x^2 + x + 1
        case 5: return {5, 1, {}};
        case 7: return {7, 1, {}};
        case 8: return {2, 3, {1, 1, 0}};    // x^3 + x + 1
        case 9: return {3, 2, {2, 1}};       // x^2 + x + 2
        case 11: return {11, 1, {}};
        case 13: return {13, 1, {}};
        case 16: return {2, 4, {1, 1, 0, 0}}; // x^4 + x + 1
        default:
            throw std::invalid_argument("FiniteField: unsupported q");
        }
    }

    std::vector<int> digits(int x) const {
        std::vector<int> d(a_);
        for (int i = 0; i < a_; ++i) {
            d[i] = x % p_;
            x /= p_;
        }
        return d;
    }
    int undigits(const std::vector<int>& d) const {
        int x = 0;
        for (int i = a_ - 1; i >= 0; --i)
            x = x * p_ + d[i];
        return x;
    }

    int add_poly(int x, int y) const {
        auto dx = digits(x), dy = digits(y);
        for (int i = 0; i < a_; ++i)
            dx[i] = (dx[i] + dy[i]) % p_;
        return undigits(dx);
    }

    int mul_poly(int x, int y, const std::vector<int>& red) const {
        auto dx = digits(x), dy = digits(y);
        std::vector<int> prod(2 * a_ - 1, 0);
        for (int i = 0; i < a_; ++i)
            for (int j = 0; j < a_; ++j)
                prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
        for (int d = 2 * a_ - 2; d >= a_; --d) {
            const int c = prod[d];
            if (c == 0)
                continue;
            prod[d] = 0;
            for (int i = 0; i < a_; ++i) // x^a = -red
                prod[d - a_ + i] = ((prod[d - a_ + i] - c * red[i]) % p_ + p_ * p_) % p_;
        }
        prod.resize(a_);
        return undigits(prod);
    }
};

} // namespace ctd
