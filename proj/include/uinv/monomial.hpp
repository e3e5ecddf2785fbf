#pragma once

#include <numeric>
#include <vector>

namespace uinv {

/// Power product exponent vector; the length is the ambient variable count.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int nvars) : exps(static_cast<size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool is_constant() const { return degree() == 0; }

    int operator[](int i) const { return exps[static_cast<size_t>(i)]; }
    int& operator[](int i) { return exps[static_cast<size_t>(i)]; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Graded lexicographic order, descending: higher total degree first, then
/// lexicographically with x1 heaviest. This is the canonical term order used
/// everywhere (storage, printing, monomial enumeration).
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

}  // namespace uinv
