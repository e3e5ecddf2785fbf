#pragma once

#include <random>

#include "uinv/polynomial.hpp"

namespace uinv::testing {

inline Polynomial random_poly(int nvars, int max_deg, int terms, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        int d = deg(rng);
        for (int i = 0; i < d; ++i) m[var(rng)] += 1;
        p += Polynomial::term(m, Rational(coef(rng)));
    }
    return p;
}

inline Polynomial random_nonzero_poly(int nvars, int max_deg, int terms, std::mt19937_64& rng) {
    while (true) {
        Polynomial p = random_poly(nvars, max_deg, terms, rng);
        if (!p.is_zero()) return p;
    }
}

}  // namespace uinv::testing
