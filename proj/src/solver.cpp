#include "uinv/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace uinv {

namespace {

void enumerate_rec(int var, int remaining, Monomial& cur, bool exact, std::vector<Monomial>& out) {
    if (var == cur.nvars() - 1) {
        cur[var] = exact ? remaining : 0;
        if (exact) {
            out.push_back(cur);
        } else {
            for (int e = 0; e <= remaining; ++e) {
                cur[var] = e;
                out.push_back(cur);
            }
        }
        cur[var] = 0;
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[var] = e;
        enumerate_rec(var + 1, remaining - e, cur, exact, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(int n, int d, SolveMode mode) {
    if (n < 1 || d < 0) throw std::invalid_argument("enumerate_monomials: need n >= 1, d >= 0");
    std::vector<Monomial> out;
    Monomial cur(n);
    enumerate_rec(0, d, cur, mode == SolveMode::Graded, out);
    std::sort(out.begin(), out.end(), GrlexDesc{});
    return out;
}

LinearSystem build_delta_system(const UnipotentAffineMap& map, int d, SolveMode mode, int threads) {
    LinearSystem sys;
    sys.basis = enumerate_monomials(map.variable_count(), d, mode);
    const size_t cols = sys.basis.size();
    sys.columns.assign(cols, {});

    std::map<Monomial, int, GrlexDesc> index;
    for (size_t i = 0; i < cols; ++i) index.emplace(sys.basis[i], static_cast<int>(i));

    auto fill = [&](size_t begin, size_t end) {
        for (size_t c = begin; c < end; ++c) {
            Polynomial img = map.delta(Polynomial::term(sys.basis[c], Rational(1)));
            std::map<int, Rational> col;
            for (const auto& [m, coeff] : img.terms()) {
                auto it = index.find(m);
                if (it == index.end())
                    throw std::logic_error("build_delta_system: image leaves the bounded space");
                col.emplace(it->second, coeff);
            }
            sys.columns[c] = std::move(col);
        }
    };

    int workers = std::max(1, std::min<int>(threads, static_cast<int>(cols)));
    if (workers == 1) {
        fill(0, cols);
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (cols + static_cast<size_t>(workers) - 1) / static_cast<size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            size_t b = static_cast<size_t>(w) * chunk;
            size_t e = std::min(cols, b + chunk);
            if (b >= e) break;
            pool.emplace_back(fill, b, e);
        }
        for (auto& t : pool) t.join();
    }
    return sys;
}

namespace {

InvariantBasis solve(const UnipotentAffineMap& map, int d, SolveMode mode, int threads) {
    if (d < 0) throw std::invalid_argument("solve: degree bound must be >= 0");
    LinearSystem sys = build_delta_system(map, d, mode, threads);
    const size_t nmono = sys.basis.size();

    RatMatrix a(nmono, RatRow(nmono, Rational(0)));
    for (size_t c = 0; c < nmono; ++c)
        for (const auto& [r, v] : sys.columns[c]) a[static_cast<size_t>(r)][c] = v;

    RatMatrix kernel = nullspace(a);
    InvariantBasis result{map.variable_count(), d, mode, {}};
    result.basis.reserve(kernel.size());
    for (const auto& vec : kernel) {
        Polynomial p(map.variable_count());
        for (size_t c = 0; c < nmono; ++c)
            if (!vec[c].is_zero()) p += Polynomial::term(sys.basis[c], vec[c]);
        result.basis.push_back(std::move(p));
    }
    return result;
}

RatRow vectorize(const Polynomial& p, const std::vector<Monomial>& basis) {
    std::map<Monomial, int, GrlexDesc> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    RatRow v(basis.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::invalid_argument("vectorize: polynomial outside the space");
        v[static_cast<size_t>(it->second)] = c;
    }
    return v;
}

}  // namespace

InvariantBasis solve_filtered(const UnipotentAffineMap& map, int d, int threads) {
    return solve(map, d, SolveMode::Filtered, threads);
}

InvariantBasis solve_graded(const UnipotentAffineMap& map, int d, int threads) {
    if (map.has_translation())
        throw std::invalid_argument("solve_graded: map must be translation free");
    return solve(map, d, SolveMode::Graded, threads);
}

bool InvariantBasis::contains(const Polynomial& p) const {
    if (p.variable_count() != variable_count) return false;
    auto monos = enumerate_monomials(variable_count, degree_bound, mode);
    RatMatrix rows;
    rows.reserve(basis.size());
    for (const auto& b : basis) rows.push_back(vectorize(b, monos));
    Echelon e = rref(rows);
    return in_row_span(e, vectorize(p, monos));
}

bool InvariantBasis::spans_same(const std::vector<Polynomial>& other) const {
    auto monos = enumerate_monomials(variable_count, degree_bound, mode);
    RatMatrix a, b;
    for (const auto& p : basis) a.push_back(vectorize(p, monos));
    for (const auto& p : other) b.push_back(vectorize(p, monos));
    return same_row_span(a, b);
}

std::vector<int> dimension_table(const UnipotentAffineMap& map, int d_max, SolveMode mode, int threads) {
    if (d_max < 0) throw std::invalid_argument("dimension_table: d_max must be >= 0");
    std::vector<int> dims;
    dims.reserve(static_cast<size_t>(d_max) + 1);
    for (int d = 0; d <= d_max; ++d) {
        InvariantBasis b = mode == SolveMode::Filtered ? solve_filtered(map, d, threads)
                                                       : solve_graded(map, d, threads);
        dims.push_back(b.dimension());
    }
    return dims;
}

}  // namespace uinv
