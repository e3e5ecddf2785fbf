#include "uinv/rewrite.hpp"

#include <stdexcept>

#include "uinv/affine_map.hpp"
#include "uinv/exact_linalg.hpp"
#include "uinv/solver.hpp"

namespace uinv {

namespace {

// Generator whose top variable is x_j, and that variable's coefficient.
Polynomial symbol_generator(int n, int j) {
    if (j % 2 == 0) return u_generator(n, j / 2);
    return v_generator(n, (j - 1) / 2);
}

Rational symbol_leading_coeff(int j) {
    if (j % 2 == 0) {
        int k = j / 2;
        return (k % 2 == 1 ? Rational(2) : Rational(-2));
    }
    int k = (j - 1) / 2;
    return (k % 2 == 1 ? Rational(1 + 2 * k) : Rational(-(1 + 2 * k)));
}

VarNamer affine_symbol_namer() {
    return [](int i) { return i == 0 ? std::string("X1") : "T" + std::to_string(i + 1); };
}

VarNamer graded_symbol_namer(int m) {
    return [m](int i) {
        return i < m ? "P" + std::to_string(i + 1) : "Q" + std::to_string(i - m + 1);
    };
}

}  // namespace

std::string RewriteResult::str() const { return expression.str(affine_symbol_namer()); }

RewriteResult rewrite_affine(const Polynomial& f, int n) {
    if (n < 2) throw std::invalid_argument("rewrite_affine: need n >= 2");
    if (f.variable_count() != n) throw std::invalid_argument("rewrite_affine: variable count mismatch");

    // Working ring: x1..xn at slots 0..n-1, T2..Tn at slots n..2n-2.
    const int big = 2 * n - 1;
    Polynomial cur = f.embedded(big);
    for (int j = n; j >= 2; --j) {
        if (!cur.uses_variable(j - 1)) continue;
        Rational c = symbol_leading_coeff(j);
        Polynomial tail = symbol_generator(n, j).embedded(big) -
                          c * Polynomial::variable(big, j - 1);
        Polynomial image = Rational(1) / c *
                           (Polynomial::variable(big, n + j - 2) - tail);
        cur = cur.substitute_one(j - 1, image);
    }

    // Compress to the result ring: X1 at slot 0, T_{j+1} at slot j.
    Polynomial expr(n);
    for (const auto& [m, c] : cur.terms()) {
        Monomial rm(n);
        rm[0] = m[0];
        for (int j = 1; j < n; ++j) {
            if (m[j] != 0) throw std::logic_error("rewrite_affine: elimination left a raw variable");
            rm[j] = m[n + j - 1];
        }
        expr += Polynomial::term(rm, c);
    }
    return RewriteResult{n, expr, expr.degree_in(0)};
}

Polynomial rewrite_back_substitute(const RewriteResult& r) {
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(r.n));
    images.push_back(Polynomial::variable(r.n, 0));
    for (int j = 2; j <= r.n; ++j) images.push_back(symbol_generator(r.n, j));
    return r.expression.substitute(images);
}

LaurentPolynomial dehomogenize(const Polynomial& f) {
    int nv = f.variable_count();
    if (nv < 2) throw std::invalid_argument("dehomogenize: need at least two variables");
    int n = nv - 1;
    if (f.is_zero()) return LaurentPolynomial(n);
    if (!f.is_homogeneous()) throw std::invalid_argument("dehomogenize: input is not homogeneous");
    int d = *f.degree();
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(nv));
    images.push_back(Polynomial::constant(n, Rational(-1)));
    for (int i = 1; i <= n; ++i) images.push_back(Polynomial::variable(n, i - 1));
    Polynomial g = f.substitute(images);
    if (d % 2 == 1) g = -g;
    return LaurentPolynomial::from_part(d, g);
}

Polynomial rehomogenize(const LaurentPolynomial& l) {
    int n = l.coeff_variable_count();
    Polynomial out(n + 1);
    for (const auto& [power, g] : l.parts()) {
        if (power < 0) throw std::invalid_argument("rehomogenize: negative x1 power");
        out += rehomogenize_z(g, power);
    }
    return out;
}

std::string GradedRewriteResult::str() const {
    return expression.str("X1", graded_symbol_namer(quadratic_count(n)));
}

GradedRewriteResult rewrite_graded(const Polynomial& f) {
    int nv = f.variable_count();
    if (nv < 3) throw std::invalid_argument("rewrite_graded: need at least three variables");
    int n = nv - 1;
    int m = quadratic_count(n);
    int mu = mu_count(n);
    if (f.is_zero()) return GradedRewriteResult{n, LaurentPolynomial(m + mu)};
    if (!f.is_homogeneous()) throw std::invalid_argument("rewrite_graded: input is not homogeneous");
    if (!make_graded_jordan(nv).is_invariant(f))
        throw std::invalid_argument("rewrite_graded: input is not invariant");

    int d = *f.degree();
    LaurentPolynomial deh = dehomogenize(f);
    RewriteResult rw = rewrite_affine(deh.part(d), n);
    if (rw.residual_x1_degree != 0)
        throw std::logic_error("rewrite_graded: invariant left a residual x1");

    // T_{2k} = u_k(z) = P_k X1^-2, T_{2k+1} = v_k(z) = Q_k X1^-3,
    // and the whole expression carries the factor X1^d.
    LaurentPolynomial out(m + mu);
    for (const auto& [mono, c] : rw.expression.terms()) {
        Monomial sym(m + mu);
        int shift = d;
        for (int j = 2; j <= n; ++j) {
            int e = mono[j - 1];
            if (e == 0) continue;
            if (j % 2 == 0) {
                sym[j / 2 - 1] = e;
                shift -= 2 * e;
            } else {
                sym[m + (j - 1) / 2 - 1] = e;
                shift -= 3 * e;
            }
        }
        out.add_part(shift, Polynomial::term(sym, c));
    }
    return GradedRewriteResult{n, out};
}

std::pair<Polynomial, int> graded_back_substitute(const GradedRewriteResult& r) {
    int n = r.n;
    int nv = n + 1;
    int m = quadratic_count(n);
    int mu = mu_count(n);
    int clear = r.expression.is_zero() ? 0 : std::max(0, -r.expression.min_power());

    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(m + mu));
    for (int k = 1; k <= m; ++k) images.push_back(graded_generator(GradedKind::P, n, k));
    for (int k = 1; k <= mu; ++k) images.push_back(q_hat(n, k));

    Polynomial x1 = Polynomial::variable(nv, 0);
    Polynomial out(nv);
    for (const auto& [power, part] : r.expression.parts())
        out += x1.pow(power + clear) * part.substitute(images);
    return {out, clear};
}

bool verify_relation(int n) {
    if (n == 3) {
        GeneratorSet g = special_generators(3);
        Polynomial x1 = g.at("x1"), p1 = g.at("p1"), q1 = g.at("q1"), s = g.at("s");
        Polynomial lhs = x1.pow(2) * s;
        Polynomial rhs = q1.pow(2) + Rational(3) * (x1 * p1 * q1) - p1.pow(3) +
                         Rational(2) * (x1.pow(2) * p1.pow(2));
        return lhs == rhs;
    }
    if (n == 4) {
        GeneratorSet g = special_generators(4);
        Polynomial x1 = g.at("x1"), p1 = g.at("p1"), q1 = g.at("q1"), p2 = g.at("p2"), t = g.at("t");
        Polynomial lhs = x1.pow(3) * t;
        Polynomial rhs = q1.pow(2) - p1.pow(3) + Rational(3) * (x1 * p1 * q1) +
                         Rational(2) * (x1.pow(2) * p1.pow(2)) +
                         Rational(3) * (x1.pow(2) * (p1 * p2));
        return lhs == rhs;
    }
    throw std::invalid_argument("verify_relation: only n = 3 and n = 4 have stored relations");
}

std::vector<Polynomial> graded_basis(int n, int i) {
    if (n < 1 || n > 4) throw std::invalid_argument("graded_basis: only n = 1..4 are supported");
    if (i < 0) throw std::invalid_argument("graded_basis: negative degree");
    GeneratorSet gens = special_generators(n);

    // generator list with degrees and the index whose exponent is capped at 1
    std::vector<Polynomial> polys;
    std::vector<int> degs;
    int capped = -1;
    for (size_t idx = 0; idx < gens.members.size(); ++idx) {
        polys.push_back(gens.members[idx].poly);
        degs.push_back(gens.members[idx].degree);
        if (gens.members[idx].name == "q1" && n >= 3) capped = static_cast<int>(idx);
    }

    std::vector<Polynomial> out;
    std::vector<int> expo(polys.size(), 0);
    auto emit = [&]() {
        Polynomial prod = Polynomial::constant(n + 1, Rational(1));
        for (size_t j = 0; j < polys.size(); ++j)
            if (expo[j] > 0) prod = prod * polys[j].pow(expo[j]);
        out.push_back(std::move(prod));
    };
    // lexicographic scan over exponent tuples with the weighted-degree target
    std::function<void(size_t, int)> walk = [&](size_t j, int rem) {
        if (j == polys.size()) {
            if (rem == 0) emit();
            return;
        }
        int top = degs[j] == 0 ? 0 : rem / degs[j];
        if (static_cast<int>(j) == capped) top = std::min(top, 1);
        for (int e = top; e >= 0; --e) {
            expo[j] = e;
            walk(j + 1, rem - e * degs[j]);
        }
        expo[j] = 0;
    };
    walk(0, i);

    if (!out.empty()) {
        auto monos = enumerate_monomials(n + 1, i, SolveMode::Graded);
        std::map<Monomial, int, GrlexDesc> index;
        for (size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], static_cast<int>(k));
        RatMatrix rows;
        for (const auto& p : out) {
            RatRow v(monos.size(), Rational(0));
            for (const auto& [mo, c] : p.terms()) v[static_cast<size_t>(index.at(mo))] = c;
            rows.push_back(std::move(v));
        }
        if (rank(std::move(rows)) != static_cast<int>(out.size()))
            throw std::logic_error("graded_basis: enumerated monomials are dependent");
    }
    return out;
}

bool check_u_in_y(int n, int k, UVKind kind) {
    Polynomial g = kind == UVKind::U ? u_generator(n, k) : v_generator(n, k);
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(n));
    images.push_back(Polynomial::zero(n));
    for (int i = 1; i <= n - 1; ++i) images.push_back(y_generator(n, i));
    return g.substitute(images) == g;
}

bool check_localization_identity(const Polynomial& f) {
    int nv = f.variable_count();
    if (nv < 2) throw std::invalid_argument("check_localization_identity: need at least two variables");
    if (!f.is_homogeneous()) throw std::invalid_argument("check_localization_identity: not homogeneous");
    int n = nv - 1;
    std::vector<Polynomial> direct, via_y;
    direct.push_back(Polynomial::constant(n, Rational(-1)));
    via_y.push_back(Polynomial::constant(n, Rational(-1)));
    via_y.push_back(Polynomial::zero(n));
    for (int i = 1; i <= n; ++i) direct.push_back(Polynomial::variable(n, i - 1));
    for (int i = 1; i <= n - 1; ++i) via_y.push_back(y_generator(n, i));
    return f.substitute(direct) == f.substitute(via_y);
}

}  // namespace uinv
