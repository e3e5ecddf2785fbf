#include "uinv/affine_map.hpp"

namespace uinv {

UnipotentAffineMap::UnipotentAffineMap(std::vector<std::vector<Rational>> matrix,
                                       std::vector<Rational> translation)
    : n_(static_cast<int>(matrix.size())), matrix_(std::move(matrix)), translation_(std::move(translation)) {
    if (n_ == 0) throw std::invalid_argument("UnipotentAffineMap: empty matrix");
    if (static_cast<int>(translation_.size()) != n_)
        throw std::invalid_argument("UnipotentAffineMap: translation dimension mismatch");
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(matrix_[i].size()) != n_)
            throw std::invalid_argument("UnipotentAffineMap: matrix is not square");
        if (!matrix_[i][i].is_one())
            throw std::invalid_argument("UnipotentAffineMap: diagonal must be all ones");
        for (int j = i + 1; j < n_; ++j)
            if (!matrix_[i][j].is_zero())
                throw std::invalid_argument("UnipotentAffineMap: matrix must be lower triangular");
    }
}

UnipotentAffineMap UnipotentAffineMap::affine_jordan(int n) {
    if (n < 2) throw std::invalid_argument("affine_jordan: need n >= 2");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        a[i][i] = Rational(1);
        if (i > 0) a[i][i - 1] = Rational(1);
    }
    std::vector<Rational> b(n, Rational(0));
    b[0] = Rational(-1);
    return UnipotentAffineMap(std::move(a), std::move(b));
}

UnipotentAffineMap UnipotentAffineMap::graded_jordan(int n_plus_1) {
    if (n_plus_1 < 2) throw std::invalid_argument("graded_jordan: need at least 2 variables");
    std::vector<std::vector<Rational>> a(n_plus_1, std::vector<Rational>(n_plus_1, Rational(0)));
    for (int i = 0; i < n_plus_1; ++i) {
        a[i][i] = Rational(1);
        if (i > 0) a[i][i - 1] = Rational(1);
    }
    return UnipotentAffineMap(std::move(a), std::vector<Rational>(n_plus_1, Rational(0)));
}

UnipotentAffineMap UnipotentAffineMap::identity(int n) {
    if (n < 1) throw std::invalid_argument("identity: need n >= 1");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) a[i][i] = Rational(1);
    return UnipotentAffineMap(std::move(a), std::vector<Rational>(n, Rational(0)));
}

bool UnipotentAffineMap::has_translation() const {
    for (const auto& t : translation_)
        if (!t.is_zero()) return true;
    return false;
}

Polynomial UnipotentAffineMap::variable_image(int i) const {
    Polynomial img = Polynomial::constant(n_, translation_[static_cast<size_t>(i)]);
    for (int j = 0; j <= i; ++j) {
        const Rational& a = matrix_[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (!a.is_zero()) img += a * Polynomial::variable(n_, j);
    }
    return img;
}

Polynomial UnipotentAffineMap::apply(const Polynomial& p) const {
    if (p.variable_count() != n_)
        throw std::invalid_argument("UnipotentAffineMap::apply: dimension mismatch");
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) images.push_back(variable_image(i));
    return p.substitute(images);
}

UnipotentAffineMap UnipotentAffineMap::inverse() const {
    // Forward-substitute A X = I; the inverse of a unit lower triangular matrix
    // is unit lower triangular.
    std::vector<std::vector<Rational>> inv(static_cast<size_t>(n_),
                                           std::vector<Rational>(static_cast<size_t>(n_), Rational(0)));
    for (int j = 0; j < n_; ++j) {
        inv[static_cast<size_t>(j)][static_cast<size_t>(j)] = Rational(1);
        for (int i = j + 1; i < n_; ++i) {
            Rational s(0);
            for (int k = j; k < i; ++k)
                s += matrix_[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     inv[static_cast<size_t>(k)][static_cast<size_t>(j)];
            inv[static_cast<size_t>(i)][static_cast<size_t>(j)] = -s;
        }
    }
    std::vector<Rational> b(static_cast<size_t>(n_), Rational(0));
    for (int i = 0; i < n_; ++i) {
        Rational s(0);
        for (int k = 0; k <= i; ++k)
            s += inv[static_cast<size_t>(i)][static_cast<size_t>(k)] * translation_[static_cast<size_t>(k)];
        b[static_cast<size_t>(i)] = -s;
    }
    return UnipotentAffineMap(std::move(inv), std::move(b));
}

UnipotentAffineMap UnipotentAffineMap::compose(const UnipotentAffineMap& inner) const {
    if (n_ != inner.n_) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n_),
                                         std::vector<Rational>(static_cast<size_t>(n_), Rational(0)));
    std::vector<Rational> b(static_cast<size_t>(n_), Rational(0));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            Rational s(0);
            for (int k = 0; k < n_; ++k)
                s += matrix_[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     inner.matrix_[static_cast<size_t>(k)][static_cast<size_t>(j)];
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
        }
        Rational s = translation_[static_cast<size_t>(i)];
        for (int k = 0; k < n_; ++k)
            s += matrix_[static_cast<size_t>(i)][static_cast<size_t>(k)] * inner.translation_[static_cast<size_t>(k)];
        b[static_cast<size_t>(i)] = s;
    }
    return UnipotentAffineMap(std::move(m), std::move(b));
}

Polynomial UnipotentAffineMap::delta(const Polynomial& p) const { return p - apply(p); }

UnipotentAffineMap make_affine_jordan(int n) { return UnipotentAffineMap::affine_jordan(n); }
UnipotentAffineMap make_graded_jordan(int n_plus_1) { return UnipotentAffineMap::graded_jordan(n_plus_1); }

}  // namespace uinv
