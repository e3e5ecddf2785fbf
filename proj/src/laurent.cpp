#include "uinv/laurent.hpp"

#include <sstream>

namespace uinv {

int LaurentPolynomial::min_power() const {
    if (parts_.empty()) throw std::invalid_argument("LaurentPolynomial: zero has no powers");
    return parts_.begin()->first;
}

int LaurentPolynomial::max_power() const {
    if (parts_.empty()) throw std::invalid_argument("LaurentPolynomial: zero has no powers");
    return parts_.rbegin()->first;
}

Polynomial LaurentPolynomial::part(int power) const {
    auto it = parts_.find(power);
    return it == parts_.end() ? Polynomial::zero(nvars_) : it->second;
}

void LaurentPolynomial::add_part(int power, const Polynomial& p) {
    if (p.is_zero()) return;
    if (p.variable_count() != nvars_)
        throw std::invalid_argument("LaurentPolynomial: coefficient ring mismatch");
    auto [it, inserted] = parts_.emplace(power, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(nvars_);
    for (const auto& [k, p] : parts_) r.parts_.emplace(k, -p);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPolynomial: coefficient ring mismatch");
    for (const auto& [k, p] : o.parts_) add_part(k, p);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("LaurentPolynomial: coefficient ring mismatch");
    LaurentPolynomial r(a.nvars_);
    for (const auto& [ka, pa] : a.parts_)
        for (const auto& [kb, pb] : b.parts_) r.add_part(ka + kb, pa * pb);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [p, q] : parts_) r.parts_.emplace(p + k, q);
    return r;
}

std::string LaurentPolynomial::str(const std::string& x1_name, const VarNamer& coeff_namer) const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        int power = it->first;
        for (const auto& [m, c] : it->second.terms()) {
            bool neg = c.sign() < 0;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string mono;
            if (power != 0) {
                mono = x1_name;
                if (power != 1) mono += "^" + std::to_string(power);
            }
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += coeff_namer(i);
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            Rational a = c.abs();
            if (mono.empty())
                os << a.str();
            else if (a.is_one())
                os << mono;
            else
                os << a.str() << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace uinv
