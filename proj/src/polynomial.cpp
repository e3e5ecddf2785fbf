#include "uinv/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace uinv {

VarNamer x_namer() {
    return [](int i) { return "x" + std::to_string(i + 1); };
}

Polynomial::Polynomial(int variable_count) : nvars_(variable_count) {
    if (variable_count < 0) throw std::invalid_argument("Polynomial: negative variable count");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("Polynomial::variable: index out of range");
    Monomial m(nvars);
    m[index] = 1;
    Polynomial p(nvars);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
    Polynomial p(m.nvars());
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();  // leading term has the max degree
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coeff(Monomial(nvars_)); }

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;  // grlex: first and last bracket the degrees
}

bool Polynomial::uses_variable(int var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] > 0) return true;
    return false;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: mismatched variable counts");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    // accumulate into the smaller-times-larger product term by term
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Polynomial::pow: negative power");
    Polynomial r = Polynomial::constant(nvars_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

namespace {
// Incremental power cache: powers[e] = base^e, extended on demand.
class PowerCache {
public:
    explicit PowerCache(const Polynomial& base)
        : base_(base), powers_{Polynomial::constant(base.variable_count(), Rational(1))} {}
    const Polynomial& get(int e) {
        while (static_cast<int>(powers_.size()) <= e) powers_.push_back(powers_.back() * base_);
        return powers_[static_cast<size_t>(e)];
    }

private:
    Polynomial base_;
    std::vector<Polynomial> powers_;
};
}  // namespace

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("Polynomial::substitute: image count does not match variable count");
    int target = nvars_ == 0 ? 0 : images.front().variable_count();
    for (const auto& img : images)
        if (img.variable_count() != target)
            throw std::invalid_argument("Polynomial::substitute: images live in different rings");

    std::vector<PowerCache> caches;
    caches.reserve(images.size());
    for (const auto& img : images) caches.emplace_back(img);

    Polynomial result(target);
    for (const auto& [m, c] : terms_) {
        Polynomial acc = Polynomial::constant(target, c);
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) acc = acc * caches[static_cast<size_t>(i)].get(m[i]);
        result += acc;
    }
    return result;
}

Polynomial Polynomial::substitute_one(int var, const Polynomial& image) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("Polynomial::substitute_one: bad variable");
    if (image.variable_count() != nvars_)
        throw std::invalid_argument("Polynomial::substitute_one: image in a different ring");
    PowerCache cache(image);
    Polynomial result(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) {
            result.add_term(m, c);
            continue;
        }
        Monomial rest = m;
        rest[var] = 0;
        result += Polynomial::term(rest, c) * cache.get(e);
    }
    return result;
}

Polynomial Polynomial::graded_component(int d) const {
    Polynomial r(nvars_);
    if (d < 0) return r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::leading_form() const {
    auto d = degree();
    if (!d) throw std::invalid_argument("leading_form: zero polynomial");
    return graded_component(*d);
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("Polynomial::derivative: bad variable");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) continue;
        Monomial dm = m;
        dm[var] = e - 1;
        r.add_term(dm, c * Rational(e));
    }
    return r;
}

Polynomial Polynomial::embedded(int new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("Polynomial::embedded: shrinking ring");
    Polynomial r(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_nvars);
        for (int i = 0; i < nvars_; ++i) nm[i] = m[i];
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("Polynomial::evaluate: point dimension mismatch");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) v *= uinv::pow(point[static_cast<size_t>(i)], m[i]);
        total += v;
    }
    return total;
}

std::string Polynomial::str() const { return str(x_namer()); }

std::string Polynomial::str(const VarNamer& namer) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = c.abs();
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += namer(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            os << a.str();
        else if (a.is_one())
            os << mono;
        else
            os << a.str() << "*" << mono;
    }
    return os.str();
}

namespace {

class Parser {
public:
    Parser(std::string_view text, int nvars, const VarResolver& resolver)
        : text_(text), nvars_(nvars), resolver_(resolver) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    Polynomial parse_expr() {
        Polynomial acc(nvars_);
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        acc += sign(parse_term(), neg);
        while (true) {
            if (accept('+'))
                acc += parse_term();
            else if (accept('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    static Polynomial sign(Polynomial p, bool neg) { return neg ? -p : p; }

    // term := factor ('*' factor)*
    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    // factor := atom ['^' uint]
    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (accept('^')) {
            size_t at = pos_;
            long e = parse_uint();
            if (e < 1) throw ParseError("power must be >= 1", at);
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    // atom := '(' expr ')' | number | var
    Polynomial parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_var();
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial parse_number() {
        Integer num = parse_integer();
        if (peek_is('/')) {
            ++pos_;
            size_t at = pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected denominator", at);
            Integer den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", at);
            return Polynomial::constant(nvars_, Rational(num, den));
        }
        return Polynomial::constant(nvars_, Rational(num));
    }

    Integer parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    long parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial parse_var() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        int idx = resolver_(name);
        if (idx < 0 || idx >= nvars_)
            throw ParseError("unknown variable '" + name + "'", start);
        return Polynomial::variable(nvars_, idx);
    }

    std::string_view text_;
    int nvars_;
    const VarResolver& resolver_;
    size_t pos_ = 0;
};

VarResolver default_x_resolver(int nvars) {
    return [nvars](const std::string& name) -> int {
        if (name.size() < 2 || name[0] != 'x') return -1;
        for (size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
        long idx = std::stol(name.substr(1));
        if (idx < 1 || idx > nvars) return -1;
        return static_cast<int>(idx - 1);
    };
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int variable_count) {
    return parse(text, variable_count, default_x_resolver(variable_count));
}

Polynomial Polynomial::parse(std::string_view text, int variable_count, const VarResolver& resolver) {
    Parser p(text, variable_count, resolver);
    return p.run();
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    const int n = a.variable_count();
    const auto& [lead_m, lead_c] = *b.terms().begin();
    Polynomial rem = a, quot(n);
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        Monomial q(n);
        for (int i = 0; i < n; ++i) {
            q[i] = rm[i] - lead_m[i];
            if (q[i] < 0) throw std::invalid_argument("divide_exact: not divisible");
        }
        Polynomial t = Polynomial::term(q, rc / lead_c);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

}  // namespace uinv
