#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uinv/monomial.hpp"
#include "uinv/rational.hpp"

namespace uinv {

struct ParseError : std::runtime_error {
    size_t position;  // 0-based offset into the input text
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Maps a variable index (0-based) to its display name.
using VarNamer = std::function<std::string(int)>;

/// Resolves an identifier to a variable index, or -1 if unknown.
using VarResolver = std::function<int(const std::string&)>;

VarNamer x_namer();

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are stored in graded-lex descending order and never with a zero
/// coefficient, so equality is term-map equality. Values are immutable in
/// practice: every operation returns a fresh polynomial.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDesc>;

    explicit Polynomial(int variable_count);

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);  // 0-based
    static Polynomial term(Monomial m, const Rational& c);

    int variable_count() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    /// Total degree; empty for the zero polynomial (the -infinity sentinel:
    /// std::nullopt compares below every engaged value).
    std::optional<int> degree() const;

    Rational coeff(const Monomial& m) const;
    Rational constant_term() const;
    bool is_homogeneous() const;
    bool uses_variable(int var) const;
    /// Largest exponent of the given variable over all terms (0 if absent).
    int degree_in(int var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }
    Polynomial pow(int e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Ring homomorphism sending variable i to images[i]. All images must share
    /// one variable count, which becomes the result's.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    /// Replaces a single variable, leaving the others alone.
    Polynomial substitute_one(int var, const Polynomial& image) const;

    /// Sum of the degree-d terms.
    Polynomial graded_component(int d) const;
    /// Highest graded component; rejects the zero polynomial.
    Polynomial leading_form() const;

    Polynomial derivative(int var) const;

    /// Same polynomial viewed in a larger ring (extra trailing variables).
    Polynomial embedded(int new_nvars) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    std::string str() const;
    std::string str(const VarNamer& namer) const;

    /// Parses the term grammar: terms joined by +/-, factors joined by *,
    /// integer or a/b coefficients, optional ^e powers, parentheses allowed.
    /// Variables are x1..xn.
    static Polynomial parse(std::string_view text, int variable_count);
    static Polynomial parse(std::string_view text, int variable_count, const VarResolver& resolver);

    /// Exact quotient a/b when b divides a; throws otherwise.
    friend Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

private:
    void add_term(const Monomial& m, const Rational& c);
    void check_same_ring(const Polynomial& o) const;

    int nvars_;
    TermMap terms_;
};

}  // namespace uinv
