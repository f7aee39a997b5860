#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace isw::poly {

using Int = boost::multiprecision::cpp_int;

/// Monomial order: total degree first, then lexicographic by exponent vector,
/// both descending. Map iteration therefore yields the canonical print order.
struct GradedLexGreater {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

/// Canonical multivariate integer polynomial. Terms map exponent vectors to
/// non-zero coefficients; the zero polynomial has an empty map. Variables are
/// ordered by first appearance and every stored variable occurs in some term.
class Polynomial {
public:
    using ExpVec = std::vector<unsigned>;
    using TermMap = std::map<ExpVec, Int, GradedLexGreater>;

    Polynomial() = default;

    static Polynomial constant(Int c);
    static Polynomial variable(std::string name);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t variable_count() const { return vars_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Exact value at an integer point; point length must match the variable
    /// count (DimensionError otherwise).
    Int evaluate(const std::vector<Int>& point) const;

    Polynomial operator-() const;
    Polynomial pow(unsigned long long e) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// Canonical forms are equal when they agree term-for-term with variables
    /// matched by name; the storage order of the variables is immaterial.
    bool operator==(const Polynomial& rhs) const;

private:
    void normalize();

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Parse an equation left-hand side. Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" nat)?
///   base   := nat | ident | "(" expr ")" | "-" factor
/// Multiplication is always explicit. Throws ParseError with a 0-based byte
/// offset on bad input.
Polynomial parse(std::string_view text);

/// Deterministic text form; parse(print_canonical(p)) == p.
std::string print_canonical(const Polynomial& p);

/// D(x) -> D(x)^2 + sum_i (x_i - y_i^2)^2 over fresh y variables, appended
/// after the x's. Zero at an integer point iff D(x) = 0 with every x_i a
/// perfect square.
Polynomial to_hilbert_tenth_instance(const Polynomial& p);

}  // namespace isw::poly
