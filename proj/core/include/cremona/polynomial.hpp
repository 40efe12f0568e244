#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cremona/rational.hpp"
#include "cremona/registry.hpp"

namespace cremona {

/// Sparse exponent vector: (variable, exponent) pairs sorted by variable
/// index, no zero exponents stored.
class Monomial {
public:
    using Entry = std::pair<uint32_t, uint32_t>;  // (var index, exponent > 0)

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);
    static Monomial variable(VarId v, uint32_t exp = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    uint32_t total_degree() const;
    uint32_t degree_in(VarId v) const;

    Monomial operator*(const Monomial& o) const;
    /// Exact quotient; nullopt when o does not divide *this.
    std::optional<Monomial> divided_by(const Monomial& o) const;
    Monomial pow(uint32_t e) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<Entry> entries_;
};

/// Graded-lexicographic comparison on registry indices: higher total degree
/// first, ties broken by the exponent of the earliest-declared variable.
/// Returns <0, 0, >0 like a three-way compare; "greater" means "leading".
int compare_grlex(const Monomial& a, const Monomial& b);

struct MonomialGrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare_grlex(a, b) > 0;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// shared variable registry. Always canonical: terms sorted leading-first
/// under grlex, no duplicate monomials, no zero coefficients. The zero
/// polynomial has no terms. Structural equality of canonical forms is
/// polynomial equality.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        friend bool operator==(const Term& a, const Term& b) {
            return a.mono == b.mono && a.coeff == b.coeff;
        }
    };

    Polynomial() = default;
    explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {}
    Polynomial(RegistryPtr reg, const Rational& c);
    static Polynomial variable(RegistryPtr reg, VarId v);
    static Polynomial constant(RegistryPtr reg, const Rational& c);
    /// Canonicalizes an arbitrary term list (merges duplicates, drops zeros).
    static Polynomial from_terms(RegistryPtr reg, std::vector<Term> terms);

    const RegistryPtr& registry() const { return reg_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; error when not constant.
    Rational constant_value() const;
    uint32_t total_degree() const;  // zero polynomial -> 0
    uint32_t degree_in(VarId v) const;
    const Term& leading_term() const;  // error on zero

    bool contains_var(VarId v) const;
    std::vector<VarId> vars_used() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(uint32_t e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Formal partial derivative.
    Polynomial derivative(VarId v) const;

    /// Nonzero homogeneous parts, ascending degree; parts sum to *this.
    std::vector<std::pair<uint32_t, Polynomial>> homogeneous_components() const;
    bool is_homogeneous() const;
    /// Multiplies each term by chart^(degree - its degree). Requires chart
    /// absent from the polynomial and degree >= total_degree().
    Polynomial homogenized(VarId chart, uint32_t degree) const;

    /// Full evaluation; every used variable must be bound.
    Rational evaluate(const std::map<uint32_t, Rational>& point) const;

    /// Exact quotient; nullopt when d does not divide *this.
    std::optional<Polynomial> divided_exactly_by(const Polynomial& d) const;

    /// The coefficient polynomials of *this viewed in K[other vars][v];
    /// index = exponent of v. Empty vector for the zero polynomial.
    std::vector<Polynomial> coefficients_in(VarId v) const;

    /// Largest monomial dividing every term (1 for the zero polynomial).
    Monomial monomial_content() const;

private:
    void check_same_registry(const Polynomial& o) const;
    void normalize();

    RegistryPtr reg_;
    std::vector<Term> terms_;  // descending grlex
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// GCD over Q[x1..xn], normalized primitive with positive leading
/// coefficient (content over Q is discarded: gcd(2x, 4x) = x).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

}  // namespace cremona
