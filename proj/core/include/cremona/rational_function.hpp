#pragma once

#include <map>

#include "cremona/polynomial.hpp"

namespace cremona {

/// Reduced quotient of polynomials: den != 0, gcd(num, den) = 1, and the
/// denominator's leading coefficient is 1 under the monomial order. The
/// reduced form is unique, so structural equality is equality in the
/// function field.
class RationalFunction {
public:
    RationalFunction() = default;
    /// Reduces num/den. Error when den is zero.
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num);
    static RationalFunction variable(const RegistryPtr& reg, VarId v);
    static RationalFunction constant(const RegistryPtr& reg, const Rational& c);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const RegistryPtr& registry() const { return num_.registry(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    bool contains_var(VarId v) const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction pow(int32_t e) const;

    /// Quotient-rule derivative.
    RationalFunction derivative(VarId v) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

private:
    void reduce();

    Polynomial num_, den_;
};

using Bindings = std::map<uint32_t, RationalFunction>;  // var index -> value

/// Substitutes bindings into p; unbound variables pass through unchanged.
/// Exact, fully reduced; substitution is a ring homomorphism.
RationalFunction substitute(const Polynomial& p, const Bindings& b);

/// Substitution into a quotient. Error naming the denominator when it
/// vanishes identically under the bindings.
RationalFunction substitute(const RationalFunction& f, const Bindings& b);

/// The symmetric bilinear form of a homogeneous quadratic q: returns Phi
/// with 2*Phi(u,v) = q(u+v) - q(u) - q(v), expressed in the fresh variable
/// blocks u, v (one per variable of vars, in order). Error when q is not
/// homogeneous of degree 2.
Polynomial polar_form(const Polynomial& q, const std::vector<VarId>& vars,
                      const std::vector<VarId>& u_block, const std::vector<VarId>& v_block);

}  // namespace cremona
