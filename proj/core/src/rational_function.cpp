#include "cremona/rational_function.hpp"

#include "cremona/text_io.hpp"

namespace cremona {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw error("rational function with zero denominator (numerator " + to_text(num_) + ")");
    reduce();
}

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)) {
    den_ = Polynomial::constant(num_.registry(), 1);
}

RationalFunction RationalFunction::variable(const RegistryPtr& reg, VarId v) {
    return RationalFunction(Polynomial::variable(reg, v));
}

RationalFunction RationalFunction::constant(const RegistryPtr& reg, const Rational& c) {
    return RationalFunction(Polynomial::constant(reg, c));
}

bool RationalFunction::is_polynomial() const { return den_.is_constant(); }

bool RationalFunction::contains_var(VarId v) const {
    return num_.contains_var(v) || den_.contains_var(v);
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(den_.registry(), 1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divided_exactly_by(g);
            den_ = *den_.divided_exactly_by(g);
        }
    }
    Rational lc = den_.leading_term().coeff;
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero()) throw error("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(int32_t e) const {
    if (e < 0) {
        if (num_.is_zero()) throw error("negative power of zero");
        return RationalFunction(den_.pow(static_cast<uint32_t>(-e)),
                                num_.pow(static_cast<uint32_t>(-e)));
    }
    return RationalFunction(num_.pow(static_cast<uint32_t>(e)),
                            den_.pow(static_cast<uint32_t>(e)));
}

RationalFunction RationalFunction::derivative(VarId v) const {
    if (is_polynomial()) {
        Rational c = den_.constant_value();
        return RationalFunction(num_.derivative(v) * (1 / c));
    }
    Polynomial n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return RationalFunction(std::move(n), den_ * den_);
}

Polynomial polar_form(const Polynomial& q, const std::vector<VarId>& vars,
                      const std::vector<VarId>& u_block, const std::vector<VarId>& v_block) {
    if (q.is_zero() || !q.is_homogeneous() || q.total_degree() != 2)
        throw error("polar form requires a homogeneous quadratic, got " + to_text(q));
    if (u_block.size() != vars.size() || v_block.size() != vars.size())
        throw error("polar form: fresh blocks must match the variable count");
    const RegistryPtr& reg = q.registry();
    Bindings upv, u, v;
    for (size_t i = 0; i < vars.size(); ++i) {
        RationalFunction ui = RationalFunction::variable(reg, u_block[i]);
        RationalFunction vi = RationalFunction::variable(reg, v_block[i]);
        u[vars[i].index] = ui;
        v[vars[i].index] = vi;
        upv[vars[i].index] = ui + vi;
    }
    RationalFunction phi2 = substitute(q, upv) - substitute(q, u) - substitute(q, v);
    if (!phi2.is_polynomial()) throw error("internal: polarization produced a denominator");
    return phi2.num() * Rational(1, 2) * (1 / phi2.den().constant_value());
}

}  // namespace cremona
