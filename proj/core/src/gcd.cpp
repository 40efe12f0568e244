#include <algorithm>

#include "cremona/polynomial.hpp"
#include "cremona/text_io.hpp"

// Multivariate gcd over Q[x1..xn]: rational content is stripped, the integer
// primitive parts are handled by recursion on the main variable (content of
// the coefficient ring times a subresultant PRS on the primitive parts).
// Every result is checked by exact division before it is returned.

namespace cremona {

namespace {

// p scaled to integer coefficients with content 1 and positive leading
// coefficient. Zero stays zero.
Polynomial primitive_over_z(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1, num_gcd = 0;
    for (auto& t : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    for (auto& t : p.terms()) {
        Integer n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (p.leading_term().coeff < 0) scale = -scale;
    return p * scale;
}

VarId highest_var(const Polynomial& a, const Polynomial& b) {
    uint32_t best = 0;
    bool found = false;
    for (const Polynomial* p : {&a, &b})
        for (auto& t : p->terms())
            for (auto& [v, e] : t.mono.entries())
                if (!found || v > best) best = v, found = true;
    return VarId{best};
}

Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b);

// gcd of the coefficient list (the content of a polynomial in K[rest][v]).
Polynomial coeff_content(const RegistryPtr& reg, const std::vector<Polynomial>& cs) {
    Polynomial g(reg);
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? primitive_over_z(c) : gcd_primitive(g, c);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? Polynomial::constant(reg, 1) : g;
}

Polynomial rebuild(const RegistryPtr& reg, VarId v, const std::vector<Polynomial>& cs) {
    Polynomial r(reg);
    for (size_t e = 0; e < cs.size(); ++e)
        if (!cs[e].is_zero())
            r += cs[e] * Polynomial::variable(reg, v).pow(static_cast<uint32_t>(e));
    return r;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
    auto q = p.divided_exactly_by(d);
    if (!q) throw error("internal: inexact division in gcd");
    return *q;
}

struct PolyInV {
    std::vector<Polynomial> c;  // c[e] = coefficient of v^e
    int deg() const {
        for (int e = static_cast<int>(c.size()) - 1; e >= 0; --e)
            if (!c[e].is_zero()) return e;
        return -1;
    }
    const Polynomial& lc() const { return c[deg()]; }
    bool zero() const { return deg() < 0; }
};

PolyInV mul_coeff(const PolyInV& p, const Polynomial& m) {
    PolyInV r = p;
    for (auto& x : r.c) x = x * m;
    return r;
}

PolyInV sub_shifted(const PolyInV& p, const PolyInV& q, int shift) {
    PolyInV r = p;
    if (r.c.size() < q.c.size() + shift) r.c.resize(q.c.size() + shift, Polynomial(q.c[0].registry()));
    for (size_t e = 0; e < q.c.size(); ++e) r.c[e + shift] -= q.c[e];
    return r;
}

// Pseudo-remainder of A by B in v: lc(B)^(degA-degB+1) * A mod B.
PolyInV pseudo_rem(PolyInV A, const PolyInV& B) {
    int db = B.deg();
    int e = A.deg() - db + 1;
    while (!A.zero() && A.deg() >= db) {
        int shift = A.deg() - db;
        PolyInV t = mul_coeff(B, A.lc());
        A = sub_shifted(mul_coeff(A, B.lc()), t, shift);
        --e;
    }
    if (e > 0) {
        Polynomial f = B.lc().pow(static_cast<uint32_t>(e));
        A = mul_coeff(A, f);
    }
    return A;
}

// Subresultant PRS on primitive inputs with positive degree in v.
Polynomial prs_gcd(const RegistryPtr& reg, VarId v, PolyInV A, PolyInV B) {
    if (A.deg() < B.deg()) std::swap(A, B);
    Polynomial g = Polynomial::constant(reg, 1);
    Polynomial h = g;
    for (;;) {
        int delta = A.deg() - B.deg();
        PolyInV R = pseudo_rem(A, B);
        if (R.zero()) {
            Polynomial pp = rebuild(reg, v, B.c);
            return exact_div(pp, coeff_content(reg, B.c));
        }
        if (R.deg() == 0) return Polynomial::constant(reg, 1);
        Polynomial divisor = g * h.pow(static_cast<uint32_t>(delta));
        A = B;
        B = R;
        for (auto& x : B.c) x = exact_div(x, divisor);
        g = A.lc();
        if (delta > 0) {
            Polynomial gd = g.pow(static_cast<uint32_t>(delta));
            h = delta == 1 ? gd : exact_div(gd, h.pow(static_cast<uint32_t>(delta - 1)));
        }
    }
}

// Both arguments primitive over Z, nonzero.
Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b) {
    const RegistryPtr& reg = a.registry() ? a.registry() : b.registry();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(reg, 1);
    if (a == b) return a;
    // Common monomial factor first; it is cheap and frequent.
    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    if (!ma.is_one() || !mb.is_one()) {
        std::vector<Monomial::Entry> common;
        const auto &ea = ma.entries(), &eb = mb.entries();
        size_t i = 0, j = 0;
        while (i < ea.size() && j < eb.size()) {
            if (ea[i].first < eb[j].first)
                ++i;
            else if (ea[i].first > eb[j].first)
                ++j;
            else {
                common.push_back({ea[i].first, std::min(ea[i].second, eb[j].second)});
                ++i, ++j;
            }
        }
        Polynomial am = a, bm = b;
        if (!ma.is_one())
            am = exact_div(a, Polynomial::from_terms(reg, {{ma, Rational(1)}}));
        if (!mb.is_one())
            bm = exact_div(b, Polynomial::from_terms(reg, {{mb, Rational(1)}}));
        Polynomial base = gcd_primitive(am, bm);
        Polynomial cm =
            Polynomial::from_terms(reg, {{Monomial(std::move(common)), Rational(1)}});
        return base * cm;
    }
    // Quick exits: one dividing the other.
    if (a.terms().size() <= b.terms().size() && b.divided_exactly_by(a)) return a;
    if (b.terms().size() < a.terms().size() && a.divided_exactly_by(b)) return b;

    VarId v = highest_var(a, b);
    auto ca = a.coefficients_in(v);
    auto cb = b.coefficients_in(v);
    Polynomial cont_a = coeff_content(reg, ca);
    Polynomial cont_b = coeff_content(reg, cb);
    Polynomial c = cont_a.is_constant() || cont_b.is_constant()
                       ? Polynomial::constant(reg, 1)
                       : gcd_primitive(cont_a, cont_b);
    PolyInV pa{ca}, pb{cb};
    for (auto& x : pa.c) x = exact_div(x, cont_a);
    for (auto& x : pb.c) x = exact_div(x, cont_b);
    if (pa.deg() == 0 || pb.deg() == 0) return c;
    return c * prs_gcd(reg, v, std::move(pa), std::move(pb));
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    const RegistryPtr& reg = a.registry() ? a.registry() : b.registry();
    if (a.is_zero() && b.is_zero()) return Polynomial(reg);
    if (a.is_zero()) return primitive_over_z(b);
    if (b.is_zero()) return primitive_over_z(a);
    Polynomial pa = primitive_over_z(a);
    Polynomial pb = primitive_over_z(b);
    Polynomial g = primitive_over_z(gcd_primitive(pa, pb));
    if (!a.divided_exactly_by(g) || !b.divided_exactly_by(g))
        throw error("internal: gcd fails the divisibility check on " + to_text(a) + " , " +
                    to_text(b));
    return g;
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.registry() ? a.registry() : b.registry());
    Polynomial g = poly_gcd(a, b);
    auto q = a.divided_exactly_by(g);
    Polynomial l = *q * b;
    return Polynomial(primitive_over_z(l));
}

}  // namespace cremona
