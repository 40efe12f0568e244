#include "cremona/rational_function.hpp"
#include "cremona/text_io.hpp"

// Substitution works over a common denominator: with x_v -> n_v/d_v and
// E_v the largest exponent of v in p, the image is
//   sum_t c_t prod_v n_v^{e_v} d_v^{E_v - e_v}  /  prod_v d_v^{E_v},
// reduced once at the end. Powers of each n_v, d_v are cached.

namespace cremona {

namespace {

struct PowerCache {
    std::vector<Polynomial> powers;  // powers[k] = base^k
    explicit PowerCache(const Polynomial& base, uint32_t max) {
        powers.reserve(max + 1);
        powers.push_back(Polynomial::constant(base.registry(), 1));
        for (uint32_t k = 1; k <= max; ++k) powers.push_back(powers.back() * base);
    }
};

}  // namespace

RationalFunction substitute(const Polynomial& p, const Bindings& b) {
    const RegistryPtr& reg = p.registry();
    if (p.is_zero()) return RationalFunction(Polynomial(reg));

    // Max exponent per bound variable actually occurring in p.
    std::map<uint32_t, uint32_t> max_exp;
    bool any = false;
    for (auto& t : p.terms())
        for (auto& [v, e] : t.mono.entries())
            if (b.count(v)) {
                auto [it, fresh] = max_exp.try_emplace(v, e);
                if (!fresh) it->second = std::max(it->second, e);
                any = true;
            }
    if (!any) return RationalFunction(p);

    std::map<uint32_t, PowerCache> num_pows, den_pows;
    bool all_poly = true;
    for (auto& [v, e] : max_exp) {
        const RationalFunction& f = b.at(v);
        num_pows.try_emplace(v, f.num(), e);
        if (!f.is_polynomial()) all_poly = false;
        den_pows.try_emplace(v, f.den(), e);
    }

    Polynomial acc(reg);
    for (auto& t : p.terms()) {
        Polynomial prod = Polynomial::constant(reg, t.coeff);
        std::vector<Monomial::Entry> passthrough;
        for (auto& [v, e] : t.mono.entries()) {
            auto it = max_exp.find(v);
            if (it == max_exp.end()) {
                passthrough.push_back({v, e});
                continue;
            }
            prod = prod * num_pows.at(v).powers[e];
            if (!all_poly) {
                uint32_t pad = it->second - e;
                if (pad) prod = prod * den_pows.at(v).powers[pad];
            }
        }
        if (!passthrough.empty())
            prod = prod * Polynomial::from_terms(reg, {{Monomial(std::move(passthrough)),
                                                        Rational(1)}});
        // Terms not containing v at all still need the full d_v^{E_v} factor.
        if (!all_poly) {
            for (auto& [v, E] : max_exp)
                if (t.mono.degree_in(VarId{v}) == 0) prod = prod * den_pows.at(v).powers[E];
        }
        acc += prod;
    }
    if (all_poly) return RationalFunction(std::move(acc));
    Polynomial common_den = Polynomial::constant(reg, 1);
    for (auto& [v, E] : max_exp) common_den = common_den * den_pows.at(v).powers[E];
    return RationalFunction(std::move(acc), std::move(common_den));
}

RationalFunction substitute(const RationalFunction& f, const Bindings& b) {
    RationalFunction num = substitute(f.num(), b);
    RationalFunction den = substitute(f.den(), b);
    if (den.is_zero())
        throw error("denominator vanishes identically under substitution: " + to_text(f.den()));
    return num / den;
}

}  // namespace cremona
