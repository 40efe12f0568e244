#include "cremona/polynomial.hpp"

#include <algorithm>

#include "cremona/text_io.hpp"

namespace cremona {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].second == 0) throw error("zero exponent in monomial");
        if (i + 1 < entries_.size() && entries_[i].first == entries_[i + 1].first)
            throw error("duplicate variable in monomial");
    }
}

Monomial Monomial::variable(VarId v, uint32_t exp) {
    if (exp == 0) return Monomial{};
    return Monomial({{v.index, exp}});
}

uint32_t Monomial::total_degree() const {
    uint32_t d = 0;
    for (auto& [v, e] : entries_) d += e;
    return d;
}

uint32_t Monomial::degree_in(VarId v) const {
    for (auto& [w, e] : entries_)
        if (w == v.index) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    size_t i = 0, j = 0;
    while (i < entries_.size() && j < o.entries_.size()) {
        if (entries_[i].first < o.entries_[j].first)
            r.entries_.push_back(entries_[i++]);
        else if (entries_[i].first > o.entries_[j].first)
            r.entries_.push_back(o.entries_[j++]);
        else {
            r.entries_.push_back({entries_[i].first, entries_[i].second + o.entries_[j].second});
            ++i, ++j;
        }
    }
    for (; i < entries_.size(); ++i) r.entries_.push_back(entries_[i]);
    for (; j < o.entries_.size(); ++j) r.entries_.push_back(o.entries_[j]);
    return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    size_t i = 0;
    for (auto& [v, e] : o.entries_) {
        while (i < entries_.size() && entries_[i].first < v) r.entries_.push_back(entries_[i++]);
        if (i == entries_.size() || entries_[i].first != v || entries_[i].second < e)
            return std::nullopt;
        if (entries_[i].second > e) r.entries_.push_back({v, entries_[i].second - e});
        ++i;
    }
    for (; i < entries_.size(); ++i) r.entries_.push_back(entries_[i]);
    return r;
}

Monomial Monomial::pow(uint32_t e) const {
    if (e == 0) return Monomial{};
    Monomial r = *this;
    for (auto& [v, x] : r.entries_) x *= e;
    return r;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Lex on the dense exponent vectors: the first differing variable (by
    // registry index) decides; the higher exponent there wins.
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first < eb[j].first) return 1;   // a has positive exponent where b has 0
        if (ea[i].first > eb[j].first) return -1;
        if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second ? -1 : 1;
        ++i, ++j;
    }
    if (i < ea.size()) return 1;
    if (j < eb.size()) return -1;
    return 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RegistryPtr reg, const Rational& c) : reg_(std::move(reg)) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(RegistryPtr reg, VarId v) {
    Polynomial p(std::move(reg));
    p.terms_.push_back({Monomial::variable(v), Rational(1)});
    return p;
}

Polynomial Polynomial::constant(RegistryPtr reg, const Rational& c) {
    return Polynomial(std::move(reg), c);
}

Polynomial Polynomial::from_terms(RegistryPtr reg, std::vector<Term> terms) {
    Polynomial p(std::move(reg));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return compare_grlex(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw error("polynomial is not constant: " + to_text(*this));
    return terms_[0].coeff;
}

uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_[0].mono.total_degree();
}

uint32_t Polynomial::degree_in(VarId v) const {
    uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
    return d;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw error("zero polynomial has no leading term");
    return terms_[0];
}

bool Polynomial::contains_var(VarId v) const {
    for (auto& t : terms_)
        if (t.mono.degree_in(v) > 0) return true;
    return false;
}

std::vector<VarId> Polynomial::vars_used() const {
    std::vector<uint32_t> idx;
    for (auto& t : terms_)
        for (auto& [v, e] : t.mono.entries()) idx.push_back(v);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::vector<VarId> out;
    out.reserve(idx.size());
    for (auto v : idx) out.push_back(VarId{v});
    return out;
}

void Polynomial::check_same_registry(const Polynomial& o) const {
    if (reg_ && o.reg_ && reg_ != o.reg_)
        throw error("operands belong to different variable registries");
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_registry(o);
    Polynomial r(reg_ ? reg_ : o.reg_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare_grlex(terms_[i].mono, o.terms_[j].mono);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_registry(o);
    Polynomial r(reg_ ? reg_ : o.reg_);
    if (terms_.empty() || o.terms_.empty()) return r;
    uint32_t limit = max_total_degree();
    if (total_degree() + o.total_degree() > limit)
        throw degree_limit_error("product degree " +
                                 std::to_string(total_degree() + o.total_degree()) +
                                 " exceeds the total-degree guard (" + std::to_string(limit) +
                                 ")");
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_) prods.push_back({a.mono * b.mono, a.coeff * b.coeff});
    r.terms_ = std::move(prods);
    r.normalize();
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(reg_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::pow(uint32_t e) const {
    Polynomial r = constant(reg_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(VarId v) const {
    Polynomial r(reg_);
    for (auto& t : terms_) {
        uint32_t e = t.mono.degree_in(v);
        if (e == 0) continue;
        Monomial m = *t.mono.divided_by(Monomial::variable(v));
        r.terms_.push_back({std::move(m), t.coeff * e});
    }
    r.normalize();
    return r;
}

std::vector<std::pair<uint32_t, Polynomial>> Polynomial::homogeneous_components() const {
    std::map<uint32_t, Polynomial> parts;
    for (auto& t : terms_) {
        auto [it, fresh] = parts.try_emplace(t.mono.total_degree(), reg_);
        it->second.terms_.push_back(t);
    }
    std::vector<std::pair<uint32_t, Polynomial>> out;
    for (auto& [d, p] : parts) {
        p.normalize();
        out.emplace_back(d, std::move(p));
    }
    return out;
}

bool Polynomial::is_homogeneous() const {
    for (auto& t : terms_)
        if (t.mono.total_degree() != total_degree()) return false;
    return true;
}

Polynomial Polynomial::homogenized(VarId chart, uint32_t degree) const {
    if (contains_var(chart))
        throw error("homogenization variable '" + reg_->name_of(chart) +
                    "' already occurs in the polynomial");
    if (degree < total_degree()) throw error("homogenization degree below total degree");
    Polynomial r(reg_);
    for (auto& t : terms_) {
        uint32_t pad = degree - t.mono.total_degree();
        r.terms_.push_back({t.mono * Monomial::variable(chart, pad), t.coeff});
    }
    r.normalize();
    return r;
}

Rational Polynomial::evaluate(const std::map<uint32_t, Rational>& point) const {
    Rational acc(0);
    for (auto& t : terms_) {
        Rational v = t.coeff;
        for (auto& [var, e] : t.mono.entries()) {
            auto it = point.find(var);
            if (it == point.end())
                throw error("evaluate: unbound variable '" + reg_->name_of(VarId{var}) + "'");
            Rational pw(1);
            Rational base = it->second;
            for (uint32_t k = 0; k < e; ++k) pw *= base;
            v *= pw;
        }
        acc += v;
    }
    return acc;
}

std::optional<Polynomial> Polynomial::divided_exactly_by(const Polynomial& d) const {
    check_same_registry(d);
    if (d.is_zero()) throw error("division by the zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(reg_);
    const Term& lt_d = d.leading_term();
    while (!rem.is_zero()) {
        auto m = rem.leading_term().mono.divided_by(lt_d.mono);
        if (!m) return std::nullopt;
        Term qt{std::move(*m), rem.leading_term().coeff / lt_d.coeff};
        Polynomial step(reg_);
        step.terms_.push_back(qt);
        quot.terms_.push_back(std::move(qt));
        rem = rem - step * d;
    }
    quot.normalize();
    return quot;
}

std::vector<Polynomial> Polynomial::coefficients_in(VarId v) const {
    std::vector<Polynomial> out;
    for (auto& t : terms_) {
        uint32_t e = t.mono.degree_in(v);
        if (out.size() <= e) out.resize(e + 1, Polynomial(reg_));
        Monomial m = *t.mono.divided_by(Monomial::variable(v, e));
        out[e].terms_.push_back({std::move(m), t.coeff});
    }
    for (auto& p : out) p.normalize();
    return out;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return Monomial{};
    std::vector<Monomial::Entry> acc = terms_[0].mono.entries();
    for (size_t i = 1; i < terms_.size() && !acc.empty(); ++i) {
        std::vector<Monomial::Entry> next;
        const auto& e = terms_[i].mono.entries();
        size_t a = 0, b = 0;
        while (a < acc.size() && b < e.size()) {
            if (acc[a].first < e[b].first)
                ++a;
            else if (acc[a].first > e[b].first)
                ++b;
            else {
                next.push_back({acc[a].first, std::min(acc[a].second, e[b].second)});
                ++a, ++b;
            }
        }
        acc = std::move(next);
    }
    return Monomial(std::move(acc));
}

}  // namespace cremona
