#include "cremona/maps.hpp"

#include <algorithm>

#include "cremona/text_io.hpp"

namespace cremona {

const RationalFunction& Parametrization::coord_of(VarId v) const {
    for (auto& [w, f] : coords)
        if (w == v) return f;
    throw error("parametrization has no coordinate '" + reg->name_of(v) + "'");
}

bool Parametrization::has_coord(VarId v) const {
    for (auto& [w, f] : coords)
        if (w == v) return true;
    return false;
}

Parametrization substitute_params(const Parametrization& p, const Bindings& b,
                                  std::vector<VarId> new_params,
                                  std::map<std::string, std::vector<VarId>> new_groups) {
    Parametrization out;
    out.reg = p.reg;
    out.params = std::move(new_params);
    out.groups = std::move(new_groups);
    out.normal_form = false;
    out.coords.reserve(p.coords.size());
    for (auto& [v, f] : p.coords) out.coords.emplace_back(v, substitute(f, b));
    return out;
}

void RationalMap::validate() const {
    if (coords.size() != target_vars.size())
        throw error("rational map: coordinate count differs from target variable count");
    for (auto& f : coords)
        for (VarId v : f.num().vars_used())
            if (std::find(source_vars.begin(), source_vars.end(), v) == source_vars.end())
                throw error("rational map coordinate uses non-source variable '" +
                            reg->name_of(v) + "'");
}

uint32_t ProjectiveMap::degree() const {
    for (auto& c : coords)
        if (!c.is_zero()) return c.total_degree();
    return 0;
}

Monoid Monoid::make(RegistryPtr reg, std::vector<VarId> base_vars, VarId vertex_var,
                    Polynomial f_d, Polynomial f_dm1) {
    if (f_dm1.is_zero()) throw error("monoid: f_{d-1} must be nonzero");
    Monoid m;
    m.d = std::max(f_d.is_zero() ? 0 : f_d.total_degree(), f_dm1.total_degree() + 1);
    if (!f_d.is_zero() && (!f_d.is_homogeneous() || f_d.total_degree() != m.d))
        throw error("monoid: f_d is not homogeneous of degree d");
    if (!f_dm1.is_homogeneous() || f_dm1.total_degree() + 1 != m.d)
        throw error("monoid: f_{d-1} is not homogeneous of degree d-1");
    for (const Polynomial* p : {&f_d, &f_dm1}) {
        if (p->contains_var(vertex_var))
            throw error("monoid: defining forms must not involve the vertex variable");
    }
    m.reg = std::move(reg);
    m.base_vars = std::move(base_vars);
    m.vertex_var = vertex_var;
    m.coprime = poly_gcd(f_d, f_dm1).is_constant();
    m.f_d = std::move(f_d);
    m.f_dm1 = std::move(f_dm1);
    return m;
}

Polynomial Monoid::equation() const {
    return f_dm1 * Polynomial::variable(reg, vertex_var) + f_d;
}

RationalMap identity_map(const RegistryPtr& reg, const std::vector<VarId>& vars,
                         const std::string& chart) {
    RationalMap m;
    m.reg = reg;
    m.source_vars = vars;
    m.target_vars = vars;
    m.source_chart = chart;
    m.target_chart = chart;
    for (VarId v : vars) m.coords.push_back(RationalFunction::variable(reg, v));
    return m;
}

RationalMap compose(const RationalMap& g, const RationalMap& f) {
    if (f.reg != g.reg) throw error("compose: maps over different registries");
    if (f.target_vars != g.source_vars)
        throw error("compose: inner map's target variables differ from outer map's source");
    Bindings b;
    for (size_t i = 0; i < g.source_vars.size(); ++i) b[g.source_vars[i].index] = f.coords[i];
    RationalMap r;
    r.reg = f.reg;
    r.source_vars = f.source_vars;
    r.target_vars = g.target_vars;
    r.source_chart = f.source_chart;
    r.target_chart = g.target_chart;
    r.coords.reserve(g.coords.size());
    for (size_t j = 0; j < g.coords.size(); ++j) {
        try {
            r.coords.push_back(substitute(g.coords[j], b));
        } catch (const error& e) {
            throw error("compose: coordinate '" + g.reg->name_of(g.target_vars[j]) +
                        "': " + e.what());
        }
    }
    return r;
}

bool is_identity(const RationalMap& m) {
    if (m.source_vars.size() != m.target_vars.size()) return false;
    for (size_t i = 0; i < m.coords.size(); ++i)
        if (m.coords[i] != RationalFunction::variable(m.reg, m.source_vars[i])) return false;
    return true;
}

namespace {

// Coordinate i as a_i * x_i + b_i with a_i, b_i rational in x_1..x_{i-1};
// nullopt when the coordinate is not of that shape.
struct LinearSlice {
    RationalFunction a, b;
};

std::optional<LinearSlice> linear_in(const RationalMap& m, size_t i) {
    VarId v = m.source_vars[i];
    const RationalFunction& f = m.coords[i];
    if (f.den().contains_var(v) || f.num().degree_in(v) > 1) return std::nullopt;
    for (size_t j = i + 1; j < m.source_vars.size(); ++j)
        if (f.contains_var(m.source_vars[j])) return std::nullopt;
    auto cs = f.num().coefficients_in(v);
    Polynomial b = cs.empty() ? Polynomial(m.reg) : cs[0];
    Polynomial a = cs.size() > 1 ? cs[1] : Polynomial(m.reg);
    return LinearSlice{RationalFunction(std::move(a), f.den()),
                       RationalFunction(std::move(b), f.den())};
}

}  // namespace

bool is_triangular(const RationalMap& m) {
    if (m.source_vars.size() != m.target_vars.size()) return false;
    for (size_t i = 0; i < m.coords.size(); ++i)
        if (!linear_in(m, i)) return false;
    return true;
}

RationalMap invert_triangular(const RationalMap& f) {
    f.validate();
    if (f.source_vars.size() != f.target_vars.size())
        throw error("invert_triangular: map is not a self-map");
    Bindings solved;  // x_h -> expression in y
    RationalMap inv;
    inv.reg = f.reg;
    inv.source_vars = f.target_vars;
    inv.target_vars = f.source_vars;
    inv.source_chart = f.target_chart;
    inv.target_chart = f.source_chart;
    for (size_t i = 0; i < f.coords.size(); ++i) {
        auto slice = linear_in(f, i);
        if (!slice)
            throw error("invert_triangular: coordinate '" +
                        f.reg->name_of(f.target_vars[i]) +
                        "' is not linear in its leading variable '" +
                        f.reg->name_of(f.source_vars[i]) + "'");
        if (slice->a.is_zero())
            throw error("invert_triangular: coordinate '" +
                        f.reg->name_of(f.target_vars[i]) +
                        "' does not involve its leading variable '" +
                        f.reg->name_of(f.source_vars[i]) + "'");
        RationalFunction a = substitute(slice->a, solved);
        RationalFunction b = substitute(slice->b, solved);
        if (a.is_zero())
            throw error("invert_triangular: leading coefficient of '" +
                        f.reg->name_of(f.target_vars[i]) + "' vanishes after substitution");
        RationalFunction yi = RationalFunction::variable(f.reg, f.target_vars[i]);
        RationalFunction xi = (yi - b) / a;
        solved[f.source_vars[i].index] = xi;
        inv.coords.push_back(std::move(xi));
    }
    return inv;
}

namespace {

// Shared core of the two triangular constructions.
CremonaPair build_triangular(const Parametrization& param, const std::vector<VarId>& source_vars,
                             const std::vector<VarId>& target_vars,
                             const std::vector<RationalFunction>& h,
                             const std::vector<RationalFunction>& g,
                             const std::string& source_chart, const std::string& target_chart) {
    const RegistryPtr& reg = param.reg;
    size_t n = param.params.size();
    size_t r = param.coords.size();
    if (source_vars.size() != r || target_vars.size() != r)
        throw error("triangular construction: variable lists must match the coordinate count");
    if (!param.normal_form)
        throw error("parametrization is not in normal form (x_i = t_i first); "
                    "reorder the coordinates so the parameters come first");
    for (size_t i = 0; i < n; ++i) {
        if (param.coords[i].first != source_vars[i] ||
            param.coords[i].second != RationalFunction::variable(reg, param.params[i]))
            throw error("parametrization is not in normal form (coordinate " +
                        std::to_string(i) + " is not its parameter); reorder the coordinates");
    }
    if (!h.empty() && h.size() != r - n)
        throw error("triangular construction: the h list must have one entry per "
                    "non-parameter coordinate");
    if (!g.empty() && g.size() != r - n)
        throw error("triangular construction: the g list must have one entry per "
                    "non-parameter coordinate");

    // Rename parameters to the ambient coordinates they equal.
    Bindings rename;
    for (size_t i = 0; i < n; ++i)
        rename[param.params[i].index] = RationalFunction::variable(reg, source_vars[i]);

    RationalMap fwd;
    fwd.reg = reg;
    fwd.source_vars = source_vars;
    fwd.target_vars = target_vars;
    fwd.source_chart = source_chart;
    fwd.target_chart = target_chart;
    for (size_t i = 0; i < n; ++i)
        fwd.coords.push_back(RationalFunction::variable(reg, source_vars[i]));
    for (size_t j = n; j < r; ++j) {
        RationalFunction fj = substitute(param.coords[j].second, rename);
        RationalFunction coord =
            RationalFunction::variable(reg, source_vars[j]) - fj;
        auto check_prior = [&](const RationalFunction& w, const char* label) {
            for (size_t k = j; k < r; ++k)
                if (w.contains_var(source_vars[k]))
                    throw error(std::string("generalized triangular map: ") + label +
                                " for coordinate '" + reg->name_of(source_vars[j]) +
                                "' involves a variable of equal or higher index");
        };
        if (!h.empty()) {
            const RationalFunction& hj = h[j - n];
            if (hj.is_zero())
                throw error("generalized triangular map: h for coordinate '" +
                            reg->name_of(source_vars[j]) + "' is identically zero");
            check_prior(hj, "h");
            coord = hj * coord;
        }
        if (!g.empty()) {
            check_prior(g[j - n], "g");
            coord = coord + g[j - n];
        }
        fwd.coords.push_back(std::move(coord));
    }

    CremonaPair pair;
    pair.inverse = invert_triangular(fwd);
    pair.forward = std::move(fwd);
    pair.verified = is_identity(compose(pair.inverse, pair.forward));
    if (!pair.verified)
        throw error("triangular construction: composition with the inverse is not the identity");
    return pair;
}

}  // namespace

CremonaPair triangular_from_parametrization(const Parametrization& param,
                                            const std::vector<VarId>& source_vars,
                                            const std::vector<VarId>& target_vars,
                                            const std::string& source_chart,
                                            const std::string& target_chart) {
    return build_triangular(param, source_vars, target_vars, {}, {}, source_chart, target_chart);
}

CremonaPair generalized_triangular(const Parametrization& param,
                                   const std::vector<VarId>& source_vars,
                                   const std::vector<VarId>& target_vars,
                                   const std::vector<RationalFunction>& h,
                                   const std::vector<RationalFunction>& g,
                                   const std::string& source_chart,
                                   const std::string& target_chart) {
    return build_triangular(param, source_vars, target_vars, h, g, source_chart, target_chart);
}

bool maps_to_linear_subspace(const Parametrization& param,
                             const std::vector<RationalFunction>& g) {
    Bindings onto;
    for (auto& [v, f] : param.coords) onto[v.index] = f;
    for (auto& gj : g)
        if (!substitute(gj, onto).is_zero()) return false;
    return true;
}

std::vector<Polynomial> projective_reduce(std::vector<Polynomial> coords) {
    Polynomial g;
    for (auto& c : coords) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    if (!g.is_zero() && !g.is_constant())
        for (auto& c : coords) c = c.is_zero() ? c : *c.divided_exactly_by(g);
    return coords;
}

bool projectively_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    // Rule out the all-zero degenerate matching a nonzero vector.
    bool za = std::all_of(a.begin(), a.end(), [](auto& p) { return p.is_zero(); });
    bool zb = std::all_of(b.begin(), b.end(), [](auto& p) { return p.is_zero(); });
    return za == zb;
}

ProjectiveMap homogenize(const RationalMap& m) {
    m.validate();
    const RegistryPtr& reg = m.reg;
    VarId chart = reg->ensure(m.source_chart);
    ProjectiveMap out;
    out.reg = reg;
    out.source_vars.push_back(chart);
    for (VarId v : m.source_vars) out.source_vars.push_back(v);

    size_t r = m.coords.size();
    std::vector<Polynomial> A(r, Polynomial(reg)), B(r, Polynomial(reg));
    for (size_t i = 0; i < r; ++i) {
        const Polynomial& n = m.coords[i].num();
        const Polynomial& d = m.coords[i].den();
        uint32_t dn = n.is_zero() ? 0 : n.total_degree();
        uint32_t dd = d.total_degree();
        uint32_t lift = std::max(dn, dd);
        A[i] = n.homogenized(chart, lift);
        B[i] = d.homogenized(chart, lift);
    }
    Polynomial L = Polynomial::constant(reg, 1);
    for (auto& b : B) L = poly_lcm(L, b);
    out.coords.push_back(L);
    for (size_t i = 0; i < r; ++i) {
        auto q = L.divided_exactly_by(B[i]);
        if (!q) throw error("internal: lcm fails divisibility during homogenization");
        out.coords.push_back(A[i] * *q);
    }
    out.coords = projective_reduce(std::move(out.coords));
    uint32_t deg = out.degree();
    for (auto& c : out.coords)
        if (!c.is_zero() && (!c.is_homogeneous() || c.total_degree() != deg))
            throw error("internal: inhomogeneous coordinates after homogenization");
    return out;
}

CremonaPair verify_cremona(const RationalMap& f, const RationalMap& g) {
    if (f.target_vars != g.source_vars || f.source_vars != g.target_vars)
        throw error("verify_cremona: the maps are not between identically-named spaces");
    RationalMap round = compose(g, f);
    if (!is_identity(round)) {
        for (size_t i = 0; i < round.coords.size(); ++i)
            if (round.coords[i] != RationalFunction::variable(round.reg, round.source_vars[i]))
                throw error("verify_cremona: composition is not the identity at coordinate '" +
                            f.reg->name_of(round.target_vars[i]) + "'");
    }

    ProjectiveMap F = homogenize(f);
    ProjectiveMap G = homogenize(g);
    Bindings back;
    VarId y_chart = f.reg->ensure(f.target_chart);
    back[y_chart.index] = RationalFunction(F.coords[0]);
    for (size_t i = 0; i < f.target_vars.size(); ++i)
        back[f.target_vars[i].index] = RationalFunction(F.coords[i + 1]);

    VarId x_chart = f.reg->ensure(f.source_chart);
    std::vector<VarId> x_side{x_chart};
    for (VarId v : f.source_vars) x_side.push_back(v);

    std::optional<Polynomial> phi;
    for (size_t k = 0; k < G.coords.size(); ++k) {
        RationalFunction pk = substitute(G.coords[k], back);
        if (!pk.is_polynomial())
            throw error("internal: back-substitution produced a denominator");
        Polynomial P = pk.num() * (1 / pk.den().constant_value());
        auto q = P.divided_exactly_by(Polynomial::variable(f.reg, x_side[k]));
        if (!q)
            throw error("verify_cremona: G(F) is not divisible by '" +
                        f.reg->name_of(x_side[k]) + "'");
        if (!phi)
            phi = *q;
        else if (*phi != *q)
            throw error("verify_cremona: fundamental factor differs at coordinate '" +
                        f.reg->name_of(x_side[k]) + "'");
    }

    CremonaPair pair;
    pair.forward = f;
    pair.inverse = g;
    pair.verified = true;
    pair.delta = F.degree();
    pair.delta_prime = G.degree();
    // Normalize the factor so its leading coefficient is 1.
    Polynomial factor = *phi;
    if (!factor.is_zero()) factor = factor * (1 / factor.leading_term().coeff);
    if (factor.is_zero() || factor.total_degree() != *pair.delta * *pair.delta_prime - 1)
        throw error("verify_cremona: deg Phi != delta*delta' - 1");
    pair.fundamental_factor = std::move(factor);
    return pair;
}

ProjectiveMap monoidal_extension(const ProjectiveMap& omega, const Polynomial& h,
                                 const Monoid& monoid) {
    uint32_t delta = omega.degree();
    uint32_t d = monoid.d;
    if (d < delta) throw error("monoidal extension: monoid degree is below the map degree");
    uint32_t dh = h.is_zero() ? 0 : h.total_degree();
    if (h.is_zero() || !h.is_homogeneous() || dh != d - delta)
        throw error("monoidal extension: deg h must equal d - delta");
    ProjectiveMap out;
    out.reg = omega.reg;
    out.source_vars = omega.source_vars;
    out.source_vars.push_back(monoid.vertex_var);
    for (auto& F : omega.coords) out.coords.push_back(h * F);
    out.coords.push_back(monoid.equation());

    // pi∘Omega = omega∘pi: dropping the last coordinate of Omega gives
    // [h F_i], proportional to [F_i].
    std::vector<Polynomial> lhs(out.coords.begin(), out.coords.end() - 1);
    if (!projectively_equal(lhs, omega.coords))
        throw error("monoidal extension: projection identity failed");
    return out;
}

StereographicProjection stereographic_projection(const Monoid& monoid) {
    const RegistryPtr& reg = monoid.reg;
    StereographicProjection s;
    s.projection.reg = reg;
    s.projection.source_vars = monoid.base_vars;
    s.projection.source_vars.push_back(monoid.vertex_var);
    for (VarId v : monoid.base_vars)
        s.projection.coords.push_back(Polynomial::variable(reg, v));

    s.inverse.reg = reg;
    s.inverse.source_vars = monoid.base_vars;
    for (VarId v : monoid.base_vars)
        s.inverse.coords.push_back(monoid.f_dm1 * Polynomial::variable(reg, v));
    s.inverse.coords.push_back(-monoid.f_d);

    // The image satisfies the monoid equation identically.
    Bindings b;
    for (size_t i = 0; i < monoid.base_vars.size(); ++i)
        b[monoid.base_vars[i].index] = RationalFunction(s.inverse.coords[i]);
    b[monoid.vertex_var.index] = RationalFunction(s.inverse.coords.back());
    if (!substitute(monoid.equation(), b).is_zero())
        throw error("internal: stereographic inverse does not lie on the monoid");
    return s;
}

ProjectiveMap double_projection(const Polynomial& f_d, const Polynomial& g_dm1,
                                const Polynomial& h_dm1, const Polynomial& f_dm2,
                                const std::vector<VarId>& base_vars, VarId last_var) {
    const RegistryPtr& reg =
        !f_d.is_zero() ? f_d.registry()
                       : (!g_dm1.is_zero() ? g_dm1.registry()
                                           : (!h_dm1.is_zero() ? h_dm1.registry()
                                                               : f_dm2.registry()));
    uint32_t d = 0;
    bool have_d = false;
    auto take = [&](const Polynomial& p, uint32_t offset, const char* label) {
        if (p.is_zero()) return;
        if (!p.is_homogeneous()) throw error(std::string("double projection: ") + label +
                                             " is not homogeneous");
        if (p.contains_var(last_var))
            throw error(std::string("double projection: ") + label +
                        " involves the projected variable");
        uint32_t deg = p.total_degree() + offset;
        if (!have_d) {
            d = deg;
            have_d = true;
        } else if (d != deg) {
            throw error(std::string("double projection: ") + label + " has the wrong degree");
        }
    };
    take(f_d, 0, "f_d");
    take(g_dm1, 1, "g_{d-1}");
    take(h_dm1, 1, "h_{d-1}");
    take(f_dm2, 2, "f_{d-2}");
    if (!have_d) throw error("double projection: all bimonoid forms are zero");

    Polynomial factor = f_dm2 * Polynomial::variable(reg, last_var) + h_dm1;
    ProjectiveMap out;
    out.reg = reg;
    out.source_vars = base_vars;
    out.source_vars.push_back(last_var);
    for (VarId v : base_vars) out.coords.push_back(factor * Polynomial::variable(reg, v));
    out.coords.push_back(-f_d - Polynomial::variable(reg, last_var) * g_dm1);
    return out;
}

Parametrization apply_to_parametrization(const RationalMap& m, const Parametrization& param) {
    if (m.reg != param.reg)
        throw error("apply_to_parametrization: map and parametrization use different registries");
    Bindings b;
    for (auto& [v, f] : param.coords) b[v.index] = f;
    for (VarId v : m.source_vars)
        if (!b.count(v.index))
            throw error("apply_to_parametrization: no coordinate for source variable '" +
                        m.reg->name_of(v) + "'");
    Parametrization out;
    out.reg = param.reg;
    out.params = param.params;
    out.groups = param.groups;
    out.normal_form = false;
    for (size_t j = 0; j < m.coords.size(); ++j) {
        if (substitute(m.coords[j].den(), b).is_zero())
            throw error("the variety lies in the fundamental locus: denominator '" +
                        to_text(m.coords[j].den()) + "' of coordinate '" +
                        m.reg->name_of(m.target_vars[j]) + "' vanishes on it");
        out.coords.emplace_back(m.target_vars[j], substitute(m.coords[j], b));
    }
    return out;
}

}  // namespace cremona
