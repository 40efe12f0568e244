// Acceptance suite: one pass/fail line per criterion, exit 0 only when every
// criterion holds. All checks are exact symbolic identities; the only
// randomness is the seeded rank sampler and the seeded property generators.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cremona/cumulants.hpp"
#include "cremona/text_io.hpp"
#include "cremona/varieties.hpp"

using namespace cremona;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

std::vector<VarId> vertex_block(const CatalogEntry& e) {
    std::vector<VarId> vertex;
    for (VarId v : e.y_vars) {
        bool in_image = false;
        for (VarId w : e.expected_linear_image) in_image = in_image || w == v;
        if (!in_image) vertex.push_back(v);
    }
    return vertex;
}

Polynomial rand_poly(const RegistryPtr& reg, const std::vector<VarId>& vars, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), coeff(-5, 5), expd(0, 2);
    std::vector<Polynomial::Term> terms;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<Monomial::Entry> es;
        for (auto v : vars) {
            int e = expd(rng);
            if (e > 0) es.push_back({v.index, static_cast<uint32_t>(e)});
        }
        terms.push_back({Monomial(std::move(es)), Rational(coeff(rng))});
    }
    return Polynomial::from_terms(reg, std::move(terms));
}

}  // namespace

int main() {
    criterion("01-segre22-binomial", [](std::string& detail) {
        CatalogEntry e = segre(2, 2);
        CremonaPair pair = linearizing_pair(e);
        Polynomial target = parse_polynomial(e.reg, "y11*y22 - y12*y21");
        bool direct = equal_up_to_unit(
            transform_equation(pair, segre_matrix_determinant(e)), target);
        Parametrization tsec =
            apply_to_parametrization(pair.forward, secant_parametrization(e, 1));
        bool member = membership_check(tsec, target);
        detail = "transform and membership routes";
        return direct && member;
    });

    criterion("02-tp2-binomial", [](std::string& detail) {
        CatalogEntry e = tpn(2);
        CremonaPair pair = linearizing_pair(e);
        Polynomial target = parse_polynomial(e.reg, "y12*y21 - y10*y20");
        bool direct =
            equal_up_to_unit(transform_equation(pair, tpn_matrix_determinant(e)), target);
        Parametrization timg =
            apply_to_parametrization(pair.forward, tangential_parametrization(e));
        detail = "y12*y21 = y10*y20";
        return direct && membership_check(timg, target);
    });

    criterion("03-veronese-secant-cone", [](std::string& detail) {
        CatalogEntry e = veronese2(2);
        CremonaPair pair = linearizing_pair(e);
        Parametrization tsec =
            apply_to_parametrization(pair.forward, secant_difference_form(e));
        Polynomial conic = parse_polynomial(e.reg, "y11*y22 - y12^2");
        bool member = membership_check(tsec, conic);
        bool cone = cone_structure_check(tsec, vertex_block(e));
        detail = "conic membership and t-free conic block";
        return member && cone;
    });

    criterion("04-grass26-pfaffian", [](std::string& detail) {
        CatalogEntry e = grass2(6);
        CremonaPair pair = linearizing_pair(e);
        Polynomial target = parse_polynomial(e.reg, "y23*y45 - y24*y35 + y25*y34");
        detail = "Pfaffian cubic -> G(2,4) Plücker quadric";
        return equal_up_to_unit(transform_equation(pair, grass2_pfaffian_cubic(e)), target);
    });

    criterion("05-rnc6-secant-catalecticant", [](std::string& detail) {
        CatalogEntry e = rnc(6);
        CremonaPair pair = linearizing_pair(e);
        Parametrization tsec =
            apply_to_parametrization(pair.forward, secant_parametrization(e, 1));
        std::vector<VarId> yblock(e.y_vars.begin() + 1, e.y_vars.end());
        auto minors = hankel_minors(e.reg, yblock);
        for (auto& m : minors)
            if (!membership_check(tsec, m)) return false;
        detail = std::to_string(minors.size()) + " catalecticant minors vanish";
        return true;
    });

    criterion("06-sigma3-triangular-quartic", [](std::string& detail) {
        CatalogEntry e = segre_multi({1, 1, 1});
        auto sub = [&](char side) {
            std::string s(1, side);
            return std::vector<VarId>{
                e.reg->id_of(s + "_{1,0,0}"), e.reg->id_of(s + "_{0,1,0}"),
                e.reg->id_of(s + "_{0,0,1}"), e.reg->id_of(s + "_{1,1,0}"),
                e.reg->id_of(s + "_{1,0,1}"), e.reg->id_of(s + "_{0,1,1}"),
                e.reg->id_of(s + "_{1,1,1}")};
        };
        Parametrization tang = tangential_parametrization(e);
        if (!membership_check(tang, hyperdeterminant222(e.reg, sub('x')))) return false;
        CremonaPair pair = linearizing_pair(e);
        Parametrization timg = apply_to_parametrization(pair.forward, tang);
        detail = "hyperdeterminant and displayed quartic";
        return membership_check(timg, sigma3_triangular_tangent_quartic(e.reg, sub('y')));
    });

    criterion("07-sigma3-cumulant-quartic", [](std::string& detail) {
        CatalogEntry e = segre_multi({1, 1, 1});
        CremonaPair cum = multi_segre_cumulant_map({1, 1, 1});
        RationalMap fwd{e.reg, e.x_vars, e.y_vars, {}, e.x_chart, e.y_chart};
        for (size_t i = 0; i < e.x_vars.size(); ++i)
            fwd.coords.push_back(
                parse_rational_function(e.reg, to_text(cum.forward.coords[i])));
        Parametrization timg =
            apply_to_parametrization(fwd, tangential_parametrization(e));
        std::vector<VarId> ys{
            e.reg->id_of("y_{1,0,0}"), e.reg->id_of("y_{0,1,0}"), e.reg->id_of("y_{0,0,1}"),
            e.reg->id_of("y_{1,1,0}"), e.reg->id_of("y_{1,0,1}"), e.reg->id_of("y_{0,1,1}"),
            e.reg->id_of("y_{1,1,1}")};
        detail = "y123^2 + 4 y12 y13 y23 = 0";
        return membership_check(timg, sigma3_cumulant_tangent_quartic(e.reg, ys));
    });

    criterion("08-cumulant-round-trips", [](std::string& detail) {
        int pairs = 0;
        for (int n = 1; n <= 5; ++n) {
            std::vector<CremonaPair> maps;
            maps.push_back(binary_cumulant_map(n));
            if (n >= 2) {
                maps.push_back(l_cumulant_map(interval_partitions(n)));
                maps.push_back(l_cumulant_map(one_cluster_partitions(n)));
                maps.push_back(l_cumulant_map(min_max_poset(n)));
            }
            for (auto& p : maps) {
                if (!p.verified) return false;
                if (!is_identity(compose(p.inverse, p.forward))) return false;
                if (!linearization_check(p, n)) return false;
                ++pairs;
            }
        }
        detail = std::to_string(pairs) + " pairs: inverse∘forward = id and linearization";
        return true;
    });

    criterion("09-mobius-suite", [](std::string& detail) {
        std::mt19937 rng(0);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 2 + static_cast<int>(rng() % 4);  // n <= 5
            auto all = all_partitions(full_mask(n));
            std::vector<Partition> chosen;
            for (auto& p : all)
                if (rng() % 2) chosen.push_back(p);
            chosen.push_back(Partition::singletons(full_mask(n)));
            chosen.push_back(Partition::one_block(full_mask(n)));
            PartitionPoset P(full_mask(n), std::move(chosen));
            if (mobius_sum(P) != 0) return false;
            // Möbius inversion round-trip on a random integer function.
            std::vector<long long> f(P.size()), g(P.size(), 0);
            for (auto& v : f) v = static_cast<long long>(rng() % 21) - 10;
            for (size_t x = 0; x < P.size(); ++x)
                for (size_t y = 0; y < P.size(); ++y)
                    if (P.leq(y, x)) g[x] += f[y];
            for (size_t x = 0; x < P.size(); ++x) {
                long long rec = 0;
                for (size_t y = 0; y < P.size(); ++y)
                    if (P.leq(y, x)) rec += g[y] * P.mobius(y, x);
                if (rec != f[x]) return false;
            }
        }
        bool product = product_mobius_check(full_partition_lattice(3), full_partition_lattice(3)) &&
                       product_mobius_check(full_partition_lattice(2), interval_partitions(3)) &&
                       product_mobius_check(min_max_poset(2), min_max_poset(2)) &&
                       product_mobius_check(interval_partitions(4), min_max_poset(3));
        detail = "200 random subposets, inversion round-trips, product theorem";
        return product;
    });

    criterion("10-secant-cumulant-closed-form", [](std::string& detail) {
        int coords = 0;
        for (int n = 2; n <= 4; ++n) {
            SecantCumulantResult r = secant_cumulant_pipeline(n);
            if (!r.identity_verified) return false;
            coords += static_cast<int>(r.checked.size());
        }
        detail = std::to_string(coords) + " coordinates match the closed form, n <= 4";
        return true;
    });

    criterion("11-severi-defects", [](std::string& detail) {
        RankSampling cfg;  // seed 0, 5 samples
        bool ok = secant_defect(veronese2(2), 1, cfg) == 1 &&
                  secant_defect(segre(2, 2), 1, cfg) == 1 &&
                  secant_defect(grass2(6), 1, cfg) == 1 &&
                  secant_defect(segre(1, 1), 1, cfg) == 0;
        detail = "veronese2(2), segre(2,2), grass2(6) defect 1; segre(1,1) defect 0";
        return ok;
    });

    criterion("12-g36", [](std::string& detail) {
        CatalogEntry e = g36();
        auto [quadro, cubo] = g36_maps(e);
        CremonaPair vq = verify_cremona(quadro.forward, quadro.inverse);
        CremonaPair vc = verify_cremona(cubo.forward, cubo.inverse);
        if (!(vq.verified && vc.verified)) return false;
        for (const CremonaPair* p : {&quadro, &cubo}) {
            Parametrization img = apply_to_parametrization(p->forward, e.param);
            for (VarId v : e.expected_linear_image)
                if (!img.coord_of(v).is_zero()) return false;
        }
        auto [qi, ci] = g36_tangential_images();
        const std::string expect = "z13^4*z22^2 - 2*z12*z13^3*z22*z23";
        bool images = qi.degree == 6 && ci.degree == 6 && qi.term_count >= 400 &&
                      qi.term_count <= 800 && ci.term_count >= 400 && ci.term_count <= 800 &&
                      qi.leading_terms == expect && ci.leading_terms == expect;
        std::ostringstream os;
        os << "(2,3) and (3,3) pairs verify; image is {W=0, w0=0}; sextic terms "
           << qi.term_count << " and " << ci.term_count;
        detail = os.str();
        return images;
    });

    criterion("13-degree-law-across-catalog", [](std::string& detail) {
        std::vector<std::string> names{"segre:1,1", "segre:2,2", "segre:3,2", "veronese2:2",
                                       "veronese2:3", "rnc:4", "rnc:6", "grass2:4",
                                       "grass2:6", "tp:2", "segre-multi:1,1,1"};
        int checked = 0;
        std::ostringstream os;
        for (auto& nm : names) {
            CatalogEntry e = make_entry(nm);
            CremonaPair raw = linearizing_pair(e);
            CremonaPair full = verify_cremona(raw.forward, raw.inverse);
            if (!full.fundamental_factor ||
                full.fundamental_factor->total_degree() != *full.delta * *full.delta_prime - 1)
                return false;
            os << nm << "(" << *full.delta << "," << *full.delta_prime << ") ";
            ++checked;
        }
        // the two G(3,6) maps as well
        CatalogEntry e = g36();
        auto [quadro, cubo] = g36_maps(e);
        for (const CremonaPair* p : {&quadro, &cubo}) {
            CremonaPair full = verify_cremona(p->forward, p->inverse);
            if (full.fundamental_factor->total_degree() != *full.delta * *full.delta_prime - 1)
                return false;
            ++checked;
        }
        detail = std::to_string(checked) + " pairs: " + os.str() + "g36(2,3) g36(3,3)";
        return true;
    });

    criterion("14-property-suite", [](std::string& detail) {
        auto reg = make_registry();
        std::vector<VarId> vars{reg->declare("a"), reg->declare("b"), reg->declare("c")};
        std::mt19937 rng(20240809);
        for (int i = 0; i < 1000; ++i) {
            Polynomial p = rand_poly(reg, vars, rng);
            Polynomial q = rand_poly(reg, vars, rng);
            Polynomial r = rand_poly(reg, vars, rng);
            // ring axioms
            if ((p + q) + r != p + (q + r)) return false;
            if (p * (q + r) != p * q + p * r) return false;
            if (p * q != q * p) return false;
            // canonicalization idempotence
            if (Polynomial::from_terms(reg, p.terms()) != p) return false;
            // Leibniz rule
            if ((p * q).derivative(vars[0]) !=
                p.derivative(vars[0]) * q + p * q.derivative(vars[0]))
                return false;
            // substitution composition
            Bindings sigma{{vars[0].index, RationalFunction(q)},
                           {vars[1].index, RationalFunction(r)}};
            Bindings tau{{vars[2].index, RationalFunction::constant(reg, Rational(i % 7 - 3))}};
            Bindings tau_sigma = sigma;
            for (auto& [v, f] : tau_sigma) f = substitute(f, tau);
            tau_sigma.insert(tau.begin(), tau.end());
            if (substitute(substitute(p, sigma), tau) != substitute(p, tau_sigma)) return false;
        }
        detail = "1000 random instances per property";
        return true;
    });

    if (g_failures == 0) {
        std::cout << "ACCEPTANCE: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "ACCEPTANCE: " << g_failures << " criterion(s) FAILED" << std::endl;
    return 1;
}
