#include <doctest.h>

#include "cremona/cumulants.hpp"
#include "cremona/text_io.hpp"
#include "cremona/varieties.hpp"

using namespace cremona;

namespace {

// Every stored implicit equation must vanish on the parametrization.
void check_implicit(const CatalogEntry& e) {
    INFO(e.name);
    CHECK(!e.param.coords.empty());
    for (auto& eq : e.implicit_eqs) CHECK(membership_check(e.param, eq));
}

}  // namespace

TEST_CASE("catalog parametrizations satisfy their implicit equations at all in-cap sizes") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) check_implicit(segre(m, n));
    for (int n = 1; n <= 6; ++n) check_implicit(veronese2(n));
    for (int n = 2; n <= 12; ++n) check_implicit(rnc(n));
    for (int n = 4; n <= 8; ++n) check_implicit(grass2(n));
    for (int n = 2; n <= 4; ++n) check_implicit(tpn(n));
    check_implicit(segre_multi({1, 1, 1}));
    check_implicit(segre_multi({2, 2}));
    check_implicit(segre_multi({2, 2, 2}));
    check_implicit(g36());
}

TEST_CASE("catalog linearizations are verified and land on the expected subspace") {
    for (const char* name : {"segre:2,2", "veronese2:2", "rnc:6", "grass2:6", "tp:2",
                             "segre-multi:1,1,1", "g36"}) {
        CatalogEntry e = make_entry(name);
        INFO(e.name);
        CremonaPair pair = linearizing_pair(e);
        CHECK(pair.verified);
        Parametrization image = apply_to_parametrization(pair.forward, e.param);
        for (VarId v : e.expected_linear_image) {
            INFO(e.reg->name_of(v));
            CHECK(image.coord_of(v).is_zero());
        }
        CHECK(maps_to_linear_subspace(e.param, e.lin_g));
    }
}

TEST_CASE("catalog entry names and counts") {
    CHECK(catalog_families().size() == 7);
    CHECK_THROWS_AS(make_entry("nosuch"), error);
    CHECK_THROWS_AS(make_entry("segre:9,9"), error);
    CatalogEntry g = make_entry("grass2:6");
    CHECK(g.ambient_dim == 14);
    CHECK(g.implicit_eqs.size() == 15);  // C(6,4) Plücker relations
    CHECK(make_entry("segre:2,2").ambient_dim == 8);
    CHECK(make_entry("veronese2:2").ambient_dim == 5);
    CHECK(make_entry("tp:2").ambient_dim == 7);
    CHECK(make_entry("g36").ambient_dim == 19);
}

TEST_CASE("segre(2,2): determinant transforms to the binomial") {
    CatalogEntry e = segre(2, 2);
    Polynomial det = segre_matrix_determinant(e);
    CremonaPair pair = linearizing_pair(e);
    Polynomial t = transform_equation(pair, det);
    Polynomial target = parse_polynomial(e.reg, "y11*y22 - y12*y21");
    CHECK(equal_up_to_unit(t, target));

    // membership route: transformed secant parametrization satisfies it
    Parametrization sec = secant_parametrization(e, 1);
    CHECK(membership_check(sec, det));
    Parametrization tsec = apply_to_parametrization(pair.forward, sec);
    CHECK(membership_check(tsec, target));
}

TEST_CASE("tp(2): determinant and its transform") {
    CatalogEntry e = tpn(2);
    Polynomial det = tpn_matrix_determinant(e);
    // the displayed affine expansion of det(x) with x22 = -1 - x11
    Polynomial displayed = parse_polynomial(
        e.reg,
        "x11 + x11^2 + x12*x21 - x01*x10 - x01*x10*x11 - x01*x20*x12 - x02*x10*x21 "
        "+ x02*x20*x11");
    CHECK(equal_up_to_unit(det, displayed));

    CremonaPair pair = linearizing_pair(e);
    Polynomial t = transform_equation(pair, det);
    Polynomial target = parse_polynomial(e.reg, "y12*y21 - y10*y20");
    CHECK(equal_up_to_unit(t, target));

    // tangent = secant here; the transformed tangential parametrization
    // satisfies the binomial too
    Parametrization tang = tangential_parametrization(e);
    CHECK(membership_check(tang, det));
    Parametrization timg = apply_to_parametrization(pair.forward, tang);
    CHECK(membership_check(timg, target));
}

TEST_CASE("veronese2(2): secant maps onto the cone over the conic") {
    CatalogEntry e = veronese2(2);
    CremonaPair pair = linearizing_pair(e);
    Parametrization sec = secant_difference_form(e);
    Parametrization tsec = apply_to_parametrization(pair.forward, sec);
    Polynomial conic = parse_polynomial(e.reg, "y11*y22 - y12^2");
    CHECK(membership_check(tsec, conic));

    // cone structure: the conic block is free of the translation block t
    std::vector<VarId> vertex;
    for (VarId v : e.y_vars) {
        bool in_image = false;
        for (VarId w : e.expected_linear_image) in_image = in_image || w == v;
        if (!in_image) vertex.push_back(v);
    }
    CHECK(cone_structure_check(tsec, vertex));
    // negative control: before the transform, t-dependence is everywhere
    CHECK(!cone_structure_check(apply_to_parametrization(
                                    identity_map(e.reg, e.x_vars, e.x_chart), sec),
                                vertex));
}

TEST_CASE("grass2(6): pfaffian transforms to the Plücker quadric of G(2,4)") {
    CatalogEntry e = grass2(6);
    Polynomial pf = grass2_pfaffian_cubic(e);
    // transcription guard: the displayed cubic, expanded on the chart x01 = 1
    Polynomial displayed = parse_polynomial(
        e.reg,
        "x23*x45 - x24*x35 + x25*x34 "
        "- x02*x13*x45 + x02*x14*x35 - x02*x15*x34 "
        "+ x03*x12*x45 - x03*x14*x25 + x03*x15*x24 "
        "- x04*x12*x35 + x04*x13*x25 - x04*x15*x23 "
        "+ x05*x14*x23 - x05*x13*x24 + x05*x12*x34");
    CHECK(equal_up_to_unit(pf, displayed));
    CHECK(membership_check(secant_parametrization(e, 1), pf));
    CHECK(membership_check(tangential_parametrization(e), pf));

    CremonaPair pair = linearizing_pair(e);
    Polynomial t = transform_equation(pair, pf);
    Polynomial target = parse_polynomial(e.reg, "y23*y45 - y24*y35 + y25*y34");
    CHECK(equal_up_to_unit(t, target));

    // tangential image satisfies the quadric and is a cone over it
    Parametrization tang = apply_to_parametrization(pair.forward, tangential_parametrization(e));
    CHECK(membership_check(tang, target));
    std::vector<VarId> vertex;
    for (VarId v : e.y_vars) {
        bool in_image = false;
        for (VarId w : e.expected_linear_image) in_image = in_image || w == v;
        if (!in_image) vertex.push_back(v);
    }
    CHECK(cone_structure_check(tang, vertex));
}

TEST_CASE("ghprs-style twist of grass2 satisfies the three-term relations") {
    CatalogEntry e = grass2(6);
    const RegistryPtr& reg = e.reg;
    size_t n_params = e.param.params.size();
    size_t extra = e.param.coords.size() - n_params;
    std::vector<RationalFunction> h, g;
    auto xv = [&](const std::string& nm) { return Polynomial::variable(reg, reg->id_of(nm)); };
    size_t idx = 0;
    for (int i = 2; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            (void)idx;
            std::string xi = "x0" + std::to_string(i), xj = "x0" + std::to_string(j);
            h.push_back(RationalFunction(Polynomial::constant(reg, 1), xv(xi) * xv(xj)));
            RationalFunction gi(xv("x1" + std::to_string(j)), xv(xj));
            RationalFunction gj(xv("x1" + std::to_string(i)), xv(xi));
            g.push_back(gi - gj);
        }
    REQUIRE(h.size() == extra);
    CremonaPair pair = generalized_triangular(e.param, e.x_vars, e.y_vars, h, g, e.x_chart,
                                              e.y_chart);
    CHECK(pair.verified);
    // homogeneous verification handles the rational h: a (5,3) pair whose
    // fundamental factor is supported on the x0i hyperplanes
    CremonaPair full = verify_cremona(pair.forward, pair.inverse);
    CHECK(*full.delta == 5);
    CHECK(*full.delta_prime == 3);
    CHECK(to_text(*full.fundamental_factor) == "x01^2*x02^3*x03^3*x04^3*x05^3");
    // g does not vanish on the variety: the image is not a coordinate subspace
    CHECK(!maps_to_linear_subspace(e.param, g));
    // ... but it satisfies the three-term linear relations y_ij - y_ik + y_jk
    Parametrization image = apply_to_parametrization(pair.forward, e.param);
    auto yv = [&](int i, int j) {
        return Polynomial::variable(reg, reg->id_of("y" + std::to_string(i) +
                                                    std::to_string(j)));
    };
    for (int i = 2; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
                CHECK(membership_check(image, yv(i, j) - yv(i, k) + yv(j, k)));
}

TEST_CASE("rnc(6): linear image and the secant cone") {
    CatalogEntry e = rnc(6);
    CremonaPair pair = linearizing_pair(e);
    CHECK(pair.verified);
    // forward coordinates stay quadratic
    for (auto& c : pair.forward.coords) CHECK(c.num().total_degree() <= 2);

    Parametrization sec = secant_parametrization(e, 1);
    for (auto& eq : e.implicit_eqs) {
        // catalecticant 3x3 minors need rank <= 2: check a couple of 3x3s
        (void)eq;
    }
    Parametrization tsec = apply_to_parametrization(pair.forward, sec);
    std::vector<VarId> yblock(e.y_vars.begin() + 1, e.y_vars.end());  // y2..y6
    for (auto& minor : hankel_minors(e.reg, yblock)) {
        INFO(to_text(minor));
        CHECK(membership_check(tsec, minor));
    }
}

TEST_CASE("segre chain: transformed secants live on smaller determinantal loci") {
    // Sec_k(Segre(m,n)) maps into the cone over Sec_{k-1}(Segre(m-1,n-1)):
    // the (k+1)x(k+1) minors of the inner y-block vanish on the image.
    auto run = [](int m, int n, int k) {
        CatalogEntry e = segre(m, n);
        CremonaPair pair = linearizing_pair(e);
        Parametrization sec = secant_parametrization(e, k);
        Parametrization tsec = apply_to_parametrization(pair.forward, sec);
        std::vector<std::vector<Polynomial>> yblock(m, std::vector<Polynomial>());
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                yblock[i - 1].push_back(Polynomial::variable(
                    e.reg, e.reg->id_of("y" + std::to_string(i) + std::to_string(j))));
        for (auto& minor : matrix_minors(yblock, k + 1)) {
            INFO(m << "," << n << " k=" << k);
            CHECK(membership_check(tsec, minor));
        }
    };
    run(2, 2, 1);
    run(3, 3, 1);
    run(3, 3, 2);
}

TEST_CASE("sigma3 hyperdeterminant and its two transforms") {
    CatalogEntry e = segre_multi({1, 1, 1});
    const RegistryPtr& reg = e.reg;
    // dictionary tuple -> subset-style ordering [v1,v2,v3,v12,v13,v23,v123]
    auto xs = std::vector<VarId>{
        reg->id_of("x_{1,0,0}"), reg->id_of("x_{0,1,0}"), reg->id_of("x_{0,0,1}"),
        reg->id_of("x_{1,1,0}"), reg->id_of("x_{1,0,1}"), reg->id_of("x_{0,1,1}"),
        reg->id_of("x_{1,1,1}")};
    auto ys = std::vector<VarId>{
        reg->id_of("y_{1,0,0}"), reg->id_of("y_{0,1,0}"), reg->id_of("y_{0,0,1}"),
        reg->id_of("y_{1,1,0}"), reg->id_of("y_{1,0,1}"), reg->id_of("y_{0,1,1}"),
        reg->id_of("y_{1,1,1}")};

    Polynomial hyper = hyperdeterminant222(reg, xs);
    Parametrization tang = tangential_parametrization(e);
    CHECK(membership_check(tang, hyper));  // T(Sigma_3) is the hyperdeterminant
    // ... and Sec(Sigma_3) = P^7, so the secant does NOT satisfy it
    CHECK(!membership_check(secant_parametrization(e, 1), hyper));

    CremonaPair pair = linearizing_pair(e);
    Parametrization timg = apply_to_parametrization(pair.forward, tang);
    Polynomial quartic = sigma3_triangular_tangent_quartic(reg, ys);
    CHECK(membership_check(timg, quartic));
    // the transformed quartic is the proper transform of the hyperdeterminant
    CHECK(equal_up_to_unit(transform_equation(pair, hyper), quartic));
}

TEST_CASE("sigma3 cumulant transform reaches the short quartic") {
    CatalogEntry e = segre_multi({1, 1, 1});
    CremonaPair cum = multi_segre_cumulant_map({1, 1, 1});
    // rebase the cumulant map onto the entry's registry through the shared
    // tuple naming, then push the tangential parametrization through it
    RationalMap fwd{e.reg, e.x_vars, e.y_vars, {}, e.x_chart, e.y_chart};
    for (size_t i = 0; i < e.x_vars.size(); ++i) {
        std::string text = to_text(cum.forward.coords[i]);
        fwd.coords.push_back(parse_rational_function(e.reg, text));
    }
    Parametrization tang = tangential_parametrization(e);
    Parametrization timg = apply_to_parametrization(fwd, tang);
    auto ys = std::vector<VarId>{
        e.reg->id_of("y_{1,0,0}"), e.reg->id_of("y_{0,1,0}"), e.reg->id_of("y_{0,0,1}"),
        e.reg->id_of("y_{1,1,0}"), e.reg->id_of("y_{1,0,1}"), e.reg->id_of("y_{0,1,1}"),
        e.reg->id_of("y_{1,1,1}")};
    Polynomial quartic = sigma3_cumulant_tangent_quartic(e.reg, ys);
    CHECK(membership_check(timg, quartic));
}

TEST_CASE("defects of the Severi trio and a space-filling control") {
    CHECK(secant_defect(veronese2(2), 1) == 1);
    CHECK(secant_defect(segre(2, 2), 1) == 1);
    CHECK(secant_defect(segre(1, 1), 1) == 0);
    // tangential of segre(1,1) fills P^3: affine jacobian rank 3
    CatalogEntry s11 = segre(1, 1);
    Parametrization tang = tangential_parametrization(s11);
    std::vector<RationalFunction> fs;
    for (auto& [v, f] : tang.coords) fs.push_back(f);
    CHECK(exact_generic_rank(jacobian(fs, tang.params), tang.params) == 3);
}

TEST_CASE("g36 maps, image and tangent quartic") {
    CatalogEntry e = g36();
    auto [quadro, cubo] = g36_maps(e);
    CHECK(quadro.verified);
    CHECK(cubo.verified);

    const RegistryPtr& reg = e.reg;
    // displayed inverse of the cubo-cubic map: y0 = w0 + det(Z)
    std::vector<std::vector<Polynomial>> Z(3, std::vector<Polynomial>());
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            Z[i - 1].push_back(Polynomial::variable(
                reg, reg->id_of("z" + std::to_string(i) + std::to_string(j))));
    Polynomial expect_y0 = Polynomial::variable(reg, reg->id_of("w0")) + determinant(Z);
    CHECK(cubo.inverse.coords.back() == RationalFunction(expect_y0));

    // chart degrees: quadro-cubic is (2,3), cubo-cubic is (3,3)
    CremonaPair vq = verify_cremona(quadro.forward, quadro.inverse);
    CHECK(*vq.delta == 2);
    CHECK(*vq.delta_prime == 3);
    CHECK(to_text(*vq.fundamental_factor) == "x0^5");
    CremonaPair vc = verify_cremona(cubo.forward, cubo.inverse);
    CHECK(*vc.delta == 3);
    CHECK(*vc.delta_prime == 3);

    // image of the parametrization is {W = 0, w0 = 0} under both maps
    for (const CremonaPair* p : {&quadro, &cubo}) {
        Parametrization img = apply_to_parametrization(p->forward, e.param);
        for (VarId v : e.expected_linear_image) CHECK(img.coord_of(v).is_zero());
    }

    // the quartic vanishes on the tangential variety
    Polynomial quartic = g36_tangent_quartic(e);
    CHECK(quartic.total_degree() == 4);
    CHECK(membership_check(tangential_parametrization(e), quartic));
    // ... but not on G(3,6) itself... actually G(3,6) lies inside T(G(3,6)).
    CHECK(membership_check(e.param, quartic));
}
