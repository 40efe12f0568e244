// Command-line front end: catalog browsing, linearizations, worked-example
// verification and machine-readable reports.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cremona/cumulants.hpp"
#include "cremona/report.hpp"
#include "cremona/text_io.hpp"
#include "cremona/varieties.hpp"

using namespace cremona;

namespace {

struct Options {
    bool json = false;
    uint64_t seed = 0;
    uint32_t max_degree = 64;
    uint32_t max_vars = 4096;
};

int finish(const Report& report, const Options& opt) {
    if (opt.json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    std::cerr << "elapsed_ms: " << report.elapsed_ms << "\n";
    return report.all_pass() ? 0 : 1;
}

RankSampling sampling(const Options& opt) {
    RankSampling cfg;
    cfg.seed = opt.seed;
    return cfg;
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

void check_image_vanishes(Report& rep, const CatalogEntry& e, const CremonaPair& pair) {
    Parametrization image = apply_to_parametrization(pair.forward, e.param);
    bool ok = true;
    std::string bad, vanishing;
    for (VarId v : e.expected_linear_image) {
        if (!image.coord_of(v).is_zero()) {
            ok = false;
            bad = e.reg->name_of(v);
            break;
        }
        vanishing += (vanishing.empty() ? "" : ", ") + e.reg->name_of(v);
    }
    rep.check("image-on-linear-subspace", ok,
              ok ? std::to_string(e.expected_linear_image.size()) + " coordinates vanish"
                 : "coordinate " + bad + " does not vanish");
    if (ok) rep.artifact("linear_image", vanishing + " = 0");
}

void describe_pair(Report& rep, const CremonaPair& pair, bool json) {
    rep.check("inverse-composition-identity", pair.verified);
    if (pair.delta && pair.delta_prime && pair.fundamental_factor) {
        rep.check("degree-law", pair.fundamental_factor->total_degree() ==
                                    *pair.delta * *pair.delta_prime - 1,
                  "deg Phi = " + std::to_string(pair.fundamental_factor->total_degree()) +
                      ", (delta, delta') = (" + std::to_string(*pair.delta) + ", " +
                      std::to_string(*pair.delta_prime) + ")");
        rep.artifact("fundamental_factor", to_text(*pair.fundamental_factor));
        // The indeterminacy locus is the common zero scheme of the
        // homogeneous coordinate polynomials; report the generator list.
        ProjectiveMap hom = homogenize(pair.forward);
        std::string gens;
        for (auto& c : hom.coords) gens += (gens.empty() ? "" : ", ") + to_text(c);
        rep.artifact("indeterminacy_locus_generators", gens);
    }
    if (json) {
        rep.artifact("pair", to_json(pair).dump());
    } else {
        for (size_t i = 0; i < pair.forward.coords.size(); ++i)
            rep.artifact(pair.forward.reg->name_of(pair.forward.target_vars[i]),
                         to_text(pair.forward.coords[i]));
        for (size_t i = 0; i < pair.inverse.coords.size(); ++i)
            rep.artifact("inverse " + pair.inverse.reg->name_of(pair.inverse.target_vars[i]),
                         to_text(pair.inverse.coords[i]));
    }
}

// ---- verify-example implementations ----

void example_segre22(Report& rep) {
    CatalogEntry e = segre(2, 2);
    CremonaPair pair = linearizing_pair(e);
    Polynomial det = segre_matrix_determinant(e);
    Polynomial target = parse_polynomial(e.reg, "y11*y22 - y12*y21");
    rep.check("determinant-transforms-to-binomial",
              equal_up_to_unit(transform_equation(pair, det), target));
    Parametrization tsec =
        apply_to_parametrization(pair.forward, secant_parametrization(e, 1));
    rep.check("transformed-secant-on-binomial", membership_check(tsec, target));
    rep.artifact("binomial", to_text(target));
}

void example_tp2(Report& rep) {
    CatalogEntry e = tpn(2);
    CremonaPair pair = linearizing_pair(e);
    Polynomial det = tpn_matrix_determinant(e);
    Polynomial target = parse_polynomial(e.reg, "y12*y21 - y10*y20");
    rep.check("determinant-transforms", equal_up_to_unit(transform_equation(pair, det), target));
    Parametrization timg =
        apply_to_parametrization(pair.forward, tangential_parametrization(e));
    rep.check("transformed-tangent-on-quadric", membership_check(timg, target));
    rep.artifact("quadric", to_text(target));
}

void example_veronese(Report& rep) {
    CatalogEntry e = veronese2(2);
    CremonaPair pair = linearizing_pair(e);
    Parametrization tsec =
        apply_to_parametrization(pair.forward, secant_difference_form(e));
    Polynomial conic = parse_polynomial(e.reg, "y11*y22 - y12^2");
    rep.check("transformed-secant-on-conic", membership_check(tsec, conic));
    rep.check("cone-structure", cone_structure_check(tsec, vertex_block(e)));
    rep.artifact("conic", to_text(conic));
}

void example_grass(Report& rep) {
    CatalogEntry e = grass2(6);
    CremonaPair pair = linearizing_pair(e);
    Polynomial pf = grass2_pfaffian_cubic(e);
    Polynomial target = parse_polynomial(e.reg, "y23*y45 - y24*y35 + y25*y34");
    rep.check("pfaffian-transforms-to-plucker",
              equal_up_to_unit(transform_equation(pair, pf), target));
    Parametrization timg =
        apply_to_parametrization(pair.forward, tangential_parametrization(e));
    rep.check("transformed-tangent-on-plucker", membership_check(timg, target));
    rep.check("cone-structure", cone_structure_check(timg, vertex_block(e)));
    rep.artifact("plucker", to_text(target));
}

void example_rnc(Report& rep) {
    CatalogEntry e = rnc(6);
    CremonaPair pair = linearizing_pair(e);
    Parametrization tsec =
        apply_to_parametrization(pair.forward, secant_parametrization(e, 1));
    std::vector<VarId> yblock(e.y_vars.begin() + 1, e.y_vars.end());
    bool ok = true;
    for (auto& minor : hankel_minors(e.reg, yblock)) ok = ok && membership_check(tsec, minor);
    rep.check("transformed-secant-on-catalecticant", ok);
}

std::vector<VarId> sigma3_subset_vars(const CatalogEntry& e, char side) {
    std::string s(1, side);
    return {e.reg->id_of(s + "_{1,0,0}"), e.reg->id_of(s + "_{0,1,0}"),
            e.reg->id_of(s + "_{0,0,1}"), e.reg->id_of(s + "_{1,1,0}"),
            e.reg->id_of(s + "_{1,0,1}"), e.reg->id_of(s + "_{0,1,1}"),
            e.reg->id_of(s + "_{1,1,1}")};
}

void example_sigma3(Report& rep) {
    CatalogEntry e = segre_multi({1, 1, 1});
    Polynomial hyper = hyperdeterminant222(e.reg, sigma3_subset_vars(e, 'x'));
    Parametrization tang = tangential_parametrization(e);
    rep.check("tangential-on-hyperdeterminant", membership_check(tang, hyper));
    CremonaPair pair = linearizing_pair(e);
    Polynomial quartic = sigma3_triangular_tangent_quartic(e.reg, sigma3_subset_vars(e, 'y'));
    Parametrization timg = apply_to_parametrization(pair.forward, tang);
    rep.check("transformed-tangent-on-quartic", membership_check(timg, quartic));
    rep.check("quartic-is-proper-transform",
              equal_up_to_unit(transform_equation(pair, hyper), quartic));
    rep.artifact("quartic", to_text(quartic));
}

void example_sigma3_cumulant(Report& rep) {
    CatalogEntry e = segre_multi({1, 1, 1});
    CremonaPair cum = multi_segre_cumulant_map({1, 1, 1});
    RationalMap fwd{e.reg, e.x_vars, e.y_vars, {}, e.x_chart, e.y_chart};
    for (size_t i = 0; i < e.x_vars.size(); ++i)
        fwd.coords.push_back(parse_rational_function(e.reg, to_text(cum.forward.coords[i])));
    Parametrization timg =
        apply_to_parametrization(fwd, tangential_parametrization(e));
    Polynomial quartic = sigma3_cumulant_tangent_quartic(e.reg, sigma3_subset_vars(e, 'y'));
    rep.check("transformed-tangent-on-short-quartic", membership_check(timg, quartic));
    rep.artifact("quartic", to_text(quartic));
}

void example_secant_toric(Report& rep, int n) {
    SecantCumulantResult r = secant_cumulant_pipeline(n);
    rep.check("secant-cumulant-closed-form", r.identity_verified,
              std::to_string(r.checked.size()) + " coordinates checked");
    for (auto& line : r.checked) rep.artifact("coordinate", line);
}

void example_g36_quartic(Report& rep) {
    auto [qi, ci] = g36_tangential_images();
    rep.check("quadro-cubic-image-degree", qi.degree == 6,
              "degree " + std::to_string(qi.degree));
    rep.check("cubo-cubic-image-degree", ci.degree == 6, "degree " + std::to_string(ci.degree));
    rep.check("term-counts-near-600",
              qi.term_count >= 400 && qi.term_count <= 800 && ci.term_count >= 400 &&
                  ci.term_count <= 800,
              std::to_string(qi.term_count) + " and " + std::to_string(ci.term_count));
    const std::string expect = "z13^4*z22^2 - 2*z12*z13^3*z22*z23";
    rep.check("leading-terms", qi.leading_terms == expect && ci.leading_terms == expect,
              qi.leading_terms);
    rep.artifact("quadro_leading", qi.leading_terms);
    rep.artifact("cubo_leading", ci.leading_terms);
    rep.artifact("proper_image_degrees", std::to_string(qi.image_equation.total_degree()) +
                                             " and " +
                                             std::to_string(ci.image_equation.total_degree()));
}

const std::vector<std::string> kExampleNames = {
    "ex-seg",    "ex-tp",      "ex-ver",          "ex-grass",        "ex-rnc",
    "ex-3segre", "ex-3segre-cumulant", "ex-secant-toric", "ex-g36-quartic"};

int run_example(Report& rep, const std::string& name, int n) {
    if (name == "ex-seg")
        example_segre22(rep);
    else if (name == "ex-tp")
        example_tp2(rep);
    else if (name == "ex-ver")
        example_veronese(rep);
    else if (name == "ex-grass")
        example_grass(rep);
    else if (name == "ex-rnc")
        example_rnc(rep);
    else if (name == "ex-3segre")
        example_sigma3(rep);
    else if (name == "ex-3segre-cumulant")
        example_sigma3_cumulant(rep);
    else if (name == "ex-secant-toric")
        example_secant_toric(rep, n);
    else if (name == "ex-g36-quartic")
        example_g36_quartic(rep);
    else {
        std::string all;
        for (auto& e : kExampleNames) all += (all.empty() ? "" : ", ") + e;
        throw error("unknown example '" + name + "' (registry: " + all + ")");
    }
    return 0;
}

PartitionPoset named_poset(const std::string& kind, int n) {
    if (kind == "full") return full_partition_lattice(n);
    if (kind == "interval") return interval_partitions(n);
    if (kind == "one-cluster") return one_cluster_partitions(n);
    if (kind == "minmax") return min_max_poset(n);
    throw error("unknown poset kind '" + kind + "' (full, interval, one-cluster, minmax)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Cremona transformations that linearize rational "
                 "varieties: catalog of classical parametrizations, triangular and "
                 "cumulant linearizations, secants, tangentials and worked examples."};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "emit the structured report instead of text");
    app.add_option("--seed", opt.seed, "seed for the probabilistic rank sampler")
        ->default_val(0);
    app.add_option("--max-degree", opt.max_degree,
                   "total-degree guard for intermediate polynomials")
        ->default_val(64);
    app.add_option("--max-vars", opt.max_vars, "coordinate-count guard for constructions")
        ->default_val(4096);

    std::string entry_name, method = "triangular", example, poset_kind = "full", multi;
    int n = 3, k = 1;
    bool transform = false, check_sum = false;

    CLI::App* cat = app.add_subcommand("catalog", "list catalog families or describe an entry");
    cat->fallthrough();
    cat->add_option("entry", entry_name, "catalog entry such as segre:2,2");

    CLI::App* lin = app.add_subcommand("linearize", "build and verify a linearizing Cremona");
    lin->fallthrough();
    lin->add_option("entry", entry_name)->required();
    lin->add_option("method", method, "triangular | cumulant:<full|interval|one-cluster|minmax>");

    CLI::App* vex = app.add_subcommand("verify-example", "re-run a worked example");
    vex->fallthrough();
    vex->add_option("name", example)->required();
    vex->add_option("--n", n, "size for the examples that take one");

    CLI::App* pos = app.add_subcommand("poset", "print a partition poset and its Möbius data");
    pos->fallthrough();
    pos->add_option("kind", poset_kind)->required();
    pos->add_option("n", n)->required();
    pos->add_flag("--check-mobius-sum", check_sum);

    CLI::App* cum = app.add_subcommand("cumulant", "build a cumulant Cremona pair");
    cum->fallthrough();
    cum->add_option("n", n);
    cum->add_option("--poset", poset_kind, "full | interval | one-cluster | minmax");
    cum->add_option("--multi", multi, "comma-separated Segre shape instead of n");

    CLI::App* sec = app.add_subcommand("secant", "secant parametrization of a catalog entry");
    sec->fallthrough();
    sec->add_option("entry", entry_name)->required();
    sec->add_option("--k", k);
    sec->add_flag("--transform", transform, "apply the linearizing map to the result");

    CLI::App* tan = app.add_subcommand("tangent", "tangential parametrization of an entry");
    tan->fallthrough();
    tan->add_option("entry", entry_name)->required();
    tan->add_flag("--transform", transform);

    CLI::App* def = app.add_subcommand("defect", "secant defect from the Jacobian rank");
    def->fallthrough();
    def->add_option("entry", entry_name)->required();
    def->add_option("--k", k);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (opt.max_degree != 64)
        std::cerr << "warning: total-degree guard changed to " << opt.max_degree
                  << "; expansions may get large\n";
    if (opt.max_vars > 4096)
        std::cerr << "warning: coordinate-count guard raised to " << opt.max_vars << "\n";
    set_max_total_degree(opt.max_degree);

    Report rep;
    for (int i = 0; i < argc; ++i) rep.command += std::string(i ? " " : "") + argv[i];
    auto t0 = std::chrono::steady_clock::now();

    try {
        if (cat->parsed()) {
            if (entry_name.empty()) {
                for (auto& fam : catalog_families()) rep.artifact("family", fam);
                rep.check("families-listed", catalog_families().size() >= 7);
            } else {
                CatalogEntry e = make_entry(entry_name);
                rep.artifact("name", e.name);
                rep.artifact("ambient_dim", std::to_string(e.ambient_dim));
                rep.artifact("dim", std::to_string(e.dim()));
                rep.artifact("known_equations", std::to_string(e.implicit_eqs.size()));
                bool ok = true;
                for (auto& eq : e.implicit_eqs) ok = ok && membership_check(e.param, eq);
                rep.check("implicit-equations-vanish", ok);
            }
        } else if (lin->parsed()) {
            CatalogEntry e = make_entry(entry_name);
            if (static_cast<uint32_t>(e.ambient_dim) + 1 > opt.max_vars)
                throw error("entry exceeds --max-vars");
            if (method == "triangular") {
                CremonaPair raw = linearizing_pair(e);
                CremonaPair pair = verify_cremona(raw.forward, raw.inverse);
                describe_pair(rep, pair, opt.json);
                check_image_vanishes(rep, e, pair);
            } else if (method.rfind("cumulant:", 0) == 0) {
                std::string kind = method.substr(9);
                std::vector<int> shape;
                if (e.name.rfind("segre-multi:", 0) == 0) {
                    std::istringstream is(e.name.substr(12));
                    std::string piece;
                    while (std::getline(is, piece, ',')) shape.push_back(std::stoi(piece));
                }
                bool hypercube = !shape.empty();
                for (int r : shape) hypercube = hypercube && r == 1;
                if (!hypercube)
                    throw error("cumulant linearization needs hypercube coordinates "
                                "(segre-multi:1,...,1); got '" + e.name + "'");
                int nn = static_cast<int>(shape.size());
                CremonaPair pair = kind == "full" ? binary_cumulant_map(nn)
                                                  : l_cumulant_map(named_poset(kind, nn));
                CremonaPair full = verify_cremona(pair.forward, pair.inverse);
                describe_pair(rep, full, opt.json);
                rep.check("linearization", linearization_check(pair, nn));
            } else {
                throw error("unknown method '" + method + "'");
            }
        } else if (vex->parsed()) {
            run_example(rep, example, n);
        } else if (pos->parsed()) {
            PartitionPoset P = named_poset(poset_kind, n);
            rep.artifact("size", std::to_string(P.size()));
            for (size_t i = 0; i < P.size(); ++i)
                rep.artifact(P.element(i).to_string(),
                             "mu(pi, 1-hat) = " + std::to_string(P.mobius_to_top(i)));
            if (P.size() >= 2) {
                long long s = mobius_sum(P);
                rep.artifact("mobius_sum", std::to_string(s));
                if (check_sum) rep.check("mobius-sum-zero", s == 0);
            } else {
                rep.artifact("mobius_sum", "skipped (poset has a single element)");
            }
        } else if (cum->parsed()) {
            if (!multi.empty()) {
                std::vector<int> shape;
                std::istringstream is(multi);
                std::string piece;
                while (std::getline(is, piece, ',')) shape.push_back(std::stoi(piece));
                CremonaPair pair = multi_segre_cumulant_map(shape);
                rep.check("inverse-composition-identity", pair.verified);
                rep.check("linearization", multi_segre_linearization_check(pair, shape));
                if (opt.json) rep.artifact("pair", to_json(pair).dump());
            } else {
                if ((1u << n) > opt.max_vars) throw error("2^n exceeds --max-vars");
                CremonaPair pair = poset_kind == "full" ? binary_cumulant_map(n)
                                                        : l_cumulant_map(named_poset(poset_kind, n));
                CremonaPair full = verify_cremona(pair.forward, pair.inverse);
                describe_pair(rep, full, opt.json);
                rep.check("triangular", is_triangular(pair.forward));
                rep.check("linearization", linearization_check(pair, n));
            }
        } else if (sec->parsed() || tan->parsed()) {
            CatalogEntry e = make_entry(entry_name);
            Parametrization p = sec->parsed() ? secant_parametrization(e, k)
                                              : tangential_parametrization(e);
            if (transform)
                p = apply_to_parametrization(linearizing_pair(e).forward, p);
            if (opt.json)
                rep.artifact("parametrization", to_json(p).dump());
            else
                for (auto& [v, f] : p.coords) rep.artifact(e.reg->name_of(v), to_text(f));
            rep.check("constructed", true,
                      std::to_string(p.coords.size()) + " coordinates, " +
                          std::to_string(p.params.size()) + " parameters");
        } else if (def->parsed()) {
            CatalogEntry e = make_entry(entry_name);
            int d = secant_defect(e, k, sampling(opt));
            rep.artifact("defect", std::to_string(d));
            rep.artifact("note", "generic rank (probabilistic), seed " +
                                     std::to_string(opt.seed));
            rep.check("defect-nonnegative", d >= 0, "defect = " + std::to_string(d));
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return finish(rep, opt);
}
