#include <doctest.h>

#include <random>

#include "cremona/polynomial.hpp"
#include "cremona/text_io.hpp"

using namespace cremona;

namespace {

Polynomial rand_poly(const RegistryPtr& reg, const std::vector<VarId>& vars, std::mt19937& rng,
                     int max_terms = 4, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::vector<Polynomial::Term> terms;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<Monomial::Entry> es;
        for (size_t v = 0; v < vars.size(); ++v) {
            int e = expd(rng);
            if (e > 0) es.push_back({vars[v].index, static_cast<uint32_t>(e)});
        }
        terms.push_back({Monomial(std::move(es)), Rational(coeff(rng))});
    }
    return Polynomial::from_terms(reg, std::move(terms));
}

}  // namespace

TEST_CASE("basic arithmetic identities") {
    auto reg = make_registry();
    VarId x = reg->declare("x");
    Polynomial px = Polynomial::variable(reg, x);
    Polynomial one = Polynomial::constant(reg, 1);

    CHECK((px + one) * (px - one) == px * px - one);
    CHECK(to_text((px + one) * (px - one)) == "x^2 - 1");

    Polynomial p = px * px + Polynomial::constant(reg, Rational(3, 2));
    CHECK(p + Polynomial(reg) == p);
}

TEST_CASE("cube by repeated multiplication matches pow") {
    auto reg = make_registry();
    VarId x1 = reg->declare("x1"), x2 = reg->declare("x2");
    Polynomial s = Polynomial::variable(reg, x1) + Polynomial::variable(reg, x2);
    Polynomial cube = s * s * s;
    CHECK(cube == s.pow(3));
    REQUIRE(cube.terms().size() == 4);
    std::vector<Rational> coeffs;
    for (auto& t : cube.terms()) coeffs.push_back(t.coeff);
    CHECK(coeffs == std::vector<Rational>{1, 3, 3, 1});
}

TEST_CASE("grlex canonical order, leading term first") {
    auto reg = make_registry();
    VarId x = reg->declare("x"), y = reg->declare("y");
    Polynomial p = Polynomial::variable(reg, y).pow(2) + Polynomial::variable(reg, x) +
                   Polynomial::variable(reg, x).pow(2);
    // degree 2 terms precede degree 1; x^2 beats y^2 lexicographically.
    CHECK(to_text(p) == "x^2 + y^2 + x");
}

TEST_CASE("from_terms canonicalization is idempotent and merges duplicates") {
    auto reg = make_registry();
    VarId x = reg->declare("x");
    std::vector<Polynomial::Term> raw;
    raw.push_back({Monomial::variable(x), Rational(2)});
    raw.push_back({Monomial::variable(x), Rational(-2)});
    raw.push_back({Monomial{}, Rational(7)});
    Polynomial p = Polynomial::from_terms(reg, raw);
    CHECK(to_text(p) == "7");
    Polynomial again = Polynomial::from_terms(reg, p.terms());
    CHECK(again == p);
}

TEST_CASE("ring axioms on random triples") {
    auto reg = make_registry();
    std::vector<VarId> vars{reg->declare("a"), reg->declare("b"), reg->declare("c")};
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = rand_poly(reg, vars, rng);
        Polynomial q = rand_poly(reg, vars, rng);
        Polynomial r = rand_poly(reg, vars, rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("mixed registries are rejected") {
    auto r1 = make_registry();
    auto r2 = make_registry();
    Polynomial a = Polynomial::variable(r1, r1->declare("x"));
    Polynomial b = Polynomial::variable(r2, r2->declare("x"));
    CHECK_THROWS_AS(a + b, error);
    CHECK_THROWS_AS(a * b, error);
}

TEST_CASE("degree guard trips on runaway products") {
    auto reg = make_registry();
    VarId x = reg->declare("x");
    Polynomial p = Polynomial::variable(reg, x).pow(40);
    CHECK_THROWS_AS(p * p, degree_limit_error);
    set_max_total_degree(200);
    CHECK((p * p).total_degree() == 80);
    set_max_total_degree(64);
}

TEST_CASE("derivative basics and Leibniz rule") {
    auto reg = make_registry();
    VarId t1 = reg->declare("t1"), t2 = reg->declare("t2"), t3 = reg->declare("t3");
    Polynomial p = Polynomial::variable(reg, t1) * Polynomial::variable(reg, t2) *
                   Polynomial::variable(reg, t3);
    CHECK(to_text(p.derivative(t2)) == "t1*t3");
    CHECK(Polynomial::constant(reg, 5).derivative(t1).is_zero());

    VarId x = reg->declare("x"), y = reg->declare("y");
    Polynomial q = Polynomial::variable(reg, x).pow(2) * Polynomial::variable(reg, y).pow(3);
    CHECK(to_text(q.derivative(y)) == "3*x^2*y^2");

    std::mt19937 rng(999);
    std::vector<VarId> vars{t1, t2, x};
    for (int i = 0; i < 100; ++i) {
        Polynomial a = rand_poly(reg, vars, rng);
        Polynomial b = rand_poly(reg, vars, rng);
        CHECK((a * b).derivative(t1) == a.derivative(t1) * b + a * b.derivative(t1));
        CHECK((a + b).derivative(t1) == a.derivative(t1) + b.derivative(t1));
    }
}

TEST_CASE("homogeneous components") {
    auto reg = make_registry();
    VarId x = reg->declare("x"), y = reg->declare("y");
    Polynomial p = Polynomial::constant(reg, 1) + Rational(2) * Polynomial::variable(reg, x) +
                   Polynomial::variable(reg, x) * Polynomial::variable(reg, y);
    auto parts = p.homogeneous_components();
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].first == 0);
    CHECK(to_text(parts[0].second) == "1");
    CHECK(parts[1].first == 1);
    CHECK(to_text(parts[1].second) == "2*x");
    CHECK(parts[2].first == 2);
    CHECK(to_text(parts[2].second) == "x*y");

    CHECK(Polynomial(reg).homogeneous_components().empty());

    // t1 t2 + t1 + t2 -> degree-1 part t1 + t2, degree-2 part t1 t2, and the
    // parts sum back (degree-filter oracle).
    VarId t1 = reg->declare("t1"), t2 = reg->declare("t2");
    Polynomial q = Polynomial::variable(reg, t1) * Polynomial::variable(reg, t2) +
                   Polynomial::variable(reg, t1) + Polynomial::variable(reg, t2);
    auto qp = q.homogeneous_components();
    REQUIRE(qp.size() == 2);
    CHECK(qp[0].first == 1);
    CHECK(qp[1].first == 2);
    Polynomial sum(reg);
    for (auto& [d, part] : qp) {
        CHECK(part.is_homogeneous());
        sum += part;
    }
    CHECK(sum == q);
}

TEST_CASE("homogeneous components scale correctly under v -> 2v") {
    auto reg = make_registry();
    std::vector<VarId> vars{reg->declare("x"), reg->declare("y")};
    std::mt19937 rng(808);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = rand_poly(reg, vars, rng, 5, 3);
        std::map<uint32_t, Rational> pt{{vars[0].index, Rational(3)},
                                        {vars[1].index, Rational(-2)}};
        std::map<uint32_t, Rational> pt2{{vars[0].index, Rational(6)},
                                         {vars[1].index, Rational(-4)}};
        Polynomial sum(reg);
        for (auto& [d, part] : p.homogeneous_components()) {
            sum += part;
            Rational scale(1);
            for (uint32_t k = 0; k < d; ++k) scale *= 2;
            CHECK(part.evaluate(pt2) == scale * part.evaluate(pt));
        }
        CHECK(sum == p);
    }
}

TEST_CASE("text round-trip on random polynomials") {
    auto reg = make_registry();
    std::vector<VarId> vars{reg->declare("x_1"), reg->declare("y_{1,3}"), reg->declare("z")};
    std::mt19937 rng(4242);
    for (int i = 0; i < 300; ++i) {
        Polynomial p = rand_poly(reg, vars, rng, 6, 4);
        // fractional coefficient in the mix
        p = p * Rational(1, 3);
        CHECK(parse_polynomial(reg, to_text(p)) == p);
    }
    CHECK(parse_polynomial(reg, "0").is_zero());
    CHECK(to_text(Polynomial(reg)) == "0");
    CHECK(parse_polynomial(reg, "x_1^2 - 1") ==
          Polynomial::variable(reg, vars[0]).pow(2) - Polynomial::constant(reg, 1));
    // unicode minus accepted
    CHECK(parse_polynomial(reg, "x_1 \xe2\x88\x92 1") ==
          Polynomial::variable(reg, vars[0]) - Polynomial::constant(reg, 1));
    CHECK_THROWS_AS(parse_polynomial(reg, "nosuchvar + 1"), error);
}

TEST_CASE("gcd and exact division") {
    auto reg = make_registry();
    VarId x = reg->declare("x"), y = reg->declare("y");
    Polynomial px = Polynomial::variable(reg, x), py = Polynomial::variable(reg, y);
    Polynomial one = Polynomial::constant(reg, 1);

    CHECK(to_text(poly_gcd(px * px - one, px - one)) == "x - 1");
    CHECK(poly_gcd(px + py, px - py).is_constant());
    CHECK(to_text(poly_gcd(px * py, px * px * py)) == "x*y");

    std::mt19937 rng(77);
    std::vector<VarId> vars{x, y};
    for (int i = 0; i < 60; ++i) {
        Polynomial a = rand_poly(reg, vars, rng, 3, 2);
        Polynomial b = rand_poly(reg, vars, rng, 3, 2);
        Polynomial c = rand_poly(reg, vars, rng, 3, 2);
        if (c.is_zero()) continue;
        Polynomial g = poly_gcd(a * c, b * c);
        if ((a * c).is_zero() || (b * c).is_zero()) continue;
        // c divides the gcd, and the gcd divides both products.
        CHECK(g.divided_exactly_by(poly_gcd(c, c)));
        CHECK((a * c).divided_exactly_by(g));
        CHECK((b * c).divided_exactly_by(g));
    }

    auto q = (px * px - py * py).divided_exactly_by(px + py);
    REQUIRE(q);
    CHECK(to_text(*q) == "x - y");
    CHECK(!(px * px + one).divided_exactly_by(px + one).has_value());
}

TEST_CASE("homogenization pads with the chart variable") {
    auto reg = make_registry();
    VarId x0 = reg->declare("x0"), x = reg->declare("x"), y = reg->declare("y");
    Polynomial p = Polynomial::variable(reg, x) * Polynomial::variable(reg, y) +
                   Polynomial::variable(reg, x) + Polynomial::constant(reg, 3);
    Polynomial h = p.homogenized(x0, 2);
    CHECK(h.is_homogeneous());
    CHECK(h.total_degree() == 2);
    // x0 was declared first, so it leads the lexicographic tie-break.
    CHECK(to_text(h) == "3*x0^2 + x0*x + x*y");
}
